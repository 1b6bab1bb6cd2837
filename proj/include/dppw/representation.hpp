#pragma once

#include <string>
#include <vector>

#include "dppw/algebra.hpp"

namespace dppw {

// Representation of a DPP algebra: four families of carrier endomorphisms,
// one matrix per basis element of the algebra.  ell/rr act for the perm
// product, lfl/lfr for the Leibniz product.
struct DppRep {
  Algebra algebra;  // must be kind "dpp"
  std::vector<std::string> carrier;
  std::vector<Mat> ell, rr, lfl, lfr;

  std::size_t carrier_dim() const { return carrier.size(); }
};

// Representation of a Poisson algebra: mu for the commutative product,
// rho for the bracket.
struct PoissonRep {
  Algebra algebra;  // must be kind "poisson"
  std::vector<std::string> carrier;
  std::vector<Mat> mu, rho;

  std::size_t carrier_dim() const { return carrier.size(); }
};

namespace detail {

// Evaluate a matrix-valued residual over all algebra basis pairs.
template <typename F>
IdentityResult check_rep_pairs(const Algebra& a, const std::string& id, F&& f) {
  WitnessCollector wc(id);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Mat res = f(i, j);
      if (!res.is_zero())
        wc.fail("(" + a.basis[i] + "," + a.basis[j] + ")");
    }
  return wc.take();
}

// Extend a map (one matrix per algebra basis element) linearly to an element.
inline Mat at(const std::vector<Mat>& maps, const std::vector<Rational>& u) {
  Mat m(maps.empty() ? 0 : maps[0].rows(), maps.empty() ? 0 : maps[0].cols());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (u[i] != 0) m += u[i] * maps[i];
  return m;
}

}  // namespace detail

inline IdentityReport check_dpp_rep(const DppRep& rep) {
  using detail::at;
  using detail::check_rep_pairs;
  const Algebra& a = rep.algebra;
  std::size_t m = rep.carrier_dim();
  if (rep.ell.size() != a.dim() || rep.rr.size() != a.dim() ||
      rep.lfl.size() != a.dim() || rep.lfr.size() != a.dim())
    throw precondition_error("representation map count mismatch");
  for (const auto* fam : {&rep.ell, &rep.rr, &rep.lfl, &rep.lfr})
    for (const Mat& mat : *fam)
      if (mat.rows() != m || mat.cols() != m)
        throw precondition_error("representation matrix shape mismatch");

  const auto& L = rep.ell;
  const auto& R = rep.rr;
  const auto& LL = rep.lfl;
  const auto& LR = rep.lfr;
  auto circ = [&](std::size_t i, std::size_t j) { return a.mul("circ", i, j); };
  auto star = [&](std::size_t i, std::size_t j) { return a.mul("star", i, j); };

  IdentityReport out;
  // perm representation: ell(a1 o a2) = ell(a1)ell(a2) = ell(a2)ell(a1);
  //                      r(a1 o a2) = r(a2)r(a1) = r(a2)ell(a1) = ell(a1)r(a2)
  out.push_back(check_rep_pairs(a, "rep.perm.1", [&](auto i, auto j) {
    return at(L, circ(i, j)) - L[i] * L[j];
  }));
  out.push_back(check_rep_pairs(a, "rep.perm.2", [&](auto i, auto j) {
    return L[i] * L[j] - L[j] * L[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.perm.3", [&](auto i, auto j) {
    return at(R, circ(i, j)) - R[j] * R[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.perm.4", [&](auto i, auto j) {
    return R[j] * R[i] - R[j] * L[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.perm.5", [&](auto i, auto j) {
    return R[j] * L[i] - L[i] * R[j];
  }));
  // Leibniz representation: lfl(a1*a2) = lfl(a1)lfl(a2) - lfl(a2)lfl(a1);
  //   lfr(a1)lfr(a2) = lfr(a1*a2) + lfl(a2)lfr(a1) = -lfr(a1)lfl(a2)
  out.push_back(check_rep_pairs(a, "rep.leib.1", [&](auto i, auto j) {
    return at(LL, star(i, j)) - LL[i] * LL[j] + LL[j] * LL[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.leib.2", [&](auto i, auto j) {
    return LR[i] * LR[j] - at(LR, star(i, j)) - LL[j] * LR[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.leib.3", [&](auto i, auto j) {
    return LR[i] * LR[j] + LR[i] * LL[j];
  }));
  // mixed family 1: lfl(a1 o a2) = ell(a1)lfl(a2) + ell(a2)lfl(a1)
  out.push_back(check_rep_pairs(a, "rep.mixed.1", [&](auto i, auto j) {
    return at(LL, circ(i, j)) - L[i] * LL[j] - L[j] * LL[i];
  }));
  // mixed family 2: lfr(a2)ell(a1) = ell(a1)lfr(a2) + r(a1*a2) = lfr(a2)r(a1)
  out.push_back(check_rep_pairs(a, "rep.mixed.2a", [&](auto i, auto j) {
    return LR[j] * L[i] - L[i] * LR[j] - at(R, star(i, j));
  }));
  out.push_back(check_rep_pairs(a, "rep.mixed.2b", [&](auto i, auto j) {
    return LR[j] * L[i] - LR[j] * R[i];
  }));
  // mixed family 3: ell(a1*a2) = lfl(a1)ell(a2) - ell(a2)lfl(a1) = -ell(a2*a1)
  out.push_back(check_rep_pairs(a, "rep.mixed.3a", [&](auto i, auto j) {
    return at(L, star(i, j)) - LL[i] * L[j] + L[j] * LL[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.mixed.3b", [&](auto i, auto j) {
    return at(L, star(i, j)) + at(L, star(j, i));
  }));
  // mixed family 4: r(a2)lfr(a1) = lfr(a1 o a2) - ell(a1)lfr(a2)
  //               = -r(a2)lfl(a1) = r(a1*a2) - lfl(a1)r(a2)
  out.push_back(check_rep_pairs(a, "rep.mixed.4a", [&](auto i, auto j) {
    return R[j] * LR[i] - at(LR, circ(i, j)) + L[i] * LR[j];
  }));
  out.push_back(check_rep_pairs(a, "rep.mixed.4b", [&](auto i, auto j) {
    return R[j] * LR[i] + R[j] * LL[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.mixed.4c", [&](auto i, auto j) {
    return R[j] * LR[i] - at(R, star(i, j)) + LL[i] * R[j];
  }));
  return out;
}

inline DppRep regular_rep(const Algebra& a) {
  DppRep rep;
  rep.algebra = a;
  rep.carrier = a.basis;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    rep.ell.push_back(a.lmul("circ", i));
    rep.rr.push_back(a.rmul("circ", i));
    rep.lfl.push_back(a.lmul("star", i));
    rep.lfr.push_back(a.rmul("star", i));
  }
  return rep;
}

// Coregular representations on A*.  The dual of an action beta is
// beta*(a) = -beta(a)^T (from <beta*(a)(xi), b> = -<xi, beta(a)(b)>).
//   variant "standard": (ell*, ell* - r*, lfl*, -lfl* - lfr*)
//   variant "signed":   (-ell*, r* - ell*, lfl*, -lfl* - lfr*)
inline DppRep coregular_rep(const Algebra& a, const std::string& variant) {
  if (variant != "standard" && variant != "signed")
    throw precondition_error("unknown coregular variant: " + variant);
  DppRep rep;
  rep.algebra = a;
  rep.carrier = dual_labels(a.basis);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat Ls = -(a.lmul("circ", i).transpose());   // ell*
    Mat Rs = -(a.rmul("circ", i).transpose());   // r*
    Mat LLs = -(a.lmul("star", i).transpose());  // lfl*
    Mat LRs = -(a.rmul("star", i).transpose());  // lfr*
    if (variant == "standard") {
      rep.ell.push_back(Ls);
      rep.rr.push_back(Ls - Rs);
    } else {
      rep.ell.push_back(-Ls);
      rep.rr.push_back(Rs - Ls);
    }
    rep.lfl.push_back(LLs);
    rep.lfr.push_back(-LLs - LRs);
  }
  return rep;
}

// Semidirect product on A (+) V; basis ordered (algebra basis, carrier basis).
//   (a1,v1) o (a2,v2) = (a1 o a2, ell(a1)v2 + r(a2)v1)
//   (a1,v1) * (a2,v2) = (a1 * a2, lfl(a1)v2 + lfr(a2)v1)
inline Algebra semidirect_product(const Algebra& a, const DppRep& rep) {
  std::size_t n = a.dim();
  std::size_t m = rep.carrier_dim();
  Algebra out;
  out.name = a.name + "_semidirect";
  out.kind = "dpp";
  out.basis = merge_labels(a.basis, rep.carrier);
  std::size_t N = n + m;
  const char* roles[2] = {"circ", "star"};
  const std::vector<Mat>* lmaps[2] = {&rep.ell, &rep.lfl};
  const std::vector<Mat>* rmaps[2] = {&rep.rr, &rep.lfr};
  for (int t = 0; t < 2; ++t) {
    const std::string role = roles[t];
    const std::vector<Mat>* left_maps = lmaps[t];
    const std::vector<Mat>* right_maps = rmaps[t];
    Tensor3 c(N);
    const Tensor3& ca = a.product(role);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c(i, j, k) = ca(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) {
          // e_i . v_v has V-component left_map(e_i) column v
          c(i, n + v, n + w) = (*left_maps)[i](w, v);
          // v_v . e_i has V-component right_map(e_i) column v
          c(n + v, i, n + w) = (*right_maps)[i](w, v);
        }
    out.products[role] = c;
  }
  return out;
}

inline IdentityReport check_poisson_rep(const PoissonRep& rep) {
  using detail::at;
  using detail::check_rep_pairs;
  const Algebra& a = rep.algebra;
  const auto& M = rep.mu;
  const auto& Rh = rep.rho;
  auto dot = [&](std::size_t i, std::size_t j) { return a.mul("dot", i, j); };
  auto br = [&](std::size_t i, std::size_t j) { return a.mul("bracket", i, j); };

  IdentityReport out;
  out.push_back(check_rep_pairs(a, "rep.poi.assoc", [&](auto i, auto j) {
    return at(M, dot(i, j)) - M[i] * M[j];
  }));
  out.push_back(check_rep_pairs(a, "rep.poi.comm", [&](auto i, auto j) {
    return M[i] * M[j] - M[j] * M[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.poi.lie", [&](auto i, auto j) {
    return at(Rh, br(i, j)) - Rh[i] * Rh[j] + Rh[j] * Rh[i];
  }));
  out.push_back(check_rep_pairs(a, "rep.poi.mixed.1", [&](auto i, auto j) {
    return at(Rh, dot(i, j)) - M[j] * Rh[i] - M[i] * Rh[j];
  }));
  out.push_back(check_rep_pairs(a, "rep.poi.mixed.2", [&](auto i, auto j) {
    return at(M, br(i, j)) - Rh[i] * M[j] + M[j] * Rh[i];
  }));
  return out;
}

inline PoissonRep poisson_regular_rep(const Algebra& p) {
  PoissonRep rep;
  rep.algebra = p;
  rep.carrier = p.basis;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rep.mu.push_back(p.lmul("dot", i));
    rep.rho.push_back(p.lmul("bracket", i));
  }
  return rep;
}

// Coregular Poisson representation (P*, -mu*, ad*); beta* = -beta^T as above.
inline PoissonRep poisson_coregular_rep(const Algebra& p) {
  PoissonRep rep;
  rep.algebra = p;
  rep.carrier = dual_labels(p.basis);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rep.mu.push_back(p.lmul("dot", i).transpose());         // -mu* = +mu^T
    rep.rho.push_back(-(p.lmul("bracket", i).transpose())); // ad* = -ad^T
  }
  return rep;
}

// Thin intertwiner utility: phi intertwines two reps if
// phi . map1(a) = map2(a) . phi for all a and each family.
inline bool intertwines(const std::vector<Mat>& fam1, const std::vector<Mat>& fam2,
                        const Mat& phi) {
  if (fam1.size() != fam2.size()) return false;
  for (std::size_t i = 0; i < fam1.size(); ++i)
    if (!(phi * fam1[i] - fam2[i] * phi).is_zero()) return false;
  return true;
}

}  // namespace dppw
