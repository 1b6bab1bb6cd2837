#pragma once

#include "dppw/rota_baxter.hpp"

namespace dppw {

// --- averaging operators ---------------------------------------------------
// alpha on a Poisson algebra:
//   alpha(p1) alpha(p2) = alpha(alpha(p1) p2) = alpha(p1 alpha(p2)),
//   [alpha(p1), alpha(p2)] = alpha([alpha(p1), p2]).
inline IdentityReport check_averaging(const Algebra& p, const Mat& alpha) {
  IdentityReport rep;
  std::size_t n = p.dim();
  auto unit = [&](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  auto pair_check = [&](const std::string& id, auto&& f) {
    WitnessCollector wc(id);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto res = f(i, j);
        if (!detail::vzero(res))
          wc.fail("(" + p.basis[i] + "," + p.basis[j] +
                  "): residual = " + format_vector(res, p.basis));
      }
    rep.push_back(wc.take());
  };
  pair_check("avg.dot.1", [&](auto i, auto j) {
    auto lhs = p.mulv("dot", alpha.apply(unit(i)), alpha.apply(unit(j)));
    auto rhs = alpha.apply(p.mulv("dot", alpha.apply(unit(i)), unit(j)));
    return detail::vsub(lhs, rhs);
  });
  pair_check("avg.dot.2", [&](auto i, auto j) {
    auto lhs = p.mulv("dot", alpha.apply(unit(i)), alpha.apply(unit(j)));
    auto rhs = alpha.apply(p.mulv("dot", unit(i), alpha.apply(unit(j))));
    return detail::vsub(lhs, rhs);
  });
  pair_check("avg.bracket", [&](auto i, auto j) {
    auto lhs = p.mulv("bracket", alpha.apply(unit(i)), alpha.apply(unit(j)));
    auto rhs = alpha.apply(p.mulv("bracket", alpha.apply(unit(i)), unit(j)));
    return detail::vsub(lhs, rhs);
  });
  return rep;
}

// Induced DPP structure: p1 o p2 := alpha(p1) p2,  p1 * p2 := [alpha(p1), p2].
inline Algebra averaging_to_dpp(const Algebra& p, const Mat& alpha) {
  if (!all_pass(check_averaging(p, alpha)))
    throw precondition_error("averaging_to_dpp: averaging check failed");
  std::size_t n = p.dim();
  Algebra out;
  out.name = p.name + "_averaged";
  out.kind = "dpp";
  out.basis = p.basis;
  Tensor3 c1(n), c2(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> ei(n);
    ei[i] = 1;
    auto ai = alpha.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> ej(n);
      ej[j] = 1;
      auto circ = p.mulv("dot", ai, ej);
      auto star = p.mulv("bracket", ai, ej);
      for (std::size_t k = 0; k < n; ++k) {
        c1(i, j, k) = circ[k];
        c2(i, j, k) = star[k];
      }
    }
  }
  out.products["circ"] = c1;
  out.products["star"] = c2;
  return out;
}

// --- Poisson (x) perm ------------------------------------------------------
inline std::string tensor_label(const std::string& p, const std::string& b) {
  return p + "⊗" + b;  // "p⊗b"
}

// Product basis is P-major: index(i, j) = i * dim(B) + j.
inline Algebra poisson_tensor_perm(const Algebra& P, const Algebra& B) {
  if (P.kind != "poisson") throw precondition_error("expected poisson algebra");
  std::size_t pn = P.dim(), bn = B.dim(), N = pn * bn;
  Algebra out;
  out.name = P.name + "x" + B.name;
  out.kind = "dpp";
  for (std::size_t i = 0; i < pn; ++i)
    for (std::size_t j = 0; j < bn; ++j)
      out.basis.push_back(tensor_label(P.basis[i], B.basis[j]));
  Tensor3 c1(N), c2(N);
  const Tensor3& cb = B.product("circ");
  const Tensor3& cd = P.product("dot");
  const Tensor3& cl = P.product("bracket");
  for (std::size_t i1 = 0; i1 < pn; ++i1)
    for (std::size_t j1 = 0; j1 < bn; ++j1)
      for (std::size_t i2 = 0; i2 < pn; ++i2)
        for (std::size_t j2 = 0; j2 < bn; ++j2)
          for (std::size_t k1 = 0; k1 < pn; ++k1)
            for (std::size_t k2 = 0; k2 < bn; ++k2) {
              if (cb(j1, j2, k2) == 0) continue;
              std::size_t a = i1 * bn + j1, b = i2 * bn + j2, k = k1 * bn + k2;
              if (cd(i1, i2, k1) != 0)
                c1(a, b, k) += cd(i1, i2, k1) * cb(j1, j2, k2);
              if (cl(i1, i2, k1) != 0)
                c2(a, b, k) += cl(i1, i2, k1) * cb(j1, j2, k2);
            }
  out.products["circ"] = c1;
  out.products["star"] = c2;
  return out;
}

// --- bialgebra double ------------------------------------------------------
struct DoubleResult {
  Algebra algebra;     // A (+) A*, basis (e_1..e_n, e_1*..e_n*)
  Mat rtilde;          // sum_i e_i (x) f_i
  Coproduct nu, theta; // coboundary pair of rtilde
};

// Double of a DPP bialgebra: products on A (+) A* combine A's products, the
// dual algebra of the coproducts, and mutual coregular actions (the same
// coregular variant on each side).  The "signed" variant is the default: it is
// the unique variant under which rtilde - twist(rtilde) is invariant, so the
// double is always quasi-triangular; "standard" is kept for cross-checks.
inline DoubleResult bialgebra_double(const BialgebraCandidate& b,
                                     const std::string& variant = "signed") {
  const Algebra& A = b.algebra;
  if (A.kind != "dpp") throw precondition_error("double: expected dpp algebra");
  Algebra dual = transpose_to_algebra(b.coproduct("nu"), b.coproduct("theta"));
  DppRep actA = coregular_rep(A, variant);     // A acting on A*
  DppRep actD = coregular_rep(dual, variant);  // A* acting on A
  std::size_t n = A.dim();
  std::size_t N = 2 * n;

  DoubleResult out;
  out.algebra.name = A.name + "_double";
  out.algebra.kind = "dpp";
  out.algebra.basis = merge_labels(A.basis, dual.basis);

  const char* roles[2] = {"circ", "star"};
  const std::vector<Mat>* a_left[2] = {&actA.ell, &actA.lfl};
  const std::vector<Mat>* a_right[2] = {&actA.rr, &actA.lfr};
  const std::vector<Mat>* d_left[2] = {&actD.ell, &actD.lfl};
  const std::vector<Mat>* d_right[2] = {&actD.rr, &actD.lfr};
  for (int t = 0; t < 2; ++t) {
    Tensor3 c(N);
    const Tensor3& cA = A.product(roles[t]);
    const Tensor3& cD = dual.product(roles[t]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          c(i, j, k) = cA(i, j, k);
          c(n + i, n + j, n + k) = cD(i, j, k);
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          // e_i . f_j: A-part from the A*-action (second argument),
          //            A*-part from the A-action (first argument)
          c(i, n + j, k) = (*d_right[t])[j](k, i);
          c(i, n + j, n + k) = (*a_left[t])[i](k, j);
          // f_i . e_j
          c(n + i, j, k) = (*d_left[t])[i](k, j);
          c(n + i, j, n + k) = (*a_right[t])[j](k, i);
        }
    out.algebra.products[roles[t]] = c;
  }

  out.rtilde = Mat(N, N);
  for (std::size_t i = 0; i < n; ++i) out.rtilde(i, n + i) = 1;
  auto pair = coboundary_dpp(out.algebra, out.rtilde);
  out.nu = pair.first;
  out.theta = pair.second;
  return out;
}

// --- omega-induced coproduct on a finite quadratic perm algebra ------------
// Defining pairing: omega_hat(nu(b), e (x) f) = -omega(b, e o f), where
// omega_hat(u (x) v, e (x) f) = omega(u,e) omega(v,f).  Solved exactly:
// nu(e_a) = (Omega^T)^{-1} K_a Omega^{-1} with K_a(e,f) = -omega(e_a, e o f).
inline Coproduct nu_omega_finite(const Algebra& B, const Mat& Omega) {
  std::size_t n = B.dim();
  Mat OT_inv = Omega.transpose().inverse();
  Mat O_inv = Omega.inverse();
  Coproduct nu = Coproduct::zero(B.basis);
  const Tensor3& c = B.product("circ");
  for (std::size_t a = 0; a < n; ++a) {
    Mat K(n, n);
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t m = 0; m < n; ++m)
          if (c(e, f, m) != 0 && Omega(a, m) != 0)
            K(e, f) -= c(e, f, m) * Omega(a, m);
    nu.images[a] = OT_inv * K * O_inv;
  }
  return nu;
}

// Bullet product of a P-coproduct value and a B-coproduct value into a
// coproduct value on P (x) B (P-major index convention).
inline Mat bullet(const Mat& mp, const Mat& mb) {
  std::size_t pn = mp.rows(), bn = mb.rows();
  Mat out(pn * bn, pn * bn);
  for (std::size_t p1 = 0; p1 < pn; ++p1)
    for (std::size_t p2 = 0; p2 < pn; ++p2) {
      if (mp(p1, p2) == 0) continue;
      for (std::size_t b1 = 0; b1 < bn; ++b1)
        for (std::size_t b2 = 0; b2 < bn; ++b2)
          if (mb(b1, b2) != 0)
            out(p1 * bn + b1, p2 * bn + b2) = mp(p1, p2) * mb(b1, b2);
    }
  return out;
}

// Induced DPP bialgebra on P (x) B from a Poisson bialgebra and a quadratic
// perm algebra:  nu(p (x) b) = Delta(p) . nu_omega(b),
//               theta(p (x) b) = delta(p) . nu_omega(b)   (componentwise).
inline BialgebraCandidate induced_bialgebra(const BialgebraCandidate& Pb,
                                            const Algebra& B, const Mat& Omega) {
  const Algebra& P = Pb.algebra;
  if (P.kind != "poisson")
    throw precondition_error("induced_bialgebra: expected poisson bialgebra");
  BialgebraCandidate out;
  out.algebra = poisson_tensor_perm(P, B);
  Coproduct nuB = nu_omega_finite(B, Omega);
  const Coproduct& D = Pb.coproduct("Delta");
  const Coproduct& d = Pb.coproduct("delta");
  Coproduct nu = Coproduct::zero(out.algebra.basis);
  Coproduct theta = Coproduct::zero(out.algebra.basis);
  std::size_t bn = B.dim();
  for (std::size_t i = 0; i < P.dim(); ++i)
    for (std::size_t j = 0; j < bn; ++j) {
      nu.images[i * bn + j] = bullet(D.images[i], nuB.images[j]);
      theta.images[i * bn + j] = bullet(d.images[i], nuB.images[j]);
    }
  out.coproducts["nu"] = nu;
  out.coproducts["theta"] = theta;
  return out;
}

// --- r lift ----------------------------------------------------------------
// r_hat = sum_i sum_j (x_i (x) e_j) (x) (y_i (x) f_j) over P (x) B, where
// {f_j} is the omega-dual basis of B.  Component formula:
// r_hat((a,j),(c,m)) = r(a,c) * D(m,j) with D = dual_basis(Omega).
inline Mat lift_r(const Mat& r, const Algebra& B, const Mat& Omega) {
  std::size_t pn = r.rows(), bn = B.dim();
  Mat D = dual_basis(Omega);
  Mat out(pn * bn, pn * bn);
  for (std::size_t a = 0; a < pn; ++a)
    for (std::size_t c = 0; c < pn; ++c) {
      if (r(a, c) == 0) continue;
      for (std::size_t j = 0; j < bn; ++j)
        for (std::size_t m = 0; m < bn; ++m)
          if (D(m, j) != 0) out(a * bn + j, c * bn + m) = r(a, c) * D(m, j);
    }
  return out;
}

// kappa = sum_j e_j (x) f_j as a two-tensor over B, and its sharp.
inline Mat kappa_tensor(const Algebra& B, const Mat& Omega) {
  std::size_t bn = B.dim();
  Mat D = dual_basis(Omega);
  Mat kappa(bn, bn);
  for (std::size_t j = 0; j < bn; ++j)
    for (std::size_t m = 0; m < bn; ++m) kappa(j, m) += D(m, j);
  return kappa;
}

inline Mat kappa_sharp(const Algebra& B, const Mat& Omega) {
  return sharp(kappa_tensor(B, Omega));
}

// Kronecker product with the P-major index convention used above.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// sharp(lift_r(r)) = sharp(r) (x) kappa_sharp, exactly.
inline bool check_sharp_factorization(const Mat& r, const Algebra& B,
                                      const Mat& Omega) {
  return sharp(lift_r(r, B, Omega)) == kron(sharp(r), kappa_sharp(B, Omega));
}

// --- O-operators -----------------------------------------------------------
// DPP case: T : carrier -> A with
//   T(v1) o T(v2) = T( ell(T(v1)) v2 + r(T(v2)) v1 )
//   T(v1) * T(v2) = T( lfl(T(v1)) v2 + lfr(T(v2)) v1 )
inline IdentityReport check_o_operator(const DppRep& rep, const Mat& T) {
  const Algebra& a = rep.algebra;
  std::size_t m = rep.carrier_dim();
  if (T.rows() != a.dim() || T.cols() != m)
    throw precondition_error("o-operator shape mismatch");
  IdentityReport out;
  auto run = [&](const std::string& id, const std::string& role,
                 const std::vector<Mat>& left, const std::vector<Mat>& right) {
    WitnessCollector wc(id);
    for (std::size_t v1 = 0; v1 < m; ++v1)
      for (std::size_t v2 = 0; v2 < m; ++v2) {
        std::vector<Rational> u1(m), u2(m);
        u1[v1] = 1;
        u2[v2] = 1;
        auto t1 = T.apply(u1);
        auto t2 = T.apply(u2);
        auto lhs = a.mulv(role, t1, t2);
        auto inner = detail::vadd(detail::at(left, t1).apply(u2),
                                  detail::at(right, t2).apply(u1));
        if (!detail::vzero(detail::vsub(lhs, T.apply(inner))))
          wc.fail("(" + rep.carrier[v1] + "," + rep.carrier[v2] + ")");
      }
    out.push_back(wc.take());
  };
  run("o-op.circ", "circ", rep.ell, rep.rr);
  run("o-op.star", "star", rep.lfl, rep.lfr);
  return out;
}

// Poisson case:
//   T(v1) T(v2) = T( mu(T(v1)) v2 + mu(T(v2)) v1 )
//   [T(v1), T(v2)] = T( rho(T(v1)) v2 - rho(T(v2)) v1 )
inline IdentityReport check_o_operator_poisson(const PoissonRep& rep,
                                               const Mat& T) {
  const Algebra& p = rep.algebra;
  std::size_t m = rep.carrier_dim();
  if (T.rows() != p.dim() || T.cols() != m)
    throw precondition_error("o-operator shape mismatch");
  IdentityReport out;
  WitnessCollector wd("o-op.dot"), wb("o-op.bracket");
  for (std::size_t v1 = 0; v1 < m; ++v1)
    for (std::size_t v2 = 0; v2 < m; ++v2) {
      std::vector<Rational> u1(m), u2(m);
      u1[v1] = 1;
      u2[v2] = 1;
      auto t1 = T.apply(u1);
      auto t2 = T.apply(u2);
      auto lhs1 = p.mulv("dot", t1, t2);
      auto in1 = detail::vadd(detail::at(rep.mu, t1).apply(u2),
                              detail::at(rep.mu, t2).apply(u1));
      if (!detail::vzero(detail::vsub(lhs1, T.apply(in1))))
        wd.fail("(" + rep.carrier[v1] + "," + rep.carrier[v2] + ")");
      auto lhs2 = p.mulv("bracket", t1, t2);
      auto in2 = detail::vsub(detail::at(rep.rho, t1).apply(u2),
                              detail::at(rep.rho, t2).apply(u1));
      if (!detail::vzero(detail::vsub(lhs2, T.apply(in2))))
        wb.fail("(" + rep.carrier[v1] + "," + rep.carrier[v2] + ")");
    }
  out.push_back(wd.take());
  out.push_back(wb.take());
  return out;
}

}  // namespace dppw
