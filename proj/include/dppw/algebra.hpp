#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dppw/linalg.hpp"
#include "dppw/report.hpp"

namespace dppw {

// Algebra kinds.  Role conventions:
//   comm-assoc: {dot}        lie: {bracket}      perm: {circ}
//   leibniz:    {star}       poisson: {dot, bracket}
//   dpp:        {circ, star}
struct Algebra {
  std::string name;
  std::string kind;
  std::vector<std::string> basis;
  // role -> structure constants c(i,j,k) = coefficient of e_k in e_i . e_j
  std::map<std::string, Tensor3> products;

  std::size_t dim() const { return basis.size(); }

  const Tensor3& product(const std::string& role) const {
    auto it = products.find(role);
    if (it == products.end())
      throw precondition_error("algebra '" + name + "' has no product role '" +
                               role + "'");
    return it->second;
  }
  bool has_product(const std::string& role) const {
    return products.count(role) != 0;
  }

  // e_i . e_j as a coordinate vector.
  std::vector<Rational> mul(const std::string& role, std::size_t i,
                            std::size_t j) const {
    const Tensor3& c = product(role);
    std::vector<Rational> v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
    return v;
  }

  // u . v for coordinate vectors.
  std::vector<Rational> mulv(const std::string& role,
                             const std::vector<Rational>& u,
                             const std::vector<Rational>& v) const {
    const Tensor3& c = product(role);
    std::size_t n = dim();
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        Rational f = u[i] * v[j];
        for (std::size_t k = 0; k < n; ++k)
          if (c(i, j, k) != 0) w[k] += f * c(i, j, k);
      }
    }
    return w;
  }

  // Left multiplication by e_i: matrix M with M(k, j) = c(i, j, k).
  Mat lmul(const std::string& role, std::size_t i) const {
    const Tensor3& c = product(role);
    Mat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c(i, j, k);
    return m;
  }
  // Right multiplication by e_j: matrix M with M(k, i) = c(i, j, k).
  Mat rmul(const std::string& role, std::size_t j) const {
    const Tensor3& c = product(role);
    Mat m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k < dim(); ++k) m(k, i) = c(i, j, k);
    return m;
  }

  // Left multiplication by an arbitrary element (coordinates u).
  Mat lmulv(const std::string& role, const std::vector<Rational>& u) const {
    Mat m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (u[i] != 0) m += u[i] * lmul(role, i);
    return m;
  }
  Mat rmulv(const std::string& role, const std::vector<Rational>& u) const {
    Mat m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (u[j] != 0) m += u[j] * rmul(role, j);
    return m;
  }
};

namespace detail {

inline std::vector<Rational> vsub(std::vector<Rational> a,
                                  const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline std::vector<Rational> vadd(std::vector<Rational> a,
                                  const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline bool vzero(const std::vector<Rational>& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Check a trilinear identity: residual(i,j,k) must vanish on all basis
// triples.  Enumerates lexicographically so the first witness is minimal.
template <typename F>
IdentityResult check_triples(const Algebra& a, const std::string& id, F&& f) {
  WitnessCollector wc(id);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        std::vector<Rational> res = f(i, j, k);
        if (!vzero(res))
          wc.fail("(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[k] +
                  "): residual = " + format_vector(res, a.basis));
      }
  return wc.take();
}

template <typename F>
IdentityResult check_pairs(const Algebra& a, const std::string& id, F&& f) {
  WitnessCollector wc(id);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<Rational> res = f(i, j);
      if (!vzero(res))
        wc.fail("(" + a.basis[i] + "," + a.basis[j] +
                "): residual = " + format_vector(res, a.basis));
    }
  return wc.take();
}

}  // namespace detail

// --- identity families -----------------------------------------------------

inline IdentityReport check_perm_identities(const Algebra& a,
                                            const std::string& role = "circ") {
  using namespace detail;
  IdentityReport rep;
  // a1 o (a2 o a3) = (a1 o a2) o a3
  rep.push_back(check_triples(a, "perm.assoc", [&](auto i, auto j, auto k) {
    std::vector<Rational> ei(a.dim()), ek(a.dim());
    ei[i] = 1;
    ek[k] = 1;
    auto left = a.mulv(role, ei, a.mul(role, j, k));
    auto right = a.mulv(role, a.mul(role, i, j), ek);
    return vsub(left, right);
  }));
  // (a1 o a2) o a3 = (a2 o a1) o a3
  rep.push_back(check_triples(a, "perm.left-comm", [&](auto i, auto j, auto k) {
    std::vector<Rational> ek(a.dim());
    ek[k] = 1;
    auto left = a.mulv(role, a.mul(role, i, j), ek);
    auto right = a.mulv(role, a.mul(role, j, i), ek);
    return vsub(left, right);
  }));
  return rep;
}

inline IdentityReport check_leibniz_identities(const Algebra& a,
                                               const std::string& role = "star") {
  using namespace detail;
  IdentityReport rep;
  // a1 * (a2 * a3) = (a1 * a2) * a3 + a2 * (a1 * a3)
  rep.push_back(
      check_triples(a, "leibniz.identity", [&](auto i, auto j, auto k) {
        std::vector<Rational> ei(a.dim()), ej(a.dim()), ek(a.dim());
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        auto lhs = a.mulv(role, ei, a.mul(role, j, k));
        auto r1 = a.mulv(role, a.mul(role, i, j), ek);
        auto r2 = a.mulv(role, ej, a.mul(role, i, k));
        return vsub(lhs, vadd(r1, r2));
      }));
  return rep;
}

inline IdentityReport check_dpp_identities(const Algebra& a) {
  using namespace detail;
  IdentityReport rep = check_perm_identities(a, "circ");
  append(rep, check_leibniz_identities(a, "star"));
  auto unit = [&](std::size_t i) {
    std::vector<Rational> v(a.dim());
    v[i] = 1;
    return v;
  };
  // (a1 o a2) * a3 = a1 o (a2 * a3) + a2 o (a1 * a3)
  rep.push_back(
      check_triples(a, "dpp.compat.circ-star.1", [&](auto i, auto j, auto k) {
        auto lhs = a.mulv("star", a.mul("circ", i, j), unit(k));
        auto r1 = a.mulv("circ", unit(i), a.mul("star", j, k));
        auto r2 = a.mulv("circ", unit(j), a.mul("star", i, k));
        return vsub(lhs, vadd(r1, r2));
      }));
  // (a1 * a2) o a3 = a1 * (a2 o a3) - a2 o (a1 * a3)
  rep.push_back(
      check_triples(a, "dpp.compat.star-circ.1", [&](auto i, auto j, auto k) {
        auto lhs = a.mulv("circ", a.mul("star", i, j), unit(k));
        auto r1 = a.mulv("star", unit(i), a.mul("circ", j, k));
        auto r2 = a.mulv("circ", unit(j), a.mul("star", i, k));
        return vsub(lhs, vsub(r1, r2));
      }));
  // (a1 * a2) o a3 = -(a2 * a1) o a3
  rep.push_back(
      check_triples(a, "dpp.compat.star-circ.sign", [&](auto i, auto j, auto k) {
        auto lhs = a.mulv("circ", a.mul("star", i, j), unit(k));
        auto rhs = a.mulv("circ", a.mul("star", j, i), unit(k));
        return vadd(lhs, rhs);
      }));
  // derived: (a1 o a2) * a3 = (a2 o a1) * a3
  rep.push_back(check_triples(
      a, "dpp.derived.circ-star.comm", [&](auto i, auto j, auto k) {
        auto lhs = a.mulv("star", a.mul("circ", i, j), unit(k));
        auto rhs = a.mulv("star", a.mul("circ", j, i), unit(k));
        return vsub(lhs, rhs);
      }));
  // derived: a1*(a2 o a3) - a2 o (a1*a3) = a1 o (a2*a3) - a2*(a1 o a3)
  rep.push_back(check_triples(a, "dpp.derived.mixed", [&](auto i, auto j, auto k) {
    auto l1 = a.mulv("star", unit(i), a.mul("circ", j, k));
    auto l2 = a.mulv("circ", unit(j), a.mul("star", i, k));
    auto r1 = a.mulv("circ", unit(i), a.mul("star", j, k));
    auto r2 = a.mulv("star", unit(j), a.mul("circ", i, k));
    return vsub(vsub(l1, l2), vsub(r1, r2));
  }));
  return rep;
}

inline IdentityReport check_poisson_identities(const Algebra& a) {
  using namespace detail;
  IdentityReport rep;
  auto unit = [&](std::size_t i) {
    std::vector<Rational> v(a.dim());
    v[i] = 1;
    return v;
  };
  rep.push_back(check_pairs(a, "comm-assoc.comm", [&](auto i, auto j) {
    return vsub(a.mul("dot", i, j), a.mul("dot", j, i));
  }));
  rep.push_back(check_pairs(a, "lie.antisym", [&](auto i, auto j) {
    return vadd(a.mul("bracket", i, j), a.mul("bracket", j, i));
  }));
  rep.push_back(check_triples(a, "comm-assoc.assoc", [&](auto i, auto j, auto k) {
    auto lhs = a.mulv("dot", a.mul("dot", i, j), unit(k));
    auto rhs = a.mulv("dot", unit(i), a.mul("dot", j, k));
    return vsub(lhs, rhs);
  }));
  // left-Leibniz form of Jacobi (equivalent given antisymmetry)
  rep.push_back(check_triples(a, "lie.jacobi", [&](auto i, auto j, auto k) {
    auto lhs = a.mulv("bracket", unit(i), a.mul("bracket", j, k));
    auto r1 = a.mulv("bracket", a.mul("bracket", i, j), unit(k));
    auto r2 = a.mulv("bracket", unit(j), a.mul("bracket", i, k));
    return vsub(lhs, vadd(r1, r2));
  }));
  // [p1, p2 p3] = [p1,p2] p3 + p2 [p1,p3]
  rep.push_back(check_triples(a, "poisson.leibniz", [&](auto i, auto j, auto k) {
    auto lhs = a.mulv("bracket", unit(i), a.mul("dot", j, k));
    auto r1 = a.mulv("dot", a.mul("bracket", i, j), unit(k));
    auto r2 = a.mulv("dot", unit(j), a.mul("bracket", i, k));
    return vsub(lhs, vadd(r1, r2));
  }));
  return rep;
}

inline IdentityReport check_identities(const Algebra& a) {
  using namespace detail;
  if (a.kind == "perm") return check_perm_identities(a, "circ");
  if (a.kind == "leibniz") return check_leibniz_identities(a, "star");
  if (a.kind == "dpp") return check_dpp_identities(a);
  if (a.kind == "poisson") return check_poisson_identities(a);
  if (a.kind == "comm-assoc") {
    IdentityReport rep;
    auto unit = [&](std::size_t i) {
      std::vector<Rational> v(a.dim());
      v[i] = 1;
      return v;
    };
    rep.push_back(check_pairs(a, "comm-assoc.comm", [&](auto i, auto j) {
      return vsub(a.mul("dot", i, j), a.mul("dot", j, i));
    }));
    rep.push_back(check_triples(a, "comm-assoc.assoc", [&](auto i, auto j, auto k) {
      return vsub(a.mulv("dot", a.mul("dot", i, j), unit(k)),
                  a.mulv("dot", unit(i), a.mul("dot", j, k)));
    }));
    return rep;
  }
  if (a.kind == "lie") {
    IdentityReport rep;
    auto unit = [&](std::size_t i) {
      std::vector<Rational> v(a.dim());
      v[i] = 1;
      return v;
    };
    rep.push_back(check_pairs(a, "lie.antisym", [&](auto i, auto j) {
      return vadd(a.mul("bracket", i, j), a.mul("bracket", j, i));
    }));
    rep.push_back(check_triples(a, "lie.jacobi", [&](auto i, auto j, auto k) {
      auto lhs = a.mulv("bracket", unit(i), a.mul("bracket", j, k));
      auto r1 = a.mulv("bracket", a.mul("bracket", i, j), unit(k));
      auto r2 = a.mulv("bracket", unit(j), a.mul("bracket", i, k));
      return vsub(lhs, vadd(r1, r2));
    }));
    return rep;
  }
  throw precondition_error("unknown algebra kind: " + a.kind);
}

// A Poisson algebra is a DPP algebra with circ := dot and star := bracket.
inline Algebra poisson_as_dpp(const Algebra& p) {
  if (p.kind != "poisson")
    throw precondition_error("poisson_as_dpp expects a poisson algebra");
  Algebra a;
  a.name = p.name + "_as_dpp";
  a.kind = "dpp";
  a.basis = p.basis;
  a.products["circ"] = p.product("dot");
  a.products["star"] = p.product("bracket");
  return a;
}

// Quadratic-form validation: skew-symmetry, nondegeneracy, invariance for
// each product role present, and the derived one-sided identities.
inline IdentityReport check_quadratic(const Algebra& a, const Mat& omega) {
  IdentityReport rep;
  std::size_t n = a.dim();
  if (omega.rows() != n || omega.cols() != n)
    throw precondition_error("form shape does not match algebra dimension");

  {
    WitnessCollector wc("quad.skew");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (omega(i, j) + omega(j, i) != 0)
          wc.fail("(" + a.basis[i] + "," + a.basis[j] + "): omega(i,j)+omega(j,i) = " +
                  to_string(omega(i, j) + omega(j, i)));
    rep.push_back(wc.take());
  }
  {
    WitnessCollector wc("quad.nondeg");
    if (omega.determinant() == 0) wc.fail("det(omega) = 0");
    rep.push_back(wc.take());
  }

  auto omega_of = [&](const std::vector<Rational>& u,
                      const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] != 0 && omega(i, j) != 0) s += u[i] * v[j] * omega(i, j);
    }
    return s;
  };
  auto unit = [&](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  auto scalar_triples = [&](const std::string& id, auto&& f) {
    WitnessCollector wc(id);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Rational res = f(i, j, k);
          if (res != 0)
            wc.fail("(" + a.basis[i] + "," + a.basis[j] + "," + a.basis[k] +
                    "): residual = " + to_string(res));
        }
    rep.push_back(wc.take());
  };

  if (a.has_product("circ")) {
    // omega(a1 o a2, a3) = omega(a1, a2 o a3 - a3 o a2)
    scalar_triples("quad.invariance.circ", [&](auto i, auto j, auto k) {
      return omega_of(a.mul("circ", i, j), unit(k)) -
             omega_of(unit(i),
                      detail::vsub(a.mul("circ", j, k), a.mul("circ", k, j)));
    });
    // derived: omega(a1 o a2, a3) = omega(a2, a1 o a3)
    scalar_triples("quad.derived.circ", [&](auto i, auto j, auto k) {
      return omega_of(a.mul("circ", i, j), unit(k)) -
             omega_of(unit(j), a.mul("circ", i, k));
    });
  }
  if (a.has_product("star")) {
    // omega(a1 * a2, a3) = omega(a1, a2 * a3 + a3 * a2)
    scalar_triples("quad.invariance.star", [&](auto i, auto j, auto k) {
      return omega_of(a.mul("star", i, j), unit(k)) -
             omega_of(unit(i),
                      detail::vadd(a.mul("star", j, k), a.mul("star", k, j)));
    });
    // derived: omega(a1 * a2, a3) = -omega(a2, a1 * a3)
    scalar_triples("quad.derived.star", [&](auto i, auto j, auto k) {
      return omega_of(a.mul("star", i, j), unit(k)) +
             omega_of(unit(j), a.mul("star", i, k));
    });
  }
  return rep;
}

}  // namespace dppw
