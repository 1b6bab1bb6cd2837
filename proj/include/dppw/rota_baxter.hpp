#pragma once

#include "dppw/representation.hpp"
#include "dppw/rmatrix.hpp"

namespace dppw {

struct RbOperator {
  Algebra algebra;
  Mat matrix;
  Rational weight;
};

struct QuadraticRb {
  Algebra algebra;
  Mat omega;  // Gram matrix of the invariant form
  RbOperator R;
};

// Rota-Baxter axiom for every product role of the algebra:
//   R(a) . R(b) = R( R(a).b + a.R(b) + lambda a.b )
inline IdentityReport check_rb(const RbOperator& rb) {
  const Algebra& a = rb.algebra;
  const Mat& R = rb.matrix;
  IdentityReport rep;
  for (const auto& [role, c] : a.products) {
    (void)c;
    WitnessCollector wc("rb." + role);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::vector<Rational> ei(a.dim()), ej(a.dim());
        ei[i] = 1;
        ej[j] = 1;
        auto Ri = R.apply(ei);
        auto Rj = R.apply(ej);
        auto lhs = a.mulv(role, Ri, Rj);
        auto inner = detail::vadd(
            detail::vadd(a.mulv(role, Ri, ej), a.mulv(role, ei, Rj)),
            [&] {
              auto p = a.mul(role, i, j);
              for (auto& x : p) x *= rb.weight;
              return p;
            }());
        auto res = detail::vsub(lhs, R.apply(inner));
        if (!detail::vzero(res))
          wc.fail("(" + a.basis[i] + "," + a.basis[j] +
                  "): residual = " + format_vector(res, a.basis));
      }
    rep.push_back(wc.take());
  }
  return rep;
}

// Descendent algebra: a .R b := R(a).b + a.R(b) + lambda a.b for each role.
// Precondition: check_rb passes.
inline Algebra descendent(const RbOperator& rb) {
  if (!all_pass(check_rb(rb)))
    throw precondition_error("descendent: Rota-Baxter check failed");
  const Algebra& a = rb.algebra;
  Algebra out;
  out.name = a.name + "_descendent";
  out.kind = a.kind;
  out.basis = a.basis;
  std::size_t n = a.dim();
  for (const auto& [role, c] : a.products) {
    (void)c;
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> ei(n), ej(n);
        ei[i] = 1;
        ej[j] = 1;
        auto v = detail::vadd(
            detail::vadd(a.mulv(role, rb.matrix.apply(ei), ej),
                         a.mulv(role, ei, rb.matrix.apply(ej))),
            [&] {
              auto p = a.mul(role, i, j);
              for (auto& x : p) x *= rb.weight;
              return p;
            }());
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) = v[k];
      }
    out.products[role] = t;
  }
  return out;
}

// R is an algebra homomorphism from the descendent algebra to the original:
// R(a .R b) = R(a) . R(b).
inline IdentityReport check_descendent_homomorphism(const RbOperator& rb) {
  const Algebra& a = rb.algebra;
  Algebra desc = descendent(rb);
  IdentityReport rep;
  for (const auto& [role, c] : a.products) {
    (void)c;
    WitnessCollector wc("rb.descendent-hom." + role);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::vector<Rational> ei(a.dim()), ej(a.dim());
        ei[i] = 1;
        ej[j] = 1;
        auto lhs = rb.matrix.apply(desc.mul(role, i, j));
        auto rhs = a.mulv(role, rb.matrix.apply(ei), rb.matrix.apply(ej));
        if (!detail::vzero(detail::vsub(lhs, rhs)))
          wc.fail("(" + a.basis[i] + "," + a.basis[j] + ")");
      }
    rep.push_back(wc.take());
  }
  return rep;
}

// Quadratic Rota-Baxter structure: quadratic form + RB operator + the
// compatibility  omega(a1, R(a2)) + omega(R(a1), a2) + lambda omega(a1,a2)=0,
// which in matrix form is  Omega R + R^T Omega + lambda Omega = 0.
inline IdentityReport check_quadratic_rb(const QuadraticRb& q) {
  IdentityReport rep = check_quadratic(q.algebra, q.omega);
  append(rep, check_rb(q.R));
  WitnessCollector wc("qrb.compat");
  Mat res = q.omega * q.R.matrix + q.R.matrix.transpose() * q.omega +
            q.R.weight * q.omega;
  for (std::size_t i = 0; i < q.algebra.dim(); ++i)
    for (std::size_t j = 0; j < q.algebra.dim(); ++j)
      if (res(i, j) != 0)
        wc.fail("(" + q.algebra.basis[i] + "," + q.algebra.basis[j] +
                "): residual = " + to_string(res(i, j)));
  rep.push_back(wc.take());
  return rep;
}

// Factorizable r-matrix -> quadratic Rota-Baxter structure of weight lambda:
//   R := lambda * twist(r)_sharp * I^{-1},
//   omega_I(a1, a2) := <I^{-1}(a1), a2>   (Gram matrix (I^{-1})^T).
inline QuadraticRb factorizable_to_qrb(const Algebra& alg, const Mat& r,
                                       const Rational& lambda, LybeSign sign) {
  if (lambda == 0) throw precondition_error("factorizable_to_qrb: weight is 0");
  Classification c = classify(alg, r, sign);
  if (!c.quasi_triangular)
    throw precondition_error("factorizable_to_qrb: r is not quasi-triangular");
  if (c.det_I == 0)
    throw singular_error("factorizable_to_qrb: I = r_sharp - twist(r)_sharp is singular");
  Mat Iinv = c.I.inverse();
  QuadraticRb q;
  q.algebra = alg;
  q.omega = Iinv.transpose();
  q.R = RbOperator{alg, lambda * (sharp(twist(r)) * Iinv), lambda};
  return q;
}

// Converse direction: r_sharp := (1/lambda) (R + lambda id) J_omega.
inline Mat qrb_to_rmatrix(const QuadraticRb& q) {
  if (q.R.weight == 0) throw precondition_error("qrb_to_rmatrix: weight is 0");
  Mat J = j_omega(q.omega);
  Mat rsharp =
      (Rational(1) / q.R.weight) *
      ((q.R.matrix + q.R.weight * Mat::identity(q.algebra.dim())) * J);
  return two_tensor_from_sharp(rsharp);
}

// Semidirect r-matrix of Cor-type: on A x| A* (coregular standard action),
//   r = (1/lambda) sum_i ( f_i (x) (lambda id + R)(e_i) + R(e_i) (x) f_i ).
// Also returns the associated double data: the semidirect algebra, the
// quadratic form B((a1,xi1),(a2,xi2)) = <a1,xi2> - <a2,xi1>, and the
// Rota-Baxter operator R (+) dual_map(-lambda id - R) of weight lambda.
struct RbSemidirect {
  Algebra algebra;  // A x| A*
  Mat r;            // 2n x 2n two-tensor
  QuadraticRb qrb;
};

inline RbSemidirect rb_semidirect_r(const RbOperator& rb) {
  if (rb.weight == 0) throw precondition_error("rb_semidirect_r: weight is 0");
  if (!all_pass(check_rb(rb)))
    throw precondition_error("rb_semidirect_r: Rota-Baxter check failed");
  const Algebra& a = rb.algebra;
  std::size_t n = a.dim();
  RbSemidirect out;
  out.algebra = semidirect_product(a, coregular_rep(a, "signed"));
  out.r = Mat(2 * n, 2 * n);
  Mat shifted = rb.matrix + rb.weight * Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // f_i (x) (lambda id + R)(e_i): component (n+i, j) of the two-tensor
      out.r(n + i, j) += shifted(j, i) / rb.weight;
      // R(e_i) (x) f_i: component (j, n+i)
      out.r(j, n + i) += rb.matrix(j, i) / rb.weight;
    }
  Mat B(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    B(i, n + i) = 1;
    B(n + i, i) = -1;
  }
  Mat Rhat = -rb.weight * Mat::identity(n) - rb.matrix;
  Mat big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = rb.matrix(i, j);
      big(n + i, n + j) = dual_map(Rhat)(i, j);
    }
  out.qrb = QuadraticRb{out.algebra, B, RbOperator{out.algebra, big, rb.weight}};
  return out;
}

// Weight-0 case: <r_omega, xi1 (x) xi2> = <R(J_omega(xi1)), xi2>, i.e.
// r_sharp = R . J_omega; the result is symmetric and triangular.
inline Mat triangular_from_qrb0(const QuadraticRb& q) {
  if (q.R.weight != 0)
    throw precondition_error("triangular_from_qrb0: weight must be 0");
  if (!all_pass(check_quadratic_rb(q)))
    throw precondition_error("triangular_from_qrb0: quadratic RB check failed");
  Mat J = j_omega(q.omega);
  return two_tensor_from_sharp(q.R.matrix * J);
}

}  // namespace dppw
