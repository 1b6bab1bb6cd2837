#pragma once

#include "dppw/algebra.hpp"
#include "dppw/coalgebra.hpp"

// Shared small example algebras used across the test suite.
namespace fixtures {

using dppw::Algebra;
using dppw::Mat;
using dppw::Rational;
using dppw::Tensor3;

// 2-dimensional DPP algebra: e2 o e2 = e1 = e2 * e2.
inline Algebra a2() {
  Algebra a;
  a.name = "A2";
  a.kind = "dpp";
  a.basis = {"e1", "e2"};
  Tensor3 c(2);
  c(1, 1, 0) = 1;
  a.products["circ"] = c;
  a.products["star"] = c;
  return a;
}

// 3-dimensional Poisson algebra: e1 e1 = e2, [e1, e3] = e3.
inline Algebra p3() {
  Algebra p;
  p.name = "P3";
  p.kind = "poisson";
  p.basis = {"e1", "e2", "e3"};
  Tensor3 dot(3), br(3);
  dot(0, 0, 1) = 1;
  br(0, 2, 2) = 1;
  br(2, 0, 2) = -1;
  p.products["dot"] = dot;
  p.products["bracket"] = br;
  return p;
}

// 2-dimensional perm algebra: x1 o x1 = x1, x1 o x2 = x2.
inline Algebra b2() {
  Algebra b;
  b.name = "B2";
  b.kind = "perm";
  b.basis = {"x1", "x2"};
  Tensor3 c(2);
  c(0, 0, 0) = 1;
  c(0, 1, 1) = 1;
  b.products["circ"] = c;
  return b;
}

// Invariant form on B2: omega(x1, x2) = 1 = -omega(x2, x1).
inline Mat b2_form() {
  Mat o(2, 2);
  o(0, 1) = 1;
  o(1, 0) = -1;
  return o;
}

// Skew solution of the Poisson Yang-Baxter equation on P3.
inline Mat p3_r() {
  Mat r(3, 3);
  r(1, 2) = 1;
  r(2, 1) = -1;
  return r;
}

inline Algebra zero_algebra(const std::string& kind, std::size_t n) {
  Algebra a;
  a.name = "zero";
  a.kind = kind;
  for (std::size_t i = 0; i < n; ++i) a.basis.push_back("z" + std::to_string(i + 1));
  Tensor3 c(n);
  if (kind == "dpp") {
    a.products["circ"] = c;
    a.products["star"] = c;
  } else if (kind == "poisson") {
    a.products["dot"] = c;
    a.products["bracket"] = c;
  } else if (kind == "perm") {
    a.products["circ"] = c;
  } else if (kind == "leibniz") {
    a.products["star"] = c;
  }
  return a;
}

// Wrap an algebra as a bialgebra candidate with zero coproducts.
inline dppw::BialgebraCandidate zero_bialgebra(const Algebra& a) {
  dppw::BialgebraCandidate b;
  b.algebra = a;
  if (a.kind == "poisson") {
    b.coproducts["Delta"] = dppw::Coproduct::zero(a.basis);
    b.coproducts["delta"] = dppw::Coproduct::zero(a.basis);
  } else {
    b.coproducts["nu"] = dppw::Coproduct::zero(a.basis);
    b.coproducts["theta"] = dppw::Coproduct::zero(a.basis);
  }
  return b;
}

}  // namespace fixtures
