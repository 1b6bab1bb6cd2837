#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dppw/linalg.hpp"
#include "fixtures.hpp"

using namespace dppw;

TEST_CASE("rational parse and format round trip") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rational("a"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
}

TEST_CASE("matrix arithmetic, inverse, determinant") {
  Mat m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(m.determinant() == -2);
  Mat inv = m.inverse();
  CHECK(m * inv == Mat::identity(2));
  CHECK(inv * m == Mat::identity(2));

  Mat s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(s.determinant() == 0);
  CHECK_THROWS_AS(s.inverse(), singular_error);
}

TEST_CASE("twist is the transpose and an involution") {
  // e2 (x) f2 -> f2 (x) e2 on a 2-dim space with basis (e2, f2)
  Mat t(2, 2);
  t(0, 1) = 1;
  Mat tw = twist(t);
  CHECK(tw(1, 0) == 1);
  CHECK(tw(0, 1) == 0);

  // r = e2 (x) e3 - e3 (x) e2 -> -r
  Mat r = fixtures::p3_r();
  CHECK(twist(r) == -r);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat x(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        x(i, j) = Rational((int)(rng() % 19) - 9, 1 + (int)(rng() % 5));
    CHECK(twist(twist(x)) == x);
  }
}

TEST_CASE("sharp of the skew P3 tensor") {
  Mat r = fixtures::p3_r();
  Mat s = sharp(r);
  // r_sharp(xi1) = 0, r_sharp(xi2) = e3, r_sharp(xi3) = -e2 (columns)
  for (std::size_t i = 0; i < 3; ++i) CHECK(s(i, 0) == 0);
  CHECK(s(2, 1) == 1);
  CHECK(s(1, 2) == -1);
  CHECK(two_tensor_from_sharp(s) == r);
  // zero tensor -> zero map
  CHECK(sharp(Mat(3, 3)).is_zero());
}

TEST_CASE("dual map is the transpose and involutive") {
  CHECK(dual_map(Mat::identity(4)) == Mat::identity(4));
  Mat f(3, 3);
  f(0, 2) = 5;
  f(1, 1) = Rational(-1, 2);
  CHECK(dual_map(dual_map(f)) == f);
}

TEST_CASE("j_omega and two-tensor form on B2") {
  Mat o = fixtures::b2_form();
  Mat J = j_omega(o);
  // defining pairing: <J^{-1}(a), b> = omega(a, b); J^{-1} has matrix o^T
  CHECK(J.inverse() == o.transpose());
  // round trip: sharp(two_tensor_form(J)) = J
  CHECK(sharp(two_tensor_from_sharp(J)) == J);
  // standard symplectic: J is the inverse of the transposed Gram matrix
  CHECK(J(0, 1) == 1);
  CHECK(J(1, 0) == -1);
}

TEST_CASE("j_omega on the double pairing: (a, xi) -> (-xi, a)") {
  // B((a1,xi1),(a2,xi2)) = <a1,xi2> - <a2,xi1> on a 2+2 dimensional space
  Mat B(4, 4);
  B(0, 2) = 1;
  B(1, 3) = 1;
  B(2, 0) = -1;
  B(3, 1) = -1;
  Mat Jinv = B.transpose();
  // J^{-1}(e_i) = f_i and J^{-1}(f_i) = -e_i, i.e. (a, xi) -> (-xi, a)
  CHECK(Jinv(2, 0) == 1);
  CHECK(Jinv(3, 1) == 1);
  CHECK(Jinv(0, 2) == -1);
  CHECK(Jinv(1, 3) == -1);
  CHECK(j_omega(B) == Jinv.inverse());
}

TEST_CASE("dual basis of B2 is (-x2, x1)") {
  Mat D = dual_basis(fixtures::b2_form());
  CHECK(D(0, 0) == 0);
  CHECK(D(1, 0) == -1);
  CHECK(D(0, 1) == 1);
  CHECK(D(1, 1) == 0);
  // omega(f_i, e_j) = delta_ij
  Mat o = fixtures::b2_form();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < 2; ++k) v += D(k, i) * o(k, j);
      CHECK(v == (i == j ? 1 : 0));
    }
}

TEST_CASE("dual basis of a diagonal symmetric form is the basis itself") {
  CHECK(dual_basis(Mat::identity(3)) == Mat::identity(3));
}

TEST_CASE("singular form is an error") {
  Mat o(2, 2);
  o(0, 0) = 1;
  CHECK_THROWS_AS(dual_basis(o), singular_error);
  CHECK_THROWS_AS(j_omega(o), singular_error);
}

TEST_CASE("tensor3 permutations") {
  Tensor3 t(2);
  t(0, 1, 1) = 3;
  CHECK(t.swap12()(1, 0, 1) == 3);
  CHECK(t.swap23()(0, 1, 1) == 3);
  Tensor3 u(2);
  u(0, 1, 0) = 2;
  CHECK(u.swap23()(0, 0, 1) == 2);
  CHECK((u + u.swap12()).swap12() == u + u.swap12());
}

TEST_CASE("vector formatting") {
  CHECK(format_vector({Rational(2), Rational(0), Rational(-1, 2)},
                      {"e1", "e2", "e3"}) == "2*e1 - 1/2*e3");
  CHECK(format_vector({Rational(0), Rational(0)}, {"a", "b"}) == "0");
  CHECK(format_vector({Rational(-1), Rational(1)}, {"a", "b"}) == "-a + b");
}
