#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dppw/catalog.hpp"
#include "fixtures.hpp"

using namespace dppw;

// Each suite runs 100 randomized trials mixing valid structures (known-good
// data transported by random change of basis, or scaled known solutions) with
// corrupted ones, and asserts the two sides of the biconditional agree on
// every trial.  Corrupted trials must fail with nonempty witnesses.

namespace {

constexpr int kTrials = 100;

Rational rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  return d(rng);
}

std::size_t rand_index(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  return d(rng);
}

bool coin(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 1);
  return d(rng) == 1;
}

// Random invertible matrix: identity plus a strictly triangular perturbation.
Mat rand_invertible(std::mt19937& rng, std::size_t n) {
  Mat s = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng) && (i < j) == coin(rng)) s(i, j) = rand_rat(rng);
  // wipe one triangle so the determinant stays 1
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) s(i, j) = 0;
  return s;
}

bool has_failure_witness(const IdentityReport& rep) {
  for (const auto& r : rep)
    if (!r.pass && !r.witnesses.empty()) return true;
  return false;
}

bool is_symmetric(const Mat& r) { return r == twist(r); }
bool is_skew(const Mat& r) { return (r + twist(r)).is_zero(); }

}  // namespace

TEST_CASE("semidirect product is DPP exactly when the representation is one") {
  std::mt19937 rng(20260823);
  Algebra a = fixtures::a2();
  int corrupted = 0, clean = 0;
  for (int t = 0; t < kTrials; ++t) {
    DppRep rep = coin(rng) ? regular_rep(a) : coregular_rep(a, "signed");
    // transport the carrier through a random invertible change of basis
    Mat s = rand_invertible(rng, rep.carrier_dim());
    Mat si = s.inverse();
    for (auto* fam : {&rep.ell, &rep.rr, &rep.lfl, &rep.lfr})
      for (auto& m : *fam) m = si * m * s;
    bool corrupt = coin(rng);
    if (corrupt) {
      auto* fam = coin(rng) ? (coin(rng) ? &rep.ell : &rep.rr)
                            : (coin(rng) ? &rep.lfl : &rep.lfr);
      Mat& m = (*fam)[rand_index(rng, fam->size())];
      m(rand_index(rng, m.rows()), rand_index(rng, m.cols())) += 1;
    }
    IdentityReport rrep = check_dpp_rep(rep);
    IdentityReport srep = check_identities(semidirect_product(a, rep));
    CHECK(all_pass(rrep) == all_pass(srep));
    if (corrupt && !all_pass(rrep)) {
      ++corrupted;
      CHECK(has_failure_witness(rrep));
      CHECK(has_failure_witness(srep));
    }
    if (!corrupt) {
      ++clean;
      CHECK(all_pass(rrep));
    }
  }
  CHECK(corrupted > 10);  // negative controls actually fired
  CHECK(clean > 10);
}

TEST_CASE("coalgebra axioms hold exactly when the dual algebra is DPP") {
  std::mt19937 rng(917);
  // valid structures transported by a random change of basis, half of them
  // corrupted in a single structure constant
  Algebra bases[2] = {fixtures::a2(),
                      catalog_entry("DOUBLE_A2").document.algebra};
  int pass_count = 0, fail_count = 0;
  for (int t = 0; t < kTrials; ++t) {
    const Algebra& base = bases[rand_index(rng, 2)];
    std::size_t n = base.dim();
    Mat s = rand_invertible(rng, n);
    Mat si = s.inverse();
    Algebra a;
    a.kind = "dpp";
    a.basis = base.basis;
    for (const auto& role : {"circ", "star"}) {
      Tensor3 c(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Rational> u(n), v(n);
          for (std::size_t k = 0; k < n; ++k) {
            u[k] = s(k, i);
            v[k] = s(k, j);
          }
          std::vector<Rational> w = si.apply(base.mulv(role, u, v));
          for (std::size_t k = 0; k < n; ++k) c(i, j, k) = w[k];
        }
      a.products[role] = c;
    }
    bool corrupt = coin(rng);
    if (corrupt) {
      Tensor3& c = a.products[coin(rng) ? "circ" : "star"];
      c(rand_index(rng, n), rand_index(rng, n), rand_index(rng, n)) += 1;
    }
    // dualize the structure constants into a coproduct pair
    Coproduct nu = Coproduct::zero(a.basis), theta = Coproduct::zero(a.basis);
    const Tensor3& cc = a.product("circ");
    const Tensor3& cs = a.product("star");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          nu.images[k](i, j) = cc(i, j, k);
          theta.images[k](i, j) = cs(i, j, k);
        }
    IdentityReport crep = check_dpp_coalgebra(nu, theta);
    // transposing back recovers the same constants, so the dual-algebra side
    // of the biconditional is the identity suite on a
    Algebra dual = transpose_to_algebra(nu, theta);
    IdentityReport arep = check_dpp_identities(dual);
    CHECK(all_pass(arep) == all_pass(crep));
    if (!corrupt) CHECK(all_pass(crep));
    if (all_pass(arep)) {
      ++pass_count;
    } else {
      ++fail_count;
      CHECK(has_failure_witness(arep));
      CHECK(has_failure_witness(crep));
    }
  }
  CHECK(pass_count > 10);
  CHECK(fail_count > 10);
}

TEST_CASE("symmetric r solves the equations exactly when sharp(r) is an "
          "O-operator for the signed coregular representation") {
  std::mt19937 rng(4242);
  CatalogEntry pb6 = catalog_entry("PB6");
  const Algebra& A = pb6.document.algebra;
  const Mat& rhat = pb6.document.rmatrix;
  DppRep coreg = coregular_rep(A, "signed");
  int solved = 0, unsolved = 0;
  for (int t = 0; t < kTrials; ++t) {
    Mat r(A.dim(), A.dim());
    if (coin(rng)) {
      r = rhat * rand_rat(rng);  // scaled solutions stay solutions
    } else {
      for (int put = 0; put < 3; ++put) {
        std::size_t i = rand_index(rng, A.dim()), j = rand_index(rng, A.dim());
        Rational v = rand_rat(rng);
        r(i, j) += v;
        r(j, i) += v;  // keep r symmetric
      }
    }
    REQUIRE(is_symmetric(r));
    bool solves = perm_residual(A, r).is_zero() &&
                  leibniz_residual(A, r, kDefaultLybeSign).is_zero();
    IdentityReport orep = check_o_operator(coreg, sharp(r));
    CHECK(solves == all_pass(orep));
    if (solves) ++solved;
    else {
      ++unsolved;
      CHECK(has_failure_witness(orep));
    }
  }
  CHECK(solved > 10);
  CHECK(unsolved > 10);
}

TEST_CASE("skew r on the Poisson side: residuals vanish exactly when "
          "sharp(r) is an O-operator for the coregular representation") {
  std::mt19937 rng(5151);
  Algebra p = fixtures::p3();
  PoissonRep coreg = poisson_coregular_rep(p);
  int solved = 0, unsolved = 0;
  for (int t = 0; t < kTrials; ++t) {
    Mat r(3, 3);
    if (coin(rng)) {
      r = fixtures::p3_r() * rand_rat(rng);
    } else {
      for (int put = 0; put < 2; ++put) {
        std::size_t i = rand_index(rng, 3), j = rand_index(rng, 3);
        Rational v = rand_rat(rng);
        r(i, j) += v;
        r(j, i) -= v;  // keep r skew
      }
    }
    REQUIRE(is_skew(r));
    auto [ra, rc] = poisson_residuals(p, r);
    bool solves = ra.is_zero() && rc.is_zero();
    IdentityReport orep = check_o_operator_poisson(coreg, sharp(r));
    CHECK(solves == all_pass(orep));
    if (solves) ++solved;
    else {
      ++unsolved;
      CHECK(has_failure_witness(orep));
    }
  }
  CHECK(solved > 10);
  CHECK(unsolved > 10);
}

TEST_CASE("the finite lift preserves solution, symmetry, and invariance "
          "status") {
  std::mt19937 rng(606060);
  Algebra p = fixtures::p3();
  Algebra b = fixtures::b2();
  Mat W = fixtures::b2_form();
  Algebra A = poisson_tensor_perm(p, b);
  int solved = 0, unsolved = 0;
  for (int t = 0; t < kTrials; ++t) {
    Mat r(3, 3);
    if (coin(rng)) {
      r = fixtures::p3_r() * rand_rat(rng);
    } else {
      for (int put = 0; put < 2; ++put) {
        std::size_t i = rand_index(rng, 3), j = rand_index(rng, 3);
        Rational v = rand_rat(rng);
        r(i, j) += v;
        r(j, i) -= v;
      }
    }
    Mat lifted = lift_r(r, b, W);
    // skew input lifts to a symmetric tensor
    CHECK(is_symmetric(lifted) == is_skew(r));
    auto [ra, rc] = poisson_residuals(p, r);
    bool p_solves = ra.is_zero() && rc.is_zero();
    bool a_solves = perm_residual(A, lifted).is_zero() &&
                    leibniz_residual(A, lifted, kDefaultLybeSign).is_zero();
    CHECK(p_solves == a_solves);
    // invariance transfers to the lift
    if (all_pass(check_poi_invariance(p, r - twist(r))))
      CHECK(all_pass(check_dp_invariance(A, lifted - twist(lifted))));
    if (p_solves) ++solved;
    else ++unsolved;
    // negative control: corrupt a lifted solution and expect a witnessed flip
    if (p_solves && coin(rng)) {
      Mat bad = lifted;
      bad(0, 0) += 1;  // (e1@x1) (x) (e1@x1): e1 e1 = e2 feeds the residual
      YbeResidual res = perm_residual(A, bad);
      CHECK(!res.is_zero());
      bool witnessed = false;
      for (std::size_t i = 0; i < A.dim() && !witnessed; ++i)
        for (std::size_t j = 0; j < A.dim() && !witnessed; ++j)
          for (std::size_t k = 0; k < A.dim() && !witnessed; ++k)
            if (res.residual(i, j, k) != 0) witnessed = true;
      CHECK(witnessed);
    }
  }
  CHECK(solved > 10);
  CHECK(unsolved > 10);
}
