#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "dppw/constructions.hpp"
#include "dppw/graded.hpp"
#include "fixtures.hpp"

using namespace dppw;

namespace {
BialgebraCandidate p3_bialgebra() {
  BialgebraCandidate b;
  b.algebra = fixtures::p3();
  auto pair = coboundary_poisson(b.algebra, fixtures::p3_r());
  b.coproducts["Delta"] = pair.first;
  b.coproducts["delta"] = pair.second;
  return b;
}

const IdentityResult* find(const IdentityReport& rep, const std::string& id) {
  for (const auto& r : rep)
    if (r.id == id) return &r;
  return nullptr;
}
}  // namespace

TEST_CASE("monomial vector field products, grading, and form") {
  LvfLabel a{2, -1, 1}, b{0, 3, 2};
  // (x1^2 x2^-1 d1) o (x2^3 d2) = x1^3 x2^2 d2
  LvfLabel p = lvf_product(a, b);
  CHECK(p == LvfLabel{3, 2, 2});
  CHECK(lvf_product(b, a) == LvfLabel{2, 3, 1});
  CHECK(lvf_deg(a) == 2);
  CHECK(lvf_deg(LvfLabel{-3, 1, 2}) == -1);
  // the form pairs opposite-exponent, opposite-d labels only, skewly
  CHECK(lvf_form(LvfLabel{1, -2, 2}, LvfLabel{-1, 2, 1}) == 1);
  CHECK(lvf_form(LvfLabel{-1, 2, 1}, LvfLabel{1, -2, 2}) == -1);
  CHECK(lvf_form(LvfLabel{1, -2, 1}, LvfLabel{-1, 2, 1}) == 0);
  CHECK(lvf_form(LvfLabel{1, 0, 2}, LvfLabel{-1, 1, 1}) == 0);
  // dual family: coeff * dual pairs to 1 from the left
  for (LvfLabel l : {LvfLabel{2, -1, 1}, LvfLabel{0, 0, 2}, LvfLabel{-1, 3, 2}}) {
    auto [d, c] = lvf_dual(l);
    CHECK(c * lvf_form(d, l) == 1);
  }
  // the inferred grading offset of the form
  CHECK(lvf_form_offset() == -2);
}

TEST_CASE("windowed coproduct: frozen components and defining pairing") {
  // nu(d1) at box 1: d1-branch legs ((i,1), (-i1, -i2+1, 1)), d2-branch legs
  // ((i,2), (-i1+1, -i2, 1)); only partners inside the box survive
  LvfTensor2 nu = nu_omega_windowed(LvfLabel{0, 0, 1}, 1);
  CHECK(nu[{LvfLabel{0, 0, 1}, LvfLabel{0, 1, 1}}] == 1);
  CHECK(nu[{LvfLabel{1, -1, 1}, LvfLabel{-1, 2, 1}}] == 0);  // partner escapes
  CHECK(nu[{LvfLabel{0, 0, 2}, LvfLabel{1, 0, 1}}] == -1);
  CHECK(nu[{LvfLabel{-1, 1, 2}, LvfLabel{2, -1, 1}}] == 0);
  // out-of-reach base label: empty window
  CHECK(nu_omega_windowed(LvfLabel{5, 5, 1}, 0).empty());
  // defining pairing: omega_hat(nu(b), e (x) f) = -omega(b, e o f)
  std::vector<LvfLabel> sample = {{0, 0, 1},  {0, 0, 2}, {1, 0, 1},
                                  {-1, 2, 2}, {2, 1, 1}, {0, -2, 2}};
  for (const auto& b : sample)
    for (const auto& e : sample)
      for (const auto& f : sample)
        CHECK(nu_pairing(b, e, f) == -lvf_form(b, lvf_product(e, f)));
  // the corrupted variant breaks the defining pairing somewhere
  bool violated = false;
  for (const auto& b : sample)
    for (const auto& e : sample)
      for (const auto& f : sample)
        if (nu_pairing(b, e, f, true) != -lvf_form(b, lvf_product(e, f)))
          violated = true;
  CHECK(violated);
}

TEST_CASE("windowed components are stable under window growth") {
  for (long long N : {2, 4}) {
    LvfTensor2 small = nu_omega_windowed(LvfLabel{1, -1, 2}, N);
    LvfTensor2 big = nu_omega_windowed(LvfLabel{1, -1, 2}, N + 2);
    for (const auto& [key, c] : big) {
      if (!lvf_in_box(key.first, N) || !lvf_in_box(key.second, N)) continue;
      CHECK(small[key] == c);
    }
    for (const auto& [key, c] : small) CHECK(big[key] == c);
  }
}

TEST_CASE("completed perm coalgebra axioms hold in the box") {
  IdentityReport rep = check_completed_coalgebra_pairing(2);
  CHECK(rep.size() == 2);
  CHECK(all_pass(rep));
  CHECK(find(rep, "coperm.coassoc") != nullptr);
  CHECK(find(rep, "coperm.left-cocomm") != nullptr);
}

TEST_CASE("corrupted coproduct is caught with a witness tuple") {
  IdentityReport rep = check_completed_coalgebra_pairing(2, true);
  CHECK(!all_pass(rep));
  bool witnessed = false;
  for (const auto& r : rep)
    if (!r.pass && !r.witnesses.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("completed tensor bialgebra: construction and closed-form theta") {
  CompletedTensorBialgebra A(p3_bialgebra());
  // only Poisson bialgebras can be completed-tensored
  BialgebraCandidate bad = fixtures::zero_bialgebra(fixtures::a2());
  CHECK_THROWS_AS(CompletedTensorBialgebra{bad}, precondition_error);
  // Delta = 0, so nu vanishes identically
  CHECK(A.cop("nu", PbLabel{0, {0, 0, 1}}, 3, 3).empty());
  // theta on (e1 (x) x^{m,n} d1), box 2, against the closed form:
  //   sum_i  (i,1)e2 (x) (m-i1, n-i2+1, 1)e3 - (i,2)e2 (x) (m-i1+1, n-i2, 1)e3
  //        + (i,2)e3 (x) (m-i1+1, n-i2, 1)e2 - (i,1)e3 (x) (m-i1, n-i2+1, 1)e2
  const long long M = 2;
  for (LvfLabel b : {LvfLabel{0, 0, 1}, LvfLabel{1, -1, 1}, LvfLabel{-2, 2, 1}}) {
    PbTensor2 expect;
    for (long long i1 = -M; i1 <= M; ++i1)
      for (long long i2 = -M; i2 <= M; ++i2) {
        LvfLabel u1{i1, i2, 1}, v1{b.i1 - i1, b.i2 - i2 + 1, 1};
        LvfLabel u2{i1, i2, 2}, v2{b.i1 - i1 + 1, b.i2 - i2, 1};
        if (lvf_in_box(v1, M)) {
          expect[{PbLabel{1, u1}, PbLabel{2, v1}}] += 1;
          expect[{PbLabel{2, u1}, PbLabel{1, v1}}] += -1;
        }
        if (lvf_in_box(v2, M)) {
          expect[{PbLabel{1, u2}, PbLabel{2, v2}}] += -1;
          expect[{PbLabel{2, u2}, PbLabel{1, v2}}] += 1;
        }
      }
    CHECK(A.cop("theta", PbLabel{0, b}, M, M) == expect);
  }
  // theta of e2, e3 components vanishes (delta is supported on e1 only)
  CHECK(A.cop("theta", PbLabel{1, {0, 0, 1}}, 2, 2).empty());
  CHECK(A.cop("theta", PbLabel{2, {0, 0, 2}}, 2, 2).empty());
}

TEST_CASE("completed bialgebra identities hold in both modes at box 1") {
  CompletedTensorBialgebra A(p3_bialgebra());
  GradedOptions pairing{1, 4, "pairing"};
  IdentityReport rep = check_completed_bialgebra(A, pairing);
  CHECK(rep.size() == 18);
  CHECK(all_pass(rep));
  GradedOptions strong{1, 4, "strong"};
  CHECK(all_pass(check_completed_bialgebra(A, strong)));
  // the window rule is enforced in strong mode
  GradedOptions bad{2, 4, "strong"};
  CHECK_THROWS_AS(check_completed_conditions(A, bad), precondition_error);
  GradedOptions badmode{1, 4, "weak"};
  CHECK_THROWS_AS(check_completed_conditions(A, badmode), precondition_error);
}

TEST_CASE("corrupted completed structure fails the identity suite") {
  CompletedTensorBialgebra A(p3_bialgebra(), true);
  GradedOptions opt{1, 4, "pairing"};
  IdentityReport rep = check_completed_bialgebra(A, opt);
  CHECK(!all_pass(rep));
  bool witnessed = false;
  for (const auto& r : rep)
    if (!r.pass && !r.witnesses.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("windowed lift of the skew solution") {
  PbTensor2 rhat = lift_r_windowed(fixtures::p3_r(), 2);
  // frozen components, from r = e2 (x) e3 - e3 (x) e2 and the dual family:
  //   sum_i  (i,1)e2 (x) (-i,2)e3 - (i,2)e2 (x) (-i,1)e3
  //        - (i,1)e3 (x) (-i,2)e2 + (i,2)e3 (x) (-i,1)e2
  CHECK(rhat[{PbLabel{1, {0, 0, 1}}, PbLabel{2, {0, 0, 2}}}] == 1);
  CHECK(rhat[{PbLabel{1, {1, -2, 2}}, PbLabel{2, {-1, 2, 1}}}] == -1);
  CHECK(rhat[{PbLabel{2, {-2, 1, 1}}, PbLabel{1, {2, -1, 2}}}] == -1);
  CHECK(rhat[{PbLabel{2, {1, 1, 2}}, PbLabel{1, {-1, -1, 1}}}] == 1);
  // 25 exponent choices x 2 d-choices x 2 base terms
  CHECK(rhat.size() == 100);
  // symmetric under the twist
  PbTensor2 tw;
  for (const auto& [key, c] : rhat) tw[{key.second, key.first}] = c;
  CHECK(tw == rhat);
}

TEST_CASE("windowed lift solves both graded Yang-Baxter equations") {
  CompletedTensorBialgebra A(p3_bialgebra());
  const long long M = 2;
  PbTensor2 rhat = lift_r_windowed(fixtures::p3_r(), M + 1);
  IdentityReport rep = check_windowed_r(A, rhat, M);
  CHECK(rep.size() == 2);
  CHECK(all_pass(rep));
  CHECK(find(rep, "pybe") != nullptr);
  CHECK(find(rep, "lybe") != nullptr);
  // a spurious (e1 b) (x) (e1 b) component breaks the perm equation, since
  // e1 e1 = e2 feeds nonzero products into the residual
  PbTensor2 broken = rhat;
  broken[{PbLabel{0, {0, 0, 1}}, PbLabel{0, {0, 0, 1}}}] = 1;
  IdentityReport bad = check_windowed_r(A, broken, M);
  CHECK(!all_pass(bad));
  bool witnessed = false;
  for (const auto& r : bad)
    if (!r.pass && !r.witnesses.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("worker cap honours the environment variable") {
  setenv("FORGE_THREADS", "2", 1);
  CHECK(graded_thread_count() == 2);
  setenv("FORGE_THREADS", "0", 1);  // invalid values fall back to hardware
  CHECK(graded_thread_count() >= 1);
  unsetenv("FORGE_THREADS");
  CHECK(graded_thread_count() >= 1);
}
