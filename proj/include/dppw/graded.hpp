#pragma once

// Graded workbench: the Laurent-vector-field (LVF) family of quadratic
// Z-graded perm algebras, its completed coalgebra, and the completed DPP
// bialgebra on P (x) LVF for a finite-dimensional Poisson bialgebra P.
//
// Elements of the LVF algebra are monomial labels x1^{i1} x2^{i2} d_s with
// s in {1,2}; products, the form, and the coproduct have one-term closed
// forms, so every windowed tensor component below is exact: identity checks
// never accumulate truncation error.  Two verification modes are offered:
//  - "pairing": residuals are contracted against all test tuples from the
//    box through the completed pairing; witnesses name the test tuple.
//  - "strong": residual tensor components with all legs inside the box are
//    asserted zero directly; witnesses name the component.
// Both modes evaluate the same exact components (the pairing is a signed
// relabeling through the dual basis); the working window only needs to cover
// the box plus the bounded label shifts of the checked maps, which the
// window rule N >= 2M+2 always guarantees.

#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <tuple>

#include "dppw/rmatrix.hpp"

namespace dppw {

// --- LVF labels ------------------------------------------------------------
struct LvfLabel {
  long long i1 = 0, i2 = 0;
  int s = 1;
  auto operator<=>(const LvfLabel&) const = default;
};

inline std::string to_string(const LvfLabel& l) {
  return "x1^" + std::to_string(l.i1) + "x2^" + std::to_string(l.i2) + "d" +
         std::to_string(l.s);
}

inline bool lvf_in_box(const LvfLabel& l, long long box) {
  return l.i1 >= -box && l.i1 <= box && l.i2 >= -box && l.i2 <= box;
}

// (x^i d_s) o (x^j d_t) = x^{i + j + e_s} d_t, always with coefficient 1.
inline LvfLabel lvf_product(const LvfLabel& a, const LvfLabel& b) {
  LvfLabel out;
  out.i1 = a.i1 + b.i1 + (a.s == 1 ? 1 : 0);
  out.i2 = a.i2 + b.i2 + (a.s == 2 ? 1 : 0);
  out.s = b.s;
  return out;
}

// Grading: deg(x^{i1} x^{i2} d_s) = i1 + i2 + 1.
inline long long lvf_deg(const LvfLabel& l) { return l.i1 + l.i2 + 1; }

// omega(x^i d_2, x^j d_1) = delta_{i+j,0}; same-d pairs vanish; skew.
inline Rational lvf_form(const LvfLabel& a, const LvfLabel& b) {
  if (a.s == b.s) return 0;
  if (a.i1 + b.i1 != 0 || a.i2 + b.i2 != 0) return 0;
  return a.s == 2 ? 1 : -1;
}

// The omega-dual of a basis label: lvf_form(dual(l).first, l) * coeff = 1.
// dual(i1,i2,1) = +(-i1,-i2,2); dual(i1,i2,2) = -(-i1,-i2,1).
inline std::pair<LvfLabel, Rational> lvf_dual(const LvfLabel& l) {
  LvfLabel d{-l.i1, -l.i2, l.s == 1 ? 2 : 1};
  return {d, l.s == 1 ? Rational(1) : Rational(-1)};
}

// The grading offset of the form: omega(B_i, B_j) = 0 unless i + j + m = 0.
// The offset is inferred from the support rather than assumed: every pairing
// pair has deg(a) + deg(b) = 2, hence m = -2.
inline long long lvf_form_offset(long long scan_box = 3) {
  bool found = false;
  long long m = 0;
  for (long long i1 = -scan_box; i1 <= scan_box; ++i1)
    for (long long i2 = -scan_box; i2 <= scan_box; ++i2)
      for (int s : {1, 2}) {
        LvfLabel a{i1, i2, s};
        auto [d, c] = lvf_dual(a);
        (void)c;
        if (lvf_form(d, a) == 0) continue;
        long long cur = -(lvf_deg(d) + lvf_deg(a));
        if (!found) {
          found = true;
          m = cur;
        } else if (cur != m) {
          throw precondition_error("form support is not graded");
        }
      }
  return m;
}

// --- windowed coproduct on the LVF algebra ---------------------------------
using LvfTensor2 = std::map<std::pair<LvfLabel, LvfLabel>, Rational>;
using LvfTensor3 = std::map<std::tuple<LvfLabel, LvfLabel, LvfLabel>, Rational>;

// nu(x^{m,n} d_t) = sum_i ( x^i d_1 (x) x^{m-i1, n-i2+1} d_t
//                          - x^i d_2 (x) x^{m-i1+1, n-i2} d_t ).
// Components with leg 1 in box1 and leg 2 in box2 are returned; each
// component has exactly one contributing term, so every returned component
// is the complete (untruncated) coefficient.  `corrupt` injects a spurious
// b (x) b term; it exists as a deliberately broken variant for negative
// tests of the checkers.
inline LvfTensor2 nu_omega_windowed(const LvfLabel& b, long long box1,
                                    long long box2, bool corrupt = false) {
  LvfTensor2 out;
  for (long long i1 = -box1; i1 <= box1; ++i1)
    for (long long i2 = -box1; i2 <= box1; ++i2) {
      LvfLabel u1{i1, i2, 1}, v1{b.i1 - i1, b.i2 - i2 + 1, b.s};
      if (lvf_in_box(v1, box2)) out[{u1, v1}] += 1;
      LvfLabel u2{i1, i2, 2}, v2{b.i1 - i1 + 1, b.i2 - i2, b.s};
      if (lvf_in_box(v2, box2)) out[{u2, v2}] += -1;
    }
  if (corrupt && lvf_in_box(b, box1) && lvf_in_box(b, box2)) out[{b, b}] += 1;
  return out;
}

inline LvfTensor2 nu_omega_windowed(const LvfLabel& b, long long box,
                                    bool corrupt = false) {
  return nu_omega_windowed(b, box, box, corrupt);
}

// Defining pairing of the coproduct: omega_hat(nu(b), e (x) f) computed from
// the windowed components (only the dual labels of e and f can contribute).
inline Rational nu_pairing(const LvfLabel& b, const LvfLabel& e,
                           const LvfLabel& f, bool corrupt = false) {
  Rational out = 0;
  long long box = std::max({std::llabs(e.i1), std::llabs(e.i2),
                            std::llabs(f.i1), std::llabs(f.i2)}) +
                  2;
  for (const auto& [key, c] : nu_omega_windowed(b, box, corrupt))
    out += c * lvf_form(key.first, e) * lvf_form(key.second, f);
  return out;
}

// Weak-form completed perm coalgebra check on the LVF family: the three-fold
// compositions of nu are paired against every test triple from the box.
// Intermediate legs live in the enlarged window 2M+1; the contributing
// intermediates for in-box test triples are certified complete there.
inline IdentityReport check_completed_coalgebra_pairing(long long M,
                                                        bool corrupt = false) {
  auto compose_first = [&](const LvfLabel& b) {
    // (nu (x) id) nu restricted to final legs in box M
    LvfTensor3 t;
    for (const auto& [key, c] : nu_omega_windowed(b, 2 * M + 1, M, corrupt))
      for (const auto& [key2, c2] :
           nu_omega_windowed(key.first, M, M, corrupt))
        t[{key2.first, key2.second, key.second}] += c * c2;
    return t;
  };
  auto compose_second = [&](const LvfLabel& b) {
    // (id (x) nu) nu restricted to final legs in box M
    LvfTensor3 t;
    for (const auto& [key, c] : nu_omega_windowed(b, M, 2 * M + 1, corrupt))
      for (const auto& [key2, c2] :
           nu_omega_windowed(key.second, M, M, corrupt))
        t[{key.first, key2.first, key2.second}] += c * c2;
    return t;
  };
  auto swap12 = [](const LvfTensor3& t) {
    LvfTensor3 s;
    for (const auto& [key, c] : t)
      s[{std::get<1>(key), std::get<0>(key), std::get<2>(key)}] += c;
    return s;
  };
  auto add_scaled = [](LvfTensor3& into, const LvfTensor3& t, int sign) {
    for (const auto& [key, c] : t) {
      into[key] += sign * c;
      if (into[key] == 0) into.erase(key);
    }
  };
  WitnessCollector wa("coperm.coassoc"), wb("coperm.left-cocomm");
  for (long long m = -M; m <= M; ++m)
    for (long long n = -M; n <= M; ++n)
      for (int t = 1; t <= 2; ++t) {
        LvfLabel b{m, n, t};
        LvfTensor3 left = compose_first(b);
        LvfTensor3 right = compose_second(b);
        LvfTensor3 res1 = left, res2 = left;
        add_scaled(res1, right, -1);
        add_scaled(res2, swap12(right), -1);
        auto report = [&](WitnessCollector& wc, const LvfTensor3& res) {
          for (const auto& [key, c] : res) {
            if (c == 0) continue;
            // pair the residual component against its test triple
            auto [x, cx] = lvf_dual(std::get<0>(key));
            auto [y, cy] = lvf_dual(std::get<1>(key));
            auto [z, cz] = lvf_dual(std::get<2>(key));
            (void)cx;
            (void)cy;
            (void)cz;
            wc.fail("(" + to_string(b) + "; " + to_string(x) + "," +
                    to_string(y) + "," + to_string(z) + ")");
          }
        };
        report(wa, res1);
        report(wb, res2);
      }
  IdentityReport rep;
  rep.push_back(wa.take());
  rep.push_back(wb.take());
  return rep;
}

// --- the completed DPP bialgebra on P (x) LVF ------------------------------
struct PbLabel {
  std::size_t p = 0;
  LvfLabel b;
  auto operator<=>(const PbLabel&) const = default;
};

using PbElem = std::map<PbLabel, Rational>;
using PbTensor2 = std::map<std::pair<PbLabel, PbLabel>, Rational>;
using PbTensor3 = std::map<std::tuple<PbLabel, PbLabel, PbLabel>, Rational>;

struct GradedOptions {
  long long box = 2;     // assertion box M
  long long window = 6;  // working window N (strong mode), N >= 2M+2
  std::string mode = "pairing";  // "pairing" or "strong"
};

// Worker cap: FORGE_THREADS, defaulting to the hardware concurrency.
inline unsigned graded_thread_count() {
  if (const char* env = std::getenv("FORGE_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

class CompletedTensorBialgebra {
 public:
  // Pb must be a verified Poisson bialgebra (prerequisite per the theorem).
  explicit CompletedTensorBialgebra(const BialgebraCandidate& Pb,
                                    bool corrupt = false)
      : P_(Pb.algebra),
        Delta_(Pb.coproduct("Delta")),
        delta_(Pb.coproduct("delta")),
        corrupt_(corrupt) {
    if (P_.kind != "poisson")
      throw precondition_error("completed tensor: expected poisson bialgebra");
    if (!all_pass(check_bialgebra(Pb)))
      throw precondition_error(
          "completed tensor: Poisson bialgebra check failed");
  }

  const Algebra& poisson() const { return P_; }

  std::string label(const PbLabel& l) const {
    return P_.basis[l.p] + "⊗" + to_string(l.b);
  }

  // (p1, b1) o (p2, b2) = p1 p2 (x) b1 o b2;  * uses the bracket.
  PbElem mul(const std::string& role, const PbLabel& a,
             const PbLabel& b) const {
    const std::string prole = role == "circ" ? "dot" : "bracket";
    auto pv = P_.mul(prole, a.p, b.p);
    LvfLabel lb = lvf_product(a.b, b.b);
    PbElem out;
    for (std::size_t k = 0; k < P_.dim(); ++k)
      if (pv[k] != 0) out[{k, lb}] += pv[k];
    return out;
  }

  // nu = Delta bullet nu_omega, theta = delta bullet nu_omega; components
  // with leg 1 in box1 and leg 2 in box2 (exact per component).
  PbTensor2 cop(const std::string& role, const PbLabel& a, long long box1,
                long long box2) const {
    const Coproduct& pc = role == "nu" ? Delta_ : delta_;
    const Mat& img = pc.images[a.p];
    PbTensor2 out;
    if (img.is_zero()) return out;
    LvfTensor2 nb = nu_omega_windowed(a.b, box1, box2, corrupt_);
    for (std::size_t p1 = 0; p1 < P_.dim(); ++p1)
      for (std::size_t p2 = 0; p2 < P_.dim(); ++p2) {
        if (img(p1, p2) == 0) continue;
        for (const auto& [key, c] : nb)
          out[{{p1, key.first}, {p2, key.second}}] += img(p1, p2) * c;
      }
    return out;
  }

  PbTensor2 cop(const std::string& role, const PbElem& e, long long box1,
                long long box2) const {
    PbTensor2 out;
    for (const auto& [l, c] : e)
      for (const auto& [key, c2] : cop(role, l, box1, box2)) {
        out[key] += c * c2;
        if (out[key] == 0) out.erase(key);
      }
    return out;
  }

  bool corrupted() const { return corrupt_; }

 private:
  Algebra P_;
  Coproduct Delta_, delta_;
  bool corrupt_;
};

namespace detail {

// Precomputed coproduct values for every label in the working window, so the
// per-pair condition evaluation never recomputes them.  Built single-threaded
// before the workers start; read-only afterwards.
struct CopCache {
  long long box = 0;
  std::map<PbLabel, PbTensor2> nu, theta;

  CopCache(const CompletedTensorBialgebra& A, long long window) : box(window) {
    for (std::size_t p = 0; p < A.poisson().dim(); ++p)
      for (long long i1 = -window; i1 <= window; ++i1)
        for (long long i2 = -window; i2 <= window; ++i2)
          for (int s : {1, 2}) {
            PbLabel l{p, {i1, i2, s}};
            nu[l] = A.cop("nu", l, window, window);
            theta[l] = A.cop("theta", l, window, window);
          }
  }

  const PbTensor2& get(const std::string& role, const PbLabel& l) const {
    const auto& table = role == "nu" ? nu : theta;
    auto it = table.find(l);
    if (it == table.end())
      throw precondition_error("coproduct cache miss outside window");
    return it->second;
  }

  PbTensor2 get(const std::string& role, const PbElem& e) const {
    PbTensor2 out;
    for (const auto& [l, c] : e)
      for (const auto& [key, c2] : get(role, l)) {
        out[key] += c * c2;
        if (out[key] == 0) out.erase(key);
      }
    return out;
  }
};

// Accumulate one condition term for arguments a1, a2 into `res`, keeping
// only components that can matter for the in-box assertion.  Source
// coproducts come from the cache (window 2M+1: leg operators multiply by box
// elements, which shifts exponents by up to M+1, so sources up to 2M+1 can
// reach the box).  Every term in the shipped tables has at most one
// non-identity leg, so the evaluation streams straight from the cached
// source: for each source component the untouched leg must already be in the
// box, and an operator output is pruned on its monomial label before any
// coefficient work.
inline void pb_accumulate_term(const CompletedTensorBialgebra& A,
                               const CopCache& cache, const biterm::Term& t,
                               const PbLabel& a1, const PbLabel& a2,
                               long long cap, PbTensor2& res) {
  PbTensor2 local;
  const PbTensor2* src = nullptr;
  switch (t.src) {
    case biterm::Src::A1: src = &cache.get(t.role, a1); break;
    case biterm::Src::A2: src = &cache.get(t.role, a2); break;
    case biterm::Src::ProdCirc:
      local = cache.get(t.role, A.mul("circ", a1, a2));
      src = &local;
      break;
    case biterm::Src::ProdStar:
      local = cache.get(t.role, A.mul("star", a1, a2));
      src = &local;
      break;
    case biterm::Src::SymStar: {
      PbElem e = A.mul("star", a1, a2);
      for (const auto& [l, c] : A.mul("star", a2, a1)) {
        e[l] += c;
        if (e[l] == 0) e.erase(l);
      }
      local = cache.get(t.role, e);
      src = &local;
      break;
    }
  }
  if (src->empty()) return;
  if (!t.left.empty() && !t.right.empty())
    throw precondition_error("term with two operator legs is not supported");
  const bool op_left = !t.left.empty();
  const bool has_op = op_left || !t.right.empty();
  const biterm::Leg& oleg = op_left ? t.left : t.right;

  struct Variant {
    bool swap;
    int sign;
  };
  Variant vars[2];
  std::size_t nv = 1;
  switch (t.sym) {
    case biterm::Sym::None: vars[0] = {false, 1}; break;
    case biterm::Sym::Twist: vars[0] = {true, 1}; break;
    case biterm::Sym::Plus:
      vars[0] = {false, 1};
      vars[1] = {true, 1};
      nv = 2;
      break;
    case biterm::Sym::Minus:
      vars[0] = {false, 1};
      vars[1] = {true, -1};
      nv = 2;
      break;
  }

  auto emit = [&](const PbLabel& l1, const PbLabel& l2, const Rational& c) {
    auto key = t.post_twist ? std::make_pair(l2, l1) : std::make_pair(l1, l2);
    res[key] += c;
    if (res[key] == 0) res.erase(key);
  };

  for (std::size_t iv = 0; iv < nv; ++iv) {
    const Rational vcoeff =
        vars[iv].sign < 0 ? Rational(-t.coeff) : t.coeff;
    for (const auto& [comp, c] : *src) {
      const PbLabel& u = vars[iv].swap ? comp.second : comp.first;
      const PbLabel& v = vars[iv].swap ? comp.first : comp.second;
      // prune on integer label data before touching any coefficients
      if (!has_op) {
        if (!lvf_in_box(u.b, cap) || !lvf_in_box(v.b, cap)) continue;
        emit(u, v, vcoeff * c);
        continue;
      }
      const PbLabel& target = op_left ? u : v;
      const PbLabel& fixed = op_left ? v : u;
      if (!lvf_in_box(fixed.b, cap)) continue;
      for (const auto& piece : oleg) {
        const PbLabel& arg = piece.arg == 1 ? a1 : a2;
        if (piece.op == biterm::Op::Id) {
          if (lvf_in_box(target.b, cap))
            emit(op_left ? target : fixed, op_left ? fixed : target,
                 vcoeff * c * piece.coeff);
          continue;
        }
        const bool arg_first =
            piece.op == biterm::Op::LCirc || piece.op == biterm::Op::LStar;
        LvfLabel lb = arg_first ? lvf_product(arg.b, target.b)
                                : lvf_product(target.b, arg.b);
        if (!lvf_in_box(lb, cap)) continue;
        const bool circ =
            piece.op == biterm::Op::LCirc || piece.op == biterm::Op::RCirc;
        const Tensor3& pt = A.poisson().product(circ ? "dot" : "bracket");
        const std::size_t pi = arg_first ? arg.p : target.p;
        const std::size_t pj = arg_first ? target.p : arg.p;
        for (std::size_t k = 0; k < A.poisson().dim(); ++k) {
          if (pt(pi, pj, k) == 0) continue;
          PbLabel z{k, lb};
          emit(op_left ? z : fixed, op_left ? fixed : z,
               vcoeff * c * piece.coeff * pt(pi, pj, k));
        }
      }
    }
  }
}

// Render a residual component as a witness string; in pairing mode the
// component is translated into the test tuple it pairs against.
inline std::string pb_witness(const CompletedTensorBialgebra& A,
                              const PbLabel& a1, const PbLabel& a2,
                              const std::pair<PbLabel, PbLabel>& key,
                              bool pairing) {
  if (!pairing)
    return "(" + A.label(a1) + "," + A.label(a2) + ") -> " + A.label(key.first) +
           "⊗" + A.label(key.second);
  PbLabel y1{key.first.p, lvf_dual(key.first.b).first};
  PbLabel y2{key.second.p, lvf_dual(key.second.b).first};
  return "(" + A.label(a1) + "," + A.label(a2) + "; " + A.label(y1) + "," +
         A.label(y2) + ")";
}

}  // namespace detail

// All twelve completed bialgebra conditions (perm, Leibniz, and the seven
// mixed compatibilities), checked for every pair of box elements.  The
// condition tables are shared with the finite-dimensional checker; only the
// evaluator differs.
inline IdentityReport check_completed_conditions(
    const CompletedTensorBialgebra& A, const GradedOptions& opt) {
  if (opt.mode != "pairing" && opt.mode != "strong")
    throw precondition_error("mode must be 'pairing' or 'strong'");
  if (opt.mode == "strong" && opt.window < 2 * opt.box + 2)
    throw precondition_error("window rule violated: need N >= 2M+2");
  const long long M = opt.box;
  const bool pairing = opt.mode == "pairing";
  detail::CopCache cache(A, 2 * M + 1);

  std::vector<PbLabel> elems;
  for (std::size_t p = 0; p < A.poisson().dim(); ++p)
    for (long long i1 = -M; i1 <= M; ++i1)
      for (long long i2 = -M; i2 <= M; ++i2)
        for (int s : {1, 2}) elems.push_back({p, {i1, i2, s}});

  IdentityReport rep;
  for (const auto& cond : biterm::dpp_conditions()) {
    std::vector<std::vector<std::string>> found(elems.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= elems.size()) return;
        const PbLabel& a1 = elems[i];
        for (const PbLabel& a2 : elems) {
          PbTensor2 res;
          for (const auto& t : cond.terms)
            detail::pb_accumulate_term(A, cache, t, a1, a2, M, res);
          for (const auto& [key, c] : res) {
            if (c == 0) continue;
            if (!lvf_in_box(key.first.b, M) || !lvf_in_box(key.second.b, M))
              continue;
            found[i].push_back(
                detail::pb_witness(A, a1, a2, key, pairing));
          }
        }
      }
    };
    unsigned nthreads = std::min<unsigned>(graded_thread_count(),
                                           static_cast<unsigned>(elems.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    WitnessCollector wc(cond.id);
    for (const auto& w : found)
      for (const auto& s : w) wc.fail(s);
    rep.push_back(wc.take());
  }
  return rep;
}

// The six completed DPP coalgebra identities on P (x) LVF, via three-fold
// windowed compositions restricted to in-box final legs.
inline IdentityReport check_completed_coalgebra(
    const CompletedTensorBialgebra& A, const GradedOptions& opt) {
  const long long M = opt.box;
  const long long W = 2 * M + 1;  // intermediate legs of the compositions
  const bool pairing = opt.mode == "pairing";
  auto compose_first = [&](const std::string& outer, const std::string& inner,
                           const PbLabel& a) {
    PbTensor3 t;
    for (const auto& [key, c] : A.cop(inner, a, W, M))
      for (const auto& [key2, c2] : A.cop(outer, key.first, M, M)) {
        auto k = std::make_tuple(key2.first, key2.second, key.second);
        t[k] += c * c2;
        if (t[k] == 0) t.erase(k);
      }
    return t;
  };
  auto compose_second = [&](const std::string& outer, const std::string& inner,
                            const PbLabel& a) {
    PbTensor3 t;
    for (const auto& [key, c] : A.cop(inner, a, M, W))
      for (const auto& [key2, c2] : A.cop(outer, key.second, M, M)) {
        auto k = std::make_tuple(key.first, key2.first, key2.second);
        t[k] += c * c2;
        if (t[k] == 0) t.erase(k);
      }
    return t;
  };
  auto swap12 = [](const PbTensor3& t) {
    PbTensor3 s;
    for (const auto& [key, c] : t)
      s[{std::get<1>(key), std::get<0>(key), std::get<2>(key)}] += c;
    return s;
  };
  auto swap23 = [](const PbTensor3& t) {
    PbTensor3 s;
    for (const auto& [key, c] : t)
      s[{std::get<0>(key), std::get<2>(key), std::get<1>(key)}] += c;
    return s;
  };
  auto add = [](PbTensor3& into, const PbTensor3& t, int sign) {
    for (const auto& [key, c] : t) {
      into[key] += sign * c;
      if (into[key] == 0) into.erase(key);
    }
  };

  std::vector<PbLabel> elems;
  for (std::size_t p = 0; p < A.poisson().dim(); ++p)
    for (long long i1 = -M; i1 <= M; ++i1)
      for (long long i2 = -M; i2 <= M; ++i2)
        for (int s : {1, 2}) elems.push_back({p, {i1, i2, s}});

  struct Spec {
    std::string id;
    std::function<PbTensor3(const PbLabel&)> residual;
  };
  std::vector<Spec> specs;
  specs.push_back({"coperm.coassoc", [&](const PbLabel& a) {
                     PbTensor3 r = compose_first("nu", "nu", a);
                     add(r, compose_second("nu", "nu", a), -1);
                     return r;
                   }});
  specs.push_back({"coperm.left-cocomm", [&](const PbLabel& a) {
                     PbTensor3 r = compose_first("nu", "nu", a);
                     add(r, swap12(compose_second("nu", "nu", a)), -1);
                     return r;
                   }});
  specs.push_back({"coleib.identity", [&](const PbLabel& a) {
                     PbTensor3 l = compose_first("theta", "theta", a);
                     PbTensor3 r = l;
                     add(r, compose_second("theta", "theta", a), -1);
                     add(r, swap23(l), -1);
                     return r;
                   }});
  specs.push_back({"codpp.mixed.1", [&](const PbLabel& a) {
                     PbTensor3 rtn = compose_second("theta", "nu", a);
                     PbTensor3 r = compose_second("nu", "theta", a);
                     add(r, compose_first("theta", "nu", a), -1);
                     add(r, swap12(rtn), -1);
                     return r;
                   }});
  specs.push_back({"codpp.mixed.2", [&](const PbLabel& a) {
                     PbTensor3 rtn = compose_second("theta", "nu", a);
                     PbTensor3 r = compose_first("nu", "theta", a);
                     add(r, rtn, -1);
                     add(r, swap12(rtn), -1);
                     return r;
                   }});
  specs.push_back({"codpp.mixed.3", [&](const PbLabel& a) {
                     PbTensor3 l = compose_first("theta", "nu", a);
                     PbTensor3 r = l;
                     add(r, swap12(l), 1);
                     return r;
                   }});

  IdentityReport rep;
  for (const auto& spec : specs) {
    std::vector<std::vector<std::string>> found(elems.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= elems.size()) return;
        PbTensor3 res = spec.residual(elems[i]);
        for (const auto& [key, c] : res) {
          if (c == 0) continue;
          const auto& [k1, k2, k3] = key;
          if (!lvf_in_box(k1.b, M) || !lvf_in_box(k2.b, M) ||
              !lvf_in_box(k3.b, M))
            continue;
          if (pairing) {
            PbLabel y1{k1.p, lvf_dual(k1.b).first};
            PbLabel y2{k2.p, lvf_dual(k2.b).first};
            PbLabel y3{k3.p, lvf_dual(k3.b).first};
            found[i].push_back("(" + A.label(elems[i]) + "; " + A.label(y1) +
                               "," + A.label(y2) + "," + A.label(y3) + ")");
          } else {
            found[i].push_back("(" + A.label(elems[i]) + ") -> " +
                               A.label(k1) + "⊗" + A.label(k2) + "⊗" +
                               A.label(k3));
          }
        }
      }
    };
    unsigned nthreads = std::min<unsigned>(graded_thread_count(),
                                           static_cast<unsigned>(elems.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    WitnessCollector wc(spec.id);
    for (const auto& w : found)
      for (const auto& s : w) wc.fail(s);
    rep.push_back(wc.take());
  }
  return rep;
}

inline IdentityReport check_completed_bialgebra(
    const CompletedTensorBialgebra& A, const GradedOptions& opt) {
  IdentityReport rep = check_completed_coalgebra(A, opt);
  append(rep, check_completed_conditions(A, opt));
  return rep;
}

// --- windowed lift of a Poisson r-matrix -----------------------------------
// r_hat = sum_i sum_j (x_i (x) e_j) (x) (y_i (x) f_j) with {f_j} the
// omega-dual family; components with both legs in the box.
inline PbTensor2 lift_r_windowed(const Mat& r, long long box) {
  PbTensor2 out;
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t c = 0; c < r.cols(); ++c) {
      if (r(a, c) == 0) continue;
      for (long long i1 = -box; i1 <= box; ++i1)
        for (long long i2 = -box; i2 <= box; ++i2)
          for (int s : {1, 2}) {
            LvfLabel e{i1, i2, s};
            auto [f, cf] = lvf_dual(e);
            if (!lvf_in_box(f, box)) continue;
            auto key = std::make_pair(PbLabel{a, e}, PbLabel{c, f});
            out[key] += r(a, c) * cf;
            if (out[key] == 0) out.erase(key);
          }
    }
  return out;
}

// Yang-Baxter residuals of a windowed tensor over the graded algebra,
// asserted on in-box output triples.  Contributions to an in-box triple only
// involve components whose legs lie within box+1, so the in-box verdict is
// exact whenever the input tensor is complete there.
inline IdentityReport check_windowed_r(const CompletedTensorBialgebra& A,
                                       const PbTensor2& r, long long box,
                                       LybeSign sign = kDefaultLybeSign) {
  IdentityReport rep;
  auto contract = [&](const std::string& id,
                      const std::vector<std::tuple<int, std::string, int>>&
                          shapes) {
    // shapes: (sign, product role, placement): placements follow the finite
    // engine: 0 = (xi.xj, yi, yj), 1 = (xi, xj, yi.yj), 2 = (xj, xi.yj, yi),
    // 3 = (xi, yi.xj, yj), 4 = (xi.xj, yj, yi), 5 = (xj, xi, yi.yj)
    PbTensor3 res;
    for (const auto& [sg, role, shape] : shapes)
      for (const auto& [k1, c1] : r)
        for (const auto& [k2, c2] : r) {
          const PbLabel &xi = k1.first, &yi = k1.second, &xj = k2.first,
                        &yj = k2.second;
          PbElem prod;
          PbLabel l1, l2, l3;
          int slot = 0;  // which of the three legs carries the product
          switch (shape) {
            case 0: prod = A.mul(role, xi, xj); l2 = yi; l3 = yj; slot = 1; break;
            case 1: prod = A.mul(role, yi, yj); l1 = xi; l2 = xj; slot = 3; break;
            case 2: prod = A.mul(role, xi, yj); l1 = xj; l3 = yi; slot = 2; break;
            case 3: prod = A.mul(role, yi, xj); l1 = xi; l3 = yj; slot = 2; break;
            case 4: prod = A.mul(role, xi, xj); l2 = yj; l3 = yi; slot = 1; break;
            case 5: prod = A.mul(role, yi, yj); l1 = xj; l2 = xi; slot = 3; break;
          }
          for (const auto& [m, cm] : prod) {
            PbLabel a = slot == 1 ? m : l1;
            PbLabel b = slot == 2 ? m : l2;
            PbLabel c = slot == 3 ? m : l3;
            if (!lvf_in_box(a.b, box) || !lvf_in_box(b.b, box) ||
                !lvf_in_box(c.b, box))
              continue;
            auto key = std::make_tuple(a, b, c);
            res[key] += sg * c1 * c2 * cm;
            if (res[key] == 0) res.erase(key);
          }
        }
    WitnessCollector wc(id);
    for (const auto& [key, c] : res) {
      if (c == 0) continue;
      wc.fail(A.label(std::get<0>(key)) + "⊗" + A.label(std::get<1>(key)) +
              "⊗" + A.label(std::get<2>(key)) + " = " + to_string(c));
    }
    rep.push_back(wc.take());
  };
  // P_r = r12 o r23 - r13 o r23 + r12 o r13 - r13 o r12
  contract("pybe", {{1, "circ", 3}, {-1, "circ", 1}, {1, "circ", 0},
                    {-1, "circ", 4}});
  // L_r = r12 * r13 (+/-) r12 * r23 - r23 * r12 + r23 * r13
  contract("lybe", {{1, "star", 0},
                    {sign == LybeSign::Plus ? 1 : -1, "star", 3},
                    {-1, "star", 2},
                    {1, "star", 5}});
  return rep;
}

}  // namespace dppw
