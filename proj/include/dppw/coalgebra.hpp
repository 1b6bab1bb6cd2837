#pragma once

#include <map>
#include <string>
#include <vector>

#include "dppw/algebra.hpp"

namespace dppw {

// A coproduct A -> A (x) A stored per basis element: images[k](i,j) is the
// coefficient of e_i (x) e_j in the image of e_k.
struct Coproduct {
  std::vector<std::string> basis;
  std::vector<Mat> images;

  std::size_t dim() const { return basis.size(); }

  static Coproduct zero(const std::vector<std::string>& basis) {
    Coproduct c;
    c.basis = basis;
    c.images.assign(basis.size(), Mat(basis.size(), basis.size()));
    return c;
  }

  // Image of an arbitrary element with coordinates u.
  Mat at(const std::vector<Rational>& u) const {
    Mat m(dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k)
      if (u[k] != 0) m += u[k] * images[k];
    return m;
  }

  bool operator==(const Coproduct& o) const {
    return basis == o.basis && images == o.images;
  }
};

// Candidate bialgebra: an algebra plus coproducts keyed by role.
// dpp: {nu, theta}; poisson: {Delta, delta}.
struct BialgebraCandidate {
  Algebra algebra;
  std::map<std::string, Coproduct> coproducts;

  const Coproduct& coproduct(const std::string& role) const {
    auto it = coproducts.find(role);
    if (it == coproducts.end())
      throw precondition_error("missing coproduct role '" + role + "'");
    return it->second;
  }
};

// Dualize a coproduct pair to an algebra on A*: the structure constants of
// the dual product are the transposed coproduct coefficients,
// (xi_i . xi_j)(e_k) = (xi_i (x) xi_j)(cop(e_k)).
inline Algebra transpose_to_algebra(const Coproduct& nu, const Coproduct& theta,
                                    const std::string& kind = "dpp") {
  Algebra a;
  a.kind = kind;
  a.name = "dual";
  a.basis = dual_labels(nu.basis);
  std::size_t n = nu.dim();
  Tensor3 c1(n), c2(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        c1(i, j, k) = nu.images[k](i, j);
        c2(i, j, k) = theta.images[k](i, j);
      }
  if (kind == "poisson") {
    a.products["dot"] = c1;
    a.products["bracket"] = c2;
  } else {
    a.products["circ"] = c1;
    a.products["star"] = c2;
  }
  return a;
}

namespace detail {

// (outer (x) id) inner, evaluated on e_k: component (a,b,c) =
// sum_m inner[k](m,c) * outer[m](a,b).
inline Tensor3 compose_left(const Coproduct& outer, const Coproduct& inner,
                            std::size_t k) {
  std::size_t n = inner.dim();
  Tensor3 t(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& f = inner.images[k](m, c);
      if (f == 0) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (outer.images[m](a, b) != 0) t(a, b, c) += f * outer.images[m](a, b);
    }
  return t;
}

// (id (x) outer) inner, evaluated on e_k: component (a,b,c) =
// sum_m inner[k](a,m) * outer[m](b,c).
inline Tensor3 compose_right(const Coproduct& outer, const Coproduct& inner,
                             std::size_t k) {
  std::size_t n = inner.dim();
  Tensor3 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& f = inner.images[k](a, m);
      if (f == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (outer.images[m](b, c) != 0) t(a, b, c) += f * outer.images[m](b, c);
    }
  return t;
}

template <typename F>
IdentityResult check_cop_elements(const std::vector<std::string>& basis,
                                  const std::string& id, F&& f) {
  WitnessCollector wc(id);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!f(k)) wc.fail("(" + basis[k] + ")");
  return wc.take();
}

}  // namespace detail

inline IdentityReport check_dpp_coalgebra(const Coproduct& nu,
                                          const Coproduct& theta) {
  using namespace detail;
  IdentityReport rep;
  const auto& basis = nu.basis;
  rep.push_back(check_cop_elements(basis, "coperm.coassoc", [&](std::size_t k) {
    return (compose_left(nu, nu, k) - compose_right(nu, nu, k)).is_zero();
  }));
  rep.push_back(
      check_cop_elements(basis, "coperm.left-cocomm", [&](std::size_t k) {
        return (compose_left(nu, nu, k) - compose_right(nu, nu, k).swap12())
            .is_zero();
      }));
  rep.push_back(check_cop_elements(basis, "coleib.identity", [&](std::size_t k) {
    Tensor3 l = compose_left(theta, theta, k);
    return (l - compose_right(theta, theta, k) - l.swap23()).is_zero();
  }));
  // (id(x)nu)theta = (theta(x)id)nu + (tau(x)id)(id(x)theta)nu
  rep.push_back(check_cop_elements(basis, "codpp.mixed.1", [&](std::size_t k) {
    Tensor3 rtn = compose_right(theta, nu, k);
    return (compose_right(nu, theta, k) - compose_left(theta, nu, k) -
            rtn.swap12())
        .is_zero();
  }));
  // (nu(x)id)theta = (id(x)theta)nu + (tau(x)id)(id(x)theta)nu
  rep.push_back(check_cop_elements(basis, "codpp.mixed.2", [&](std::size_t k) {
    Tensor3 rtn = compose_right(theta, nu, k);
    return (compose_left(nu, theta, k) - rtn - rtn.swap12()).is_zero();
  }));
  // (theta(x)id)nu = -(tau(x)id)(theta(x)id)nu
  rep.push_back(check_cop_elements(basis, "codpp.mixed.3", [&](std::size_t k) {
    Tensor3 l = compose_left(theta, nu, k);
    return (l + l.swap12()).is_zero();
  }));
  return rep;
}

inline IdentityReport check_poisson_coalgebra(const Coproduct& Delta,
                                              const Coproduct& delta) {
  using namespace detail;
  IdentityReport rep;
  const auto& basis = Delta.basis;
  rep.push_back(check_cop_elements(basis, "copoi.cocomm", [&](std::size_t k) {
    return (Delta.images[k] - Delta.images[k].transpose()).is_zero();
  }));
  rep.push_back(check_cop_elements(basis, "colie.coantisym", [&](std::size_t k) {
    return (delta.images[k] + delta.images[k].transpose()).is_zero();
  }));
  rep.push_back(check_cop_elements(basis, "copoi.coassoc", [&](std::size_t k) {
    return (compose_left(Delta, Delta, k) - compose_right(Delta, Delta, k))
        .is_zero();
  }));
  // (id(x)delta)delta - (tau(x)id)(id(x)delta)delta = (delta(x)id)delta
  rep.push_back(check_cop_elements(basis, "colie.cojacobi", [&](std::size_t k) {
    Tensor3 r = compose_right(delta, delta, k);
    return (r - r.swap12() - compose_left(delta, delta, k)).is_zero();
  }));
  // (id(x)Delta)delta = (delta(x)id)Delta + (tau(x)id)(id(x)delta)Delta
  rep.push_back(check_cop_elements(basis, "copoi.mixed", [&](std::size_t k) {
    return (compose_right(Delta, delta, k) - compose_left(delta, Delta, k) -
            compose_right(delta, Delta, k).swap12())
        .is_zero();
  }));
  return rep;
}

inline IdentityReport check_coalgebra(const BialgebraCandidate& b) {
  if (b.algebra.kind == "poisson")
    return check_poisson_coalgebra(b.coproduct("Delta"), b.coproduct("delta"));
  return check_dpp_coalgebra(b.coproduct("nu"), b.coproduct("theta"));
}

// ---------------------------------------------------------------------------
// Bialgebra condition engine.  Every bialgebra condition in this project is a
// signed sum of elementary terms
//     coeff * (P (x) Q) (sym(source coproduct value)), optionally twisted
// after the leg operators, where P and Q are linear combinations of left/right
// multiplication operators of one of the two arguments (or the identity).
// Transcribing all conditions into one table keeps the evaluator shared and
// localizes transcription mistakes.
// ---------------------------------------------------------------------------
namespace biterm {

enum class Op { Id, LCirc, RCirc, LStar, RStar };
enum class Sym { None, Plus, Minus, Twist };
enum class Src { A1, A2, ProdCirc, ProdStar, SymStar };

struct LegPiece {
  Rational coeff;
  Op op;
  int arg;  // 1 or 2; ignored for Id
};
using Leg = std::vector<LegPiece>;

struct Term {
  Rational coeff;
  std::string role;  // coproduct role, e.g. "nu"
  Src src;
  Sym sym = Sym::None;
  Leg left, right;  // empty leg means identity
  bool post_twist = false;
};

struct Condition {
  std::string id;
  std::vector<Term> terms;  // identity: sum of terms == 0
};

inline Leg id_leg() { return {}; }
inline Leg leg(Op o, int arg) { return {{Rational(1), o, arg}}; }
inline Leg leg2(const Rational& c1, Op o1, int a1, const Rational& c2, Op o2,
                int a2) {
  return {{c1, o1, a1}, {c2, o2, a2}};
}

// Operator roles for the engine: for DPP algebras LCirc/RCirc act through
// "circ" and LStar/RStar through "star"; for Poisson algebras "dot"/"bracket".
struct OpTable {
  std::string circ_role, star_role;
};

inline Mat leg_matrix(const Algebra& alg, const OpTable& ops, const Leg& l,
                      std::size_t i, std::size_t j) {
  std::size_t n = alg.dim();
  if (l.empty()) return Mat::identity(n);
  Mat m(n, n);
  for (const auto& p : l) {
    std::size_t arg = p.arg == 1 ? i : j;
    Mat base;
    switch (p.op) {
      case Op::Id: base = Mat::identity(n); break;
      case Op::LCirc: base = alg.lmul(ops.circ_role, arg); break;
      case Op::RCirc: base = alg.rmul(ops.circ_role, arg); break;
      case Op::LStar: base = alg.lmul(ops.star_role, arg); break;
      case Op::RStar: base = alg.rmul(ops.star_role, arg); break;
    }
    m += p.coeff * base;
  }
  return m;
}

inline Mat eval_term(const BialgebraCandidate& b, const OpTable& ops,
                     const Term& t, std::size_t i, std::size_t j) {
  const Algebra& alg = b.algebra;
  const Coproduct& cop = b.coproduct(t.role);
  Mat m0;
  switch (t.src) {
    case Src::A1: m0 = cop.images[i]; break;
    case Src::A2: m0 = cop.images[j]; break;
    case Src::ProdCirc: m0 = cop.at(alg.mul(ops.circ_role, i, j)); break;
    case Src::ProdStar: m0 = cop.at(alg.mul(ops.star_role, i, j)); break;
    case Src::SymStar:
      m0 = cop.at(detail::vadd(alg.mul(ops.star_role, i, j),
                               alg.mul(ops.star_role, j, i)));
      break;
  }
  switch (t.sym) {
    case Sym::None: break;
    case Sym::Plus: m0 += m0.transpose(); break;
    case Sym::Minus: m0 -= m0.transpose(); break;
    case Sym::Twist: m0 = m0.transpose(); break;
  }
  Mat s = leg_matrix(alg, ops, t.left, i, j);
  Mat tt = leg_matrix(alg, ops, t.right, i, j);
  Mat m = s * m0 * tt.transpose();
  if (t.post_twist) m = m.transpose();
  return t.coeff * m;
}

// The DPP bialgebra conditions: three perm-bialgebra families, two
// Leibniz-bialgebra families, and the seven mixed compatibility conditions.
inline const std::vector<Condition>& dpp_conditions() {
  using enum Op;
  using enum Sym;
  using enum Src;
  static const std::vector<Condition> conds = [] {
    std::vector<Condition> v;
    Rational one = 1, neg = -1;
    auto T = [](Rational c, const char* role, Src s, Sym sy, Leg l, Leg r,
                bool pt = false) {
      return Term{std::move(c), role, s, sy, std::move(l), std::move(r), pt};
    };
    // pb.1: (r(a1)(x)id)nu(a2) = tau((r(a2)(x)id)nu(a1))
    v.push_back({"pb.1",
                 {T(one, "nu", A2, None, leg(RCirc, 1), id_leg()),
                  T(neg, "nu", A1, None, leg(RCirc, 2), id_leg(), true)}});
    // pb.2: nu(a1 o a2) = ((l-r)(a1)(x)id)nu(a2) + (id(x)r(a2))nu(a1)
    v.push_back({"pb.2",
                 {T(one, "nu", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "nu", A2, None, leg2(1, LCirc, 1, -1, RCirc, 1), id_leg()),
                  T(neg, "nu", A1, None, id_leg(), leg(RCirc, 2))}});
    // pb.3: nu(a1 o a2) = (id(x)l(a1))nu(a2) + ((l-r)(a2)(x)id)(nu - tau nu)(a1)
    v.push_back({"pb.3",
                 {T(one, "nu", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "nu", A2, None, id_leg(), leg(LCirc, 1)),
                  T(neg, "nu", A1, Minus, leg2(1, LCirc, 2, -1, RCirc, 2), id_leg())}});
    // lb.1: tau((lfr(a2)(x)id)theta(a1)) = (lfr(a1)(x)id)theta(a2)
    v.push_back({"lb.1",
                 {T(one, "theta", A1, None, leg(RStar, 2), id_leg(), true),
                  T(neg, "theta", A2, None, leg(RStar, 1), id_leg())}});
    // lb.2: theta(a1*a2) = (id(x)lfr(a2) - (lfl+lfr)(a2)(x)id)((id+tau)theta(a1))
    //                      + (id(x)lfl(a1) + lfl(a1)(x)id)theta(a2)
    v.push_back({"lb.2",
                 {T(one, "theta", ProdStar, None, id_leg(), id_leg()),
                  T(neg, "theta", A1, Plus, id_leg(), leg(RStar, 2)),
                  T(one, "theta", A1, Plus, leg2(1, LStar, 2, 1, RStar, 2), id_leg()),
                  T(neg, "theta", A2, None, id_leg(), leg(LStar, 1)),
                  T(neg, "theta", A2, None, leg(LStar, 1), id_leg())}});
    // dpbi.1: nu(a1*a2) = (id(x)lfl(a1) + lfl(a1)(x)id)nu(a2)
    //   + ((l-r)(a2)(x)id - id(x)r(a2))((theta + tau theta)(a1))
    v.push_back({"dpbi.1",
                 {T(one, "nu", ProdStar, None, id_leg(), id_leg()),
                  T(neg, "nu", A2, None, id_leg(), leg(LStar, 1)),
                  T(neg, "nu", A2, None, leg(LStar, 1), id_leg()),
                  T(neg, "theta", A1, Plus, leg2(1, LCirc, 2, -1, RCirc, 2), id_leg()),
                  T(one, "theta", A1, Plus, id_leg(), leg(RCirc, 2))}});
    // dpbi.2: theta(a1 o a2) = (id(x)l(a1))theta(a2) + (id(x)r(a2))theta(a1)
    //   - ((lfl+lfr)(a1)(x)id)nu(a2) - ((lfl+lfr)(a2)(x)id)((nu - tau nu)(a1))
    v.push_back({"dpbi.2",
                 {T(one, "theta", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "theta", A2, None, id_leg(), leg(LCirc, 1)),
                  T(neg, "theta", A1, None, id_leg(), leg(RCirc, 2)),
                  T(one, "nu", A2, None, leg2(1, LStar, 1, 1, RStar, 1), id_leg()),
                  T(one, "nu", A1, Minus, leg2(1, LStar, 2, 1, RStar, 2), id_leg())}});
    // dpbi.3: (id(x)lfr(a1))(tau(nu(a2))) = -(r(a2)(x)id)theta(a1)
    v.push_back({"dpbi.3",
                 {T(one, "nu", A2, Twist, id_leg(), leg(RStar, 1)),
                  T(one, "theta", A1, None, leg(RCirc, 2), id_leg())}});
    // dpbi.4: nu(a1*a2) = (id(x)l(a1) - l(a1)(x)id)theta(a2)
    //   + (id(x)lfr(a2) - (lfl+lfr)(a2)(x)id)((nu - tau nu)(a1))
    v.push_back({"dpbi.4",
                 {T(one, "nu", ProdStar, None, id_leg(), id_leg()),
                  T(neg, "theta", A2, None, id_leg(), leg(LCirc, 1)),
                  T(one, "theta", A2, None, leg(LCirc, 1), id_leg()),
                  T(neg, "nu", A1, Minus, id_leg(), leg(RStar, 2)),
                  T(one, "nu", A1, Minus, leg2(1, LStar, 2, 1, RStar, 2), id_leg())}});
    // dpbi.5: (theta + tau theta)(a1 o a2) =
    //     (id(x)l(a1))((theta + tau theta)(a2))
    //   + (id(x)l(a2))((theta + tau theta)(a1))
    //   - (lfl(a1)(x)id)((nu - tau nu)(a2)) - (lfl(a2)(x)id)((nu - tau nu)(a1))
    v.push_back({"dpbi.5",
                 {T(one, "theta", ProdCirc, Plus, id_leg(), id_leg()),
                  T(neg, "theta", A2, Plus, id_leg(), leg(LCirc, 1)),
                  T(neg, "theta", A1, Plus, id_leg(), leg(LCirc, 2)),
                  T(one, "nu", A2, Minus, leg(LStar, 1), id_leg()),
                  T(one, "nu", A1, Minus, leg(LStar, 2), id_leg())}});
    // dpbi.6: theta(a1 o a2) = (l(a1)(x)id)theta(a2)
    //   - (id(x)lfr(a2))((nu - tau nu)(a1)) + (id(x)lfl(a1))nu(a2)
    //   + ((l-r)(a2)(x)id)((theta + tau theta)(a1))
    v.push_back({"dpbi.6",
                 {T(one, "theta", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "theta", A2, None, leg(LCirc, 1), id_leg()),
                  T(one, "nu", A1, Minus, id_leg(), leg(RStar, 2)),
                  T(neg, "nu", A2, None, id_leg(), leg(LStar, 1)),
                  T(neg, "theta", A1, Plus, leg2(1, LCirc, 2, -1, RCirc, 2), id_leg())}});
    // dpbi.7: nu(a1*a2 + a2*a1) = (id(x)(lfl+lfr)(a1))nu(a2)
    //   + ((lfl+lfr)(a1)(x)id)(tau(nu(a2)))
    //   + (id(x)(l-r)(a2))theta(a1) + ((l-r)(a2)(x)id)(tau(theta(a1)))
    v.push_back({"dpbi.7",
                 {T(one, "nu", SymStar, None, id_leg(), id_leg()),
                  T(neg, "nu", A2, None, id_leg(), leg2(1, LStar, 1, 1, RStar, 1)),
                  T(neg, "nu", A2, Twist, leg2(1, LStar, 1, 1, RStar, 1), id_leg()),
                  T(neg, "theta", A1, None, id_leg(), leg2(1, LCirc, 2, -1, RCirc, 2)),
                  T(neg, "theta", A1, Twist, leg2(1, LCirc, 2, -1, RCirc, 2), id_leg())}});
    return v;
  }();
  return conds;
}

// Poisson bialgebra conditions: infinitesimal bialgebra, Lie bialgebra, and
// the two mixed compatibilities.  Here LCirc acts by the commutative product
// and LStar by the bracket.
inline const std::vector<Condition>& poisson_conditions() {
  using enum Op;
  using enum Sym;
  using enum Src;
  static const std::vector<Condition> conds = [] {
    std::vector<Condition> v;
    Rational one = 1, neg = -1;
    auto T = [](Rational c, const char* role, Src s, Sym sy, Leg l, Leg r) {
      return Term{std::move(c), role, s, sy, std::move(l), std::move(r), false};
    };
    // poi.inf: Delta(a1 a2) = (u(a2)(x)id)Delta(a1) + (id(x)u(a1))Delta(a2)
    v.push_back({"poi.inf",
                 {T(one, "Delta", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "Delta", A1, None, leg(LCirc, 2), id_leg()),
                  T(neg, "Delta", A2, None, id_leg(), leg(LCirc, 1))}});
    // poi.lie: delta([a1,a2]) = (ad(a1)(x)id + id(x)ad(a1))delta(a2)
    //                          - (ad(a2)(x)id + id(x)ad(a2))delta(a1)
    v.push_back({"poi.lie",
                 {T(one, "delta", ProdStar, None, id_leg(), id_leg()),
                  T(neg, "delta", A2, None, leg(LStar, 1), id_leg()),
                  T(neg, "delta", A2, None, id_leg(), leg(LStar, 1)),
                  T(one, "delta", A1, None, leg(LStar, 2), id_leg()),
                  T(one, "delta", A1, None, id_leg(), leg(LStar, 2))}});
    // poi.mixed.1: Delta([a1,a2]) = (ad(a1)(x)id + id(x)ad(a1))Delta(a2)
    //   + (u(a2)(x)id - id(x)u(a2))delta(a1)
    v.push_back({"poi.mixed.1",
                 {T(one, "Delta", ProdStar, None, id_leg(), id_leg()),
                  T(neg, "Delta", A2, None, leg(LStar, 1), id_leg()),
                  T(neg, "Delta", A2, None, id_leg(), leg(LStar, 1)),
                  T(neg, "delta", A1, None, leg(LCirc, 2), id_leg()),
                  T(one, "delta", A1, None, id_leg(), leg(LCirc, 2))}});
    // poi.mixed.2: delta(a1 a2) = (u(a1)(x)id)delta(a2) + (u(a2)(x)id)delta(a1)
    //   + (id(x)ad(a1))Delta(a2) + (id(x)ad(a2))Delta(a1)
    v.push_back({"poi.mixed.2",
                 {T(one, "delta", ProdCirc, None, id_leg(), id_leg()),
                  T(neg, "delta", A2, None, leg(LCirc, 1), id_leg()),
                  T(neg, "delta", A1, None, leg(LCirc, 2), id_leg()),
                  T(neg, "Delta", A2, None, id_leg(), leg(LStar, 1)),
                  T(neg, "Delta", A1, None, id_leg(), leg(LStar, 2))}});
    return v;
  }();
  return conds;
}

}  // namespace biterm

inline IdentityReport check_bialgebra_conditions(const BialgebraCandidate& b) {
  const bool poisson = b.algebra.kind == "poisson";
  biterm::OpTable ops = poisson ? biterm::OpTable{"dot", "bracket"}
                                : biterm::OpTable{"circ", "star"};
  const auto& conds =
      poisson ? biterm::poisson_conditions() : biterm::dpp_conditions();
  IdentityReport rep;
  std::size_t n = b.algebra.dim();
  for (const auto& cond : conds) {
    WitnessCollector wc(cond.id);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Mat res(n, n);
        for (const auto& t : cond.terms) res += biterm::eval_term(b, ops, t, i, j);
        if (!res.is_zero())
          wc.fail("(" + b.algebra.basis[i] + "," + b.algebra.basis[j] + ")");
      }
    rep.push_back(wc.take());
  }
  return rep;
}

// Full bialgebra check with prerequisite gating: if the algebra or coalgebra
// check fails, the report marks the prerequisites and skips the conditions so
// failure causes stay unambiguous.
inline IdentityReport check_bialgebra(const BialgebraCandidate& b) {
  IdentityReport rep;
  IdentityReport alg = check_identities(b.algebra);
  IdentityReport coa = check_coalgebra(b);
  if (!all_pass(alg) || !all_pass(coa)) {
    WitnessCollector wc("bialgebra.prerequisites");
    for (const auto& r : alg)
      if (!r.pass) wc.fail("algebra check failed: " + r.id);
    for (const auto& r : coa)
      if (!r.pass) wc.fail("coalgebra check failed: " + r.id);
    append(rep, alg);
    append(rep, coa);
    rep.push_back(wc.take());
    return rep;
  }
  append(rep, alg);
  append(rep, coa);
  append(rep, check_bialgebra_conditions(b));
  return rep;
}

}  // namespace dppw
