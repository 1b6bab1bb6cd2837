#pragma once

// JSON document format, deterministic report serialization, and the recorded
// sign-convention transcript.  This header pulls in nlohmann/json from the
// vendored third-party directory; the rest of the library is independent of
// it.

#include <nlohmann/json.hpp>

#include "dppw/constructions.hpp"

namespace dppw {

using json = nlohmann::ordered_json;

// --- label lookup ----------------------------------------------------------
namespace detail {

inline std::size_t label_index(const std::vector<std::string>& basis,
                               const std::string& label) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw parse_error("unknown basis label: " + label);
}

}  // namespace detail

// --- documents -------------------------------------------------------------
// An algebra document bundles an algebra with its optional attachments: a
// bilinear form, coproducts, an r-matrix, and named operators.  Everything is
// label-addressed and rationals are serialized as strings ("p", "-p", "p/q"
// with q > 0); integers are accepted as shorthand on input.
struct OperatorDocument {
  Mat matrix;
  bool has_weight = false;
  Rational weight;
};

struct AlgebraDocument {
  Algebra algebra;
  bool has_form = false;
  Mat form;
  std::map<std::string, Coproduct> coproducts;
  bool has_rmatrix = false;
  Mat rmatrix;
  std::map<std::string, OperatorDocument> operators;

  BialgebraCandidate bialgebra() const {
    BialgebraCandidate b;
    b.algebra = algebra;
    b.coproducts = coproducts;
    return b;
  }
};

namespace detail {

inline Rational coeff_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw parse_error("rational values must be strings or integers");
}

// Sparse matrix over basis labels: list of {row, col, value}.
inline json matrix_to_json(const Mat& m, const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out.push_back({{"row", rows[i]},
                       {"col", cols[j]},
                       {"value", to_string(m(i, j))}});
  return out;
}

inline Mat matrix_from_json(const json& arr,
                            const std::vector<std::string>& rows,
                            const std::vector<std::string>& cols) {
  Mat m(rows.size(), cols.size());
  for (const auto& e : arr)
    m(label_index(rows, e.at("row").get<std::string>()),
      label_index(cols, e.at("col").get<std::string>())) =
        coeff_from_json(e.at("value"));
  return m;
}

// Two-tensor (r-matrix style): list of {left, right, coeff}.
inline json tensor2_to_json(const Mat& m,
                            const std::vector<std::string>& basis) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out.push_back({{"left", basis[i]},
                       {"right", basis[j]},
                       {"coeff", to_string(m(i, j))}});
  return out;
}

inline Mat tensor2_from_json(const json& arr,
                             const std::vector<std::string>& basis) {
  Mat m(basis.size(), basis.size());
  for (const auto& e : arr)
    m(label_index(basis, e.at("left").get<std::string>()),
      label_index(basis, e.at("right").get<std::string>())) =
        coeff_from_json(e.at("coeff"));
  return m;
}

}  // namespace detail

inline json algebra_document_to_json(const AlgebraDocument& doc) {
  const Algebra& a = doc.algebra;
  json out;
  out["name"] = a.name;
  out["kind"] = a.kind;
  out["basis"] = a.basis;
  json products = json::object();
  for (const auto& [role, c] : a.products) {
    json entries = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        json result = json::object();
        for (std::size_t k = 0; k < a.dim(); ++k)
          if (c(i, j, k) != 0) result[a.basis[k]] = to_string(c(i, j, k));
        if (!result.empty())
          entries.push_back({{"left", a.basis[i]},
                             {"right", a.basis[j]},
                             {"result", result}});
      }
    products[role] = entries;
  }
  out["products"] = products;
  if (doc.has_form)
    out["form"] = detail::matrix_to_json(doc.form, a.basis, a.basis);
  if (!doc.coproducts.empty()) {
    json cops = json::object();
    for (const auto& [role, cop] : doc.coproducts) {
      json entries = json::array();
      for (std::size_t k = 0; k < cop.dim(); ++k) {
        json terms = detail::tensor2_to_json(cop.images[k], cop.basis);
        if (!terms.empty())
          entries.push_back({{"element", cop.basis[k]}, {"terms", terms}});
      }
      cops[role] = entries;
    }
    out["coproducts"] = cops;
  }
  if (doc.has_rmatrix)
    out["rmatrix"] = detail::tensor2_to_json(doc.rmatrix, a.basis);
  if (!doc.operators.empty()) {
    json ops = json::object();
    for (const auto& [name, op] : doc.operators) {
      json o;
      o["matrix"] = detail::matrix_to_json(op.matrix, a.basis, a.basis);
      if (op.has_weight) o["weight"] = to_string(op.weight);
      ops[name] = o;
    }
    out["operators"] = ops;
  }
  return out;
}

inline AlgebraDocument algebra_document_from_json(const json& in) {
  AlgebraDocument doc;
  Algebra& a = doc.algebra;
  a.name = in.at("name").get<std::string>();
  a.kind = in.at("kind").get<std::string>();
  a.basis = in.at("basis").get<std::vector<std::string>>();
  std::size_t n = a.dim();
  // duplicate labels would make sparse label references ambiguous
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.basis[i] == a.basis[j])
        throw parse_error("duplicate basis label: " + a.basis[i]);
  for (const auto& [role, entries] : in.at("products").items()) {
    Tensor3 c(n);
    for (const auto& e : entries) {
      std::size_t i = detail::label_index(a.basis, e.at("left").get<std::string>());
      std::size_t j = detail::label_index(a.basis, e.at("right").get<std::string>());
      for (const auto& [label, v] : e.at("result").items())
        c(i, j, detail::label_index(a.basis, label)) = detail::coeff_from_json(v);
    }
    a.products[role] = c;
  }
  if (in.contains("form")) {
    doc.has_form = true;
    doc.form = detail::matrix_from_json(in.at("form"), a.basis, a.basis);
  }
  if (in.contains("coproducts"))
    for (const auto& [role, entries] : in.at("coproducts").items()) {
      Coproduct cop = Coproduct::zero(a.basis);
      for (const auto& e : entries)
        cop.images[detail::label_index(a.basis,
                                       e.at("element").get<std::string>())] =
            detail::tensor2_from_json(e.at("terms"), a.basis);
      doc.coproducts[role] = cop;
    }
  if (in.contains("rmatrix")) {
    doc.has_rmatrix = true;
    doc.rmatrix = detail::tensor2_from_json(in.at("rmatrix"), a.basis);
  }
  if (in.contains("operators"))
    for (const auto& [name, o] : in.at("operators").items()) {
      OperatorDocument op;
      op.matrix = detail::matrix_from_json(o.at("matrix"), a.basis, a.basis);
      if (o.contains("weight")) {
        op.has_weight = true;
        op.weight = detail::coeff_from_json(o.at("weight"));
      }
      doc.operators[name] = op;
    }
  return doc;
}

inline AlgebraDocument parse_algebra_document(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    return algebra_document_from_json(in);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad document: ") + e.what());
  }
}

// --- digests ---------------------------------------------------------------
// 64-bit FNV-1a over a canonical serialization; used to tie reports to their
// inputs without re-embedding the whole document.
inline std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

inline std::string document_digest(const AlgebraDocument& doc) {
  return fnv1a_digest(algebra_document_to_json(doc).dump());
}

// --- reports ---------------------------------------------------------------
inline json report_to_json(const IdentityReport& rep) {
  json out = json::array();
  for (const auto& r : rep) {
    json witnesses = r.witnesses;
    out.push_back({{"id", r.id},
                   {"status", r.pass ? "pass" : "fail"},
                   {"witnesses", witnesses}});
  }
  return out;
}

// Report envelope shared by all CLI commands and the bindings.
inline json make_report(const std::string& input_digest,
                        const IdentityReport& rep) {
  json out;
  out["tool_version"] = kToolVersion;
  out["input_digest"] = input_digest;
  out["identities"] = report_to_json(rep);
  out["all_pass"] = all_pass(rep);
  return out;
}

inline json classification_to_json(const Classification& c) {
  json out;
  out["solves_dpybe"] = c.solves_dpybe;
  out["quasi_triangular"] = c.quasi_triangular;
  out["triangular"] = c.triangular;
  out["factorizable"] = c.factorizable;
  out["det_I"] = to_string(c.det_I);
  out["lybe_sign"] = to_string(c.lybe_sign);
  return out;
}

inline json poisson_classification_to_json(const PoissonClassification& c) {
  json out;
  out["solves_poiybe"] = c.solves_poiybe;
  out["quasi_triangular"] = c.quasi_triangular;
  out["triangular"] = c.triangular;
  out["factorizable"] = c.factorizable;
  out["det_I"] = to_string(c.det_I);
  return out;
}

// --- sign-convention transcript --------------------------------------------
// The Leibniz-type Yang-Baxter equation appears in the source material with
// two incompatible signs on the r12*r23 term.  The tie is broken by a
// recorded oracle run: the canonical element rtilde of a bialgebra double
// must be a solution.  Exactly one convention achieves that on both recorded
// doubles, and that convention is the shipped default.  The committed file
// data/lybe_sign_transcript.json must be byte-identical to this function's
// output; a unit test enforces it.
inline json lybe_sign_transcript() {
  json out;
  out["tool_version"] = kToolVersion;
  out["purpose"] =
      "Resolve the sign of the r12*r23 term in the Leibniz-type Yang-Baxter "
      "equation by requiring the canonical double element rtilde to be a "
      "solution.";
  json runs = json::array();
  std::vector<std::pair<std::string, Algebra>> bases;
  {
    Algebra a2;
    a2.name = "A2";
    a2.kind = "dpp";
    a2.basis = {"e1", "e2"};
    Tensor3 c(2);
    c(1, 1, 0) = 1;
    a2.products["circ"] = c;
    a2.products["star"] = c;
    bases.emplace_back("A2", a2);

    Algebra p3;
    p3.name = "P3";
    p3.kind = "poisson";
    p3.basis = {"e1", "e2", "e3"};
    Tensor3 dot(3), br(3);
    dot(0, 0, 1) = 1;
    br(0, 2, 2) = 1;
    br(2, 0, 2) = -1;
    p3.products["dot"] = dot;
    p3.products["bracket"] = br;
    bases.emplace_back("P3", poisson_as_dpp(p3));
  }
  int viable_minus = 0, viable_plus = 0;
  for (const auto& [name, base] : bases) {
    BialgebraCandidate b;
    b.algebra = base;
    b.coproducts["nu"] = Coproduct::zero(base.basis);
    b.coproducts["theta"] = Coproduct::zero(base.basis);
    DoubleResult d = bialgebra_double(b);
    json run;
    run["double_of"] = name;
    run["pybe_residual_nonzero_entries"] =
        perm_residual(d.algebra, d.rtilde).residual.nonzero_count();
    for (LybeSign s : {LybeSign::Minus, LybeSign::Plus}) {
      std::size_t nz =
          leibniz_residual(d.algebra, d.rtilde, s).residual.nonzero_count();
      run[std::string("lybe_residual_nonzero_entries_") + to_string(s)] = nz;
      if (nz == 0) (s == LybeSign::Minus ? viable_minus : viable_plus) += 1;
    }
    runs.push_back(run);
  }
  out["runs"] = runs;
  out["viable_on_all_doubles"] = json::array();
  if (viable_minus == static_cast<int>(bases.size()))
    out["viable_on_all_doubles"].push_back("minus");
  if (viable_plus == static_cast<int>(bases.size()))
    out["viable_on_all_doubles"].push_back("plus");
  out["shipped_default"] = to_string(kDefaultLybeSign);
  return out;
}

inline std::string lybe_sign_transcript_text() {
  return lybe_sign_transcript().dump(2) + "\n";
}

}  // namespace dppw
