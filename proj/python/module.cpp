// Python bindings: the main operations, exchanged as JSON strings so the
// Python side stays schema-identical to the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dppw/catalog.hpp"

namespace py = pybind11;
using namespace dppw;

namespace {

LybeSign sign_of(const std::string& s) {
  if (s == "minus") return LybeSign::Minus;
  if (s == "plus") return LybeSign::Plus;
  if (s == "default") return kDefaultLybeSign;
  throw parse_error("unknown lybe sign: " + s);
}

std::string report_json(const AlgebraDocument& doc, const IdentityReport& rep,
                        const json& extra = json::object()) {
  json out = make_report(document_digest(doc), rep);
  for (auto it = extra.begin(); it != extra.end(); ++it)
    out[it.key()] = it.value();
  return out.dump(2);
}

std::string check(const std::string& what, const std::string& text) {
  AlgebraDocument doc = parse_algebra_document(text);
  const Algebra& a = doc.algebra;
  IdentityReport rep;
  if (what == "algebra") {
    rep = check_identities(a);
  } else if (what == "coalgebra") {
    rep = check_coalgebra(doc.bialgebra());
  } else if (what == "bialgebra") {
    rep = check_bialgebra(doc.bialgebra());
  } else if (what == "rep") {
    if (a.kind == "poisson") {
      append(rep, check_poisson_rep(poisson_regular_rep(a)));
      append(rep, check_poisson_rep(poisson_coregular_rep(a)));
    } else {
      append(rep, check_dpp_rep(regular_rep(a)));
      append(rep, check_dpp_rep(coregular_rep(a, "signed")));
    }
  } else if (what == "rb") {
    RbOperator rb{a, doc.operators.at("R").matrix,
                  doc.operators.at("R").weight};
    append(rep, check_rb(rb));
    append(rep, check_descendent_homomorphism(rb));
  } else if (what == "quadratic-rb") {
    QuadraticRb q{a, doc.form,
                  RbOperator{a, doc.operators.at("R").matrix,
                             doc.operators.at("R").weight}};
    append(rep, check_quadratic(a, doc.form));
    append(rep, check_quadratic_rb(q));
  } else if (what == "averaging") {
    rep = check_averaging(a, doc.operators.at("alpha").matrix);
  } else if (what == "o-operator") {
    const Mat& T = doc.operators.at("T").matrix;
    rep = a.kind == "poisson"
              ? check_o_operator_poisson(poisson_coregular_rep(a), T)
              : check_o_operator(coregular_rep(a, "signed"), T);
  } else {
    throw parse_error("unknown check target: " + what);
  }
  return report_json(doc, rep);
}

std::string ybe_classify(const std::string& text, const std::string& sign) {
  AlgebraDocument doc = parse_algebra_document(text);
  if (!doc.has_rmatrix) throw parse_error("document has no rmatrix");
  json out;
  if (doc.algebra.kind == "poisson")
    out = poisson_classification_to_json(
        classify_poisson(doc.algebra, doc.rmatrix));
  else
    out = classification_to_json(
        classify(doc.algebra, doc.rmatrix, sign_of(sign)));
  return out.dump(2);
}

std::string build_double(const std::string& text) {
  AlgebraDocument doc = parse_algebra_document(text);
  BialgebraCandidate b = doc.bialgebra();
  // absent coproducts mean the zero coproducts
  if (!b.coproducts.count("nu"))
    b.coproducts["nu"] = Coproduct::zero(b.algebra.basis);
  if (!b.coproducts.count("theta"))
    b.coproducts["theta"] = Coproduct::zero(b.algebra.basis);
  DoubleResult d = bialgebra_double(b);
  AlgebraDocument out;
  out.algebra = d.algebra;
  out.coproducts["nu"] = d.nu;
  out.coproducts["theta"] = d.theta;
  out.has_rmatrix = true;
  out.rmatrix = d.rtilde;
  return algebra_document_to_json(out).dump(2);
}

std::string build_tensor(const std::string& p_text, const std::string& b_text) {
  AlgebraDocument P = parse_algebra_document(p_text);
  AlgebraDocument B = parse_algebra_document(b_text);
  AlgebraDocument out;
  if (!P.coproducts.empty() && B.has_form) {
    BialgebraCandidate ind = induced_bialgebra(P.bialgebra(), B.algebra, B.form);
    out.algebra = ind.algebra;
    out.coproducts = ind.coproducts;
  } else {
    out.algebra = poisson_tensor_perm(P.algebra, B.algebra);
  }
  if (P.has_rmatrix && B.has_form) {
    out.has_rmatrix = true;
    out.rmatrix = lift_r(P.rmatrix, B.algebra, B.form);
  }
  return algebra_document_to_json(out).dump(2);
}

std::string graded_check(long long box, long long window,
                         const std::string& mode) {
  BialgebraCandidate pb;
  pb.algebra = detail::catalog_p3();
  auto pair = coboundary_poisson(pb.algebra, detail::catalog_p3_r());
  pb.coproducts["Delta"] = pair.first;
  pb.coproducts["delta"] = pair.second;
  CompletedTensorBialgebra A(pb);
  GradedOptions opt{box, window, mode};
  json out;
  out["tool_version"] = kToolVersion;
  out["box"] = box;
  out["window"] = window;
  out["mode"] = mode;
  out["identities"] = report_to_json(check_completed_bialgebra(A, opt));
  return out.dump(2);
}

std::string catalog_export(const std::string& name) {
  CatalogEntry e = catalog_entry(name);
  if (e.document.algebra.dim() == 0)
    return catalog_entry_to_json(e).dump(2);
  return algebra_document_to_json(e.document).dump(2);
}

std::string catalog_checks(const std::string& name) {
  CatalogEntry e = catalog_entry(name);
  return report_json(e.document, run_catalog_checks(e));
}

}  // namespace

PYBIND11_MODULE(_dppw, m) {
  m.doc() = "exact workbench for dual pre-Poisson structures";
  m.attr("__version__") = kToolVersion;
  m.attr("default_lybe_sign") = to_string(kDefaultLybeSign);

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);
  py::register_exception<singular_error>(m, "SingularError",
                                         PyExc_ArithmeticError);

  m.def("check", &check, py::arg("what"), py::arg("document"),
        "Run an identity suite on a JSON document; returns a JSON report.");
  m.def("ybe_classify", &ybe_classify, py::arg("document"),
        py::arg("lybe_sign") = "default",
        "Classify the document's rmatrix; returns JSON flags.");
  m.def("build_double", &build_double, py::arg("document"),
        "Bialgebra double with canonical rtilde; returns a JSON document.");
  m.def("build_tensor", &build_tensor, py::arg("poisson_document"),
        py::arg("perm_document"),
        "Poisson (x) perm tensor structure (with induced coproducts and the "
        "lifted rmatrix when the inputs carry them); returns a JSON "
        "document.");
  m.def("graded_check", &graded_check, py::arg("box") = 2,
        py::arg("window") = 6, py::arg("mode") = "pairing",
        "Verify the completed P3 (x) LVF bialgebra in a window.");
  m.def("catalog_list", [] { return catalog_names(); },
        "Names of the built-in catalog entries.");
  m.def("catalog_show",
        [](const std::string& n) { return catalog_show_text(catalog_entry(n)); },
        py::arg("name"), "Human-readable catalog entry.");
  m.def("catalog_export", &catalog_export, py::arg("name"),
        "Catalog entry as a JSON document.");
  m.def("catalog_checks", &catalog_checks, py::arg("name"),
        "Run a catalog entry's declared checks; returns a JSON report.");
  m.def("lybe_sign_transcript",
        [] { return lybe_sign_transcript_text(); },
        "The recorded sign-resolution transcript.");
}
