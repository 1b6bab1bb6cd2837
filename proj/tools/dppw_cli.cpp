// Command-line front end: structure checks, Yang-Baxter classification,
// constructions, graded (windowed) verification, and the built-in catalog.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dppw/catalog.hpp"

using namespace dppw;

namespace {

struct Options {
  std::string format = "text";
};

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_document(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw parse_error("cannot open output file: " + path);
  out << text;
}

void print_report_text(const IdentityReport& rep) {
  for (const auto& r : rep) {
    std::cout << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.id;
    if (!r.pass && !r.witnesses.empty()) {
      std::cout << "  witnesses:";
      for (const auto& w : r.witnesses) std::cout << " " << w;
    }
    std::cout << "\n";
  }
}

// Emit a report (with optional extra header fields) and return the exit code.
int emit_report(const Options& opt, const std::string& digest,
                const IdentityReport& rep, const json& extra = json::object(),
                const std::string& heading = "") {
  if (opt.format == "json") {
    json out = make_report(digest, rep);
    for (auto it = extra.begin(); it != extra.end(); ++it)
      out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
  } else {
    if (!heading.empty()) std::cout << heading << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it)
      std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
    print_report_text(rep);
    std::cout << (all_pass(rep) ? "all checks pass" : "CHECKS FAILED") << "\n";
  }
  return all_pass(rep) ? 0 : 1;
}

RbOperator rb_from_document(const AlgebraDocument& doc) {
  auto it = doc.operators.find("R");
  if (it == doc.operators.end())
    throw parse_error("document has no operator named \"R\"");
  RbOperator rb;
  rb.algebra = doc.algebra;
  rb.matrix = it->second.matrix;
  rb.weight = it->second.has_weight ? it->second.weight : Rational(0);
  return rb;
}

QuadraticRb qrb_from_document(const AlgebraDocument& doc) {
  if (!doc.has_form) throw parse_error("document has no bilinear form");
  QuadraticRb q;
  q.algebra = doc.algebra;
  q.omega = doc.form;
  q.R = rb_from_document(doc);
  return q;
}

Mat resolve_rmatrix(const AlgebraDocument& doc, const std::string& name) {
  if (!name.empty()) {
    auto it = doc.operators.find(name);
    if (it != doc.operators.end())
      return two_tensor_from_sharp(it->second.matrix);
  }
  if (doc.has_rmatrix) return doc.rmatrix;
  throw parse_error("document has no rmatrix" +
                    (name.empty() ? "" : " named \"" + name + "\""));
}

LybeSign parse_sign(const std::string& s) {
  if (s == "minus") return LybeSign::Minus;
  if (s == "plus") return LybeSign::Plus;
  if (s == "default") return kDefaultLybeSign;
  throw parse_error("unknown lybe sign: " + s + " (use minus|plus|default)");
}

IdentityResult residual_result(const YbeResidual& res) {
  WitnessCollector wc(res.equation_id);
  std::size_t n = res.residual.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (res.residual(i, j, k) != 0)
          wc.fail("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(k) + ") = " +
                  to_string(res.residual(i, j, k)));
  return wc.take();
}

IdentityReport run_check(const std::string& what, const AlgebraDocument& doc) {
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
    RbOperator rb = rb_from_document(doc);
    append(rep, check_rb(rb));
    append(rep, check_descendent_homomorphism(rb));
  } else if (what == "quadratic-rb") {
    QuadraticRb q = qrb_from_document(doc);
    append(rep, check_quadratic(a, doc.form));
    append(rep, check_quadratic_rb(q));
  } else if (what == "averaging") {
    auto it = doc.operators.find("alpha");
    if (it == doc.operators.end())
      throw parse_error("document has no operator named \"alpha\"");
    rep = check_averaging(a, it->second.matrix);
  } else if (what == "o-operator") {
    auto it = doc.operators.find("T");
    if (it == doc.operators.end())
      throw parse_error("document has no operator named \"T\"");
    if (a.kind == "poisson")
      rep = check_o_operator_poisson(poisson_coregular_rep(a),
                                     it->second.matrix);
    else
      rep = check_o_operator(coregular_rep(a, "signed"), it->second.matrix);
  } else {
    throw parse_error("unknown check target: " + what);
  }
  return rep;
}

std::string document_text(const AlgebraDocument& doc) {
  return algebra_document_to_json(doc).dump(2) + "\n";
}

BialgebraCandidate builtin_p3_bialgebra() {
  return detail::catalog_p3_bialgebra();
}

int cmd_graded(const Options& opt, const std::string& what, long long box,
               long long window, const std::string& mode) {
  if (what == "check") {
    CompletedTensorBialgebra A(builtin_p3_bialgebra());
    GradedOptions gopt{box, window, mode};
    IdentityReport rep = check_completed_bialgebra(A, gopt);
    json extra = {{"box", box}, {"window", window}, {"mode", mode}};
    return emit_report(opt, fnv1a_digest("graded:P3xLVF"), rep, extra,
                       "graded completed bialgebra (P3 (x) LVF)");
  }
  if (what == "nu") {
    json out = json::array();
    for (long long i1 = -box; i1 <= box; ++i1)
      for (long long i2 = -box; i2 <= box; ++i2)
        for (int s = 1; s <= 2; ++s) {
          LvfLabel b{i1, i2, s};
          for (const auto& [key, c] : nu_omega_windowed(b, window)) {
            if (c == 0) continue;
            if (opt.format == "json")
              out.push_back({{"element", to_string(b)},
                             {"left", to_string(key.first)},
                             {"right", to_string(key.second)},
                             {"coeff", to_string(c)}});
            else
              std::cout << "nu(" << to_string(b) << ") += " << to_string(c)
                        << " * (" << to_string(key.first) << ") (x) ("
                        << to_string(key.second) << ")\n";
          }
        }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (what == "lift") {
    PbTensor2 rhat = lift_r_windowed(detail::catalog_p3_r(), box);
    Algebra P = detail::catalog_p3();
    json out = json::array();
    for (const auto& [key, c] : rhat) {
      if (c == 0) continue;
      auto lbl = [&](const PbLabel& l) {
        return P.basis[l.p] + "(x)" + to_string(l.b);
      };
      if (opt.format == "json")
        out.push_back({{"left", lbl(key.first)},
                       {"right", lbl(key.second)},
                       {"coeff", to_string(c)}});
      else
        std::cout << "rhat += " << to_string(c) << " * (" << lbl(key.first)
                  << ") (x) (" << lbl(key.second) << ")\n";
    }
    if (opt.format == "json") std::cout << out.dump(2) << "\n";
    return 0;
  }
  throw parse_error("unknown graded subcommand: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for dual pre-Poisson structures"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format (json|text)")
      ->check(CLI::IsMember({"json", "text"}));

  // check <what> FILE...
  auto* check = app.add_subcommand("check", "verify identities of documents");
  std::string check_what;
  std::vector<std::string> check_files;
  check
      ->add_option("what", check_what,
                   "algebra|coalgebra|bialgebra|rep|rb|quadratic-rb|"
                   "averaging|o-operator")
      ->required();
  check->add_option("files", check_files, "input documents")->required();

  // ybe residual|classify FILE --rmatrix NAME [--lybe-sign S]
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residuals and classes");
  std::string ybe_what, ybe_file, ybe_rname, ybe_sign = "default";
  ybe->add_option("what", ybe_what, "residual|classify")->required();
  ybe->add_option("file", ybe_file, "input document")->required();
  ybe->add_option("--rmatrix", ybe_rname, "rmatrix name");
  ybe->add_option("--lybe-sign", ybe_sign, "minus|plus|default");

  // build <what> FILE [FILE2] -o OUT
  auto* build = app.add_subcommand("build", "derived constructions");
  std::string build_what, build_out = "-";
  std::vector<std::string> build_files;
  build
      ->add_option("what", build_what,
                   "double|semidirect|tensor|rb-double|from-qrb|lift-r|"
                   "descendent")
      ->required();
  build->add_option("files", build_files, "input documents")->required();
  build->add_option("-o,--output", build_out, "output path (default stdout)");

  // graded check|nu|lift --box M --window N --mode pairing|strong
  auto* graded = app.add_subcommand("graded", "windowed graded verification");
  std::string graded_what, graded_mode = "pairing";
  long long graded_box = 2, graded_window = 6;
  graded->add_option("what", graded_what, "check|nu|lift")->required();
  graded->add_option("--box", graded_box, "exponent box half-width M");
  graded->add_option("--window", graded_window, "evaluation window N");
  graded->add_option("--mode", graded_mode, "pairing|strong");

  // catalog list|show|export [NAME]
  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  std::string catalog_what, catalog_name;
  catalog->add_option("what", catalog_what, "list|show|export")->required();
  catalog->add_option("name", catalog_name, "entry name");

  // allow the global --format after a subcommand
  for (auto* sub : {check, ybe, build, graded, catalog}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      int worst = 0;
      for (const auto& f : check_files) {
        AlgebraDocument doc = load_document(f);
        IdentityReport rep = run_check(check_what, doc);
        int rc = emit_report(opt, document_digest(doc), rep, json::object(),
                             "check " + check_what + " " + f);
        worst = std::max(worst, rc);
      }
      return worst;
    }

    if (*ybe) {
      AlgebraDocument doc = load_document(ybe_file);
      Mat r = resolve_rmatrix(doc, ybe_rname);
      LybeSign sign = parse_sign(ybe_sign);
      json extra = {{"lybe_sign", to_string(sign)}};
      if (ybe_what == "residual") {
        IdentityReport rep;
        if (doc.algebra.kind == "poisson") {
          auto [A, C] = poisson_residuals(doc.algebra, r);
          rep.push_back(residual_result(A));
          rep.push_back(residual_result(C));
        } else {
          rep.push_back(residual_result(perm_residual(doc.algebra, r)));
          rep.push_back(
              residual_result(leibniz_residual(doc.algebra, r, sign)));
        }
        return emit_report(opt, document_digest(doc), rep, extra,
                           "ybe residual " + ybe_file);
      }
      if (ybe_what == "classify") {
        IdentityReport rep;
        json flags;
        if (doc.algebra.kind == "poisson") {
          PoissonClassification c = classify_poisson(doc.algebra, r);
          flags = poisson_classification_to_json(c);
        } else {
          Classification c = classify(doc.algebra, r, sign);
          flags = classification_to_json(c);
          if (c.quasi_triangular) {
            BialgebraCandidate b;
            b.algebra = doc.algebra;
            b.coproducts["nu"] = c.nu;
            b.coproducts["theta"] = c.theta;
            append(rep, check_bialgebra(b));
          }
        }
        WitnessCollector wc("ybe.solves");
        bool solves = flags.value("solves_dpybe", false) ||
                      flags.value("solves_poiybe", false);
        if (!solves) wc.fail("residuals are nonzero");
        rep.insert(rep.begin(), wc.take());
        extra["classification"] = flags;
        return emit_report(opt, document_digest(doc), rep, extra,
                           "ybe classify " + ybe_file);
      }
      throw parse_error("unknown ybe subcommand: " + ybe_what);
    }

    if (*build) {
      auto need = [&](std::size_t n) {
        if (build_files.size() != n)
          throw parse_error("build " + build_what + " expects " +
                            std::to_string(n) + " input document(s)");
      };
      AlgebraDocument out;
      if (build_what == "double") {
        need(1);
        AlgebraDocument doc = load_document(build_files[0]);
        BialgebraCandidate b = doc.bialgebra();
        // absent coproducts mean the zero coproducts
        if (!b.coproducts.count("nu"))
          b.coproducts["nu"] = Coproduct::zero(b.algebra.basis);
        if (!b.coproducts.count("theta"))
          b.coproducts["theta"] = Coproduct::zero(b.algebra.basis);
        DoubleResult d = bialgebra_double(b);
        out.algebra = d.algebra;
        out.coproducts["nu"] = d.nu;
        out.coproducts["theta"] = d.theta;
        out.has_rmatrix = true;
        out.rmatrix = d.rtilde;
      } else if (build_what == "semidirect") {
        need(1);
        AlgebraDocument doc = load_document(build_files[0]);
        out.algebra = semidirect_product(
            doc.algebra, coregular_rep(doc.algebra, "signed"));
      } else if (build_what == "tensor") {
        need(2);
        AlgebraDocument P = load_document(build_files[0]);
        AlgebraDocument B = load_document(build_files[1]);
        if (!P.coproducts.empty() && B.has_form) {
          BialgebraCandidate ind =
              induced_bialgebra(P.bialgebra(), B.algebra, B.form);
          out.algebra = ind.algebra;
          out.coproducts = ind.coproducts;
        } else {
          out.algebra = poisson_tensor_perm(P.algebra, B.algebra);
        }
      } else if (build_what == "rb-double") {
        need(1);
        RbSemidirect sd = rb_semidirect_r(rb_from_document(load_document(build_files[0])));
        out.algebra = sd.algebra;
        out.has_rmatrix = true;
        out.rmatrix = sd.r;
      } else if (build_what == "from-qrb") {
        need(1);
        AlgebraDocument doc = load_document(build_files[0]);
        QuadraticRb q = qrb_from_document(doc);
        out.algebra = doc.algebra;
        out.has_rmatrix = true;
        out.rmatrix = q.R.weight == 0 ? triangular_from_qrb0(q)
                                      : qrb_to_rmatrix(q);
      } else if (build_what == "lift-r") {
        need(2);
        AlgebraDocument P = load_document(build_files[0]);
        AlgebraDocument B = load_document(build_files[1]);
        if (!P.has_rmatrix) throw parse_error("first document needs rmatrix");
        if (!B.has_form) throw parse_error("second document needs form");
        out.algebra = poisson_tensor_perm(P.algebra, B.algebra);
        out.has_rmatrix = true;
        out.rmatrix = lift_r(P.rmatrix, B.algebra, B.form);
      } else if (build_what == "descendent") {
        need(1);
        out.algebra =
            descendent(rb_from_document(load_document(build_files[0])));
      } else {
        throw parse_error("unknown build target: " + build_what);
      }
      write_text(build_out, document_text(out));
      return 0;
    }

    if (*graded)
      return cmd_graded(opt, graded_what, graded_box, graded_window,
                        graded_mode);

    if (*catalog) {
      if (catalog_what == "list") {
        if (opt.format == "json") {
          json out = json::array();
          for (const auto& e : catalog_entries())
            out.push_back({{"name", e.name}, {"summary", e.summary}});
          std::cout << out.dump(2) << "\n";
        } else {
          for (const auto& e : catalog_entries())
            std::cout << e.name << "  -  " << e.summary << "\n";
        }
        return 0;
      }
      if (catalog_name.empty())
        throw parse_error("catalog " + catalog_what + " needs an entry name");
      CatalogEntry e = catalog_entry(catalog_name);
      if (catalog_what == "show") {
        if (opt.format == "json")
          std::cout << catalog_entry_to_json(e).dump(2) << "\n";
        else
          std::cout << catalog_show_text(e);
        return 0;
      }
      if (catalog_what == "export") {
        if (e.document.algebra.dim() == 0)
          std::cout << catalog_entry_to_json(e).dump(2) << "\n";
        else
          std::cout << document_text(e.document);
        return 0;
      }
      throw parse_error("unknown catalog subcommand: " + catalog_what);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const singular_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
