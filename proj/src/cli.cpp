#include "fanohs/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fanohs/catalog.hpp"
#include "fanohs/hilbert.hpp"
#include "fanohs/volmin.hpp"

namespace fanohs::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct LoadedInput {
  FanoPolytope polytope;
  PolarPolytope polar;
};

LoadedInput load_input(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    const CatalogEntry& e = catalog_get(source.substr(8));
    return {e.polytope, e.polar};
  }
  std::ifstream in(source);
  if (!in) throw DomainError("cannot open input file '" + source + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError("bad json in '" + source + "': " + ex.what());
  }
  LoadedInput li;
  li.polytope = polytope_from_json(j);
  li.polar = polar_dual(li.polytope);
  check_polar_override(j, li.polar);
  return li;
}

QVec parse_at(const std::string& text, int m) {
  QVec out;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  }
  if (out.empty()) out.assign(static_cast<std::size_t>(m), rat(0));
  if (static_cast<int>(out.size()) != m) {
    throw DomainError("--at expects " + std::to_string(m) + " coordinates");
  }
  return out;
}

std::vector<std::string> qvec_strings(const QVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string linear_form_latex(const QVec& coeffs) {
  static const char* const names[] = {"\\alpha", "\\beta", "\\gamma",
                                      "\\delta"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Rational a = abs(coeffs[i]);
    if (!first) os << (coeffs[i] > 0 ? "+" : "-");
    else if (coeffs[i] < 0) os << "-";
    if (a != 1) os << to_string(a);
    os << (i < 4 ? names[i] : "a_" + std::to_string(i + 1));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ojson span_json(const SpanReport& span) {
  ojson out;
  out["rank"] = span.rank;
  ojson basis = ojson::array();
  for (const auto& row : span.basis) {
    ojson v = ojson::array();
    for (auto x : primitive_integer_vector(row, true)) v.push_back(std::to_string(x));
    basis.push_back(v);
  }
  out["basis"] = basis;
  ojson membership = ojson::object();
  for (const auto& [i, coeffs] : span.membership) {
    membership[std::to_string(i)] = qvec_strings(coeffs);
  }
  out["membership"] = membership;
  return out;
}

// Rescales membership coefficients so they expand the primitive basis rather
// than the raw elimination rows.
SpanReport primitive_span(const SpanReport& span) {
  SpanReport out = span;
  for (std::size_t k = 0; k < span.basis.size(); ++k) {
    IntVec prim = primitive_integer_vector(span.basis[k], true);
    // basis_k = factor * prim
    Rational factor = 0;
    for (std::size_t i = 0; i < prim.size(); ++i) {
      if (prim[i] != 0) {
        factor = Rational(span.basis[k][i] / rat(prim[i]));
        break;
      }
    }
    out.basis[k] = to_qvec(prim);
    for (auto& [i, coeffs] : out.membership) coeffs[k] *= factor;
  }
  return out;
}

int cmd_verify_all(std::ostream& out, std::uint64_t seed);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hilbert series, Laurent coefficient gradients, localization "
               "invariants and volume minimization for smooth Fano lattice "
               "polytopes"};
  app.require_subcommand(1);

  std::string input, at_text, format = "json", weights_file;
  int order = 1;
  long level = 1;
  int samples = 5;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-10;
  int max_iter = 200;
  std::string seed_point;
  bool derived = false, compare = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "polytope json file or catalog:NAME")
        ->required();
  };

  auto* c_validate = app.add_subcommand("validate", "run the polytope checks");
  add_input(c_validate);
  c_validate->add_option("--format", format, "json|text");

  auto* c_polar = app.add_subcommand("polar", "polar dual with edge data");
  add_input(c_polar);

  auto* c_hilbert =
      app.add_subcommand("hilbert", "vertex-term shape of the Hilbert series");
  add_input(c_hilbert);
  c_hilbert->add_option("--format", format, "json|latex");

  auto* c_brion = app.add_subcommand(
      "brion", "check the lattice-sum/vertex-sum identity at sample points");
  add_input(c_brion);
  c_brion->add_option("--level", level, "dilation level l >= 1");
  c_brion->add_option("--samples", samples, "number of sample points");
  c_brion->add_option("--seed", seed, "sampling seed");

  auto* c_coeffs =
      app.add_subcommand("coeffs", "Laurent coefficients C_i at a slice point");
  add_input(c_coeffs);
  c_coeffs->add_option("--at", at_text, "slice point, comma-separated rationals");
  c_coeffs->add_option("--order", order, "highest coefficient order N");
  c_coeffs->add_option("--seed", seed, "direction seed");
  c_coeffs->add_option("--format", format, "json|latex|text");

  auto* c_grad = app.add_subcommand("grad", "gradients of the C_i");
  add_input(c_grad);
  c_grad->add_option("--at", at_text, "slice point");
  c_grad->add_option("--order", order, "highest coefficient order N");
  c_grad->add_option("--seed", seed, "direction seed");
  c_grad->add_option("--format", format, "json|text");

  auto* c_rank =
      app.add_subcommand("rank", "rank and basis of the gradient span");
  add_input(c_rank);
  c_rank->add_option("--at", at_text, "slice point");
  c_rank->add_option("--order", order, "highest coefficient order N");
  c_rank->add_option("--seed", seed, "direction seed");
  c_rank->add_option("--format", format, "json|text");

  auto* c_localize =
      app.add_subcommand("localize", "localization integral invariants");
  add_input(c_localize);
  c_localize->add_option("--weights", weights_file,
                         "fixed-point weight json (user mode)");
  c_localize->add_flag("--derived", derived,
                       "derive fixed points from the polar vertices");
  c_localize->add_flag("--compare", compare,
                       "compare against the gradient span");
  c_localize->add_option("--seed", seed, "interpolation seed");
  c_localize->add_option("--format", format, "json|latex");

  auto* c_volmin =
      app.add_subcommand("volmin", "minimize the normalized volume");
  add_input(c_volmin);
  c_volmin->add_option("--tol", tol, "gradient norm tolerance");
  c_volmin->add_option("--max-iter", max_iter, "iteration cap");
  c_volmin->add_option("--seed-point", seed_point,
                       "initial point, comma-separated");

  auto* c_catalog = app.add_subcommand("catalog", "built-in polytopes");
  auto* c_list = c_catalog->add_subcommand("list", "names");
  auto* c_show = c_catalog->add_subcommand("show", "entry data");
  std::string show_name;
  c_show->add_option("name", show_name, "entry name")->required();
  auto* c_verify =
      c_catalog->add_subcommand("verify-all", "run every golden check");
  c_verify->add_option("--seed", seed, "direction seed");
  c_catalog->require_subcommand(1);

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("fanohs");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here.
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c_validate->parsed()) {
      ValidationReport rep =
          validate(input.rfind("catalog:", 0) == 0
                       ? catalog_get(input.substr(8)).polytope
                       : [&] {
                           std::ifstream in(input);
                           if (!in) {
                             throw DomainError("cannot open input file '" +
                                               input + "'");
                           }
                           nlohmann::json j;
                           in >> j;
                           return polytope_from_json(j);
                         }());
      ojson o;
      o["pass"] = rep.pass();
      o["origin_interior"] = rep.origin_interior;
      o["primitive"] = rep.primitive;
      o["reflexive"] = rep.reflexive;
      o["delzant"] = rep.delzant;
      ojson issues = ojson::array();
      for (const auto& is : rep.issues) {
        issues.push_back(
            {{"check", is.check}, {"index", is.index}, {"detail", is.detail}});
      }
      o["issues"] = issues;
      if (format == "text") {
        out << (rep.pass() ? "pass" : "FAIL") << "\n";
        for (const auto& is : rep.issues) {
          out << "  [" << is.check << "] " << is.detail << "\n";
        }
      } else {
        out << o.dump(2) << "\n";
      }
      return rep.pass() ? 0 : 1;
    }

    if (c_polar->parsed()) {
      LoadedInput li = load_input(input);
      out << ojson(polar_to_json(li.polar)).dump(2) << "\n";
      return 0;
    }

    if (c_hilbert->parsed()) {
      LoadedInput li = load_input(input);
      if (format == "latex") {
        out << vertex_terms_latex(li.polar) << "\n";
      } else {
        out << ojson(vertex_terms_json(li.polar)).dump(2) << "\n";
      }
      return 0;
    }

    if (c_brion->parsed()) {
      LoadedInput li = load_input(input);
      Rng rng(seed);
      ojson pts = ojson::array();
      bool all_equal = true;
      int done = 0, attempts = 0;
      while (done < samples) {
        if (++attempts > 50 * samples) {
          throw InternalConsistencyError("could not sample pole-free points");
        }
        QVec x = rng.sample_point(li.polar.m);
        try {
          bool okpt = brion_check(li.polar, level, RationalPoint(x));
          all_equal = all_equal && okpt;
          pts.push_back({{"x", qvec_strings(x)}, {"equal", okpt}});
          ++done;
        } catch (const PoleError&) {
          continue;
        }
      }
      ojson o;
      o["level"] = level;
      o["count"] =
          static_cast<long>(lattice_points(li.polar, level).points.size());
      o["samples"] = pts;
      o["all_equal"] = all_equal;
      out << o.dump(2) << "\n";
      if (!all_equal) {
        err << "brion identity failed\n";
        return 2;
      }
      return 0;
    }

    if (c_coeffs->parsed() || c_grad->parsed() || c_rank->parsed()) {
      LoadedInput li = load_input(input);
      QVec at = parse_at(at_text, li.polar.m);
      ReebVector b{at};
      ojson o;
      o["at"] = qvec_strings(at);
      o["order"] = order;
      if (c_coeffs->parsed()) {
        CoefficientTable table = coefficient_values(li.polar, b, order, seed);
        ojson vals = ojson::object();
        for (const auto& [i, v] : table.values) {
          vals[std::to_string(i)] = to_string(v);
        }
        o["coefficients"] = vals;
        if (format == "latex") {
          std::ostringstream os;
          bool first = true;
          for (const auto& [i, v] : table.values) {
            if (!first) os << " + ";
            os << "\\left(" << to_string(v) << "\\right) t^{" << i << "}";
            first = false;
          }
          out << os.str() << "\n";
          return 0;
        }
        if (format == "text") {
          for (const auto& [i, v] : table.values) {
            out << "C_{" << i << "} = " << to_string(v) << "\n";
          }
          return 0;
        }
      } else {
        GradientTable g = coefficient_gradients(li.polar, b, order, seed);
        if (c_grad->parsed()) {
          if (format == "text") {
            for (const auto& [i, v] : g.gradients) {
              out << "grad C_{" << i << "} = (";
              for (std::size_t k = 0; k < v.size(); ++k) {
                out << (k ? ", " : "") << to_string(v[k]);
              }
              out << ")\n";
            }
            return 0;
          }
          ojson grads = ojson::object();
          for (const auto& [i, v] : g.gradients) {
            grads[std::to_string(i)] = qvec_strings(v);
          }
          o["gradients"] = grads;
        } else {
          SpanReport span =
              primitive_span(span_report(g, -(li.polar.m + 1), order));
          if (format == "text") {
            out << "rank = " << span.rank << "\n";
            for (const auto& row : span.basis) {
              out << "basis: (";
              for (std::size_t k = 0; k < row.size(); ++k) {
                out << (k ? ", " : "") << to_string(row[k]);
              }
              out << ")\n";
            }
            return 0;
          }
          o.update(span_json(span));
        }
      }
      out << o.dump(2) << "\n";
      return 0;
    }

    if (c_localize->parsed()) {
      LoadedInput li = load_input(input);
      FixedPointSet fps;
      if (derived == !weights_file.empty()) {
        throw DomainError("localize needs exactly one of --weights or --derived");
      }
      if (derived) {
        fps = derived_fixed_points(li.polar);
      } else {
        std::ifstream in(weights_file);
        if (!in) throw DomainError("cannot open '" + weights_file + "'");
        nlohmann::json j;
        in >> j;
        fps = fixed_points_from_json(j);
      }
      LocalizationResult loc = localize(fps, seed);
      ojson o;
      o["source"] = derived ? "derived" : "user";
      o["c1_top"] = qvec_strings(loc.c1_top.coeffs);
      if (loc.c1sq_c2) o["c1sq_c2"] = qvec_strings(loc.c1sq_c2->coeffs);
      std::vector<QVec> rows{loc.c1_top.coeffs};
      if (loc.c1sq_c2) rows.push_back(loc.c1sq_c2->coeffs);
      o["rank"] = MatrixQ(rows).rank();
      if (format == "latex") {
        out << linear_form_latex(loc.c1_top.coeffs);
        if (loc.c1sq_c2) out << "; " << linear_form_latex(loc.c1sq_c2->coeffs);
        out << "\n";
        return 0;
      }
      if (compare) {
        GradientTable g = coefficient_gradients(
            li.polar, canonical_reeb(li.polar.m), 1, seed);
        SpanReport span = span_report(g, -(li.polar.m + 1), -1);
        o["gradient_span"] = span_json(span);
        o["span_equal"] = span_compare(loc, span);
      }
      out << o.dump(2) << "\n";
      return 0;
    }

    if (c_volmin->parsed()) {
      LoadedInput li = load_input(input);
      VolMinConfig cfg;
      cfg.grad_tol = tol;
      cfg.max_iter = max_iter;
      cfg.seed = seed;
      if (!seed_point.empty()) {
        for (const auto& s : qvec_strings(parse_at(seed_point, li.polar.m))) {
          cfg.initial.push_back(to_double(parse_rational(s)));
        }
      }
      VolMinResult res = minimize_volume(li.polar, cfg);
      ojson o;
      o["converged"] = res.converged;
      o["minimizer"] = res.minimizer;
      o["objective"] = res.objective;
      o["grad_norm"] = res.grad_norm;
      o["iterations"] = res.iterations;
      o["margin"] = res.margin;
      if (!res.diagnostics.empty()) o["diagnostics"] = res.diagnostics;
      if (res.converged) {
        PostReport rep =
            post_minimization_report(li.polar, res.minimizer, order);
        ojson pr;
        ojson vals = ojson::object(), grads = ojson::object(),
              nz = ojson::object();
        for (const auto& [i, v] : rep.values_exact) {
          vals[std::to_string(i)] = v;
        }
        for (const auto& [i, g] : rep.gradients) grads[std::to_string(i)] = g;
        for (const auto& [i, b] : rep.gradient_nonzero) {
          nz[std::to_string(i)] = b;
        }
        pr["values"] = vals;
        pr["gradients"] = grads;
        pr["gradient_nonzero"] = nz;
        o["post_report"] = pr;
      }
      out << o.dump(2) << "\n";
      return res.converged ? 0 : 2;
    }

    if (c_list->parsed()) {
      ojson o = ojson::array();
      for (const auto& n : catalog_list()) o.push_back(n);
      out << o.dump(2) << "\n";
      return 0;
    }
    if (c_show->parsed()) {
      out << ojson(catalog_get(show_name).raw).dump(2) << "\n";
      return 0;
    }
    if (c_verify->parsed()) {
      return cmd_verify_all(out, seed);
    }
  } catch (const PoleError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 1;
}

namespace {

int cmd_verify_all(std::ostream& out, std::uint64_t seed) {
  ojson report = ojson::object();
  bool all_ok = true;
  for (const auto& name : catalog_list()) {
    const CatalogEntry& e = catalog_get(name);
    ojson entry = ojson::object();
    auto record = [&](const std::string& check, bool ok,
                      const std::string& detail = "") {
      entry[check] = ok ? "ok" : ("FAIL " + detail);
      all_ok = all_ok && ok;
    };
    record("validate", validate(e.polytope).pass());

    int m = e.polar.m;
    GradientTable g =
        coefficient_gradients(e.polar, canonical_reeb(m), 1, seed);
    if (e.has_expected("gradients")) {
      bool ok = true;
      for (const auto& [i, expect] : e.expected_gradients()) {
        if (g.gradients.at(i) != expect) ok = false;
      }
      record("gradient_table", ok);
    }
    SpanReport span = span_report(g, -(m + 1), -1);
    if (e.has_expected("gradient_rank")) {
      record("gradient_rank", span.rank == e.expected_gradient_rank());
    }
    if (auto line = e.expected_basis_line()) {
      record("gradient_basis_line",
             span.rank == 1 &&
                 primitive_integer_vector(span.basis[0], true) == *line);
    }

    CoefficientTable vals =
        coefficient_values(e.polar, canonical_reeb(m), 1, seed);
    if (e.has_expected("leading_coefficient")) {
      record("leading_coefficient",
             vals.values.at(-(m + 1)) == e.expected_leading_coefficient());
    }
    Rational fact = rat(1);
    for (int k = 2; k <= m; ++k) fact *= rat(k);
    Rational vol_pred = Rational(fact * polytope_volume(e.polar) /
                                 pow_rational(rat(m + 1), m + 1));
    record("volume_identity", vals.values.at(-(m + 1)) == vol_pred);
    // Subleading proportionality C_{-m} = ((m+1)/2) C_{-m-1}.
    record("subleading_ratio",
           vals.values.at(-m) ==
               Rational(rat(m + 1, 2) * vals.values.at(-(m + 1))));

    if (auto fps = e.user_fixed_points()) {
      LocalizationResult loc = localize(*fps, seed);
      bool ok = loc.c1_top == *e.expected_c1_top();
      if (loc.c1sq_c2 && e.expected_c1sq_c2()) {
        ok = ok && *loc.c1sq_c2 == *e.expected_c1sq_c2();
      }
      record("localization_user", ok);
    }
    LocalizationResult derived = localize(derived_fixed_points(e.polar), seed);
    record("localization_span_equal", span_compare(derived, span));

    if (auto minimizer = e.expected_minimizer()) {
      VolMinConfig cfg;
      cfg.seed = seed;
      VolMinResult res = minimize_volume(e.polar, cfg);
      bool ok = res.converged;
      for (std::size_t i = 0; ok && i < minimizer->size(); ++i) {
        ok = std::abs(res.minimizer[i] - (*minimizer)[i]) <= 1e-8;
      }
      record("minimizer", ok);
    }
    report[name] = entry;
  }
  ojson o;
  o["entries"] = report;
  o["all_ok"] = all_ok;
  out << o.dump(2) << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

}  // namespace fanohs::cli
