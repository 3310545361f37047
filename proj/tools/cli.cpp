#include "symloci/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symloci/chern.hpp"
#include "symloci/locus.hpp"
#include "symloci/schur.hpp"

namespace symloci::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Scalar& c) {
  if (!c.is_integer()) throw std::logic_error("non-integral coefficient " + c.to_string());
  try {
    return json(c.to_int64());
  } catch (const std::exception&) {
    return json(c.to_string());
  }
}

void require_integral(const Poly& p) {
  if (!p.has_integer_coefficients()) throw std::logic_error("non-integral polynomial output");
}

json parameters_json(const LocusProblem& p) {
  return json{{"e", p.e}, {"f", p.f}, {"r", p.r}, {"symmetry", to_string(p.symmetry)}};
}

std::vector<std::pair<std::pair<Partition, Partition>, Scalar>> sorted_rows(const SchurPairExpansion& x) {
  std::vector<std::pair<std::pair<Partition, Partition>, Scalar>> rows(x.coefficients.begin(), x.coefficients.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    int wa = a.first.first.weight() + a.first.second.weight();
    int wb = b.first.first.weight() + b.first.second.weight();
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  return rows;
}

json pair_json(const SchurPairExpansion& x) {
  json terms = json::array();
  for (const auto& [key, c] : sorted_rows(x)) {
    terms.push_back(json{{"f", to_json(key.first)}, {"e", to_json(key.second)}, {"coefficient", to_json(c)}});
  }
  return terms;
}

ModelMode parse_mode(const std::string& s) {
  if (s == "surjection") return ModelMode::surjection;
  if (s == "independent") return ModelMode::independent;
  throw UsageError("unknown mode " + s);
}

ModelContext make_model(const LocusProblem& p, ModelMode mode) {
  return mode == ModelMode::surjection ? ModelContext::surjection(p.f, p.n()) : ModelContext::independent(p.e, p.f);
}

LocusProblem make_problem(int e, int f, int r, const std::string& sym) {
  LocusProblem p;
  p.e = e;
  p.f = f;
  p.r = r;
  try {
    p.symmetry = parse_symmetry(sym);
    p.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return p;
}

SchurPairExpansion pair_expansion(const LocusProblem& p) {
  ModelContext model = ModelContext::independent(p.e, p.f);
  Poly poly = expression_to_poly(class_of(p), model);
  require_integral(poly);
  return expand_schur_pair(poly, "f", "e");
}

std::vector<int> parse_twists(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " must not be empty");
  return out;
}

struct ProblemOptions {
  int e = 0;
  int f = 0;
  int r = 0;
  std::string symmetry = "sym";
};

void add_problem_options(CLI::App* cmd, ProblemOptions& o) {
  cmd->add_option("--e", o.e, "rank of E")->required();
  cmd->add_option("--f", o.f, "rank of F")->required();
  cmd->add_option("--r", o.r, "rank bound")->required();
  cmd->add_option("--symmetry", o.symmetry, "sym or skew")->check(CLI::IsMember({"sym", "skew"}));
}

int cmd_class(const ProblemOptions& o, const std::string& format, const std::string& mode_name, std::ostream& out) {
  LocusProblem p = make_problem(o.e, o.f, o.r, o.symmetry);
  ClassExpression x = class_of(p);
  if (format == "expression") {
    out << x.to_string() << "\n";
  } else if (format == "polynomial") {
    Poly poly = expression_to_poly(x, make_model(p, parse_mode(mode_name.empty() ? "surjection" : mode_name)));
    require_integral(poly);
    out << poly.to_string() << "\n";
  } else if (format == "schur-pair") {
    if (!mode_name.empty() && mode_name != "independent") throw UsageError("schur-pair output needs independent mode");
    out << pair_expansion(p).to_string();
  } else {
    json terms = json::array();
    for (const auto& t : x.terms) {
      terms.push_back(json{{"k", to_json(t.k)}, {"l", to_json(t.l)}, {"coefficient", to_json(t.coefficient)}});
    }
    json doc{{"command", "class"},
             {"parameters", parameters_json(p)},
             {"codim", expected_codim(p)},
             {"kind", x.kind == ClassExpression::Kind::Q ? "Q" : "P"},
             {"expression", x.to_string()},
             {"terms", terms}};
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_expand(const ProblemOptions& o, const std::string& format, std::ostream& out) {
  LocusProblem p = make_problem(o.e, o.f, o.r, o.symmetry);
  SchurPairExpansion x = pair_expansion(p);
  if (format == "structured") {
    json doc{{"command", "expand"}, {"parameters", parameters_json(p)}, {"terms", pair_json(x)}};
    out << doc.dump(2) << "\n";
  } else {
    out << x.to_string();
  }
  return 0;
}

int cmd_chern(int e, int f, const std::string& kind, const std::string& form, const std::string& format,
              std::ostream& out) {
  if (f < 1 || e < f) throw UsageError("ranks must satisfy e >= f >= 1");
  ModelContext model = ModelContext::surjection(f, e - f);
  const bool vee = kind == "vee";
  Poly poly;
  if (form == "qp") {
    poly = vee ? ctop_vee(model) : ctop_wedge(model);
  } else if (form == "skew-schur") {
    poly = vee ? ctop_vee_skew(model) : ctop_wedge_skew(model);
  } else {
    poly = ctop_product_oracle(model, vee ? Kernel::vee : Kernel::wedge);
  }
  require_integral(poly);
  if (format == "structured") {
    json doc{{"command", "chern"},
             {"parameters", json{{"e", e}, {"f", f}, {"kind", kind}, {"form", form}}},
             {"degree", poly.total_degree()},
             {"polynomial", poly.to_string()}};
    out << doc.dump(2) << "\n";
  } else {
    out << poly.to_string() << "\n";
  }
  return 0;
}

int cmd_degree(const std::string& e_text, const std::string& f_text, int r, const std::string& sym,
               const std::string& format, std::ostream& out) {
  std::vector<int> et = parse_twists(e_text, "--e-twists");
  std::vector<int> ft = parse_twists(f_text, "--f-twists");
  LocusProblem p = make_problem(static_cast<int>(et.size()), static_cast<int>(ft.size()), r, sym);
  Scalar d = projective_degree(et, ft, r, p.symmetry);
  const int c = expected_codim(p);
  if (format == "structured") {
    json doc{{"command", "degree"},
             {"parameters", json{{"e_twists", et}, {"f_twists", ft}, {"r", r}, {"symmetry", sym}}},
             {"codim", c},
             {"degree", to_json(d)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "codim=" << c << " degree=" << d.to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite " + suite);
  }
  for (const auto& [name, value] : {std::pair{"--max-e", bounds.max_e}, std::pair{"--max-f", bounds.max_f},
                                    std::pair{"--max-p", bounds.max_p}, std::pair{"--max-n", bounds.max_n}}) {
    if (value && *value < 0) throw UsageError(std::string(name) + " must be nonnegative");
  }
  if (bounds.jobs < 1) throw UsageError("--jobs must be positive");
  std::vector<CaseResult> results = run_suite(suite, bounds);
  int failed = 0;
  for (const auto& r : results) {
    out << format_case(r) << "\n";
    if (!r.pass) {
      ++failed;
      err << r.name << " " << r.params << ": " << r.detail << "\n";
    }
  }
  out << "SUMMARY " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

std::string format_case(const CaseResult& r) {
  return "CASE " + r.name + " " + r.params + " : " + (r.pass ? "PASS" : "FAIL");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degeneracy loci of symmetric and skew-symmetric morphisms", "symloci"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "directory for memoized Q-polynomials");

  ProblemOptions class_opts;
  std::string class_format = "expression";
  std::string class_mode;
  CLI::App* class_cmd = app.add_subcommand("class", "class of the degeneracy locus");
  add_problem_options(class_cmd, class_opts);
  class_cmd->add_option("--format", class_format)
      ->check(CLI::IsMember({"expression", "polynomial", "schur-pair", "structured"}));
  class_cmd->add_option("--mode", class_mode, "surjection or independent")
      ->check(CLI::IsMember({"surjection", "independent"}));

  ProblemOptions expand_opts;
  std::string expand_format = "table";
  CLI::App* expand_cmd = app.add_subcommand("expand", "expansion into s_I(F) s_J(E)");
  add_problem_options(expand_cmd, expand_opts);
  expand_cmd->add_option("--format", expand_format)->check(CLI::IsMember({"table", "structured"}));

  int chern_e = 0;
  int chern_f = 0;
  std::string chern_kind = "vee";
  std::string chern_form = "qp";
  std::string chern_format = "polynomial";
  CLI::App* chern_cmd = app.add_subcommand("chern", "top Chern class of E v F or E ^ F");
  chern_cmd->add_option("--e", chern_e)->required();
  chern_cmd->add_option("--f", chern_f)->required();
  chern_cmd->add_option("--kind", chern_kind)->check(CLI::IsMember({"vee", "wedge"}));
  chern_cmd->add_option("--form", chern_form)->check(CLI::IsMember({"qp", "skew-schur", "product"}));
  chern_cmd->add_option("--format", chern_format)->check(CLI::IsMember({"polynomial", "structured"}));

  std::string e_twists;
  std::string f_twists;
  int degree_r = 0;
  std::string degree_sym = "sym";
  std::string degree_format = "text";
  CLI::App* degree_cmd = app.add_subcommand("degree", "degree on projective space for split bundles");
  degree_cmd->add_option("--e-twists", e_twists)->required();
  degree_cmd->add_option("--f-twists", f_twists)->required();
  degree_cmd->add_option("--r", degree_r)->required();
  degree_cmd->add_option("--symmetry", degree_sym)->check(CLI::IsMember({"sym", "skew"}));
  degree_cmd->add_option("--format", degree_format)->check(CLI::IsMember({"text", "structured"}));

  std::string suite = "all";
  VerifyBounds bounds;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "all, schur, chern, gysin, locus or identities");
  verify_cmd->add_option("--max-e", bounds.max_e);
  verify_cmd->add_option("--max-f", bounds.max_f);
  verify_cmd->add_option("--max-p", bounds.max_p);
  verify_cmd->add_option("--max-n", bounds.max_n);
  verify_cmd->add_option("--jobs", bounds.jobs);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("symloci");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = "a command is required";
    err << "error: " << msg << "\n";
    return 2;
  }

  try {
    if (!cache_dir.empty()) set_q_cache_dir(cache_dir);
    if (*class_cmd) return cmd_class(class_opts, class_format, class_mode, out);
    if (*expand_cmd) return cmd_expand(expand_opts, expand_format, out);
    if (*chern_cmd) return cmd_chern(chern_e, chern_f, chern_kind, chern_form, chern_format, out);
    if (*degree_cmd) return cmd_degree(e_twists, f_twists, degree_r, degree_sym, degree_format, out);
    return cmd_verify(suite, bounds, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace symloci::cli
