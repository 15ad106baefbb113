#include "gpcode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpcode/closed_forms.hpp"
#include "gpcode/curves.hpp"
#include "gpcode/error.hpp"
#include "gpcode/format.hpp"
#include "gpcode/verify.hpp"

namespace gpcode::cli {

namespace {

using Json = nlohmann::ordered_json;

// Every parameter any subcommand takes; each subcommand binds the subset it
// needs.
struct RunConfig {
  uint32_t p = 0;
  unsigned m = 0;
  uint64_t k = 0;
  uint64_t N = 0;
  uint64_t u = 0;
  unsigned a = 0;
  unsigned b = 0;
  unsigned r = 0;
  std::string method = "auto";
  std::string format_name = "table";
  Format format = Format::table;
  uint64_t budget = uint64_t{1} << 31;
  unsigned workers = 1;
  std::string cache_dir;
  bool check = false;
  bool oracle = false;
  bool all_beta = false;
  std::vector<uint64_t> beta_dlog;
  bool beta_zero = false;
  std::vector<std::string> alphas;
  std::string family;
  std::string suite;
};

struct Mismatch {};

class Runner {
 public:
  Runner(RunConfig& c, std::ostream& out, std::ostream& err) : c_(c), out_(out), err_(err) {}

  std::optional<std::filesystem::path> cache_dir() const {
    if (!c_.cache_dir.empty()) return std::filesystem::path(c_.cache_dir);
    if (const char* env = std::getenv("GPCODE_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }

  Field field(uint32_t p, unsigned m) const {
    FieldOptions fo;
    fo.cache_dir = cache_dir();
    return Field::build(p, m, fo);
  }

  void field_info() {
    const Field f = field(c_.p, c_.m);
    std::string modulus;
    const auto coeffs = f.modulus();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] == 0) continue;
      if (!modulus.empty()) modulus += " + ";
      const bool show_coeff = coeffs[i] != 1 || i == 0;
      if (show_coeff) modulus += std::to_string(coeffs[i]);
      if (i > 0) modulus += (show_coeff ? "*" : "") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    std::string omega;
    for (uint32_t v : f.coeffs(f.omega())) omega += (omega.empty() ? "" : " ") + std::to_string(v);
    const auto dir = cache_dir();
    if (c_.format == Format::json) {
      Json j{{"p", f.p()},
             {"m", f.m()},
             {"q", f.q()},
             {"modulus", std::vector<uint32_t>(coeffs.begin(), coeffs.end())},
             {"omega", f.omega().code},
             {"omega_coeffs", f.coeffs(f.omega())},
             {"cache_file", dir ? (*dir / f.cache_name()).string() : ""},
             {"loaded_from_cache", f.loaded_from_cache()}};
      out_ << j.dump(2) << '\n';
      return;
    }
    std::vector<std::vector<std::string>> rows{{"field", "value"},
                                               {"p", std::to_string(f.p())},
                                               {"m", std::to_string(f.m())},
                                               {"q", std::to_string(f.q())},
                                               {"modulus", modulus},
                                               {"omega", std::to_string(f.omega().code) + " [" + omega + "]"},
                                               {"cache_file", dir ? (*dir / f.cache_name()).string() : "(none)"},
                                               {"loaded_from_cache", f.loaded_from_cache() ? "true" : "false"}};
    if (c_.format == Format::csv) {
      for (const auto& r : rows) out_ << r[0] << ',' << r[1] << '\n';
    } else {
      out_ << render_columns(rows);
    }
  }

  void periods() {
    const Field f = field(c_.p, c_.m);
    const GaussPeriodSet s = gaussian_periods(f, c_.N, c_.workers);
    std::optional<RelationReport> report;
    if (c_.check) report = check_relations(s, &f);
    out_ << emit(s, report ? &*report : nullptr, c_.format);
    if (report && !report->all_passed()) {
      for (const auto& v : report->violations()) err_ << "relation violated: " << v << '\n';
      throw Mismatch{};
    }
  }

  void graph_spectrum() {
    const GraphSpec g = graph_spec(c_.p, c_.m, c_.k);
    const Field f = field(c_.p, c_.m);
    const Spectrum s = spectrum(g, f, c_.workers);
    out_ << emit(s, g, c_.format);
    if (c_.oracle) {
      const Spectrum o = brute_spectrum_oracle(g, f);
      if (!(o == s)) {
        err_ << "oracle spectrum differs: " << spectrum_notation(o) << '\n';
        throw Mismatch{};
      }
      err_ << "oracle: MATCH\n";
    }
  }

  void graph_decompose() {
    const GraphSpec g = graph_spec(c_.p, c_.m, c_.k);
    const auto ws = find_decompositions(g, true);
    if (c_.format == Format::json) {
      Json arr = Json::array();
      for (const auto& w : ws) arr.push_back({{"a", w.a}, {"b", w.b}, {"c", w.c}, {"u", w.u}});
      out_ << Json{{"p", g.p}, {"m", g.m}, {"k", g.k}, {"n", g.n}, {"witnesses", arr}}.dump(2) << '\n';
      return;
    }
    std::vector<std::vector<std::string>> rows{{"a", "b", "c", "u"}};
    for (const auto& w : ws)
      rows.push_back({std::to_string(w.a), std::to_string(w.b), std::to_string(w.c), std::to_string(w.u)});
    if (c_.format == Format::csv) {
      for (const auto& r : rows) out_ << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << '\n';
    } else if (ws.empty()) {
      out_ << "no decomposition: n = " << g.n << " has no factorisation b*c with c a primitive divisor\n";
    } else {
      out_ << render_columns(rows);
    }
  }

  void graph_classify() {
    const GraphSpec g = graph_spec(c_.p, c_.m, c_.k);
    out_ << emit(g, c_.format);
    if (c_.format != Format::table) return;
    std::vector<std::vector<std::string>> rows{{"property", "value"}};
    const auto h = is_hamming(g);
    rows.push_back({"hamming", h ? "H(" + std::to_string(*h) + ", " + std::to_string(g.n / *h + 1) + ")" : "no"});
    if (g.connected) rows.push_back({"complete product", check_complete_product(g) ? "yes" : "no"});
    if (g.k >= 2) {
      const auto sp = is_semiprimitive_pair(g.p, g.m, g.k);
      rows.push_back({"semiprimitive",
                      sp.semiprimitive ? "t = " + std::to_string(sp.t) + ", sigma = " + std::to_string(sp.sigma) : "no"});
    }
    if (g.undirected && g.connected) {
      const auto w = find_decomposition(g);
      rows.push_back({"decomposition", w ? "a = " + std::to_string(w->a) + ", b = " + std::to_string(w->b) +
                                               ", c = " + std::to_string(w->c) + ", u = " + std::to_string(w->u)
                                         : "none"});
    }
    out_ << render_columns(rows);
  }

  WeightDistribution brute(const Field& f) const {
    return brute_weight_distribution(f, c_.k, {c_.budget, c_.workers, false});
  }

  void code_weights() {
    const CodeParams cp = code_params(c_.p, c_.m, c_.k);
    const std::string& method = c_.method;
    if (method == "brute") {
      out_ << emit(brute(field(c_.p, c_.m)), cp, c_.format);
      return;
    }
    ClosedFormOptions co;
    co.base_brute = {c_.budget, c_.workers, false};
    if (method == "closed") {
      const auto r = closed_form_distribution(c_.p, c_.m, c_.k, co);
      err_ << "route: " << r.route << '\n';
      out_ << emit(r.distribution, cp, c_.format);
      return;
    }
    if (method == "auto") {
      try {
        const auto r = closed_form_distribution(c_.p, c_.m, c_.k, co);
        err_ << "route: " << r.route << '\n';
        out_ << emit(r.distribution, cp, c_.format);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionFailed) throw;
        err_ << "route: brute (" << e.what() << ")\n";
        out_ << emit(brute(field(c_.p, c_.m)), cp, c_.format);
      }
      return;
    }
    // both
    const auto closed = closed_form_distribution(c_.p, c_.m, c_.k, co);
    const auto direct = brute(field(c_.p, c_.m));
    const bool match = direct.same_table(closed.distribution);
    if (c_.format == Format::json) {
      Json j{{"brute", Json::parse(emit(direct, cp, Format::json))},
             {"closed", Json::parse(emit(closed.distribution, cp, Format::json))},
             {"route", closed.route},
             {"match", match}};
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "brute:\n" << emit(direct, cp, c_.format) << '\n';
      out_ << closed.route << ":\n" << emit(closed.distribution, cp, c_.format) << '\n';
      if (!match) out_ << diff_tables(direct, "brute", closed.distribution, closed.route) << '\n';
      out_ << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    if (!match) throw Mismatch{};
  }

  void code_tower() {
    WeightDistribution d;
    CodeParams cp;
    const std::string& fam = c_.family;
    if (fam == "simplex") {
      d = simplex(c_.p, c_.a);
      cp = code_params(c_.p, c_.a, 1);
    } else if (fam == "one-weight") {
      d = one_weight_tower(c_.p, c_.a, c_.b);
      cp = code_params(c_.p, c_.a * c_.b, static_cast<uint64_t>(psi(ipow(BigInt(c_.p), c_.a), c_.b) / c_.b));
    } else if (fam == "semiprimitive") {
      d = c_.b <= 1 ? semiprimitive_base(c_.p, c_.a, c_.u) : semiprimitive_tower(c_.p, c_.a, c_.u, c_.b);
      const unsigned b = std::max(c_.b, 1u);
      cp = code_params(c_.p, c_.a * b, static_cast<uint64_t>(c_.u * psi(ipow(BigInt(c_.p), c_.a), b) / b));
    } else if (fam == "cubic" || fam == "quartic") {
      const unsigned e = fam == "cubic" ? 3 : 4;
      const unsigned r = std::max(c_.r, 1u);
      d = r == 1 ? (e == 3 ? cubic_base(c_.p, c_.a) : quartic_base(c_.p, c_.a))
                 : (e == 3 ? cubic_tower(c_.p, c_.a, r) : quartic_tower(c_.p, c_.a, r));
      cp = code_params(c_.p, e * c_.a * r, static_cast<uint64_t>(e * psi(ipow(BigInt(c_.p), e * c_.a), r) / r));
    } else {
      throw CLI::ValidationError("--family", "expected simplex, one-weight, semiprimitive, cubic or quartic");
    }
    out_ << emit(d, cp, c_.format);
  }

  std::vector<Element> betas(const Field& f) const {
    std::vector<Element> out;
    if (c_.beta_zero) out.push_back(f.zero());
    for (uint64_t i : c_.beta_dlog) out.push_back(f.exp(i));
    if (c_.all_beta) {
      for (uint64_t x = 0; x < f.q(); ++x) out.push_back({static_cast<uint32_t>(x)});
    } else if (out.empty()) {
      // One beta per orbit of beta -> beta omega^k.
      out.push_back(f.zero());
      for (uint64_t g = 0; g < c_.k; ++g) out.push_back(f.exp(g));
    }
    return out;
  }

  void curve_count_cmd() {
    const Field f = field(c_.p, c_.m);
    code_params(c_.p, c_.m, c_.k);
    const auto bs = betas(f);
    if (BigInt(bs.size()) * f.q() > c_.budget)
      throw Error(ErrorKind::BudgetExceeded, std::to_string(bs.size()) + " curves of O(q) each exceed the budget");
    std::vector<CurveCount> rows;
    bool agree = true;
    for (Element beta : bs) {
      rows.push_back(curve_count(f, c_.k, beta, true));
      agree = agree && *rows.back().count_brute == rows.back().count_weight_formula;
    }
    out_ << emit(rows, f, c_.format);
    if (!agree) throw Mismatch{};
  }

  void curve_reduce() {
    const Field fa = field(c_.p, c_.a);
    std::vector<Element> alphas;
    for (const auto& s : c_.alphas) {
      if (s == "zero") {
        alphas.push_back(fa.zero());
      } else {
        try {
          alphas.push_back(fa.exp(std::stoull(s)));
        } catch (const std::logic_error&) {
          throw CLI::ValidationError("--alpha-dlog", "'" + s + "' is neither a discrete log nor 'zero'");
        }
      }
    }
    const CurveReduction r = curve_reduction(c_.p, c_.a, c_.b, c_.u, alphas);
    const auto congruences = count_congruences(c_.p, c_.a, c_.b, r.derived, r.base_counts);
    std::string weights, counts;
    for (std::size_t i = 0; i < r.base_weights.size(); ++i) {
      weights += (i ? " " : "") + std::to_string(r.base_weights[i]);
      counts += (i ? " " : "") + r.base_counts[i].str();
    }
    const bool agree = BigRational(r.derived) == r.reduction_formula;
    bool congruent = true;
    for (const auto& c : congruences) congruent = congruent && (!c.applicable || c.passed);
    if (c_.format == Format::json) {
      Json cs = Json::array();
      for (const auto& c : congruences)
        cs.push_back({{"name", c.name}, {"modulus", c.modulus.str()}, {"applicable", c.applicable}, {"passed", c.passed}});
      Json j{{"p", c_.p},          {"m", r.m},
             {"k", r.k},           {"base_weights", r.base_weights},
             {"base_counts", Json::array()}, {"count_derived", r.derived.str()},
             {"count_reduction_formula", r.reduction_formula.str()}, {"in_count_set", r.in_count_set},
             {"congruences", cs}};
      for (const auto& c : r.base_counts) j["base_counts"].push_back(c.str());
      out_ << j.dump(2) << '\n';
    } else {
      std::vector<std::vector<std::string>> rows{{"quantity", "value"},
                                                 {"m", std::to_string(r.m)},
                                                 {"k", std::to_string(r.k)},
                                                 {"base weights", weights},
                                                 {"base counts", counts},
                                                 {"count (derived)", r.derived.str()},
                                                 {"count (reduction formula)", r.reduction_formula.str()},
                                                 {"in count set", r.in_count_set ? "true" : "false"}};
      for (const auto& c : congruences)
        rows.push_back({c.name + " mod " + c.modulus.str(), !c.applicable ? "n/a" : c.passed ? "pass" : "FAIL"});
      if (c_.format == Format::csv) {
        for (const auto& row : rows) out_ << row[0] << ',' << row[1] << '\n';
      } else {
        out_ << render_columns(rows);
      }
    }
    if (!agree || !r.in_count_set || !congruent) throw Mismatch{};
  }

  void verify() {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), c_.suite) == names.end()) {
      std::string all;
      for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
      throw CLI::ValidationError("suite", "unknown suite '" + c_.suite + "'; expected one of " + all);
    }
    VerifyOptions o;
    o.workers = c_.workers;
    o.cache_dir = cache_dir();
    o.log = &err_;
    const auto reports = run_suite(c_.suite, o);
    bool all = true;
    if (c_.format == Format::json) {
      Json arr = Json::array();
      for (const auto& rep : reports) {
        Json checks = Json::array();
        for (const auto& ch : rep.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
        arr.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"cases", rep.cases}, {"checks", checks}});
        all = all && rep.passed();
      }
      out_ << arr.dump(2) << '\n';
    } else {
      std::vector<std::vector<std::string>> rows{{"suite", "check", "result", "detail"}};
      for (const auto& rep : reports) {
        for (const auto& ch : rep.checks) rows.push_back({rep.suite, ch.name, ch.passed ? "pass" : "FAIL", ch.detail});
        all = all && rep.passed();
      }
      if (c_.format == Format::csv) {
        for (const auto& r : rows) out_ << r[0] << ',' << r[1] << ',' << r[2] << ",\"" << r[3] << "\"\n";
      } else {
        out_ << render_columns(rows);
        out_ << (all ? "all checks passed" : "FAILURES") << '\n';
      }
    }
    if (!all) throw Mismatch{};
  }

 private:
  RunConfig& c_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  Runner runner(c, out, err);
  std::function<void()> action;

  CLI::App app{"Irreducible cyclic codes, generalized Paley graphs and Gaussian periods over finite fields", "gpcode"};
  app.require_subcommand(1);

  auto field_params = [&](CLI::App* s) {
    s->add_option("-p", c.p, "characteristic (prime)")->required()->check(CLI::PositiveNumber);
    s->add_option("-m", c.m, "extension degree")->required()->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format_name, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    s->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--cache-dir", c.cache_dir, "discrete-log cache directory (overrides GPCODE_CACHE_DIR)");
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", c.budget, "maximum coordinate evaluations for brute force")->check(CLI::PositiveNumber);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, void (Runner::*fn)()) {
    CLI::App* s = parent->add_subcommand(name, desc);
    common(s);
    s->callback([&action, &runner, fn] { action = [&runner, fn] { (runner.*fn)(); }; });
    return s;
  };

  CLI::App* field = app.add_subcommand("field", "finite field tables");
  field->require_subcommand(1);
  field_params(leaf(field, "info", "modulus, primitive element and cache file", &Runner::field_info));

  CLI::App* periods = leaf(&app, "periods", "Gaussian periods of order N", &Runner::periods);
  field_params(periods);
  periods->add_option("-N", c.N, "number of cosets, N | q - 1")->required()->check(CLI::PositiveNumber);
  periods->add_flag("--check", c.check, "check the period relations");

  CLI::App* graph = app.add_subcommand("graph", "generalized Paley graphs Gamma(k, q)");
  graph->require_subcommand(1);
  CLI::App* gs = leaf(graph, "spectrum", "eigenvalues with multiplicities", &Runner::graph_spectrum);
  CLI::App* gd = leaf(graph, "decompose", "cartesian-power decompositions", &Runner::graph_decompose);
  CLI::App* gc = leaf(graph, "classify", "graph parameters and family membership", &Runner::graph_classify);
  for (CLI::App* s : {gs, gd, gc}) {
    field_params(s);
    s->add_option("-k", c.k, "exponent")->required()->check(CLI::PositiveNumber);
  }
  gs->add_flag("--oracle", c.oracle, "compare against the character-sum oracle (q <= 4096)");

  CLI::App* code = app.add_subcommand("code", "irreducible cyclic codes C(k, q)");
  code->require_subcommand(1);
  CLI::App* cw = leaf(code, "weights", "weight distribution", &Runner::code_weights);
  field_params(cw);
  budget(cw);
  cw->add_option("-k", c.k, "k | q - 1")->required()->check(CLI::PositiveNumber);
  cw->add_option("--method", c.method, "brute, closed, auto or both")
      ->check(CLI::IsMember({"brute", "closed", "auto", "both"}));
  CLI::App* ct = leaf(code, "tower", "closed-form family by its parameters", &Runner::code_tower);
  ct->add_option("--family", c.family, "simplex, one-weight, semiprimitive, cubic or quartic")->required();
  ct->add_option("-p", c.p, "characteristic")->required()->check(CLI::PositiveNumber);
  ct->add_option("-a", c.a, "base degree (t for cubic and quartic)")->required()->check(CLI::PositiveNumber);
  ct->add_option("-b", c.b, "number of factors");
  ct->add_option("-u", c.u, "base exponent (semiprimitive)");
  ct->add_option("-r", c.r, "tower degree (cubic and quartic)");

  CLI::App* curve = app.add_subcommand("curve", "curves y^p - y = beta x^k");
  curve->require_subcommand(1);
  CLI::App* cc = leaf(curve, "count", "projective point counts", &Runner::curve_count_cmd);
  field_params(cc);
  budget(cc);
  cc->add_option("-k", c.k, "k | q - 1")->required()->check(CLI::PositiveNumber);
  cc->add_option("--beta-dlog", c.beta_dlog, "beta = omega^i (repeatable)");
  cc->add_flag("--beta-zero", c.beta_zero, "include beta = 0");
  cc->add_flag("--all-beta", c.all_beta, "every beta in F_q");
  CLI::App* cr = leaf(curve, "reduce", "count over F_{p^{ab}} from counts over F_{p^a}", &Runner::curve_reduce);
  cr->add_option("-p", c.p, "characteristic")->required()->check(CLI::PositiveNumber);
  cr->add_option("-a", c.a, "base degree")->required()->check(CLI::PositiveNumber);
  cr->add_option("-b", c.b, "extension degree over F_{p^a}")->required()->check(CLI::PositiveNumber);
  cr->add_option("-u", c.u, "base exponent, u | p^a - 1")->required()->check(CLI::PositiveNumber);
  cr->add_option("--alpha-dlog", c.alphas, "b entries: discrete logs in F_{p^a}, or 'zero'")->required();

  CLI::App* ver = leaf(&app, "verify", "self-verification suites", &Runner::verify);
  ver->add_option("suite", c.suite, "paper-tables, field, bridge, spectrum, composition, curves, relations or all")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    c.format = *parse_format(c.format_name);
    if (!action) throw CLI::CallForHelp();
    action();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::precondition;
  } catch (const Mismatch&) {
    return ExitCode::mismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::precondition;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace gpcode::cli
