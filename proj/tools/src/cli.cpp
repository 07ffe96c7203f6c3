#include "bezroot_cli/cli.hpp"

#include "bezroot_cli/json_io.hpp"
#include "bezroot_cli/paper_examples.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

namespace bezroot::cli {

namespace {

struct Outcome {
  json body;
  bool ok = true;
};

struct Args {
  std::string poly;
  std::string f2;
  std::size_t n = 0;
  std::size_t s = 0;
  bool reversed = false;
  bool isolate = false;
  std::string width;
  std::string matrix;
  std::string method = "both";
  std::string g;
  std::string mode = "max-abs-root";
  std::vector<std::string> xis;
  std::string n_range = "2..8";
  std::string s_range;
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  std::string out_path;
  bool full = false;
  std::string target;
};

/// Library errors raised while handling user input, re-labelled with a flag.
std::string flag_for(Errc code, const std::string& fallback) {
  switch (code) {
    case Errc::DegreeOrder:
    case Errc::BadOrder:
    case Errc::BadParity:
      return "--n";
    case Errc::ThresholdViolation:
    case Errc::BadSign:
    case Errc::ZeroXi:
      return "--xi";
    default:
      return fallback;
  }
}

template <class F>
auto guarded(const std::string& fallback, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(flag_for(e.code(), fallback), std::string(errc_name(e.code())), e.what());
  }
}

BoundMode parse_mode(const std::string& s) { return s == "max-root" ? BoundMode::max_root : BoundMode::max_abs_root; }

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const auto lo = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const auto hi = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw InputError(flag, "BadArgument", "empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError(flag, "ParseError", "expected N or LO..HI, got '" + text + "'");
  }
}

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BEZROOT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    } catch (const std::logic_error&) {
    }
  }
  return hw;
}

FamilySpec family_spec(const Args& a) {
  const QPoly g = parse_poly(load_json_arg(a.g, "--g"), "--g");
  if (g.is_zero()) throw InputError("--g", "DegenerateFamily", "g is the zero polynomial");
  return guarded("--g", [&] { return build_family(a.n, g).spec; });
}

QPoly nonconstant_poly(const std::string& text, const std::string& flag) {
  const QPoly f = parse_poly(load_json_arg(text, flag), flag);
  if (f.is_zero()) throw InputError(flag, "ZeroPolynomial", "polynomial is zero");
  if (f.deg() < 1) throw InputError(flag, "DegreeTooSmall", "polynomial must have degree >= 1");
  return f;
}

Outcome do_count(const Args& a) {
  const QPoly f = nonconstant_poly(a.poly, "poly");
  const std::size_t k = count_real_roots(f);
  const long sig = inertia(bezout_of(f)).signature();
  Outcome o;
  o.body = {{"polynomial", to_json(f)},
            {"distinct_real_roots", k},
            {"via", {{"sturm", k}, {"bezout_signature", sig}}},
            {"agree", sig == static_cast<long>(k)}};
  if (a.isolate) {
    std::optional<Rational> w;
    if (!a.width.empty()) {
      w = parse_rational(a.width, "--width");
      if (w->sign() <= 0) throw InputError("--width", "BadArgument", "width must be positive");
    }
    json ivs = json::array();
    for (const auto& iv : isolate_real_roots(f, w)) ivs.push_back(to_json(iv));
    o.body["intervals"] = ivs;
  }
  o.ok = sig == static_cast<long>(k);
  return o;
}

Outcome do_bezout(const Args& a) {
  const QPoly f1 = parse_poly(load_json_arg(a.poly, "poly"), "poly");
  const QPoly f2 = a.f2.empty() ? derivative(f1) : parse_poly(load_json_arg(a.f2, "--f2"), "--f2");
  std::size_t n = a.n;
  if (n == 0) n = std::max(f1.degree().value_or(0), f2.degree().value_or(0));
  const auto m = guarded("poly", [&] { return a.reversed ? reversed_bezout(f1, f2, n) : bezout_matrix(f1, f2, n); });
  Outcome o;
  o.body = {{"f1", to_json(f1)},
            {"f2", to_json(f2)},
            {"n", n},
            {"reversed", a.reversed},
            {"matrix", to_json(m.matrix())},
            {"inertia", to_json(inertia(m))}};
  return o;
}

Outcome do_inertia(const Args& a) {
  const QSymMatrix m = parse_matrix(load_json_arg(a.matrix, "matrix"), "matrix");
  Outcome o;
  o.body = {{"order", m.order()}, {"rank", rank(m.matrix())}};
  std::optional<Inertia> cong;
  std::optional<Inertia> cp;
  if (a.method != "charpoly") cong = inertia_by_congruence(m);
  if (a.method != "congruence") cp = inertia_by_charpoly(m);
  o.body["inertia"] = to_json(cong ? *cong : *cp);
  json via = json::object();
  if (cong) via["congruence"] = to_json(*cong);
  if (cp) via["charpoly"] = to_json(*cp);
  o.body["via"] = via;
  if (cong && cp) {
    o.body["agree"] = *cong == *cp;
    o.ok = *cong == *cp;
  }
  return o;
}

Outcome do_disc(const Args& a) {
  const QPoly f = nonconstant_poly(a.poly, "poly");
  if (f.deg() < 2) throw InputError("poly", "DegreeTooSmall", "discriminant needs degree >= 2");
  const auto chk = bezout_disc_check(f);
  const Rational lead2 = f.lead() * f.lead();
  const bool law = chk.det_bezout == lead2 * chk.disc;
  Outcome o;
  o.body = {{"polynomial", to_json(f)},
            {"discriminant", chk.disc.str()},
            {"resultant_f_df", resultant(f, derivative(f)).str()},
            {"det_bezout", chk.det_bezout.str()},
            {"ratio", chk.ratio ? json(chk.ratio->str()) : json(nullptr)},
            {"led_squared", lead2.str()},
            {"det_equals_led_squared_times_disc", law}};
  o.ok = law;
  return o;
}

Outcome do_disc_t(const Args& a) {
  FamilySpec spec{a.n, parse_poly(load_json_arg(a.g, "--g"), "--g").coeffs()};
  const DiscInT d = guarded("--g", [&] { return disc_in_t(spec); });
  const auto cor = d.quotient_p();
  Outcome o;
  o.body = {{"spec", to_json(spec)},
            {"full", to_json(d.full)},
            {"stripped", to_json(d.stripped)},
            {"stripped_degree", d.stripped.deg()},
            {"t_power", d.t_power},
            {"expected_power", d.expected_power},
            {"min_power", d.min_power},
            {"power_matches_expected", d.power_matches_expected()},
            {"meets_min_power", d.meets_min_power()},
            {"quotient_p", cor ? to_json(*cor) : json(nullptr)}};
  o.ok = d.meets_min_power();
  return o;
}

Outcome do_predict(const Args& a) {
  const FamilySpec spec = family_spec(a);
  const auto mode = parse_mode(a.mode);
  const Prediction p = guarded("--g", [&] { return predict(spec, mode); });
  const AlphaR al = guarded("--g", [&] { return alpha_r(spec); });
  Outcome o;
  o.body = to_json(p);
  o.body["spec"] = to_json(spec);
  o.body["alpha_r"] = {{"interval", to_json(al.alpha_interval)}, {"witness_above", al.witness_above.str()}};
  return o;
}

Outcome do_verify_family(const Args& a) {
  const FamilySpec spec = family_spec(a);
  std::vector<Rational> xis;
  for (const auto& x : a.xis) xis.push_back(parse_rational(x, "--xi"));
  const auto rep = guarded("--g", [&] { return verify_prediction(spec, xis, parse_mode(a.mode)); });
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  Outcome o;
  o.body = to_json(rep.prediction);
  o.body["spec"] = to_json(spec);
  o.body["checks"] = checks;
  o.body["passed"] = rep.passed;
  o.ok = rep.passed;
  return o;
}

json trial_json(const TrialRecord& t) {
  json checks = json::array();
  for (const auto& c : t.checks) checks.push_back(to_json(c));
  return {{"n", t.n},
          {"s", t.s},
          {"trial", t.trial},
          {"g", to_json(t.spec.g())},
          {"gamma", t.gamma},
          {"predicted", t.predicted},
          {"witness", t.witness.str()},
          {"checks", checks},
          {"passed", t.passed},
          {"t_power", t.t_power},
          {"alpha_probe", {{"xi", t.alpha_probe_xi.str()}, {"matches", t.alpha_probe_matches}}}};
}

Outcome do_sweep(const Args& a) {
  SweepConfig cfg;
  std::tie(cfg.n_min, cfg.n_max) = parse_range(a.n_range, "--n");
  if (cfg.n_min < 2) throw InputError("--n", "BadArgument", "n must be >= 2");
  if (!a.s_range.empty()) {
    std::tie(cfg.s_min, cfg.s_max) = parse_range(a.s_range, "--s");
    if (cfg.s_min < 1) throw InputError("--s", "BadArgument", "s must be >= 1");
  }
  if (a.trials < 1) throw InputError("--trials", "BadArgument", "trials must be >= 1");
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.mode = parse_mode(a.mode);
  cfg.threads = thread_count();
  const SweepReport rep = sweep_harness(cfg);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<const TrialRecord*>> cells;
  for (const auto& t : rep.trials) cells[{t.n, t.s}].push_back(&t);
  json cell_rows = json::array();
  std::size_t pow_expected = 0, pow_other = 0, pow_below_min = 0;
  for (const auto& [key, recs] : cells) {
    std::size_t pass = 0;
    std::map<std::string, std::size_t> powers;
    for (const auto* t : recs) {
      pass += t->passed;
      ++powers[std::to_string(t->t_power)];
      if (t->t_power == key.first - 1) {
        ++pow_expected;
      } else {
        ++pow_other;
      }
      if (t->t_power < 1 || t->t_power < key.first - key.second - 1) ++pow_below_min;
    }
    cell_rows.push_back({{"n", key.first},
                         {"s", key.second},
                         {"trials", recs.size()},
                         {"passed", pass},
                         {"failed", recs.size() - pass},
                         {"t_power_expected", key.first - 1},
                         {"t_power_observed", powers}});
  }
  json failures = json::array();
  json probe_misses = json::array();
  for (const auto& t : rep.trials) {
    if (!t.passed) failures.push_back(trial_json(t));
    if (!t.alpha_probe_matches) probe_misses.push_back(trial_json(t));
  }

  Outcome o;
  o.body = {{"config",
             {{"n", a.n_range},
              {"s", a.s_range.empty() ? "1..n-1" : a.s_range},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"threshold_mode", mode_name(cfg.mode)},
              {"xi", "witness, witness+1, 1000*witness"}}},
            {"total", rep.trials.size()},
            {"passed", rep.passed},
            {"failed", rep.failed},
            {"t_power",
             {{"equals_n_minus_1", pow_expected}, {"differs", pow_other}, {"below_minimum", pow_below_min}}},
            {"alpha_probe",
             {{"rule", "right end of an isolating interval of alpha_r refined to width 1/64"},
              {"mismatches", rep.alpha_probe_mismatches},
              {"records", probe_misses}}},
            {"failures", failures}};
  json cells_json = cell_rows;
  json trials = json::array();
  if (a.full)
    for (const auto& t : rep.trials) trials.push_back(trial_json(t));

  if (!a.out_path.empty()) {
    json file_body = o.body;
    file_body["cells"] = cells_json;
    if (a.full) file_body["trials"] = trials;
    std::ofstream f(a.out_path);
    if (!f) throw InputError("--out", "BadArgument", "cannot write '" + a.out_path + "'");
    f << file_body.dump(2) << "\n";
    o.body["out"] = a.out_path;
  } else {
    o.body["cells"] = cells_json;
    if (a.full) o.body["trials"] = trials;
  }
  o.ok = rep.all_passed() && pow_below_min == 0;
  return o;
}

Outcome do_phi(const Args& a) {
  if (a.s < 1) throw InputError("--s", "OutOfRange", "s must be >= 1");
  if (a.n <= a.s) throw InputError("--n", "DegreeOrder", "need n > s");
  const QtPoly phi = phi_charpoly_u(a.s, a.n);
  Outcome o;
  o.body = {{"s", a.s}, {"n", a.n}, {"coefficients", to_json(phi)}, {"text", to_string(phi, "x", "t1")}};
  if (a.s >= 3) {
    json rows = json::array();
    for (std::size_t k = 1; k <= a.s; ++k) {
      const LeadingTerm lt = leading_term_h(a.s, a.n, k);
      const QPoly h = phi.coeff(a.s - k);
      const bool match = !h.is_zero() && h.deg() == lt.degree && h.lead() == lt.coefficient;
      o.ok = o.ok && match;
      rows.push_back({{"k", k},
                      {"case", lt.case_label},
                      {"degree", lt.degree},
                      {"coefficient", lt.coefficient.str()},
                      {"observed_degree", h.is_zero() ? json(nullptr) : json(h.deg())},
                      {"observed_coefficient", h.is_zero() ? json("0") : json(h.lead().str())},
                      {"matches", match}});
    }
    o.body["leading_terms"] = rows;
  }
  return o;
}

Outcome do_totally_complex(const Args& a) {
  const QPoly g = parse_poly(load_json_arg(a.g, "--g"), "--g");
  const auto r = guarded("--g", [&] { return totally_complex_construct(a.n, g); });
  Outcome o;
  o.body = {{"n", a.n},
            {"g", to_json(g)},
            {"beta", r.beta.str()},
            {"f", to_json(r.f)},
            {"certificate",
             {{"sturm_count", r.sturm_count}, {"bezout_signature", r.bezout_signature}, {"certified", r.certified}}}};
  o.ok = r.certified;
  return o;
}

Outcome do_paper_examples() {
  Outcome o;
  o.body = paper_examples_report();
  o.ok = o.body.at("passed").get<bool>();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real-root counting with Bezoutian matrices", "bezroot"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit the elapsed_ms field");

  Args a;
  const auto modes = CLI::IsMember({"max-root", "max-abs-root"});

  auto* count = app.add_subcommand("count", "Distinct real roots by Sturm and by Bezoutian signature");
  count->add_option("poly", a.poly, "Polynomial: JSON array (ascending) or file")->required();
  count->add_flag("--isolate", a.isolate, "Also list isolating intervals");
  count->add_option("--width", a.width, "Refine intervals to this width");

  auto* bez = app.add_subcommand("bezout", "Bezoutian matrix M_n(f1, f2), f2 = f1' by default");
  bez->add_option("poly", a.poly, "f1")->required();
  bez->add_option("--f2", a.f2, "Second polynomial");
  bez->add_option("--n", a.n, "Order (default max degree)");
  bez->add_flag("--reversed", a.reversed, "Reversed-index variant");

  auto* inr = app.add_subcommand("inertia", "Inertia of a symmetric rational matrix");
  inr->add_option("matrix", a.matrix, "{\"order\", \"entries\"} or array of rows, inline or file")->required();
  inr->add_option("--method", a.method, "congruence | charpoly | both")
      ->check(CLI::IsMember({"congruence", "charpoly", "both"}));

  auto* disc = app.add_subcommand("disc", "Discriminant and det of the Bezoutian");
  disc->add_option("poly", a.poly, "Polynomial")->required();

  auto* disct = app.add_subcommand("disc-t", "Discriminant of x^n + t g(x) in t");
  disct->add_option("--n", a.n, "n")->required();
  disct->add_option("--g", a.g, "g")->required();

  auto* family = app.add_subcommand("family", "The family x^n + t g(x)");
  family->require_subcommand(1);
  auto* fpredict = family->add_subcommand("predict", "Predicted real-root count");
  fpredict->add_option("--n", a.n, "n")->required();
  fpredict->add_option("--g", a.g, "g")->required();
  fpredict->add_option("--threshold-mode", a.mode, "max-root | max-abs-root")->check(modes);
  auto* fverify = family->add_subcommand("verify", "Check the prediction at given xi");
  fverify->add_option("--n", a.n, "n")->required();
  fverify->add_option("--g", a.g, "g")->required();
  fverify->add_option("--xi", a.xis, "Parameter values (repeatable)")->required();
  fverify->add_option("--threshold-mode", a.mode, "max-root | max-abs-root")->check(modes);
  auto* fsweep = family->add_subcommand("sweep", "Seeded random sweep");
  fsweep->add_option("--n", a.n_range, "N or LO..HI");
  fsweep->add_option("--s", a.s_range, "N or LO..HI (default 1..n-1)");
  fsweep->add_option("--trials", a.trials, "Specs per (n, s)");
  fsweep->add_option("--seed", a.seed, "Seed");
  fsweep->add_option("--threshold-mode", a.mode, "max-root | max-abs-root")->check(modes);
  fsweep->add_option("--out", a.out_path, "Write the full report here");
  fsweep->add_flag("--full", a.full, "Include every trial");
  auto* fphi = family->add_subcommand("phi", "Characteristic polynomial of B-bar for g = x^s + t1 x + 1");
  fphi->add_option("--s", a.s, "s")->required();
  fphi->add_option("--n", a.n, "n")->required();

  auto* tc = app.add_subcommand("totally-complex", "Build a certified totally complex x^n + beta g(x)");
  tc->add_option("--n", a.n, "n")->required();
  tc->add_option("--g", a.g, "g")->required();

  auto* verify = app.add_subcommand("verify", "Reproduction checks");
  verify->add_option("target", a.target, "paper-examples")->required()->check(CLI::IsMember({"paper-examples"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::function<Outcome()> action;
  if (*count) action = [&] { return do_count(a); };
  if (*bez) action = [&] { return do_bezout(a); };
  if (*inr) action = [&] { return do_inertia(a); };
  if (*disc) action = [&] { return do_disc(a); };
  if (*disct) action = [&] { return do_disc_t(a); };
  if (*fpredict) action = [&] { return do_predict(a); };
  if (*fverify) action = [&] { return do_verify_family(a); };
  if (*fsweep) action = [&] { return do_sweep(a); };
  if (*fphi) action = [&] { return do_phi(a); };
  if (*tc) action = [&] { return do_totally_complex(a); };
  if (*verify) action = [&] { return do_paper_examples(); };

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = action();
  } catch (const InputError& e) {
    err << "bezroot: error: " << e.flag() << ": " << e.what() << "\n";
    out << json{{"error", {{"flag", e.flag()}, {"code", e.code()}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "bezroot: error: " << e.what() << "\n";
    out << json{{"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  if (!no_timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    result.body["elapsed_ms"] = ms.count();
  }
  result.body["ok"] = result.ok;
  out << result.body.dump(2) << "\n";
  return result.ok ? 0 : 1;
}

}  // namespace bezroot::cli
