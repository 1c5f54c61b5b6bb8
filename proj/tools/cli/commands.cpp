#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"
#include "parallelo/exact_math.hpp"
#include "parallelo/experiments.hpp"
#include "parallelo/lattice.hpp"
#include "parallelo/visible_count.hpp"

namespace parallelo::cli {

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

namespace {

// Signals an input problem after argument parsing succeeded.
struct UsageError {
  std::string message;
};

void emit(const RunConfig& cfg, const std::string& csv, const OutputEnvelope& envelope, std::ostream& out) {
  std::string text = cfg.out_format == OutFormat::Csv ? csv : envelope.to_json().dump(2) + "\n";
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) throw UsageError{"cannot open output file '" + *cfg.out_path + "'"};
    file << text;
  } else {
    out << text;
  }
}

CanonicalParallelogram require_canonical(std::int64_t a, std::int64_t n) {
  if (auto why = canonical_violation(a, n); !why.empty()) {
    throw UsageError{"invalid parallelogram (a=" + std::to_string(a) + ", n=" + std::to_string(n) + "): " + why};
  }
  return {a, n};
}

const SieveTables* sieve_within_budget(const RunConfig& cfg, std::int64_t limit,
                                       std::shared_ptr<const SieveTables>& holder) {
  if (limit > cfg.sieve_max) return nullptr;  // trial division instead
  holder = shared_sieves(limit, cfg.sieve_max);
  return holder.get();
}

CountMethod core_method(Method m) {
  switch (m) {
    case Method::Direct: return CountMethod::Direct;
    case Method::Formula: return CountMethod::Formula;
    case Method::Auto: return CountMethod::ClosedForm;
  }
  return CountMethod::Direct;
}

LatticePoint parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError{"expected x,y but got '" + text + "'"};
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    LatticePoint p{std::stoll(xs, &u1), std::stoll(ys, &u2)};
    if (u1 != xs.size() || u2 != ys.size()) throw std::invalid_argument("trailing");
    return p;
  } catch (const std::exception&) {
    throw UsageError{"expected integer pair x,y but got '" + text + "'"};
  }
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::int64_t a = 0, n = 0;
  bool columns = false;
  bool report = false;
};

int cmd_count(const RunConfig& cfg, const CountArgs& args, std::ostream& out) {
  CanonicalParallelogram c = require_canonical(args.a, args.n);
  std::shared_ptr<const SieveTables> holder;
  const SieveTables* sieve = sieve_within_budget(cfg, c.a(), holder);

  CountBreakdown b = [&] {
    switch (cfg.method) {
      case Method::Formula: return count_formula(c, args.columns, sieve);
      case Method::Auto: return count_auto(c);
      case Method::Direct: break;
    }
    return count_direct(c);
  }();

  OutputEnvelope env{"count"};
  env.parameters = {{"a", c.a()}, {"n", c.n()}, {"method", to_string(cfg.method)}};
  Json rec = {{"a", c.a()}, {"n", c.n()}, {"V", b.v}, {"ratio", rational_json(b.ratio())},
              {"method", std::string(to_string(b.method))}};
  if (b.columns) rec["columns"] = *b.columns;

  std::ostringstream csv;
  csv << "a,n,V,ratio_num,ratio_den,ratio_float,method";
  std::optional<MobiusRatio> mr;
  if (args.report) {
    mr = count_mobius_ratio(c, sieve);
    csv << ",main_term_float,double_sum_float,bound,error_term_float";
    rec["error_term"] = {{"main_term", rational_json(mr->report.main_term)},
                         {"double_sum", rational_json(mr->report.double_sum)},
                         {"bound", mr->report.bound}};
  }
  csv << "\n"
      << c.a() << ',' << c.n() << ',' << b.v << ',' << b.ratio().num() << ',' << b.ratio().den() << ','
      << format_float(b.ratio().to_double()) << ',' << to_string(b.method);
  if (mr) {
    BigRational error_term = BigRational(mr->ratio) - mr->report.main_term;
    csv << ',' << format_float(mr->report.main_term.to_double()) << ','
        << format_float(mr->report.double_sum.to_double()) << ',' << mr->report.bound << ','
        << format_float(error_term.to_double());
  }
  csv << "\n";
  env.records.push_back(rec);

  if (b.method != CountMethod::Direct) {
    std::int64_t direct = count_direct(c).v;
    env.checks.push_back({"agrees with direct scan", direct == b.v, "direct V=" + std::to_string(direct)});
  }
  if (mr) {
    bool ok = mr->ratio == b.ratio();
    env.checks.push_back({"moebius ratio identity", ok, "ratio=" + mr->ratio.str()});
  }
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ProfileArgs {
  std::int64_t n = 0;
  std::optional<std::int64_t> resume_from;
};

int cmd_profile(const RunConfig& cfg, const ProfileArgs& args, std::ostream& out) {
  if (args.n < 2) throw UsageError{"profile requires n >= 2"};
  auto records = profile(args.n, core_method(cfg.method), cfg.threads);
  OutputEnvelope env{"profile"};
  env.parameters = {{"n", args.n}, {"method", to_string(cfg.method)}};
  if (args.resume_from) env.parameters["resume_from"] = *args.resume_from;
  std::ostringstream csv;
  csv << "n,a,V,ratio_num,ratio_den,ratio_float\n";
  for (const auto& r : records) {
    if (args.resume_from && r.a < *args.resume_from) continue;
    csv << r.n << ',' << r.a << ',' << r.v << ',' << r.ratio.num() << ',' << r.ratio.den() << ','
        << format_float(r.ratio_float) << '\n';
    env.records.push_back(profile_record_json(r));
  }
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
  std::int64_t n_min = 0, n_max = 0;
  std::optional<std::int64_t> resume_from;
};

int cmd_scan(const RunConfig& cfg, const ScanArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_min < 2 || args.n_min > args.n_max) throw UsageError{"scan range requires 2 <= n-min <= n-max"};
  std::int64_t start = args.n_min;
  if (args.resume_from) {
    if (*args.resume_from < args.n_min || *args.resume_from > args.n_max) {
      throw UsageError{"--resume-from must lie in [n-min, n-max]"};
    }
    start = *args.resume_from;
  }
  ScanOptions opts;
  opts.threads = cfg.threads;
  opts.method = core_method(cfg.method);
  std::size_t last_pct = 0;
  opts.progress = [&](std::size_t done, std::size_t total) {
    std::size_t pct = done * 100 / total;
    if (pct >= last_pct + 10 || done == total) {
      last_pct = pct;
      err << "scan: " << done << "/" << total << " values of n done\n";
    }
  };
  ScanReport rep = conjecture_scan(start, args.n_max, opts);

  OutputEnvelope env{"scan"};
  env.parameters = {{"n_min", args.n_min}, {"n_max", args.n_max}, {"method", to_string(cfg.method)}};
  if (args.resume_from) env.parameters["resume_from"] = *args.resume_from;

  std::ostringstream csv;
  csv << "n,admissible,min_a,min_ratio_num,min_ratio_den,max_a,max_ratio_num,max_ratio_den,violations\n";
  for (const auto& row : rep.rows) {
    csv << row.n << ',' << row.admissible << ',';
    if (row.min) {
      csv << row.min->a << ',' << row.min->ratio.num() << ',' << row.min->ratio.den() << ',' << row.max->a << ','
          << row.max->ratio.num() << ',' << row.max->ratio.den();
    } else {
      csv << ",,,,,";
    }
    csv << ',' << row.violations.size() << '\n';
    Json r = {{"n", row.n}, {"admissible", row.admissible}};
    r["min"] = row.min ? witness_json(*row.min) : Json(nullptr);
    r["max"] = row.max ? witness_json(*row.max) : Json(nullptr);
    r["violations"] = row.violations.size();
    env.records.push_back(r);
  }

  Json summary = {{"n_min", rep.n_min}, {"n_max", rep.n_max}, {"excluded", rep.excluded}, {"admissible", rep.admissible}};
  summary["min_ratio"] = rep.min ? witness_json(*rep.min) : Json(nullptr);
  summary["max_ratio"] = rep.max ? witness_json(*rep.max) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : rep.violations) violations.push_back(profile_record_json(v));
  summary["violations"] = violations;
  env.summary = summary;
  env.checks.push_back({"1/2 < V/n < 3/4", rep.violations.empty(),
                        std::to_string(rep.violations.size()) + " violations among " +
                            std::to_string(rep.admissible) + " pairs"});
  emit(cfg, csv.str(), env, out);

  if (rep.min) err << "scan: min ratio " << rep.min->ratio << " at (a=" << rep.min->a << ", n=" << rep.min->n << ")\n";
  if (rep.max) err << "scan: max ratio " << rep.max->ratio << " at (a=" << rep.max->a << ", n=" << rep.max->n << ")\n";
  if (!rep.violations.empty()) {
    const auto& v = rep.violations.front();
    err << "scan: CONJECTURE VIOLATION: " << rep.violations.size() << " pair(s), first V(" << v.a << "," << v.n
        << ")/" << v.n << " = " << v.ratio << "\n";
    return kExitFinding;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
  std::string u, v;
};

int cmd_reduce(const RunConfig& cfg, const ReduceArgs& args, std::ostream& out) {
  LatticePoint u = parse_point(args.u), v = parse_point(args.v);
  ReductionResult red = [&] {
    try {
      return reduce_to_canonical(u, v);
    } catch (const ReductionError& e) {
      throw UsageError{std::string(to_string(e.kind())) + ": " + e.what()};
    }
  }();
  const auto& c = red.canonical;
  CountBreakdown b = count(c, core_method(cfg.method));
  const auto& m = red.map;

  OutputEnvelope env{"reduce"};
  env.parameters = {{"u", {u.x, u.y}}, {"v", {v.x, v.y}}, {"method", to_string(cfg.method)}};
  env.records.push_back({{"a", c.a()},
                         {"n", c.n()},
                         {"map", {{m.m11(), m.m12()}, {m.m21(), m.m22()}}},
                         {"swapped", red.swapped},
                         {"V", b.v}});
  LatticePoint first = red.swapped ? v : u, second = red.swapped ? u : v;
  bool sends = apply_map(m, first) == LatticePoint{1, 0} && apply_map(m, second) == LatticePoint{c.a(), c.n()};
  env.checks.push_back({"map sends basis to {(1,0),(a,n)}", sends, "det=" + std::to_string(m.determinant())});

  std::ostringstream csv;
  csv << "u_x,u_y,v_x,v_y,swapped,a,n,m11,m12,m21,m22,V\n"
      << u.x << ',' << u.y << ',' << v.x << ',' << v.y << ',' << (red.swapped ? "true" : "false") << ',' << c.a()
      << ',' << c.n() << ',' << m.m11() << ',' << m.m12() << ',' << m.m21() << ',' << m.m22() << ',' << b.v << '\n';
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct RhoArgs {
  std::optional<std::string> name;
  std::optional<std::string> value;
  std::int64_t n_min = 5, n_max = 0, step = 1;
  bool primes = false;
  std::string policy = "skip";
  std::optional<std::int64_t> resume_from;
};

int cmd_rho(const RunConfig& cfg, const RhoArgs& args, std::ostream& out, std::ostream& err) {
  if (args.name.has_value() == args.value.has_value()) throw UsageError{"give exactly one of --name or --value"};
  RhoSpec rho = [&] {
    try {
      return args.name ? RhoSpec::named(*args.name) : RhoSpec::parse_value(*args.value);
    } catch (const InvalidArgument& e) {
      throw UsageError{e.what()};
    }
  }();
  CoprimePolicy policy;
  if (args.policy == "skip") policy = CoprimePolicy::Skip;
  else if (args.policy == "nearest") policy = CoprimePolicy::NearestCoprime;
  else throw UsageError{"policy must be skip or nearest"};
  if (args.n_min < 2 || args.n_min > args.n_max) throw UsageError{"rho range requires 2 <= n-min <= n-max"};
  if (args.step < 1) throw UsageError{"step must be >= 1"};
  if (rho.is_rational_proxy()) {
    err << "rho: warning: " << rho.label() << " is a rational proxy; the limit statement concerns irrationals\n";
  }

  std::int64_t lo = args.n_min;
  if (args.resume_from) {
    if (*args.resume_from < args.n_min) throw UsageError{"--resume-from must be >= n-min"};
    while (lo < *args.resume_from) lo += args.step;
  }
  auto ns = n_range(lo, args.n_max, args.step, args.primes);
  auto records = rho_sequence(rho, ns, policy, cfg.threads);
  auto median = median_deviation(records);

  OutputEnvelope env{"rho"};
  env.parameters = {{"rho", rho.label()}, {"rational_proxy", rho.is_rational_proxy()}, {"n_min", args.n_min},
                    {"n_max", args.n_max}, {"step", args.step}, {"primes", args.primes}, {"policy", args.policy}};
  if (args.resume_from) env.parameters["resume_from"] = *args.resume_from;

  std::ostringstream csv;
  csv << "n,a,skipped,reason,V,ratio_num,ratio_den,ratio_float,deviation\n";
  std::size_t used = 0;
  for (const auto& r : records) {
    csv << r.n << ',' << r.a << ',' << (r.skipped ? "true" : "false") << ',' << csv_field(r.reason) << ',';
    Json j = {{"n", r.n}, {"a", r.a}, {"skipped", r.skipped}, {"reason", r.reason}};
    if (r.skipped) {
      csv << ",,,,\n";
      j["V"] = nullptr;
      j["ratio"] = nullptr;
      j["deviation"] = nullptr;
    } else {
      ++used;
      csv << *r.v << ',' << r.ratio->num() << ',' << r.ratio->den() << ',' << format_float(r.ratio->to_double())
          << ',' << format_float(r.deviation) << '\n';
      j["V"] = *r.v;
      j["ratio"] = rational_json(*r.ratio);
      j["deviation"] = r.deviation;
    }
    env.records.push_back(j);
  }
  csv << "# median_deviation=" << (median ? format_float(*median) : std::string("nan")) << " records=" << records.size()
      << " used=" << used << " target=" << format_float(kCoprimeDensity) << '\n';
  env.summary = Json{{"median_deviation", median ? Json(*median) : Json(nullptr)},
                     {"records", records.size()},
                     {"used", used},
                     {"target", kCoprimeDensity}};
  emit(cfg, csv.str(), env, out);
  if (median) err << "rho: median |V/n - 6/pi^2| = " << format_float(*median) << " over " << used << " values\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_phimean(const RunConfig& cfg, std::int64_t a, std::ostream& out) {
  if (a < 1) throw UsageError{"phimean requires a >= 1"};
  BigRational mean = phi_mean(a);
  double dev = std::abs(mean.to_double() - kCoprimeDensity);
  OutputEnvelope env{"phimean"};
  env.parameters = {{"a", a}};
  env.records.push_back({{"a", a}, {"phi_mean", rational_json(mean)}, {"deviation", dev}});
  std::ostringstream csv;
  csv << "a,num,den,decimal,deviation\n"
      << a << ',' << mean.num().get_str() << ',' << mean.den().get_str() << ',' << format_float(mean.to_double())
      << ',' << format_float(dev) << '\n';
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

int cmd_density(const RunConfig& cfg, std::int64_t r, std::ostream& out) {
  if (r < 1) throw UsageError{"density requires r >= 1"};
  DensityResult d = square_density(r);
  double dev = std::abs(d.ratio - kCoprimeDensity);
  OutputEnvelope env{"density"};
  env.parameters = {{"r", r}};
  env.records.push_back({{"r", r}, {"visible", d.visible}, {"total", d.total},
                         {"ratio", rational_json(Rational(d.visible, d.total))}, {"deviation", dev}});
  std::ostringstream csv;
  csv << "r,visible,total,ratio,deviation\n"
      << r << ',' << d.visible << ',' << d.total << ',' << format_float(d.ratio) << ',' << format_float(dev) << '\n';
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

struct DiscrepancyArgs {
  std::int64_t a = 0, n = 0;
  std::optional<std::int64_t> q;
};

int cmd_discrepancy(const RunConfig& cfg, const DiscrepancyArgs& args, std::ostream& out) {
  CanonicalParallelogram c = require_canonical(args.a, args.n);
  std::int64_t q = args.q.value_or(c.a());
  if (q < 1 || q > c.a()) throw UsageError{"q must satisfy 1 <= q <= a"};
  double d = discrepancy(c, q);
  std::shared_ptr<const SieveTables> holder;
  MobiusRatio mr = count_mobius_ratio(c, sieve_within_budget(cfg, c.a(), holder));
  double error_term = (BigRational(mr.ratio) - mr.report.main_term).to_double();
  OutputEnvelope env{"discrepancy"};
  env.parameters = {{"a", c.a()}, {"n", c.n()}, {"q", q}};
  env.records.push_back({{"a", c.a()}, {"n", c.n()}, {"q", q}, {"discrepancy", d}, {"error_term", error_term}});
  std::ostringstream csv;
  csv << "a,n,q,discrepancy,error_term\n"
      << c.a() << ',' << c.n() << ',' << q << ',' << format_float(d) << ',' << format_float(error_term) << '\n';
  emit(cfg, csv.str(), env, out);
  return kExitOk;
}

}  // namespace

int cmd_selftest(const RunConfig& cfg, bool quick, std::ostream& out, std::ostream& err, CheckOptions checks) {
  checks.quick = quick;
  checks.threads = cfg.threads;
  checks.on_result = [&](const CheckResult& r) {
    err << "selftest: " << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
  };
  auto results = run_invariant_checks(checks);
  OutputEnvelope env{"selftest"};
  env.parameters = {{"quick", quick}};
  std::ostringstream csv;
  csv << "check,status,detail\n";
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    csv << csv_field(r.name) << ',' << (r.passed ? "pass" : "fail") << ',' << csv_field(r.detail) << '\n';
    env.checks.push_back({r.name, r.passed, r.detail});
    if (!r.passed && first_failure == nullptr) first_failure = &r;
  }
  emit(cfg, csv.str(), env, out);
  if (first_failure != nullptr) {
    err << "selftest: first failing property: " << first_failure->name << "\n";
    return kExitFinding;
  }
  err << "selftest: all " << results.size() << " properties hold\n";
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Visible lattice points in clean lattice parallelograms"};
  app.name("parallelo");
  app.require_subcommand(1);
  app.fallthrough();

  std::string method_text, format_text, config_path;
  std::optional<std::string> out_path;
  std::int64_t sieve_max = 0;
  unsigned threads = 0;
  auto* method_opt = app.add_option("--method", method_text, "direct | formula | auto")
                         ->check(CLI::IsMember({"direct", "formula", "auto"}));
  auto* format_opt = app.add_option("--format", format_text, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  auto* threads_opt = app.add_option("--threads", threads, "worker threads, 0 = all cores (env PARALLELO_THREADS)");
  auto* sieve_opt = app.add_option("--sieve-max", sieve_max, "largest sieve the run may build")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--config", config_path, "key=value file with the same keys as the flags");

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "V(a,n) for one parallelogram");
  count_cmd->add_option("--a", count_args.a)->required();
  count_cmd->add_option("--n", count_args.n)->required();
  count_cmd->add_flag("--columns", count_args.columns, "keep per-column counts (formula method)");
  count_cmd->add_flag("--report", count_args.report, "add the Moebius main term and error term");

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "f_n(a) = V(a,n)/n for all coprime a");
  profile_cmd->add_option("--n", profile_args.n)->required();
  profile_cmd->add_option("--resume-from", profile_args.resume_from, "emit rows from this a onward");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "check 1/2 < V/n < 3/4 over a range of n");
  scan_cmd->add_option("--n-min", scan_args.n_min)->required();
  scan_cmd->add_option("--n-max", scan_args.n_max)->required();
  scan_cmd->add_option("--resume-from", scan_args.resume_from, "restart at this n");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "canonical P_{a,n} of the parallelogram spanned by u, v");
  reduce_cmd->add_option("--u", reduce_args.u, "x,y")->required();
  reduce_cmd->add_option("--v", reduce_args.v, "x,y")->required();

  RhoArgs rho_args;
  auto* rho_cmd = app.add_subcommand("rho", "V(ceil(rho n), n)/n along a sequence of n");
  rho_cmd->add_option("--name", rho_args.name, "golden | silver | e-2");
  rho_cmd->add_option("--value", rho_args.value, "rational proxy, p/q or decimal");
  rho_cmd->add_option("--n-min", rho_args.n_min, "first n (default 5)");
  rho_cmd->add_option("--n-max", rho_args.n_max)->required();
  rho_cmd->add_option("--step", rho_args.step, "n increment (default 1)");
  rho_cmd->add_flag("--primes", rho_args.primes, "prime n only");
  rho_cmd->add_option("--policy", rho_args.policy, "skip | nearest, when gcd(a,n) > 1");
  rho_cmd->add_option("--resume-from", rho_args.resume_from, "restart at this n");

  std::int64_t phimean_a = 0;
  auto* phimean_cmd = app.add_subcommand("phimean", "(1/a) sum phi(s)/s, exact");
  phimean_cmd->add_option("--a", phimean_a)->required();

  std::int64_t density_r = 0;
  auto* density_cmd = app.add_subcommand("density", "visible fraction of [-r,r]^2");
  density_cmd->add_option("--r", density_r)->required();

  DiscrepancyArgs disc_args;
  auto* disc_cmd = app.add_subcommand("discrepancy", "star discrepancy of frac(kn/a), k <= q");
  disc_cmd->add_option("--a", disc_args.a)->required();
  disc_cmd->add_option("--n", disc_args.n)->required();
  disc_cmd->add_option("--q", disc_args.q, "sample count (default a)");

  bool quick = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run every invariant at desk scale");
  selftest_cmd->add_flag("--quick", quick, "reduced ranges (n <= 100)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_settings(cfg, read_config_file(config_path));
    if (auto t = env("PARALLELO_THREADS"); t && !t->empty()) apply_settings(cfg, {{"threads", *t}});
    if (method_opt->count() > 0) cfg.method = parse_method(method_text);
    if (format_opt->count() > 0) cfg.out_format = parse_format(format_text);
    if (threads_opt->count() > 0) cfg.threads = threads;
    if (sieve_opt->count() > 0) cfg.sieve_max = sieve_max;
    if (out_path) cfg.out_path = out_path;

    if (count_cmd->parsed()) return cmd_count(cfg, count_args, out);
    if (profile_cmd->parsed()) return cmd_profile(cfg, profile_args, out);
    if (scan_cmd->parsed()) return cmd_scan(cfg, scan_args, out, err);
    if (reduce_cmd->parsed()) return cmd_reduce(cfg, reduce_args, out);
    if (rho_cmd->parsed()) return cmd_rho(cfg, rho_args, out, err);
    if (phimean_cmd->parsed()) return cmd_phimean(cfg, phimean_a, out);
    if (density_cmd->parsed()) return cmd_density(cfg, density_r, out);
    if (disc_cmd->parsed()) return cmd_discrepancy(cfg, disc_args, out);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, quick, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parallelo::cli
