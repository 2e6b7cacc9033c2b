#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "dzeta/dzeta.hpp"

namespace dzeta::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + s + "'");
  }
}

Json rats(const std::vector<BigRat>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

Json rats(const Poly& p) { return rats(p.coeffs()); }

Json ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

CurveSpec curve_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("curve JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("curve JSON must be an object");
  try {
    std::string label = j.value("label", std::string());
    long q = j.at("q").get<long>();
    int g = j.at("genus").get<int>();
    int sources = int(j.contains("trace")) + int(j.contains("point_counts")) + int(j.contains("numerator"));
    if (sources != 1) throw UsageError("curve JSON needs exactly one of trace, point_counts, numerator");
    if (j.contains("trace")) {
      if (g != 1) throw UsageError("trace input requires genus 1");
      return CurveSpec::elliptic(q, j["trace"].get<long>(), label);
    }
    if (j.contains("point_counts")) {
      return CurveSpec::from_counts(q, g, j["point_counts"].get<std::vector<long>>(),
                                    label.empty() ? "counts:q=" + std::to_string(q) : label);
    }
    std::vector<BigRat> A;
    for (const auto& x : j["numerator"]) {
      try {
        A.push_back(x.is_string() ? BigRat::parse(x.get<std::string>()) : BigRat(x.get<long>()));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("numerator entry: ") + e.what());
      }
    }
    return CurveSpec::from_numerator(q, g, A, label.empty() ? "numerator:q=" + std::to_string(q) : label);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("curve JSON: ") + e.what());
  }
}

CurveSpec parse_curve(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw UsageError("empty curve");
  if (text.front() == '{') return curve_from_json_text(text);
  if (text.rfind("elliptic:", 0) == 0) {
    long q = 0, a = 0;
    bool have_q = false, have_a = false;
    std::stringstream ss(text.substr(9));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value in '" + text + "'");
      std::string k = trim(kv.substr(0, eq)), v = kv.substr(eq + 1);
      if (k == "q") {
        q = parse_long(v, "q");
        have_q = true;
      } else if (k == "a") {
        a = parse_long(v, "a");
        have_a = true;
      } else {
        throw UsageError("unknown key '" + k + "' in elliptic curve");
      }
    }
    if (!have_q || !have_a) throw UsageError("elliptic curve needs q and a");
    return CurveSpec::elliptic(q, a);
  }
  if (text.rfind("catalog:", 0) == 0) {
    const PlaneCurve* c = nullptr;
    try {
      c = &catalog_curve(text.substr(8));
    } catch (const std::invalid_argument&) {
      throw UsageError("unknown catalog curve '" + text.substr(8) + "'");
    }
    std::vector<long> counts;
    for (int k = 1; k <= c->genus; ++k) counts.push_back(count_points_bruteforce(*c, c->p, k));
    return CurveSpec::from_counts(c->p, c->genus, counts, c->label);
  }
  std::ifstream in(text);
  if (!in) throw UsageError("curve file not found: " + text);
  std::stringstream buf;
  buf << in.rdbuf();
  return curve_from_json_text(buf.str());
}

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> t;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    long v = parse_long(part, "tuple entry");
    if (v < 1) throw UsageError("tuple entries must be positive integers, got " + std::to_string(v));
    if (v > 1000000) throw UsageError("tuple entry too large: " + std::to_string(v));
    t.push_back(static_cast<int>(v));
  }
  if (t.empty()) throw UsageError("empty tuple");
  return t;
}

std::vector<std::vector<int>> parse_tuples(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (!trim(part).empty()) out.push_back(parse_tuple(part));
  }
  if (out.empty()) throw UsageError("no tuples given");
  return out;
}

int parse_tolerance_exp(const std::string& raw) {
  std::string t = trim(raw);
  std::string digits;
  if (t.rfind("1e-", 0) == 0 || t.rfind("1E-", 0) == 0) {
    digits = t.substr(3);
  } else {
    digits = t;
  }
  long e = parse_long(digits, "tolerance");
  if (e < 1 || e > 100000) throw UsageError("tolerance exponent out of range: " + raw);
  return static_cast<int>(e);
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

namespace {

struct Options {
  std::string curve;
  std::string tuple;
  bool normalize = false;
  std::string output;
  std::string format = "json";
  int precision_bits = 256;
  std::string tolerance;
  int jobs = 1;
  long max_product = 64;
  bool no_product_cap = false;
  bool numeric = false;

  // sweep
  std::vector<std::string> curves;
  std::string grid;
  std::string tuples;
  std::string checks = "all";
  int ratio_n_max = 8;
  std::string ratio_csv;
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  return parse_long(v, std::string("environment variable ") + name);
}

void check_cap(const std::vector<int>& tuple, const Options& o) {
  if (o.no_product_cap) return;
  long prod = 1;
  for (int n : tuple) {
    prod *= n;
    if (prod > o.max_product) {
      throw UsageError("tuple product exceeds cap " + std::to_string(o.max_product) +
                       " (raise with --max-product or pass --no-product-cap)");
    }
  }
}

RHNumericOptions rh_options(const Options& o) {
  RHNumericOptions r;
  if (o.precision_bits < 32) throw UsageError("precision below 32 bits");
  r.precision_bits = o.precision_bits;
  if (!o.tolerance.empty()) r.tolerance_exp = parse_tolerance_exp(o.tolerance);
  return r;
}

void emit(const Options& o, const std::string& body, std::ostream& out) {
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write output file: " + o.output);
  f << body;
}

// Builds the base level, mapping any construction failure to a usage error.
ZetaLevel base_level(const CurveSpec& c) {
  try {
    return artin_zeta(c);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid curve: ") + e.what());
  }
}

Json level_json(const ZetaLevel& z) {
  Json j;
  j["tuple"] = ints(z.tuple);
  j["Q"] = z.Q.str();
  j["genus"] = z.genus;
  j["numerator"] = rats(level_numerator(z));
  j["zeta"] = {{"num", rats(z.zeta.num())}, {"den", rats(z.zeta.den())}};
  j["normalized"] = z.normalized;
  j["norm_const"] = z.norm_const.str();
  return j;
}

Json verdict_json(const RHVerdict& v) {
  Json j;
  j["method"] = to_string(v.method);
  j["status"] = to_string(v.status);
  if (v.method == RHVerdict::Method::exact_g1) {
    j["boundary"] = v.boundary;
    j["discriminant_sign"] = v.discriminant_sign;
  } else {
    j["deviations"] = v.deviations;
    j["max_deviation"] = v.max_deviation;
    j["self_inversive"] = v.self_inversive;
    j["precision_bits"] = v.precision_bits;
    j["tolerance"] = v.tolerance;
    j["iterations"] = v.iterations;
  }
  j["diagnostics"] = v.diagnostics;
  return j;
}

Json gamma_signs_json(const ZetaLevel& prefix, int n) {
  GammaCheck gc = gamma_interlacing_check(gamma_poly(special_values(prefix, n), n));
  Json j;
  j[std::to_string(n)] = gc.signs;
  return j;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string join_rats(const std::vector<BigRat>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].str();
  return s;
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream& err) {
  CurveSpec c = parse_curve(o.curve);
  std::vector<int> tuple = parse_tuple(o.tuple);
  check_cap(tuple, o);
  ZetaLevel base = base_level(c);
  std::vector<ZetaLevel> tower = derive_tower(o.normalize ? normalize_level(base) : base, tuple, o.normalize);
  Json j;
  j["curve"] = c.label;
  j["q"] = c.q;
  j["genus"] = base.genus;
  j["normalize"] = o.normalize;
  j["base"] = level_json(base);
  j["levels"] = Json::array();
  std::ostream& summary = o.output.empty() ? err : out;
  for (const auto& lv : tower) {
    j["levels"].push_back(level_json(lv));
    summary << "level " << tuple_str(lv.tuple) << ": Q=" << lv.Q.str() << " P=" << level_numerator(lv).str() << '\n';
  }
  emit(o, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream&) {
  CurveSpec c = parse_curve(o.curve);
  std::vector<int> tuple = parse_tuple(o.tuple);
  check_cap(tuple, o);
  ZetaLevel base = base_level(c);
  if (o.normalize) base = normalize_level(base);
  std::vector<ZetaLevel> tower = derive_tower(base, tuple, o.normalize);
  std::vector<Json> reports;
  std::string csv = "curve,tuple,Q,genus,alphas,beta,positivity\n";
  for (size_t i = 0; i < tower.size(); ++i) {
    const ZetaLevel& lv = tower[i];
    const ZetaLevel& prefix = i == 0 ? base : tower[i - 1];
    InvariantSet inv = extract_invariants(lv);
    Json r;
    r["curve"] = c.label;
    r["tuple"] = ints(lv.tuple);
    r["Q"] = inv.Q.str();
    r["alphas"] = rats(inv.alphas);
    r["beta"] = inv.beta.str();
    r["positivity"] = inv.positive();
    r["gamma_signs"] = gamma_signs_json(prefix, lv.tuple.back());
    reports.push_back(r);
    std::string ts = tuple_str(lv.tuple);
    csv += csv_quote(c.label) + "," + csv_quote(ts) + "," + inv.Q.str() + "," + std::to_string(inv.genus) + "," +
           join_rats(inv.alphas) + "," + inv.beta.str() + "," + (inv.positive() ? "true" : "false") + "\n";
  }
  if (o.format == "csv") {
    emit(o, csv, out);
  } else {
    emit(o, Json(reports).dump(2) + "\n", out);
  }
  return kOk;
}

int cmd_rh_check(const Options& o, std::ostream& out, std::ostream&) {
  CurveSpec c = parse_curve(o.curve);
  ZetaLevel z = base_level(c);
  std::vector<int> tuple;
  if (!o.tuple.empty()) {
    tuple = parse_tuple(o.tuple);
    check_cap(tuple, o);
    z = derive_tower(z, tuple, o.normalize).back();
  }
  InvariantSet inv = extract_invariants(z);
  RHNumericOptions ropt = rh_options(o);
  RHVerdict v = o.numeric ? rh_numeric(inv, ropt) : rh_check(inv, ropt);
  Json j;
  j["curve"] = c.label;
  j["tuple"] = ints(tuple);
  j["Q"] = inv.Q.str();
  j["genus"] = inv.genus;
  j["numerator"] = rats(inv.A);
  j["verdict"] = verdict_json(v);
  emit(o, j.dump(2) + "\n", out);
  return v.status == RHStatus::holds ? kOk : kCheckFailed;
}

std::vector<CurveSpec> builtin_grid(const std::string& name) {
  std::vector<CurveSpec> out;
  if (name == "builtin-elliptic") {
    for (long q : {2L, 3L, 4L, 5L}) {
      for (long a = -4; a <= 4; ++a) {
        if (a * a <= 4 * q) out.push_back(CurveSpec::elliptic(q, a));
      }
    }
  } else if (name == "builtin-catalog") {
    for (const auto& c : curve_catalog()) out.push_back(parse_curve("catalog:" + c.label));
  } else {
    throw UsageError("unknown grid '" + name + "' (builtin-elliptic, builtin-catalog)");
  }
  return out;
}

Json cell_json(const SweepCell& c) {
  Json j;
  j["curve"] = c.curve;
  j["tuple"] = ints(c.tuple);
  if (c.error) {
    j["error"] = *c.error;
    return j;
  }
  Json checks = Json::object();
  for (const auto& [name, st] : c.checks) checks[name] = to_string(st);
  j["checks"] = checks;
  Json d;
  d["Q"] = c.Q.str();
  d["genus"] = c.genus;
  d["numerator"] = rats(c.numerator);
  d["alphas"] = rats(c.alphas);
  d["beta"] = c.beta.str();
  d["positivity"] = c.positivity;
  d["level_positivity"] = c.level_positivity;
  if (c.rh) d["rh"] = verdict_json(*c.rh);
  if (c.rh_numeric_cross) d["rh_numeric"] = verdict_json(*c.rh_numeric_cross);
  if (!c.gamma_signs.empty()) {
    d["gamma_signs"] = {{std::to_string(c.tuple.back()), c.gamma_signs}};
    d["gamma_real_roots"] = c.gamma_real_roots;
    d["gamma_interval_roots"] = c.gamma_interval_roots;
  }
  if (!c.details.empty()) d["details"] = c.details;
  j["data"] = d;
  return j;
}

void write_ratio_rows(const Options& o, const std::vector<CurveSpec>& curves) {
  std::vector<RatioCsvRow> rows;
  for (const auto& c : curves) {
    ZetaLevel base = base_level(c);
    if (base.genus != 1) continue;
    ZetaLevel pn = normalize_level(base);
    InvariantSet inv = extract_invariants(pn);
    auto betas = elliptic_beta_recursion(genus1_trace(inv), pn.Q, o.ratio_n_max);
    BSeries bs = b_series_exp(power_sums(inv, o.ratio_n_max), o.ratio_n_max);
    for (const auto& r : ratio_rows(betas, pn.Q)) {
      rows.push_back({c.label, pn.Q, r.n, r.beta, bs.b[static_cast<size_t>(r.n)], r.ratio, r.lower_ok && r.upper_ok});
    }
  }
  std::ofstream f(o.ratio_csv, std::ios::binary);
  if (!f) throw UsageError("cannot write ratio CSV: " + o.ratio_csv);
  write_ratio_csv(f, rows);
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  if (!o.grid.empty()) cfg.curves = builtin_grid(o.grid);
  for (const auto& c : o.curves) cfg.curves.push_back(parse_curve(c));
  cfg.tuples = parse_tuples(o.tuples);
  for (const auto& t : cfg.tuples) check_cap(t, o);
  if (o.checks != "all") {
    std::stringstream ss(o.checks);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name = trim(name);
      const auto& all = all_sweep_checks();
      if (std::find(all.begin(), all.end(), name) == all.end()) throw UsageError("unknown check '" + name + "'");
      cfg.checks.push_back(name);
    }
  }
  cfg.rh = rh_options(o);
  cfg.normalize = o.normalize;
  cfg.product_cap = o.no_product_cap ? std::numeric_limits<long>::max() : o.max_product;
  cfg.ratio_n_max = o.ratio_n_max;
  if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
  cfg.jobs = o.jobs;

  Json conf;
  Json labels = Json::array();
  for (const auto& c : cfg.curves) labels.push_back(c.label);
  Json tuples = Json::array();
  for (const auto& t : cfg.tuples) tuples.push_back(ints(t));
  conf["curves"] = labels;
  conf["tuples"] = tuples;
  conf["checks"] = cfg.checks.empty() ? all_sweep_checks() : cfg.checks;
  conf["precision_bits"] = cfg.rh.precision_bits;
  conf["tolerance_exp"] = cfg.rh.tolerance_exp.value_or(cfg.rh.precision_bits * 3 / 20);
  conf["normalize"] = cfg.normalize;
  conf["product_cap"] = o.no_product_cap ? -1 : cfg.product_cap;
  conf["ratio_n_max"] = cfg.ratio_n_max;

  SweepReport rep = sweep(cfg);

  if (o.format == "csv") {
    std::vector<std::string> names = cfg.checks.empty() ? all_sweep_checks() : cfg.checks;
    std::string csv = "curve,tuple";
    for (const auto& n : names) csv += "," + n;
    csv += ",error\n";
    for (const auto& c : rep.cells) {
      csv += csv_quote(c.curve) + "," + csv_quote(tuple_str(c.tuple));
      for (const auto& n : names) {
        std::string st;
        for (const auto& [name, s] : c.checks) {
          if (name == n) st = to_string(s);
        }
        csv += "," + st;
      }
      csv += "," + csv_quote(c.error.value_or("")) + "\n";
    }
    emit(o, csv, out);
  } else {
    Json j;
    j["config_hash"] = sha256_hex(conf.dump());
    j["config"] = conf;
    j["cells"] = Json::array();
    for (const auto& c : rep.cells) j["cells"].push_back(cell_json(c));
    Json summary = Json::object();
    for (const auto& [name, counts] : rep.summary) summary[name] = counts;
    summary["cells"] = rep.cells.size();
    summary["errors"] = rep.errors;
    j["summary"] = summary;
    emit(o, j.dump(2) + "\n", out);
  }
  if (!o.ratio_csv.empty()) write_ratio_rows(o, cfg.curves);
  for (const auto& [name, counts] : rep.summary) {
    err << name << ": " << counts.at("pass") << " pass, " << counts.at("fail") << " fail, " << counts.at("unknown")
        << " unknown, " << counts.at("skip") << " skip\n";
  }
  if (rep.errors > 0) err << "cell errors: " << rep.errors << '\n';
  return rep.any_failed() ? kCheckFailed : kOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  Json a = Json::array();
  for (const auto& c : curve_catalog()) {
    std::vector<long> counts;
    for (int k = 1; k <= std::max(3, c.genus); ++k) counts.push_back(count_points_bruteforce(c, c.p, k));
    ZetaLevel z = artin_from_point_counts(c.p, c.genus, counts);
    Json j;
    j["label"] = c.label;
    j["curve"] = "catalog:" + c.label;
    j["q"] = c.p;
    j["genus"] = c.genus;
    j["point_counts"] = counts;
    j["numerator"] = rats(level_numerator(z));
    a.push_back(j);
  }
  emit(o, a.dump(2) + "\n", out);
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool needs_tuple) {
  sub->add_option("--curve", o.curve, "JSON file, inline JSON, elliptic:q=Q,a=A or catalog:<label>")->required();
  auto* t = sub->add_option("--tuple", o.tuple, "comma-separated positive integers, e.g. 2,3");
  if (needs_tuple) t->required();
  sub->add_flag("--normalize", o.normalize, "divide each level by its alpha(0)");
  sub->add_option("--output,-o", o.output, "write the result to this file");
  sub->add_option("--max-product", o.max_product, "cap on the product of tuple entries");
  sub->add_flag("--no-product-cap", o.no_product_cap, "disable the tuple product cap");
}

void add_numeric(CLI::App* sub, Options& o) {
  sub->add_option("--precision-bits", o.precision_bits, "MPFR precision for numeric root finding");
  sub->add_option("--tolerance", o.tolerance, "deviation tolerance, e.g. 1e-30");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.precision_bits = static_cast<int>(env_long("DZETA_PRECISION_BITS", o.precision_bits));
    o.max_product = env_long("DZETA_MAX_PRODUCT", o.max_product);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Derived zeta functions of curves over finite fields"};
  app.name("dzeta");
  app.require_subcommand(1);

  auto* derive = app.add_subcommand("derive", "derive the tower of zeta levels for a tuple");
  add_common(derive, o, true);
  derive->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  auto* invariants = app.add_subcommand("invariants", "alpha/beta invariants and Gamma signs per level");
  add_common(invariants, o, true);
  invariants->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* rh = app.add_subcommand("rh-check", "Riemann hypothesis check on the last level");
  add_common(rh, o, false);
  add_numeric(rh, o);
  rh->add_flag("--numeric", o.numeric, "use the numeric check even in genus 1");

  auto* sw = app.add_subcommand("sweep", "run a check battery over curves x tuples");
  sw->add_option("--grid", o.grid, "builtin-elliptic or builtin-catalog");
  sw->add_option("--curve", o.curves, "additional curve (repeatable)");
  sw->add_option("--tuples", o.tuples, "semicolon-separated tuples, e.g. \"2;3;2,2\"")->required();
  sw->add_option("--checks", o.checks, "all, or a comma-separated subset of " + [] {
    std::string s;
    for (const auto& n : all_sweep_checks()) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  sw->add_flag("--normalize", o.normalize, "normalize every level");
  sw->add_option("--output,-o", o.output, "write the report to this file");
  sw->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  sw->add_option("--jobs,-j", o.jobs, "worker threads for sweep cells");
  sw->add_option("--max-product", o.max_product, "cap on the product of tuple entries");
  sw->add_flag("--no-product-cap", o.no_product_cap, "disable the tuple product cap");
  sw->add_option("--ratio-n-max", o.ratio_n_max, "largest n for the ratio bounds");
  sw->add_option("--ratio-csv", o.ratio_csv, "also write beta ratio rows for genus-1 curves");
  add_numeric(sw, o);

  auto* catalog = app.add_subcommand("catalog", "list the brute-force countable curves");
  catalog->add_option("--output,-o", o.output, "write the list to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (derive->parsed()) return cmd_derive(o, out, err);
    if (invariants->parsed()) return cmd_invariants(o, out, err);
    if (rh->parsed()) return cmd_rh_check(o, out, err);
    if (sw->parsed()) return cmd_sweep(o, out, err);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

}  // namespace dzeta::cli
