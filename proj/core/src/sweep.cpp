#include "dzeta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dzeta {

const std::vector<std::string>& all_sweep_checks() {
  static const std::vector<std::string> names = {"positivity",  "rh",           "miracle",
                                                 "interlacing", "ratio_bounds", "beta_routes"};
  return names;
}

bool SweepReport::any_failed() const {
  if (errors > 0) return true;
  for (const auto& c : cells) {
    for (const auto& [name, st] : c.checks) {
      if (st == CheckStatus::fail) return true;
    }
  }
  return false;
}

namespace {

CheckStatus from_rh(RHStatus s) {
  switch (s) {
    case RHStatus::holds: return CheckStatus::pass;
    case RHStatus::fails: return CheckStatus::fail;
    case RHStatus::unknown: return CheckStatus::unknown;
  }
  return CheckStatus::unknown;
}

bool wanted(const SweepConfig& cfg, const std::string& name) {
  return cfg.checks.empty() || std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

}  // namespace

SweepCell run_cell(const CurveSpec& curve, const std::vector<int>& tuple, const SweepConfig& cfg) {
  SweepCell cell;
  cell.curve = curve.label;
  cell.tuple = tuple;
  try {
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    long prod = 1;
    for (int n : tuple) {
      if (n < 1) throw std::invalid_argument("tuple entries must be positive");
      prod *= n;
      if (prod > cfg.product_cap) throw std::invalid_argument("tuple product exceeds cap " + std::to_string(cfg.product_cap));
    }
    ZetaLevel base = artin_zeta(curve);
    if (cfg.normalize) base = normalize_level(base);
    std::vector<ZetaLevel> tower = derive_tower(base, tuple, cfg.normalize);
    const ZetaLevel& last = tower.back();
    const ZetaLevel& prefix = tower.size() >= 2 ? tower[tower.size() - 2] : base;
    const int n = tuple.back();
    const int g = last.genus;

    InvariantSet inv = extract_invariants(last);
    cell.Q = inv.Q;
    cell.genus = g;
    cell.numerator = inv.A;
    cell.alphas = inv.alphas;
    cell.beta = inv.beta;
    cell.positivity = true;
    for (const auto& lv : tower) {
      bool p = extract_invariants(lv).positive();
      cell.level_positivity.push_back(p);
      cell.positivity = cell.positivity && p;
    }

    for (const auto& name : all_sweep_checks()) {
      if (!wanted(cfg, name)) continue;
      CheckStatus st = CheckStatus::skip;
      if (name == "positivity") {
        st = cell.positivity ? CheckStatus::pass : CheckStatus::fail;
      } else if (name == "rh") {
        cell.rh = rh_check(inv, cfg.rh);
        st = from_rh(cell.rh->status);
        if (g == 1) {
          cell.rh_numeric_cross = rh_numeric(inv, cfg.rh);
          bool agree = cell.rh_numeric_cross->status == cell.rh->status;
          cell.details["rh"] = std::string("numeric cross-check ") + (agree ? "agrees" : "disagrees") +
                               ", max deviation " + cell.rh_numeric_cross->max_deviation;
          if (!agree && st == CheckStatus::pass) st = CheckStatus::unknown;
        }
      } else if (name == "miracle") {
        MiracleResult m = counting_miracle_check(prefix, n);
        st = m.check.status;
        cell.details["miracle"] = m.check.detail;
      } else if (name == "interlacing") {
        GammaCheck gc = gamma_interlacing_check(gamma_poly(special_values(prefix, n), n));
        st = gc.check.status;
        cell.gamma_signs = gc.signs;
        cell.gamma_real_roots = gc.real_roots;
        cell.gamma_interval_roots = gc.interval_roots;
        cell.details["interlacing"] = gc.check.detail;
      } else if (name == "ratio_bounds") {
        if (g == 1) {
          ZetaLevel pn = normalize_level(prefix);
          auto betas = elliptic_beta_recursion(genus1_trace(extract_invariants(pn)), pn.Q, cfg.ratio_n_max);
          CheckResult r = ratio_bounds_check(betas, pn.Q);
          st = r.status;
          if (!r.detail.empty()) cell.details["ratio_bounds"] = r.detail;
        }
      } else if (name == "beta_routes") {
        BigRat closed = beta_closed_form(special_values(prefix, n), n, g);
        st = closed == inv.beta ? CheckStatus::pass : CheckStatus::fail;
        if (st == CheckStatus::fail) cell.details["beta_routes"] = "residue " + inv.beta.str() + " closed " + closed.str();
      }
      cell.checks.emplace_back(name, st);
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
    cell.checks.clear();
  }
  return cell;
}

SweepReport sweep(const SweepConfig& cfg) {
  struct Job {
    const CurveSpec* curve;
    const std::vector<int>* tuple;
  };
  std::vector<Job> jobs;
  for (const auto& c : cfg.curves) {
    for (const auto& t : cfg.tuples) jobs.push_back({&c, &t});
  }
  SweepReport rep;
  rep.cells.resize(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) rep.cells[i] = run_cell(*jobs[i].curve, *jobs[i].tuple, cfg);
  };
  int nthreads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& name : all_sweep_checks()) {
    if (wanted(cfg, name)) rep.summary[name] = {{"pass", 0}, {"fail", 0}, {"unknown", 0}, {"skip", 0}};
  }
  for (const auto& c : rep.cells) {
    if (c.error) ++rep.errors;
    for (const auto& [name, st] : c.checks) rep.summary[name][to_string(st)] += 1;
  }
  return rep;
}

}  // namespace dzeta
