#include "optosq/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <limits>
#include <thread>

#include "optosq/errors.hpp"
#include "optosq/features.hpp"
#include "optosq/moments.hpp"

namespace optosq {

using nlohmann::json;

namespace {

struct Setup {
  SystemParams params;
  DerivedParams derived;
  SqueezeSource source;
  Conventions conv;
};

Setup setup_of(const RunConfig& cfg) {
  Setup s;
  s.params = to_system_params(cfg);
  s.derived = derive(s.params);
  s.source = to_source(cfg);
  s.conv = to_conventions(cfg);
  return s;
}

json echo(const Setup& s) {
  return {{"params", to_json(s.params)},
          {"derived", to_json(s.derived)},
          {"source", to_json(s.source)},
          {"conventions", to_json(s.conv)}};
}

[[noreturn]] void refuse_unstable(const StabilityReport& st) {
  throw InstabilityError("steady state is unstable: largest eigenvalue real part " +
                         format_number(st.eigen_real_parts[3]) + " rad/s");
}

template <class Json, class Csv>
std::string body_of(const RunConfig& cfg, Json&& as_json, Csv&& as_csv) {
  return cfg.output.format == OutputFormat::json ? dump(as_json()) : as_csv();
}

RunResult run_spectrum(const RunConfig& cfg, unsigned threads) {
  const auto s = setup_of(cfg);
  const auto grid = to_grid(cfg);
  const auto branch = cfg.system.bistable_branch;
  const auto table = spectrum_scan(grid, s.params, s.source, s.conv, branch, threads);
  if (!table.metadata.stability.stable) refuse_unstable(table.metadata.stability);

  const auto baseline = spectrum_scan(grid, s.params, SqueezeSource::vacuum(), s.conv, branch, threads);
  const auto fq = detect_features(table, Quadrature::q, baseline);
  const auto fp = detect_features(table, Quadrature::p, baseline);

  RunResult r;
  r.body = body_of(cfg, [&] { return spectrum_json(table, fq, fp); }, [&] { return spectrum_csv(table); });
  r.report = echo(s);
  r.report["steady_state"] = to_json(table.metadata.steady_state);
  r.report["stability"] = to_json(table.metadata.stability);
  r.report["features"] = {{"s_q", to_json(fq)}, {"s_p", to_json(fp)}};
  r.report["rows"] = table.points.size();
  r.summary = "spectrum: " + std::to_string(table.points.size()) + " rows, S_q " +
              to_string(fq.classification) + ", S_p " + to_string(fp.classification);
  return r;
}

RunResult run_variance(const RunConfig& cfg) {
  const auto s = setup_of(cfg);
  const auto ss = solve_steady_state(s.params, s.derived, cfg.system.bistable_branch);
  const auto st = check_stability(drift_matrix(ss, s.params));
  if (!st.stable) refuse_unstable(st);
  const auto rep = squeezing_report(ss, s.params, s.source, to_cutoff(cfg), s.conv);

  SweepTable single;
  single.rows.push_back({{}, rep, true});
  json j = to_json(rep);
  j["command"] = "variance";
  j["units"] = kUnitsNote;

  RunResult r;
  r.body = body_of(cfg, [&] { return j; }, [&] { return sweep_csv(single); });
  r.report = echo(s);
  r.report["steady_state"] = to_json(ss);
  r.report["stability"] = to_json(st);
  r.report["moments"] = to_json(rep);
  r.summary = "variance: var_q = " + format_number(rep.var_q) + ", var_p = " + format_number(rep.var_p);
  return r;
}

RunResult run_sweep_command(const RunConfig& cfg, unsigned threads) {
  const auto sweep = run_sweep(cfg, threads);
  std::size_t unstable = 0;
  for (const auto& row : sweep.rows) unstable += row.stable ? 0 : 1;

  RunResult r;
  r.body = body_of(cfg, [&] { return sweep_json(sweep); }, [&] { return sweep_csv(sweep); });
  r.report = echo(setup_of(cfg));
  r.report["sweep_points"] = sweep.rows.size();
  r.report["unstable_points"] = unstable;
  r.summary = "sweep: " + std::to_string(sweep.rows.size()) + " points, " + std::to_string(unstable) + " unstable";
  return r;
}

std::vector<Field> stability_fields(const SteadyState& ss, const StabilityReport& st, double wm) {
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::vector<Field> f = {
      {"stable", flag(st.stable), ""},
      {"routh_hurwitz_stable", flag(st.routh_hurwitz_stable), ""},
      {"photon_number", format_number(ss.photon_number), ""},
      {"coupling_g", format_number(ss.g), "rad/s"},
      {"delta_eff_over_omega_m", format_number(ss.delta_eff / wm), ""},
      {"delta_bare_over_omega_m", format_number(ss.delta_bare / wm), ""},
      {"steady_state_roots", std::to_string(ss.branch.roots.size()), ""},
      {"bistable", flag(ss.branch.bistable), ""},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    const auto n = std::to_string(i + 1);
    f.push_back({"eigenvalue_" + n + "_re", format_number(st.eigen_real_parts[i]), "rad/s"});
    f.push_back({"eigenvalue_" + n + "_im", format_number(st.eigen_imag_parts[i]), "rad/s"});
  }
  return f;
}

RunResult run_stability(const RunConfig& cfg) {
  const auto s = setup_of(cfg);
  const auto ss = solve_steady_state(s.params, s.derived, cfg.system.bistable_branch);
  const auto st = check_stability(drift_matrix(ss, s.params));
  const auto fields = stability_fields(ss, st, s.params.mech_freq);

  RunResult r;
  r.body = body_of(cfg, [&] { return fields_json("stability", fields); }, [&] { return fields_csv(fields); });
  r.report = echo(s);
  r.report["steady_state"] = to_json(ss);
  r.report["stability"] = to_json(st);
  r.summary = std::string("stability: ") + (st.stable ? "stable" : "unstable") +
              ", largest eigenvalue real part " + format_number(st.eigen_real_parts[3]) + " rad/s";
  return r;
}

RunResult run_critical_power(const RunConfig& cfg) {
  const auto s = setup_of(cfg);
  const double pc = critical_power(s.params, s.derived);
  const auto regime = classify_regime(s.params.laser_power, pc);
  const std::vector<Field> fields = {
      {"critical_power", format_number(pc), "W"},
      {"power", format_number(s.params.laser_power), "W"},
      {"regime", to_string(regime), ""},
      {"g0", format_number(s.derived.g0), "rad/s"},
      {"coupling_at_power", format_number(coupling_at_power(s.params.laser_power, s.params, s.derived)), "rad/s"},
  };

  RunResult r;
  r.body = body_of(cfg, [&] { return fields_json("critical-power", fields); }, [&] { return fields_csv(fields); });
  r.report = echo(s);
  r.report["critical_power_w"] = pc;
  r.report["regime"] = to_string(regime);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", pc * 1e3);
  r.summary = std::string("critical power P_c = ") + buf + " mW (" + to_string(regime) + " at P = " +
              format_number(s.params.laser_power * 1e3) + " mW)";
  return r;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

SweepTable run_sweep(const RunConfig& cfg, unsigned threads) {
  if (!cfg.axis1) throw ConfigError("sweep.axis1: the sweep command needs an axis");
  const auto v1 = cfg.axis1->values();
  const auto v2 = cfg.axis2 ? cfg.axis2->values() : std::vector<double>{};

  SweepTable out;
  out.axis_names.push_back(to_string(cfg.axis1->axis));
  if (cfg.axis2) out.axis_names.push_back(to_string(cfg.axis2->axis));

  struct Job {
    std::vector<double> axes;
    RunConfig cfg;
  };
  std::vector<Job> jobs;
  for (double a : v1) {
    auto c1 = with_axis_value(cfg, cfg.axis1->axis, a);
    if (!cfg.axis2) {
      jobs.push_back({{a}, std::move(c1)});
      continue;
    }
    for (double b : v2) jobs.push_back({{a, b}, with_axis_value(c1, cfg.axis2->axis, b)});
  }

  out.rows.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        const auto s = setup_of(jobs[i].cfg);
        const auto ss = solve_steady_state(s.params, s.derived, jobs[i].cfg.system.bistable_branch);
        auto& row = out.rows[i];
        row.axis_values = jobs[i].axes;
        row.stable = check_stability(drift_matrix(ss, s.params)).stable;
        if (row.stable) {
          row.report = squeezing_report(ss, s.params, s.source, to_cutoff(jobs[i].cfg), s.conv);
        } else {
          const double nan = std::numeric_limits<double>::quiet_NaN();
          row.report.var_q = row.report.var_p = row.report.uncertainty_product = nan;
          row.report.omega_max_over_omega_m = jobs[i].cfg.moments.omega_max_over_omega_m;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = std::min<std::size_t>(threads, jobs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  // Report the first failure in sweep order, independent of scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

RunResult execute(const RunConfig& cfg, unsigned threads) {
  validate(cfg);
  switch (cfg.command) {
    case Command::spectrum: return run_spectrum(cfg, threads);
    case Command::variance: return run_variance(cfg);
    case Command::sweep: return run_sweep_command(cfg, threads);
    case Command::stability: return run_stability(cfg);
    case Command::critical_power: return run_critical_power(cfg);
  }
  throw ConfigError("run.command: unsupported command");
}

std::string sidecar_path(const std::string& output_path) { return output_path + ".meta.json"; }

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  json sidecar = {{"tool", "optosq"},
                  {"version", kVersion},
                  {"command", to_string(cfg.command)},
                  {"units", kUnitsNote},
                  {"config", serialize(cfg)}};
  const bool to_file = !cfg.output.path.empty();

  auto finish = [&](const char* status) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    sidecar["status"] = status;
    sidecar["timings_ms"] = {{"total", ms}};
    sidecar["timestamp"] = utc_timestamp();
    write_atomic(sidecar_path(cfg.output.path), dump(sidecar));
  };

  try {
    auto result = execute(cfg, threads);
    sidecar["report"] = std::move(result.report);
    if (to_file) {
      write_atomic(cfg.output.path, result.body);
      finish("ok");
      out << result.summary << '\n';
    } else {
      out << result.body;
    }
    return 0;
  } catch (const Error& e) {
    err << "optosq: " << to_string(e.category()) << " error: " << e.what() << '\n';
    sidecar["error"] = {{"category", to_string(e.category())},
                        {"exit_code", static_cast<int>(e.category())},
                        {"message", e.what()}};
    if (const auto* ce = dynamic_cast<const ConvergenceError*>(&e)) {
      sidecar["error"]["achieved_rel_error"] = ce->achieved_rel_error();
    }
    if (e.category() == ErrorCategory::instability) {
      try {
        const auto s = setup_of(cfg);
        const auto ss = solve_steady_state(s.params, s.derived, cfg.system.bistable_branch);
        sidecar["report"] = echo(s);
        sidecar["report"]["steady_state"] = to_json(ss);
        sidecar["report"]["stability"] = to_json(check_stability(drift_matrix(ss, s.params)));
        err << "optosq: stability report written to " << (to_file ? sidecar_path(cfg.output.path) : "stderr")
            << '\n';
        if (!to_file) err << dump(sidecar["report"]["stability"]);
      } catch (const std::exception&) {
        // the primary error is already reported
      }
    }
    if (to_file && e.category() != ErrorCategory::io) {
      try {
        finish("error");
      } catch (const Error& io) {
        err << "optosq: io error: " << io.what() << '\n';
      }
    }
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    err << "optosq: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace optosq
