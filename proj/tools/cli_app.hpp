// Copyright 2026 The trajkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trajkit/trajkit.hpp"

namespace trajkit::cli {

enum ExitCode { ok = 0, usage = 1, data = 2 };

/// Malformed command-line values that CLI11 cannot catch by type alone.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<double> parse_list(const std::string& text, char sep, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const char* begin = item.c_str();
    char* end = nullptr;
    errno = 0;
    double x = std::strtod(begin, &end);
    while (end && (*end == ' ' || *end == '\t')) ++end;
    if (item.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
      throw usage_error(flag + ": '" + item + "' is not a number");
    out.push_back(x);
  }
  if (out.empty()) throw usage_error(flag + ": empty list");
  return out;
}

/// "q,w,p;q,w,p": one row per axis, or a single row shared by all axes.
inline std::vector<std::array<double, 3>> parse_prob(const std::string& text, std::size_t dim) {
  std::vector<std::array<double, 3>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    auto values = parse_list(row, ',', "--prob");
    if (values.size() != 3) throw usage_error("--prob: each row needs three entries (q,w,p), got '" + row + "'");
    rows.push_back({values[0], values[1], values[2]});
  }
  if (rows.size() == 1 && dim > 1) rows.assign(dim, rows.front());
  if (rows.size() != dim)
    throw usage_error("--prob: " + std::to_string(rows.size()) + " rows given for dim " + std::to_string(dim));
  return rows;
}

inline std::optional<std::vector<double>> parse_vector(const std::string& text, const std::string& flag) {
  if (text.empty()) return std::nullopt;
  return parse_list(text, ',', flag);
}

inline std::string quote_arg(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t;\"'$&|<>*?()") == std::string::npos) return arg;
  std::string q = "'";
  for (char c : arg) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

inline std::string command_line(int argc, const char* const* argv) {
  std::string cmd = "trajkit";
  for (int i = 1; i < argc; ++i) cmd += " " + quote_arg(argv[i]);
  return cmd;
}

inline DiffMethod parse_diff(const std::string& name, std::size_t window) {
  if (name == "central") return DiffMethod::linear(FiniteDifference::central);
  if (name == "forward") return DiffMethod::linear(FiniteDifference::forward);
  if (name == "backward") return DiffMethod::linear(FiniteDifference::backward);
  if (name == "fornberg") {
    if (window < 3 || window % 2 == 0) throw usage_error("--window must be odd and at least 3");
    return DiffMethod::fornberg(window);
  }
  throw usage_error("--diff: unknown scheme '" + name + "'");
}

/// Writes to a file, or to `out` when the path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream file(p, std::ios::binary);
  if (!file) throw io_error("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw io_error("write to '" + path + "' failed");
}

struct GenerateOptions {
  double T = 100.0;
  std::size_t dim = 1;
  std::size_t N = 1;
  double dt = 1.0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string diff = "central";
  std::size_t window = 3;
  // rw
  std::string prob = "0.5,0,0.5";
  std::string step_length = "1";
  // langevin / diffdiff
  double gamma = 1.0;
  double sigma = 1.0;
  double tau = 1.0;
  std::string v0, y0, r0;
  // physical langevin
  std::optional<double> mass, radius, viscosity, temperature;
};

inline void add_generate_common(CLI::App* app, GenerateOptions& o) {
  app->add_option("--T", o.T, "total duration")->capture_default_str();
  app->add_option("--dim", o.dim, "spatial dimension")->capture_default_str();
  app->add_option("--N", o.N, "number of trajectories")->capture_default_str();
  app->add_option("--dt", o.dt, "time step")->capture_default_str();
  app->add_option("--seed", o.seed, "random seed (drawn from entropy and recorded when omitted)");
  app->add_option("-o,--out", o.out, "output file (.json) or CSV file/directory")->required();
  app->add_option("--format", o.format, "json or csv (default: from --out)");
  app->add_option("--diff", o.diff, "central, forward, backward or fornberg")->capture_default_str();
  app->add_option("--window", o.window, "Fornberg stencil size")->capture_default_str();
}

inline generators::GeneratorBase make_base(const GenerateOptions& o, std::uint64_t seed) {
  generators::GeneratorBase base;
  base.T = o.T;
  base.dim = o.dim;
  base.N = o.N;
  base.dt = o.dt;
  base.seed = seed;
  base.diff = parse_diff(o.diff, o.window);
  return base;
}

inline io::Format output_format(const std::string& path, const std::string& tag) {
  if (!tag.empty()) {
    if (tag != "json" && tag != "csv") throw usage_error("--format must be json or csv");
    return io::parse_format(tag);
  }
  auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return io::Format::json;
  if (ext == ".csv" || ext.empty()) return io::Format::csv;
  throw usage_error("cannot infer the format of '" + path + "'; pass --format");
}

inline std::optional<io::Format> input_format(const std::string& tag) {
  if (tag.empty()) return std::nullopt;
  if (tag != "json" && tag != "csv") throw usage_error("--in-format must be json or csv");
  return io::parse_format(tag);
}

inline void save_ensemble(const Ensemble& ensemble, const std::string& path, io::Format format,
                          const io::Metadata& metadata, std::ostream& out) {
  if (path == "-") {
    if (format != io::Format::json) throw usage_error("only JSON can be written to stdout");
    io::write_json(out, ensemble, metadata);
    return;
  }
  io::save(ensemble, path, format, metadata);
}

}  // namespace detail

/// Runs the command line in-process; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"trajkit: generate, analyse and transform trajectories"};
  app.name("trajkit");
  app.set_version_flag("--version", std::string(version_string));
  app.require_subcommand(1);

  // generate
  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "simulate an ensemble of trajectories");
  generate->require_subcommand(1);
  auto* gen_rw = generate->add_subcommand("rw", "lattice random walk");
  add_generate_common(gen_rw, gen);
  gen_rw->add_option("--prob", gen.prob, "per-axis q,w,p rows separated by ';'")->capture_default_str();
  gen_rw->add_option("--step-length", gen.step_length, "step length, one value or one per axis")
      ->capture_default_str();
  auto* gen_lv = generate->add_subcommand("langevin", "Ornstein-Uhlenbeck velocity (Langevin) model");
  add_generate_common(gen_lv, gen);
  gen_lv->add_option("--gamma", gen.gamma, "drag coefficient")->capture_default_str();
  gen_lv->add_option("--sigma", gen.sigma, "noise strength")->capture_default_str();
  gen_lv->add_option("--v0", gen.v0, "initial velocity, comma separated (default: stationary draw)");
  gen_lv->add_option("--r0", gen.r0, "initial position, comma separated");
  gen_lv->add_option("--mass", gen.mass, "particle mass in kg (with --radius, --viscosity, --temperature)");
  gen_lv->add_option("--radius", gen.radius, "particle radius in m");
  gen_lv->add_option("--viscosity", gen.viscosity, "fluid viscosity in Pa s");
  gen_lv->add_option("--temperature", gen.temperature, "temperature in K");
  auto* gen_dd = generate->add_subcommand("diffdiff", "diffusing-diffusivity model");
  add_generate_common(gen_dd, gen);
  gen_dd->add_option("--tau", gen.tau, "correlation time of the diffusivity")->capture_default_str();
  gen_dd->add_option("--sigma", gen.sigma, "noise strength of the auxiliary process")->capture_default_str();
  gen_dd->add_option("--y0", gen.y0, "initial auxiliary state, comma separated (default: stationary draw)");
  gen_dd->add_option("--r0", gen.r0, "initial position, comma separated");

  // stats
  struct {
    std::string in, in_format, out, signal = "velocity", quantity = "position", at;
    bool time_avg = false, normalize = false, counts = false, accumulate = false, unsigned_range = false,
         angular = false;
    std::size_t lag = 0, bins = 0;
  } st;
  auto* stats_cmd = app.add_subcommand("stats", "statistics of an ensemble, written as CSV");
  stats_cmd->require_subcommand(1);
  auto add_stats_io = [&](CLI::App* sub) {
    sub->add_option("-i,--in,input", st.in, "ensemble file or CSV directory")->required();
    sub->add_option("--in-format", st.in_format, "json or csv (default: from the path)");
    sub->add_option("-o,--out", st.out, "output CSV (default: stdout)");
  };
  auto* st_vacf = stats_cmd->add_subcommand("vacf", "velocity autocorrelation");
  auto* st_msd = stats_cmd->add_subcommand("msd", "mean square displacement");
  auto* st_kurt = stats_cmd->add_subcommand("kurtosis", "Mardia kurtosis");
  auto* st_psd = stats_cmd->add_subcommand("psd", "velocity power spectral density");
  auto* st_speed = stats_cmd->add_subcommand("speed-hist", "histogram of speeds");
  auto* st_turn = stats_cmd->add_subcommand("turning-angles", "histogram of turning angles");
  auto* st_collect = stats_cmd->add_subcommand("collect", "samples at instants or lags");
  for (auto* sub : {st_vacf, st_msd, st_kurt, st_psd, st_speed, st_turn, st_collect}) add_stats_io(sub);
  for (auto* sub : {st_vacf, st_msd, st_kurt}) {
    sub->add_flag("--time-avg", st.time_avg, "time average within each trajectory");
    sub->add_option("--lag", st.lag, "number of lags (time average) or instants (ensemble)");
  }
  st_vacf->add_flag("--normalize", st.normalize, "divide by the value at lag 0");
  st_kurt->add_option("--signal", st.signal, "velocity or displacement")->capture_default_str();
  st_psd->add_flag("--angular", st.angular, "angular frequency axis");
  st_speed->add_option("--bins", st.bins, "bin count (default: Freedman-Diaconis)");
  st_speed->add_flag("--normalized", st.normalize, "report densities");
  st.bins = 0;
  st_turn->add_option("--bins", st.bins, "bin count (default 36)");
  st_turn->add_flag("--accumulate", st.accumulate, "running sum of turns");
  st_turn->add_flag("--unsigned", st.unsigned_range, "angles in [0, 2pi) instead of [-pi, pi)");
  st_turn->add_flag("--counts", st.counts, "report counts instead of densities");
  st_collect->add_option("--quantity", st.quantity, "position, velocity or speed")->capture_default_str();
  auto* at_opt = st_collect->add_option("--at", st.at, "comma separated instants");
  auto* lag_opt = st_collect->add_option("--lag", st.lag, "window length in samples");
  at_opt->excludes(lag_opt);

  // transform
  struct {
    std::string in, in_format, out, format, new_t;
    double omega = 0.0;
    std::optional<double> new_dt;
    std::size_t order = 1, step = 1;
  } tr;
  auto* transform_cmd = app.add_subcommand("transform", "filter or resample trajectories");
  transform_cmd->require_subcommand(1);
  auto* tr_exp = transform_cmd->add_subcommand("expfilter", "exponential convolutional smoothing");
  auto* tr_res = transform_cmd->add_subcommand("resample", "polynomial resampling onto a new grid");
  auto* tr_sub = transform_cmd->add_subcommand("subsample", "keep every step-th sample");
  for (auto* sub : {tr_exp, tr_res, tr_sub}) {
    sub->add_option("-i,--in,input", tr.in, "ensemble file or CSV directory")->required();
    sub->add_option("--in-format", tr.in_format, "json or csv");
    sub->add_option("-o,--out", tr.out, "output file or directory")->required();
    sub->add_option("--format", tr.format, "json or csv (default: from --out)");
  }
  tr_exp->add_option("--omega", tr.omega, "filter rate")->required();
  auto* new_dt_opt = tr_res->add_option("--new-dt", tr.new_dt, "uniform output step");
  auto* new_t_opt = tr_res->add_option("--new-t", tr.new_t, "comma separated output instants");
  new_dt_opt->excludes(new_t_opt);
  tr_res->add_option("--order", tr.order, "interpolation order")->capture_default_str();
  tr_sub->add_option("--step", tr.step, "keep one sample in step")->required();

  // reconstruct
  struct {
    std::string correspondences, poses, object, object_format, out, r0;
    double mse = 1.0, scale = 0.05, alpha0 = 0.0;
    std::optional<double> fps;
    bool allow_invalid = false;
  } rc;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "camera motion and lab-frame composition");
  reconstruct_cmd->require_subcommand(1);
  auto* rc_affine = reconstruct_cmd->add_subcommand("affine", "fit per-frame camera motion");
  rc_affine->add_option("--correspondences", rc.correspondences, "CSV frame,src_x,src_y,dst_x,dst_y")->required();
  rc_affine->add_option("--mse-threshold", rc.mse, "largest accepted mean square residual")->capture_default_str();
  rc_affine->add_option("--scale-threshold", rc.scale, "largest accepted |s - 1|")->capture_default_str();
  rc_affine->add_option("-o,--out", rc.out, "pose CSV (default: stdout)");
  auto* rc_compose = reconstruct_cmd->add_subcommand("compose", "object track into the lab frame");
  rc_compose->add_option("--poses", rc.poses, "pose CSV")->required();
  rc_compose->add_option("--object", rc.object, "object-in-camera trajectory (2-D)")->required();
  rc_compose->add_option("--object-format", rc.object_format, "json or csv");
  rc_compose->add_option("--alpha0", rc.alpha0, "camera angle at frame 0")->capture_default_str();
  rc_compose->add_option("--r0", rc.r0, "camera position at frame 0, x,y");
  rc_compose->add_option("--fps", rc.fps, "frame rate for the time axis");
  rc_compose->add_flag("--allow-invalid", rc.allow_invalid, "accept poses outside the thresholds");
  rc_compose->add_option("-o,--out", rc.out, "output trajectory (.json or .csv; default: JSON on stdout)");

  // efficiency
  struct {
    std::string led, pivot, out;
    reconstruct::WheelRunConfig wheel;
  } ef;
  auto* eff = app.add_subcommand("efficiency", "rolling efficiency of a wheel orbiting a pivot");
  auto* led_opt = eff->add_option("--led", ef.led, "tracked LED trajectory (synthetic run when omitted)");
  auto* pivot_opt = eff->add_option("--pivot", ef.pivot, "tracked pivot trajectory");
  led_opt->needs(pivot_opt);
  pivot_opt->needs(led_opt);
  eff->add_option("--omega", ef.wheel.omega, "wheel angular velocity, rad/s")->capture_default_str();
  eff->add_option("--radius", ef.wheel.wheel_radius, "wheel radius, m")->capture_default_str();
  eff->add_option("--offset", ef.wheel.led_offset, "LED to wheel-centre distance, m")->capture_default_str();
  eff->add_option("--orbit-radius", ef.wheel.orbit_radius, "synthetic: wheel-centre orbit radius, m")
      ->capture_default_str();
  eff->add_option("--fps", ef.wheel.fps, "synthetic: frame rate")->capture_default_str();
  eff->add_option("--duration", ef.wheel.duration, "synthetic: duration, s")->capture_default_str();
  eff->add_option("--slip-mean", ef.wheel.slip_mean, "synthetic: mean efficiency")->capture_default_str();
  eff->add_option("--slip-amplitude", ef.wheel.slip_amplitude, "synthetic: efficiency oscillation amplitude")
      ->capture_default_str();
  eff->add_option("--slip-frequency", ef.wheel.slip_frequency, "synthetic: oscillation frequency, rad/s")
      ->capture_default_str();
  eff->add_option("-o,--out", ef.out, "output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  const std::string command = command_line(argc, argv);
  try {
    if (*generate) {
      const std::uint64_t seed = gen.seed ? *gen.seed : random::entropy_seed();
      io::Format format = output_format(gen.out, gen.format);
      io::Metadata meta{{"command", command}, {"seed", std::to_string(seed)}};
      Ensemble ensemble;
      if (*gen_rw) {
        generators::RandomWalkConfig cfg;
        cfg.base = make_base(gen, seed);
        cfg.prob = parse_prob(gen.prob, gen.dim);
        cfg.step_length = parse_list(gen.step_length, ',', "--step-length");
        meta["model"] = "rw";
        ensemble = generators::generate(cfg);
      } else if (*gen_lv) {
        generators::LangevinConfig cfg;
        cfg.base = make_base(gen, seed);
        const bool physical = gen.mass || gen.radius || gen.viscosity || gen.temperature;
        if (physical) {
          if (!(gen.mass && gen.radius && gen.viscosity && gen.temperature))
            throw usage_error("--mass, --radius, --viscosity and --temperature go together");
          auto coeff = generators::physical_langevin_params(*gen.mass, *gen.radius, *gen.viscosity,
                                                            *gen.temperature);
          cfg.gamma = coeff.gamma;
          cfg.sigma = coeff.sigma;
        } else {
          cfg.gamma = gen.gamma;
          cfg.sigma = gen.sigma;
        }
        cfg.v0 = parse_vector(gen.v0, "--v0");
        cfg.r0 = parse_vector(gen.r0, "--r0");
        meta["model"] = "langevin";
        meta["gamma"] = io::format_double(cfg.gamma);
        meta["sigma"] = io::format_double(cfg.sigma);
        ensemble = generators::generate(cfg);
      } else {
        generators::DiffDiffConfig cfg;
        cfg.base = make_base(gen, seed);
        cfg.tau = gen.tau;
        cfg.sigma = gen.sigma;
        cfg.y0 = parse_vector(gen.y0, "--y0");
        cfg.r0 = parse_vector(gen.r0, "--r0");
        meta["model"] = "diffdiff";
        ensemble = generators::generate(cfg);
      }
      save_ensemble(ensemble, gen.out, format, meta, out);
      return ok;
    }

    if (*stats_cmd) {
      auto docs = io::load_documents(st.in, input_format(st.in_format));
      Ensemble ensemble;
      for (auto& d : docs) ensemble.push_back(std::move(d.trajectory));
      io::Provenance prov{command, std::nullopt, {}, {"input: " + st.in}};
      if (auto it = docs.front().metadata.find("seed"); it != docs.front().metadata.end())
        prov.seed = std::stoull(it->second);
      if (auto it = docs.front().metadata.find("command"); it != docs.front().metadata.end())
        prov.source = it->second;
      const auto averaging = st.time_avg ? stats::Averaging::time : stats::Averaging::ensemble;
      const char* axis_name = st.time_avg ? "lag" : "t";
      if ((*st_vacf || *st_msd) && st.time_avg && st.lag == 0) throw usage_error("--time-avg needs --lag");

      if (*st_vacf) {
        auto series = stats::vacf(ensemble, averaging, st.lag);
        if (st.normalize) series = stats::normalized(std::move(series));
        emit(st.out, out, [&](std::ostream& o) { io::write_series_csv(o, series, prov, axis_name, "vacf"); });
      } else if (*st_msd) {
        auto series = stats::msd(ensemble, averaging, st.lag);
        emit(st.out, out, [&](std::ostream& o) { io::write_series_csv(o, series, prov, axis_name, "msd"); });
      } else if (*st_kurt) {
        stats::KurtosisSignal signal;
        if (st.signal == "velocity")
          signal = stats::KurtosisSignal::velocity;
        else if (st.signal == "displacement")
          signal = stats::KurtosisSignal::displacement;
        else
          throw usage_error("--signal must be velocity or displacement");
        if (st.time_avg && signal == stats::KurtosisSignal::displacement && st.lag == 0)
          throw usage_error("--time-avg with --signal displacement needs --lag");
        auto series = stats::kurtosis(ensemble, averaging, signal, st.lag);
        emit(st.out, out, [&](std::ostream& o) { io::write_series_csv(o, series, prov, axis_name, "kurtosis"); });
      } else if (*st_psd) {
        auto series = stats::psd(ensemble, st.angular ? stats::FrequencyUnit::angular : stats::FrequencyUnit::ordinary);
        emit(st.out, out, [&](std::ostream& o) {
          io::write_series_csv(o, series, prov, st.angular ? "omega" : "frequency", "psd");
        });
      } else if (*st_speed) {
        auto binning = st.bins ? stats::Binning::with_count(st.bins) : stats::Binning::freedman_diaconis();
        auto h = stats::speed_histogram(ensemble, binning, st.normalize);
        emit(st.out, out, [&](std::ostream& o) { io::write_histogram_csv(o, h, prov); });
      } else if (*st_turn) {
        auto h = stats::turning_angles(ensemble, st.accumulate,
                                       st.unsigned_range ? stats::AngleRange::unsigned_range
                                                         : stats::AngleRange::signed_range,
                                       st.bins ? st.bins : 36, !st.counts);
        emit(st.out, out, [&](std::ostream& o) { io::write_histogram_csv(o, h, prov); });
      } else {
        stats::Quantity q;
        if (st.quantity == "position")
          q = stats::Quantity::position;
        else if (st.quantity == "velocity")
          q = stats::Quantity::velocity;
        else if (st.quantity == "speed")
          q = stats::Quantity::speed;
        else
          throw usage_error("--quantity must be position, velocity or speed");
        if (st.at.empty() && st.lag == 0) throw usage_error("collect needs --at or --lag");
        auto c = st.at.empty() ? stats::collect_lag(ensemble, q, st.lag)
                               : stats::collect_at(ensemble, q, parse_list(st.at, ',', "--at"));
        emit(st.out, out, [&](std::ostream& o) { io::write_collected_csv(o, c, prov); });
      }
      return ok;
    }

    if (*transform_cmd) {
      io::Format format = output_format(tr.out, tr.format);
      if (*tr_res && !tr.new_dt && tr.new_t.empty()) throw usage_error("resample needs --new-dt or --new-t");
      auto docs = io::load_documents(tr.in, input_format(tr.in_format));
      io::Metadata meta = docs.front().metadata;
      if (meta.count("command")) meta["source_command"] = meta["command"];
      meta["command"] = command;
      transform::ResampleGrid grid = 0.0;
      if (*tr_res) grid = tr.new_dt ? transform::ResampleGrid(*tr.new_dt) : transform::ResampleGrid(parse_list(tr.new_t, ',', "--new-t"));
      Ensemble result(docs.size(), Trajectory(SampleMatrix(1, 1)));
      parallel_for(docs.size(), [&](std::size_t j) {
        const auto& traj = docs[j].trajectory;
        if (*tr_exp)
          result[j] = transform::exp_convolutional_filter(traj, tr.omega);
        else if (*tr_res)
          result[j] = transform::resample(traj, grid, tr.order);
        else
          result[j] = transform::subsample(traj, tr.step);
      });
      save_ensemble(result, tr.out, format, meta, out);
      return ok;
    }

    if (*reconstruct_cmd) {
      if (*rc_affine) {
        auto frames = io::read_file(rc.correspondences, [](std::istream& in, const std::string& src) {
          return io::read_correspondences(in, src);
        });
        auto poses = reconstruct::estimate_affine_sequence(frames, {rc.mse, rc.scale});
        emit(rc.out, out, [&](std::ostream& o) {
          io::write_provenance(o, {command, std::nullopt, rc.correspondences, {}});
          io::write_poses(o, poses);
        });
        std::size_t invalid = 0;
        for (const auto& p : poses) invalid += p.valid ? 0 : 1;
        if (invalid) err << "warning: " << invalid << " of " << poses.size() << " poses exceed the thresholds\n";
        return ok;
      }
      auto poses = io::read_file(rc.poses, [](std::istream& in, const std::string& src) {
        return io::read_poses(in, src);
      });
      reconstruct::CameraAnchor anchor{rc.alpha0, {0.0, 0.0}};
      if (!rc.r0.empty()) {
        auto r0 = parse_list(rc.r0, ',', "--r0");
        if (r0.size() != 2) throw usage_error("--r0 needs two values");
        anchor.r = {r0[0], r0[1]};
      }
      std::vector<bool> accept(rc.allow_invalid ? poses.size() : 0, true);
      auto path = reconstruct::accumulate_camera_path(poses, anchor, accept);
      auto object = io::load_trajectory(rc.object, input_format(rc.object_format));
      auto lab = reconstruct::object_to_lab(object.r(), path, rc.fps).with_id(object.id());
      io::Metadata meta{{"command", command}, {"frame", "lab"}};
      if (rc.out.empty() || rc.out == "-")
        io::write_json(out, std::span<const Trajectory>(&lab, 1), meta);
      else
        io::save(lab, rc.out, output_format(rc.out, ""), meta);
      return ok;
    }

    if (*eff) {
      std::optional<reconstruct::WheelRun> run;
      Trajectory led(SampleMatrix(1, 1)), pivot(SampleMatrix(1, 1));
      if (ef.led.empty()) {
        run = reconstruct::synthesize_wheel_run(ef.wheel);
        led = run->led;
        pivot = run->pivot;
      } else {
        led = io::load_trajectory(ef.led);
        pivot = io::load_trajectory(ef.pivot);
      }
      auto efficiency =
          reconstruct::rolling_efficiency(led, pivot, ef.wheel.led_offset, ef.wheel.omega, ef.wheel.wheel_radius);
      auto t = led.t();
      emit(ef.out, out, [&](std::ostream& o) {
        io::Provenance prov{command, std::nullopt, run ? "synthetic" : ef.led, {}};
        if (run) {
          double worst = 0.0;
          for (std::size_t i = 0; i < efficiency.size(); ++i)
            worst = std::max(worst, std::abs(efficiency[i] - run->slip[i]) / run->slip[i]);
          prov.notes.push_back("max_relative_error: " + io::format_double(worst));
        }
        io::write_provenance(o, prov);
        o << (run ? "t,efficiency,injected\n" : "t,efficiency\n");
        for (std::size_t i = 0; i < efficiency.size(); ++i) {
          o << io::format_double(t[i]) << ',' << io::format_double(efficiency[i]);
          if (run) o << ',' << io::format_double(run->slip[i]);
          o << '\n';
        }
      });
      return ok;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const trajkit::error& e) {
    err << "error: " << e.what() << "\n";
    return data;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return data;
  }
  return usage;
}

}  // namespace trajkit::cli
