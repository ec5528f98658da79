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

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trajkit/core.hpp"
#include "trajkit/reconstruct.hpp"
#include "trajkit/stats.hpp"
#include "trajkit/version.hpp"

namespace trajkit::io {

inline constexpr std::string_view schema_version = "1.0";
inline constexpr int schema_major = 1;

using Metadata = std::map<std::string, std::string>;

/// A trajectory as stored on disk, with its free-form metadata.
struct Document {
  Trajectory trajectory;
  Metadata metadata;
};

enum class Format { json, csv };

inline Format parse_format(std::string_view tag) {
  if (tag == "json") return Format::json;
  if (tag == "csv") return Format::csv;
  throw invalid_argument("unsupported format '" + std::string(tag) + "' (expected json or csv)");
}

/// .json means JSON; .csv files and directories mean CSV.
inline Format format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".json") return Format::json;
  if (ext == ".csv" || ext.empty()) return Format::csv;
  throw invalid_argument("cannot infer format from '" + path.string() + "'; pass json or csv explicitly");
}

/// 17 significant digits, enough to read back the identical double.
inline std::string format_double(double x) {
  // JSON readers take "-0" for the integer 0.
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

using trajkit::detail::require;
using json = nlohmann::json;

inline std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

inline void write_numbers(std::ostream& out, const std::vector<double>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << format_double(values[i]);
  }
  out << ']';
}

inline std::string scheme_name(const DiffMethod& m) {
  return m.scheme == DiffMethod::Scheme::fornberg ? "fornberg" : "linear";
}

inline std::string variant_name(FiniteDifference v) {
  switch (v) {
    case FiniteDifference::forward: return "forward";
    case FiniteDifference::backward: return "backward";
    default: return "central";
  }
}

inline std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  return out;
}

inline std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path.string() + "' for reading");
  return in;
}

inline void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw io_error("write to '" + path.string() + "' failed");
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw io_error("schema violation at " + where + ": " + what);
}

inline const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing field '" + key + "'");
  return *it;
}

inline double number(const json& value, const std::string& where) {
  if (!value.is_number()) schema_error(where, "expected a number");
  double x = value.get<double>();
  if (!std::isfinite(x)) schema_error(where, "value is not finite");
  return x;
}

inline std::string text(const json& value, const std::string& where) {
  if (!value.is_string()) schema_error(where, "expected a string");
  return value.get<std::string>();
}

inline std::vector<double> number_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(number(value[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline void check_version(const json& doc, const std::string& where) {
  std::string version = text(field(doc, "schema_version", where), where + ".schema_version");
  int major = 0;
  auto dot = version.find('.');
  try {
    major = std::stoi(version.substr(0, dot));
  } catch (const std::exception&) {
    schema_error(where + ".schema_version", "malformed version '" + version + "'");
  }
  if (major != schema_major)
    throw io_error("unsupported schema_version " + version + " at " + where + " (this build reads " +
                   std::to_string(schema_major) + ".x)");
}

inline DiffMethod parse_diff_method(const json& value, const std::string& where) {
  if (!value.is_object()) schema_error(where, "expected an object");
  std::string scheme = text(field(value, "scheme", where), where + ".scheme");
  if (scheme == "fornberg") {
    const auto& w = field(value, "window", where);
    if (!w.is_number_integer()) schema_error(where + ".window", "expected an integer");
    return DiffMethod::fornberg(w.get<std::size_t>());
  }
  if (scheme != "linear") schema_error(where + ".scheme", "unknown scheme '" + scheme + "'");
  std::string variant = value.contains("variant") ? text(value["variant"], where + ".variant") : "central";
  if (variant == "forward") return DiffMethod::linear(FiniteDifference::forward);
  if (variant == "backward") return DiffMethod::linear(FiniteDifference::backward);
  if (variant == "central") return DiffMethod::linear(FiniteDifference::central);
  schema_error(where + ".variant", "unknown variant '" + variant + "'");
}

inline Document parse_document(const json& doc, const std::string& where) {
  if (!doc.is_object()) schema_error(where, "expected a trajectory document object");
  check_version(doc, where);
  const auto& dim_field = field(doc, "dim", where);
  if (!dim_field.is_number_unsigned() || dim_field.get<std::size_t>() < 1)
    schema_error(where + ".dim", "expected a positive integer");
  const std::size_t dim = dim_field.get<std::size_t>();

  const auto& axes_field = field(doc, "axes", where);
  if (!axes_field.is_array()) schema_error(where + ".axes", "expected an array of arrays");
  if (axes_field.size() != dim)
    schema_error(where + ".axes", "has " + std::to_string(axes_field.size()) + " arrays but dim is " +
                                      std::to_string(dim));
  std::vector<std::vector<double>> axes;
  for (std::size_t k = 0; k < dim; ++k) {
    std::string at = where + ".axes[" + std::to_string(k) + "]";
    axes.push_back(number_array(axes_field[k], at));
    if (axes.back().empty()) schema_error(at, "axis is empty");
    if (axes.back().size() != axes.front().size())
      schema_error(at, "length " + std::to_string(axes.back().size()) + " differs from axis 0 length " +
                           std::to_string(axes.front().size()));
  }
  const std::size_t n = axes.front().size();

  const auto& time = field(doc, "time", where);
  if (!time.is_object()) schema_error(where + ".time", "expected an object");
  std::string mode = text(field(time, "mode", where + ".time"), where + ".time.mode");
  TimeGrid grid;
  try {
    if (mode == "uniform") {
      grid = TimeGrid::uniform(number(field(time, "dt", where + ".time"), where + ".time.dt"),
                               number(field(time, "t0", where + ".time"), where + ".time.t0"));
    } else if (mode == "explicit") {
      auto t = number_array(field(time, "t", where + ".time"), where + ".time.t");
      if (t.size() != n)
        schema_error(where + ".time.t", "has " + std::to_string(t.size()) + " instants for " + std::to_string(n) +
                                            " samples");
      grid = TimeGrid::explicit_times(std::move(t));
    } else {
      schema_error(where + ".time.mode", "expected 'uniform' or 'explicit', got '" + mode + "'");
    }
  } catch (const invalid_argument& e) {
    schema_error(where + ".time", e.what());
  }

  DiffMethod diff;
  if (doc.contains("diff_method")) diff = parse_diff_method(doc["diff_method"], where + ".diff_method");

  std::optional<std::string> id;
  if (doc.contains("traj_id") && !doc["traj_id"].is_null()) id = text(doc["traj_id"], where + ".traj_id");

  Metadata metadata;
  if (doc.contains("metadata")) {
    const auto& m = doc["metadata"];
    if (!m.is_object()) schema_error(where + ".metadata", "expected an object of strings");
    for (auto it = m.begin(); it != m.end(); ++it)
      metadata[it.key()] = text(it.value(), where + ".metadata." + it.key());
  }
  return {Trajectory(SampleMatrix::from_axes(axes), std::move(grid), diff, std::move(id)), std::move(metadata)};
}

}  // namespace detail

/// One TrajectoryDocument. Numbers are written with 17 significant digits.
inline void write_document(std::ostream& out, const Trajectory& traj, const Metadata& metadata = {}) {
  out << "{\"schema_version\":" << detail::quote(schema_version);
  out << ",\"traj_id\":" << (traj.id() ? detail::quote(*traj.id()) : "null");
  out << ",\"dim\":" << traj.dim();
  const auto& grid = traj.time_grid();
  if (grid.is_uniform()) {
    out << ",\"time\":{\"mode\":\"uniform\",\"dt\":" << format_double(grid.uniform_params().dt)
        << ",\"t0\":" << format_double(grid.uniform_params().t0) << '}';
  } else {
    out << ",\"time\":{\"mode\":\"explicit\",\"t\":";
    detail::write_numbers(out, traj.t());
    out << '}';
  }
  const auto& diff = traj.diff_method();
  out << ",\"diff_method\":{\"scheme\":" << detail::quote(detail::scheme_name(diff));
  if (diff.scheme == DiffMethod::Scheme::fornberg)
    out << ",\"window\":" << diff.window;
  else
    out << ",\"variant\":" << detail::quote(detail::variant_name(diff.variant));
  out << "},\"axes\":[";
  for (std::size_t k = 0; k < traj.dim(); ++k) {
    if (k) out << ',';
    detail::write_numbers(out, traj.r().axis(k));
  }
  out << "],\"metadata\":{";
  bool first = true;
  for (const auto& [key, value] : metadata) {
    if (!first) out << ',';
    first = false;
    out << detail::quote(key) << ':' << detail::quote(value);
  }
  out << "}}";
}

/// A single trajectory is written as one document; anything else as an array.
inline void write_json(std::ostream& out, std::span<const Trajectory> trajs, const Metadata& metadata = {},
                       bool force_array = false) {
  detail::require(!trajs.empty(), "nothing to save");
  if (trajs.size() == 1 && !force_array) {
    write_document(out, trajs.front(), metadata);
    out << '\n';
    return;
  }
  out << "[\n";
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    write_document(out, trajs[j], metadata);
    out << (j + 1 < trajs.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

/// Parses a document or an array of documents.
inline std::vector<Document> read_json(std::istream& in, const std::string& source = "<stream>") {
  detail::json root;
  try {
    root = detail::json::parse(in);
  } catch (const detail::json::parse_error& e) {
    throw io_error("'" + source + "' is not valid JSON: " + e.what());
  }
  std::vector<Document> docs;
  if (root.is_array()) {
    if (root.empty()) throw io_error("'" + source + "' holds an empty ensemble");
    for (std::size_t j = 0; j < root.size(); ++j) docs.push_back(detail::parse_document(root[j], "$[" + std::to_string(j) + "]"));
  } else {
    docs.push_back(detail::parse_document(root, "$"));
  }
  return docs;
}

inline void write_csv(std::ostream& out, const Trajectory& traj) {
  out << 't';
  for (std::size_t k = 0; k < traj.dim(); ++k) out << ",x" << k;
  out << '\n';
  auto t = traj.t();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << format_double(t[i]);
    for (double c : traj.r().row(i)) out << ',' << format_double(c);
    out << '\n';
  }
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

inline double parse_field(const std::string& raw, const std::string& source, std::size_t line, std::size_t column) {
  std::string s = strip(raw);
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  double x = std::strtod(begin, &end);
  if (s.empty() || end != begin + s.size() || errno == ERANGE || !std::isfinite(x))
    throw io_error(source + ": line " + std::to_string(line) + ", field " + std::to_string(column) +
                   ": '" + s + "' is not a finite number");
  return x;
}

/// Reads comma-separated numeric rows under a header; '#' lines are ignored.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line_of_row;
};

inline CsvTable read_table(std::istream& in, const std::string& source) {
  CsvTable table;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    auto fields = split(s, ',');
    if (table.header.empty()) {
      for (auto& f : fields) table.header.push_back(strip(f));
      continue;
    }
    if (fields.size() != table.header.size())
      throw io_error(source + ": line " + std::to_string(number) + ": expected " +
                     std::to_string(table.header.size()) + " fields, found " + std::to_string(fields.size()));
    std::vector<double> row;
    for (std::size_t c = 0; c < fields.size(); ++c) row.push_back(parse_field(fields[c], source, number, c + 1));
    table.rows.push_back(std::move(row));
    table.line_of_row.push_back(number);
  }
  if (table.header.empty()) throw io_error(source + ": missing header line");
  return table;
}

inline void expect_header(const CsvTable& table, const std::vector<std::string>& expected, const std::string& source) {
  if (table.header != expected) {
    std::string want;
    for (std::size_t i = 0; i < expected.size(); ++i) want += (i ? "," : "") + expected[i];
    throw io_error(source + ": header must be '" + want + "'");
  }
}

/// A uniform grid when some step reproduces every instant bit for bit.
inline TimeGrid detect_grid(const std::vector<double>& t) {
  if (t.size() >= 2) {
    const double candidates[] = {t[1] - t[0], (t.back() - t.front()) / static_cast<double>(t.size() - 1)};
    for (double dt : candidates) {
      if (!(dt > 0.0)) continue;
      bool exact = true;
      for (std::size_t i = 0; i < t.size() && exact; ++i) exact = t[0] + static_cast<double>(i) * dt == t[i];
      if (exact) return TimeGrid::uniform(dt, t[0]);
    }
  } else if (t.size() == 1 && t[0] == 0.0) {
    return TimeGrid{};
  }
  return TimeGrid::explicit_times(t);
}

}  // namespace detail

inline Trajectory read_csv(std::istream& in, const std::string& source = "<stream>") {
  auto table = detail::read_table(in, source);
  const auto& header = table.header;
  if (header.size() < 2 || header[0] != "t") throw io_error(source + ": header must be 't,x0,...,x{d-1}'");
  for (std::size_t k = 1; k < header.size(); ++k)
    if (header[k] != "x" + std::to_string(k - 1))
      throw io_error(source + ": header field " + std::to_string(k + 1) + " must be 'x" + std::to_string(k - 1) + "'");
  if (table.rows.empty()) throw io_error(source + ": no samples");
  const std::size_t d = header.size() - 1;
  std::vector<double> t, data;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (i > 0 && !(row[0] > t.back()))
      throw io_error(source + ": line " + std::to_string(table.line_of_row[i]) + ": time is not strictly increasing");
    t.push_back(row[0]);
    data.insert(data.end(), row.begin() + 1, row.end());
  }
  return Trajectory(SampleMatrix(std::move(data), t.size(), d), detail::detect_grid(t));
}

/// Writes JSON to a file, or CSV to a file (single trajectory) or a directory
/// of NNNNN.csv files (ensemble).
inline void save(std::span<const Trajectory> trajs, const std::filesystem::path& path, Format format,
                 const Metadata& metadata = {}) {
  detail::require(!trajs.empty(), "nothing to save");
  if (format == Format::json) {
    auto out = detail::open_out(path);
    write_json(out, trajs, metadata);
    detail::finish_write(out, path);
    return;
  }
  if (trajs.size() == 1 && path.extension() == ".csv") {
    auto out = detail::open_out(path);
    write_csv(out, trajs.front());
    detail::finish_write(out, path);
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec || !std::filesystem::is_directory(path))
    throw io_error("cannot create directory '" + path.string() + "'");
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    char name[32];
    std::snprintf(name, sizeof name, "%05zu.csv", j);
    auto file = path / name;
    auto out = detail::open_out(file);
    write_csv(out, trajs[j]);
    detail::finish_write(out, file);
  }
}

inline void save(const Trajectory& traj, const std::filesystem::path& path, Format format,
                 const Metadata& metadata = {}) {
  save(std::span<const Trajectory>(&traj, 1), path, format, metadata);
}

inline std::vector<Document> load_documents(const std::filesystem::path& path, std::optional<Format> format = {}) {
  Format f = format ? *format : (std::filesystem::is_directory(path) ? Format::csv : format_for_path(path));
  if (f == Format::json) {
    auto in = detail::open_in(path);
    return read_json(in, path.string());
  }
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw io_error("directory '" + path.string() + "' has no .csv files");
  } else {
    files.push_back(path);
  }
  std::vector<Document> docs;
  for (const auto& file : files) {
    auto in = detail::open_in(file);
    docs.push_back({read_csv(in, file.string()), {}});
  }
  return docs;
}

inline Ensemble load(const std::filesystem::path& path, std::optional<Format> format = {}) {
  Ensemble out;
  for (auto& doc : load_documents(path, format)) out.push_back(std::move(doc.trajectory));
  return out;
}

inline Trajectory load_trajectory(const std::filesystem::path& path, std::optional<Format> format = {}) {
  auto ensemble = load(path, format);
  if (ensemble.size() != 1)
    throw io_error("'" + path.string() + "' holds " + std::to_string(ensemble.size()) +
                   " trajectories, expected exactly one");
  return std::move(ensemble.front());
}

// Pose sequences: frame,theta,tx,ty,s,mse,valid (frame i maps frame i-1 to i).

inline void write_poses(std::ostream& out, std::span<const reconstruct::AffinePose> poses) {
  out << "frame,theta,tx,ty,s,mse,valid\n";
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto& p = poses[i];
    out << i + 1 << ',' << format_double(p.theta) << ',' << format_double(p.t[0]) << ',' << format_double(p.t[1])
        << ',' << format_double(p.s) << ',' << format_double(p.mse) << ',' << (p.valid ? 1 : 0) << '\n';
  }
}

inline std::vector<reconstruct::AffinePose> read_poses(std::istream& in, const std::string& source = "<stream>") {
  auto table = detail::read_table(in, source);
  detail::expect_header(table, {"frame", "theta", "tx", "ty", "s", "mse", "valid"}, source);
  std::vector<reconstruct::AffinePose> poses;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row[0] != static_cast<double>(i + 1))
      throw io_error(source + ": line " + std::to_string(table.line_of_row[i]) + ": expected frame " +
                     std::to_string(i + 1));
    if (row[6] != 0.0 && row[6] != 1.0)
      throw io_error(source + ": line " + std::to_string(table.line_of_row[i]) + ", field 7: valid must be 0 or 1");
    poses.push_back({row[1], {row[2], row[3]}, row[4], row[5], row[6] == 1.0});
  }
  return poses;
}

// Correspondences: frame,src_x,src_y,dst_x,dst_y with frames 1, 2, ... in order;
// the rows of frame i pair points in frame i-1 (src) with frame i (dst).

inline void write_correspondences(std::ostream& out, std::span<const reconstruct::PointCorrespondences> frames) {
  out << "frame,src_x,src_y,dst_x,dst_y\n";
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t k = 0; k < frames[i].src.size(); ++k)
      out << i + 1 << ',' << format_double(frames[i].src[k][0]) << ',' << format_double(frames[i].src[k][1]) << ','
          << format_double(frames[i].dst[k][0]) << ',' << format_double(frames[i].dst[k][1]) << '\n';
}

inline std::vector<reconstruct::PointCorrespondences> read_correspondences(std::istream& in,
                                                                           const std::string& source = "<stream>") {
  auto table = detail::read_table(in, source);
  detail::expect_header(table, {"frame", "src_x", "src_y", "dst_x", "dst_y"}, source);
  std::vector<reconstruct::PointCorrespondences> frames;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    double frame = row[0];
    if (frame == static_cast<double>(frames.size() + 1)) {
      frames.emplace_back();
    } else if (frames.empty() || frame != static_cast<double>(frames.size())) {
      throw io_error(source + ": line " + std::to_string(table.line_of_row[i]) +
                     ": frames must be contiguous integers starting at 1");
    }
    frames.back().src.push_back({row[1], row[2]});
    frames.back().dst.push_back({row[3], row[4]});
  }
  return frames;
}

template <class Fn>
auto read_file(const std::filesystem::path& path, Fn&& reader) {
  auto in = detail::open_in(path);
  return reader(in, path.string());
}

/// Header comments that make a result file reproducible.
struct Provenance {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::string source;
  std::vector<std::string> notes;
};

inline void write_provenance(std::ostream& out, const Provenance& p) {
  out << "# trajkit " << version_string << '\n';
  out << "# schema_version: " << schema_version << '\n';
  if (!p.command.empty()) out << "# command: " << p.command << '\n';
  if (p.seed) out << "# seed: " << *p.seed << '\n';
  if (!p.source.empty()) out << "# source: " << p.source << '\n';
  for (const auto& note : p.notes) out << "# " << note << '\n';
}

inline const char* averaging_name(stats::Averaging a) { return a == stats::Averaging::time ? "time" : "ensemble"; }

inline void write_series_csv(std::ostream& out, const stats::StatSeries& series, const Provenance& p,
                             std::string_view axis_name = "t", std::string_view value_name = "value") {
  write_provenance(out, p);
  out << "# averaging: " << averaging_name(series.averaging) << '\n';
  out << "# population: " << series.population << '\n';
  for (const auto& w : series.warnings) out << "# warning: " << w << '\n';
  out << axis_name << ',' << value_name << ",spread\n";
  for (std::size_t i = 0; i < series.size(); ++i)
    out << format_double(series.axis[i]) << ',' << format_double(series.mean[i]) << ','
        << format_double(series.spread[i]) << '\n';
}

inline void write_histogram_csv(std::ostream& out, const stats::HistogramResult& h, const Provenance& p) {
  write_provenance(out, p);
  out << "# normalized: " << (h.normalized ? "true" : "false") << '\n';
  out << "# samples: " << h.total << '\n';
  if (h.outside) out << "# outside: " << h.outside << '\n';
  if (h.skipped) out << "# skipped: " << h.skipped << '\n';
  out << "lower,upper," << (h.normalized ? "density" : "count") << '\n';
  for (std::size_t b = 0; b < h.values.size(); ++b)
    out << format_double(h.edges[b]) << ',' << format_double(h.edges[b + 1]) << ',' << format_double(h.values[b])
        << '\n';
}

inline void write_collected_csv(std::ostream& out, const stats::Collected& c, const Provenance& p) {
  write_provenance(out, p);
  out << "trajectory,sample";
  for (std::size_t k = 0; k < c.values.dim(); ++k) out << ",v" << k;
  out << '\n';
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    out << c.trajectory[i] << ',' << c.sample[i];
    for (double x : c.values.row(i)) out << ',' << format_double(x);
    out << '\n';
  }
}

}  // namespace trajkit::io
