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

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "trajkit/generators.hpp"
#include "trajkit/io.hpp"

using namespace trajkit;
namespace fs = std::filesystem;

namespace {

class ScratchDir {
 public:
  ScratchDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / ("trajkit_io_" + std::string(info->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

Trajectory small_example() { return make_trajectory({{0, 1.0, 0.63, -0.37}, {0, 0, 0.98, 1.24}}); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool bitwise_equal(const SampleMatrix& a, const SampleMatrix& b) {
  return a.size() == b.size() && a.dim() == b.dim() &&
         std::memcmp(a.data().data(), b.data().data(), a.data().size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Json, RoundTripSmallExample) {
  ScratchDir dir;
  auto traj = small_example().with_id("sample");
  io::save(traj, dir / "a.json", io::Format::json, {{"units", "m"}});
  auto docs = io::load_documents(dir / "a.json");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].trajectory, traj);
  EXPECT_EQ(docs[0].metadata.at("units"), "m");
}

TEST(Json, ExplicitTimeSurvives) {
  auto traj = make_trajectory({{1, 2, 3}}, TimeGrid::explicit_times({0.0, 0.1, 0.35}),
                              DiffMethod::fornberg(3));
  std::stringstream ss;
  io::write_json(ss, std::span<const Trajectory>(&traj, 1));
  EXPECT_NE(ss.str().find("\"explicit\""), std::string::npos);
  auto docs = io::read_json(ss);
  EXPECT_EQ(docs[0].trajectory, traj);
  EXPECT_FALSE(docs[0].trajectory.time_grid().is_uniform());
}

TEST(Json, BitExactDoubles) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<double> x(500);
  for (double& xi : x) xi = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
  x[0] = 5e-324;
  x[1] = -0.0;
  x[2] = 1.7976931348623157e308;
  auto traj = make_trajectory({x}, TimeGrid::uniform(0.1, -3.3));
  std::stringstream ss;
  io::write_json(ss, std::span<const Trajectory>(&traj, 1));
  auto back = io::read_json(ss)[0].trajectory;
  EXPECT_TRUE(bitwise_equal(back.r(), traj.r()));
  EXPECT_EQ(back.time_grid(), traj.time_grid());
}

TEST(Json, EnsembleArray) {
  generators::RandomWalkConfig cfg;
  cfg.base = {.T = 20, .dim = 2, .N = 3, .dt = 1.0, .seed = 5};
  cfg.prob = {{.5, 0, .5}, {.5, 0, .5}};
  auto e = generators::generate(cfg);
  ScratchDir dir;
  io::save(e, dir / "e.json", io::Format::json);
  EXPECT_EQ(slurp(dir / "e.json").front(), '[');
  EXPECT_EQ(io::load(dir / "e.json"), e);
  EXPECT_THROW(io::load_trajectory(dir / "e.json"), io_error);
}

TEST(Json, SchemaDiagnostics) {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    std::stringstream ss(text);
    try {
      io::read_json(ss);
      ADD_FAILURE() << "no error for " << text;
    } catch (const io_error& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  const std::string good_time = R"("time":{"mode":"uniform","dt":1,"t0":0})";
  expect_error("{not json", "not valid JSON");
  expect_error(R"({"schema_version":"2.0","dim":1,)" + good_time + R"(,"axes":[[1,2]]})", "unsupported schema_version");
  expect_error(R"({"schema_version":"1.0","dim":2,)" + good_time + R"(,"axes":[[1,2]]})", "$");
  expect_error(R"({"schema_version":"1.0","dim":1,)" + good_time + R"(,"axes":[[1,"a"]]})", "$.axes[0][1]");
  expect_error(R"([{"schema_version":"1.0","dim":1,)" + good_time + R"(,"axes":[[1,2]]},{"schema_version":"1.0","dim":1,"time":{"mode":"explicit","t":[0,0]},"axes":[[1,2]]}])",
               "1");
  expect_error(R"({"schema_version":"1.0","dim":1,"axes":[[1,2]]})", "time");
}

TEST(Json, MinorVersionIsAccepted) {
  std::stringstream ss(R"({"schema_version":"1.7","dim":1,"time":{"mode":"uniform","dt":0.5,"t0":1},"axes":[[1,2,4]]})");
  auto docs = io::read_json(ss);
  EXPECT_EQ(docs[0].trajectory.t(), (std::vector<double>{1.0, 1.5, 2.0}));
}

TEST(Csv, LineCountAndHeader) {
  ScratchDir dir;
  auto traj = make_trajectory({{0, 1, 2}, {3, 4, 5}});
  io::save(traj, dir / "t.csv", io::Format::csv);
  auto lines = lines_of(slurp(dir / "t.csv"));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "t,x0,x1");
  EXPECT_EQ(lines[1], "0,0,3");
}

TEST(Csv, RoundTrip) {
  ScratchDir dir;
  auto traj = small_example();
  io::save(traj, dir / "s.csv", io::Format::csv);
  EXPECT_EQ(io::load_trajectory(dir / "s.csv"), traj);

  auto odd = make_trajectory({{1, 2, 3, 4}}, TimeGrid::uniform(0.1, 0.3));
  io::save(odd, dir / "u.csv", io::Format::csv);
  auto back = io::load_trajectory(dir / "u.csv");
  EXPECT_EQ(back.t(), odd.t());
  EXPECT_EQ(back.r(), odd.r());

  auto expl = make_trajectory({{1, 2, 3}}, TimeGrid::explicit_times({0.0, 0.5, 2.0}));
  io::save(expl, dir / "x.csv", io::Format::csv);
  EXPECT_EQ(io::load_trajectory(dir / "x.csv"), expl);
}

TEST(Csv, EnsembleDirectory) {
  ScratchDir dir;
  Ensemble e{small_example(), make_trajectory({{5, 6, 7, 8}, {1, 1, 1, 1}})};
  io::save(e, dir / "ens", io::Format::csv);
  EXPECT_TRUE(fs::exists(dir / "ens" / "00000.csv"));
  EXPECT_TRUE(fs::exists(dir / "ens" / "00001.csv"));
  EXPECT_EQ(io::load(dir / "ens"), e);
}

TEST(Csv, Diagnostics) {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    std::stringstream ss(text);
    try {
      io::read_csv(ss, "in.csv");
      ADD_FAILURE() << "no error for " << text;
    } catch (const io_error& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("t,y\n0,1\n", "x0");
  expect_error("t,x0\n0,1\n1,abc\n", "line 3");
  expect_error("t,x0\n0,1\n0,2\n", "strictly increasing");
  expect_error("t,x0\n0,1\n1\n", "line 3");
  expect_error("t,x0\n", "no samples");
  std::stringstream ok("# comment\nt,x0\n0,1\n# another\n1,2\n");
  EXPECT_EQ(io::read_csv(ok).size(), 2u);
}

TEST(Formats, Selection) {
  EXPECT_EQ(io::parse_format("json"), io::Format::json);
  EXPECT_EQ(io::parse_format("csv"), io::Format::csv);
  EXPECT_THROW(io::parse_format("xml"), invalid_argument);
  EXPECT_EQ(io::format_for_path("a/b.json"), io::Format::json);
  EXPECT_EQ(io::format_for_path("a/b.csv"), io::Format::csv);
  EXPECT_THROW(io::format_for_path("a/b.txt"), invalid_argument);
  EXPECT_THROW(io::load("/nonexistent/trajectory.json"), io_error);
}

TEST(Formats, UnwritablePath) {
  ScratchDir dir;
  std::ofstream(dir / "blocker") << "a regular file";
  EXPECT_THROW(io::save(small_example(), dir / "blocker" / "x.json", io::Format::json), io_error);
  EXPECT_THROW(io::save(Ensemble{small_example(), small_example()}, dir / "blocker" / "ens", io::Format::csv), io_error);
}

TEST(Poses, RoundTrip) {
  std::vector<reconstruct::AffinePose> poses{
      {.theta = 0.1, .t = {1.5, -2.25}, .s = 1.01, .mse = 0.3, .valid = true},
      {.theta = -1e-17, .t = {0, 1e300}, .s = 0.5, .mse = 7.0, .valid = false}};
  std::stringstream ss;
  io::write_poses(ss, poses);
  EXPECT_EQ(lines_of(ss.str())[0], "frame,theta,tx,ty,s,mse,valid");
  EXPECT_EQ(io::read_poses(ss), poses);
  std::stringstream bad("frame,theta,tx,ty,s,mse,valid\n1,0,0,0,1,0,2\n");
  EXPECT_THROW(io::read_poses(bad), io_error);
}

TEST(Correspondences, RoundTrip) {
  std::vector<reconstruct::PointCorrespondences> frames(3);
  for (int f = 0; f < 3; ++f)
    for (int k = 0; k <= f + 1; ++k) {
      frames[f].src.push_back({0.1 * k, -0.2 * f});
      frames[f].dst.push_back({0.3 * k + f, 0.7});
    }
  std::stringstream ss;
  io::write_correspondences(ss, frames);
  auto back = io::read_correspondences(ss);
  ASSERT_EQ(back.size(), 3u);
  for (int f = 0; f < 3; ++f) {
    EXPECT_EQ(back[f].src, frames[f].src);
    EXPECT_EQ(back[f].dst, frames[f].dst);
  }
  std::stringstream gap("frame,src_x,src_y,dst_x,dst_y\n1,0,0,0,0\n3,0,0,0,0\n");
  EXPECT_THROW(io::read_correspondences(gap), io_error);
}

TEST(Results, SeriesProvenance) {
  stats::StatSeries s;
  s.axis = {0, 1};
  s.mean = {1.0, 0.5};
  s.spread = {0.1, 0.2};
  s.averaging = stats::Averaging::time;
  s.population = 4;
  s.warnings = {"something odd"};
  std::stringstream ss;
  io::write_series_csv(ss, s, {.command = "trajkit stats vacf in.json", .seed = 42, .source = "trajkit generate rw"},
                       "lag", "vacf");
  auto lines = lines_of(ss.str());
  EXPECT_EQ(lines[0], "# trajkit 1.0.0");
  EXPECT_EQ(lines[1], "# schema_version: 1.0");
  EXPECT_EQ(lines[2], "# command: trajkit stats vacf in.json");
  EXPECT_EQ(lines[3], "# seed: 42");
  EXPECT_EQ(lines[4], "# source: trajkit generate rw");
  EXPECT_EQ(lines[5], "# averaging: time");
  EXPECT_EQ(lines[6], "# population: 4");
  EXPECT_EQ(lines[7], "# warning: something odd");
  EXPECT_EQ(lines[8], "lag,vacf,spread");
  EXPECT_EQ(lines[9], "0,1,0.10000000000000001");
  EXPECT_EQ(lines.size(), 11u);
}

TEST(Results, HistogramAndCollected) {
  auto h = stats::histogram(std::vector<double>{0.5, 1.5, 1.7}, stats::Binning::with_edges({0, 1, 2}));
  std::stringstream hs;
  io::write_histogram_csv(hs, h, {});
  auto hl = lines_of(hs.str());
  EXPECT_EQ(hl[hl.size() - 3], "lower,upper,count");
  EXPECT_EQ(hl.back(), "1,2,2");

  stats::Collected c{SampleMatrix::from_rows({{1, 2}, {3, 4}}), {0, 1}, {5, 5}};
  std::stringstream cs;
  io::write_collected_csv(cs, c, {});
  auto cl = lines_of(cs.str());
  EXPECT_EQ(cl[cl.size() - 3], "trajectory,sample,v0,v1");
  EXPECT_EQ(cl.back(), "1,5,3,4");
}
