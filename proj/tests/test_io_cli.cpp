// Copyright 2026 The schurpriv Authors
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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "schurpriv/cli.hpp"
#include "schurpriv/errors.hpp"
#include "schurpriv/io.hpp"
#include "test_support.hpp"

namespace schurpriv {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kData = SCHURPRIV_DATA_DIR;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("schurpriv_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(cli::Command cmd, std::vector<fs::path> inputs, cli::Format fmt = cli::Format::kJson,
                std::size_t power = 2) {
  cli::RunConfig cfg;
  cfg.command = cmd;
  cfg.inputs = std::move(inputs);
  cfg.format = fmt;
  cfg.power = power;
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

TEST(Io, MatrixRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const CMat m = testing::random_matrix(rng, 1 + t % 4, 1 + t % 3);
    const json j = io::matrix_to_json(m);
    const CMat back = io::matrix_from_json(json::parse(j.dump()));
    EXPECT_TRUE(back.approx_equal(m, 0.0));
  }
}

TEST(Io, MatrixParsingErrors) {
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":2,"cols":2})")), io::IoError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"data":[[1]]})")),
               io::IoError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"data":[["x"]]})")),
               io::IoError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"rows":0,"cols":0,"data":[]})")),
               io::IoError);
  const CMat bare = io::matrix_from_json(json::parse(R"({"rows":1,"cols":2,"data":[[1,[0,2]]]})"));
  EXPECT_EQ(bare(0, 1), Complex(0.0, 2.0));
}

TEST(Io, GraphAndKrausRoundTrip) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);
  EXPECT_EQ(io::graph_to_json(g)["edges"][0], json::array({1, 2}));
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":2,"edges":[[0,1]]})")), io::IoError);
  const std::vector<std::vector<Complex>> k{{1.0, Complex(0.0, 1.0)}};
  const json kj = io::kraus_to_json(k);
  EXPECT_TRUE(io::is_kraus_file(kj));
  EXPECT_EQ(io::kraus_from_json(kj), k);
}

TEST(Io, AlgebraFileForms) {
  const auto a = io::algebra_from_json(io::read_json_file(kData / "coupled_triple_code.json"));
  EXPECT_EQ(a.matrices.size(), 2u);
  const json bare = json::array({io::matrix_to_json(CMat::identity(2))});
  EXPECT_EQ(io::algebra_from_json(bare).matrices.size(), 1u);
  EXPECT_THROW(io::algebra_from_json(json::array()), io::IoError);
}

TEST(Cli, AnalyzeCnot) {
  const auto r = run_cli(cli::Command::kAnalyze, {kData / "cnot.json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["components"], json::parse("[[1,2,3],[4]]"));
  EXPECT_EQ(j["alpha"]["size"], 2);
  EXPECT_EQ(j["qubit_yield"], 1);
}

TEST(Cli, AnalyzeKrausFileMatchesMatrixFile) {
  const auto a = run_cli(cli::Command::kAnalyze, {kData / "cnot.json"});
  const auto b = run_cli(cli::Command::kAnalyze, {kData / "cnot_kraus.json"});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  EXPECT_EQ(json::parse(a.out)["graph"], json::parse(b.out)["graph"]);
}

TEST(Cli, AnalyzeAllOnes) {
  TempDir tmp;
  const fs::path f = tmp.path() / "ones.json";
  io::write_json_file(f, io::matrix_to_json(CMat::ones(3, 3)));
  const auto r = run_cli(cli::Command::kAnalyze, {f}, cli::Format::kText);
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("complete graph; no privatisation at any tensor power"), std::string::npos);
}

TEST(Cli, ExitCodesForBadInput) {
  TempDir tmp;
  EXPECT_EQ(run_cli(cli::Command::kAnalyze, {tmp.path() / "missing.json"}).code, cli::kExitIo);
  const fs::path garbage = tmp.path() / "garbage.json";
  write_text(garbage, "{not json");
  EXPECT_EQ(run_cli(cli::Command::kAnalyze, {garbage}).code, cli::kExitIo);

  const auto herm = run_cli(cli::Command::kAnalyze, {kData / "not_hermitian.json"});
  EXPECT_EQ(herm.code, cli::kExitInvalidCorrelation);
  EXPECT_NE(herm.err.find("not Hermitian"), std::string::npos);

  const fs::path not_psd = tmp.path() / "not_psd.json";
  io::write_json_file(not_psd, io::matrix_to_json(CMat{{1.0, 2.0}, {2.0, 1.0}}));
  const auto psd = run_cli(cli::Command::kAnalyze, {not_psd});
  EXPECT_EQ(psd.code, cli::kExitInvalidCorrelation);
  EXPECT_NE(psd.err.find("not PSD"), std::string::npos);

  const fs::path bad_kraus = tmp.path() / "bad_kraus.json";
  write_text(bad_kraus, R"({"n":2,"diagonals":[[1,0.5]]})");
  EXPECT_EQ(run_cli(cli::Command::kAnalyze, {bad_kraus}).code, cli::kExitInvalidCorrelation);
}

TEST(Cli, ConstructCnotAndObstruction) {
  const auto ok = run_cli(cli::Command::kConstruct, {kData / "cnot.json"});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  const json j = json::parse(ok.out);
  EXPECT_EQ(j["indices"]["identity_block"], json::parse("[1,10,13,16]"));
  EXPECT_EQ(j["indices"]["embedding_natural"], json::parse("[1,4,13,16]"));
  EXPECT_TRUE(j["verified"].get<bool>());

  const auto obstructed = run_cli(cli::Command::kConstruct, {kData / "coupled_triple.json"});
  EXPECT_EQ(obstructed.code, cli::kExitObstruction);
  const auto complete = run_cli(cli::Command::kConstruct, {kData / "complete_triple.json"});
  EXPECT_EQ(complete.code, cli::kExitObstruction);
  EXPECT_NE(complete.err.find("complete"), std::string::npos);
  EXPECT_EQ(run_cli(cli::Command::kConstruct, {kData / "cnot.json"}, cli::Format::kJson, 1).code,
            cli::kExitIo);
}

TEST(Cli, VerifyCoupledTriple) {
  const auto ok =
      run_cli(cli::Command::kVerify, {kData / "coupled_triple.json", kData / "coupled_triple_code.json"});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["verdict"]["is_private"].get<bool>());

  TempDir tmp;
  const CMat s = testing::cyclic_shift(3);
  const std::vector<CMat> circ{CMat::identity(3), s, s * s};
  const fs::path f = tmp.path() / "circ.json";
  io::write_json_file(f, io::algebra_to_json(circ, true));
  const auto no = run_cli(cli::Command::kVerify, {kData / "coupled_triple.json", f});
  EXPECT_EQ(no.code, cli::kExitNotPrivate);
  const json d = json::parse(no.out)["diagnostics"];
  EXPECT_TRUE(d["quasiorthogonal_to_diagonal"].get<bool>());

  const auto mismatch = run_cli(cli::Command::kVerify, {kData / "cnot.json", f});
  EXPECT_EQ(mismatch.code, cli::kExitIo);
}

TEST(Cli, VerifyQubitPairCode) {
  TempDir tmp;
  const fs::path c = tmp.path() / "id4.json";
  io::write_json_file(c, io::matrix_to_json(CMat::identity(4)));
  const CMat i2 = CMat::identity(2);
  const std::vector<CMat> code{kron(i2, i2), kron(i2, testing::pauli_x()),
                               kron(testing::pauli_y(), testing::pauli_y()),
                               kron(testing::pauli_y(), testing::pauli_z())};
  const fs::path a = tmp.path() / "code.json";
  io::write_json_file(a, io::algebra_to_json(code, true));
  const auto r = run_cli(cli::Command::kVerify, {c, a});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const CMat rho0 = io::matrix_from_json(json::parse(r.out)["verdict"]["rho0"]);
  EXPECT_TRUE(rho0.approx_equal(Complex(0.25) * CMat::identity(4), 1e-15));
}

TEST(Cli, GraphCommand) {
  const auto r = run_cli(cli::Command::kGraph, {kData / "coupled_triple.json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["graph"]["edges"], json::parse("[[1,3],[2,3]]"));
  EXPECT_EQ(j["unitary_graph"]["edges"], json::array());
}

// Every number in the text rendering appears verbatim in the JSON rendering.
TEST(Cli, TextAndJsonCarryTheSameNumbers) {
  for (auto cmd : {cli::Command::kAnalyze, cli::Command::kConstruct}) {
    const auto text = run_cli(cmd, {kData / "cnot.json"}, cli::Format::kText);
    const auto js = run_cli(cmd, {kData / "cnot.json"}, cli::Format::kJson);
    ASSERT_EQ(text.code, js.code);
    const json doc = json::parse(js.out);
    std::vector<std::string> leaves;
    std::function<void(const json&)> walk = [&](const json& v) {
      if (v.is_structured()) {
        for (const auto& e : v) walk(e);
      } else if (v.is_number()) {
        leaves.push_back(v.dump());
      }
    };
    walk(doc);
    // Compare the multisets of numeric tokens.
    std::vector<std::string> text_numbers;
    std::string token;
    auto flush = [&] {
      if (!token.empty() && (std::isdigit(static_cast<unsigned char>(token[0])) || token[0] == '-')) {
        text_numbers.push_back(token);
      }
      token.clear();
    };
    for (char ch : text.out) {
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+') {
        token += ch;
      } else {
        flush();
      }
    }
    flush();
    std::vector<std::string> json_numbers = leaves;
    std::sort(json_numbers.begin(), json_numbers.end());
    std::vector<std::string> from_text;
    for (const auto& s : text_numbers) {
      if (s.find_first_not_of("0123456789.-+e") == std::string::npos) from_text.push_back(s);
    }
    std::sort(from_text.begin(), from_text.end());
    std::vector<std::string> missing;
    std::set_difference(json_numbers.begin(), json_numbers.end(), from_text.begin(),
                        from_text.end(), std::back_inserter(missing));
    EXPECT_TRUE(missing.empty()) << "first missing: " << (missing.empty() ? "" : missing[0]);
  }
}

TEST(Cli, OutFileMirrorsJsonAndReparses) {
  TempDir tmp;
  cli::RunConfig cfg;
  cfg.command = cli::Command::kConstruct;
  cfg.inputs = {kData / "cnot.json"};
  cfg.out = tmp.path() / "cert.json";
  std::ostringstream out, err;
  ASSERT_EQ(cli::run(cfg, out, err), cli::kExitOk);
  const json doc = io::read_json_file(*cfg.out);
  for (const auto& m : doc["algebra"]["matrices"]) {
    const CMat back = io::matrix_from_json(m);
    EXPECT_TRUE(io::matrix_from_json(io::matrix_to_json(back)).approx_equal(back, 0.0));
  }
  EXPECT_EQ(io::matrix_from_json(doc["rho0"]).rows(), 16u);
}

TEST(Cli, RepeatedRunsAreIdentical) {
  const auto a = run_cli(cli::Command::kVerify,
                         {kData / "coupled_triple.json", kData / "full_3x3.json"});
  const auto b = run_cli(cli::Command::kVerify,
                         {kData / "coupled_triple.json", kData / "full_3x3.json"});
  EXPECT_EQ(a.code, cli::kExitNotPrivate);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MainEntryParsesFlags) {
  const std::string file = (kData / "cnot.json").string();
  std::vector<std::string> args{"schurpriv", "graph", file, "--format", "json", "--tol", "1e-8"};
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  ::testing::internal::CaptureStdout();
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data());
  const std::string out = ::testing::internal::GetCapturedStdout();
  EXPECT_EQ(code, cli::kExitOk);
  EXPECT_EQ(json::parse(out)["graph"]["n"], 4);

  std::vector<std::string> bad{"schurpriv", "analyze", file, "--tol", "-1"};
  std::vector<char*> bad_argv;
  for (auto& s : bad) bad_argv.push_back(s.data());
  ::testing::internal::CaptureStderr();
  ::testing::internal::CaptureStdout();
  EXPECT_EQ(cli::main_entry(static_cast<int>(bad_argv.size()), bad_argv.data()), cli::kExitIo);
  ::testing::internal::GetCapturedStdout();
  ::testing::internal::GetCapturedStderr();
}

}  // namespace
}  // namespace schurpriv
