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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "schurpriv/channels.hpp"
#include "schurpriv/cmatrix.hpp"

namespace schurpriv::cli {

enum class Command { kAnalyze, kConstruct, kVerify, kGraph };
enum class Format { kText, kJson };

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitInvalidCorrelation = 2,
  kExitObstruction = 3,
  kExitNotPrivate = 4,
};

struct RunConfig {
  Command command = Command::kAnalyze;
  std::vector<std::filesystem::path> inputs;
  std::size_t power = 2;
  double tol = kDefaultTol;
  double zero_tol = kDefaultZeroTol;
  double verdict_tol = kVerdictTol;
  std::uint64_t seed = 0;
  unsigned trials = 5;
  Format format = Format::kText;
  std::optional<std::filesystem::path> out;
};

// Each command writes its report to `out` (text or JSON per cfg.format),
// optionally mirrors the JSON to cfg.out, and returns an ExitCode. Errors are
// reported on `err`; they never escape as exceptions.
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and dispatches.
int main_entry(int argc, char** argv);

// Indented key: value rendering; scalar leaves are printed with the same
// serialiser as the JSON output so numbers match exactly.
std::string render_text(const nlohmann::json& j);

}  // namespace schurpriv::cli
