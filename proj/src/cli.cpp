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


#include "schurpriv/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "schurpriv/algebras.hpp"
#include "schurpriv/codegen.hpp"
#include "schurpriv/correlation.hpp"
#include "schurpriv/errors.hpp"
#include "schurpriv/io.hpp"

namespace schurpriv::cli {
namespace {

using nlohmann::json;

// Raised for any input that does not yield a correlation matrix.
class InvalidCorrelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CorrelationMatrix load_correlation(const std::filesystem::path& path, double tol) {
  const json j = io::read_json_file(path);
  try {
    if (io::is_kraus_file(j)) return from_diagonal_kraus(io::kraus_from_json(j), tol);
    return CorrelationMatrix::validate(io::matrix_from_json(j), tol);
  } catch (const ValidationError& e) {
    throw InvalidCorrelation(e.what());
  } catch (const NormalizationError& e) {
    throw InvalidCorrelation(e.what());
  } catch (const DimensionError& e) {
    throw InvalidCorrelation(e.what());
  }
}

void require_inputs(const RunConfig& cfg, std::size_t count) {
  if (cfg.inputs.size() != count) {
    throw io::IoError("expected " + std::to_string(count) + " input file(s)");
  }
}

void emit(const RunConfig& cfg, const json& doc, std::ostream& out) {
  if (cfg.out) io::write_json_file(*cfg.out, doc);
  if (cfg.format == Format::kJson) {
    out << doc.dump(2) << '\n';
  } else {
    out << render_text(doc);
  }
}

// Runs `body`, translating exceptions into exit codes.
int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InvalidCorrelation& e) {
    err << "error: invalid correlation matrix: " << e.what() << '\n';
    return kExitInvalidCorrelation;
  } catch (const ObstructionError& e) {
    err << "error: construction obstructed: " << e.what() << '\n';
    return kExitObstruction;
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

void render(const json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool nested_object = v.is_object() && !v.empty();
    bool array_of_objects = false;
    if (v.is_array()) {
      for (const auto& e : v) array_of_objects = array_of_objects || e.is_object();
    }
    if (nested_object) {
      os << indent << it.key() << ":\n";
      render(v, indent + "  ", os);
    } else if (array_of_objects) {
      os << indent << it.key() << ":\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        os << indent << "  [" << k << "]:\n";
        render(v[k], indent + "    ", os);
      }
    } else if (v.is_string()) {
      os << indent << it.key() << ": " << v.get<std::string>() << '\n';
    } else {
      os << indent << it.key() << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  if (j.is_object()) {
    render(j, "", os);
  } else {
    os << j.dump() << '\n';
  }
  return os.str();
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        require_inputs(cfg, 1);
        const auto c = load_correlation(cfg.inputs[0], cfg.tol);
        ReportOptions opts;
        opts.power = cfg.power;
        opts.tol = cfg.tol;
        opts.zero_tol = cfg.zero_tol;
        emit(cfg, io::report_to_json(privacy_report(c, opts)), out);
        return int{kExitOk};
      },
      err);
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        require_inputs(cfg, 1);
        if (cfg.power < 2) throw io::IoError("construct requires --power >= 2");
        const auto c = load_correlation(cfg.inputs[0], cfg.tol);
        CodegenOptions opts;
        opts.tol = cfg.verdict_tol;
        opts.zero_tol = cfg.zero_tol;
        const auto cert = private_code_tensor_power(c, cfg.power, opts);
        emit(cfg, io::certificate_to_json(cert), out);
        return cert.verified ? int{kExitOk} : int{kExitNotPrivate};
      },
      err);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        require_inputs(cfg, 2);
        const auto c = load_correlation(cfg.inputs[0], cfg.tol);
        const auto alg = io::algebra_from_json(io::read_json_file(cfg.inputs[1]));
        for (const auto& m : alg.matrices) {
          if (m.rows() != c.size() || m.cols() != c.size()) {
            throw io::IoError("algebra matrices are " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + " but C is " +
                              std::to_string(c.size()) + "x" + std::to_string(c.size()));
          }
        }
        const SchurChannel channel(c);
        PrivateCheckOptions check;
        check.tol = cfg.verdict_tol;
        check.zero_tol = cfg.zero_tol;
        const auto verdict = private_check(channel, alg.matrices, check);

        const std::size_t n = c.size();
        const auto diag = diagonal_algebra(n);
        const auto necessary = opsystem_algebra(unitary_graph_of(c, cfg.tol));
        const auto sufficient = opsystem_algebra(star_closure(graph_of(c, cfg.zero_tol)));
        const bool separating =
            find_separating_vector(alg.matrices, cfg.trials, cfg.seed).has_value();
        json doc = {
            {"verdict", io::verdict_to_json(verdict)},
            {"diagnostics",
             {{"quasiorthogonal_to_diagonal", quasiorthogonal(alg.matrices, diag.basis())},
              {"quasiorthogonal_to_unitary_graph_algebra",
               quasiorthogonal(alg.matrices, necessary.basis())},
              {"quasiorthogonal_to_graph_closure_algebra",
               quasiorthogonal(alg.matrices, sufficient.basis())},
              {"separating_vector", separating},
              {"separating_vector_probabilistic", !separating},
              {"structural_private_to_unit",
               structurally_private_to_unit(channel, alg.matrices, cfg.verdict_tol)}}},
        };
        emit(cfg, doc, out);
        return verdict.is_private ? int{kExitOk} : int{kExitNotPrivate};
      },
      err);
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        require_inputs(cfg, 1);
        const auto c = load_correlation(cfg.inputs[0], cfg.tol);
        emit(cfg,
             {{"graph", io::graph_to_json(graph_of(c, cfg.zero_tol))},
              {"unitary_graph", io::graph_to_json(unitary_graph_of(c, cfg.tol))}},
             out);
        return int{kExitOk};
      },
      err);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::kAnalyze:
      return cmd_analyze(cfg, out, err);
    case Command::kConstruct:
      return cmd_construct(cfg, out, err);
    case Command::kVerify:
      return cmd_verify(cfg, out, err);
    case Command::kGraph:
      return cmd_graph(cfg, out, err);
  }
  return kExitIo;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Privacy analysis and private-code construction for Schur product channels"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Hermiticity/PSD and unit-modulus tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--zero-tol", cfg.zero_tol, "Threshold below which entries count as zero")
        ->check(CLI::PositiveNumber);
    sub->add_option("--verdict-tol", cfg.verdict_tol, "Entrywise tolerance for privacy verdicts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--power,-N", cfg.power, "Tensor power N")->check(CLI::Range(1, 64));
    sub->add_option("--seed", cfg.seed, "Seed for randomised tests");
    sub->add_option("--trials", cfg.trials, "Separating-vector trials")->check(CLI::Range(1, 1000));
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "Also write the JSON document to this path");
  };

  auto* analyze = app.add_subcommand("analyze", "Privacy report for a correlation matrix");
  analyze->add_option("C", cfg.inputs, "Matrix or Kraus-diagonal JSON file")->required()->expected(1);
  add_common(analyze);
  auto* construct = app.add_subcommand("construct", "Build a certified private algebra for Φ^{⊗N}");
  construct->add_option("C", cfg.inputs, "Matrix or Kraus-diagonal JSON file")->required()->expected(1);
  add_common(construct);
  auto* verify = app.add_subcommand("verify", "Check whether Φ privatises a given span");
  verify->add_option("files", cfg.inputs, "C file followed by algebra file")->required()->expected(2);
  add_common(verify);
  auto* graph = app.add_subcommand("graph", "Emit the graph and unitary graph of C");
  graph->add_option("C", cfg.inputs, "Matrix or Kraus-diagonal JSON file")->required()->expected(1);
  add_common(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  if (analyze->parsed()) cfg.command = Command::kAnalyze;
  if (construct->parsed()) cfg.command = Command::kConstruct;
  if (verify->parsed()) cfg.command = Command::kVerify;
  if (graph->parsed()) cfg.command = Command::kGraph;
  cfg.format = format == "json" ? Format::kJson : Format::kText;
  if (!out_path.empty()) cfg.out = out_path;
  return run(cfg, std::cout, std::cerr);
}

}  // namespace schurpriv::cli
