// Copyright 2026 The mmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MMD_CLI_CLI_HPP_
#define MMD_CLI_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmd/mmd.hpp"

namespace mmd::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitDesignError = 2,
  kExitVerificationNegative = 3,
};

// How rationals are written into JSON artifacts. Simulation itself always
// runs in floating point; this only affects export.
enum class NumericMode { kRational, kFloat };

NumericMode ParseNumericMode(std::string_view name);

struct ExperimentConfig {
  std::optional<QStrategy> x_star;
  std::optional<QStrategy> y_star;
  Rational v{1};
  std::optional<Rational> z;
  std::optional<Rational> v1;
  std::optional<Rational> guard;
  std::optional<Rational> gap;
  bool run_oracle = true;
  // A given matrix skips the designer.
  std::optional<QMatrix> matrix;

  LearnerSpec learner;
  // "default" selects DefaultSchedule once the row dimension is known.
  bool default_schedule = false;
  PolicySpec policy;
  std::size_t horizon = kDefaultHorizon;
  std::size_t confirm_rounds = kDefaultConfirmRounds;
  bool early_stop = true;
  std::uint64_t seed = 0;

  std::filesystem::path out = ".";
  NumericMode mode = NumericMode::kRational;
};

// Parses the JSON config text. Numbers and strings are both accepted for
// rational fields; strings go through ParseRational, so "1/3" is exact.
// Throws Error(kParseError) or the strategy/matrix validation errors.
ExperimentConfig ParseConfig(std::string_view json_text);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Trajectory CSV header for an n x m game.
std::string CsvHeader(std::size_t n, std::size_t m);
std::string CsvRow(const RoundRecord& record);

// Subcommands. Each writes its artifacts under config.out and returns an
// exit code; diagnostics go to `err`.
int CmdDesign(const ExperimentConfig& config, std::ostream& err);
int CmdVerify(const ExperimentConfig& config, std::ostream& err);
int CmdSimulate(const ExperimentConfig& config, bool trust, std::size_t sweep,
                std::ostream& err);

// Full command line, argv[0] excluded.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmd::cli

#endif  // MMD_CLI_CLI_HPP_
