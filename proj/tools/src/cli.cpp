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


#include "mmd/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <atomic>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace mmd::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

// Error kinds that mean "the designer refused", as opposed to bad input.
bool IsDesignError(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSupportMismatch:
    case ErrorKind::kParameterOutOfRange:
    case ErrorKind::kDegenerateSupport:
    case ErrorKind::kSupportNotSmaller:
    case ErrorKind::kNotSingleton:
    case ErrorKind::kSupportTooSmall:
    case ErrorKind::kCertificationFailed:
      return true;
    default:
      return false;
  }
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Rational RationalField(const Json& node, std::string_view what) {
  if (node.is_string()) return ParseRational(node.get<std::string>());
  if (node.is_number_integer()) return Rational(node.dump());
  if (node.is_number_float()) return FromDoubleDecimal(node.get<double>());
  Fail(ErrorKind::kParseError, std::string(what) + " must be a number or a rational string");
}

std::vector<Rational> RationalVector(const Json& node, std::string_view what) {
  if (!node.is_array()) Fail(ErrorKind::kParseError, std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const Json& item : node) out.push_back(RationalField(item, what));
  return out;
}

std::size_t CountField(const Json& node, std::string_view what) {
  if (!node.is_number_integer() || node.get<long long>() < 0) {
    Fail(ErrorKind::kParseError, std::string(what) + " must be a non-negative integer");
  }
  return node.get<std::size_t>();
}

double RealField(const Json& node, std::string_view what) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) return ToDouble(ParseRational(node.get<std::string>()));
  Fail(ErrorKind::kParseError, std::string(what) + " must be a number");
}

void ParseLearner(const Json& node, ExperimentConfig& config) {
  if (node.is_string()) {
    config.learner.kind = ParseLearnerKind(Lower(node.get<std::string>()));
    return;
  }
  if (!node.is_object()) Fail(ErrorKind::kParseError, "learner must be a string or an object");
  if (node.contains("kind")) {
    config.learner.kind = ParseLearnerKind(Lower(node.at("kind").get<std::string>()));
  }
  const double eta = node.contains("eta") ? RealField(node.at("eta"), "learner.eta") : 1.0;
  const std::string schedule =
      node.contains("schedule") ? Lower(node.at("schedule").get<std::string>()) : "constant";
  if (schedule == "constant") {
    config.learner.schedule = RateSchedule::Constant(eta);
  } else if (schedule == "inverse-sqrt") {
    config.learner.schedule = RateSchedule::InverseSqrt(eta);
  } else if (schedule == "default") {
    config.default_schedule = true;
  } else {
    Fail(ErrorKind::kParseError, "unknown schedule '" + schedule + "'");
  }
}

Json RationalJson(const Rational& q, NumericMode mode) {
  if (mode == NumericMode::kFloat) return ToDouble(q);
  return ToString(q);
}

Json RationalArray(const std::vector<Rational>& values, NumericMode mode) {
  Json out = Json::array();
  for (const Rational& q : values) out.push_back(RationalJson(q, mode));
  return out;
}

Json MatrixJson(const QMatrix& a, NumericMode mode) {
  Json out = Json::array();
  for (const auto& row : a.ToRows()) out.push_back(RationalArray(row, mode));
  return out;
}

Json StrategyJson(const QStrategy& s, NumericMode mode) {
  return RationalArray(std::vector<Rational>(s.weights().begin(), s.weights().end()), mode);
}

template <typename T>
Json OptionalJson(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json CertificateJson(const MinimaxCertificate& cert, NumericMode mode) {
  Json out;
  out["certified"] = cert.certified();
  out["pair_ok"] = cert.pair_ok;
  out["value"] = RationalJson(cert.value.v, mode);
  out["lemma_ok"] = cert.lemma_ok;
  out["lemma_exact_pattern"] = cert.lemma_exact_pattern;
  out["lemma_sound"] = cert.lemma_sound;
  out["kkt_unique"] = cert.kkt_unique;
  out["oracle_agrees"] = OptionalJson(cert.oracle_agrees);
  out["witness"] = cert.witness ? RationalArray(*cert.witness, mode) : Json(nullptr);
  return out;
}

Json ParametersJson(const DesignParameters& p, NumericMode mode) {
  Json out;
  auto put = [&](const char* key, const std::optional<Rational>& q) {
    if (q) out[key] = RationalJson(*q, mode);
  };
  put("z", p.z);
  put("v1", p.v1);
  put("y_bar", p.y_bar);
  put("gap", p.gap);
  put("guard", p.guard);
  put("guard_shift", p.guard_shift);
  if (!p.alpha.empty()) out["alpha"] = RationalArray(p.alpha, mode);
  if (!p.a.empty()) out["a"] = RationalArray(p.a, mode);
  if (!p.beta.empty()) out["beta"] = RationalArray(p.beta, mode);
  return out.is_null() ? Json::object() : out;
}

Json DesignJson(const DesignedGame& game, NumericMode mode) {
  Json out;
  out["construction"] = std::string(ConstructionName(game.construction));
  out["value"] = RationalJson(game.value.v, mode);
  out["matrix"] = MatrixJson(game.matrix, mode);
  out["x_star"] = StrategyJson(game.x_star, mode);
  out["y_star"] = StrategyJson(game.y_star, mode);
  out["row_perm"] = game.row_perm;
  out["col_perm"] = game.col_perm;
  out["parameters"] = ParametersJson(game.parameters, mode);
  out["certificate"] = game.certificate ? CertificateJson(*game.certificate, mode) : Json(nullptr);
  return out;
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) Fail(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  file << text;
  if (!file) Fail(ErrorKind::kInvalidArgument, "failed writing " + path.string());
}

void WriteJson(const fs::path& path, const Json& doc) { WriteText(path, doc.dump(2) + "\n"); }

int ReportError(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return IsDesignError(e.kind()) ? kExitDesignError : kExitInputError;
}

const QStrategy& Required(const std::optional<QStrategy>& s, const char* name) {
  if (!s) Fail(ErrorKind::kParseError, std::string("config is missing ") + name);
  return *s;
}

DesignOptions OptionsFrom(const ExperimentConfig& config, bool certify) {
  DesignOptions opts;
  opts.z = config.z;
  opts.v1 = config.v1;
  opts.gap = config.gap;
  opts.guard = config.guard;
  opts.run_oracle = config.run_oracle;
  opts.certify = certify;
  return opts;
}

// Wraps a user-supplied matrix as a game; the value is x*^T A y*.
DesignedGame GameFromMatrix(const ExperimentConfig& config, bool certify) {
  const QStrategy& x = Required(config.x_star, "x_star");
  const QStrategy& y = Required(config.y_star, "y_star");
  const QMatrix& a = *config.matrix;
  if (a.rows() != x.dimension() || a.cols() != y.dimension()) {
    Fail(ErrorKind::kDimensionMismatch, "matrix shape does not match x_star and y_star");
  }
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  DesignedGame game{a, x, y, GameValue{ExpectedPayoff(x, a, y)}, rows, cols,
                    Construction::kEqualSupport, {}, std::nullopt};
  if (certify) game.certificate = Certify(a, x, y, config.run_oracle);
  return game;
}

QStrategy RandomStrategy(std::mt19937_64& rng, std::size_t dim, std::size_t support) {
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<Rational> w(dim, Rational(0));
  Rational total(0);
  for (std::size_t i = 0; i < support; ++i) {
    w[idx[i]] = weight(rng);
    total += w[idx[i]];
  }
  for (Rational& q : w) q /= total;
  return QStrategy::Make(std::move(w));
}

struct MatchArtifacts {
  Json summary;
  std::size_t rows = 0;
};

// Plays one match, streaming the CSV to `dir` and writing the summary.
MatchArtifacts PlayAndWrite(const DesignedGame& game, const ExperimentConfig& config, bool trust,
                            const fs::path& dir) {
  LearnerSpec learner = config.learner;
  if (config.default_schedule) {
    learner.schedule = DefaultSchedule(learner.kind, game.x_star.dimension());
  }
  MatchOptions options;
  options.horizon = config.horizon;
  options.seed = config.seed;
  options.confirm_rounds = config.confirm_rounds;
  options.early_stop = config.early_stop;
  options.trust = trust;
  options.keep_rounds = false;

  fs::create_directories(dir);
  const fs::path csv_path = dir / "trajectory.csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) Fail(ErrorKind::kInvalidArgument, "cannot write " + csv_path.string());
  csv << CsvHeader(game.matrix.rows(), game.matrix.cols()) << "\n";
  MatchArtifacts result;
  const Trajectory traj = RunMatch(game, learner, config.policy, options,
                                   [&](const RoundRecord& r) {
                                     csv << CsvRow(r) << "\n";
                                     ++result.rows;
                                   });
  csv.close();
  if (!csv) Fail(ErrorKind::kInvalidArgument, "failed writing " + csv_path.string());

  const RegretReport regret = ComputeRegret(traj);
  const std::vector<double> target = ToDouble(game.x_star).weights();
  Json& s = result.summary;
  s["learner"] = {{"kind", std::string(LearnerKindName(learner.kind))},
                  {"schedule", learner.schedule.kind == RateSchedule::Kind::kConstant
                                   ? "constant"
                                   : "inverse-sqrt"},
                  {"eta", learner.schedule.eta}};
  s["policy"] = std::string(ColumnPolicyName(config.policy.kind));
  s["epsilon_lock"] = config.policy.epsilon_lock;
  s["horizon"] = config.horizon;
  s["rounds_played"] = traj.length;
  s["seed"] = traj.seed;
  s["value"] = traj.value;
  s["regret"] = {{"row_regret", regret.row_regret},
                 {"col_regret", regret.col_regret},
                 {"horizon", regret.horizon}};
  s["eps_nash_round"] = OptionalJson(DetectEpsNash(traj, config.policy.epsilon_lock));
  s["lock_round"] = OptionalJson(traj.lock_round);
  s["initial_distance"] = L2Distance(*traj.first_x, ToDouble(game.x_star));
  s["final_distance"] = L2Distance(*traj.last_x, ToDouble(game.x_star));
  s["min_distance"] = traj.min_distance;
  s["max_drift_from_first"] = traj.max_drift_from_first;
  s["final_x"] = traj.last_x->weights();
  s["target_x"] = target;
  WriteJson(dir / "summary.json", s);
  return result;
}

}  // namespace

NumericMode ParseNumericMode(std::string_view name) {
  if (name == "rational") return NumericMode::kRational;
  if (name == "float") return NumericMode::kFloat;
  Fail(ErrorKind::kParseError, "mode must be 'rational' or 'float'");
}

ExperimentConfig ParseConfig(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail(ErrorKind::kParseError, "config must be a JSON object");

  ExperimentConfig c;
  try {
    if (doc.contains("x_star")) c.x_star = QStrategy::Make(RationalVector(doc["x_star"], "x_star"));
    if (doc.contains("y_star")) c.y_star = QStrategy::Make(RationalVector(doc["y_star"], "y_star"));
    if (doc.contains("v")) c.v = RationalField(doc["v"], "v");
    auto optional_rational = [&](const char* key, std::optional<Rational>& slot) {
      if (doc.contains(key) && !doc[key].is_null()) slot = RationalField(doc[key], key);
    };
    optional_rational("z", c.z);
    optional_rational("v1", c.v1);
    optional_rational("guard", c.guard);
    optional_rational("gap", c.gap);
    if (doc.contains("run_oracle")) c.run_oracle = doc["run_oracle"].get<bool>();
    if (doc.contains("matrix")) {
      std::vector<std::vector<Rational>> rows;
      if (!doc["matrix"].is_array()) Fail(ErrorKind::kParseError, "matrix must be an array");
      for (const Json& row : doc["matrix"]) rows.push_back(RationalVector(row, "matrix row"));
      c.matrix = QMatrix::FromRows(rows);
    }
    if (doc.contains("learner")) ParseLearner(doc["learner"], c);
    if (doc.contains("policy")) c.policy.kind = ParseColumnPolicy(Lower(doc["policy"].get<std::string>()));
    if (doc.contains("epsilon_lock")) {
      c.policy.epsilon_lock = RealField(doc["epsilon_lock"], "epsilon_lock");
      if (!(c.policy.epsilon_lock > 0.0)) {
        Fail(ErrorKind::kParseError, "epsilon_lock must be positive");
      }
    }
    if (doc.contains("horizon")) c.horizon = CountField(doc["horizon"], "horizon");
    if (doc.contains("confirm_rounds")) {
      c.confirm_rounds = CountField(doc["confirm_rounds"], "confirm_rounds");
    }
    if (doc.contains("early_stop")) c.early_stop = doc["early_stop"].get<bool>();
    if (doc.contains("seed")) c.seed = CountField(doc["seed"], "seed");
    if (doc.contains("out")) c.out = doc["out"].get<std::string>();
    if (doc.contains("mode")) c.mode = ParseNumericMode(doc["mode"].get<std::string>());
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kParseError, std::string("bad config field: ") + e.what());
  }
  return c;
}

ExperimentConfig LoadConfig(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) Fail(ErrorKind::kParseError, "cannot read config " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  return ParseConfig(text.str());
}

std::string CsvHeader(std::size_t n, std::size_t m) {
  std::string out = "t,mode,alpha,f_gap,dist_to_target,payoff";
  for (std::size_t i = 0; i < n; ++i) out += ",x_" + std::to_string(i);
  for (std::size_t j = 0; j < m; ++j) out += ",y_" + std::to_string(j);
  return out;
}

std::string CsvRow(const RoundRecord& r) {
  std::string out = std::to_string(r.t);
  out += ',';
  out += LrcaModeName(r.mode);
  for (double d : {r.alpha, r.f_gap, r.dist_to_target, r.payoff}) {
    out += ',';
    out += FormatDouble(d);
  }
  for (double d : r.x.weights()) {
    out += ',';
    out += FormatDouble(d);
  }
  for (double d : r.y.weights()) {
    out += ',';
    out += FormatDouble(d);
  }
  return out;
}

int CmdDesign(const ExperimentConfig& config, std::ostream& err) {
  const fs::path path = config.out / "design.json";
  try {
    const DesignedGame game = Design(Required(config.x_star, "x_star"),
                                     Required(config.y_star, "y_star"), config.v,
                                     OptionsFrom(config, true));
    WriteJson(path, DesignJson(game, config.mode));
    return kExitOk;
  } catch (const Error& e) {
    const int code = ReportError(e, err);
    if (code == kExitDesignError) {
      try {
        WriteJson(path, Json{{"error", std::string(e.name())}, {"detail", e.what()}});
      } catch (const Error&) {
      }
    }
    return code;
  }
}

int CmdVerify(const ExperimentConfig& config, std::ostream& err) {
  try {
    if (!config.matrix) Fail(ErrorKind::kParseError, "config is missing matrix");
    const QStrategy& x = Required(config.x_star, "x_star");
    const QStrategy& y = Required(config.y_star, "y_star");
    const MinimaxCertificate cert = Certify(*config.matrix, x, y, config.run_oracle);
    Json doc;
    doc["matrix"] = MatrixJson(*config.matrix, config.mode);
    doc["x_star"] = StrategyJson(x, config.mode);
    doc["y_star"] = StrategyJson(y, config.mode);
    doc["certificate"] = CertificateJson(cert, config.mode);
    WriteJson(config.out / "certificate.json", doc);
    return cert.pair_ok && cert.kkt_unique ? kExitOk : kExitVerificationNegative;
  } catch (const Error& e) {
    // Nothing in verify is a design step, so every failure is an input error.
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int CmdSimulate(const ExperimentConfig& config, bool trust, std::size_t sweep,
                std::ostream& err) {
  try {
    if (config.horizon == 0) Fail(ErrorKind::kInvalidArgument, "horizon must be positive");
    const QStrategy& x = Required(config.x_star, "x_star");
    const QStrategy& y = Required(config.y_star, "y_star");

    auto make_game = [&](const ExperimentConfig& c) {
      DesignedGame game = c.matrix ? GameFromMatrix(c, !trust)
                                   : Design(*c.x_star, *c.y_star, c.v, OptionsFrom(c, !trust));
      if (!trust && !game.certificate->certified()) {
        Fail(ErrorKind::kNonCertifiedGame, "game failed re-certification; pass --trust to skip");
      }
      return game;
    };

    if (sweep == 0) {
      PlayAndWrite(make_game(config), config, trust, config.out);
      return kExitOk;
    }

    // Independent matches on random games of the configured shape.
    const std::size_t k = Support(x).size();
    const std::size_t l = Support(y).size();
    std::vector<std::string> messages(sweep);
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(sweep, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<int> codes(sweep, kExitOk);
    auto worker = [&] {
      for (std::size_t i = next++; i < sweep; i = next++) {
        ExperimentConfig c = config;
        c.matrix.reset();
        c.seed = config.seed + i;
        std::mt19937_64 rng(c.seed);
        c.x_star = RandomStrategy(rng, x.dimension(), k);
        c.y_star = RandomStrategy(rng, y.dimension(), l);
        const fs::path dir = config.out / ("match_" + std::to_string(i));
        try {
          const DesignedGame game = make_game(c);
          fs::create_directories(dir);
          WriteJson(dir / "game.json", DesignJson(game, c.mode));
          PlayAndWrite(game, c, trust, dir);
        } catch (const Error& e) {
          messages[i] = "match " + std::to_string(i) + ": " + e.what();
          codes[i] = e.kind() == ErrorKind::kNonCertifiedGame ? kExitVerificationNegative
                     : IsDesignError(e.kind())                 ? kExitDesignError
                                                               : kExitInputError;
        }
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    pool.clear();

    int code = kExitOk;
    for (std::size_t i = 0; i < sweep; ++i) {
      if (!messages[i].empty()) err << "error: " << messages[i] << "\n";
      code = std::max(code, codes[i]);
    }
    return code;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNonCertifiedGame) {
      err << "error: " << e.what() << "\n";
      return kExitVerificationNegative;
    }
    return ReportError(e, err);
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design zero-sum games with a prescribed unique minimax strategy", "mmd"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string mode;
  bool trust = false;
  std::size_t sweep = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON experiment config")->required();
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--mode", mode, "rational or float export")
        ->check(CLI::IsMember({"rational", "float"}));
  };
  CLI::App* design = app.add_subcommand("design", "build and certify a game for a target");
  CLI::App* verify = app.add_subcommand("verify", "certify a matrix and a strategy pair");
  CLI::App* simulate = app.add_subcommand("simulate", "play a learner against a column policy");
  common(design);
  common(verify);
  common(simulate);
  for (CLI::App* sub : {design, verify, simulate}) {
    sub->add_flag("--trust", trust, "skip re-certification before simulating");
    sub->add_option("--sweep", sweep, "run this many random games concurrently");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  ExperimentConfig config;
  try {
    config = LoadConfig(config_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!out_dir.empty()) config.out = out_dir;
  if (!mode.empty()) config.mode = ParseNumericMode(mode);

  if (design->parsed()) return CmdDesign(config, err);
  if (verify->parsed()) return CmdVerify(config, err);
  return CmdSimulate(config, trust, sweep, err);
}

}  // namespace mmd::cli
