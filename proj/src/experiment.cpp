// Copyright 2026 The coset-qrc Authors
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

#include "coset_qrc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "coset_qrc/parallel.hpp"
#include "coset_qrc/rng.hpp"
#include "coset_qrc/version.hpp"

namespace coset_qrc {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
T get_field(const json& j, const std::string& key, const T& fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(key, "unexpected value type");
  }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& context) {
  for (const auto& item : j.items()) {
    if (known.find(item.key()) == known.end()) {
      throw ConfigError(context.empty() ? item.key() : context + "." + item.key(),
                        "unknown configuration key");
    }
  }
}

MapSpec parse_map(const json& j) {
  const std::string kind = get_field<std::string>(j, "map", "logistic");
  json params = j.contains("map_params") ? j.at("map_params") : json::object();
  if (!params.is_object()) {
    throw ConfigError("map_params", "expected an object");
  }
  if (kind == "logistic") {
    reject_unknown_keys(params, {"r", "x0"}, "map_params");
    return MapSpec::logistic(get_field<double>(params, "r", 3.9),
                             get_field<double>(params, "x0", 0.5));
  }
  if (kind == "henon") {
    reject_unknown_keys(params, {"a", "b", "x0", "x1"}, "map_params");
    return MapSpec::henon(get_field<double>(params, "a", 1.4), get_field<double>(params, "b", 0.3),
                          get_field<double>(params, "x0", 0.0),
                          get_field<double>(params, "x1", 0.0));
  }
  throw ConfigError("map", "must be \"logistic\" or \"henon\"");
}

json map_to_json(const MapSpec& map) {
  json params;
  if (map.kind == MapKind::kLogistic) {
    params["r"] = map.r;
    params["x0"] = map.init[0];
  } else {
    params["a"] = map.a;
    params["b"] = map.b;
    params["x0"] = map.init[0];
    params["x1"] = map.init[1];
  }
  return params;
}

std::string map_name(const MapSpec& map) {
  return map.kind == MapKind::kLogistic ? "logistic" : "henon";
}

std::vector<double> true_continuation(const MapSpec& map, int training_length, int horizon) {
  const std::vector<double> full = generate_trajectory(map, training_length + horizon);
  return std::vector<double>(full.begin() + training_length, full.end());
}

EsnConfig build_esn_config(const ExperimentConfig& config) {
  EsnConfig esn;
  esn.neurons =
      config.num_reservoirs * ((1 << static_cast<unsigned>(config.k_stabilizers)) - 1);
  esn.spectral_radius = config.esn_spectral_radius;
  esn.input_scale = config.esn_input_scale;
  esn.leak = config.esn_leak;
  esn.seed = derive_seed(config.master_seed, "classical", 0);
  return esn;
}

void write_lines(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& input) {
  const json& j = input.contains("config") ? input.at("config") : input;
  if (!j.is_object()) {
    throw ConfigError("config", "expected an object");
  }
  static const std::set<std::string> kKnown = {
      "map",           "map_params",       "n_qubits",        "stabilizer_preset",
      "custom_generators", "k_stabilizers", "num_reservoirs", "timeplex",
      "encoding",      "encoding_betas",   "input_scale",     "training_lengths",
      "horizon",       "shots",            "ridge_lambda",    "correction_enabled",
      "baseline",      "esn_spectral_radius", "esn_input_scale", "esn_leak",
      "master_seed",   "output_dir"};
  reject_unknown_keys(j, kKnown, "");
  ExperimentConfig config;
  config.map = parse_map(j);
  config.n_qubits = get_field<int>(j, "n_qubits", config.n_qubits);
  config.stabilizer_preset =
      get_field<std::string>(j, "stabilizer_preset", config.stabilizer_preset);
  config.custom_generators =
      get_field<std::vector<std::string>>(j, "custom_generators", config.custom_generators);
  config.k_stabilizers = get_field<int>(j, "k_stabilizers", config.k_stabilizers);
  config.num_reservoirs = get_field<int>(j, "num_reservoirs", config.num_reservoirs);
  config.timeplex_depth = get_field<int>(j, "timeplex", config.timeplex_depth);
  config.encoding = get_field<std::string>(j, "encoding", config.encoding);
  config.encoding_betas =
      get_field<std::vector<double>>(j, "encoding_betas", config.encoding_betas);
  config.input_scale = get_field<double>(j, "input_scale", config.input_scale);
  config.training_lengths =
      get_field<std::vector<int>>(j, "training_lengths", config.training_lengths);
  config.horizon = get_field<int>(j, "horizon", config.horizon);
  config.shots = get_field<int>(j, "shots", config.shots);
  config.ridge_lambda = get_field<double>(j, "ridge_lambda", config.ridge_lambda);
  config.correction_enabled = get_field<bool>(j, "correction_enabled", config.correction_enabled);
  config.baseline = get_field<std::string>(j, "baseline", config.baseline);
  config.esn_spectral_radius =
      get_field<double>(j, "esn_spectral_radius", config.esn_spectral_radius);
  config.esn_input_scale = get_field<double>(j, "esn_input_scale", config.esn_input_scale);
  config.esn_leak = get_field<double>(j, "esn_leak", config.esn_leak);
  config.master_seed = get_field<std::uint64_t>(j, "master_seed", config.master_seed);
  config.output_dir = get_field<std::string>(j, "output_dir", config.output_dir);
  return config;
}

json ExperimentConfig::to_json() const {
  json j;
  j["map"] = map_name(map);
  j["map_params"] = map_to_json(map);
  j["n_qubits"] = n_qubits;
  j["stabilizer_preset"] = stabilizer_preset;
  if (!custom_generators.empty()) j["custom_generators"] = custom_generators;
  j["k_stabilizers"] = k_stabilizers;
  j["num_reservoirs"] = num_reservoirs;
  j["timeplex"] = timeplex_depth;
  j["encoding"] = encoding;
  if (encoding == "custom") j["encoding_betas"] = encoding_betas;
  j["input_scale"] = input_scale;
  j["training_lengths"] = training_lengths;
  j["horizon"] = horizon;
  j["shots"] = shots;
  j["ridge_lambda"] = ridge_lambda;
  j["correction_enabled"] = correction_enabled;
  j["baseline"] = baseline;
  j["esn_spectral_radius"] = esn_spectral_radius;
  j["esn_input_scale"] = esn_input_scale;
  j["esn_leak"] = esn_leak;
  j["master_seed"] = master_seed;
  j["output_dir"] = output_dir;
  return j;
}

std::vector<std::string> ExperimentConfig::quantum_methods() const {
  if (stabilizer_preset == "both") return {"single_z", "chain_zz"};
  return {stabilizer_preset};
}

std::vector<std::string> ExperimentConfig::methods() const {
  std::vector<std::string> out = quantum_methods();
  if (baseline == "esn") out.push_back("classical");
  return out;
}

void ExperimentConfig::validate() const {
  if (n_qubits < 1 || n_qubits > kDenseQubitLimit) {
    throw ConfigError("n_qubits", "must lie in [1, " + std::to_string(kDenseQubitLimit) + "]");
  }
  if (k_stabilizers < 1) {
    throw ConfigError("k_stabilizers", "must be positive");
  }
  const bool known_preset = stabilizer_preset == "both" || stabilizer_preset == "single_z" ||
                            stabilizer_preset == "chain_zz" || stabilizer_preset == "custom";
  if (!known_preset) {
    throw ConfigError("stabilizer_preset",
                      "must be \"both\", \"single_z\", \"chain_zz\" or \"custom\"");
  }
  if (stabilizer_preset == "single_z" || stabilizer_preset == "both") {
    if (k_stabilizers > n_qubits) {
      throw ConfigError("k_stabilizers", "single_z needs at least k qubits");
    }
  }
  if (stabilizer_preset == "chain_zz" || stabilizer_preset == "both") {
    if (k_stabilizers > n_qubits - 1) {
      throw ConfigError("k_stabilizers", "chain_zz needs at least k + 1 qubits");
    }
  }
  if (stabilizer_preset == "custom") {
    if (custom_generators.empty()) {
      throw ConfigError("custom_generators", "required for the custom preset");
    }
    if (custom_generators.size() != static_cast<std::size_t>(k_stabilizers)) {
      throw ConfigError("k_stabilizers", "must equal the number of custom generators");
    }
  }
  if (num_reservoirs < 1) {
    throw ConfigError("num_reservoirs", "must be positive");
  }
  if (timeplex_depth < 1) {
    throw ConfigError("timeplex", "must be positive");
  }
  if (encoding != "uniform" && encoding != "exponential" && encoding != "custom") {
    throw ConfigError("encoding", "must be \"uniform\", \"exponential\" or \"custom\"");
  }
  if (encoding == "custom" &&
      encoding_betas.size() != static_cast<std::size_t>(k_stabilizers)) {
    throw ConfigError("encoding_betas", "one beta per stabilizer generator required");
  }
  if (!std::isfinite(input_scale)) {
    throw ConfigError("input_scale", "must be finite");
  }
  if (training_lengths.empty()) {
    throw ConfigError("training_lengths", "at least one training length required");
  }
  for (int t : training_lengths) {
    if (t <= timeplex_depth + map.memory()) {
      throw ConfigError("training_lengths",
                        "every length must exceed timeplex + map memory = " +
                            std::to_string(timeplex_depth + map.memory()));
    }
  }
  if (horizon < map.memory() + 1) {
    throw ConfigError("horizon", "must be at least map memory + 1 to score predictions");
  }
  if (shots < 0) {
    throw ConfigError("shots", "must be nonnegative (0 = exact mode)");
  }
  if (!(ridge_lambda >= 0.0) || !std::isfinite(ridge_lambda)) {
    throw ConfigError("ridge_lambda", "must be a nonnegative finite number");
  }
  if (baseline != "esn" && baseline != "none") {
    throw ConfigError("baseline", "must be \"esn\" or \"none\"");
  }
  if (esn_spectral_radius < 0.0 || esn_spectral_radius >= 1.5) {
    throw ConfigError("esn_spectral_radius", "must lie in [0, 1.5)");
  }
  if (!(esn_leak > 0.0) || esn_leak > 1.0) {
    throw ConfigError("esn_leak", "must lie in (0, 1]");
  }
  if (!std::isfinite(esn_input_scale)) {
    throw ConfigError("esn_input_scale", "must be finite");
  }
  if (output_dir.empty()) {
    throw ConfigError("output_dir", "must not be empty");
  }
  for (const std::string& method : quantum_methods()) {
    try {
      const StabilizerSpec spec = build_spec(*this, method);
      build_encoding(*this);
      init_state(spec);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(method == "custom" ? "custom_generators" : "stabilizer_preset", e.what());
    }
  }
}

StabilizerSpec build_spec(const ExperimentConfig& config, const std::string& method) {
  if (method == "single_z") {
    return StabilizerSpec::single_z(config.n_qubits, config.k_stabilizers);
  }
  if (method == "chain_zz") {
    return StabilizerSpec::chain_zz(config.n_qubits, config.k_stabilizers);
  }
  if (method == "custom") {
    std::vector<PauliString> gens;
    gens.reserve(config.custom_generators.size());
    for (const std::string& text : config.custom_generators) {
      PauliString p = PauliString::parse(text);
      if (p.num_qubits() != config.n_qubits) {
        throw std::invalid_argument("generator '" + text + "' does not act on " +
                                    std::to_string(config.n_qubits) + " qubits");
      }
      gens.push_back(std::move(p));
    }
    return StabilizerSpec(std::move(gens));
  }
  throw std::invalid_argument("unknown stabilizer method: " + method);
}

EncodingConfig build_encoding(const ExperimentConfig& config) {
  if (config.encoding == "uniform") {
    return EncodingConfig::uniform(config.k_stabilizers, config.input_scale);
  }
  if (config.encoding == "exponential") {
    return EncodingConfig::exponential(config.k_stabilizers, config.input_scale);
  }
  return EncodingConfig::custom(config.encoding_betas, config.input_scale);
}

CellResult run_quantum_cell(const ExperimentConfig& config, const std::string& method,
                            int training_length) {
  const StabilizerSpec spec = build_spec(config, method);
  const EncodingConfig enc = build_encoding(config);
  const std::vector<double> series = generate_trajectory(config.map, training_length);

  std::vector<ReservoirInstance> ensemble;
  ensemble.reserve(static_cast<std::size_t>(config.num_reservoirs));
  const std::vector<std::pair<int, int>> edges = all_to_all_edges(config.n_qubits);
  for (int i = 0; i < config.num_reservoirs; ++i) {
    std::mt19937_64 rng(derive_seed(config.master_seed, "quantum", static_cast<std::uint64_t>(i)));
    IsingHamiltonian h = sample_ising(config.n_qubits, edges, rng);
    ShotOptions shot_options;
    if (config.shots > 0) {
      shot_options.enabled = true;
      shot_options.shots = config.shots;
      shot_options.seed = derive_seed(config.master_seed, "shots", static_cast<std::uint64_t>(i));
    }
    ensemble.emplace_back(spec, std::move(h), enc, config.correction_enabled, shot_options);
  }

  const auto records = drive_sequence(ensemble, series, 1);
  const FeatureMatrix fm = build_features(records, config.timeplex_depth, true);
  const Eigen::Index train_rows = static_cast<Eigen::Index>(training_length) - config.timeplex_depth;
  const Eigen::MatrixXd features = fm.data.topRows(train_rows);
  Eigen::VectorXd targets(train_rows);
  for (Eigen::Index i = 0; i < train_rows; ++i) {
    targets(i) = series[static_cast<std::size_t>(config.timeplex_depth + i)];
  }
  const ReadoutWeights weights = fit(features, targets, config.ridge_lambda);

  CellResult result;
  result.training_length = training_length;
  result.method = method;
  result.train_r2 = score_r2(features * weights.v, targets);

  std::vector<Eigen::VectorXd> steps = concat_step_vectors(records);
  std::vector<Eigen::VectorXd> window(steps.end() - config.timeplex_depth, steps.end());
  const PredictionResult prediction =
      predict_closed_loop(ensemble, std::move(window), weights, true, config.horizon);
  result.predicted = prediction.series;
  result.diverged = prediction.diverged;
  result.e_f = prediction.diverged ? std::numeric_limits<double>::infinity()
                                   : map_error(config.map, prediction.series);
  result.true_continuation = true_continuation(config.map, training_length, config.horizon);
  return result;
}

CellResult run_classical_cell(const ExperimentConfig& config, int training_length) {
  const std::vector<double> series = generate_trajectory(config.map, training_length);
  const EsnRunResult esn = esn_run_and_fit(build_esn_config(config), config.map, series,
                                           config.timeplex_depth, config.ridge_lambda,
                                           config.horizon);
  CellResult result;
  result.training_length = training_length;
  result.method = "classical";
  result.e_f = esn.error;
  result.train_r2 = esn.train_r2;
  result.diverged = esn.prediction.diverged;
  result.predicted = esn.prediction.series;
  result.true_continuation = true_continuation(config.map, training_length, config.horizon);
  return result;
}

std::vector<CellResult> run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::filesystem::path out_dir(config.output_dir);
  std::filesystem::create_directories(out_dir);

  const std::vector<std::string> methods = config.methods();
  struct Cell {
    int training_length;
    std::string method;
  };
  std::vector<Cell> cells;
  for (int t : config.training_lengths) {
    for (const std::string& m : methods) {
      cells.push_back({t, m});
    }
  }

  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), thread_budget(), [&](std::size_t i) {
    const Cell& cell = cells[i];
    results[i] = cell.method == "classical"
                     ? run_classical_cell(config, cell.training_length)
                     : run_quantum_cell(config, cell.method, cell.training_length);
    const std::string stem = "train_" + std::to_string(cell.training_length) + "_" + cell.method;
    write_predictions_csv(out_dir / (stem + "_predictions.csv"), cell.training_length,
                          results[i].true_continuation, results[i].predicted);
    const int memory = config.map.memory();
    if (results[i].predicted.size() >= static_cast<std::size_t>(memory) + 1) {
      write_poincare_csv(out_dir / (stem + "_poincare.csv"), results[i].predicted, memory);
    } else {
      write_lines(out_dir / (stem + "_poincare.csv"),
                  memory == 1 ? "x_n,x_np1\n" : "x_n,x_nm1,x_np1\n");
    }
  });

  write_errors_csv(out_dir / "errors.csv", results);

  json manifest;
  manifest["version"] = kVersion;
  manifest["config"] = config.to_json();
  json seeds;
  std::vector<std::uint64_t> quantum_seeds;
  for (int i = 0; i < config.num_reservoirs; ++i) {
    quantum_seeds.push_back(derive_seed(config.master_seed, "quantum", static_cast<std::uint64_t>(i)));
  }
  seeds["quantum"] = quantum_seeds;
  if (config.shots > 0) {
    std::vector<std::uint64_t> shot_seeds;
    for (int i = 0; i < config.num_reservoirs; ++i) {
      shot_seeds.push_back(derive_seed(config.master_seed, "shots", static_cast<std::uint64_t>(i)));
    }
    seeds["shots"] = shot_seeds;
  }
  if (config.baseline == "esn") {
    seeds["classical"] = derive_seed(config.master_seed, "classical", 0);
  }
  manifest["seeds"] = seeds;
  json resolved;
  resolved["methods"] = methods;
  resolved["betas"] = build_encoding(config).betas;
  json generators = json::object();
  json destabilizers = json::object();
  for (const std::string& method : config.quantum_methods()) {
    const StabilizerSpec spec = build_spec(config, method);
    std::vector<std::string> gen_text, destab_text;
    for (const PauliString& g : spec.generators()) gen_text.push_back(g.to_string());
    for (const PauliString& f : spec.destabilizers()) destab_text.push_back(f.to_string());
    generators[method] = gen_text;
    destabilizers[method] = destab_text;
  }
  resolved["generators"] = generators;
  resolved["destabilizers"] = destabilizers;
  if (config.baseline == "esn") {
    resolved["esn_neurons"] = build_esn_config(config).neurons;
    resolved["baseline_timeplex"] = config.timeplex_depth;
  }
  manifest["resolved"] = resolved;
  write_lines(out_dir / "manifest.json", manifest.dump(2) + "\n");

  return results;
}

void write_predictions_csv(const std::filesystem::path& path, int start_t,
                           const std::vector<double>& truth,
                           const std::vector<double>& predicted) {
  std::string content = "t,x_true,x_hat\n";
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    content += std::to_string(start_t + static_cast<int>(i));
    content += ',';
    content += i < truth.size() ? format_double(truth[i]) : "";
    content += ',';
    content += format_double(predicted[i]);
    content += '\n';
  }
  write_lines(path, content);
}

void write_poincare_csv(const std::filesystem::path& path, const std::vector<double>& series,
                        int memory) {
  if (memory < 1 || memory > 2) {
    throw std::invalid_argument("write_poincare_csv: memory must be 1 or 2");
  }
  if (series.size() < static_cast<std::size_t>(memory) + 1) {
    throw std::invalid_argument("write_poincare_csv: series too short");
  }
  std::string content = memory == 1 ? "x_n,x_np1\n" : "x_n,x_nm1,x_np1\n";
  for (std::size_t n = static_cast<std::size_t>(memory) - 1; n + 1 < series.size(); ++n) {
    content += format_double(series[n]);
    if (memory == 2) {
      content += ',';
      content += format_double(series[n - 1]);
    }
    content += ',';
    content += format_double(series[n + 1]);
    content += '\n';
  }
  write_lines(path, content);
}

void write_errors_csv(const std::filesystem::path& path, const std::vector<CellResult>& results) {
  std::string content = "training_length,method,e_f,train_r2,below_one\n";
  for (const CellResult& r : results) {
    content += std::to_string(r.training_length);
    content += ',';
    content += r.method;
    content += ',';
    content += format_double(r.e_f);
    content += ',';
    content += format_double(r.train_r2);
    content += ',';
    content += r.e_f < 1.0 ? "true" : "false";
    content += '\n';
  }
  write_lines(path, content);
}

std::string render_table(const std::filesystem::path& results_dir) {
  const std::filesystem::path csv = results_dir / "errors.csv";
  std::ifstream in(csv);
  if (!in) {
    throw std::runtime_error("no errors.csv under " + results_dir.string());
  }
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) {
    throw std::runtime_error("empty errors.csv under " + results_dir.string());
  }
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) {
        out.append(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace coset_qrc
