// Copyright 2026 The holdem-loop Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "holdem/bench.hpp"
#include "holdem/errors.hpp"
#include "holdem/perception_eval.hpp"
#include "holdem/reference_set.hpp"
#include "holdem/service.hpp"
#include "holdem/session.hpp"

namespace fs = std::filesystem;
using namespace holdem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_document, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(Errc::malformed_document, "cannot write " + path.string());
  out << text << '\n';
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

// A JSON array or one document per line.
std::vector<TrialOutcome> read_outcome_log(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<TrialOutcome> log;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& j : parse_json(text)) log.push_back(decode_trial_outcome(j));
    return log;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    log.push_back(decode_trial_outcome(parse_json(line)));
  }
  return log;
}

void print_report(const OutcomeReport& r) {
  std::cout << "N=" << r.n << " SP=" << r.counts[0] << " DC=" << r.counts[1] << " TF=" << r.counts[2]
            << " DF=" << r.counts[3] << " SPSR/TCR=" << format_rate_pair(r.spsr, r.tcr) << '\n';
  std::cout << dump(encode(r)) << '\n';
}

int cmd_play(const std::string& config_path, std::string listen, const std::string& out, int hands) {
  SessionConfig cfg = config_path.empty() ? SessionConfig{} : decode_session_config(parse_json(slurp(config_path)));
  listen = env_or("HOLDEM_LISTEN", listen);
  const std::string log_dir = env_or("HOLDEM_LOG_DIR", "");
  if (!listen.empty()) {
    ServiceOptions opts;
    opts.default_config = cfg;
    if (!log_dir.empty()) opts.log_dir = log_dir;
    Service service(opts);
    ServiceServer server(service);
    const auto port = server.start(parse_endpoint(listen));
    std::cout << "listening on port " << port << std::endl;
    server.wait();
    return 0;
  }
  const auto records = run_match(cfg, hands);
  Json all = Json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::cout << "hand " << i + 1 << ": cause=" << to_string(r.cause)
              << " result=" << (r.result ? std::string(to_string(*r.result)) : "none") << " " << dump(encode(r.counters))
              << '\n';
    all.push_back(encode(r));
  }
  const Json doc = hands == 1 ? all[0] : all;
  if (!out.empty()) write_file(out, dump(doc));
  if (!log_dir.empty()) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      write_file(fs::path(log_dir) / ("hand_" + std::to_string(i + 1) + ".json"), dump(all[i]));
    }
  }
  return 0;
}

int cmd_eval(const std::vector<std::string>& dirs, bool strict, const std::string& report_path) {
  std::vector<RunReport> runs;
  for (const auto& d : dirs) {
    std::vector<ColumnResult> results;
    for (const auto& p : load_problem_set(d, strict)) results.push_back(score_problem(p));
    runs.push_back(aggregate_run(results));
  }
  const RunReport r = runs.size() == 1 ? runs.front() : aggregate_runs(runs);
  std::cout << render_table({{fs::path(dirs.front()).filename().string(), r}});
  if (!report_path.empty()) write_file(report_path, dump(encode(r)));
  return 0;
}

int cmd_replay(const std::string& path) {
  const LabelFile file = read_label_file(path);
  const CounterReport r = replay_labels(file.labels);
  std::cout << dump(encode(r)) << '\n';
  int mismatches = 0;
  for (const auto& [key, want] : file.expect) {
    const std::string got = counter_field(r, key);
    const bool ok = got == want;
    mismatches += ok ? 0 : 1;
    std::cout << (ok ? "match    " : "MISMATCH ") << key << " replay=" << got << " reference=" << want << '\n';
  }
  std::cout << mismatches << " mismatch(es)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heads-up hold'em robot-loop simulator"};
  app.require_subcommand(1);

  std::string config, listen, out;
  int hands = 1;
  auto* play = app.add_subcommand("play", "Run hands headless, or serve sessions with --listen");
  play->add_option("--config", config, "Session config document");
  play->add_option("--listen", listen, "host:port to serve the wire protocol (env HOLDEM_LISTEN)");
  play->add_option("--out", out, "Write the session record(s) here");
  play->add_option("--hands", hands, "Hands in the match")->check(CLI::PositiveNumber);

  std::vector<std::string> problem_dirs;
  bool strict = false;
  std::string report;
  auto* eval = app.add_subcommand("eval-perception", "Score problem-set directories (several = runs)");
  eval->add_option("dirs", problem_dirs, "Problem-set directories")->required()->check(CLI::ExistingDirectory);
  eval->add_flag("--strict", strict, "Malformed predictions are errors");
  eval->add_option("--report", report, "Write the report document here");

  std::uint64_t seed = 0;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen-schedule", "Write the 80-trial primitive schedule");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_dir, "Output directory")->required();

  std::string log_path;
  std::vector<int> counts;
  auto* agg = app.add_subcommand("aggregate", "SPSR/TCR from an outcome log or raw counts");
  agg->add_option("log", log_path, "Outcome log (JSON array or one document per line)");
  agg->add_option("--counts", counts, "SP DC TF DF")->expected(4)->delimiter(',');

  std::string labels;
  auto* replay = app.add_subcommand("replay-counters", "Counters from a labelled trajectory");
  replay->add_option("labels", labels)->required()->check(CLI::ExistingFile);

  std::string noise = "gpt55-like";
  std::uint64_t set_seed = 7;
  auto* make_set = app.add_subcommand("make-problem-set", "Write the synthetic 36-problem reference set");
  make_set->add_option("--out", out_dir)->required();
  make_set->add_option("--noise", noise, "Noise profile for the predictions");
  make_set->add_option("--seed", set_seed);

  std::string profile = "all-sp";
  auto* bench = app.add_subcommand("bench-primitives", "Sample the primitive schedule under an outcome profile");
  bench->add_option("--profile", profile);
  bench->add_option("--seed", seed);
  bench->add_option("--out", out, "Write the outcome log here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*play) return cmd_play(config, listen, out, hands);
    if (*eval) return cmd_eval(problem_dirs, strict, report);
    if (*gen) {
      Json doc = Json::array();
      for (const auto& t : generate_schedule(seed)) doc.push_back(encode(t));
      write_file(fs::path(out_dir) / "schedule.json", dump(doc));
      std::cout << "wrote " << doc.size() << " trials\n";
      return 0;
    }
    if (*agg) {
      if (!counts.empty()) {
        print_report(aggregate_counts({counts[0], counts[1], counts[2], counts[3]}));
      } else if (!log_path.empty()) {
        print_report(aggregate_outcomes(read_outcome_log(log_path)));
      } else {
        throw Error(Errc::empty_log, "give an outcome log or --counts");
      }
      return 0;
    }
    if (*replay) return cmd_replay(labels);
    if (*make_set) {
      for (const auto& p : generate_reference_set(noise, set_seed)) write_problem(out_dir, p);
      std::cout << "wrote 36 problems to " << out_dir << '\n';
      return 0;
    }
    if (*bench) {
      const BenchRun run = run_primitive_bench(generate_schedule(seed), builtin_outcome_profile(profile), seed);
      if (!out.empty()) {
        Json doc = Json::array();
        for (const auto& o : run.log) doc.push_back(encode(o));
        write_file(out, dump(doc));
      }
      print_report(run.report);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
