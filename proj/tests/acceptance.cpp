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

// Acceptance gate: one PASS/FAIL line per criterion A1..A9.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "holdem/bench.hpp"
#include "holdem/chip_split.hpp"
#include "holdem/perception_eval.hpp"
#include "holdem/poker.hpp"
#include "holdem/reference_set.hpp"
#include "holdem/router.hpp"
#include "holdem/session.hpp"
#include "oracles.hpp"

using namespace holdem;
namespace fs = std::filesystem;

namespace {

constexpr double kA1MaxSeconds = 1.0;
constexpr double kA3MaxSeconds = 1.0;
constexpr double kA7MaxSeconds = 30.0;
constexpr int kA6RandomInventories = 1000;
constexpr int kA7Draws = 10000;
constexpr int kA8Hands = 1000;
constexpr double kA8Sigmas = 3.0;
constexpr int kA9Hands = 200;

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Card> draw(Rng& rng, int n) {
  std::vector<Card> deck = full_deck();
  for (int i = 0; i < n; ++i) std::swap(deck[i], deck[i + rng.below(deck.size() - i)]);
  deck.resize(n);
  return deck;
}

oracle::Score lib_score(const std::vector<Card>& seven) {
  const HandRank r = evaluate_hand(seven);
  oracle::Score s{static_cast<int>(r.category)};
  for (auto t : r.tiebreak) {
    if (t) s.push_back(t);
  }
  return s;
}

void a1(Criterion& v) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& row : oracle::kPolicyTable) {
    const OutcomeReport r = aggregate_counts(row.counts);
    v.require(format_percent(r.spsr) == row.spsr && format_percent(r.tcr) == row.tcr, row.name);
  }
  const double s = seconds_since(t0);
  v.require(s < kA1MaxSeconds, "runtime");
  v.detail << " 9 rows, " << s << " s";
}

void a2(Criterion& v) {
  for (const auto& row : oracle::kGroupTable) {
    Ratio sum = 0;
    for (int g = 0; g < 4; ++g) {
      const std::string cell = row.cells[g];
      sum += parse_decimal(cell.substr(0, cell.find('/')));
    }
    const std::string overall = row.cells[4];
    v.require(format_percent(sum / 4) == overall.substr(0, overall.find('/')), std::string("mean ") + row.name);
  }
  // pi0 pickup: 20 of 20 scene-preserving.
  std::vector<TrialOutcome> log;
  for (int i = 0; i < 20; ++i) log.push_back({i, i < 10 ? RobotPrimitive::pick_up_left : RobotPrimitive::pick_up_right, OutcomeLevel::SP});
  const OutcomeReport r = aggregate_outcomes(log);
  const auto& g = r.groups[static_cast<std::size_t>(PrimitiveGroup::pickup)];
  v.require(g && format_rate_pair(g->spsr, g->tcr) == "100.0/100.0", "pickup group");
  v.detail << " 9 rows recombine, pickup 100.0/100.0";
}

void a3(Criterion& v) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& row : oracle::kPerceiverTable) {
    std::array<Ratio, 8> cols;
    for (std::size_t k = 0; k < 8; ++k) cols[k] = parse_decimal(row.columns[k]);
    const std::string got = format_percent(average_columns(cols));
    v.require(got == row.avg, std::string(row.name) + " " + got + " vs " + row.avg);
  }
  const double s = seconds_since(t0);
  v.require(s < kA3MaxSeconds, "runtime");
  v.detail << " 8 rows";
}

void a4(Criterion& v) {
  const auto problems = load_problem_set(fs::path(HOLDEM_DATA_DIR) / "perception_reference", true);
  std::array<int, 9> counts{};
  std::map<std::string, std::vector<int>> ids;
  for (const auto& p : problems) {
    ++counts[slot(Column::Overall)];
    for (Column c : applicable_columns(p)) {
      ++counts[slot(c)];
      ids[std::string(to_string(c))].push_back(std::stoi(p.id.substr(1)));
    }
  }
  v.require(counts == std::array<int, 9>{36, 36, 36, 36, 13, 16, 16, 16, 7}, "counts");
  for (const auto& [col, want] : oracle::kApplicability) v.require(ids[col] == want, "ids " + col);
  v.detail << " counts";
  for (std::size_t k = 1; k < 9; ++k) v.detail << ' ' << counts[k];
}

void a5(Criterion& v) {
  int flagged = 0;
  for (const auto& row : oracle::kTrajectories) {
    const auto file = read_label_file((fs::path(HOLDEM_DATA_DIR) / "trajectories" / row.file).string());
    const CounterReport r = replay_labels(file.labels);
    v.require(r.states == row.states && r.ap == row.ap && r.wa == row.wa && r.hl == row.hl, row.file);
    if (r.dpp != row.dpp) {
      ++flagged;
      v.detail << " MISMATCH " << row.file << " DPP " << r.dpp << " vs " << row.dpp << ';';
    }
    if (r.rc != row.rc) {
      ++flagged;
      v.detail << " MISMATCH " << row.file << " RC " << r.rc << " vs " << row.rc << ';';
    }
  }
  v.detail << " States/AP/WA/HL exact, " << flagged << " DPP/RC mismatch(es) flagged";
}

void a6(Criterion& v) {
  int mismatches = 0;
  const ChipCount unbounded{1000, 1000, 1000, 1000};
  for (int d = 0; d <= 500; d += 5) {
    const auto got = try_split(d, unbounded);
    mismatches += !got || got->chips() != oracle::min_chips(d, unbounded) || got->value() != d;
  }
  Rng rng(6);
  for (int i = 0; i < kA6RandomInventories; ++i) {
    const ChipCount inv{static_cast<int>(rng.below(6)), static_cast<int>(rng.below(6)), static_cast<int>(rng.below(4)),
                        static_cast<int>(rng.below(4))};
    const int d = static_cast<int>(rng.below(101)) * 5;
    const int want = oracle::min_chips(d, inv);
    const auto got = try_split(d, inv);
    mismatches += want < 0 ? got.has_value() : (!got || got->chips() != want || got->value() != d);
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  v.detail << " 101 unbounded + " << kA6RandomInventories << " bounded, " << mismatches << " mismatches";
}

void a7(Criterion& v) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(7);
  int bad = 0;
  for (int i = 0; i < kA7Draws; ++i) {
    const auto seven = draw(rng, 7);
    bad += lib_score(seven) != oracle::score_seven(seven);
  }
  int asym = 0;
  for (int i = 0; i < kA7Draws; ++i) {
    const auto c = draw(rng, 9);
    const std::vector<Card> a(c.begin(), c.begin() + 2), b(c.begin() + 2, c.begin() + 4), board(c.begin() + 4, c.end());
    const Showdown ab = judge_showdown(a, b, board), ba = judge_showdown(b, a, board);
    asym += !((ab == Showdown::tie && ba == Showdown::tie) || (ab == Showdown::win && ba == Showdown::lose) ||
              (ab == Showdown::lose && ba == Showdown::win));
  }
  const double s = seconds_since(t0);
  v.require(bad == 0, "evaluator disagrees " + std::to_string(bad));
  v.require(asym == 0, "antisymmetry " + std::to_string(asym));
  v.require(s < kA7MaxSeconds, "runtime");
  v.detail << ' ' << kA7Draws << " draws, " << bad << " disagreements, " << asym << " asymmetric, " << s << " s";
}

void a8(Criterion& v) {
  const SessionConfig cfg = fixtures::third_trajectory();
  const SessionRecord r = run_hand(cfg);
  v.require(r.cause == TerminationCause::terminal_outcome, "cause " + std::string(to_string(r.cause)));
  v.require(r.counters.rc == 0 && r.counters.hl == 0, "RC/HL");
  v.require(dump(encode(r)) == dump(encode(run_hand(cfg))), "byte-identical");

  int with_rc = 0, over = 0;
  for (int i = 0; i < kA8Hands; ++i) {
    SessionConfig c = cfg;
    c.outcome_profile = "tf-30";
    c.seeds.policy = static_cast<std::uint64_t>(i);
    c.table.deck_seed = static_cast<std::uint64_t>(i);
    const SessionRecord h = run_hand(c);
    with_rc += h.counters.rc > 0;
    over += h.counters.states > c.max_states || h.cause == TerminationCause::state_limit;
  }
  const double p = static_cast<double>(with_rc) / kA8Hands;
  const double lower = p - kA8Sigmas * std::sqrt(p * (1 - p) / kA8Hands);
  v.require(over == 0, "state limit hit " + std::to_string(over));
  v.require(lower > 0.5, "RC>0 share " + std::to_string(p));
  v.detail << " scripted hand terminal_outcome (" << r.counters.states << " states); tf-30: " << with_rc << "/"
           << kA8Hands << " hands with RC>0, 3-sigma lower bound " << lower;
}

void a9(Criterion& v) {
  static const char* profiles[] = {"pi05-groups", "pi0-aggregate", "act-groups", "all-sp", "tf-30"};
  static const char* noise[] = {"zero", "gpt55-like", "uniform-10", "haiku45-like"};
  int violations = 0, counter_breaks = 0, round_trip = 0;
  for (int i = 0; i < kA9Hands; ++i) {
    SessionConfig c;
    c.outcome_profile = profiles[i % 5];
    c.noise_profile = noise[(i / 5) % 4];
    c.table.deck_seed = static_cast<std::uint64_t>(i);
    c.table.forced_blinds = i % 3 == 1;
    c.seeds = {static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(i) * 7, static_cast<std::uint64_t>(i) * 3};
    const SessionRecord r = run_hand(c);
    const ChipCount totals = c.table.robot_chips + c.table.opponent_chips;
    for (const auto& s : r.states) violations += !validate_state(s.truth, totals).empty();
    counter_breaks += compute_counters(r.events) != r.counters || r.counters.hl > r.counters.ap;
    CounterReport prev;
    for (std::size_t n = 1; n <= r.events.size(); ++n) {
      const CounterReport k = compute_counters({r.events.begin(), r.events.begin() + static_cast<std::ptrdiff_t>(n)});
      counter_breaks += k.ap < prev.ap || k.dpp < prev.dpp || k.wa < prev.wa || k.hl < prev.hl || k.rc < prev.rc;
      prev = k;
    }
    for (const auto& e : r.events) round_trip += decode_event(parse_json(dump(encode(e)))) != e;
    round_trip += decode_table(parse_json(dump(encode(r.final_truth)))) != r.final_truth;
    round_trip += dump(encode(decode_session_config(parse_json(dump(encode(c)))))) != dump(encode(c));
  }
  Rng rng(9);
  int rate_breaks = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<int, 4> counts{};
    for (auto& x : counts) x = static_cast<int>(rng.below(40));
    if (counts[0] + counts[1] + counts[2] + counts[3] == 0) continue;
    const OutcomeReport o = aggregate_counts(counts);
    rate_breaks += o.spsr > o.tcr;
  }
  int routed = 0, route_breaks = 0;
  for (LoopStage stage : kLoopStages) {
    for (int bits = 0; bits < 512; ++bits) {
      ParsedState ps;
      ps.loop_stage = stage;
      ps.table.is_my_turn = bits & 1;
      ps.table.scene_stable = bits & 2;
      SessionContext ctx;
      if (bits & 4) {
        AtomPlan p;
        p.origin = AgentPrimitive::raise_to(10);
        p.steps = {PlanStep::robot(RobotPrimitive::push_10)};
        ctx.plan = p;
      }
      ctx.awaiting_verify = bits & 8;
      ctx.consecutive_waits = bits & 16 ? 4 : 0;
      ctx.retry_count = bits & 32 ? 1 : 0;
      if (bits & 64) ctx.last_atom = RobotPrimitive::push_10;
      ctx.fresh_game = bits & 128;
      if (bits & 256) ctx.legal.actions = {AgentPrimitive::make(AgentKind::check)};
      try {
        const Gate g = route(ps, ctx, Budgets{});
        apply_gate(ctx, g, GateEvent{});
        ++routed;
      } catch (const std::exception&) {
        ++route_breaks;
      }
    }
  }
  v.require(violations == 0, "table invariants " + std::to_string(violations));
  v.require(counter_breaks == 0, "counters " + std::to_string(counter_breaks));
  v.require(round_trip == 0, "round trips " + std::to_string(round_trip));
  v.require(rate_breaks == 0, "SPSR>TCR");
  v.require(route_breaks == 0, "router totality");
  v.detail << ' ' << kA9Hands << " hands, " << routed << " routed grid points";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"A1 metric aggregation golden", a1},   {"A2 group recombination", a2},
      {"A3 perception Avg arithmetic", a3},   {"A4 applicability golden", a4},
      {"A5 trajectory replay", a5},           {"A6 splitter optimality", a6},
      {"A7 evaluator oracle equivalence", a7}, {"A8 closed-loop determinism and liveness", a8},
      {"A9 invariant suite", a9},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Criterion v;
    try {
      check(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ":" << v.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
