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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "holdem/errors.hpp"
#include "holdem/perceiver_sim.hpp"
#include "holdem/perception_eval.hpp"
#include "holdem/reference_set.hpp"
#include "oracles.hpp"

using namespace holdem;
namespace fs = std::filesystem;

namespace {

TableState sample_table(std::uint64_t seed) {
  TableConfig cfg;
  cfg.deck_seed = seed;
  TableState t = new_initial_table(cfg);
  t.community = {t.deck[0], t.deck[1], t.deck[2]};
  t.deck.erase(t.deck.begin(), t.deck.begin() + 3);
  t.robot_inventory[Denomination::ten] -= 1;
  t.robot_bet_zone[Denomination::ten] += 1;
  return t;
}

PerceptionProblem problem(ProblemClass cls, std::size_t board) {
  PerceptionProblem p;
  p.id = "p1";
  p.problem_class = cls;
  TableState t = sample_table(1);
  t.community.resize(board);
  p.label = project_truth(t, cls == ProblemClass::outcome_judge ? LoopStage::win : LoopStage::idle,
                          cls == ProblemClass::outcome_judge ? ShowdownOutcome::win : ShowdownOutcome::not_showdown);
  p.prediction = p.label;
  return p;
}

fs::path temp_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("holdem_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Perceiver, ZeroNoiseIsTheProjection) {
  const NoiseProfile zero = builtin_noise_profile("zero");
  Rng rng(1);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const TableState t = sample_table(s);
    const Perception p = perceive(t, LoopStage::idle, ShowdownOutcome::not_showdown, zero, rng);
    EXPECT_EQ(p.parsed, project_truth(t, LoopStage::idle, ShowdownOutcome::not_showdown));
    EXPECT_FALSE(p.any_corrupted());
  }
}

TEST(Perceiver, CorruptionAlwaysChangesTheFieldAndStaysValid) {
  Rng rng(2);
  const ParsedState base = project_truth(sample_table(3), LoopStage::idle, ShowdownOutcome::not_showdown);
  for (Field f : kFields) {
    for (int i = 0; i < 50; ++i) {
      ParsedState ps = base;
      corrupt(ps, f, rng);
      EXPECT_NE(ps, base) << to_string(f);
      EXPECT_NO_THROW(check_schema(ps));
    }
  }
}

TEST(Perceiver, ErrorRatesFollowTheProfile) {
  const NoiseProfile noise = builtin_noise_profile("uniform-30");
  Rng rng(3);
  const TableState t = sample_table(4);
  std::array<int, 8> hits{};
  const int n = 5000;
  for (int i = 0; i < n; ++i) {
    const Perception p = perceive(t, LoopStage::idle, ShowdownOutcome::not_showdown, noise, rng);
    for (std::size_t k = 0; k < 8; ++k) hits[k] += p.corrupted[k];
  }
  const double sigma = std::sqrt(0.3 * 0.7 / n);
  for (int h : hits) EXPECT_NEAR(static_cast<double>(h) / n, 0.3, 4 * sigma);
}

TEST(Perceiver, ReferenceRowsBecomeProfiles) {
  for (const auto& row : reference_perceiver_rows()) {
    const NoiseProfile p = builtin_noise_profile(row.key + "-like");
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(p.error_rate[k], 1.0 - row.accuracy[k] / 100.0, 1e-12);
  }
  EXPECT_THROW(builtin_noise_profile("unknown"), Error);
}

TEST(ParsedStateCodec, RoundTripAndStrictness) {
  const ParsedState ps = project_truth(sample_table(5), LoopStage::atom_idle, ShowdownOutcome::not_showdown);
  EXPECT_EQ(decode_parsed_state(parse_json(dump(encode(ps)))), ps);
  Json extra = encode(ps);
  extra["surprise"] = 1;
  EXPECT_THROW(decode_parsed_state(extra), Error);
  Json bad_stage = encode(ps);
  bad_stage["loop_stage"] = "sleeping";
  EXPECT_THROW(decode_parsed_state(bad_stage), Error);
}

TEST(Applicability, FollowsTheClassRules) {
  using C = std::vector<Column>;
  EXPECT_EQ(applicable_columns(problem(ProblemClass::turn_gate, 3)), (C{Column::LS, Column::TO, Column::BI}));
  EXPECT_EQ(applicable_columns(problem(ProblemClass::table_decision, 0)),
            (C{Column::LS, Column::TO, Column::BI, Column::CB, Column::RCI, Column::OCI}));
  EXPECT_EQ(applicable_columns(problem(ProblemClass::outcome_judge, 5)).size(), 8u);
}

TEST(Scoring, IdentityIsFullyCorrect) {
  const ColumnResult r = score_problem(problem(ProblemClass::outcome_judge, 5));
  for (Column c : kColumns) EXPECT_EQ(r[c], Verdict::correct);
}

TEST(Scoring, BoardIsOrderInsensitive) {
  PerceptionProblem p = problem(ProblemClass::table_decision, 3);
  std::reverse(p.prediction->table.community_cards.begin(), p.prediction->table.community_cards.end());
  EXPECT_EQ(score_problem(p)[Column::CC], Verdict::correct);
}

TEST(Scoring, OneChipOffBreaksOnlyThatColumnAndOverall) {
  PerceptionProblem p = problem(ProblemClass::table_decision, 3);
  p.prediction->table.my_chips[Denomination::five] += 1;
  const ColumnResult r = score_problem(p);
  EXPECT_EQ(r[Column::RCI], Verdict::incorrect);
  EXPECT_EQ(r[Column::Overall], Verdict::incorrect);
  EXPECT_EQ(r[Column::LS], Verdict::correct);
  EXPECT_EQ(r[Column::TO], Verdict::correct);
  EXPECT_EQ(r[Column::BI], Verdict::correct);
  EXPECT_EQ(r[Column::SO], Verdict::not_applicable);
}

TEST(Scoring, MissingPredictionFailsEveryApplicableColumn) {
  PerceptionProblem p = problem(ProblemClass::turn_gate, 0);
  p.prediction.reset();
  const ColumnResult r = score_problem(p);
  EXPECT_EQ(r[Column::LS], Verdict::incorrect);
  EXPECT_EQ(r[Column::CB], Verdict::not_applicable);
}

TEST(Aggregation, ReferenceColumnsAverageToReferenceAvg) {
  for (const auto& row : oracle::kPerceiverTable) {
    std::array<Ratio, 8> cols;
    for (std::size_t k = 0; k < 8; ++k) cols[k] = parse_decimal(row.columns[k]);
    EXPECT_EQ(format_percent(average_columns(cols)), row.avg) << row.name;
  }
}

TEST(Aggregation, EmptyRunIsAnError) {
  try {
    aggregate_run({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_run);
  }
}

TEST(Aggregation, AllCorrectSaturates) {
  std::vector<ColumnResult> results;
  for (auto cls : {ProblemClass::outcome_judge, ProblemClass::turn_gate}) results.push_back(score_problem(problem(cls, 5)));
  const RunReport r = aggregate_run(results);
  EXPECT_EQ(format_percent(*r.percent[slot(Column::Overall)]), "100.0");
  EXPECT_EQ(format_percent(*r.avg), "100.0");
}

TEST(ReferenceSet, ApplicabilityMatchesReferenceSubsets) {
  const auto problems = generate_reference_set();
  ASSERT_EQ(problems.size(), 36u);
  std::map<std::string, std::vector<int>> ids;
  std::array<int, 9> counts{};
  for (const auto& p : problems) {
    counts[slot(Column::Overall)]++;
    for (Column c : applicable_columns(p)) {
      counts[slot(c)]++;
      ids[std::string(to_string(c))].push_back(std::stoi(p.id.substr(1)));
    }
  }
  EXPECT_EQ(counts, (std::array<int, 9>{36, 36, 36, 36, 13, 16, 16, 16, 7}));
  for (const auto& [col, want] : oracle::kApplicability) EXPECT_EQ(ids[col], want) << col;
}

TEST(ReferenceSet, ShippedCopyMatchesTheGenerator) {
  const auto shipped = load_problem_set(fs::path(HOLDEM_DATA_DIR) / "perception_reference", true);
  const auto fresh = generate_reference_set();
  ASSERT_EQ(shipped.size(), fresh.size());
  for (std::size_t i = 0; i < shipped.size(); ++i) {
    EXPECT_EQ(shipped[i].id, fresh[i].id);
    EXPECT_EQ(shipped[i].problem_class, fresh[i].problem_class);
    EXPECT_EQ(shipped[i].label, fresh[i].label);
    EXPECT_EQ(shipped[i].prediction, fresh[i].prediction);
  }
}

TEST(ReferenceSet, ScoringIsOrderIndependent) {
  auto problems = generate_reference_set();
  std::vector<ColumnResult> a;
  for (const auto& p : problems) a.push_back(score_problem(p));
  std::reverse(problems.begin(), problems.end());
  std::vector<ColumnResult> b;
  for (const auto& p : problems) b.push_back(score_problem(p));
  const RunReport ra = aggregate_run(a), rb = aggregate_run(b);
  EXPECT_EQ(ra, rb);
  // Avg recomputes from the report itself; Overall-correct needs every column.
  Ratio sum = 0;
  for (Column c : kColumns) {
    if (c != Column::Overall) sum += *ra.percent[slot(c)];
  }
  EXPECT_EQ(sum / 8, *ra.avg);
  for (const auto& res : a) {
    bool all = true;
    for (Column c : kColumns) all = all && (c == Column::Overall || res[c] != Verdict::incorrect);
    EXPECT_EQ(res[Column::Overall] == Verdict::correct, all);
  }
}

TEST(ProblemSetLoader, EmptyAndDuplicateDirectories) {
  const fs::path empty = temp_dir("empty");
  EXPECT_TRUE(load_problem_set(empty).empty());

  const fs::path dup = temp_dir("dup");
  PerceptionProblem p = problem(ProblemClass::turn_gate, 0);
  p.id = "p3";
  write_problem(dup, p);
  p.id = "p03";
  write_problem(dup, p);
  try {
    load_problem_set(dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::duplicate_id);
  }
}

TEST(ProblemSetLoader, MissingLabelAndMalformedPrediction) {
  const fs::path dir = temp_dir("bad");
  PerceptionProblem p = problem(ProblemClass::turn_gate, 0);
  write_problem(dir, p);
  std::ofstream(dir / "p1" / "prediction.json") << "{not json";
  const auto loaded = load_problem_set(dir);
  ASSERT_EQ(loaded.size(), 1u);
  EXPECT_FALSE(loaded[0].prediction);
  EXPECT_THROW(load_problem_set(dir, true), Error);
  fs::remove(dir / "p1" / "label.json");
  try {
    load_problem_set(dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::missing_label);
  }
}

TEST(ProblemIds, NormaliseAndOrderNumerically) {
  EXPECT_EQ(normalize_problem_id("P03"), "p3");
  EXPECT_TRUE(problem_id_less("p2", "p10"));
  EXPECT_FALSE(problem_id_less("p10", "p2"));
}

TEST(Percent, HalfEvenRendering) {
  EXPECT_EQ(format_percent(percent_of(49, 80)), "61.2");
  EXPECT_EQ(format_percent(percent_of(1, 80)), "1.2");
  EXPECT_EQ(format_percent(parse_decimal("37.45")), "37.4");
  EXPECT_EQ(format_percent(parse_decimal("100")), "100.0");
}
