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

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "holdem/parsed_state.hpp"
#include "holdem/percent.hpp"

namespace holdem {

enum class Column { Overall, LS, TO, BI, CC, CB, RCI, OCI, SO };

inline constexpr std::array<Column, 9> kColumns{Column::Overall, Column::LS,  Column::TO,
                                                Column::BI,      Column::CC,  Column::CB,
                                                Column::RCI,     Column::OCI, Column::SO};

std::string_view to_string(Column c);
constexpr std::size_t slot(Column c) { return static_cast<std::size_t>(c); }
constexpr Column column_of(Field f) { return static_cast<Column>(static_cast<int>(f) + 1); }

enum class Verdict { correct, incorrect, not_applicable };
std::string_view to_string(Verdict v);

enum class ProblemClass { table_decision, outcome_judge, turn_gate, robot_progress, held_card_read, recovery_safety };
std::string_view to_string(ProblemClass c);
ProblemClass parse_problem_class(std::string_view text);

struct PerceptionProblem {
  std::string id;
  ProblemClass problem_class = ProblemClass::turn_gate;
  ParsedState label;
  std::optional<ParsedState> prediction;  // nullopt when missing or malformed
  std::string prediction_error;
};

struct ColumnResult {
  std::string id;
  std::array<Verdict, 9> verdicts{};

  Verdict operator[](Column c) const { return verdicts[slot(c)]; }
  friend bool operator==(const ColumnResult&, const ColumnResult&) = default;
};

/// Sub-columns (never Overall) scored for this problem.
std::vector<Column> applicable_columns(const PerceptionProblem& p);

/// Column verdicts; a missing or malformed prediction is incorrect on every
/// applicable column.
ColumnResult score_problem(const PerceptionProblem& p);

struct RunReport {
  int problems = 0;
  std::array<int, 9> correct{};
  std::array<int, 9> applicable{};
  std::array<std::optional<Ratio>, 9> percent{};  // nullopt when nothing applicable
  std::optional<Ratio> avg;                       // mean over columns with data

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Throws Errc::empty_run.
RunReport aggregate_run(const std::vector<ColumnResult>& results);

/// Mean of unrounded per-run percentages; counts are summed.
/// Throws Errc::empty_run.
RunReport aggregate_runs(const std::vector<RunReport>& runs);

/// Unweighted mean of eight sub-column percentages.
Ratio average_columns(const std::array<Ratio, 8>& columns);

/// Canonical report document with one-decimal strings.
Json encode(const RunReport& r);

/// Fixed-width table: name, Overall, LS .. SO, Avg.
std::string render_table(const std::vector<std::pair<std::string, RunReport>>& rows);

/// "p03" -> "p3"; lower-cases. Ids compare numerically after the prefix.
std::string normalize_problem_id(std::string_view raw);
bool problem_id_less(const std::string& a, const std::string& b);

/// One sub-directory per problem with label.json, prediction.json and
/// class.txt. Throws Errc::missing_label, Errc::malformed_document,
/// Errc::duplicate_id; with strict, a bad prediction is also malformed.
std::vector<PerceptionProblem> load_problem_set(const std::filesystem::path& dir, bool strict = false);

void write_problem(const std::filesystem::path& dir, const PerceptionProblem& p);

}  // namespace holdem
