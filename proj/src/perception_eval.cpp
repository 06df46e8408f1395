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

#include "holdem/perception_eval.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "holdem/errors.hpp"

namespace holdem {
namespace fs = std::filesystem;
namespace {

constexpr std::array<std::string_view, 9> kColumnNames{"Overall", "LS", "TO", "BI", "CC", "CB", "RCI", "OCI", "SO"};
constexpr std::array<std::string_view, 6> kClassNames{"table_decision", "outcome_judge",  "turn_gate",
                                                       "robot_progress", "held_card_read", "recovery_safety"};

bool same_board(std::vector<Card> a, std::vector<Card> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool field_correct(Column c, const ParsedState& label, const ParsedState& pred) {
  switch (c) {
    case Column::LS: return pred.loop_stage == label.loop_stage;
    case Column::TO: return pred.table.is_my_turn == label.table.is_my_turn;
    case Column::BI: return pred.blind == label.blind;
    case Column::CC: return same_board(pred.table.community_cards, label.table.community_cards);
    case Column::CB:
      return pred.table.my_current_bet == label.table.my_current_bet &&
             pred.table.opponent_bet == label.table.opponent_bet;
    case Column::RCI: return pred.table.my_chips == label.table.my_chips;
    case Column::OCI: return pred.table.opponent_chips == label.table.opponent_chips;
    case Column::SO: return pred.showdown_outcome == label.showdown_outcome;
    case Column::Overall: break;
  }
  return false;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

std::pair<std::string, long long> split_id(const std::string& id) {
  std::size_t i = id.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(id[i - 1]))) --i;
  if (i == id.size()) return {id, -1};
  return {id.substr(0, i), std::stoll(id.substr(i))};
}

}  // namespace

std::string_view to_string(Column c) { return kColumnNames[slot(c)]; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::correct: return "correct";
    case Verdict::incorrect: return "incorrect";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

std::string_view to_string(ProblemClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

ProblemClass parse_problem_class(std::string_view text) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == text) return static_cast<ProblemClass>(i);
  }
  throw Error(Errc::malformed_document, "unknown problem class '" + std::string(text) + "'");
}

std::vector<Column> applicable_columns(const PerceptionProblem& p) {
  std::vector<Column> out{Column::LS, Column::TO, Column::BI};
  const bool chip_state = p.problem_class == ProblemClass::table_decision || p.problem_class == ProblemClass::outcome_judge;
  if (chip_state) {
    const auto n = p.label.table.community_cards.size();
    if (n >= 3 && n <= 5) out.push_back(Column::CC);
    out.push_back(Column::CB);
    out.push_back(Column::RCI);
    out.push_back(Column::OCI);
  }
  if (p.problem_class == ProblemClass::outcome_judge) out.push_back(Column::SO);
  return out;
}

ColumnResult score_problem(const PerceptionProblem& p) {
  ColumnResult r{p.id, {}};
  r.verdicts.fill(Verdict::not_applicable);
  bool all = true;
  for (Column c : applicable_columns(p)) {
    const bool ok = p.prediction && field_correct(c, p.label, *p.prediction);
    r.verdicts[slot(c)] = ok ? Verdict::correct : Verdict::incorrect;
    all = all && ok;
  }
  r.verdicts[slot(Column::Overall)] = all ? Verdict::correct : Verdict::incorrect;
  return r;
}

Ratio average_columns(const std::array<Ratio, 8>& columns) {
  Ratio sum = 0;
  for (const auto& c : columns) sum += c;
  return sum / 8;
}

RunReport aggregate_run(const std::vector<ColumnResult>& results) {
  if (results.empty()) throw Error(Errc::empty_run, "no problems scored");
  RunReport r;
  r.problems = static_cast<int>(results.size());
  for (const auto& res : results) {
    for (Column c : kColumns) {
      const Verdict v = res[c];
      if (v == Verdict::not_applicable) continue;
      ++r.applicable[slot(c)];
      if (v == Verdict::correct) ++r.correct[slot(c)];
    }
  }
  Ratio sum = 0;
  int with_data = 0;
  for (Column c : kColumns) {
    if (r.applicable[slot(c)] == 0) continue;
    r.percent[slot(c)] = percent_of(r.correct[slot(c)], r.applicable[slot(c)]);
    if (c != Column::Overall) {
      sum += *r.percent[slot(c)];
      ++with_data;
    }
  }
  if (with_data > 0) r.avg = sum / with_data;
  return r;
}

RunReport aggregate_runs(const std::vector<RunReport>& runs) {
  if (runs.empty()) throw Error(Errc::empty_run, "no runs to average");
  RunReport out;
  std::array<Ratio, 9> sum{};
  std::array<int, 9> n{};
  Ratio avg_sum = 0;
  int avg_n = 0;
  for (const auto& r : runs) {
    out.problems += r.problems;
    for (std::size_t i = 0; i < 9; ++i) {
      out.correct[i] += r.correct[i];
      out.applicable[i] += r.applicable[i];
      if (r.percent[i]) {
        sum[i] += *r.percent[i];
        ++n[i];
      }
    }
    if (r.avg) {
      avg_sum += *r.avg;
      ++avg_n;
    }
  }
  for (std::size_t i = 0; i < 9; ++i) {
    if (n[i] > 0) out.percent[i] = sum[i] / n[i];
  }
  if (avg_n > 0) out.avg = avg_sum / avg_n;
  return out;
}

Json encode(const RunReport& r) {
  Json j;
  j["problems"] = r.problems;
  Json cols;
  for (Column c : kColumns) {
    Json col;
    col["correct"] = r.correct[slot(c)];
    col["applicable"] = r.applicable[slot(c)];
    col["percent"] = r.percent[slot(c)] ? Json(format_percent(*r.percent[slot(c)])) : Json(nullptr);
    cols[std::string(to_string(c))] = col;
  }
  j["columns"] = cols;
  j["avg"] = r.avg ? Json(format_percent(*r.avg)) : Json(nullptr);
  return j;
}

std::string render_table(const std::vector<std::pair<std::string, RunReport>>& rows) {
  std::size_t name_w = 9;
  for (const auto& [name, _] : rows) name_w = std::max(name_w, name.size());
  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << std::string(s.size() < 8 ? 8 - s.size() : 0, ' ') << s;
  };
  out << "Perceiver" << std::string(name_w - 9, ' ');
  for (Column c : kColumns) cell(std::string(to_string(c)));
  cell("Avg");
  out << '\n';
  for (const auto& [name, r] : rows) {
    out << name << std::string(name_w - name.size(), ' ');
    for (Column c : kColumns) cell(r.percent[slot(c)] ? format_percent(*r.percent[slot(c)]) : "-");
    cell(r.avg ? format_percent(*r.avg) : "-");
    out << '\n';
  }
  return out.str();
}

std::string normalize_problem_id(std::string_view raw) {
  std::string id;
  for (char ch : raw) id += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto [prefix, number] = split_id(id);
  if (number < 0) return id;
  return prefix + std::to_string(number);
}

bool problem_id_less(const std::string& a, const std::string& b) {
  auto [pa, na] = split_id(a);
  auto [pb, nb] = split_id(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

std::vector<PerceptionProblem> load_problem_set(const fs::path& dir, bool strict) {
  if (!fs::is_directory(dir)) throw Error(Errc::malformed_document, dir.string() + " is not a directory");
  std::vector<fs::path> subdirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) subdirs.push_back(entry.path());
  }
  std::sort(subdirs.begin(), subdirs.end());

  std::map<std::string, fs::path> seen;
  std::vector<PerceptionProblem> out;
  for (const auto& sub : subdirs) {
    PerceptionProblem p;
    p.id = normalize_problem_id(sub.filename().string());
    if (auto [it, fresh] = seen.emplace(p.id, sub); !fresh) {
      throw Error(Errc::duplicate_id, p.id + " appears as " + it->second.filename().string() + " and " +
                                          sub.filename().string());
    }
    const fs::path label = sub / "label.json";
    if (!fs::exists(label)) throw Error(Errc::missing_label, p.id + " has no label.json");
    try {
      p.label = decode_parsed_state(parse_json(read_file(label)));
    } catch (const Error& e) {
      throw Error(Errc::malformed_document, p.id + "/label.json: " + e.what());
    }
    const fs::path cls = sub / "class.txt";
    if (!fs::exists(cls)) throw Error(Errc::malformed_document, p.id + " has no class.txt");
    p.problem_class = parse_problem_class(trim(read_file(cls)));

    const fs::path pred = sub / "prediction.json";
    try {
      if (!fs::exists(pred)) throw Error(Errc::malformed_document, "prediction.json missing");
      p.prediction = decode_parsed_state(parse_json(read_file(pred)));
    } catch (const Error& e) {
      if (strict) throw Error(Errc::malformed_document, p.id + "/prediction.json: " + e.what());
      p.prediction_error = e.what();
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return problem_id_less(a.id, b.id); });
  return out;
}

void write_problem(const fs::path& dir, const PerceptionProblem& p) {
  const fs::path sub = dir / p.id;
  fs::create_directories(sub);
  std::ofstream(sub / "label.json") << encode(p.label).dump(2) << '\n';
  if (p.prediction) std::ofstream(sub / "prediction.json") << encode(*p.prediction).dump(2) << '\n';
  std::ofstream(sub / "class.txt") << to_string(p.problem_class) << '\n';
}

}  // namespace holdem
