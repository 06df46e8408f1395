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

// Reference implementations and reference figures used as test oracles.
// Deliberately independent of the library code paths they check.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "holdem/tabletop.hpp"

namespace oracle {

using holdem::Card;

// Category 0..8 followed by the ranks that break ties.
using Score = std::vector<int>;

inline Score score_five(const std::array<Card, 5>& h) {
  std::map<int, int> count;
  bool flush = true;
  for (const auto& c : h) {
    ++count[c.rank];
    flush = flush && c.suit == h[0].suit;
  }
  std::vector<std::pair<int, int>> groups;  // (count, rank)
  for (auto [r, n] : count) groups.emplace_back(n, r);
  std::sort(groups.rbegin(), groups.rend());
  std::vector<int> ranks;
  for (auto [n, r] : groups) ranks.push_back(r);

  int straight_high = 0;
  if (count.size() == 5) {
    const int hi = count.rbegin()->first;
    const int lo = count.begin()->first;
    if (hi - lo == 4) straight_high = hi;
    if (hi == 14 && count.contains(2) && count.contains(3) && count.contains(4) && count.contains(5)) straight_high = 5;
  }
  auto with = [&](int cat, std::vector<int> tail) {
    tail.insert(tail.begin(), cat);
    return tail;
  };
  if (straight_high && flush) return with(8, {straight_high});
  if (groups[0].first == 4) return with(7, ranks);
  if (groups[0].first == 3 && groups[1].first == 2) return with(6, ranks);
  if (flush) return with(5, ranks);
  if (straight_high) return with(4, {straight_high});
  if (groups[0].first == 3) return with(3, ranks);
  if (groups[0].first == 2 && groups[1].first == 2) return with(2, ranks);
  if (groups[0].first == 2) return with(1, ranks);
  return with(0, ranks);
}

// Best of the 21 five-card subsets of seven cards.
inline Score score_seven(const std::vector<Card>& seven) {
  Score best;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      std::array<Card, 5> h{};
      int k = 0;
      for (int i = 0; i < 7; ++i) {
        if (i != a && i != b) h[k++] = seven[i];
      }
      best = std::max(best, score_five(h));
    }
  }
  return best;
}

// Fewest chips reaching `delta` within `inv`, by dynamic programming over
// every denomination count. -1 when unreachable.
inline int min_chips(int delta, const holdem::ChipCount& inv) {
  using holdem::Denomination;
  int best = -1;
  for (int h = 0; h <= inv[Denomination::hundred] && 100 * h <= delta; ++h) {
    for (int f = 0; f <= inv[Denomination::fifty] && 100 * h + 50 * f <= delta; ++f) {
      for (int t = 0; t <= inv[Denomination::ten] && 100 * h + 50 * f + 10 * t <= delta; ++t) {
        const int rest = delta - 100 * h - 50 * f - 10 * t;
        if (rest % 5 != 0 || rest / 5 > inv[Denomination::five]) continue;
        const int n = h + f + t + rest / 5;
        if (best < 0 || n < best) best = n;
      }
    }
  }
  return best;
}

struct PolicyTableRow {
  const char* name;
  std::array<int, 4> counts;  // SP DC TF DF
  const char* spsr;
  const char* tcr;
};

// Primitive evaluation outcomes over 80 trials.
inline const std::vector<PolicyTableRow> kPolicyTable{
    {"pi05", {38, 11, 31, 0}, "47.5", "61.2"},       {"pi0", {38, 8, 33, 1}, "47.5", "57.5"},
    {"rdt", {24, 13, 40, 3}, "30.0", "46.2"},        {"dp-dino", {21, 8, 48, 3}, "26.2", "36.2"},
    {"dp-transformer", {11, 5, 46, 18}, "13.8", "20.0"}, {"rdt-small", {11, 3, 59, 7}, "13.8", "17.5"},
    {"act", {8, 4, 67, 1}, "10.0", "15.0"},          {"baku", {5, 5, 67, 3}, "6.2", "12.5"},
    {"dp-unet", {1, 0, 79, 0}, "1.2", "1.2"},
};

struct GroupTableRow {
  const char* name;
  std::array<const char*, 5> cells;  // pickup, push, pull, put-down/show, overall as "SPSR/TCR"
};

// Per-group rates over 20 trials each.
inline const std::vector<GroupTableRow> kGroupTable{
    {"pi05", {"100.0/100.0", "25.0/35.0", "15.0/30.0", "50.0/80.0", "47.5/61.2"}},
    {"pi0", {"100.0/100.0", "25.0/30.0", "15.0/20.0", "50.0/80.0", "47.5/57.5"}},
    {"rdt", {"75.0/80.0", "15.0/25.0", "5.0/10.0", "25.0/70.0", "30.0/46.2"}},
    {"dp-dino", {"50.0/50.0", "25.0/45.0", "10.0/20.0", "20.0/30.0", "26.2/36.2"}},
    {"dp-transformer", {"25.0/25.0", "10.0/15.0", "15.0/20.0", "5.0/20.0", "13.8/20.0"}},
    {"rdt-small", {"25.0/25.0", "15.0/20.0", "5.0/5.0", "10.0/20.0", "13.8/17.5"}},
    {"act", {"25.0/30.0", "5.0/5.0", "0.0/0.0", "10.0/25.0", "10.0/15.0"}},
    {"baku", {"20.0/30.0", "0.0/0.0", "0.0/10.0", "5.0/10.0", "6.2/12.5"}},
    {"dp-unet", {"0.0/0.0", "0.0/0.0", "5.0/5.0", "0.0/0.0", "1.2/1.2"}},
};

struct PerceiverTableRow {
  const char* name;
  std::array<const char*, 8> columns;  // LS TO BI CC CB RCI OCI SO
  const char* avg;
};

inline const std::vector<PerceiverTableRow> kPerceiverTable{
    {"GPT 5.5", {"72.2", "80.6", "100.0", "61.5", "45.8", "62.5", "35.4", "76.2"}, "66.8"},
    {"GPT 5.4", {"65.7", "93.5", "100.0", "23.1", "31.2", "56.2", "18.8", "47.6"}, "54.5"},
    {"GPT 5.4 mini", {"56.5", "94.4", "99.1", "33.3", "14.6", "29.2", "18.8", "47.6"}, "49.2"},
    {"Opus 4.7", {"43.5", "93.5", "100.0", "43.6", "31.2", "37.5", "43.8", "0.0"}, "49.1"},
    {"Sonnet 4.6", {"46.3", "88.0", "100.0", "23.1", "10.4", "29.2", "22.9", "14.3"}, "41.8"},
    {"Haiku 4.5", {"47.2", "68.5", "91.7", "35.9", "12.5", "25.0", "18.8", "0.0"}, "37.4"},
    {"Gemini 3 Flash", {"63.9", "77.8", "100.0", "28.2", "18.8", "29.2", "22.9", "71.4"}, "51.5"},
    {"Gemini 3.1 Flash L.", {"27.8", "73.1", "94.4", "28.2", "12.5", "22.9", "14.6", "0.0"}, "34.2"},
};

// Column applicability of the 36-problem reference set.
inline const std::vector<std::pair<std::string, std::vector<int>>> kApplicability{
    {"CC", {13, 14, 18, 19, 20, 23, 27, 30, 31, 32, 33, 35, 36}},
    {"CB", {9, 11, 13, 14, 18, 19, 20, 23, 26, 27, 30, 31, 32, 33, 35, 36}},
    {"RCI", {9, 11, 13, 14, 18, 19, 20, 23, 26, 27, 30, 31, 32, 33, 35, 36}},
    {"OCI", {9, 11, 13, 14, 18, 19, 20, 23, 26, 27, 30, 31, 32, 33, 35, 36}},
    {"SO", {19, 23, 30, 31, 32, 33, 36}},
};

struct TrajectoryRow {
  const char* file;
  int states, ap, dpp, wa, hl, rc;
  const char* lap;
  const char* ldp;
};

inline const std::vector<TrajectoryRow> kTrajectories{
    {"trajectory_i.labels", 22, 8, 7, 7, 2, 1, "view_card(L)", "pick_up_left"},
    {"trajectory_ii.labels", 54, 13, 22, 26, 0, 1, "collect_winnings", "push_100"},
    {"trajectory_iii.labels", 23, 8, 10, 7, 0, 1, "call", "pick_up_left"},
};

}  // namespace oracle
