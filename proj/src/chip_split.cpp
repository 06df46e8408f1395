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

#include "holdem/chip_split.hpp"

#include <algorithm>

#include "holdem/errors.hpp"

namespace holdem {

// Each denomination divides the next larger one, so taking as many large
// chips as the inventory allows is both feasible whenever any split is and
// minimal in count.
std::optional<ChipCount> try_split(int delta, const ChipCount& inventory) {
  if (delta < 0 || delta % 5 != 0) return std::nullopt;
  ChipCount out;
  int rest = delta;
  for (auto d : kDescending) {
    const int take = std::min(rest / value_of(d), std::max(inventory[d], 0));
    out[d] = take;
    rest -= take * value_of(d);
  }
  if (rest != 0) return std::nullopt;
  return out;
}

std::vector<Denomination> split_chips(int delta, const ChipCount& inventory) {
  auto counts = try_split(delta, inventory);
  if (!counts) {
    throw Error(Errc::not_representable, "cannot pay " + std::to_string(delta) + " from inventory worth " +
                                             std::to_string(inventory.value()));
  }
  std::vector<Denomination> out;
  for (auto d : kDescending) out.insert(out.end(), static_cast<std::size_t>((*counts)[d]), d);
  return out;
}

ChipCount to_counts(const std::vector<Denomination>& chips) {
  ChipCount c;
  for (auto d : chips) ++c[d];
  return c;
}

}  // namespace holdem
