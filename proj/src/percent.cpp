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

#include "holdem/percent.hpp"

#include <charconv>

#include "holdem/errors.hpp"

namespace holdem {

Ratio percent_of(std::int64_t num, std::int64_t den) { return Ratio(num * 100, den); }

std::int64_t round_tenths(Ratio percent) {
  const Ratio scaled = percent * 10;
  const std::int64_t n = scaled.numerator();
  const std::int64_t d = scaled.denominator();  // always positive
  std::int64_t q = n / d;
  std::int64_t r = n % d;
  if (r < 0) {
    r += d;
    --q;
  }
  if (2 * r > d || (2 * r == d && q % 2 != 0)) ++q;
  return q;
}

std::string format_percent(Ratio percent) {
  const std::int64_t t = round_tenths(percent);
  const std::int64_t mag = t < 0 ? -t : t;
  return std::string(t < 0 ? "-" : "") + std::to_string(mag / 10) + "." + std::to_string(mag % 10);
}

Ratio parse_decimal(std::string_view text) {
  auto bad = [&] { return Error(Errc::malformed_document, "bad decimal '" + std::string(text) + "'"); };
  const bool neg = !text.empty() && text.front() == '-';
  if (neg) text.remove_prefix(1);
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() || frac.size() > 9) throw bad();
  std::int64_t w = 0, f = 0, scale = 1;
  if (std::from_chars(whole.data(), whole.data() + whole.size(), w).ptr != whole.data() + whole.size()) throw bad();
  if (!frac.empty() && std::from_chars(frac.data(), frac.data() + frac.size(), f).ptr != frac.data() + frac.size()) {
    throw bad();
  }
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const Ratio v = Ratio(w) + Ratio(f, scale);
  return neg ? -v : v;
}

}  // namespace holdem
