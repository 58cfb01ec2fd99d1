// Copyright 2026 The polex Authors.
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


#include <cmath>
#include <cstdio>

#include "polex/eval.h"

namespace polex {
namespace {

std::uint64_t pow10(int decimals) {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  return scale;
}

std::string fixed_from_scaled(std::uint64_t scaled, int decimals) {
  const std::uint64_t scale = pow10(decimals);
  std::string out = std::to_string(scaled / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += '.' + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace

std::string to_string(MetricsMode value) {
  return value == MetricsMode::kPaper ? "PaperMode" : "StandardMode";
}

std::optional<MetricsMode> parse_metrics_mode(std::string_view name) {
  if (name == "PaperMode" || name == "paper") return MetricsMode::kPaper;
  if (name == "StandardMode" || name == "standard") return MetricsMode::kStandard;
  return std::nullopt;
}

std::string Ratio::rounded(int decimals) const {
  if (den == 0) return fixed_from_scaled(0, decimals);
  // floor(num / den * scale + 1/2) in integers.
  const std::uint64_t scaled = (2 * num * pow10(decimals) + den) / (2 * den);
  return fixed_from_scaled(scaled, decimals);
}

std::string format_fixed(double x, int decimals) {
  const double scale = static_cast<double>(pow10(decimals));
  const double r = std::floor(std::fabs(x) * scale + 0.5) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.*f", (x < 0 && r != 0) ? "-" : "", decimals, r);
  return buf;
}

Ratio MetricsReport::precision_ratio() const {
  return mode == MetricsMode::kPaper ? Ratio{counts.tp, counts.tp + counts.fn}
                                     : Ratio{counts.tp, counts.tp + counts.fp};
}

Ratio MetricsReport::recall_ratio() const {
  return mode == MetricsMode::kPaper ? Ratio{counts.tp, counts.tp + counts.fp}
                                     : Ratio{counts.tp, counts.tp + counts.fn};
}

Ratio MetricsReport::accuracy_ratio() const { return {counts.tp, counts.tp + counts.fp + counts.fn}; }

// The harmonic mean of tp/(tp+fn) and tp/(tp+fp) is 2tp/(2tp+fp+fn) in
// either mode.
Ratio MetricsReport::f1_ratio() const { return {2 * counts.tp, 2 * counts.tp + counts.fp + counts.fn}; }

MetricsReport metrics(const ConfusionCounts& counts, MetricsMode mode) {
  MetricsReport r;
  r.mode = mode;
  r.counts = counts;
  r.precision = r.precision_ratio().value();
  r.recall = r.recall_ratio().value();
  r.accuracy = r.accuracy_ratio().value();
  r.f1 = r.f1_ratio().value();
  return r;
}

}  // namespace polex
