// Copyright 2026 The pwconc Authors
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

#include <vector>

namespace pwconc::quad {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Computes the rule by Newton iteration on P_n. Results are exact to a few ulp.
Rule gauss_legendre(int n);

/// Shared 20-point rule used by the composite integrators.
const Rule& default_rule();

/// Points per panel of the composite rule.
inline constexpr int kPanelPoints = 20;

/// Nodes/weights of the composite rule with `panels` equal panels on [a, b].
Rule composite_nodes(double a, double b, int panels, const Rule& base = default_rule());

/// Composite Gauss-Legendre integral of f over [a, b] with `panels` equal panels.
template <class F>
double composite(F&& f, double a, double b, int panels, const Rule& base = default_rule()) {
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel_sum = 0.0;
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
      panel_sum += base.weights[i] * f(mid + half * base.nodes[i]);
    }
    total += panel_sum * half;
  }
  return total;
}

}  // namespace pwconc::quad
