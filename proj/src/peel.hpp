#ifndef DAGCODE_SRC_PEEL_HPP
#define DAGCODE_SRC_PEEL_HPP

#include <functional>
#include <queue>
#include <vector>

#include "dagcode/graph.hpp"

namespace dagcode::detail {

// Kahn's algorithm with a min-heap on labels: always removes the smallest
// current source. Returns the removal order; it is shorter than n exactly
// when the graph has a directed cycle.
inline std::vector<Label> peel_smallest_sources(const std::vector<LabelSet>& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& targets : out) {
    for (Label v : targets) ++in_degree[v - 1];
  }

  std::priority_queue<Label, std::vector<Label>, std::greater<>> sources;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_degree[i] == 0) sources.push(static_cast<Label>(i + 1));
  }

  std::vector<Label> order;
  order.reserve(n);
  while (!sources.empty()) {
    const Label u = sources.top();
    sources.pop();
    order.push_back(u);
    for (Label v : out[u - 1]) {
      if (--in_degree[v - 1] == 0) sources.push(v);
    }
  }
  return order;
}

// Vertices not in `order`, ascending.
inline std::vector<Label> unpeeled(std::size_t n, const std::vector<Label>& order) {
  std::vector<bool> seen(n, false);
  for (Label u : order) seen[u - 1] = true;
  std::vector<Label> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) rest.push_back(static_cast<Label>(i + 1));
  }
  return rest;
}

}  // namespace dagcode::detail

#endif  // DAGCODE_SRC_PEEL_HPP
