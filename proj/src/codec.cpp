#include "dagcode/codec.hpp"

#include <cassert>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace dagcode {

InvalidSequence::InvalidSequence(std::size_t k)
    : std::invalid_argument("prefix-union bound violated at k=" + std::to_string(k)), k_(k) {}

SetSequence encode(const LabeledDag& g) {
  const std::size_t n = g.size();
  const SourceOrder order = minimal_source_sequence(g);
  assert(order.size() == n);
  assert(g.out_neighbors(order.at(n)).empty());

  std::vector<LabelSet> sets(n - 1);
  for (std::size_t i = 1; i < n; ++i) sets[n - i - 1] = g.out_neighbors(order.at(i));
  return SetSequence::make(n, std::move(sets));
}

SourceOrder decode_order(const SetSequence& s) {
  if (const auto k = first_violation(s)) throw InvalidSequence(*k);

  const std::size_t n = s.size();

  // A label x first appearing in S_f stays blocked while S_f is inside the
  // union S_1..S_{n-j}, i.e. for j <= n - f. It becomes selectable at step
  // n - f + 1. Labels that appear nowhere are selectable from step 1.
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first(n, kNever);
  for (std::size_t k = 1; k < n; ++k) {
    for (Label x : s.at(k)) {
      if (first[x - 1] == kNever) first[x - 1] = k;
    }
  }

  std::vector<std::vector<Label>> released_at(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t step = first[i] == kNever ? 1 : n - first[i] + 1;
    released_at[step].push_back(static_cast<Label>(i + 1));
  }

  std::priority_queue<Label, std::vector<Label>, std::greater<>> available;
  std::vector<Label> order;
  order.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    for (Label x : released_at[j]) available.push(x);
    // Nonempty because the prefix-union bound holds.
    assert(!available.empty());
    order.push_back(available.top());
    available.pop();
  }
  return SourceOrder(std::move(order));
}

LabeledDag decode(const SetSequence& s) {
  const std::size_t n = s.size();
  const SourceOrder order = decode_order(s);

  std::vector<Edge> edges;
  edges.reserve(s.total_size());
  for (std::size_t i = 1; i < n; ++i) {
    const Label from = order.at(i);
    for (Label to : s.at(n - i)) edges.emplace_back(from, to);
  }
  return LabeledDag::make(n, edges);
}

}  // namespace dagcode
