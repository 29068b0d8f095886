#include "dagcode/counting.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace dagcode {

namespace {

void check_enumeration_size(std::size_t n) {
  if (n < 1 || n > kMaxEnumeration) {
    throw std::out_of_range("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumeration) + ", got " +
                            std::to_string(n));
  }
}

std::vector<Edge> ordered_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Label u = 1; u <= n; ++u) {
    for (Label v = 1; v <= n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

// Peels sources on bitmasks; pred[v] holds the predecessors of vertex v.
bool acyclic_by_mask(const std::vector<std::uint32_t>& pred) {
  const std::size_t n = pred.size();
  std::uint32_t remaining = (1u << n) - 1;
  while (remaining) {
    bool found = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((remaining & bit) && (pred[v] & remaining) == 0) {
        remaining &= ~bit;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

LabelSet mask_to_set(std::uint32_t mask) {
  LabelSet set;
  for (Label x = 1; mask; ++x, mask >>= 1) {
    if (mask & 1u) set.push_back(x);
  }
  return set;
}

void search_pruned(std::size_t n, std::size_t k, std::uint32_t union_mask, std::vector<std::uint32_t>& chosen,
                   const std::function<void(const SetSequence&)>& visit) {
  if (k == n) {
    std::vector<LabelSet> sets;
    sets.reserve(chosen.size());
    for (auto mask : chosen) sets.push_back(mask_to_set(mask));
    visit(SetSequence::make(n, std::move(sets)));
    return;
  }
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const std::uint32_t next_union = union_mask | mask;
    if (static_cast<std::size_t>(std::popcount(next_union)) > k) continue;
    chosen.push_back(mask);
    search_pruned(n, k + 1, next_union, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace

// -----------------------------------------------------------------------------
// Robinson's recurrence
// -----------------------------------------------------------------------------

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  // After step i the accumulator is C(n - k + i, i), so each division is exact.
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

const BigCount& CountTable::at(std::size_t n) {
  while (values_.size() <= n) {
    const std::size_t m = values_.size();
    BigCount sum = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      BigCount term = binomial(m, k) * values_[m - k];
      term <<= k * (m - k);
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    values_.push_back(std::move(sum));
  }
  return values_[n];
}

BigCount robinson_count(std::size_t n) {
  CountTable table;
  return table.at(n);
}

// -----------------------------------------------------------------------------
// DAG enumeration
// -----------------------------------------------------------------------------

std::uint64_t dag_mask_count(std::size_t n) {
  check_enumeration_size(n);
  return std::uint64_t{1} << (n * (n - 1));
}

void for_each_dag(std::size_t n, std::uint64_t first_mask, std::uint64_t last_mask,
                  const std::function<void(const LabeledDag&)>& visit) {
  const std::uint64_t total = dag_mask_count(n);
  if (first_mask > last_mask || last_mask > total) throw std::out_of_range("mask range outside candidate space");

  const auto pairs = ordered_pairs(n);
  std::vector<std::uint32_t> pred(n);
  std::vector<Edge> edges;
  for (std::uint64_t mask = first_mask; mask < last_mask; ++mask) {
    std::fill(pred.begin(), pred.end(), 0u);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) pred[pairs[b].second - 1] |= 1u << (pairs[b].first - 1);
    }
    if (!acyclic_by_mask(pred)) continue;

    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    }
    visit(LabeledDag::make(n, edges));
  }
}

void for_each_dag(std::size_t n, const std::function<void(const LabeledDag&)>& visit) {
  for_each_dag(n, 0, dag_mask_count(n), visit);
}

std::vector<LabeledDag> enumerate_dags(std::size_t n) {
  std::vector<LabeledDag> out;
  for_each_dag(n, [&](const LabeledDag& g) { out.push_back(g); });
  return out;
}

// -----------------------------------------------------------------------------
// Sequence enumeration
// -----------------------------------------------------------------------------

void for_each_sequence(std::size_t n, const std::function<void(const SetSequence&)>& visit,
                       SequenceSearch search) {
  check_enumeration_size(n);

  if (search == SequenceSearch::kPruned) {
    std::vector<std::uint32_t> chosen;
    search_pruned(n, 1, 0, chosen, visit);
    return;
  }

  // Odometer over n-1 digits in base 2^n, most significant digit first.
  const std::uint32_t base = 1u << n;
  std::vector<std::uint32_t> digits(n - 1, 0);
  while (true) {
    std::vector<LabelSet> sets;
    sets.reserve(digits.size());
    for (auto mask : digits) sets.push_back(mask_to_set(mask));
    auto s = SetSequence::make(n, std::move(sets));
    if (validate_sequence(s)) visit(s);

    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == base) {
      digits[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
}

std::vector<SetSequence> enumerate_sequences(std::size_t n, SequenceSearch search) {
  std::vector<SetSequence> out;
  for_each_sequence(n, [&](const SetSequence& s) { out.push_back(s); }, search);
  return out;
}

}  // namespace dagcode
