#ifndef DAGCODE_COUNTING_HPP
#define DAGCODE_COUNTING_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dagcode/graph.hpp"

namespace dagcode {

/// Exact nonnegative integer for DAG counts.
using BigCount = boost::multiprecision::cpp_int;

/// C(n, k) by the multiplicative formula, exact.
BigCount binomial(std::size_t n, std::size_t k);

/// Memo of a_0..a_N from Robinson's recurrence
///
///   a_n = sum_{k=1..n} (-1)^{k-1} C(n,k) 2^{k(n-k)} a_{n-k},   a_0 = 1.
///
/// The table is owned by the caller and is not synchronized; share one per
/// thread or guard it externally.
class CountTable {
 public:
  CountTable() : values_{BigCount(1)} {}

  /// a_n, extending the table as needed. References stay valid as the
  /// table grows.
  const BigCount& at(std::size_t n);

  /// Number of entries computed so far (a_0 is always present).
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::deque<BigCount> values_;
};

/// a_n, the number of DAGs on n labeled vertices. Uses a fresh table.
BigCount robinson_count(std::size_t n);

// -----------------------------------------------------------------------------
// Brute-force oracles, 1 <= n <= kMaxEnumeration. Both throw std::out_of_range
// outside that window.
// -----------------------------------------------------------------------------

inline constexpr std::size_t kMaxEnumeration = 5;

/// Visits every DAG on {1..n} exactly once. Candidate edge sets are bitmasks
/// over the n(n-1) ordered pairs (u, v), u != v, taken in lexicographic pair
/// order; masks are scanned in ascending order and cyclic ones skipped.
void for_each_dag(std::size_t n, const std::function<void(const LabeledDag&)>& visit);

/// Same as for_each_dag restricted to masks in [first_mask, last_mask).
/// Disjoint ranges can be scanned independently.
void for_each_dag(std::size_t n, std::uint64_t first_mask, std::uint64_t last_mask,
                  const std::function<void(const LabeledDag&)>& visit);

/// 2^{n(n-1)}, the number of candidate masks.
std::uint64_t dag_mask_count(std::size_t n);

std::vector<LabeledDag> enumerate_dags(std::size_t n);

enum class SequenceSearch {
  kPruned,      // cut a branch as soon as the running union exceeds k
  kFilterOnly,  // generate all (2^n)^{n-1} sequences, then filter
};

/// Visits every valid sequence on {1..n}, lexicographically by subset
/// bitmask at each position. Both search modes produce the same stream.
void for_each_sequence(std::size_t n, const std::function<void(const SetSequence&)>& visit,
                       SequenceSearch search = SequenceSearch::kPruned);

std::vector<SetSequence> enumerate_sequences(std::size_t n, SequenceSearch search = SequenceSearch::kPruned);

}  // namespace dagcode

#endif  // DAGCODE_COUNTING_HPP
