#ifndef DAGCODE_GRAPH_HPP
#define DAGCODE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dagcode {

/// Vertex label, 1-based at every API boundary.
using Label = std::uint32_t;

/// Directed edge (from, to).
using Edge = std::pair<Label, Label>;

/// Subset of {1..n}, kept as a strictly increasing list.
using LabelSet = std::vector<Label>;

// =============================================================================
// Errors
// =============================================================================

class LabelOutOfRange : public std::invalid_argument {
 public:
  LabelOutOfRange(Label label, std::size_t n);
  Label label() const noexcept { return label_; }

 private:
  Label label_;
};

class SelfLoop : public std::invalid_argument {
 public:
  explicit SelfLoop(Label label);
  Label label() const noexcept { return label_; }

 private:
  Label label_;
};

/// Thrown when source peeling stalls. `stuck()` holds every vertex left
/// unpeeled, ascending; each of them lies on or behind a directed cycle.
class CyclicGraph : public std::invalid_argument {
 public:
  explicit CyclicGraph(std::vector<Label> stuck);
  const std::vector<Label>& stuck() const noexcept { return stuck_; }

 private:
  std::vector<Label> stuck_;
};

// =============================================================================
// LabeledDag
// =============================================================================

/// A directed acyclic graph on the vertex set {1..n}.
///
/// Instances only come out of `make` (or the codec), so every live object
/// has in-range labels, no self-loops, no duplicate edges and no cycles.
/// Edges are stored sorted lexicographically, which makes `operator==` the
/// canonical (n, sorted edge set) comparison.
class LabeledDag {
 public:
  /// Validates and builds. Duplicate edges collapse silently.
  /// Throws std::invalid_argument for n == 0, LabelOutOfRange, SelfLoop
  /// or CyclicGraph.
  static LabeledDag make(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// All edges, sorted by (from, to).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Out-neighbors of `u`, ascending. `u` must be in 1..n.
  const LabelSet& out_neighbors(Label u) const { return out_.at(u - 1); }

  /// Out-neighbor lists indexed by label - 1.
  const std::vector<LabelSet>& adjacency() const noexcept { return out_; }

  bool has_edge(Label u, Label v) const;

  friend bool operator==(const LabeledDag&, const LabeledDag&) = default;

 private:
  LabeledDag() = default;

  std::vector<LabelSet> out_;
  std::vector<Edge> edges_;
};

/// Shorthand for LabeledDag::make.
inline LabeledDag make_dag(std::size_t n, std::span<const Edge> edges) {
  return LabeledDag::make(n, edges);
}

// =============================================================================
// SetSequence
// =============================================================================

/// The sets S_1..S_{n-1} over {1..n}. S_0 is always empty and never stored.
///
/// Structural well-formedness (set count, element range) is enforced here;
/// the prefix-union bound is a separate check, see `validate_sequence`.
class SetSequence {
 public:
  /// Sorts and deduplicates each set. Throws std::invalid_argument for
  /// n == 0 or a set count other than n-1, LabelOutOfRange otherwise.
  static SetSequence make(std::size_t n, std::vector<LabelSet> sets);

  std::size_t size() const noexcept { return n_; }

  /// S_k for k in 1..n-1.
  const LabelSet& at(std::size_t k) const { return sets_.at(k - 1); }

  /// S_1..S_{n-1} in order.
  const std::vector<LabelSet>& sets() const noexcept { return sets_; }

  /// Sum of |S_k|.
  std::size_t total_size() const noexcept;

  friend bool operator==(const SetSequence&, const SetSequence&) = default;

 private:
  SetSequence() = default;

  std::size_t n_ = 0;
  std::vector<LabelSet> sets_;
};

// =============================================================================
// SourceOrder
// =============================================================================

/// A vertex ordering u_1..u_n, a permutation of {1..n}.
class SourceOrder {
 public:
  SourceOrder() = default;
  explicit SourceOrder(std::vector<Label> order) : order_(std::move(order)) {}

  std::size_t size() const noexcept { return order_.size(); }

  /// u_i for i in 1..n.
  Label at(std::size_t i) const { return order_.at(i - 1); }

  const std::vector<Label>& labels() const noexcept { return order_; }

  /// pos[label - 1] = i such that u_i == label (1-based).
  std::vector<std::size_t> positions() const;

  bool is_permutation() const;

  /// True iff every edge of `g` points from an earlier to a later position.
  bool is_topological_for(const LabeledDag& g) const;

  friend bool operator==(const SourceOrder&, const SourceOrder&) = default;

 private:
  std::vector<Label> order_;
};

// =============================================================================
// Operations
// =============================================================================

/// Expects in-range labels and no self-loops.
bool is_acyclic(std::size_t n, std::span<const Edge> edges);

/// Repeatedly removes the smallest-label source.
SourceOrder minimal_source_sequence(const LabeledDag& g);

/// First k in 1..n-1 with |S_1 ∪ ... ∪ S_k| > k, if any.
std::optional<std::size_t> first_violation(const SetSequence& s);

/// True iff |S_1 ∪ ... ∪ S_k| <= k for every k in 1..n-1.
inline bool validate_sequence(const SetSequence& s) { return !first_violation(s).has_value(); }

}  // namespace dagcode

#endif  // DAGCODE_GRAPH_HPP
