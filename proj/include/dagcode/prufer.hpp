#ifndef DAGCODE_PRUFER_HPP
#define DAGCODE_PRUFER_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dagcode/graph.hpp"

namespace dagcode {

class NotATree : public std::invalid_argument {
 public:
  explicit NotATree(const std::string& why) : std::invalid_argument("not a tree: " + why) {}
};

/// A tree on {1..n}, n >= 2. Edges are unordered; they are stored as
/// (min, max) pairs, sorted.
class LabeledTree {
 public:
  /// Throws LabelOutOfRange, SelfLoop, or NotATree (n < 2, duplicate
  /// edge, wrong edge count, disconnected).
  static LabeledTree make(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbor lists indexed by label - 1, each ascending.
  std::vector<LabelSet> adjacency() const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  LabeledTree() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Result of the leaf-removal process.
struct PruferTrace {
  /// a_1..a_{n-2}: the neighbor of each removed leaf.
  std::vector<Label> code;
  /// v_1..v_n: removed leaves in order, then the two survivors, smaller first.
  SourceOrder removal;
};

/// Repeatedly deletes the smallest-label leaf.
PruferTrace prufer_encode(const LabeledTree& t);

/// Inverse of prufer_encode(t).code. `code` must have length n-2 with every
/// entry in 1..n (LabelOutOfRange otherwise); n >= 2.
LabeledTree prufer_decode(std::size_t n, std::span<const Label> code);

/// Directs each tree edge from the endpoint removed earlier to the one
/// removed later. Every vertex but v_n ends with out-degree 1.
LabeledDag orient_tree(const LabeledTree& t);

/// The singleton sequence predicted for encode(orient_tree(t)):
/// S_1 = {v_n} and S_{n-i} = {a_i} for 1 <= i <= n-2.
SetSequence bridge_sequence(const LabeledTree& t);

}  // namespace dagcode

#endif  // DAGCODE_PRUFER_HPP
