#ifndef DAGCODE_CODEC_HPP
#define DAGCODE_CODEC_HPP

#include <cstddef>
#include <stdexcept>

#include "dagcode/graph.hpp"

namespace dagcode {

/// The sequence breaks the prefix-union bound at `k()`.
class InvalidSequence : public std::invalid_argument {
 public:
  explicit InvalidSequence(std::size_t k);
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// Encodes `g` as S_1..S_{n-1}, where S_{n-i} is the out-neighbor set of
/// the i-th vertex of its minimal source sequence. The last vertex of that
/// sequence is a sink and contributes nothing.
SetSequence encode(const LabeledDag& g);

/// Vertex order w_1..w_n rebuilt from a valid sequence: w_j is the smallest
/// label not yet placed and absent from S_1 ∪ ... ∪ S_{n-j}.
/// Throws InvalidSequence when `s` violates the prefix-union bound.
SourceOrder decode_order(const SetSequence& s);

/// The unique DAG whose encoding is `s`: w_i gets out-neighbors S_{n-i}.
/// Throws InvalidSequence when `s` violates the prefix-union bound.
LabeledDag decode(const SetSequence& s);

}  // namespace dagcode

#endif  // DAGCODE_CODEC_HPP
