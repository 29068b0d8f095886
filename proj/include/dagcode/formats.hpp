#ifndef DAGCODE_FORMATS_HPP
#define DAGCODE_FORMATS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dagcode/graph.hpp"
#include "dagcode/prufer.hpp"

namespace dagcode {

/// Malformed text input. `line()` is 1-based; 0 means the whole input.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parsed DAG file before the acyclicity check, so the caller can report
/// cycles separately from syntax errors.
struct DagInput {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// DAG file:       "n m", then m lines "u v" (edge u -> v).
// Sequence file:  "n", then n-1 lines; line k lists S_k ascending, space
//                 separated; an empty line is the empty set.
// Tree file:      "n", then n-1 lines "u v".
// Labels are 1-based decimal, lines end in LF. A missing final LF is
// accepted; anything after the last expected line is not.

/// Rejects bad syntax, labels outside 1..n, self-loops and duplicate edges.
/// Does not check acyclicity.
DagInput parse_dag_input(std::string_view text);

/// parse_dag_input followed by LabeledDag::make (may throw CyclicGraph).
LabeledDag parse_dag_file(std::string_view text);

/// Requires strictly ascending elements within each line.
SetSequence parse_seq_file(std::string_view text);

/// Throws FormatError for syntax, NotATree / LabelOutOfRange / SelfLoop for
/// structural problems.
LabeledTree parse_tree_file(std::string_view text);

/// Canonical forms: edges sorted by (u, v), single spaces, LF endings.
std::string to_dag_file(const LabeledDag& g);
std::string to_seq_file(const SetSequence& s);
std::string to_tree_file(const LabeledTree& t);

}  // namespace dagcode

#endif  // DAGCODE_FORMATS_HPP
