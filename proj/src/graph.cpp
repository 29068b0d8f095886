#include "dagcode/graph.hpp"

#include <algorithm>
#include <sstream>

#include "peel.hpp"

namespace dagcode {

namespace {

std::string join_labels(const std::vector<Label>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ' ';
    os << labels[i];
  }
  return os.str();
}

void check_label(Label label, std::size_t n) {
  if (label < 1 || label > n) throw LabelOutOfRange(label, n);
}

}  // namespace

LabelOutOfRange::LabelOutOfRange(Label label, std::size_t n)
    : std::invalid_argument("label " + std::to_string(label) + " is outside 1.." + std::to_string(n)),
      label_(label) {}

SelfLoop::SelfLoop(Label label)
    : std::invalid_argument("self-loop on vertex " + std::to_string(label)), label_(label) {}

CyclicGraph::CyclicGraph(std::vector<Label> stuck)
    : std::invalid_argument("graph has a directed cycle; no source among {" + join_labels(stuck) + "}"),
      stuck_(std::move(stuck)) {}

// -----------------------------------------------------------------------------
// LabeledDag
// -----------------------------------------------------------------------------

LabeledDag LabeledDag::make(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw std::invalid_argument("a DAG needs at least one vertex");

  LabeledDag g;
  g.out_.resize(n);
  for (const auto& [u, v] : edges) {
    check_label(u, n);
    check_label(v, n);
    if (u == v) throw SelfLoop(u);
    g.out_[u - 1].push_back(v);
  }
  for (auto& targets : g.out_) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }

  const auto order = detail::peel_smallest_sources(g.out_);
  if (order.size() != n) throw CyclicGraph(detail::unpeeled(n, order));

  for (std::size_t i = 0; i < n; ++i) {
    for (Label v : g.out_[i]) g.edges_.emplace_back(static_cast<Label>(i + 1), v);
  }
  return g;
}

bool LabeledDag::has_edge(Label u, Label v) const {
  const auto& targets = out_neighbors(u);
  return std::binary_search(targets.begin(), targets.end(), v);
}

// -----------------------------------------------------------------------------
// SetSequence
// -----------------------------------------------------------------------------

SetSequence SetSequence::make(std::size_t n, std::vector<LabelSet> sets) {
  if (n == 0) throw std::invalid_argument("a set sequence needs n >= 1");
  if (sets.size() != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) + " sets for n = " + std::to_string(n) +
                                ", got " + std::to_string(sets.size()));
  }
  for (auto& set : sets) {
    for (Label x : set) check_label(x, n);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  SetSequence s;
  s.n_ = n;
  s.sets_ = std::move(sets);
  return s;
}

std::size_t SetSequence::total_size() const noexcept {
  std::size_t total = 0;
  for (const auto& set : sets_) total += set.size();
  return total;
}

// -----------------------------------------------------------------------------
// SourceOrder
// -----------------------------------------------------------------------------

std::vector<std::size_t> SourceOrder::positions() const {
  std::vector<std::size_t> pos(order_.size(), 0);
  for (std::size_t i = 0; i < order_.size(); ++i) pos.at(order_[i] - 1) = i + 1;
  return pos;
}

bool SourceOrder::is_permutation() const {
  std::vector<bool> seen(order_.size(), false);
  for (Label u : order_) {
    if (u < 1 || u > order_.size() || seen[u - 1]) return false;
    seen[u - 1] = true;
  }
  return true;
}

bool SourceOrder::is_topological_for(const LabeledDag& g) const {
  if (order_.size() != g.size() || !is_permutation()) return false;
  const auto pos = positions();
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return pos[e.first - 1] < pos[e.second - 1]; });
}

// -----------------------------------------------------------------------------
// Operations
// -----------------------------------------------------------------------------

bool is_acyclic(std::size_t n, std::span<const Edge> edges) {
  std::vector<LabelSet> out(n);
  for (const auto& [u, v] : edges) out[u - 1].push_back(v);
  for (auto& targets : out) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  return detail::peel_smallest_sources(out).size() == n;
}

SourceOrder minimal_source_sequence(const LabeledDag& g) {
  return SourceOrder(detail::peel_smallest_sources(g.adjacency()));
}

std::optional<std::size_t> first_violation(const SetSequence& s) {
  std::vector<bool> in_union(s.size(), false);
  std::size_t union_size = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    for (Label x : s.at(k)) {
      if (!in_union[x - 1]) {
        in_union[x - 1] = true;
        ++union_size;
      }
    }
    if (union_size > k) return k;
  }
  return std::nullopt;
}

}  // namespace dagcode
