#include "dagcode/prufer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

namespace dagcode {

namespace {

using MinHeap = std::priority_queue<Label, std::vector<Label>, std::greater<>>;

// Union-find just large enough for a connectivity check.
struct Components {
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

LabeledTree LabeledTree::make(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) throw NotATree("need at least 2 vertices, got " + std::to_string(n));
  if (edges.size() != n - 1) {
    throw NotATree("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  }

  LabeledTree t;
  t.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 1 || u > n) throw LabelOutOfRange(u, n);
    if (v < 1 || v > n) throw LabelOutOfRange(v, n);
    if (u == v) throw SelfLoop(u);
    t.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  if (std::adjacent_find(t.edges_.begin(), t.edges_.end()) != t.edges_.end()) {
    throw NotATree("duplicate edge");
  }

  // n - 1 distinct edges and no cycle means connected.
  Components components(n);
  for (auto [u, v] : t.edges_) {
    if (!components.unite(u - 1, v - 1)) throw NotATree("disconnected");
  }
  return t;
}

std::vector<LabelSet> LabeledTree::adjacency() const {
  std::vector<LabelSet> adj(n_);
  for (auto [u, v] : edges_) {
    adj[u - 1].push_back(v);
    adj[v - 1].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

PruferTrace prufer_encode(const LabeledTree& t) {
  const std::size_t n = t.size();
  const auto adj = t.adjacency();

  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  MinHeap leaves;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = adj[i].size();
    if (degree[i] == 1) leaves.push(static_cast<Label>(i + 1));
  }

  PruferTrace trace;
  std::vector<Label> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step + 2 < n; ++step) {
    const Label leaf = leaves.top();
    leaves.pop();
    removed[leaf - 1] = true;
    removal.push_back(leaf);

    // The one neighbor still present.
    const Label parent = *std::find_if(adj[leaf - 1].begin(), adj[leaf - 1].end(),
                                       [&](Label x) { return !removed[x - 1]; });
    trace.code.push_back(parent);
    if (--degree[parent - 1] == 1) leaves.push(parent);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) removal.push_back(static_cast<Label>(i + 1));
  }
  trace.removal = SourceOrder(std::move(removal));
  return trace;
}

LabeledTree prufer_decode(std::size_t n, std::span<const Label> code) {
  if (n < 2) throw NotATree("need at least 2 vertices, got " + std::to_string(n));
  if (code.size() != n - 2) {
    throw std::invalid_argument("Prufer code for n = " + std::to_string(n) + " must have length " +
                                std::to_string(n - 2));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Label a : code) {
    if (a < 1 || a > n) throw LabelOutOfRange(a, n);
    ++degree[a - 1];
  }

  MinHeap leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) leaves.push(static_cast<Label>(i + 1));
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Label a : code) {
    const Label leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, a);
    if (--degree[a - 1] == 1) leaves.push(a);
  }
  const Label u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return LabeledTree::make(n, edges);
}

LabeledDag orient_tree(const LabeledTree& t) {
  const auto position = prufer_encode(t).removal.positions();
  std::vector<Edge> arcs;
  arcs.reserve(t.edges().size());
  for (auto [u, v] : t.edges()) {
    if (position[u - 1] < position[v - 1]) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return LabeledDag::make(t.size(), arcs);
}

SetSequence bridge_sequence(const LabeledTree& t) {
  const std::size_t n = t.size();
  const PruferTrace trace = prufer_encode(t);

  std::vector<LabelSet> sets(n - 1);
  sets[0] = {trace.removal.at(n)};
  for (std::size_t i = 1; i + 2 <= n; ++i) sets[n - i - 1] = {trace.code[i - 1]};
  return SetSequence::make(n, std::move(sets));
}

}  // namespace dagcode
