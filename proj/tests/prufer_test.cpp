#include "dagcode/prufer.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "dagcode/codec.hpp"

namespace dagcode {
namespace {

LabeledTree tree(std::size_t n, std::vector<Edge> edges) { return LabeledTree::make(n, edges); }

const LabeledTree kPath = tree(3, {{1, 2}, {2, 3}});
const LabeledTree kStar = tree(4, {{1, 2}, {1, 3}, {1, 4}});
const LabeledTree kEdge = tree(2, {{2, 1}});

// All trees on n vertices, found by brute force over (n-1)-edge subsets of
// the complete graph. Independent of the Prufer code.
std::set<std::vector<Edge>> trees_by_subsets(std::size_t n) {
  std::vector<Edge> all;
  for (Label u = 1; u <= n; ++u) {
    for (Label v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  }
  std::set<std::vector<Edge>> out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (mask >> b & 1u) edges.push_back(all[b]);
    }
    try {
      out.insert(LabeledTree::make(n, edges).edges());
    } catch (const NotATree&) {
    }
  }
  return out;
}

TEST(LabeledTreeTest, Validation) {
  EXPECT_THROW(tree(1, {}), NotATree);
  EXPECT_THROW(tree(3, {{1, 2}}), NotATree);
  EXPECT_THROW(tree(4, {{1, 2}, {2, 1}, {3, 4}}), NotATree);
  EXPECT_THROW(tree(4, {{1, 2}, {2, 3}, {3, 1}}), NotATree);
  EXPECT_THROW(tree(3, {{1, 2}, {2, 4}}), LabelOutOfRange);
  EXPECT_THROW(tree(3, {{1, 1}, {2, 3}}), SelfLoop);
  EXPECT_EQ(kEdge.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(PruferEncodeTest, Examples) {
  auto path = prufer_encode(kPath);
  EXPECT_EQ(path.code, (std::vector<Label>{2}));
  EXPECT_EQ(path.removal.labels(), (std::vector<Label>{1, 2, 3}));

  auto star = prufer_encode(kStar);
  EXPECT_EQ(star.code, (std::vector<Label>{1, 1}));
  EXPECT_EQ(star.removal.labels(), (std::vector<Label>{2, 3, 1, 4}));

  auto edge = prufer_encode(kEdge);
  EXPECT_TRUE(edge.code.empty());
  EXPECT_EQ(edge.removal.labels(), (std::vector<Label>{1, 2}));
}

TEST(PruferDecodeTest, Examples) {
  EXPECT_EQ(prufer_decode(3, std::vector<Label>{2}), kPath);
  EXPECT_EQ(prufer_decode(4, std::vector<Label>{1, 1}), kStar);
  EXPECT_EQ(prufer_decode(2, std::vector<Label>{}), kEdge);
}

TEST(PruferDecodeTest, Errors) {
  EXPECT_THROW(prufer_decode(4, std::vector<Label>{1, 5}), LabelOutOfRange);
  EXPECT_THROW(prufer_decode(4, std::vector<Label>{0, 1}), LabelOutOfRange);
  EXPECT_THROW(prufer_decode(4, std::vector<Label>{1}), std::invalid_argument);
}

TEST(OrientTreeTest, Examples) {
  EXPECT_EQ(orient_tree(kPath).edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(orient_tree(kStar).edges(), (std::vector<Edge>{{1, 4}, {2, 1}, {3, 1}}));
  EXPECT_EQ(orient_tree(kEdge).edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(BridgeSequenceTest, Examples) {
  EXPECT_EQ(bridge_sequence(kPath), SetSequence::make(3, {{3}, {2}}));
  EXPECT_EQ(bridge_sequence(kStar), SetSequence::make(4, {{4}, {1}, {1}}));
  EXPECT_EQ(bridge_sequence(kEdge), SetSequence::make(2, {{2}}));
}

// Every tree on n vertices, via all n^(n-2) codes, checked against the
// subset brute force and all bridge properties.
class AllTreesTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AllTreesTest, CodesCoverEveryTreeOnceAndBridgeHolds) {
  const std::size_t n = GetParam();
  std::size_t expected = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) expected *= n;

  std::set<std::vector<Edge>> decoded;
  std::vector<Label> code(n - 2, 1);
  std::size_t codes = 0;
  while (true) {
    ++codes;
    const LabeledTree t = prufer_decode(n, code);
    decoded.insert(t.edges());

    const PruferTrace trace = prufer_encode(t);
    ASSERT_EQ(trace.code, code);
    ASSERT_TRUE(trace.removal.is_permutation());
    ASSERT_LT(trace.removal.at(n - 1), trace.removal.at(n));

    const LabeledDag oriented = orient_tree(t);
    const Label last = trace.removal.at(n);
    for (Label v = 1; v <= n; ++v) ASSERT_EQ(oriented.out_neighbors(v).size(), v == last ? 0u : 1u);
    ASSERT_EQ(minimal_source_sequence(oriented), trace.removal);

    const SetSequence bridge = bridge_sequence(t);
    for (const auto& set : bridge.sets()) ASSERT_EQ(set.size(), 1u);
    ASSERT_EQ(encode(oriented), bridge);

    std::size_t pos = code.size();
    while (pos > 0 && code[pos - 1] == n) code[--pos] = 1;
    if (pos == 0) break;
    ++code[pos - 1];
  }
  EXPECT_EQ(codes, expected);
  EXPECT_EQ(decoded.size(), expected);
  EXPECT_EQ(decoded, trees_by_subsets(n));
}

INSTANTIATE_TEST_SUITE_P(UpToSix, AllTreesTest, ::testing::Values(2, 3, 4, 5, 6));

TEST(PruferPropertyTest, RandomLargeTreesRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 7 + trial % 60;
    std::uniform_int_distribution<Label> label(1, static_cast<Label>(n));
    std::vector<Label> code(n - 2);
    for (auto& a : code) a = label(rng);
    const LabeledTree t = prufer_decode(n, code);
    ASSERT_EQ(prufer_encode(t).code, code);
    ASSERT_EQ(encode(orient_tree(t)), bridge_sequence(t));
  }
}

}  // namespace
}  // namespace dagcode
