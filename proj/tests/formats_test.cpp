#include "dagcode/formats.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dagcode/codec.hpp"
#include "test_support.hpp"

namespace dagcode {
namespace {

TEST(DagFileTest, ParsesAndCanonicalizes) {
  const auto g = parse_dag_file("3 2\n2 3\n1 3\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 3}, {2, 3}}));
  EXPECT_EQ(to_dag_file(g), "3 2\n1 3\n2 3\n");
  EXPECT_EQ(to_dag_file(parse_dag_file("1 0\n")), "1 0\n");
}

TEST(DagFileTest, MissingFinalNewlineAccepted) {
  EXPECT_EQ(to_dag_file(parse_dag_file("2 1\n1 2")), "2 1\n1 2\n");
}

TEST(DagFileTest, Errors) {
  EXPECT_THROW(parse_dag_file(""), FormatError);
  EXPECT_THROW(parse_dag_file("0 0\n"), FormatError);
  EXPECT_THROW(parse_dag_file("3 2\n1 2\n"), FormatError);         // too few lines
  EXPECT_THROW(parse_dag_file("3 1\n1 2\n2 3\n"), FormatError);    // too many lines
  EXPECT_THROW(parse_dag_file("3 1\n1 4\n"), FormatError);         // range
  EXPECT_THROW(parse_dag_file("3 1\n1 x\n"), FormatError);
  EXPECT_THROW(parse_dag_file("3 1\n1 2 3\n"), FormatError);
  EXPECT_THROW(parse_dag_file("3 1\n-1 2\n"), FormatError);
  EXPECT_THROW(parse_dag_file("2 2\n1 2\n2 1\n"), CyclicGraph);
}

TEST(DagFileTest, SelfLoopAndDuplicateHaveDistinctMessages) {
  std::string self_loop;
  std::string duplicate;
  try {
    parse_dag_input("3 1\n2 2\n");
  } catch (const FormatError& e) {
    self_loop = e.what();
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_dag_input("3 3\n1 2\n2 3\n1 2\n");
  } catch (const FormatError& e) {
    duplicate = e.what();
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_NE(self_loop.find("self-loop"), std::string::npos);
  EXPECT_NE(duplicate.find("duplicate"), std::string::npos);
}

TEST(SeqFileTest, ParsesAndSerializes) {
  const auto s = parse_seq_file("3\n3\n3\n");
  EXPECT_EQ(s, SetSequence::make(3, {{3}, {3}}));
  EXPECT_EQ(to_seq_file(s), "3\n3\n3\n");
  EXPECT_EQ(to_seq_file(parse_seq_file("1\n")), "1\n");
  EXPECT_EQ(parse_seq_file("2\n\n"), SetSequence::make(2, {{}}));
  EXPECT_EQ(to_seq_file(SetSequence::make(4, {{}, {1, 3}, {}})), "4\n\n1 3\n\n");
}

TEST(SeqFileTest, Errors) {
  EXPECT_THROW(parse_seq_file("3\n3\n"), FormatError);          // missing line
  EXPECT_THROW(parse_seq_file("2\n"), FormatError);             // empty set needs its own line
  EXPECT_THROW(parse_seq_file("2\n1\n\n"), FormatError);        // trailing extra line
  EXPECT_THROW(parse_seq_file("3\n2 1\n\n"), FormatError);      // descending
  EXPECT_THROW(parse_seq_file("3\n1 1\n\n"), FormatError);      // repeated
  EXPECT_THROW(parse_seq_file("3\n4\n\n"), FormatError);        // range
  EXPECT_THROW(parse_seq_file("0\n"), FormatError);
}

TEST(SeqFileTest, InvalidSequenceStillParses) {
  // The prefix-union bound is checked by the caller, not the parser.
  EXPECT_FALSE(validate_sequence(parse_seq_file("2\n1 2\n")));
}

TEST(TreeFileTest, ParsesAndValidates) {
  const auto t = parse_tree_file("3\n2 1\n3 2\n");
  EXPECT_EQ(to_tree_file(t), "3\n1 2\n2 3\n");
  EXPECT_THROW(parse_tree_file("3\n1 2\n"), FormatError);
  EXPECT_THROW(parse_tree_file("4\n1 2\n2 1\n3 4\n"), NotATree);
  EXPECT_THROW(parse_tree_file("1\n"), NotATree);
}

TEST(FormatPropertyTest, CanonicalTextRoundTrips) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_dag(1 + trial % 14, rng);
    const std::string dag_text = to_dag_file(g);
    const std::string seq_text = to_seq_file(encode(g));
    ASSERT_EQ(to_dag_file(parse_dag_file(dag_text)), dag_text);
    ASSERT_EQ(to_seq_file(parse_seq_file(seq_text)), seq_text);
    ASSERT_EQ(to_dag_file(decode(parse_seq_file(seq_text))), dag_text);
  }
}

}  // namespace
}  // namespace dagcode
