#include <gtest/gtest.h>

#include <random>

#include "subcomp/errors.hpp"
#include "subcomp/generators.hpp"
#include "subcomp/graph_io.hpp"

using namespace subcomp;

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6, ReferenceEncodings) {
  EXPECT_EQ(decode_graph6("@"), gen::empty(1));
  EXPECT_EQ(decode_graph6("A_"), gen::complete(2));
  EXPECT_EQ(encode_graph6(gen::empty(1)), "@");
  EXPECT_EQ(encode_graph6(gen::complete(2)), "A_");
  EXPECT_EQ(encode_graph6(Graph()), "?");
  EXPECT_EQ(encode_graph6(gen::cycle(5)), "Dhc");
  EXPECT_EQ(encode_graph6(gen::diamond()), "C}");
  EXPECT_EQ(encode_graph6(gen::petersen()), "IheA@GUAo");
}

TEST(Graph6, LongHeaderForLargerGraphs) {
  auto p63 = gen::path(63);
  auto text = encode_graph6(p63);
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(text.substr(4, 10), "hCGGC@?G?_");
  EXPECT_EQ(decode_graph6(text), p63);

  auto big = gen::gnp(300, 0.05, 11);
  EXPECT_EQ(decode_graph6(encode_graph6(big)), big);
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(decode_graph6(">>graph6<<Dhc\n"), gen::cycle(5));
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(decode_graph6(""), ParseError);
  EXPECT_THROW(decode_graph6("A"), ParseError);     // missing data
  EXPECT_THROW(decode_graph6("A__"), ParseError);   // extra data
  EXPECT_THROW(decode_graph6("A`"), ParseError);    // nonzero padding
  EXPECT_THROW(decode_graph6("D h"), ParseError);   // bad character
  EXPECT_THROW(decode_graph6("~?"), ParseError);    // truncated size
  EXPECT_THROW(decode_graph6("~~???"), ParseError);
}

TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen::gnp(rng() % 70, static_cast<double>(rng() % 100) / 100.0, rng());
    auto text = encode_graph6(g);
    ASSERT_EQ(decode_graph6(text), g);
    ASSERT_EQ(encode_graph6(decode_graph6(text)), text);
  }
}

TEST(EdgeList, ParsesCommentsAndWhitespace) {
  auto g = parse_edge_list("# a path\n3 2\n0 1   # first\n\n  1\t2\n");
  EXPECT_EQ(g, gen::path(3));
  EXPECT_EQ(parse_edge_list("0 0\n"), Graph());
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2\n"), ParseError);
}

TEST(EdgeList, FormatRoundTrip) {
  auto g = gen::petersen();
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  EXPECT_EQ(format_edge_list(gen::path(3)), "3 2\n0 1\n1 2\n");
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(graph_digest(gen::cycle(7)), graph_digest(decode_graph6(encode_graph6(gen::cycle(7)))));
  EXPECT_NE(graph_digest(gen::cycle(7)), graph_digest(gen::path(7)));
  EXPECT_EQ(graph_digest(gen::cycle(7)).size(), 16U);
}
