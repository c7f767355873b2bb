#include "specgraph/spec_grammar.hpp"

#include <string>

#include "gtest/gtest.h"

namespace specgraph {
namespace {

TEST(Grammar, ParsesFamilies) {
  const auto complete = parse_graph_spec("complete:n=4");
  EXPECT_EQ(generate(complete, 1).edge_count(), 6);

  const auto tree = parse_graph_spec("tree:k=4,depth=6");
  EXPECT_EQ(generate(tree, 1).vertex_count(), 1457);

  const auto tree_by_size = parse_graph_spec("tree:k=3,size=100");
  EXPECT_EQ(generate(tree_by_size, 1).vertex_count(), 100);

  const auto cube = parse_graph_spec("cube:d=3");
  EXPECT_EQ(generate(cube, 1).vertex_count(), 8);

  const auto bip = parse_graph_spec("bipartite:n1=2,n2=3");
  EXPECT_EQ(generate(bip, 1).edge_count(), 6);

  for (const char* text :
       {"star:n=7", "path:n=9", "cycle:n=5", "petal:m=3", "dupcycle:m=4"})
    EXPECT_NO_THROW(generate(parse_graph_spec(text), 1));
}

TEST(Grammar, ParsesRandomModels) {
  const auto er = parse_graph_spec("er:n=100,d=3.5");
  const Graph g1 = generate(er, 5);
  EXPECT_TRUE(g1 == generate(er, 5));
  EXPECT_EQ(g1.vertex_count(), 100);

  const auto ba = parse_graph_spec("ba:n=1000,m=2,init=5");
  const Graph g2 = generate(ba, 7);
  EXPECT_EQ(g2.vertex_count(), 1000);
  EXPECT_EQ(g2.edge_count(), 10 + 2 * 995);
}

TEST(Grammar, ErrorsCarryPositions) {
  try {
    parse_graph_spec("nosuch:n=4");
    FAIL() << "expected parse error";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("unknown family"), std::string::npos);
  }
  try {
    parse_graph_spec("complete:n=4,bogus=1");
    FAIL() << "expected parse error";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("unknown key 'bogus'"),
              std::string::npos);
    EXPECT_EQ(e.where(), 13);
  }
  try {
    parse_graph_spec("complete:n=four");
    FAIL() << "expected parse error";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("expected an integer"),
              std::string::npos);
  }
  EXPECT_THROW(parse_graph_spec("complete"), parse_error);
  EXPECT_THROW(parse_graph_spec(":n=4"), parse_error);
  EXPECT_THROW(parse_graph_spec("complete:"), parse_error);
  EXPECT_THROW(parse_graph_spec("complete:n=4,n=5"), parse_error);
  EXPECT_THROW(parse_graph_spec("er:n=100"), parse_error);
  EXPECT_THROW(parse_graph_spec("tree:k=3"), parse_error);
  EXPECT_THROW(parse_graph_spec("tree:k=3,depth=2,size=10"), parse_error);
}

TEST(Grammar, RoundTripsThroughToString) {
  for (const char* text :
       {"complete:n=4", "bipartite:n1=2,n2=3", "star:n=7", "path:n=9",
        "cycle:n=5", "cube:d=3", "petal:m=3", "tree:k=4,depth=6",
        "tree:k=3,size=100", "dupcycle:m=4", "er:n=100,d=3.5",
        "ba:n=1000,m=2,init=5"}) {
    const GraphSpec spec = parse_graph_spec(text);
    EXPECT_EQ(spec_to_string(spec), text);
    EXPECT_TRUE(generate(parse_graph_spec(spec_to_string(spec)), 3) ==
                generate(spec, 3));
  }
}

}  // namespace
}  // namespace specgraph
