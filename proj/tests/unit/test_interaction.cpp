#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "boolnet/errors.hpp"
#include "boolnet/interaction.hpp"
#include "boolnet/parser.hpp"
#include "corpus.hpp"
#include "random_network.hpp"

using namespace boolnet;
using corpus::nodes1;

namespace {

SignedEdge pos(int u, int v) { return {u - 1, v - 1, Sign::positive}; }
SignedEdge neg(int u, int v) { return {u - 1, v - 1, Sign::negative}; }

std::vector<SignedEdge> sorted(std::vector<SignedEdge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("interaction graph of the three-node example") {
  InteractionGraph g = interaction_graph(corpus::load(corpus::kCyclic3));
  std::vector<SignedEdge> expected = sorted({neg(1, 1), neg(1, 2), pos(1, 3),
                                             pos(2, 1), pos(2, 2), neg(2, 3),
                                             pos(3, 1), pos(3, 3)});
  CHECK(g.edges() == expected);
}

TEST_CASE("constant functions induce no edges") {
  InteractionGraph g = interaction_graph(corpus::load("a = 1"));
  CHECK(g.edges().empty());
}

TEST_CASE("interaction graph of the triad") {
  InteractionGraph g = interaction_graph(corpus::load(corpus::kTriad5));
  std::vector<SignedEdge> expected =
      sorted({neg(2, 1), neg(3, 1), neg(1, 2), neg(1, 3), neg(1, 4), pos(2, 4),
              neg(3, 4), pos(4, 5), pos(5, 5)});
  CHECK(g.edges() == expected);
}

TEST_CASE("both signs may coexist on one pair") {
  // f2 depends on x1 positively (at x3=1) and negatively (at x3=0).
  InteractionGraph g = interaction_graph(
      corpus::load("x1 = x1\nx2 = (x1 & x3) | (!x1 & !x3)\nx3 = x3"));
  int count = 0;
  for (const SignedEdge& e : g.edges())
    if (e.source == 0 && e.target == 1) ++count;
  CHECK(count == 2);
}

TEST_CASE("sccs of the corpus graphs") {
  CHECK(interaction_graph(corpus::load(corpus::kTriad5)).sccs() ==
        std::vector<VertexSet>{nodes1({1, 2, 3}), nodes1({4}), nodes1({5})});
  CHECK(interaction_graph(corpus::load(corpus::kCascade5)).sccs() ==
        std::vector<VertexSet>{nodes1({1}), nodes1({2}), nodes1({3}),
                               nodes1({4}), nodes1({5})});
  CHECK(interaction_graph(corpus::load("a = 1\nb = 0\nc = 1")).sccs() ==
        std::vector<VertexSet>{nodes1({1}), nodes1({2}), nodes1({3})});
}

TEST_CASE("positive cycle detection") {
  InteractionGraph triad = interaction_graph(corpus::load(corpus::kTriad5));
  CHECK(has_positive_cycle(triad, nodes1({1, 2, 3})));
  CHECK_FALSE(has_positive_cycle(triad, nodes1({4})));

  // A lone negative self-loop is a negative cycle.
  InteractionGraph negloop = interaction_graph(corpus::load("a = !a"));
  CHECK_FALSE(has_positive_cycle(negloop, nodes1({1})));

  InteractionGraph cascade = interaction_graph(corpus::load(corpus::kCascade5));
  CHECK(has_positive_cycle(cascade, nodes1({1})));
}

TEST_CASE("cycle budget exhaustion is reported") {
  InteractionGraph negloop2 = interaction_graph(corpus::load("a = !b\nb = !a"));
  CHECK_THROWS_AS(has_positive_cycle(negloop2, nodes1({1, 2}), 1), CapExceeded);
}

TEST_CASE("scc_order of the cascade") {
  SccOrder order = scc_order(corpus::load(corpus::kCascade5));
  REQUIRE(order.positive == std::vector<VertexSet>{nodes1({1}), nodes1({4}),
                                                   nodes1({5})});
  REQUIRE(order.slices.size() == 2);
  CHECK(order.slices[0] == std::vector<int>{0});
  CHECK(order.slices[1] == std::vector<int>{1, 2});
  CHECK(order.precedes[0][1]);
  CHECK(order.precedes[0][2]);
  CHECK_FALSE(order.precedes[1][2]);
  CHECK_FALSE(order.precedes[2][1]);
}

TEST_CASE("scc_order of the triad") {
  SccOrder order = scc_order(corpus::load(corpus::kTriad5));
  CHECK(order.positive ==
        std::vector<VertexSet>{nodes1({1, 2, 3}), nodes1({5})});
  REQUIRE(order.slices.size() == 2);
  CHECK(order.slice_nodes(0) == nodes1({1, 2, 3}));
  CHECK(order.slice_nodes(1) == nodes1({5}));
}

TEST_CASE("scc_order of the toggle") {
  SccOrder order = scc_order(corpus::load(corpus::kToggle5));
  CHECK(order.positive == std::vector<VertexSet>{nodes1({1, 2}), nodes1({5})});
}

TEST_CASE("index order is a linear extension") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    SccOrder order = scc_order(testgen::random_network(rng));
    for (int a = 0; a < order.k(); ++a)
      for (int b = a + 1; b < order.k(); ++b)
        CHECK_FALSE(order.precedes[b][a]);
  }
}

TEST_CASE("slices do not depend on the linear extension") {
  // Recompute the slice partition from the precedence relation after an
  // arbitrary reindexing of O; the resulting node-set families must agree.
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    SccOrder order = scc_order(testgen::random_network(rng));
    const int k = order.k();
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::set<std::uint32_t>> reordered_slices;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    int remaining = k;
    while (remaining > 0) {
      std::set<std::uint32_t> slice;
      std::vector<int> chosen;
      for (int a : perm) {
        if (placed[static_cast<std::size_t>(a)]) continue;
        bool minimal = true;
        for (int b : perm) {
          if (b == a || placed[static_cast<std::size_t>(b)]) continue;
          if (order.precedes[static_cast<std::size_t>(b)]
                            [static_cast<std::size_t>(a)]) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          chosen.push_back(a);
          slice.insert(order.positive[static_cast<std::size_t>(a)].mask());
        }
      }
      for (int a : chosen) placed[static_cast<std::size_t>(a)] = true;
      remaining -= static_cast<int>(chosen.size());
      reordered_slices.push_back(std::move(slice));
    }

    REQUIRE(reordered_slices.size() == order.slices.size());
    for (std::size_t K = 0; K < order.slices.size(); ++K) {
      std::set<std::uint32_t> reference;
      for (int idx : order.slices[K])
        reference.insert(order.positive[static_cast<std::size_t>(idx)].mask());
      CHECK(reordered_slices[K] == reference);
    }
  }
}

TEST_CASE("ancestors and parents") {
  InteractionGraph cascade = interaction_graph(corpus::load(corpus::kCascade5));
  CHECK(cascade.ancestors(3) == nodes1({1, 2, 3, 4}));
  CHECK(cascade.ancestors(0) == nodes1({1}));
  CHECK(cascade.parents(3) == nodes1({3, 4}));

  InteractionGraph triad = interaction_graph(corpus::load(corpus::kTriad5));
  CHECK(triad.parents(0) == nodes1({2, 3}));

  InteractionGraph edgeless = interaction_graph(corpus::load("a = 1\nb = 0"));
  CHECK(edgeless.ancestors(0).empty());
  CHECK(edgeless.parents(1).empty());
}

TEST_CASE("induced ancestor graph") {
  InteractionGraph cascade = interaction_graph(corpus::load(corpus::kCascade5));

  InteractionGraph g1 = induced_ancestor_graph(cascade, 0);
  CHECK(g1.vertices() == nodes1({1}));
  CHECK(g1.edges() == std::vector<SignedEdge>{pos(1, 1)});

  InteractionGraph g3 = induced_ancestor_graph(cascade, 2);
  CHECK(g3.vertices() == nodes1({1, 2}));
  CHECK(g3.edges() == sorted({pos(1, 1), pos(1, 2)}));

  InteractionGraph empty =
      induced_ancestor_graph(interaction_graph(corpus::load("a = 1\nb = 0")), 0);
  CHECK(empty.vertices().empty());
  CHECK(empty.edges().empty());
}

TEST_CASE("edges are semantically exact") {
  // Re-derive every edge over the full state space, independent of the
  // support-restricted enumeration the library uses.
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    testgen::GeneratorOptions opt;
    opt.max_n = 6;
    BooleanNetwork f = testgen::random_network(rng, opt);
    InteractionGraph g = interaction_graph(f);
    const int n = f.dimension();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        bool want_pos = false, want_neg = false;
        for (std::uint32_t raw = 0; raw < (std::uint32_t{1} << n); ++raw) {
          State x0 = State(raw, n).with_bit(u, false);
          State x1 = State(raw, n).with_bit(u, true);
          bool lo = f.evaluate_node(v, x0);
          bool hi = f.evaluate_node(v, x1);
          want_pos |= hi && !lo;
          want_neg |= lo && !hi;
        }
        bool have_pos = false, have_neg = false;
        for (const SignedEdge& e : g.edges()) {
          if (e.source == u && e.target == v) {
            if (e.sign == Sign::positive) have_pos = true;
            if (e.sign == Sign::negative) have_neg = true;
          }
        }
        CHECK(have_pos == want_pos);
        CHECK(have_neg == want_neg);
      }
    }
  }
}

TEST_CASE("mutation removes exactly the incoming edges of the pinned node") {
  std::mt19937 rng(37);
  for (int i = 0; i < 80; ++i) {
    BooleanNetwork f = testgen::random_network(rng);
    std::uniform_int_distribution<int> node(0, f.dimension() - 1);
    int u = node(rng);
    bool b = node(rng) % 2 == 0;
    InteractionGraph before = interaction_graph(f);
    InteractionGraph after =
        interaction_graph(apply_mutation(f, Mutation({{u, b}})));
    std::vector<SignedEdge> expected;
    for (const SignedEdge& e : before.edges())
      if (e.target != u) expected.push_back(e);
    CHECK(after.edges() == expected);
  }
}
