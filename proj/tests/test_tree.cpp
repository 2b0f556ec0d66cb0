#include <doctest.h>

#include <algorithm>
#include <random>

#include "aft/canon.hpp"
#include "aft/enumerate.hpp"
#include "aft/tree.hpp"
#include "support/error_of.hpp"
#include "support/oracles.hpp"

using namespace aft;
using aft::testing::error_of;

namespace {

std::vector<VertexId> ids(const std::vector<Leaf>& ls) {
  std::vector<VertexId> out;
  for (const auto& l : ls) out.push_back(l.id);
  return out;
}

}  // namespace

TEST_CASE("build_tree accepts trees and rejects everything else") {
  Tree p2 = build_tree({{0, 1}});
  CHECK(p2.size() == 2);
  CHECK(p2.adjacent(0, 1));

  Tree t = e7();
  CHECK(t.size() == 7);
  CHECK(t.edges().size() == 6);
  CHECK(t.degree(0) == 3);
  const std::size_t legs[] = {1, 2, 3};
  CHECK(t == spider_tree(legs));

  CHECK(error_of([] { build_tree({{0, 1}, {1, 2}, {0, 2}}); }) ==
        ErrorCode::kCycleDetected);
  CHECK(error_of([] { build_tree({{0, 5}}); }) == ErrorCode::kBadVertexId);
  CHECK(error_of([] { build_tree({{0, 1}, {1, 0}}); }) ==
        ErrorCode::kDuplicateEdge);
  CHECK(error_of([] { build_tree({{0, 0}}); }) == ErrorCode::kCycleDetected);
  const Edge one[] = {{0, 1}};
  CHECK(error_of([&] { build_tree(4, one); }) ==
        ErrorCode::kDisconnectedInput);
  CHECK(error_of([] { build_tree(0, {}); }) == ErrorCode::kTooSmall);
}

TEST_CASE("adjacency lists are sorted regardless of edge order") {
  Tree a = build_tree({{3, 0}, {0, 1}, {2, 0}});
  Tree b = build_tree({{0, 1}, {0, 2}, {0, 3}});
  CHECK(a == b);
  auto nb = a.neighbors(0);
  CHECK(std::is_sorted(nb.begin(), nb.end()));
}

TEST_CASE("distance") {
  Tree t = e7();
  // Floyd-Warshall agrees: 3-2-0-4-5-6.
  CHECK(oracle::all_pairs_distances(t)[3][6] == 5);
  CHECK(distance(t, 3, 6) == 5);
  CHECK(distance(t, 6, 3) == 5);
  CHECK(distance(t, 4, 4) == 0);
  CHECK(distance(path_tree(2), 0, 1) == 1);
  CHECK(error_of([&] { distance(t, 0, 7); }) == ErrorCode::kBadVertexId);
}

TEST_CASE("center_info") {
  auto p3 = center_info(path_tree(3));
  CHECK(p3.centers == std::vector<VertexId>{1});
  CHECK(p3.radius == 1);

  auto p4 = center_info(path_tree(4));
  CHECK(p4.centers == std::vector<VertexId>{1, 2});
  CHECK(p4.radius == 2);

  auto e = center_info(e7());
  CHECK(e.centers == std::vector<VertexId>{0, 4});
  CHECK(e.radius == 3);
  CHECK(e.eccentricity == std::vector<std::size_t>{3, 4, 4, 5, 3, 4, 5});

  auto single = center_info(Tree{});
  CHECK(single.centers == std::vector<VertexId>{0});
  CHECK(single.radius == 0);
}

TEST_CASE("leaves") {
  auto p2 = leaves(path_tree(2));
  CHECK(p2 == std::vector<Leaf>{{0, 1}, {1, 0}});
  CHECK(ids(leaves(e7())) == std::vector<VertexId>{1, 3, 6});
  CHECK(ids(leaves(star_tree(4))) == std::vector<VertexId>{1, 2, 3});
  CHECK(error_of([] { leaves(Tree{}); }) == ErrorCode::kTooSmall);
}

TEST_CASE("delete_leaf compacts ids in order") {
  auto p3 = delete_leaf(path_tree(3), 2);
  CHECK(p3.tree == path_tree(2));
  CHECK(p3.id_map == std::vector<VertexId>{0, 1, kNoVertex});

  const std::size_t legs[] = {1, 2, 2};
  auto e = delete_leaf(e7(), 6);
  CHECK(e.tree == spider_tree(legs));

  auto p2 = delete_leaf(path_tree(2), 1);
  CHECK(p2.tree.size() == 1);

  auto middle = delete_leaf(e7(), 1);
  CHECK(middle.id_map == std::vector<VertexId>{0, kNoVertex, 1, 2, 3, 4, 5});
  CHECK(middle.tree.adjacent(middle.id_map[2], middle.id_map[3]));

  CHECK(error_of([] { delete_leaf(e7(), 0); }) == ErrorCode::kNotALeaf);
  CHECK(error_of([] { delete_leaf(Tree{}, 0); }) == ErrorCode::kTooSmall);
}

TEST_CASE("add_leaf appends vertex n") {
  CHECK(add_leaf(Tree{}, 0) == path_tree(2));
  CHECK(add_leaf(path_tree(2), 1) == path_tree(3));
  const std::size_t legs[] = {1, 2, 4};
  CHECK(add_leaf(e7(), 6) == spider_tree(legs));
  CHECK(error_of([] { add_leaf(path_tree(2), 2); }) == ErrorCode::kBadVertexId);
}

TEST_CASE("components_after_removal") {
  auto parts = components_after_removal(e7(), 0);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].vertices == std::vector<VertexId>{1});
  CHECK(parts[1].vertices == std::vector<VertexId>{2, 3});
  CHECK(parts[2].vertices == std::vector<VertexId>{4, 5, 6});

  auto p3 = components_after_removal(path_tree(3), 1);
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].size() == 1);
  CHECK(p3[1].size() == 1);

  auto leaf = components_after_removal(e7(), 6);
  REQUIRE(leaf.size() == 1);
  CHECK(leaf[0].size() == 6);
}

TEST_CASE("tree text format") {
  Tree t = parse_tree("# comment\n7\n0 1  # trailing\n\n0 2\n2 3\n0 4\n4 5\n5 6\n");
  CHECK(t == e7());
  CHECK(parse_tree(format_tree(t)) == t);
  CHECK(parse_tree("1\n") == Tree{});

  CHECK(error_of([] { parse_tree("3\n0 1\n1 x\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_tree(""); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_tree("3\n0 1 2\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { parse_tree("3\n0 1\n1 3\n"); }) == ErrorCode::kBadVertexId);
  CHECK(error_of([] { parse_tree("3\n0 1\n"); }) ==
        ErrorCode::kDisconnectedInput);
  CHECK(error_of([] { parse_tree("3\n0 1\n1 2\n2 0\n"); }) ==
        ErrorCode::kCycleDetected);
  CHECK(error_of([] { parse_tree("3\n-1 1\n1 2\n"); }) == ErrorCode::kParseError);
  CHECK(error_of([] { read_tree_file("/nonexistent/tree"); }) ==
        ErrorCode::kIoError);
}

TEST_CASE("distance is a metric and eccentricities match all-pairs oracle") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& item : enumerate_free_trees(n)) {
      const Tree& t = item.tree;
      auto d = oracle::all_pairs_distances(t);
      auto info = center_info(t);
      for (VertexId u = 0; u < n; ++u) {
        std::size_t ecc = 0;
        for (VertexId v = 0; v < n; ++v) {
          REQUIRE(distance(t, u, v) == d[u][v]);
          REQUIRE((d[u][v] == 0) == (u == v));
          REQUIRE(d[u][v] == d[v][u]);
          for (VertexId w = 0; w < n; ++w) REQUIRE(d[u][w] <= d[u][v] + d[v][w]);
          ecc = std::max(ecc, d[u][v]);
        }
        REQUIRE(info.eccentricity[u] == ecc);
      }
    }
  }
}

TEST_CASE("delete_leaf then add_leaf at the parent restores the class") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Tree t = oracle::random_tree(2 + round % 13, rng);
    for (const Leaf& leaf : leaves(t)) {
      auto cut = delete_leaf(t, leaf.id);
      Tree back = add_leaf(cut.tree, cut.id_map[leaf.parent]);
      REQUIRE(canonical_code(back) == canonical_code(t));
    }
  }
}

TEST_CASE("relabel maps edges through the permutation") {
  const VertexId perm[] = {2, 0, 1};
  Tree t = relabel(path_tree(3), perm);
  CHECK(t.adjacent(2, 0));
  CHECK(t.adjacent(0, 1));
  const VertexId bad[] = {0, 0, 1};
  CHECK(error_of([&] { relabel(path_tree(3), bad); }) == ErrorCode::kBadVertexId);
}

TEST_CASE("path_between") {
  CHECK(path_between(e7(), 3, 6) == std::vector<VertexId>{3, 2, 0, 4, 5, 6});
  CHECK(path_between(e7(), 5, 5) == std::vector<VertexId>{5});
}
