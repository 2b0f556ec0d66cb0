#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aft/error.hpp"

namespace aft {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using Edge = std::pair<VertexId, VertexId>;

// Immutable labeled free tree on the dense vertex set 0..n-1. Neighbor lists
// are kept sorted ascending, so two Trees compare equal iff they have the same
// labeled edge set.
class Tree {
 public:
  // Single-vertex tree.
  Tree();

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool contains(VertexId v) const noexcept { return v < adjacency_.size(); }
  bool adjacent(VertexId u, VertexId v) const;

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend Tree build_tree(std::size_t, std::span<const Edge>);
  explicit Tree(std::vector<std::vector<VertexId>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<VertexId>> adjacency_;
};

// Builds a tree on n vertices. Throws kBadVertexId, kCycleDetected (including
// self-loops and surplus edges), kDuplicateEdge or kDisconnectedInput.
Tree build_tree(std::size_t n, std::span<const Edge> edges);

// Vertex count inferred as edges.size() + 1.
Tree build_tree(std::span<const Edge> edges);
Tree build_tree(std::initializer_list<Edge> edges);

struct Leaf {
  VertexId id;
  VertexId parent;

  friend bool operator==(const Leaf&, const Leaf&) = default;
};

struct CenterInfo {
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  // One vertex, or two adjacent vertices in ascending order.
  std::vector<VertexId> centers;
};

// Result of removing one leaf. id_map[old] is the new id of each surviving
// vertex (order-preserving compaction) and kNoVertex for the deleted leaf.
struct LeafDeletion {
  Tree tree;
  std::vector<VertexId> id_map;
};

struct Component {
  std::vector<VertexId> vertices;  // sorted ascending
  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(VertexId v) const;
};

std::size_t distance(const Tree& t, VertexId u, VertexId v);

// BFS distances from source to every vertex.
std::vector<std::size_t> distances_from(const Tree& t, VertexId source);

CenterInfo center_info(const Tree& t);

// All degree-1 vertices in ascending id order. Requires n >= 2.
std::vector<Leaf> leaves(const Tree& t);

LeafDeletion delete_leaf(const Tree& t, VertexId leaf);

// New vertex gets id n.
Tree add_leaf(const Tree& t, VertexId attach_at);

// Components of t minus v, one per neighbor of v, in ascending neighbor order.
std::vector<Component> components_after_removal(const Tree& t, VertexId v);

// The unique u-v path, both endpoints included.
std::vector<VertexId> path_between(const Tree& t, VertexId u, VertexId v);

// Image tree under the permutation: vertex v becomes perm[v].
Tree relabel(const Tree& t, std::span<const VertexId> perm);

// Tree text format: first line n, then n-1 lines "u v". '#' starts a comment.
Tree parse_tree(std::istream& in);
Tree parse_tree(const std::string& text);
Tree read_tree_file(const std::string& path);
std::string format_tree(const Tree& t);

// Named shapes used throughout the tests and tools.
Tree path_tree(std::size_t n);
Tree star_tree(std::size_t n);
// Spider whose legs (paths) of the given lengths hang off vertex 0.
Tree spider_tree(std::span<const std::size_t> legs);
// The 7-vertex asymmetric tree with edges 0-1, 0-2, 2-3, 0-4, 4-5, 5-6.
Tree e7();

}  // namespace aft
