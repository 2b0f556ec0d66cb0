#include "aft/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace aft {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kBadVertexId: return "BadVertexId";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kNotALeaf: return "NotALeaf";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotAsymmetric: return "NotAsymmetric";
    case ErrorCode::kStuckNotAtE7: return "StuckNotAtE7";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

namespace {

void require_vertex(const Tree& t, VertexId v) {
  if (!t.contains(v)) {
    throw TreeError(ErrorCode::kBadVertexId,
                    "vertex " + std::to_string(v) + " is not in a tree on " +
                        std::to_string(t.size()) + " vertices");
  }
}

// Union-find over vertex ids, used only for cycle detection at build time.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

Tree::Tree() : adjacency_(1) {}

std::span<const VertexId> Tree::neighbors(VertexId v) const {
  require_vertex(*this, v);
  return adjacency_[v];
}

bool Tree::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  require_vertex(*this, v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() - 1);
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Component::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Tree build_tree(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw TreeError(ErrorCode::kTooSmall, "a tree needs at least one vertex");
  }
  if (n > kNoVertex) {
    throw TreeError(ErrorCode::kOutOfRange, "vertex count too large");
  }
  std::vector<std::vector<VertexId>> adjacency(n);
  DisjointSets sets(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw TreeError(ErrorCode::kBadVertexId,
                      "edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " references a vertex outside 0.." +
                          std::to_string(n - 1));
    }
    if (u == v) {
      throw TreeError(ErrorCode::kCycleDetected,
                      "self-loop at vertex " + std::to_string(u));
    }
    auto& nu = adjacency[u];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) {
      throw TreeError(ErrorCode::kDuplicateEdge,
                      "edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " appears twice");
    }
    if (!sets.unite(u, v)) {
      throw TreeError(ErrorCode::kCycleDetected,
                      "edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " closes a cycle");
    }
    nu.push_back(v);
    adjacency[v].push_back(u);
  }
  // Acyclic, so fewer than n-1 edges is the only way to be disconnected.
  if (edges.size() != n - 1) {
    throw TreeError(ErrorCode::kDisconnectedInput,
                    std::to_string(edges.size()) + " edges cannot connect " +
                        std::to_string(n) + " vertices");
  }
  for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());
  return Tree(std::move(adjacency));
}

Tree build_tree(std::span<const Edge> edges) {
  return build_tree(edges.size() + 1, edges);
}

Tree build_tree(std::initializer_list<Edge> edges) {
  return build_tree(std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<std::size_t> distances_from(const Tree& t, VertexId source) {
  require_vertex(t, source);
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(t.size(), kUnseen);
  std::queue<VertexId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    VertexId x = frontier.front();
    frontier.pop();
    for (VertexId y : t.neighbors(x)) {
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::size_t distance(const Tree& t, VertexId u, VertexId v) {
  require_vertex(t, v);
  return distances_from(t, u)[v];
}

CenterInfo center_info(const Tree& t) {
  CenterInfo info;
  info.eccentricity.resize(t.size());
  for (VertexId v = 0; v < t.size(); ++v) {
    auto dist = distances_from(t, v);
    info.eccentricity[v] = *std::max_element(dist.begin(), dist.end());
  }
  info.radius =
      *std::min_element(info.eccentricity.begin(), info.eccentricity.end());
  for (VertexId v = 0; v < t.size(); ++v) {
    if (info.eccentricity[v] == info.radius) info.centers.push_back(v);
  }
  return info;
}

std::vector<Leaf> leaves(const Tree& t) {
  if (t.size() < 2) {
    throw TreeError(ErrorCode::kTooSmall, "a single vertex has no leaves");
  }
  std::vector<Leaf> out;
  for (VertexId v = 0; v < t.size(); ++v) {
    auto nb = t.neighbors(v);
    if (nb.size() == 1) out.push_back({v, nb.front()});
  }
  return out;
}

LeafDeletion delete_leaf(const Tree& t, VertexId leaf) {
  require_vertex(t, leaf);
  if (t.size() < 2) {
    throw TreeError(ErrorCode::kTooSmall,
                    "cannot delete from a single-vertex tree");
  }
  if (t.degree(leaf) != 1) {
    throw TreeError(ErrorCode::kNotALeaf,
                    "vertex " + std::to_string(leaf) + " has degree " +
                        std::to_string(t.degree(leaf)));
  }
  LeafDeletion out;
  out.id_map.resize(t.size(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < t.size(); ++v) {
    if (v != leaf) out.id_map[v] = next++;
  }
  std::vector<Edge> kept;
  kept.reserve(t.size() - 2);
  for (auto [u, v] : t.edges()) {
    if (u != leaf && v != leaf) kept.emplace_back(out.id_map[u], out.id_map[v]);
  }
  out.tree = build_tree(t.size() - 1, kept);
  return out;
}

Tree add_leaf(const Tree& t, VertexId attach_at) {
  require_vertex(t, attach_at);
  auto edges = t.edges();
  edges.emplace_back(attach_at, static_cast<VertexId>(t.size()));
  return build_tree(t.size() + 1, edges);
}

std::vector<Component> components_after_removal(const Tree& t, VertexId v) {
  require_vertex(t, v);
  std::vector<Component> out;
  for (VertexId start : t.neighbors(v)) {
    Component c;
    std::vector<std::pair<VertexId, VertexId>> stack{{start, v}};
    while (!stack.empty()) {
      auto [x, from] = stack.back();
      stack.pop_back();
      c.vertices.push_back(x);
      for (VertexId y : t.neighbors(x)) {
        if (y != from) stack.emplace_back(y, x);
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexId> path_between(const Tree& t, VertexId u, VertexId v) {
  require_vertex(t, u);
  require_vertex(t, v);
  std::vector<VertexId> parent(t.size(), kNoVertex);
  std::queue<VertexId> frontier;
  parent[v] = v;
  frontier.push(v);
  while (!frontier.empty() && parent[u] == kNoVertex) {
    VertexId x = frontier.front();
    frontier.pop();
    for (VertexId y : t.neighbors(x)) {
      if (parent[y] == kNoVertex) {
        parent[y] = x;
        frontier.push(y);
      }
    }
  }
  std::vector<VertexId> path{u};
  while (path.back() != v) path.push_back(parent[path.back()]);
  return path;
}

Tree relabel(const Tree& t, std::span<const VertexId> perm) {
  if (perm.size() != t.size()) {
    throw TreeError(ErrorCode::kBadVertexId,
                    "permutation size does not match the tree");
  }
  std::vector<bool> seen(t.size(), false);
  for (VertexId image : perm) {
    if (image >= t.size() || seen[image]) {
      throw TreeError(ErrorCode::kBadVertexId, "not a permutation");
    }
    seen[image] = true;
  }
  auto edges = t.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return build_tree(t.size(), edges);
}

Tree parse_tree(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0) {
        throw TreeError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + ": '" + token +
                            "' is not a vertex id");
      }
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (header_line == 0) {
      if (row.size() != 1) {
        throw TreeError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) +
                            ": expected the vertex count alone");
      }
      header_line = line_no;
    } else if (row.size() != 2) {
      throw TreeError(ErrorCode::kParseError,
                      "line " + std::to_string(line_no) +
                          ": expected two vertex ids");
    }
    numbers.insert(numbers.end(), row.begin(), row.end());
  }
  if (header_line == 0) {
    throw TreeError(ErrorCode::kParseError, "missing vertex count");
  }
  auto n = static_cast<std::size_t>(numbers.front());
  if (n == 0 || n > kNoVertex) {
    throw TreeError(ErrorCode::kParseError, "vertex count out of range");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < numbers.size(); i += 2) {
    if (numbers[i] >= static_cast<long long>(n) ||
        numbers[i + 1] >= static_cast<long long>(n)) {
      throw TreeError(ErrorCode::kBadVertexId,
                      "edge " + std::to_string(numbers[i]) + " " +
                          std::to_string(numbers[i + 1]) +
                          " references a vertex outside 0.." +
                          std::to_string(n - 1));
    }
    edges.emplace_back(static_cast<VertexId>(numbers[i]),
                       static_cast<VertexId>(numbers[i + 1]));
  }
  return build_tree(n, edges);
}

Tree parse_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_tree(in);
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw TreeError(ErrorCode::kIoError, "cannot open " + path);
  }
  return parse_tree(in);
}

std::string format_tree(const Tree& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_tree(n, edges);
}

Tree star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return build_tree(n, edges);
}

Tree spider_tree(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (std::size_t length : legs) {
    VertexId previous = 0;
    for (std::size_t i = 0; i < length; ++i) {
      edges.emplace_back(previous, next);
      previous = next++;
    }
  }
  return build_tree(next, edges);
}

Tree e7() {
  return build_tree({{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
}

}  // namespace aft
