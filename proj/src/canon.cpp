#include "aft/canon.hpp"

#include <algorithm>

namespace aft {

namespace {

// ')' ranks before '('; prefix characters ('B', 'C') rank after both.
int symbol_rank(char c) {
  switch (c) {
    case ')': return 0;
    case '(': return 1;
    default: return 2 + static_cast<unsigned char>(c);
  }
}

// Vertices reachable from root without crossing into `blocked`, in BFS order.
// parent[root] == blocked; unreached vertices keep kNoVertex.
struct RootedView {
  VertexId root = 0;
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
};

RootedView root_at(const Tree& t, VertexId root, VertexId blocked) {
  RootedView view;
  view.root = root;
  view.parent.assign(t.size(), kNoVertex);
  view.parent[root] = blocked;
  view.order.push_back(root);
  for (std::size_t head = 0; head < view.order.size(); ++head) {
    VertexId x = view.order[head];
    for (VertexId y : t.neighbors(x)) {
      if (y == view.parent[x]) continue;
      view.parent[y] = x;
      view.order.push_back(y);
    }
  }
  return view;
}

std::vector<VertexId> children_of(const Tree& t, const RootedView& view,
                                  VertexId v) {
  std::vector<VertexId> out;
  for (VertexId y : t.neighbors(v)) {
    if (y != view.parent[v]) out.push_back(y);
  }
  return out;
}

// Per-vertex subtree codes plus each vertex's children sorted by code (ties
// by id). Filled bottom-up.
struct RootedCodes {
  std::vector<std::string> code;
  std::vector<std::vector<VertexId>> sorted_children;
};

RootedCodes compute_codes(const Tree& t, const RootedView& view) {
  RootedCodes out;
  out.code.resize(t.size());
  out.sorted_children.resize(t.size());
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    VertexId v = *it;
    auto kids = children_of(t, view, v);
    std::stable_sort(kids.begin(), kids.end(), [&](VertexId a, VertexId b) {
      return code_less(out.code[a], out.code[b]);
    });
    std::string code = "(";
    for (VertexId c : kids) code += out.code[c];
    code += ')';
    out.code[v] = std::move(code);
    out.sorted_children[v] = std::move(kids);
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw TreeError(ErrorCode::kOverflow,
                    "automorphism group order exceeds 64 bits");
  }
  return r;
}

// |Aut| of the rooted subtree at view.root, fixing the root.
std::uint64_t rooted_aut_order(const Tree& t, const RootedView& view,
                               const RootedCodes& codes) {
  std::vector<std::uint64_t> count(t.size(), 1);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    VertexId v = *it;
    const auto& kids = codes.sorted_children[v];
    std::uint64_t total = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      total = checked_mul(total, count[kids[i]]);
      run = (i > 0 && codes.code[kids[i]] == codes.code[kids[i - 1]]) ? run + 1
                                                                     : 1;
      total = checked_mul(total, run);  // builds run! incrementally
    }
    count[v] = total;
  }
  return count[view.root];
}

bool rooted_rigid(const RootedView& view, const RootedCodes& codes) {
  for (VertexId v : view.order) {
    const auto& kids = codes.sorted_children[v];
    for (std::size_t i = 1; i < kids.size(); ++i) {
      if (codes.code[kids[i]] == codes.code[kids[i - 1]]) return false;
    }
  }
  return true;
}

// Centers with their rooted views: one view for a unicentral tree, two halves
// (split at the central edge, smaller half-code first) for a bicentral one.
struct CentralSplit {
  std::vector<RootedView> views;
  std::vector<RootedCodes> codes;
};

CentralSplit split_at_centers(const Tree& t) {
  auto centers = center_info(t).centers;
  CentralSplit split;
  if (centers.size() == 1) {
    split.views.push_back(root_at(t, centers[0], kNoVertex));
  } else {
    split.views.push_back(root_at(t, centers[0], centers[1]));
    split.views.push_back(root_at(t, centers[1], centers[0]));
  }
  for (const auto& view : split.views) {
    split.codes.push_back(compute_codes(t, view));
  }
  if (split.views.size() == 2 &&
      code_less(split.codes[1].code[split.views[1].root],
                split.codes[0].code[split.views[0].root])) {
    std::swap(split.views[0], split.views[1]);
    std::swap(split.codes[0], split.codes[1]);
  }
  return split;
}

const std::string& root_code(const CentralSplit& split, std::size_t half) {
  return split.codes[half].code[split.views[half].root];
}

}  // namespace

bool code_less(std::string_view a, std::string_view b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](char x, char y) { return symbol_rank(x) < symbol_rank(y); });
}

CanonicalCode rooted_code(const Tree& t, VertexId root) {
  if (!t.contains(root)) {
    throw TreeError(ErrorCode::kBadVertexId,
                    "root " + std::to_string(root) + " is not in the tree");
  }
  auto view = root_at(t, root, kNoVertex);
  auto codes = compute_codes(t, view);
  return {std::move(codes.code[root]), CodeKind::kRooted};
}

CanonicalCode canonical_code(const Tree& t) {
  auto split = split_at_centers(t);
  if (split.views.size() == 1) {
    return {"C" + root_code(split, 0), CodeKind::kUnicentral};
  }
  return {"B" + root_code(split, 0) + root_code(split, 1),
          CodeKind::kBicentral};
}

bool are_isomorphic(const Tree& t1, const Tree& t2) {
  return t1.size() == t2.size() && canonical_code(t1) == canonical_code(t2);
}

AutCount aut_order(const Tree& t) {
  auto split = split_at_centers(t);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < split.views.size(); ++i) {
    order = checked_mul(order,
                        rooted_aut_order(t, split.views[i], split.codes[i]));
  }
  if (split.views.size() == 2 && root_code(split, 0) == root_code(split, 1)) {
    order = checked_mul(order, 2);
  }
  return {order};
}

bool is_asymmetric(const Tree& t) {
  if (t.size() < 2) {
    throw TreeError(ErrorCode::kTooSmall,
                    "automorphism-freeness needs at least two vertices");
  }
  auto split = split_at_centers(t);
  if (split.views.size() == 2 && root_code(split, 0) == root_code(split, 1)) {
    return false;
  }
  for (std::size_t i = 0; i < split.views.size(); ++i) {
    if (!rooted_rigid(split.views[i], split.codes[i])) return false;
  }
  return true;
}

std::vector<Automorphism> brute_force_automorphisms(const Tree& t) {
  const std::size_t n = t.size();
  if (n > kBruteForceLimit) {
    throw TreeError(ErrorCode::kTooLarge,
                    "permutation search is limited to " +
                        std::to_string(kBruteForceLimit) + " vertices");
  }
  std::vector<Automorphism> found;
  std::vector<VertexId> image(n, kNoVertex);
  std::vector<bool> used(n, false);

  auto consistent = [&](VertexId v, VertexId target) {
    if (used[target] || t.degree(v) != t.degree(target)) return false;
    for (VertexId w = 0; w < v; ++w) {
      if (t.adjacent(v, w) != t.adjacent(target, image[w])) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, VertexId v) -> void {
    if (v == n) {
      found.push_back({image});
      return;
    }
    for (VertexId target = 0; target < n; ++target) {
      if (!consistent(v, target)) continue;
      image[v] = target;
      used[target] = true;
      self(self, v + 1);
      used[target] = false;
    }
    image[v] = kNoVertex;
  };
  extend(extend, 0);
  return found;
}

CanonicalForm canonical_form(const Tree& t) {
  auto split = split_at_centers(t);
  CanonicalForm form;
  form.perm.assign(t.size(), kNoVertex);
  VertexId next = 0;
  for (std::size_t half = 0; half < split.views.size(); ++half) {
    std::vector<VertexId> stack{split.views[half].root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      form.perm[v] = next++;
      const auto& kids = split.codes[half].sorted_children[v];
      stack.insert(stack.end(), kids.rbegin(), kids.rend());
    }
  }
  form.tree = relabel(t, form.perm);
  return form;
}

std::optional<std::vector<VertexId>> find_isomorphism(const Tree& t1,
                                                      const Tree& t2) {
  if (t1.size() != t2.size()) return std::nullopt;
  auto f1 = canonical_form(t1);
  auto f2 = canonical_form(t2);
  if (f1.tree != f2.tree) return std::nullopt;
  std::vector<VertexId> inverse2(t2.size());
  for (VertexId v = 0; v < t2.size(); ++v) inverse2[f2.perm[v]] = v;
  std::vector<VertexId> mapping(t1.size());
  for (VertexId v = 0; v < t1.size(); ++v) mapping[v] = inverse2[f1.perm[v]];
  return mapping;
}

}  // namespace aft
