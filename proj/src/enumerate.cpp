#include "aft/enumerate.hpp"

#include <algorithm>

namespace aft {

namespace {

using Levels = std::vector<std::size_t>;

void require_range(std::size_t n, std::size_t low) {
  if (n < low || n > kMaxEnumerationN) {
    throw TreeError(ErrorCode::kOutOfRange,
                    "n=" + std::to_string(n) + " is outside " +
                        std::to_string(low) + ".." +
                        std::to_string(kMaxEnumerationN));
  }
}

// Next rooted level sequence in reverse lexicographic order, regenerating the
// suffix from position p. With no p, p is the last position above level 1.
std::optional<Levels> next_rooted(const Levels& current,
                                  std::optional<std::size_t> from = {}) {
  std::size_t p = 0;
  if (from) {
    p = *from;
  } else {
    p = current.size() - 1;
    while (current[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (current[q] != current[p] - 1) --q;
  Levels result = current;
  for (std::size_t i = p; i < result.size(); ++i) {
    result[i] = result[i - p + q];
  }
  return result;
}

// Splits at the second vertex on level 1: the first root subtree (levels
// shifted down by one) and the rest of the tree including the root.
std::pair<Levels, Levels> split_first_subtree(const Levels& levels) {
  std::size_t m = levels.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] != 1) continue;
    if (seen_one) {
      m = i;
      break;
    }
    seen_one = true;
  }
  Levels left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(levels[i] - 1);
  Levels rest{0};
  rest.insert(rest.end(), levels.begin() + static_cast<std::ptrdiff_t>(m),
              levels.end());
  return {std::move(left), std::move(rest)};
}

// Accepts a rooted sequence that is centered on its root, otherwise jumps to
// the next candidate that can be.
Levels next_free(Levels candidate) {
  auto [left, rest] = split_first_subtree(candidate);
  const std::size_t left_height = *std::max_element(left.begin(), left.end());
  const std::size_t rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  Levels jumped = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_first_subtree(jumped);
    const std::size_t height =
        *std::max_element(new_left.begin(), new_left.end());
    const std::size_t tail = height + 1;
    for (std::size_t k = 0; k < tail; ++k) {
      jumped[jumped.size() - tail + k] = k + 1;
    }
  }
  return jumped;
}

}  // namespace

LevelSequenceGenerator::LevelSequenceGenerator(std::size_t n) : n_(n) {
  require_range(n, 1);
  // Path of length n-1 hung from its center.
  for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(i);
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
}

std::optional<std::vector<std::size_t>> LevelSequenceGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    return layout_;
  }
  if (started_) {
    auto following = next_rooted(layout_);
    if (!following) {
      done_ = true;
      return std::nullopt;
    }
    layout_ = std::move(*following);
  }
  started_ = true;
  layout_ = next_free(std::move(layout_));
  return layout_;
}

Tree tree_from_levels(const std::vector<std::size_t>& levels) {
  std::vector<Edge> edges;
  std::vector<VertexId> stack;
  for (VertexId i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return build_tree(levels.size(), edges);
}

std::vector<EnumeratedTree> enumerate_free_trees(std::size_t n) {
  std::vector<EnumeratedTree> out;
  LevelSequenceGenerator gen(n);
  while (auto levels = gen.next()) {
    Tree t = tree_from_levels(*levels);
    out.push_back({canonical_code(t), std::move(t)});
  }
  std::sort(out.begin(), out.end(),
            [](const EnumeratedTree& a, const EnumeratedTree& b) {
              return code_less(a.code.text, b.code.text);
            });
  return out;
}

EnumerationStream::EnumerationStream(std::size_t n, bool asymmetric_only,
                                     std::size_t cursor)
    : n_(n), cursor_(cursor) {
  require_range(n, asymmetric_only ? 2 : 1);
  auto items = enumerate_free_trees(n);
  if (asymmetric_only) {
    std::erase_if(items,
                  [](const EnumeratedTree& e) { return !is_asymmetric(e.tree); });
  }
  items_ = std::make_shared<const std::vector<EnumeratedTree>>(std::move(items));
  cursor_ = std::min(cursor_, items_->size());
}

std::optional<EnumeratedTree> EnumerationStream::next() {
  if (cursor_ >= items_->size()) return std::nullopt;
  ++emitted_;
  return (*items_)[cursor_++];
}

std::vector<EnumeratedTree> EnumerationStream::drain() {
  std::vector<EnumeratedTree> out;
  while (auto item = next()) out.push_back(std::move(*item));
  return out;
}

EnumerationStream all_trees(std::size_t n) {
  return EnumerationStream(n, false);
}

EnumerationStream asymmetric_trees(std::size_t n) {
  return EnumerationStream(n, true);
}

std::vector<CountRow> count_report(std::size_t n_max) {
  require_range(n_max, 1);
  std::vector<CountRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    CountRow row{n, 0, 0};
    for (const auto& e : enumerate_free_trees(n)) {
      ++row.total;
      if (n >= 2 && is_asymmetric(e.tree)) ++row.asymmetric;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aft
