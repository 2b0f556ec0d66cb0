#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "aft/canon.hpp"
#include "aft/tree.hpp"

namespace aft {

inline constexpr std::size_t kMaxEnumerationN = 20;

// Free-tree generator of Wright, Richmond, Odlyzko and McKay over canonical
// level sequences rooted at a center. Yields each isomorphism class exactly
// once, in generator order.
class LevelSequenceGenerator {
 public:
  explicit LevelSequenceGenerator(std::size_t n);

  // Current level sequence, or std::nullopt once exhausted.
  std::optional<std::vector<std::size_t>> next();

 private:
  std::size_t n_;
  std::vector<std::size_t> layout_;
  bool started_ = false;
  bool done_ = false;
};

// Tree whose preorder depth sequence is `levels` (levels[0] == 0).
Tree tree_from_levels(const std::vector<std::size_t>& levels);

struct EnumeratedTree {
  CanonicalCode code;
  Tree tree;
};

// One representative per class, sorted by ascending canonical code.
std::vector<EnumeratedTree> enumerate_free_trees(std::size_t n);

// Cursor over a sorted enumeration. The cursor is the index of the next item,
// so a stream can be resumed by constructing it again with the saved cursor.
class EnumerationStream {
 public:
  EnumerationStream(std::size_t n, bool asymmetric_only,
                    std::size_t cursor = 0);

  std::optional<EnumeratedTree> next();

  std::size_t n() const noexcept { return n_; }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t emitted() const noexcept { return emitted_; }
  std::size_t total() const noexcept { return items_->size(); }

  std::vector<EnumeratedTree> drain();

 private:
  std::size_t n_;
  std::shared_ptr<const std::vector<EnumeratedTree>> items_;
  std::size_t cursor_;
  std::size_t emitted_ = 0;
};

// Throws kOutOfRange outside 1..kMaxEnumerationN.
EnumerationStream all_trees(std::size_t n);
// Throws kOutOfRange outside 2..kMaxEnumerationN.
EnumerationStream asymmetric_trees(std::size_t n);

struct CountRow {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t asymmetric = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Rows for n = 1..n_max. The single-vertex tree is not counted as asymmetric.
std::vector<CountRow> count_report(std::size_t n_max);

}  // namespace aft
