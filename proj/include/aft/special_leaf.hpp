#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aft/tree.hpp"

namespace aft {

// Sizes seen at one vertex v_i of the anchor-to-leaf path.
struct StepEvidence {
  std::size_t leaf_side = 0;  // |V(C_i)|, the component of T - v_i holding the leaf
  // Smallest other component of T - v_i that does not hold the anchor;
  // empty when C_i is the only such component.
  std::optional<std::size_t> min_other;

  friend bool operator==(const StepEvidence&, const StepEvidence&) = default;
};

// A leaf l is special with respect to (T, u) when, walking the path
// u = v_1, ..., v_m = l, the component of T - v_i containing l is never larger
// than any component of T - v_i that avoids u. At v_1 = u every component
// avoids u, so all of them compete.
struct SpecialLeafCertificate {
  VertexId leaf = 0;
  VertexId anchor = 0;
  std::vector<VertexId> path;         // anchor first, leaf last
  std::vector<StepEvidence> steps;    // one per path vertex except the leaf

  friend bool operator==(const SpecialLeafCertificate&,
                         const SpecialLeafCertificate&) = default;
};

// Direct check of the definition using components_after_removal. Returns the
// certificate when l is special, std::nullopt otherwise. Throws kSameVertex,
// kNotALeaf, kBadVertexId or kTooSmall.
std::optional<SpecialLeafCertificate> is_special_leaf(const Tree& t,
                                                      VertexId anchor,
                                                      VertexId leaf);

// Constructive finder: root the tree at the anchor and repeatedly step into
// the smallest child subtree (ties to the smaller vertex id) until a leaf is
// reached. Evidence is taken from the subtree sizes of that rooting.
SpecialLeafCertificate find_special_leaf(const Tree& t, VertexId anchor);

// "leaf L", "path v1 ... vm", then "step i |Ci|=a min_other=b" per step
// (b is "none" when C_i has no competitor).
std::string format_certificate(const SpecialLeafCertificate& cert);

}  // namespace aft
