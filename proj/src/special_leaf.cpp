#include "aft/special_leaf.hpp"

#include <algorithm>
#include <sstream>

namespace aft {

std::optional<SpecialLeafCertificate> is_special_leaf(const Tree& t,
                                                      VertexId anchor,
                                                      VertexId leaf) {
  if (!t.contains(anchor) || !t.contains(leaf)) {
    throw TreeError(ErrorCode::kBadVertexId, "vertex outside the tree");
  }
  if (t.size() < 2) {
    throw TreeError(ErrorCode::kTooSmall, "special leaves need two vertices");
  }
  if (anchor == leaf) {
    throw TreeError(ErrorCode::kSameVertex,
                    "the leaf must differ from the anchor");
  }
  if (t.degree(leaf) != 1) {
    throw TreeError(ErrorCode::kNotALeaf,
                    "vertex " + std::to_string(leaf) + " is not a leaf");
  }

  SpecialLeafCertificate cert;
  cert.anchor = anchor;
  cert.leaf = leaf;
  cert.path = path_between(t, anchor, leaf);
  for (std::size_t i = 0; i + 1 < cert.path.size(); ++i) {
    const VertexId v = cert.path[i];
    StepEvidence step;
    for (const auto& c : components_after_removal(t, v)) {
      if (c.contains(leaf)) {
        step.leaf_side = c.size();
      } else if (!c.contains(anchor)) {
        step.min_other = std::min(step.min_other.value_or(c.size()), c.size());
      }
    }
    if (step.min_other && *step.min_other < step.leaf_side) return std::nullopt;
    cert.steps.push_back(step);
  }
  return cert;
}

SpecialLeafCertificate find_special_leaf(const Tree& t, VertexId anchor) {
  if (!t.contains(anchor)) {
    throw TreeError(ErrorCode::kBadVertexId,
                    "anchor " + std::to_string(anchor) + " is not in the tree");
  }
  if (t.size() < 2) {
    throw TreeError(ErrorCode::kTooSmall, "special leaves need two vertices");
  }

  // Subtree sizes with the tree rooted at the anchor.
  std::vector<VertexId> parent(t.size(), kNoVertex);
  std::vector<VertexId> order{anchor};
  parent[anchor] = anchor;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (VertexId y : t.neighbors(order[head])) {
      if (parent[y] == kNoVertex) {
        parent[y] = order[head];
        order.push_back(y);
      }
    }
  }
  std::vector<std::size_t> subtree(t.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != anchor) subtree[parent[*it]] += subtree[*it];
  }

  SpecialLeafCertificate cert;
  cert.anchor = anchor;
  VertexId at = anchor;
  cert.path.push_back(at);
  for (;;) {
    // Neighbors come sorted, so the first minimum is the smallest id.
    VertexId best = kNoVertex;
    for (VertexId c : t.neighbors(at)) {
      if (c == parent[at] && at != anchor) continue;
      if (best == kNoVertex || subtree[c] < subtree[best]) best = c;
    }
    if (best == kNoVertex) break;
    StepEvidence step;
    step.leaf_side = subtree[best];
    for (VertexId c : t.neighbors(at)) {
      if ((c == parent[at] && at != anchor) || c == best) continue;
      step.min_other = std::min(step.min_other.value_or(subtree[c]), subtree[c]);
    }
    cert.steps.push_back(step);
    cert.path.push_back(best);
    at = best;
  }
  cert.leaf = at;
  return cert;
}

std::string format_certificate(const SpecialLeafCertificate& cert) {
  std::ostringstream out;
  out << "leaf " << cert.leaf << '\n' << "path";
  for (VertexId v : cert.path) out << ' ' << v;
  out << '\n';
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    out << "step " << i + 1 << " |Ci|=" << cert.steps[i].leaf_side
        << " min_other=";
    if (cert.steps[i].min_other) {
      out << *cert.steps[i].min_other;
    } else {
      out << "none";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace aft
