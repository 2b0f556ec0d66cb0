#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aft/canon.hpp"
#include "aft/tree.hpp"

namespace aft {

// Leaf-deletion poset over asymmetric trees, represented by its cover edges:
// T1 < T2 when T1 comes from T2 by deleting one leaf at a time with every
// intermediate tree asymmetric.

struct PosetNode {
  CanonicalCode code;
  Tree representative;
};

struct PosetLevel {
  std::size_t n = 0;
  std::vector<PosetNode> nodes;  // ascending code order
};

struct CoverEdge {
  CanonicalCode lower;
  CanonicalCode upper;
  VertexId witness_leaf = 0;  // in the upper representative's labeling
};

struct HasseDiagram {
  std::vector<PosetLevel> levels;  // n = 7, 8, ..., n_max
  std::vector<CoverEdge> covers;
};

struct ReductionStep {
  VertexId leaf = 0;             // in the labeling of the tree before the step
  std::vector<VertexId> id_map;  // old id -> new id, kNoVertex for the leaf
  CanonicalCode code_after;
};

struct ReductionTrace {
  Tree start;
  std::vector<ReductionStep> steps;
  CanonicalCode end_code;
};

// Ascent from the labeled e7() tree: replaying add_leaf at each id in turn
// rebuilds the target up to isomorphism.
struct AscentChain {
  std::vector<VertexId> attach_at;
};

const CanonicalCode& e7_code();

// Leaves whose deletion leaves an asymmetric tree. Throws kNotAsymmetric.
std::vector<VertexId> safe_leaves(const Tree& t);

// Deletes the smallest safe leaf until the tree is E7, or a uniformly random
// safe leaf when a seed is given. Throws kNotAsymmetric for symmetric input
// and kStuckNotAtE7 if a tree other than E7 has no safe leaf.
ReductionTrace reduce_to_e7(const Tree& t,
                            std::optional<std::uint64_t> seed = std::nullopt);

// Replays the trace from its start. Returns the first problem found, or
// std::nullopt when every intermediate is asymmetric, every recorded code
// matches, and the trace ends at E7.
std::optional<std::string> check_trace(const ReductionTrace& trace);

AscentChain chain_from_e7(const Tree& t);
Tree replay_ascent(const AscentChain& chain);

// Throws kOutOfRange outside 7..kMaxEnumerationN.
HasseDiagram build_hasse(std::size_t n_max);

// Codes of nodes without a safe leaf, over every level of the diagram.
std::vector<CanonicalCode> minimal_elements(const HasseDiagram& diagram);
std::vector<CanonicalCode> minimal_elements(std::size_t n_max);

std::string to_dot(const HasseDiagram& diagram);
std::string to_tsv(const HasseDiagram& diagram);
std::string format_trace(const ReductionTrace& trace);

}  // namespace aft
