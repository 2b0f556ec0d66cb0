#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aft/tree.hpp"

namespace aft {

enum class CodeKind { kRooted, kUnicentral, kBicentral };

// AHU code. A leaf is "()"; an internal vertex is "(" + its children's codes
// in ascending code order + ")". Free trees get a prefix: "C" + the code at
// the unique center, or "B" + the two half-codes (ascending) obtained by
// cutting the edge between the two centers.
//
// Code order is lexicographic over the alphabet with ')' before '('. This is
// the usual 1/0 bit-string order of AHU codes, and it places a leaf "()"
// before any deeper subtree.
struct CanonicalCode {
  std::string text;
  CodeKind kind = CodeKind::kRooted;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

bool code_less(std::string_view a, std::string_view b);

struct CodeOrder {
  bool operator()(std::string_view a, std::string_view b) const {
    return code_less(a, b);
  }
  bool operator()(const CanonicalCode& a, const CanonicalCode& b) const {
    return code_less(a.text, b.text);
  }
};

CanonicalCode rooted_code(const Tree& t, VertexId root);
CanonicalCode canonical_code(const Tree& t);
bool are_isomorphic(const Tree& t1, const Tree& t2);

struct Automorphism {
  std::vector<VertexId> mapping;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

struct AutCount {
  std::uint64_t order = 1;
};

// |Aut(T)| by the multiplicative formula over the canonically rooted tree.
// Throws kOverflow if the order does not fit in 64 bits.
AutCount aut_order(const Tree& t);

// Syntactic rigidity test: no vertex of the canonically rooted tree has two
// children with equal codes, and a bicentral tree has distinct halves.
// Requires n >= 2.
bool is_asymmetric(const Tree& t);

inline constexpr std::size_t kBruteForceLimit = 10;

// Every adjacency-preserving permutation, found by backtracking over the
// vertices in id order with degree pruning. Requires n <= kBruteForceLimit.
std::vector<Automorphism> brute_force_automorphisms(const Tree& t);

// Relabeling that sends t to its canonical representative: a preorder walk
// from the center(s) visiting children in ascending code order. Isomorphic
// trees have identical canonical representatives.
struct CanonicalForm {
  Tree tree;
  std::vector<VertexId> perm;  // perm[v] = position of v in the canonical tree
};

CanonicalForm canonical_form(const Tree& t);

// An isomorphism from t1 onto t2 (mapping[v] in t2 for v in t1), if any.
std::optional<std::vector<VertexId>> find_isomorphism(const Tree& t1, const Tree& t2);

}  // namespace aft
