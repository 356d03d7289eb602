#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbicover {

// A permutation of {0,...,D-1} stored as its image array: img[i] is where i goes.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates that the array is a bijection
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img.size()); }
  int operator[](int x) const { return img[x]; }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
};

// compose(s, t) is the function s o t: t is applied first, then s.
// Under this convention (0 1 2 3)(0 1) = (0 2 3).
Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& s);
// g s g^-1
Perm conjugate(const Perm& g, const Perm& s);
// a b a^-1 b^-1
Perm commutator(const Perm& a, const Perm& b);

// Multiset of cycle lengths, fixed points included, so the parts always sum to
// the degree.
struct CycleType {
  std::vector<int> parts;  // sorted ascending

  CycleType() = default;
  explicit CycleType(std::vector<int> p);  // sorts, validates positivity

  int total() const;
  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;
  std::string str() const;  // "(2,2,2)"
};

CycleType cycle_type(const Perm& s);

// Cycles of length >= 2, each rotated to start at its least point, sorted by
// that point. Fixed points are omitted.
std::vector<std::vector<int>> nontrivial_cycles(const Perm& s);

// "(0 1)(2 3)" with 0-based points and fixed points omitted; "()" for the identity.
std::string cycle_string(const Perm& s);

// Parses the output of cycle_string (points separated by spaces or commas).
Perm perm_from_cycles(const std::string& text, int degree);

// All elements of Sym(degree) with the given cycle type, deduplicated and sorted.
std::vector<Perm> elements_with_cycle_type(const CycleType& t, int degree);

// All of Sym(degree) in lexicographic order, cached. Degrees up to 8 only; the
// search never needs more.
const std::vector<Perm>& all_perms(int degree);

int order_of(const Perm& s);

}  // namespace orbicover
