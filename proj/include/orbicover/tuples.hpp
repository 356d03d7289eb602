#pragma once

#include <string>
#include <vector>

#include "orbicover/perm.hpp"

namespace orbicover {

enum class TupleKind {
  sphere_quad,   // [s1,s2,s3,s4] with s1 s2 s3 = s4^-1
  torus_triple,  // [a,b,c] with a b a^-1 b^-1 = c
};

// One branched cover, encoded as the images of the boundary/handle generators.
struct MonodromyTuple {
  TupleKind kind = TupleKind::sphere_quad;
  std::vector<Perm> entries;

  MonodromyTuple() = default;
  MonodromyTuple(TupleKind k, std::vector<Perm> e);

  int degree() const { return entries.empty() ? 0 : entries.front().degree(); }
  bool satisfies_relation() const;
  bool transitive() const;

  bool operator==(const MonodromyTuple&) const = default;
  auto operator<=>(const MonodromyTuple&) const = default;
};

MonodromyTuple quad(const Perm& s1, const Perm& s2, const Perm& s3, const Perm& s4);
MonodromyTuple triple(const Perm& a, const Perm& b, const Perm& c);

// Convenience for fixtures: entries given in cycle notation.
MonodromyTuple tuple_from_cycles(TupleKind kind, int degree, const std::vector<std::string>& cycles);

// "(0 3 1)(2 4 5), (0 2)(1 5)(3 4), ..."
std::string tuple_cycles_string(const MonodromyTuple& t);

// The lexicographically least tuple (comparing concatenated image arrays) over
// all simultaneous conjugations. Idempotent; two tuples are conjugate iff their
// canonical forms coincide.
MonodromyTuple canonicalize_tuple(const MonodromyTuple& t);

bool tuples_conjugate(const MonodromyTuple& a, const MonodromyTuple& b);

}  // namespace orbicover
