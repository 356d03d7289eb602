#pragma once

#include <optional>
#include <vector>

#include "orbicover/group.hpp"
#include "orbicover/orbifold.hpp"
#include "orbicover/rational.hpp"
#include "orbicover/tuples.hpp"

namespace orbicover {

// One admissible branching pattern: a cycle type over each orbifold point, in
// signature order. Within a run of equal orders the types are kept in
// canonical (descending-rank) order, so equal patterns compare equal.
struct LocalProfile {
  std::vector<CycleType> point_types;

  bool operator==(const LocalProfile&) const = default;
  auto operator<=>(const LocalProfile&) const = default;
  std::string str() const;  // "(3,3) | (2,2,2) | (2,2,2) | (3,3)"
};

// Canonical ordering of types within an equal-order block: larger parts first,
// so the branched type lands on the earliest position of its block.
bool type_precedes(const CycleType& a, const CycleType& b);

// All branching patterns over (sig, degree) giving a flexible cover by a
// genus-2 surface: every local degree L >= r, L > r only over even orders, at
// least one cone point, and the genus forced by the area identity equal to 2.
std::vector<LocalProfile> allowed_profiles(const Signature& sig, int degree);

// Cone angles (pi units, sorted) a profile produces.
std::vector<Rat> profile_cone_angles(const LocalProfile& p, const Signature& sig);

// Genus forced by the area identity A(cover) = D * A(sig) for the given cone
// angles; nullopt when it is not a non-negative integer.
std::optional<int> genus_from_cones(const Signature& sig, int degree,
                                    const std::vector<Rat>& angles_pi);

struct CoverInvariants {
  int genus = 0;
  std::vector<Rat> cone_angles_pi;  // sorted
  bool flexible = false;
};

// Derives cover data from the tuple itself: angle (2L/r) pi for each cycle of
// length L over a point of order r, genus from the area identity. Throws if
// the genus comes out non-integral (unreachable for relation-satisfying
// tuples).
CoverInvariants cover_invariants(const MonodromyTuple& t, const Signature& sig);

// One equivalence class of covers: the canonical tuple plus derived data.
struct CoverClass {
  MonodromyTuple tuple;  // canonical form
  Signature sig;
  int degree = 0;
  int cover_genus = 0;
  std::vector<Rat> cone_angles_pi;
  LocalProfile profile;
  GroupSummary group;
  bool transitive = false;
  bool flexible = false;
};

// Every conjugacy class of tuples realizing a flexible genus-2 cover over
// (sig, degree), sorted by canonical form. Entries over orbifold points range
// over their profile cycle types; the last boundary entry is solved from the
// relation and type-checked; handle entries of the torus range over all of
// Sym(D).
std::vector<CoverClass> enumerate_cover_classes(const Signature& sig, int degree);

// Positions of tuple entries that sit over orbifold points (all four for the
// quad, the commutator entry for the torus), paired with the point index.
std::vector<std::pair<int, int>> point_entries(TupleKind kind, const Signature& sig);

}  // namespace orbicover
