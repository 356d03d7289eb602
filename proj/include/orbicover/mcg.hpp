#pragma once

#include <string>
#include <vector>

#include "orbicover/enumerate.hpp"

namespace orbicover {

// One factor of a rewrite word: the tuple entry at `pos`, inverted if `inv`.
struct MoveFactor {
  int pos = 0;
  bool inv = false;
};
using MoveWord = std::vector<MoveFactor>;

// A mapping-class move as a rewrite of the tuple: new entry k is the product
// of rewrite[k]'s factors, read left to right under composition.
struct TupleMove {
  std::string name;
  TupleKind kind = TupleKind::sphere_quad;
  std::vector<MoveWord> rewrite;
  // For half twists H(i,j): the 1-based points exchanged (admissible only when
  // their orders agree). -1 otherwise.
  int swaps_i = -1;
  int swaps_j = -1;
};

// Half twist exchanging points i and j, 1-based, i != j, per the action tables.
TupleMove move_H(int i, int j);
// Its square; tabulated independently of move_H.
TupleMove move_F(int i, int j);

// Torus moves. The swap is the order-2 homeomorphism exchanging the two handle
// curves: [a,b,c] -> [b,a,c^-1]. The twists are the two handle Dehn twists
// (and inverses), which fix the boundary entry: e.g. [a,b,c] -> [a,ba,c].
TupleMove torus_swap();
std::vector<TupleMove> torus_twists();

bool move_admissible(const TupleMove& m, const Signature& sig);

// Applies the rewrite. The checked overload also enforces admissibility.
MonodromyTuple apply_move(const TupleMove& m, const MonodromyTuple& t);
MonodromyTuple apply_move(const TupleMove& m, const MonodromyTuple& t, const Signature& sig);

// The move set used for orbit computation over a signature: every F(i,j), the
// admissible H(i,j), or the torus swap plus twists.
std::vector<TupleMove> standard_moves(const Signature& sig);

// Restores the canonical type order within equal-order blocks by half twists
// (which are admissible there), so orbit states stay inside the enumerated set.
MonodromyTuple normalize_point_types(const MonodromyTuple& t, const Signature& sig);

// One signature-equivalence class: an orbit of conjugacy classes under the
// mapping-class moves.
struct SignatureClass {
  CoverClass representative;            // lexicographically least member
  std::vector<MonodromyTuple> members;  // canonical forms, sorted
  GroupSummary group;                   // constant across the orbit
};

// Partitions the classes into orbits by breadth-first closure on canonical
// forms. The input must be closed under the moves; a move escaping it throws.
std::vector<SignatureClass> signature_orbits(const std::vector<CoverClass>& classes,
                                             const Signature& sig,
                                             const std::vector<TupleMove>* moves = nullptr);

}  // namespace orbicover
