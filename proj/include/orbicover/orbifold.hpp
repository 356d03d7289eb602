#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbicover/rational.hpp"

namespace orbicover {

// Orbifold type: genus plus the point orders, always sorted ascending.
struct Signature {
  int genus = 0;
  std::vector<int> orders;

  Signature() = default;
  Signature(int g, std::vector<int> ords);  // sorts, validates orders >= 2

  int points() const { return static_cast<int>(orders.size()); }
  std::string str() const;  // "(0; 2,2,2,3)"

  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

// Area as a coefficient of pi: A = -2pi(2 - 2g - sum(1 - 1/r_i)).
Rat orbifold_area_pi(const Signature& sig);

bool is_hyperbolic(const Signature& sig);
bool is_triangular(const Signature& sig);

// A surface with cone points; angles are stored in units of pi.
struct ConeData {
  int genus = 0;
  std::vector<Rat> angles_pi;
};

// A = -2pi(2 - 2g - sum(1 - Theta_i/2pi)), returned as the pi coefficient.
Rat cone_surface_area_pi(const ConeData& c);

// Upper bound on the number of cone points of a genus-h cover:
// n_max = -r (A(psi) D - 4 pi h + 4 pi) / (2 pi), r the largest even order.
// Clamped at 0; requires at least one even order.
int max_cone_points(const Signature& sig, int degree, int genus);

struct CandidateRow {
  Signature sig;
  std::vector<int> degrees;
  Rat area_pi;

  bool operator==(const CandidateRow&) const = default;
};

// Every (signature, degree) pair passing the basic obstructions: degree in
// 3..12, (genus, points) in {(0,4),(0,5),(1,1)}, orders at most the degree,
// odd orders dividing the degree, and D * area < 4 pi with area positive.
std::vector<CandidateRow> candidate_signatures();

struct ExclusionCheck {
  bool excluded = false;
  std::string reason;
};

// Odd-degree exclusion: if the cone-point bound leaves fewer cone points than
// there are even-order points, some even-order point has an all-regular fiber,
// which forces the degree to be even.
ExclusionCheck parity_exclusion(const Signature& sig, int degree);

// Candidate pairs that survive parity_exclusion, sorted.
std::vector<std::pair<Signature, int>> surviving_pairs();

}  // namespace orbicover
