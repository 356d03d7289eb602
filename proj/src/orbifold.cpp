#include "orbicover/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbicover {

Signature::Signature(int g, std::vector<int> ords) : genus(g), orders(std::move(ords)) {
  if (genus < 0) throw std::invalid_argument("signature: negative genus");
  for (int r : orders)
    if (r < 2) throw std::invalid_argument("signature: order < 2");
  std::sort(orders.begin(), orders.end());
}

std::string Signature::str() const {
  std::string s = "(" + std::to_string(genus) + ";";
  if (orders.empty()) s += " -";
  for (size_t i = 0; i < orders.size(); ++i)
    s += (i ? "," : " ") + std::to_string(orders[i]);
  return s + ")";
}

Rat orbifold_area_pi(const Signature& sig) {
  Rat sum = 0;
  for (int r : sig.orders) sum = sum + (Rat(1) - Rat(1, r));
  return Rat(-2) * (Rat(2 - 2 * sig.genus) - sum);
}

bool is_hyperbolic(const Signature& sig) { return orbifold_area_pi(sig) > Rat(0); }

bool is_triangular(const Signature& sig) { return sig.genus == 0 && sig.points() == 3; }

Rat cone_surface_area_pi(const ConeData& c) {
  Rat sum = 0;
  for (const Rat& a : c.angles_pi) sum = sum + (Rat(1) - a / 2);
  return Rat(-2) * (Rat(2 - 2 * c.genus) - sum);
}

int max_cone_points(const Signature& sig, int degree, int genus) {
  int r = 0;
  for (int v : sig.orders)
    if (v % 2 == 0) r = std::max(r, v);
  if (r == 0)
    throw std::invalid_argument("max_cone_points: signature has no even order");
  Rat a = orbifold_area_pi(sig);
  Rat n = Rat(-r) * (a * degree - Rat(4 * genus) + Rat(4)) / Rat(2);
  long long f = n.floor();
  return f < 0 ? 0 : static_cast<int>(f);
}

namespace {

void order_lists(int m, int max_order, int min_val, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int r = min_val; r <= max_order; ++r) {
    cur.push_back(r);
    order_lists(m, max_order, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CandidateRow> candidate_signatures() {
  const std::vector<std::pair<int, int>> genus_points = {{0, 4}, {0, 5}, {1, 1}};
  std::vector<CandidateRow> rows;
  for (auto [g, m] : genus_points) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    order_lists(m, 12, 2, cur, lists);
    for (const auto& orders : lists) {
      Signature sig(g, orders);
      Rat area = orbifold_area_pi(sig);
      if (!(area > Rat(0))) continue;
      std::vector<int> degrees;
      for (int d = 3; d <= 12; ++d) {
        bool ok = true;
        for (int r : sig.orders) {
          if (r > d) ok = false;
          if (r % 2 == 1 && d % r != 0) ok = false;
        }
        if (ok && area * d < Rat(4)) degrees.push_back(d);
      }
      if (!degrees.empty()) rows.push_back({sig, degrees, area});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const CandidateRow& a, const CandidateRow& b) { return a.sig < b.sig; });
  return rows;
}

ExclusionCheck parity_exclusion(const Signature& sig, int degree) {
  if (degree % 2 == 0) return {false, ""};
  int evens = 0;
  for (int r : sig.orders)
    if (r % 2 == 0) ++evens;
  if (evens == 0) return {false, ""};
  int bound = max_cone_points(sig, degree, 2);
  if (bound < evens) {
    return {true,
            "at most " + std::to_string(bound) + " cone points for " + std::to_string(evens) +
                " even-order points: some even-order point has an all-regular fiber, forcing an "
                "even degree"};
  }
  return {false, ""};
}

std::vector<std::pair<Signature, int>> surviving_pairs() {
  std::vector<std::pair<Signature, int>> out;
  for (const CandidateRow& row : candidate_signatures())
    for (int d : row.degrees)
      if (!parity_exclusion(row.sig, d).excluded) out.emplace_back(row.sig, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbicover
