#include "orbicover/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace orbicover {

std::string LocalProfile::str() const {
  std::string s;
  for (size_t i = 0; i < point_types.size(); ++i) {
    if (i) s += " | ";
    s += point_types[i].str();
  }
  return s;
}

bool type_precedes(const CycleType& a, const CycleType& b) {
  std::vector<int> da(a.parts.rbegin(), a.parts.rend());
  std::vector<int> db(b.parts.rbegin(), b.parts.rend());
  return da > db;
}

namespace {

// Partitions of n with all parts >= min_part, parts nondecreasing.
void partitions_rec(int n, int min_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= n; ++p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<CycleType> point_type_options(int order, int degree) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_rec(degree, order, cur, parts);
  std::vector<CycleType> out;
  for (auto& p : parts) {
    if (order % 2 == 1) {
      // cones only over even orders, so odd points are fully regular
      bool all_regular = std::all_of(p.begin(), p.end(), [&](int L) { return L == order; });
      if (!all_regular) continue;
    }
    out.push_back(CycleType(std::move(p)));
  }
  return out;
}

void normalize_profile(LocalProfile& prof, const Signature& sig) {
  size_t i = 0;
  while (i < sig.orders.size()) {
    size_t j = i;
    while (j < sig.orders.size() && sig.orders[j] == sig.orders[i]) ++j;
    std::sort(prof.point_types.begin() + i, prof.point_types.begin() + j, type_precedes);
    i = j;
  }
}

}  // namespace

std::vector<Rat> profile_cone_angles(const LocalProfile& p, const Signature& sig) {
  std::vector<Rat> angles;
  for (size_t i = 0; i < p.point_types.size(); ++i)
    for (int L : p.point_types[i].parts)
      if (L != sig.orders[i]) angles.push_back(Rat(2 * L, sig.orders[i]));
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::optional<int> genus_from_cones(const Signature& sig, int degree,
                                    const std::vector<Rat>& angles_pi) {
  Rat target = orbifold_area_pi(sig) * degree;
  Rat k = 0;
  for (const Rat& a : angles_pi) k = k + (Rat(1) - a / 2);
  Rat h = (Rat(2) - k + target / 2) / 2;
  if (!h.is_integer() || h.num < 0) return std::nullopt;
  return static_cast<int>(h.num);
}

std::vector<LocalProfile> allowed_profiles(const Signature& sig, int degree) {
  int m = sig.points();
  std::vector<std::vector<CycleType>> options(m);
  for (int i = 0; i < m; ++i) {
    options[i] = point_type_options(sig.orders[i], degree);
    if (options[i].empty()) return {};
  }
  std::set<LocalProfile> kept;
  std::vector<int> pick(m, 0);
  while (true) {
    LocalProfile prof;
    prof.point_types.reserve(m);
    for (int i = 0; i < m; ++i) prof.point_types.push_back(options[i][pick[i]]);
    std::vector<Rat> angles = profile_cone_angles(prof, sig);
    if (!angles.empty() && genus_from_cones(sig, degree, angles) == std::optional<int>(2)) {
      normalize_profile(prof, sig);
      kept.insert(std::move(prof));
    }
    int i = m - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(options[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return std::vector<LocalProfile>(kept.begin(), kept.end());
}

std::vector<std::pair<int, int>> point_entries(TupleKind kind, const Signature& sig) {
  if (kind == TupleKind::sphere_quad) {
    if (sig.genus != 0 || sig.points() != 4)
      throw std::invalid_argument("quad tuple needs a genus-0, 4-point signature");
    return {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  }
  if (sig.genus != 1 || sig.points() != 1)
    throw std::invalid_argument("torus tuple needs a genus-1, 1-point signature");
  return {{2, 0}};
}

CoverInvariants cover_invariants(const MonodromyTuple& t, const Signature& sig) {
  CoverInvariants inv;
  bool all_at_least = true;
  bool cones_even = true;
  for (auto [entry, point] : point_entries(t.kind, sig)) {
    int r = sig.orders[point];
    for (int L : cycle_type(t.entries[entry]).parts) {
      if (L < r) all_at_least = false;
      if (L != r) {
        inv.cone_angles_pi.push_back(Rat(2 * L, r));
        if (r % 2 == 1) cones_even = false;
      }
    }
  }
  std::sort(inv.cone_angles_pi.begin(), inv.cone_angles_pi.end());
  auto genus = genus_from_cones(sig, t.degree(), inv.cone_angles_pi);
  if (!genus)
    throw std::logic_error("cover_invariants: non-integer genus for " + tuple_cycles_string(t));
  inv.genus = *genus;
  inv.flexible = is_hyperbolic(sig) && !is_triangular(sig) && all_at_least && cones_even &&
                 !inv.cone_angles_pi.empty();
  return inv;
}

namespace {

CoverClass make_class(MonodromyTuple canon, const Signature& sig, int degree,
                      const LocalProfile& prof) {
  CoverClass c;
  c.tuple = std::move(canon);
  c.sig = sig;
  c.degree = degree;
  c.profile = prof;
  CoverInvariants inv = cover_invariants(c.tuple, sig);
  if (inv.genus != 2 || !inv.flexible)
    throw std::logic_error("enumerated class violates its own constraints");
  c.cover_genus = inv.genus;
  c.cone_angles_pi = inv.cone_angles_pi;
  c.group = subgroup_summary(c.tuple.entries);
  c.transitive = true;
  c.flexible = true;
  return c;
}

}  // namespace

std::vector<CoverClass> enumerate_cover_classes(const Signature& sig, int degree) {
  std::vector<CoverClass> out;
  std::set<MonodromyTuple> seen;
  for (const LocalProfile& prof : allowed_profiles(sig, degree)) {
    if (sig.genus == 0) {
      const auto e1 = elements_with_cycle_type(prof.point_types[0], degree);
      const auto e2 = elements_with_cycle_type(prof.point_types[1], degree);
      const auto e3 = elements_with_cycle_type(prof.point_types[2], degree);
      const CycleType& t4 = prof.point_types[3];
      for (const Perm& s1 : e1)
        for (const Perm& s2 : e2) {
          Perm s12 = compose(s1, s2);
          for (const Perm& s3 : e3) {
            Perm s4 = inverse(compose(s12, s3));
            if (cycle_type(s4) != t4) continue;
            MonodromyTuple t = quad(s1, s2, s3, s4);
            if (!t.transitive()) continue;
            MonodromyTuple canon = canonicalize_tuple(t);
            if (seen.insert(canon).second) out.push_back(make_class(canon, sig, degree, prof));
          }
        }
    } else {
      const CycleType& boundary = prof.point_types[0];
      for (const Perm& a : all_perms(degree))
        for (const Perm& b : all_perms(degree)) {
          Perm c = commutator(a, b);
          if (cycle_type(c) != boundary) continue;
          MonodromyTuple t = triple(a, b, c);
          if (!t.transitive()) continue;
          MonodromyTuple canon = canonicalize_tuple(t);
          if (seen.insert(canon).second) out.push_back(make_class(canon, sig, degree, prof));
        }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CoverClass& a, const CoverClass& b) { return a.tuple < b.tuple; });
  return out;
}

}  // namespace orbicover
