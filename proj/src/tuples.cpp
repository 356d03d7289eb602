#include "orbicover/tuples.hpp"

#include <stdexcept>

namespace orbicover {

MonodromyTuple::MonodromyTuple(TupleKind k, std::vector<Perm> e) : kind(k), entries(std::move(e)) {
  size_t want = (kind == TupleKind::sphere_quad) ? 4 : 3;
  if (entries.size() != want) throw std::invalid_argument("tuple: wrong number of entries");
  for (const Perm& p : entries)
    if (p.degree() != entries.front().degree())
      throw std::invalid_argument("tuple: mixed degrees");
}

bool MonodromyTuple::satisfies_relation() const {
  if (kind == TupleKind::sphere_quad)
    return compose(entries[0], compose(entries[1], entries[2])) == inverse(entries[3]);
  return commutator(entries[0], entries[1]) == entries[2];
}

bool MonodromyTuple::transitive() const {
  int d = degree();
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& p : entries) {
      int y = p.img[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == d;
}

MonodromyTuple quad(const Perm& s1, const Perm& s2, const Perm& s3, const Perm& s4) {
  return MonodromyTuple(TupleKind::sphere_quad, {s1, s2, s3, s4});
}

MonodromyTuple triple(const Perm& a, const Perm& b, const Perm& c) {
  return MonodromyTuple(TupleKind::torus_triple, {a, b, c});
}

MonodromyTuple tuple_from_cycles(TupleKind kind, int degree,
                                 const std::vector<std::string>& cycles) {
  std::vector<Perm> entries;
  entries.reserve(cycles.size());
  for (const std::string& c : cycles) entries.push_back(perm_from_cycles(c, degree));
  return MonodromyTuple(kind, std::move(entries));
}

std::string tuple_cycles_string(const MonodromyTuple& t) {
  std::string out;
  for (size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out += ", ";
    out += cycle_string(t.entries[i]);
  }
  return out;
}

MonodromyTuple canonicalize_tuple(const MonodromyTuple& t) {
  const int d = t.degree();
  const size_t k = t.entries.size();
  MonodromyTuple best = t;
  std::vector<int> conj(d);
  for (const Perm& g : all_perms(d)) {
    Perm gi = inverse(g);
    // Build the conjugated entries one at a time, bailing as soon as the
    // partial result exceeds the best seen so far.
    bool worse = false;
    bool better = false;
    MonodromyTuple cand = best;
    for (size_t e = 0; e < k && !worse; ++e) {
      const Perm& s = t.entries[e];
      for (int x = 0; x < d; ++x) conj[x] = g.img[s.img[gi.img[x]]];
      if (!better) {
        const std::vector<int>& ref = best.entries[e].img;
        int cmp = 0;
        for (int x = 0; x < d; ++x) {
          if (conj[x] != ref[x]) {
            cmp = conj[x] < ref[x] ? -1 : 1;
            break;
          }
        }
        if (cmp > 0) {
          worse = true;
          break;
        }
        if (cmp < 0) better = true;
        if (!better) continue;  // equal prefix; entry already matches best
      }
      cand.entries[e].img = conj;
    }
    if (better && !worse) {
      // Entries before the first strict improvement equal best's; keep them.
      best = cand;
    }
  }
  return best;
}

bool tuples_conjugate(const MonodromyTuple& a, const MonodromyTuple& b) {
  if (a.kind != b.kind || a.degree() != b.degree()) return false;
  return canonicalize_tuple(a) == canonicalize_tuple(b);
}

}  // namespace orbicover
