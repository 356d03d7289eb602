#include "orbicover/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace orbicover {

std::vector<Perm> group_closure(const std::vector<Perm>& gens) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  int d = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != d) throw std::invalid_argument("closure: mixed degrees");
  std::set<Perm> seen;
  std::deque<Perm> todo;
  Perm id = Perm::identity(d);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

namespace {

bool is_dihedral(const std::vector<Perm>& elems, const std::vector<int>& orders) {
  int n = static_cast<int>(elems.size());
  if (n < 6 || n % 2 != 0) return false;
  int m = n / 2;
  // order-2m group with a rotation of order m inverted by an involution
  for (const Perm& r : elems) {
    if (order_of(r) != m) continue;
    Perm ri = inverse(r);
    for (const Perm& s : elems) {
      if (s.is_identity() || order_of(s) != 2) continue;
      if (compose(s, compose(r, s)) == ri) {
        // s outside <r>
        Perm p = Perm::identity(r.degree());
        bool inside = false;
        for (int k = 0; k < m; ++k) {
          if (p == s) {
            inside = true;
            break;
          }
          p = compose(p, r);
        }
        if (!inside) return true;
      }
    }
  }
  (void)orders;
  return false;
}

}  // namespace

GroupSummary subgroup_summary(const std::vector<Perm>& gens) {
  std::vector<Perm> elems = group_closure(gens);
  GroupSummary s;
  s.order = static_cast<int>(elems.size());
  s.element_orders.reserve(elems.size());
  for (const Perm& p : elems) s.element_orders.push_back(order_of(p));
  std::sort(s.element_orders.begin(), s.element_orders.end());
  s.abelian = true;
  for (size_t i = 0; i < gens.size() && s.abelian; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) {
        s.abelian = false;
        break;
      }
  s.cyclic = std::find(s.element_orders.begin(), s.element_orders.end(), s.order) !=
             s.element_orders.end();
  if (s.cyclic)
    s.label = "C" + std::to_string(s.order);
  else if (is_dihedral(elems, s.element_orders))
    s.label = "D" + std::to_string(s.order) + "-style";
  else
    s.label = "order-" + std::to_string(s.order);
  return s;
}

bool is_transitive(const std::vector<Perm>& gens, int degree) {
  if (gens.empty()) return degree <= 1;
  for (const Perm& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("is_transitive: degree mismatch");
  std::vector<char> seen(degree, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      int y = g.img[x];
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree;
}

namespace {

// Recursively build every partition of the points into blocks of size `bs`,
// always placing the least unassigned point, and keep the invariant ones.
void partitions_rec(int degree, int bs, std::vector<int>& block_of, int assigned,
                    const std::vector<Perm>& gens, std::vector<BlockSystem>& out) {
  if (assigned == degree) {
    int nblocks = degree / bs;
    // invariance: every generator must send blocks onto blocks
    for (const Perm& g : gens) {
      std::vector<int> image_block(nblocks, -1);
      for (int x = 0; x < degree; ++x) {
        int b = block_of[x];
        int ib = block_of[g.img[x]];
        if (image_block[b] == -1)
          image_block[b] = ib;
        else if (image_block[b] != ib)
          return;
      }
    }
    BlockSystem sys(nblocks);
    for (int x = 0; x < degree; ++x) sys[block_of[x]].push_back(x);
    std::sort(sys.begin(), sys.end());
    out.push_back(std::move(sys));
    return;
  }
  int seed = 0;
  while (block_of[seed] != -1) ++seed;
  int b = assigned / bs;
  block_of[seed] = b;
  std::vector<int> mates;
  // choose bs-1 mates among the remaining unassigned points, in order
  std::vector<int> free;
  for (int x = seed + 1; x < degree; ++x)
    if (block_of[x] == -1) free.push_back(x);
  std::vector<int> idx(bs - 1);
  // iterate combinations
  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == bs - 1) {
      partitions_rec(degree, bs, block_of, assigned + bs, gens, out);
      return;
    }
    for (int i = start; i <= static_cast<int>(free.size()) - (bs - 1 - chosen); ++i) {
      block_of[free[i]] = b;
      self(self, i + 1, chosen + 1);
      block_of[free[i]] = -1;
    }
  };
  rec(rec, 0, 0);
  block_of[seed] = -1;
  (void)idx;
}

}  // namespace

std::vector<BlockSystem> block_systems(const std::vector<Perm>& gens, int degree) {
  if (degree > 12) throw std::invalid_argument("block_systems: degree > 12");
  if (!is_transitive(gens, degree)) throw std::invalid_argument("block_systems: action not transitive");
  std::vector<BlockSystem> out;
  for (int bs = 2; bs <= degree / 2; ++bs) {
    if (degree % bs != 0) continue;
    std::vector<int> block_of(degree, -1);
    partitions_rec(degree, bs, block_of, 0, gens, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbicover
