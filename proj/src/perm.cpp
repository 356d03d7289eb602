#include "orbicover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbicover {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("perm: not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) throw std::invalid_argument("compose: degree mismatch");
  Perm r;
  r.img.resize(s.degree());
  for (int x = 0; x < s.degree(); ++x) r.img[x] = s.img[t.img[x]];
  return r;
}

Perm inverse(const Perm& s) {
  Perm r;
  r.img.resize(s.degree());
  for (int x = 0; x < s.degree(); ++x) r.img[s.img[x]] = x;
  return r;
}

Perm conjugate(const Perm& g, const Perm& s) {
  if (g.degree() != s.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  Perm r;
  r.img.resize(s.degree());
  for (int x = 0; x < s.degree(); ++x) r.img[g.img[x]] = g.img[s.img[x]];
  return r;
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(a, compose(b, compose(inverse(a), inverse(b))));
}

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("cycle type: empty");
  for (int v : parts)
    if (v < 1) throw std::invalid_argument("cycle type: nonpositive part");
  std::sort(parts.begin(), parts.end());
}

int CycleType::total() const {
  int s = 0;
  for (int v : parts) s += v;
  return s;
}

std::string CycleType::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

CycleType cycle_type(const Perm& s) {
  std::vector<int> parts;
  std::vector<char> seen(s.degree(), 0);
  for (int i = 0; i < s.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = s.img[j]) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<std::vector<int>> nontrivial_cycles(const Perm& s) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(s.degree(), 0);
  for (int i = 0; i < s.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = s.img[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    if (cyc.size() >= 2) out.push_back(std::move(cyc));
  }
  return out;
}

std::string cycle_string(const Perm& s) {
  auto cycles = nontrivial_cycles(s);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cyc[i]);
    }
    out += ")";
  }
  return out;
}

Perm perm_from_cycles(const std::string& text, int degree) {
  Perm p = Perm::identity(degree);
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("cycle parse: expected '('");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("cycle parse: missing ')'");
    std::string body = text.substr(i + 1, close - i - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<int> cyc;
    int v;
    while (in >> v) {
      if (v < 0 || v >= degree) throw std::invalid_argument("cycle parse: point out of range");
      cyc.push_back(v);
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (p.img[from] != from) throw std::invalid_argument("cycle parse: repeated point");
      p.img[from] = to;
    }
    i = close + 1;
  }
  return Perm(std::move(p.img));  // revalidate
}

std::vector<Perm> elements_with_cycle_type(const CycleType& t, int degree) {
  if (t.total() != degree) throw std::invalid_argument("cycle type does not sum to the degree");
  // Build each element by chopping an arrangement of the points into cycles of
  // the prescribed lengths, then deduplicate.
  std::vector<int> points(degree);
  std::iota(points.begin(), points.end(), 0);
  std::set<Perm> out;
  do {
    Perm p = Perm::identity(degree);
    int at = 0;
    for (int len : t.parts) {
      for (int k = 0; k < len; ++k) p.img[points[at + k]] = points[at + (k + 1) % len];
      at += len;
    }
    out.insert(std::move(p));
  } while (std::next_permutation(points.begin(), points.end()));
  return std::vector<Perm>(out.begin(), out.end());
}

const std::vector<Perm>& all_perms(int degree) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("all_perms: degree out of range");
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<Perm> perms;
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  do {
    Perm p;
    p.img = img;
    perms.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return cache.emplace(degree, std::move(perms)).first->second;
}

int order_of(const Perm& s) {
  int ord = 1;
  Perm p = s;
  while (!p.is_identity()) {
    p = compose(p, s);
    ++ord;
  }
  return ord;
}

}  // namespace orbicover
