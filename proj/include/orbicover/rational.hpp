#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbicover {

// Exact rational arithmetic. Every quantity the pipeline checks is an exact
// identity, so areas and cone angles are kept as rationals (usually as the
// coefficient of pi) instead of floating point.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  // floor(num/den), correct for negatives
  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::invalid_argument("rational: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Renders a pi-coefficient the way the tables print areas: "pi/3", "2pi/3", "4pi".
inline std::string pi_string(const Rat& r) {
  if (r.num == 0) return "0";
  std::string s;
  if (r.num == -1)
    s = "-pi";
  else if (r.num == 1)
    s = "pi";
  else
    s = std::to_string(r.num) + "pi";
  if (r.den != 1) s += "/" + std::to_string(r.den);
  return s;
}

}  // namespace orbicover
