// Exact arithmetic primitives shared by the whole library.
// All coefficients are GMP integers/rationals; no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmlie {

using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline VecQ to_vecq(const VecZ& v) {
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline bool is_zero(const VecZ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline VecZ operator+(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VecZ operator-(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline VecZ operator-(const VecZ& a) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline VecZ operator*(const Int& c, const VecZ& a) {
  VecZ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline VecQ operator+(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline VecQ operator-(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline VecQ operator*(const Rat& c, const VecQ& a) {
  VecQ out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

// Sum of coefficients; the universal truncation norm on the root lattice.
inline Int height(const VecZ& v) {
  Int h = 0;
  for (const auto& x : v) h += x;
  return h;
}

inline Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const VecQ& a, const VecZ& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

// Scale a rational vector to a primitive integer vector (positive leading sign
// preserved as given).
inline VecZ primitive_integer(const VecQ& v) {
  Int lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  VecZ out(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p", "-p", "p/q"; throws with an offset-carrying message on garbage.
inline Rat parse_rat(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(Int(s), 1);
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an exact rational: '" + s + "'");
  }
}

inline std::string vec_str(const VecZ& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out;
}

inline std::string vec_str(const VecQ& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

}  // namespace kmlie
