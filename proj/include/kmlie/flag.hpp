// Oriented flags of rational functionals and the parabolic subsets they cut
// out of the root system. A subset is always represented intensionally (by
// its flag); set-level checks quantify over finite root windows.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/gcm.hpp"
#include "kmlie/linalg.hpp"
#include "kmlie/roots.hpp"

namespace kmlie {

struct Flag {
  Gcm gcm;
  std::vector<VecQ> functionals;  // h_1..h_k, each a covector on the root lattice

  int length() const { return static_cast<int>(functionals.size()); }
};

// Throws unless the functionals are linearly independent covectors.
inline Flag make_flag(const Gcm& g, std::vector<VecQ> functionals) {
  if (functionals.empty()) throw std::invalid_argument("flag: needs at least one functional");
  if (static_cast<int>(functionals.size()) > g.n)
    throw std::invalid_argument("flag: more functionals than the lattice rank");
  for (const auto& h : functionals)
    if (static_cast<int>(h.size()) != g.n)
      throw std::invalid_argument("flag: functional length != lattice rank");
  if (rank_of(functionals) != static_cast<int>(functionals.size()))
    throw std::invalid_argument("flag: functionals are linearly dependent");
  return Flag{g, std::move(functionals)};
}

enum class Side { Neg = -1, Kernel = 0, Pos = 1 };

// beta in P  <=>  the first nonzero among h_1(beta),...,h_k(beta) is positive,
// or all vanish (then beta is a Levi root, beta in P^0).
struct ParabolicSubset {
  Flag flag;

  Side side(const VecZ& beta) const {
    for (const auto& h : flag.functionals) {
      Rat v = dot(h, beta);
      if (v > 0) return Side::Pos;
      if (v < 0) return Side::Neg;
    }
    return Side::Kernel;
  }

  bool contains(const VecZ& beta) const { return side(beta) != Side::Neg; }
  bool in_p0(const VecZ& beta) const { return side(beta) == Side::Kernel; }
  bool in_nilrad(const VecZ& beta) const { return side(beta) == Side::Pos; }

  // number of leading functionals vanishing on delta
  int delta_prefix() const {
    if (!flag.gcm.affine()) throw std::domain_error("delta_prefix: finite GCM has no delta");
    int s = 0;
    for (const auto& h : flag.functionals) {
      if (dot(h, flag.gcm.marks) != 0) break;
      ++s;
    }
    return s;
  }

  // Default classification/enumeration bound; large enough for component
  // bases (heights <= 2 ht(delta)) plus one connecting shift.
  Int default_window_bound() const { return 3 * height(flag.gcm.marks); }

  // Spanning vectors of the lattice generated by the P^0 roots in a window
  // (the Q_P descriptor at window level).
  std::vector<VecZ> q_p_span(const RootSet& window) const {
    std::vector<VecZ> out;
    std::vector<VecQ> seen;
    for (const auto& r : window.roots) {
      if (!in_p0(r.coeffs)) continue;
      seen.push_back(to_vecq(r.coeffs));
      if (rank_of(seen) < static_cast<int>(seen.size()))
        seen.pop_back();
      else
        out.push_back(r.coeffs);
    }
    return out;
  }
};

inline ParabolicSubset subset_from_flag(const Flag& f) { return ParabolicSubset{f}; }

struct ParabolicKind {
  enum Kind { Partition, TypeIa, TypeIb, TypeII } kind;
  std::optional<int> s_index;  // TypeIb only: maximal s with delta in F_s

  bool operator==(const ParabolicKind& o) const { return kind == o.kind && s_index == o.s_index; }
};

inline const char* kind_name(ParabolicKind::Kind k) {
  switch (k) {
    case ParabolicKind::Partition: return "partition";
    case ParabolicKind::TypeIa: return "type-Ia";
    case ParabolicKind::TypeIb: return "type-Ib";
    default: return "type-II";
  }
}

// Classification relative to a root window: TypeII iff all functionals kill
// delta; otherwise Partition when no window root lies in the joint kernel,
// and Ia/Ib by whether delta survives a proper leading segment of the flag.
inline ParabolicKind kind(const ParabolicSubset& p, const RootSet& window) {
  int s = p.delta_prefix();
  if (s == p.flag.length()) return {ParabolicKind::TypeII, std::nullopt};
  bool kernel_root = false;
  for (const auto& r : window.roots)
    if (p.in_p0(r.coeffs)) {
      kernel_root = true;
      break;
    }
  if (!kernel_root) return {ParabolicKind::Partition, std::nullopt};
  if (s == 0) return {ParabolicKind::TypeIa, std::nullopt};
  return {ParabolicKind::TypeIb, s};
}

inline ParabolicKind kind(const ParabolicSubset& p) {
  return kind(p, enumerate_roots(p.flag.gcm, p.default_window_bound()));
}

}  // namespace kmlie
