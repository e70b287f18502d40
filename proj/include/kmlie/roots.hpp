// Root enumeration for affine (and finite) GCMs.
//
// Real roots are generated by closing {±alpha_i} under simple reflections
// within a height window; this is complete because every positive real root
// descends to a simple root through roots of strictly smaller height, so the
// whole ascent stays inside the window. No per-type root formulas.
#pragma once

#include <map>
#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/gcm.hpp"
#include "kmlie/numeric.hpp"

namespace kmlie {

enum class RootKind { Real, Imaginary };

struct Root {
  VecZ coeffs;
  RootKind kind = RootKind::Real;
  Int mult = 1;

  bool imaginary() const { return kind == RootKind::Imaginary; }
};

// dim of the kdelta root space. Twist 1: the finite rank, for every k.
// Twisted types: the dimension of the k mod r graded piece of the underlying
// finite Cartan subalgebra under the diagram automorphism; those dimensions
// are (#nodes-1) for k = 0 mod r and (rank - (#nodes-1))/(r-1) otherwise
// (the nonzero eigenspaces of the automorphism share the remaining rank
// equally), which the tests validate against explicit diagonalization.
inline Int imaginary_multiplicity(const Gcm& g, const Int& k) {
  if (!g.affine()) throw std::invalid_argument("imaginary_multiplicity: finite type has no imaginary roots");
  if (k == 0) throw std::invalid_argument("imaginary_multiplicity: k = 0 is not a root");
  const int twist = g.label.twist;
  const int l_aff = g.n - 1;
  if (twist == 1) return g.label.rank;
  if (k % twist == 0) return l_aff;
  return Int(g.label.rank - l_aff) / (twist - 1);
}

struct RootSet {
  Gcm gcm;
  Int bound = 0;
  std::vector<Root> roots;          // deterministic order: (height, lex)
  std::map<VecZ, size_t> index;

  bool contains(const VecZ& v) const { return index.count(v) != 0; }

  const Root* find(const VecZ& v) const {
    auto it = index.find(v);
    return it == index.end() ? nullptr : &roots[it->second];
  }
};

inline RootSet enumerate_roots(const Gcm& g, const Int& height_bound) {
  if (height_bound < 1) throw std::invalid_argument("enumerate_roots: height bound must be >= 1");
  std::set<VecZ> real;
  std::vector<VecZ> frontier;
  for (int i = 0; i < g.n; ++i) {
    VecZ e(g.n, Int(0));
    e[i] = 1;
    for (const VecZ& v : {e, -e}) {
      real.insert(v);
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    std::vector<VecZ> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < g.n; ++i) {
        VecZ r = g.reflect(i, beta);
        Int h = height(r);
        if (h < 0) h = -h;
        if (h > height_bound) continue;
        if (real.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }

  RootSet rs;
  rs.gcm = g;
  rs.bound = height_bound;
  for (const auto& v : real) rs.roots.push_back({v, RootKind::Real, 1});
  if (g.affine()) {
    const Int hd = height(g.marks);
    for (Int k = 1; k * hd <= height_bound; ++k) {
      const Int neg = -k;
      rs.roots.push_back({k * g.marks, RootKind::Imaginary, imaginary_multiplicity(g, k)});
      rs.roots.push_back({neg * g.marks, RootKind::Imaginary, imaginary_multiplicity(g, neg)});
    }
  }
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
    Int ha = height(a.coeffs), hb = height(b.coeffs);
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  });
  for (size_t i = 0; i < rs.roots.size(); ++i) rs.index[rs.roots[i].coeffs] = i;
  return rs;
}

}  // namespace kmlie
