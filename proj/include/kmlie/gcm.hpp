// Generalized Cartan matrices for the finite and affine catalog, the null
// root, and the normalized invariant bilinear form.
//
// Conventions fixed here once and for all:
//   - a_ij = 2(alpha_i|alpha_j)/(alpha_i|alpha_i)  (row i belongs to coroot i)
//   - affine node has index 0; finite-type nodes are numbered along the path,
//     Bourbaki-style for D/E branches
//   - the symmetrizer is normalized so that max_i (alpha_i|alpha_i) = 2,
//     i.e. long real roots have squared length 2 in the untwisted types
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/linalg.hpp"
#include "kmlie/numeric.hpp"
#include "kmlie/typelabel.hpp"

namespace kmlie {

using MatZ = std::vector<VecZ>;

struct Gcm {
  TypeLabel label;
  MatZ a;       // (n x n) Cartan matrix
  VecZ marks;   // affine: primitive kernel vector (delta in the simple basis); finite: empty
  int n = 0;    // number of nodes

  bool affine() const { return label.twist > 0; }

  const Int& entry(int i, int j) const { return a[i][j]; }

  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, <alpha_j, alpha_i^vee> = a_ij
  VecZ reflect(int i, const VecZ& beta) const {
    Int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
    VecZ out = beta;
    out[i] -= pairing;
    return out;
  }

  friend bool operator==(const Gcm& x, const Gcm& y) { return x.label == y.label && x.a == y.a; }
};

namespace detail {

inline MatZ blank(int n) { return MatZ(n, VecZ(n, Int(0))); }

inline void diag2(MatZ& m) {
  for (size_t i = 0; i < m.size(); ++i) m[i][i] = 2;
}

// a_{ij} = -x, a_{ji} = -y
inline void edge(MatZ& m, int i, int j, int x = 1, int y = 1) {
  m[i][j] = -x;
  m[j][i] = -y;
}

inline MatZ finite_matrix(const TypeLabel& t) {
  const int l = t.rank;
  MatZ m = blank(l);
  diag2(m);
  auto path = [&](int from, int to) {
    for (int i = from; i < to; ++i) edge(m, i, i + 1);
  };
  switch (t.series) {
    case 'A': path(0, l - 1); break;
    case 'B':  // alpha_l short
      path(0, l - 2);
      edge(m, l - 2, l - 1, 1, 2);
      break;
    case 'C':  // alpha_l long
      path(0, l - 2);
      edge(m, l - 2, l - 1, 2, 1);
      break;
    case 'D':
      path(0, l - 3);
      edge(m, l - 3, l - 2);
      edge(m, l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-...-l, branch node 2 hangs off 4.
      edge(m, 0, 2);
      for (int i = 2; i < l - 1; ++i) edge(m, i, i + 1);
      edge(m, 1, 3);
      break;
    case 'F':  // 1,2 long; 3,4 short
      edge(m, 0, 1);
      edge(m, 1, 2, 1, 2);
      edge(m, 2, 3);
      break;
    case 'G':  // alpha_1 long, alpha_2 short
      edge(m, 0, 1, 1, 3);
      break;
    default: throw std::invalid_argument("finite_matrix: bad series");
  }
  return m;
}

}  // namespace detail

// The unique primitive positive integer vector in the kernel of A.
// Signals non-affine input if the kernel is not 1-dimensional.
inline VecZ null_root(const Gcm& g) {
  SparseMat m;
  for (int i = 0; i < g.n; ++i) {
    SparseRow r;
    for (int j = 0; j < g.n; ++j)
      if (g.a[i][j] != 0) r.emplace_back(j, Rat(g.a[i][j]));
    m.add_row(std::move(r));
  }
  m.ncols = g.n;
  auto ker = kernel_basis(m);
  if (ker.size() != 1)
    throw std::domain_error("null_root: kernel dimension " + std::to_string(ker.size()) +
                            " (matrix is not affine)");
  VecZ delta = primitive_integer(ker[0]);
  bool neg = false, pos = false;
  for (const auto& x : delta) (x < 0 ? neg : pos) = true;
  if (neg && pos) throw std::domain_error("null_root: kernel vector is not signed");
  if (neg) delta = -delta;
  for (const auto& x : delta)
    if (x == 0) throw std::domain_error("null_root: kernel vector has zero marks");
  return delta;
}

// Standard affine GCM for an admissible label, affine node at index 0.
inline Gcm affine_gcm(const TypeLabel& t) {
  using namespace detail;
  if (!admissible_affine(t)) {
    std::string cat;
    cat = "affine_gcm: inadmissible label " + to_string(t) +
          "; catalog: A>=1,B>=3,C>=2,D>=4,E6-8,F4,G2 (~1); A even>=2, A odd>=5, D>=3, E6 (~2); D4 (~3)";
    throw std::invalid_argument(cat);
  }
  Gcm g;
  g.label = t;
  const int l = t.rank;
  if (t.twist == 1) {
    const int n = l + 1;
    MatZ m = blank(n);
    diag2(m);
    // finite part on nodes 1..l
    MatZ fin = finite_matrix({t.series, l, 0});
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) m[i + 1][j + 1] = fin[i][j];
    switch (t.series) {
      case 'A':
        if (l == 1)
          edge(m, 0, 1, 2, 2);
        else {
          edge(m, 0, 1);
          edge(m, 0, l);
        }
        break;
      case 'B': edge(m, 0, 2); break;
      case 'C': edge(m, 0, 1, 1, 2); break;  // alpha_0 long
      case 'D': edge(m, 0, 2); break;
      case 'E': edge(m, 0, l == 6 ? 2 : l == 7 ? 1 : 8); break;
      case 'F': edge(m, 0, 1); break;
      case 'G': edge(m, 0, 1); break;
    }
    g.a = std::move(m);
  } else if (t.twist == 2 && t.series == 'A' && l % 2 == 0) {
    // A_{2n}^(2): n+1 nodes, three root lengths
    const int n = l / 2;
    MatZ m = blank(n + 1);
    diag2(m);
    if (n == 1) {
      m[0][1] = -4;
      m[1][0] = -1;
    } else {
      edge(m, 0, 1, 2, 1);
      for (int i = 1; i < n - 1; ++i) edge(m, i, i + 1);
      edge(m, n - 1, n, 2, 1);
    }
    g.a = std::move(m);
  } else if (t.twist == 2 && t.series == 'A') {
    // A_{2n-1}^(2): n+1 nodes, D-branch at one end, double edge at the other
    const int n = (l + 1) / 2;
    MatZ m = blank(n + 1);
    diag2(m);
    edge(m, 0, 2);
    edge(m, 1, 2);
    for (int i = 2; i < n - 1; ++i) edge(m, i, i + 1);
    edge(m, n - 1, n, 2, 1);
    g.a = std::move(m);
  } else if (t.twist == 2 && t.series == 'D') {
    // D_n^(2): n nodes, both ends short
    const int n = l;
    MatZ m = blank(n);
    diag2(m);
    edge(m, 0, 1, 2, 1);
    for (int i = 1; i < n - 2; ++i) edge(m, i, i + 1);
    edge(m, n - 2, n - 1, 1, 2);
    g.a = std::move(m);
  } else if (t.twist == 2 && t.series == 'E') {
    MatZ m = blank(5);
    diag2(m);
    edge(m, 0, 1);
    edge(m, 1, 2);
    edge(m, 2, 3, 2, 1);
    edge(m, 3, 4);
    g.a = std::move(m);
  } else {  // D_4^(3)
    MatZ m = blank(3);
    diag2(m);
    edge(m, 0, 1);
    edge(m, 1, 2, 3, 1);
    g.a = std::move(m);
  }
  g.n = static_cast<int>(g.a.size());
  g.marks = null_root(g);
  return g;
}

inline Gcm finite_gcm(const TypeLabel& t) {
  if (!admissible_finite(t))
    throw std::invalid_argument("finite_gcm: inadmissible label " + to_string(t));
  Gcm g;
  g.label = t;
  g.a = detail::finite_matrix(t);
  g.n = t.rank;
  return g;
}

// Full affine-condition check: GCM axioms, det = 0, all proper principal
// minors positive. Exponential in n, meant for validation and tests.
inline bool affine_condition_holds(const Gcm& g) {
  const int n = g.n;
  for (int i = 0; i < n; ++i) {
    if (g.a[i][i] != 2) return false;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.a[i][j] > 0) return false;
      if ((g.a[i][j] == 0) != (g.a[j][i] == 0)) return false;
    }
  }
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    MatZ sub(idx.size(), VecZ(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = g.a[idx[i]][idx[j]];
    if (det_bareiss(sub) <= 0) return false;
  }
  MatZ full = g.a;
  return det_bareiss(full) == 0;
}

// Symmetrized invariant form on the root lattice.
struct BilinearForm {
  TypeLabel label;
  VecQ d;                     // symmetrizer diagonal, max entry 1
  std::vector<VecQ> da;       // D*A, the Gram matrix of the simple roots

  Rat pairing(const VecZ& x, const VecZ& y) const {
    if (x.size() != da.size() || y.size() != da.size())
      throw std::invalid_argument("pairing: vector length does not match the form");
    Rat s = 0;
    for (size_t i = 0; i < da.size(); ++i) {
      if (x[i] == 0) continue;
      Rat row = 0;
      for (size_t j = 0; j < da.size(); ++j)
        if (y[j] != 0) row += da[i][j] * Rat(y[j]);
      s += Rat(x[i]) * row;
    }
    return s;
  }

  Rat pairing(const VecQ& x, const VecQ& y) const {
    Rat s = 0;
    for (size_t i = 0; i < da.size(); ++i) {
      if (x[i] == 0) continue;
      Rat row = 0;
      for (size_t j = 0; j < da.size(); ++j)
        if (y[j] != 0) row += da[i][j] * y[j];
      s += x[i] * row;
    }
    return s;
  }

  // squared length of a root
  Rat norm(const VecZ& x) const { return pairing(x, x); }
};

inline BilinearForm bilinear_form(const Gcm& g) {
  const int n = g.n;
  VecQ d(n, Rat(0));
  d[0] = 1;
  // propagate d_j * a_ji = d_i * a_ij along diagram edges
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || g.a[i][j] == 0) continue;
      Rat want = d[i] * Rat(g.a[i][j]) / Rat(g.a[j][i]);
      if (d[j] == 0) {
        d[j] = want;
        todo.push_back(j);
      } else if (d[j] != want) {
        throw std::domain_error("bilinear_form: matrix is not symmetrizable");
      }
    }
  }
  Rat mx = 0;
  for (const auto& x : d) {
    if (x == 0) throw std::domain_error("bilinear_form: diagram is disconnected");
    if (x > mx) mx = x;
  }
  BilinearForm f;
  f.label = g.label;
  f.d.resize(n);
  for (int i = 0; i < n; ++i) f.d[i] = d[i] / mx;
  f.da.assign(n, VecQ(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f.da[i][j] = f.d[i] * Rat(g.a[i][j]);
  return f;
}

}  // namespace kmlie
