// Parabolic subsets from subsets of the simple roots, Levi decompositions,
// diagram recognition, pseudo parabolic data, the type-Ib m_P extension and
// the type-II Levi classification table.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/flag.hpp"
#include "kmlie/gcm.hpp"
#include "kmlie/linalg.hpp"
#include "kmlie/roots.hpp"

namespace kmlie {

struct InsufficientWindow : std::runtime_error {
  Int required;
  explicit InsufficientWindow(const Int& req)
      : std::runtime_error("insufficient root window; need height bound >= " + req.get_str()),
        required(req) {}
};

// ---------------------------------------------------------------------------
// subset_from_S: P_S = S_pi u P_+ realized by a flag with joint kernel
// span(S, delta). One coefficient functional per basis direction outside
// span(S, delta), ordered by node index, all oriented positive.
// ---------------------------------------------------------------------------

// Nodes usable as alpha_0: mark 1 and delta - alpha is a root or twice one.
inline bool alpha0_admissible(const Gcm& g, const RootSet& window, int node) {
  if (!g.affine()) return false;
  if (g.marks[node] != 1) return false;
  VecZ rest = g.marks;
  rest[node] -= 1;  // delta - alpha_node
  if (window.contains(rest)) return true;
  for (const auto& x : rest)
    if (x % 2 != 0) return false;
  VecZ half(rest.size());
  for (size_t i = 0; i < rest.size(); ++i) half[i] = rest[i] / 2;
  return window.contains(half);
}

inline std::vector<int> admissible_alpha0_nodes(const Gcm& g) {
  RootSet window = enumerate_roots(g, height(g.marks));
  std::vector<int> out;
  for (int i = 0; i < g.n; ++i)
    if (alpha0_admissible(g, window, i)) out.push_back(i);
  return out;
}

inline ParabolicSubset subset_from_S(const Gcm& g, int alpha0, const std::vector<int>& S) {
  if (!g.affine()) throw std::invalid_argument("subset_from_S: affine GCM required");
  if (alpha0 < 0 || alpha0 >= g.n) throw std::invalid_argument("subset_from_S: bad alpha_0 index");
  RootSet small = enumerate_roots(g, height(g.marks));
  if (!alpha0_admissible(g, small, alpha0))
    throw std::invalid_argument("subset_from_S: node " + std::to_string(alpha0) +
                                " does not satisfy the alpha_0 condition");
  std::set<int> s_set(S.begin(), S.end());
  for (int i : S)
    if (i < 0 || i >= g.n || i == alpha0) throw std::invalid_argument("subset_from_S: bad S node");
  if (static_cast<int>(s_set.size()) == g.n - 1)
    throw std::invalid_argument("subset_from_S: S must be a proper subset of the finite nodes");

  // beta = c_delta * delta + sum_{i != alpha0} c_i alpha_i with
  // c_delta = beta_{alpha0} (mark of alpha0 is 1) and c_i = beta_i - c_delta m_i.
  std::vector<VecQ> funcs;
  for (int i = 0; i < g.n; ++i) {
    if (i == alpha0 || s_set.count(i)) continue;
    VecQ h(g.n, Rat(0));
    h[i] = 1;
    h[alpha0] = -Rat(g.marks[i]);
    funcs.push_back(std::move(h));
  }
  return subset_from_flag(make_flag(g, std::move(funcs)));
}

// ---------------------------------------------------------------------------
// recognize_type: Cartan matrix of a candidate basis matched against the
// catalog up to simultaneous row/column permutation.
// ---------------------------------------------------------------------------

struct RecognitionError : std::runtime_error {
  MatZ cartan;
  RecognitionError(std::string msg, MatZ m)
      : std::runtime_error(std::move(msg)), cartan(std::move(m)) {}
};

namespace detail {

inline bool perm_equal(const MatZ& a, const MatZ& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  // signature prefilter: multiset of off-diagonal (a_ij, a_ji) pairs per node
  auto sig = [n](const MatZ& m, int i) {
    std::vector<std::pair<Int, Int>> s;
    for (int j = 0; j < n; ++j)
      if (j != i && m[i][j] != 0) s.emplace_back(m[i][j], m[j][i]);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::pair<Int, Int>>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = sig(a, i);
    sb[i] = sig(b, i);
  }
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  // DFS assignment: perm[i] = image of row i of a in b
  auto consistent = [&](int i, int cand) {
    if (sa[i] != sb[cand]) return false;
    for (int j = 0; j < i; ++j) {
      if (a[i][j] != b[cand][perm[j]] || a[j][i] != b[perm[j]][cand]) return false;
    }
    return true;
  };
  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || !consistent(i, cand)) continue;
      used[cand] = true;
      perm[i] = cand;
      if (dfs(i + 1)) return true;
      used[cand] = false;
      perm[i] = -1;
    }
    return false;
  };
  return dfs(0);
}

}  // namespace detail

// Cartan matrix <beta_j, beta_i^vee> of a root basis under the ambient form.
inline MatZ basis_cartan_matrix(const BilinearForm& form, const std::vector<VecZ>& basis) {
  const int n = static_cast<int>(basis.size());
  MatZ c(n, VecZ(n));
  for (int i = 0; i < n; ++i) {
    Rat ni = form.norm(basis[i]);
    if (ni == 0) throw std::invalid_argument("basis_cartan_matrix: isotropic basis root");
    for (int j = 0; j < n; ++j) {
      Rat v = 2 * form.pairing(basis[i], basis[j]) / ni;
      if (v.get_den() != 1)
        throw RecognitionError("basis pairing is not integral", MatZ{});
      c[i][j] = v.get_num();
    }
  }
  return c;
}

inline TypeLabel recognize_type(const BilinearForm& form, const std::vector<VecZ>& basis) {
  MatZ c = basis_cartan_matrix(form, basis);
  const int n = static_cast<int>(c.size());
  Int d = det_bareiss(c);
  const auto catalog = d == 0 ? affine_catalog(n) : finite_catalog(n);
  for (const auto& t : catalog) {
    Gcm g = t.twist == 0 ? finite_gcm(t) : affine_gcm(t);
    if (g.n != n) continue;
    if (detail::perm_equal(c, g.a)) return t;
  }
  std::string msg = "recognize_type: no catalog match for Cartan matrix [";
  for (const auto& row : c) msg += " " + vec_str(row) + ";";
  msg += " ]";
  throw RecognitionError(msg, c);
}

// ---------------------------------------------------------------------------
// Levi decomposition of P^0
// ---------------------------------------------------------------------------

struct LeviComponent {
  std::vector<VecZ> basis;         // indecomposable positive generators (ambient coords)
  TypeLabel label;                 // recognized type (twist 0 when finite)
  Int delta_scale = 0;             // component null root = delta_scale * delta; 0 if finite
  std::vector<VecQ> finite_parts;  // distinct finite parts of the component's roots
};

struct LeviData {
  Gcm gcm;
  std::vector<LeviComponent> components;
  // basis of the orthocomplement of the component Cartans inside the finite
  // Cartan, in finite root coordinates (untwisted ambient only)
  std::vector<VecQ> complement_basis;

  // dim G(S)_{k delta}
  Int complement_rank(const Int& k) const {
    Int total = imaginary_multiplicity(gcm, k);
    for (const auto& c : components) {
      if (c.delta_scale == 0) continue;
      if (k % c.delta_scale != 0) continue;
      total -= imaginary_multiplicity(affine_gcm(c.label), k / c.delta_scale);
    }
    return total;
  }
};

namespace detail {

// finite part: beta minus the delta-multiple carried by the affine node
inline VecQ finite_part(const Gcm& g, const VecZ& beta) {
  Rat c = make_rat(beta[0], g.marks[0]);
  VecQ out(g.n);
  for (int i = 0; i < g.n; ++i) out[i] = Rat(beta[i]) - c * Rat(g.marks[i]);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline LeviData levi_components(const ParabolicSubset& p, const RootSet& window) {
  const Gcm& g = p.flag.gcm;
  if (!g.affine()) throw std::invalid_argument("levi_components: affine ambient required");
  const Int required = 3 * height(g.marks);
  if (window.bound < required) throw InsufficientWindow(required);
  BilinearForm form = bilinear_form(g);

  // distinct finite parts of the real Levi roots
  std::vector<VecQ> parts;
  std::map<VecQ, int> part_id;
  std::vector<std::vector<VecZ>> roots_of_part;
  for (const auto& r : window.roots) {
    if (r.imaginary() || !p.in_p0(r.coeffs)) continue;
    // beta = fp + k delta; real roots never have height zero, so ambient
    // height positivity restricts to a standard positive system on each
    // component and indecomposables form its basis (the recognition step and
    // the delta-scale check below fail loudly if this ever breaks)
    VecQ fp = detail::finite_part(g, r.coeffs);
    auto [it, fresh] = part_id.try_emplace(fp, static_cast<int>(parts.size()));
    if (fresh) {
      parts.push_back(fp);
      roots_of_part.emplace_back();
    }
    roots_of_part[it->second].push_back(r.coeffs);
  }

  LeviData out;
  out.gcm = g;

  detail::UnionFind uf(static_cast<int>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (form.pairing(parts[i], parts[j]) != 0) uf.unite(static_cast<int>(i), static_cast<int>(j));

  std::map<int, std::vector<int>> classes;  // representative -> part indices
  for (size_t i = 0; i < parts.size(); ++i) classes[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  // deterministic component order: smallest node index carried by any finite part
  auto class_key = [&](const std::vector<int>& cls) {
    int best = g.n;
    for (int pi : cls)
      for (int node = 0; node < g.n; ++node)
        if (parts[pi][node] != 0) {
          best = std::min(best, node);
          break;
        }
    return best;
  };
  std::vector<std::vector<int>> ordered;
  for (auto& [rep, cls] : classes) ordered.push_back(cls);
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto& a, const auto& b) { return class_key(a) < class_key(b); });

  for (const auto& cls : ordered) {
    LeviComponent comp;
    std::set<VecZ> members;  // all class roots in the window
    for (int pi : cls) {
      comp.finite_parts.push_back(parts[pi]);
      for (const auto& v : roots_of_part[pi]) members.insert(v);
    }
    std::sort(comp.finite_parts.begin(), comp.finite_parts.end());
    // positive imaginary roots visible in the window (members of every class)
    std::set<VecZ> pos_imag;
    for (Int k = 1; k * height(g.marks) <= window.bound; ++k) pos_imag.insert(k * g.marks);
    // indecomposable positive members
    std::vector<VecZ> positives;
    for (const auto& v : members)
      if (height(v) > 0) positives.push_back(v);
    auto is_positive_piece = [&](const VecZ& v) {
      return members.count(v) ? height(v) > 0 : pos_imag.count(v) > 0;
    };
    for (const auto& beta : positives) {
      bool decomposable = false;
      for (const auto& gamma : positives) {
        if (gamma == beta) continue;
        if (is_positive_piece(beta - gamma)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) comp.basis.push_back(beta);
    }
    std::sort(comp.basis.begin(), comp.basis.end(), [](const VecZ& a, const VecZ& b) {
      Int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    comp.label = recognize_type(form, comp.basis);
    if (comp.label.twist > 0) {
      // component null root as a multiple of the ambient delta; the marks of
      // the recognized label refer to its own node order, so recompute the
      // kernel combination directly from the basis Cartan matrix
      VecZ sum(g.n, Int(0));
      MatZ c = basis_cartan_matrix(form, comp.basis);
      Gcm tmp;
      tmp.a = c;
      tmp.n = static_cast<int>(c.size());
      tmp.label = comp.label;
      VecZ comb = null_root(tmp);
      for (size_t i = 0; i < comp.basis.size(); ++i) sum = sum + comb[i] * comp.basis[i];
      // sum must be a positive integer multiple of delta
      Int scale = 0;
      for (int i = 0; i < g.n; ++i) {
        if (g.marks[i] == 0) continue;
        Int s = sum[i] / g.marks[i];
        if (scale == 0) scale = s;
        if (s * g.marks[i] != sum[i] || s != scale)
          throw RecognitionError("levi_components: component null root is not a delta multiple", c);
      }
      comp.delta_scale = scale;
    }
    out.components.push_back(std::move(comp));
  }

  // orthocomplement of the component Cartans (untwisted ambient only)
  if (g.label.twist == 1) {
    const int l = g.n - 1;
    SparseMat m;
    m.ncols = l;
    for (const auto& comp : out.components)
      for (const auto& fp : comp.finite_parts) {
        SparseRow row;
        for (int j = 0; j < l; ++j) {
          // (fp | alpha_{j+1} direction) entries of the Gram matrix
          VecQ e(g.n, Rat(0));
          e[j + 1] = 1;
          Rat v = form.pairing(fp, e);
          if (v != 0) row.emplace_back(j, v);
        }
        m.rows.push_back(std::move(row));
      }
    for (auto& v : kernel_basis(m)) {
      VecQ full(g.n, Rat(0));
      for (int j = 0; j < l; ++j) full[j + 1] = v[j];
      out.complement_basis.push_back(std::move(full));
    }
  }
  return out;
}

inline LeviData levi_components(const ParabolicSubset& p) {
  return levi_components(p, enumerate_roots(p.flag.gcm, p.default_window_bound()));
}

// ---------------------------------------------------------------------------
// Pseudo parabolic data for a type-II subset whose Levi has real roots
// ---------------------------------------------------------------------------

struct PseudoParabolicData {
  ParabolicSubset subset;
  LeviData levi;

  bool levi_real_root(const VecZ& beta) const {
    if (!subset.in_p0(beta)) return false;
    // exclude the imaginary roots (multiples of delta)
    const VecZ& marks = subset.flag.gcm.marks;
    if (beta[0] % marks[0] != 0) return true;
    Int k = beta[0] / marks[0];
    for (size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != k * marks[i]) return true;
    return false;
  }
  bool nilrad_root(const VecZ& beta) const { return subset.in_nilrad(beta); }

  // basis of G(P)_{+k} / G(P)_{-k} as finite-root-coordinate directions;
  // identical for every k in the untwisted case
  const std::vector<VecQ>& heis_basis() const { return levi.complement_basis; }
};

inline PseudoParabolicData pseudo_parabolic(const ParabolicSubset& p, const RootSet& window) {
  ParabolicKind k = kind(p, window);
  if (k.kind != ParabolicKind::TypeII)
    throw std::invalid_argument("pseudo_parabolic: subset is not of type II");
  LeviData levi = levi_components(p, window);
  if (levi.components.empty())
    throw std::invalid_argument(
        "pseudo_parabolic: Levi has no real roots (Heisenberg-only Levi; pseudo parabolic undefined)");
  return PseudoParabolicData{p, std::move(levi)};
}

inline PseudoParabolicData pseudo_parabolic(const ParabolicSubset& p) {
  return pseudo_parabolic(p, enumerate_roots(p.flag.gcm, p.default_window_bound()));
}

// ---------------------------------------------------------------------------
// Type Ib: m_P and the canonical type-II extension
// ---------------------------------------------------------------------------

struct MpDecomposition {
  ParabolicSubset subset;    // the original type-Ib subset
  int s_index;               // maximal s with delta in F_s
  ParabolicSubset extended;  // m_P + N_P, a type-II subset (truncated flag)

  bool m_root(const VecZ& beta) const {
    for (int j = 0; j < s_index; ++j)
      if (dot(subset.flag.functionals[j], beta) != 0) return false;
    return true;
  }
  bool n_root(const VecZ& beta) const { return !m_root(beta) && subset.in_nilrad(beta); }
  bool n_minus_root(const VecZ& beta) const { return !m_root(beta) && subset.side(beta) == Side::Neg; }
};

inline MpDecomposition m_p(const ParabolicSubset& p, const RootSet& window) {
  ParabolicKind k = kind(p, window);
  if (k.kind != ParabolicKind::TypeIb)
    throw std::invalid_argument(std::string("m_p: subset is ") + kind_name(k.kind) + ", not type Ib");
  int s = *k.s_index;
  std::vector<VecQ> prefix(p.flag.functionals.begin(), p.flag.functionals.begin() + s);
  ParabolicSubset ext = subset_from_flag(make_flag(p.flag.gcm, std::move(prefix)));
  return MpDecomposition{p, s, std::move(ext)};
}

inline MpDecomposition m_p(const ParabolicSubset& p) {
  return m_p(p, enumerate_roots(p.flag.gcm, p.default_window_bound()));
}

// ---------------------------------------------------------------------------
// levi_table: recognized type-II Levi labels over all connected proper S
// ---------------------------------------------------------------------------

struct LeviTableRow {
  TypeLabel ambient;
  int alpha0;
  std::vector<int> S;
  TypeLabel recognized;
};

inline std::vector<LeviTableRow> levi_table_rows(const TypeLabel& label) {
  Gcm g = affine_gcm(label);
  if (g.label.rank < 2) throw std::invalid_argument("levi_table: finite rank >= 2 required");
  RootSet window = enumerate_roots(g, 3 * height(g.marks));
  std::vector<LeviTableRow> rows;
  for (int a0 : admissible_alpha0_nodes(g)) {
    std::vector<int> pool;
    for (int i = 0; i < g.n; ++i)
      if (i != a0) pool.push_back(i);
    const int m = static_cast<int>(pool.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (mask + 1 == (1u << m)) continue;  // proper subsets only
      std::vector<int> S;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) S.push_back(pool[i]);
      // connected in the Dynkin graph restricted to S
      std::vector<int> stack{S[0]};
      std::set<int> seen{S[0]};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : S)
          if (!seen.count(w) && g.a[v][w] != 0) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
      if (seen.size() != S.size()) continue;
      ParabolicSubset p = subset_from_S(g, a0, S);
      LeviData levi = levi_components(p, window);
      for (const auto& comp : levi.components)
        rows.push_back({label, a0, S, comp.label});
    }
  }
  return rows;
}

inline std::set<TypeLabel> levi_table(const TypeLabel& label) {
  std::set<TypeLabel> out;
  for (const auto& row : levi_table_rows(label)) out.insert(row.recognized);
  return out;
}

}  // namespace kmlie
