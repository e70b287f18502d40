// Chevalley bases of the finite simple Lie algebras: integral structure
// constants N_{a,b} = ±(p+1) with signs fixed by extraspecial pairs.
//
// Construction: order the positive roots by (height, lex); for each
// non-simple positive gamma its extraspecial pair is (a0, gamma-a0) with a0
// minimal such that both are positive roots. Extraspecial constants are set
// positive; every other pair (a, b) with a+b = gamma is derived from the
// x_{b0}-component of the Jacobi identity on (x_a, x_b, x_{-a0}),
//   N_{a,b} N_{gamma,-a0} + N_{b,-a0} N_{b-a0,a} + N_{-a0,a} N_{a-a0,b} = 0,
// whose auxiliary constants all involve sums of strictly smaller height.
// Mixed-sign constants reduce to positive pairs through the cycle rule
// N_{a,b} = (|c|^2/|a|^2) N_{b,-c} for a+b = c.  Jacobi is then verified
// exhaustively in tests.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/gcm.hpp"
#include "kmlie/roots.hpp"

namespace kmlie {

struct FiniteRootSystem {
  Gcm gcm;                       // finite type
  BilinearForm form;
  std::vector<VecZ> positive;    // sorted by (height, lex)
  std::map<VecZ, int> pos_index; // positive roots only

  bool is_root(const VecZ& v) const {
    if (pos_index.count(v)) return true;
    return pos_index.count(-v) != 0;
  }

  // p = max{k : b - k a is a root}; a, b, roots
  int string_down(const VecZ& a, const VecZ& b) const {
    int p = 0;
    VecZ cur = b - a;
    while (!is_zero(cur) && is_root(cur)) {
      ++p;
      cur = cur - a;
    }
    return p;
  }
};

inline FiniteRootSystem finite_root_system(const TypeLabel& t) {
  if (t.twist != 0) throw std::invalid_argument("finite_root_system: finite label required");
  FiniteRootSystem sys;
  sys.gcm = finite_gcm(t);
  sys.form = bilinear_form(sys.gcm);
  RootSet rs = enumerate_roots(sys.gcm, Int(64));  // far above any finite height
  for (const auto& r : rs.roots)
    if (height(r.coeffs) > 0) sys.positive.push_back(r.coeffs);
  std::sort(sys.positive.begin(), sys.positive.end(), [](const VecZ& a, const VecZ& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (size_t i = 0; i < sys.positive.size(); ++i) sys.pos_index[sys.positive[i]] = static_cast<int>(i);
  return sys;
}

class ChevalleyTable {
 public:
  FiniteRootSystem sys;

  explicit ChevalleyTable(FiniteRootSystem s) : sys(std::move(s)) { build(); }

  // N_{a,b} for roots a, b with a+b a root; 0 if a+b is not a root.
  // [x_a, x_b] = N_{a,b} x_{a+b}; the a+b = 0 case is handled by coroot().
  Int n_constant(const VecZ& a, const VecZ& b) const {
    VecZ c = a + b;
    if (is_zero(c) || !sys.is_root(c)) return 0;
    bool pa = height(a) > 0, pb = height(b) > 0;
    if (pa && pb) return pos_n(a, b);
    if (!pa && !pb) return -pos_n(-a, -b);
    // mixed signs: rotate with a+b+g = 0, g = -(a+b)
    // N_{a,b} = |a+b|^2 / |a|^2 * N_{b, g} with both of (b, g) handled above
    VecZ g = -c;
    Rat scale = sys.form.norm(c) / sys.form.norm(a);
    Int inner = n_constant(b, g);
    Rat v = scale * Rat(inner);
    if (v.get_den() != 1) throw std::logic_error("chevalley: non-integral derived constant");
    return v.get_num();
  }

  // coroot of a root, as rational coordinates over the simple coroots:
  // [x_a, x_{-a}] = h_a with <beta, h_a> = 2(beta|a)/(a|a)
  VecQ coroot(const VecZ& a) const {
    const int n = sys.gcm.n;
    VecQ h(n);
    Rat na = sys.form.norm(a);
    for (int i = 0; i < n; ++i) {
      // h_a = sum_i a_i |alpha_i|^2 / |a|^2 h_i
      h[i] = Rat(a[i]) * sys.form.norm(unit(i)) / na;
    }
    return h;
  }

  // invariant form values in the Chevalley normalization
  Rat form_x(const VecZ& a) const { return 2 / sys.form.norm(a); }  // (x_a | x_{-a})
  Rat form_h(const VecQ& u, const VecQ& v) const {
    // (h_u | h_v) with h in simple-coroot coordinates; nu(h_i) = alpha_i / d_i
    VecQ ru = nu(u), rv = nu(v);
    return sys.form.pairing(ru, rv);
  }

  // nu: coroot coordinates -> root coordinates, nu(h_i) = (2/|alpha_i|^2) alpha_i
  VecQ nu(const VecQ& h) const {
    VecQ out(sys.gcm.n);
    for (int i = 0; i < sys.gcm.n; ++i) out[i] = h[i] * 2 / sys.form.norm(unit(i));
    return out;
  }

  // nu^{-1}: root coordinates -> coroot coordinates
  VecQ nu_inv(const VecQ& root_coords) const {
    VecQ out(sys.gcm.n);
    for (int i = 0; i < sys.gcm.n; ++i) out[i] = root_coords[i] * sys.form.norm(unit(i)) / 2;
    return out;
  }

  // <beta, h> for h in coroot coordinates
  Rat eval(const VecZ& beta, const VecQ& h) const {
    Rat s = 0;
    for (int i = 0; i < sys.gcm.n; ++i) {
      if (h[i] == 0) continue;
      Int pair = 0;
      for (int j = 0; j < sys.gcm.n; ++j) pair += sys.gcm.a[i][j] * beta[j];
      s += h[i] * Rat(pair);
    }
    return s;
  }

 private:
  // n_pos[{i,j}] = N over positive-root indices
  std::map<std::pair<int, int>, Int> n_pos_;

  VecZ unit(int i) const {
    VecZ v(sys.gcm.n, Int(0));
    v[i] = 1;
    return v;
  }

  Int pos_n(const VecZ& a, const VecZ& b) const {
    auto it = n_pos_.find({sys.pos_index.at(a), sys.pos_index.at(b)});
    return it == n_pos_.end() ? Int(0) : it->second;
  }

  // general lookup valid during construction, mirroring n_constant
  Rat n_any(const VecZ& a, const VecZ& b) const {
    VecZ c = a + b;
    if (is_zero(c) || !sys.is_root(c)) return 0;
    bool pa = height(a) > 0, pb = height(b) > 0;
    if (pa && pb) return Rat(pos_n(a, b));
    if (!pa && !pb) return -Rat(pos_n(-a, -b));
    VecZ g = -c;
    return sys.form.norm(c) / sys.form.norm(a) * n_any(b, g);
  }

  void build() {
    // by increasing height of gamma = a + b; extraspecial pair seeds the sign
    for (const auto& gamma : sys.positive) {
      if (height(gamma) == 1) continue;
      // extraspecial: minimal a in the root order with a, gamma - a positive
      int extra = -1;
      for (size_t ai = 0; ai < sys.positive.size(); ++ai) {
        const VecZ& a = sys.positive[ai];
        if (height(a) >= height(gamma)) break;
        VecZ b = gamma - a;
        if (sys.pos_index.count(b)) {
          extra = static_cast<int>(ai);
          break;
        }
      }
      if (extra < 0) throw std::logic_error("chevalley: positive root with no decomposition");
      const VecZ a0 = sys.positive[extra];
      const VecZ b0 = gamma - a0;
      n_pos_[{extra, sys.pos_index.at(b0)}] = sys.string_down(a0, b0) + 1;
      n_pos_[{sys.pos_index.at(b0), extra}] = -(sys.string_down(a0, b0) + 1);

      // remaining pairs for this gamma from the Jacobi component identity
      for (size_t ai = static_cast<size_t>(extra) + 1; ai < sys.positive.size(); ++ai) {
        const VecZ& a = sys.positive[ai];
        if (height(a) >= height(gamma)) break;
        VecZ b = gamma - a;
        if (!sys.pos_index.count(b)) continue;
        if (a == b0) continue;  // swap of the extraspecial pair, already set
        Rat acc = 0;
        VecZ b_m_a0 = b - a0;
        if (sys.is_root(b_m_a0)) acc += n_any(b, -a0) * n_any(b_m_a0, a);
        VecZ a_m_a0 = a - a0;
        if (sys.is_root(a_m_a0)) acc += n_any(-a0, a) * n_any(a_m_a0, b);
        Rat val_q = -acc / n_any(gamma, -a0);
        if (val_q.get_den() != 1) throw std::logic_error("chevalley: non-integral constant");
        Int val = val_q.get_num();
        // |N| must be the string length + 1
        Int want = sys.string_down(a, b) + 1;
        Int mag = val < 0 ? -val : val;
        if (mag != want) throw std::logic_error("chevalley: constant magnitude mismatch");
        n_pos_[{static_cast<int>(ai), sys.pos_index.at(b)}] = val;
        n_pos_[{sys.pos_index.at(b), static_cast<int>(ai)}] = -val;
      }
    }
  }
};

inline ChevalleyTable chevalley_constants(const TypeLabel& finite_type) {
  if (finite_type.twist != 0)
    throw std::invalid_argument("chevalley_constants: finite type expected (twisted affine structure tables are not provided)");
  if (!admissible_finite(finite_type))
    throw std::invalid_argument("chevalley_constants: inadmissible type " + to_string(finite_type));
  return ChevalleyTable(finite_root_system(finite_type));
}

}  // namespace kmlie
