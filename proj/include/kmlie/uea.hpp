// PBW machinery over the affine algebra: a parabolic-aware total order on
// basis elements, monomial interning, exact straightening in the enveloping
// algebra, and the Jacobi verifier.
//
// The order sorts by (triangular class, weight height, degree, content) where
// the class puts the free lowering directions of the ambient parabolic before
// everything acting on the top module and the annihilating directions last,
// so induced-module monomials come out contiguous.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmlie/algebra.hpp"
#include "kmlie/parabolic.hpp"

namespace kmlie {

enum class TriClass { Lowering = 0, Levi = 1, Raising = 2 };

class ElementOrder {
 public:
  std::shared_ptr<const StructureTable> table;

  // bare algebra: classes by weight-height sign, Cartan directions in unit
  // coordinates
  explicit ElementOrder(std::shared_ptr<const StructureTable> t) : table(std::move(t)) {
    const int l = table->finite_rank();
    for (int i = 0; i < l; ++i) {
      VecQ e(l, Rat(0));
      e[i] = 1;
      cartan_basis_root_.push_back(table->chev.nu(e));
      cartan_basis_coroot_.push_back(std::move(e));
    }
    comp_count_ = l;  // everything counts as "component" (Levi) directions
    build_split_matrix();
  }

  // parabolic order; levi_mode classifies Levi elements by weight sign (for
  // straightening inside the top module itself)
  ElementOrder(std::shared_ptr<const StructureTable> t, ParabolicSubset subset,
               std::optional<PseudoParabolicData> pseudo, bool levi_mode)
      : table(std::move(t)), subset_(std::move(subset)), pseudo_(std::move(pseudo)),
        levi_mode_(levi_mode) {
    const int l = table->finite_rank();
    if (pseudo_) {
      // echelon basis of the span of the component finite parts
      std::vector<VecQ> span;
      for (const auto& comp : pseudo_->levi.components)
        for (const auto& fp : comp.finite_parts) {
          VecQ fin(l);
          for (int i = 0; i < l; ++i) fin[i] = fp[i + 1];
          span.push_back(fin);
          if (rank_of(span) < static_cast<int>(span.size()))
            span.pop_back();
          else
            cartan_basis_root_.push_back(fin);
        }
      comp_count_ = static_cast<int>(cartan_basis_root_.size());
      for (const auto& w : pseudo_->levi.complement_basis) {
        VecQ fin(l);
        for (int i = 0; i < l; ++i) fin[i] = w[i + 1];
        cartan_basis_root_.push_back(fin);
      }
      if (static_cast<int>(cartan_basis_root_.size()) != l)
        throw std::logic_error("ElementOrder: component + complement do not span the Cartan");
    } else {
      for (int i = 0; i < l; ++i) {
        VecQ e(l, Rat(0));
        e[i] = 1;
        cartan_basis_root_.push_back(table->chev.nu(e));
      }
      comp_count_ = l;
    }
    for (const auto& w : cartan_basis_root_) cartan_basis_coroot_.push_back(table->chev.nu_inv(w));
    build_split_matrix();
  }

  const ParabolicSubset* subset() const { return subset_ ? &*subset_ : nullptr; }
  const PseudoParabolicData* pseudo() const { return pseudo_ ? &*pseudo_ : nullptr; }
  bool levi_mode() const { return levi_mode_; }
  int component_direction_count() const { return comp_count_; }
  const std::vector<VecQ>& cartan_basis_coroot() const { return cartan_basis_coroot_; }

  TriClass cls(const BasisElement& e) const {
    using Tag = BasisElement::Tag;
    if (e.tag == Tag::Central || e.tag == Tag::Derivation) return TriClass::Levi;
    if (e.tag == Tag::Cartan && e.deg == 0) return TriClass::Levi;
    if (e.tag == Tag::Root) {
      if (!subset_) return by_weight_sign(e);
      switch (subset_->side(table->ambient_coords(table->weight(e)))) {
        case Side::Pos: return TriClass::Raising;
        case Side::Neg: return TriClass::Lowering;
        case Side::Kernel: return levi_mode_ ? by_weight_sign(e) : TriClass::Levi;
      }
    }
    // imaginary Cartan direction
    if (!subset_) return by_weight_sign(e);
    Side s = subset_->side(table->ambient_coords(table->weight(e)));
    if (s != Side::Kernel) return s == Side::Pos ? TriClass::Raising : TriClass::Lowering;
    if (!pseudo_) return levi_mode_ ? by_weight_sign(e) : TriClass::Levi;
    // type II with pseudo refinement: component part is Levi, complement part
    // is split off into the nilradical halves
    auto coords = split_coords(e.cartan);
    bool comp = false, compl_part = false;
    for (int i = 0; i < comp_count_; ++i) comp = comp || coords[i] != 0;
    for (size_t i = comp_count_; i < coords.size(); ++i) compl_part = compl_part || coords[i] != 0;
    if (comp && compl_part)
      throw std::logic_error("ElementOrder: mixed Cartan direction escaped splitting");
    if (compl_part) return by_weight_sign(e);
    return levi_mode_ ? by_weight_sign(e) : TriClass::Levi;
  }

  bool less(const BasisElement& a, const BasisElement& b) const {
    TriClass ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb;
    Int wa = table->weight_height(a), wb = table->weight_height(b);
    if (wa != wb) return wa < wb;
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.tag != b.tag) return a.tag < b.tag;
    if (a.root != b.root) return a.root < b.root;
    return a.cartan < b.cartan;
  }

  // canonical decomposition of a Cartan direction over the fixed basis
  std::vector<Term> split_cartan(const VecQ& h_coroot, long deg) const {
    VecQ coords = split_coords(h_coroot);
    std::vector<Term> out;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0)
        out.emplace_back(BasisElement::cartan_vec(cartan_basis_coroot_[i], deg), coords[i]);
    return out;
  }

  // bracket with canonical Cartan splitting
  std::vector<Term> bracket(const BasisElement& a, const BasisElement& b) const {
    std::vector<Term> raw = table->bracket(a, b);
    std::vector<Term> out;
    for (auto& [e, c] : raw) {
      if (e.tag == BasisElement::Tag::Cartan) {
        for (auto& [se, sc] : split_cartan(e.cartan, e.deg)) out.emplace_back(se, c * sc);
      } else {
        out.emplace_back(e, c);
      }
    }
    return out;
  }

 private:
  std::optional<ParabolicSubset> subset_;
  std::optional<PseudoParabolicData> pseudo_;
  bool levi_mode_ = false;
  std::vector<VecQ> cartan_basis_root_;    // finite root coordinates
  std::vector<VecQ> cartan_basis_coroot_;  // same directions, coroot coordinates
  int comp_count_ = 0;                     // leading entries that are Levi directions
  std::vector<VecQ> split_inv_;            // inverse of the basis matrix

  TriClass by_weight_sign(const BasisElement& e) const {
    Int wh = table->weight_height(e);
    if (wh == 0) throw std::logic_error("ElementOrder: weight-zero element in sign classification");
    return wh > 0 ? TriClass::Raising : TriClass::Lowering;
  }

  void build_split_matrix() {
    const int l = table->finite_rank();
    // invert the column matrix of cartan_basis_root_ exactly
    std::vector<VecQ> aug(l, VecQ(2 * l, Rat(0)));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) aug[i][j] = cartan_basis_root_[j][i];
    for (int i = 0; i < l; ++i) aug[i][l + i] = 1;
    for (int col = 0; col < l; ++col) {
      int piv = -1;
      for (int r = col; r < l; ++r)
        if (aug[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("ElementOrder: Cartan basis is singular");
      std::swap(aug[col], aug[piv]);
      Rat lead = aug[col][col];
      for (int j = 0; j < 2 * l; ++j) aug[col][j] /= lead;
      for (int r = 0; r < l; ++r) {
        if (r == col || aug[r][col] == 0) continue;
        Rat f = aug[r][col];
        for (int j = 0; j < 2 * l; ++j) aug[r][j] -= f * aug[col][j];
      }
    }
    split_inv_.assign(l, VecQ(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) split_inv_[i][j] = aug[i][l + j];
  }

  VecQ split_coords(const VecQ& h_coroot) const {
    VecQ w = table->chev.nu(h_coroot);
    const int l = table->finite_rank();
    VecQ coords(l, Rat(0));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j)
        if (w[j] != 0) coords[i] += split_inv_[i][j] * w[j];
    }
    return coords;
  }
};

// ---------------------------------------------------------------------------
// interning + straightening
// ---------------------------------------------------------------------------

class Registry {
 public:
  explicit Registry(std::shared_ptr<const ElementOrder> order) : order_(std::move(order)) {}

  uint32_t intern(const BasisElement& e) {
    auto it = ids_.find(e);
    if (it != ids_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(elems_.size());
    elems_.push_back(e);
    ids_.emplace(e, id);
    return id;
  }

  const BasisElement& at(uint32_t id) const { return elems_[id]; }
  const ElementOrder& order() const { return *order_; }

  bool id_less(uint32_t a, uint32_t b) const {
    if (a == b) return false;
    return order_->less(elems_[a], elems_[b]);
  }

 private:
  std::shared_ptr<const ElementOrder> order_;
  std::vector<BasisElement> elems_;
  std::map<BasisElement, uint32_t> ids_;
};

using Monomial = std::vector<uint32_t>;     // element ids, nondecreasing when normal
using UeaElement = std::map<Monomial, Rat>; // sparse PBW expansion

// Rewrites ab -> ba + [a,b] until every monomial is nondecreasing in the
// order. Exact; terminates because swaps reduce the inversion count and
// bracket terms strictly shorten the word.
inline UeaElement straighten(Registry& reg, const Monomial& word, const Rat& coeff = Rat(1)) {
  UeaElement out;
  std::vector<std::pair<Monomial, Rat>> work{{word, coeff}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    size_t inv = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (reg.id_less(w[i + 1], w[i])) {
        inv = i;
        break;
      }
    if (inv == w.size()) {
      Rat& slot = out[w];
      slot += c;
      if (slot == 0) out.erase(w);
      continue;
    }
    Monomial swapped = w;
    std::swap(swapped[inv], swapped[inv + 1]);
    work.emplace_back(std::move(swapped), c);
    for (const auto& [e, bc] : reg.order().bracket(reg.at(w[inv]), reg.at(w[inv + 1]))) {
      Monomial br;
      br.reserve(w.size() - 1);
      br.insert(br.end(), w.begin(), w.begin() + inv);
      br.push_back(reg.intern(e));
      br.insert(br.end(), w.begin() + inv + 2, w.end());
      work.emplace_back(std::move(br), c * bc);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi / antisymmetry verification
// ---------------------------------------------------------------------------

namespace detail {

// canonical linear combination for exact cancellation checks
struct CanonCombo {
  std::map<std::pair<VecZ, long>, Rat> roots;
  std::map<long, VecQ> cartans;  // degree -> coroot coordinates
  Rat central = 0;

  void add(const BasisElement& e, const Rat& c, int rank) {
    switch (e.tag) {
      case BasisElement::Tag::Root: roots[{e.root, e.deg}] += c; break;
      case BasisElement::Tag::Cartan: {
        auto [it, fresh] = cartans.try_emplace(e.deg, VecQ(rank, Rat(0)));
        for (int i = 0; i < rank; ++i) it->second[i] += c * e.cartan[i];
        break;
      }
      case BasisElement::Tag::Central: central += c; break;
      case BasisElement::Tag::Derivation: throw std::logic_error("bracket produced d");
    }
  }

  bool zero() const {
    for (const auto& [k, v] : roots)
      if (v != 0) return false;
    for (const auto& [d, v] : cartans)
      if (!is_zero(v)) return false;
    return central == 0;
  }
};

inline CanonCombo bracket_combo(const StructureTable& t, const CanonCombo& a, const BasisElement& b) {
  CanonCombo out;
  const int rank = t.finite_rank();
  auto emit = [&](const BasisElement& x, const Rat& c) {
    for (const auto& [e, bc] : t.bracket(x, b)) out.add(e, c * bc, rank);
  };
  for (const auto& [k, c] : a.roots)
    if (c != 0) emit(BasisElement::root_vec(k.first, k.second), c);
  for (const auto& [d, v] : a.cartans)
    if (!is_zero(v)) emit(BasisElement::cartan_vec(v, d), Rat(1));
  // central brackets vanish
  return out;
}

}  // namespace detail

struct JacobiViolation {
  BasisElement a, b, c;
};

// Exhaustive [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 over basis triples with
// |degree| <= bound; returns the (expected-empty) violation list.
inline std::vector<JacobiViolation> verify_jacobi(const StructureTable& t, long bound) {
  std::vector<BasisElement> basis;
  for (const auto& r : t.chev.sys.positive)
    for (long n = -bound; n <= bound; ++n) {
      basis.push_back(BasisElement::root_vec(r, n));
      basis.push_back(BasisElement::root_vec(-r, n));
    }
  for (int i = 0; i < t.finite_rank(); ++i)
    for (long n = -bound; n <= bound; ++n) {
      VecQ e(t.finite_rank(), Rat(0));
      e[i] = 1;
      basis.push_back(BasisElement::cartan_vec(e, n));
    }
  basis.push_back(BasisElement::central());
  basis.push_back(BasisElement::derivation());

  const int rank = t.finite_rank();
  std::vector<JacobiViolation> bad;
  for (const auto& a : basis)
    for (const auto& b : basis) {
      // antisymmetry: [a,b] + [b,a] = 0
      detail::CanonCombo anti;
      for (const auto& [e, c] : t.bracket(a, b)) anti.add(e, c, rank);
      for (const auto& [e, c] : t.bracket(b, a)) anti.add(e, c, rank);
      if (!anti.zero()) bad.push_back({a, b, b});
      for (const auto& c : basis) {
        detail::CanonCombo sum;
        auto accumulate = [&](const BasisElement& x, const BasisElement& y, const BasisElement& z) {
          detail::CanonCombo inner;
          for (const auto& [e, cc] : t.bracket(x, y)) inner.add(e, cc, rank);
          detail::CanonCombo outer = detail::bracket_combo(t, inner, z);
          for (const auto& [k, v] : outer.roots) sum.roots[k] += v;
          for (const auto& [d, v] : outer.cartans) {
            auto [it, fresh] = sum.cartans.try_emplace(d, VecQ(rank, Rat(0)));
            for (int i = 0; i < rank; ++i) it->second[i] += v[i];
          }
          sum.central += outer.central;
        };
        accumulate(a, b, c);
        accumulate(b, c, a);
        accumulate(c, a, b);
        if (!sum.zero()) bad.push_back({a, b, c});
      }
    }
  return bad;
}

}  // namespace kmlie
