// The untwisted affine algebra in the loop realization: basis elements
// x_alpha (x) t^n, h (x) t^n, c, d with exact structure constants on top of a
// finite Chevalley table.
#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmlie/chevalley.hpp"
#include "kmlie/gcm.hpp"

namespace kmlie {

// weight = finite part + (delta degree); elements of the root lattice of the
// affine algebra relative to a fixed top weight
struct Weight {
  VecZ finite;  // over the finite simple roots
  long deg = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
  return {a.finite + b.finite, a.deg + b.deg};
}

struct BasisElement {
  enum class Tag { Root, Cartan, Central, Derivation };
  Tag tag = Tag::Central;
  VecZ root;    // finite root (Tag::Root)
  VecQ cartan;  // simple-coroot coordinates (Tag::Cartan)
  long deg = 0; // t-degree (Root and Cartan)

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

  static BasisElement root_vec(VecZ alpha, long n) {
    BasisElement e;
    e.tag = Tag::Root;
    e.root = std::move(alpha);
    e.deg = n;
    return e;
  }
  static BasisElement cartan_vec(VecQ h, long n) {
    BasisElement e;
    e.tag = Tag::Cartan;
    e.cartan = std::move(h);
    e.deg = n;
    return e;
  }
  static BasisElement central() { return BasisElement{}; }
  static BasisElement derivation() {
    BasisElement e;
    e.tag = Tag::Derivation;
    return e;
  }
};

using Term = std::pair<BasisElement, Rat>;

// Structure constants of the untwisted affine algebra over a finite type.
struct StructureTable {
  TypeLabel affine_label;
  Gcm affine;           // (l+1) x (l+1)
  ChevalleyTable chev;  // finite structure constants on nodes 1..l

  explicit StructureTable(const TypeLabel& aff)
      : affine_label(aff),
        affine(affine_gcm(aff)),
        chev(chevalley_constants({aff.series, aff.rank, 0})) {
    if (aff.twist != 1)
      throw std::invalid_argument(
          "StructureTable: twisted affine structure constants are out of scope (" + to_string(aff) +
          ")");
  }

  int finite_rank() const { return chev.sys.gcm.n; }

  Weight weight(const BasisElement& e) const {
    switch (e.tag) {
      case BasisElement::Tag::Root: return {e.root, e.deg};
      case BasisElement::Tag::Cartan: return {VecZ(finite_rank(), Int(0)), e.deg};
      default: return {VecZ(finite_rank(), Int(0)), 0};
    }
  }

  // |delta degree| + |finite height|: the universal truncation norm
  Int size(const BasisElement& e) const {
    Weight w = weight(e);
    Int h = height(w.finite);
    if (h < 0) h = -h;
    return h + Int(w.deg < 0 ? -w.deg : w.deg);
  }

  // weight height in the ambient affine lattice
  Int weight_height(const BasisElement& e) const {
    Weight w = weight(e);
    return height(w.finite) + Int(w.deg) * height(affine.marks);
  }

  // ambient root-lattice coordinates of alpha + n delta
  VecZ ambient_coords(const Weight& w) const {
    VecZ v(affine.n, Int(0));
    for (int i = 0; i < finite_rank(); ++i) v[i + 1] = w.finite[i];
    return v + Int(w.deg) * affine.marks;
  }

  std::vector<Term> bracket(const BasisElement& a, const BasisElement& b) const {
    using Tag = BasisElement::Tag;
    std::vector<Term> out;
    if (a.tag == Tag::Central || b.tag == Tag::Central) return out;
    if (a.tag == Tag::Derivation) {
      if (b.deg != 0) out.emplace_back(b, Rat(b.deg));
      return out;
    }
    if (b.tag == Tag::Derivation) {
      if (a.deg != 0) out.emplace_back(a, Rat(-a.deg));
      return out;
    }
    if (a.tag == Tag::Cartan && b.tag == Tag::Cartan) {
      if (a.deg + b.deg == 0 && a.deg != 0) {
        Rat v = Rat(a.deg) * chev.form_h(a.cartan, b.cartan);
        if (v != 0) out.emplace_back(BasisElement::central(), v);
      }
      return out;
    }
    if (a.tag == Tag::Cartan) {  // [h (x) t^m, x_b (x) t^n] = <b, h> x_b (x) t^{m+n}
      Rat v = chev.eval(b.root, a.cartan);
      if (v != 0) out.emplace_back(BasisElement::root_vec(b.root, a.deg + b.deg), v);
      return out;
    }
    if (b.tag == Tag::Cartan) {
      Rat v = chev.eval(a.root, b.cartan);
      if (v != 0) out.emplace_back(BasisElement::root_vec(a.root, a.deg + b.deg), -v);
      return out;
    }
    // two root vectors
    VecZ sum = a.root + b.root;
    if (is_zero(sum)) {
      VecQ co = chev.coroot(a.root);
      if (!is_zero(co)) out.emplace_back(BasisElement::cartan_vec(co, a.deg + b.deg), Rat(1));
      if (a.deg + b.deg == 0 && a.deg != 0) {
        Rat v = Rat(a.deg) * chev.form_x(a.root);
        if (v != 0) out.emplace_back(BasisElement::central(), v);
      }
      return out;
    }
    if (chev.sys.is_root(sum)) {
      Int n = chev.n_constant(a.root, b.root);
      if (n != 0) out.emplace_back(BasisElement::root_vec(sum, a.deg + b.deg), Rat(n));
    }
    return out;
  }
};

}  // namespace kmlie
