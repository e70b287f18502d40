// Weight modules over the Levi of a (pseudo) parabolic subalgebra: truncated
// Verma-type modules with exact generator actions, one-dimensional tops for
// Borel induction, and direct sums.
//
// A module stores a finite window of PBW monomials but its action closure is
// exact: images may land outside the window and are then represented by
// freshly interned entries, never dropped.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kmlie/uea.hpp"

namespace kmlie {

using EntryId = uint32_t;
using ModuleVec = std::map<EntryId, Rat>;

struct HighestWeightSpec {
  VecQ lambda;   // values of the highest weight on the finite simple coroots
  Rat charge_a;  // lambda(c); the shared central charge of every component
};

class WeightModule {
 public:
  virtual ~WeightModule() = default;
  virtual const std::vector<EntryId>& window() const = 0;
  virtual Weight weight_of(EntryId) const = 0;
  // exact action of a Levi basis element; may intern entries outside the window
  virtual ModuleVec act(const BasisElement& e, EntryId v) = 0;
  // Levi raising operators up to the size bound, for the self primitive run
  virtual std::vector<BasisElement> raising_operators(const Int& size_bound) const = 0;
  virtual Rat charge() const = 0;
  virtual std::string entry_label(EntryId) const = 0;
};

// ---------------------------------------------------------------------------
// Verma module over the Levi factor: free over the component lowering
// directions (plus the Heisenberg complement when requested), truncated at a
// total size bound.
// ---------------------------------------------------------------------------

class LeviVermaModule : public WeightModule {
 public:
  LeviVermaModule(std::shared_ptr<const StructureTable> table, const PseudoParabolicData& pseudo,
                  HighestWeightSpec spec, Int depth_bound, bool include_heisenberg = false)
      : table_(std::move(table)),
        spec_(std::move(spec)),
        depth_(std::move(depth_bound)),
        include_heis_(include_heisenberg),
        order_(std::make_shared<ElementOrder>(table_, pseudo.subset, pseudo, /*levi_mode=*/true)),
        reg_(order_) {
    if (spec_.charge_a == 0)
      throw std::invalid_argument("LeviVermaModule: zero central charge (injective c-action required)");
    if (static_cast<int>(spec_.lambda.size()) != table_->finite_rank())
      throw std::invalid_argument("LeviVermaModule: highest weight length mismatch");
    if (depth_ < 0) throw std::invalid_argument("LeviVermaModule: negative depth");
    build_window();
  }

  const std::vector<EntryId>& window() const override { return window_; }
  Weight weight_of(EntryId v) const override { return weights_[v]; }
  Rat charge() const override { return spec_.charge_a; }

  ModuleVec act(const BasisElement& e, EntryId v) override {
    Monomial word;
    word.push_back(reg_.intern(e));
    const Monomial& m = entries_[v];
    word.insert(word.end(), m.begin(), m.end());
    ModuleVec out;
    for (const auto& [w, c] : straighten(reg_, word)) {
      // split the sorted word at the class boundaries
      size_t i = 0;
      while (i < w.size() && order_->cls(reg_.at(w[i])) == TriClass::Lowering) ++i;
      size_t j = i;
      while (j < w.size() && order_->cls(reg_.at(w[j])) == TriClass::Levi) ++j;
      if (j < w.size()) continue;  // a raising tail annihilates the top vector
      Rat scalar = c;
      for (size_t k = i; k < j && scalar != 0; ++k) scalar *= top_eigenvalue(reg_.at(w[k]));
      if (scalar == 0) continue;
      Monomial prefix(w.begin(), w.begin() + i);
      EntryId id = intern_entry(prefix);
      Rat& slot = out[id];
      slot += scalar;
      if (slot == 0) out.erase(id);
    }
    return out;
  }

  std::vector<BasisElement> raising_operators(const Int& size_bound) const override {
    return operator_side(size_bound, TriClass::Raising);
  }
  std::vector<BasisElement> lowering_elements(const Int& size_bound) const {
    return operator_side(size_bound, TriClass::Lowering);
  }

  std::string entry_label(EntryId v) const override { return label_of(reg_, entries_[v]); }

  static std::string label_of(const Registry& reg, const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (uint32_t id : m) {
      const BasisElement& e = reg.at(id);
      if (!s.empty()) s += "*";
      switch (e.tag) {
        case BasisElement::Tag::Root:
          s += "x[" + vec_str(e.root) + ";" + std::to_string(e.deg) + "]";
          break;
        case BasisElement::Tag::Cartan:
          s += "h[" + vec_str(e.cartan) + ";" + std::to_string(e.deg) + "]";
          break;
        case BasisElement::Tag::Central: s += "c"; break;
        case BasisElement::Tag::Derivation: s += "d"; break;
      }
    }
    return s;
  }

 private:
  std::shared_ptr<const StructureTable> table_;
  HighestWeightSpec spec_;
  Int depth_;
  bool include_heis_;
  std::shared_ptr<ElementOrder> order_;
  Registry reg_;
  std::vector<Monomial> entries_;
  std::map<Monomial, EntryId> entry_ids_;
  std::vector<Weight> weights_;
  std::vector<EntryId> window_;

  Rat top_eigenvalue(const BasisElement& e) const {
    switch (e.tag) {
      case BasisElement::Tag::Central: return spec_.charge_a;
      case BasisElement::Tag::Derivation: return 0;
      case BasisElement::Tag::Cartan: {
        Rat s = 0;
        for (int i = 0; i < table_->finite_rank(); ++i) s += e.cartan[i] * spec_.lambda[i];
        return s;
      }
      default: throw std::logic_error("LeviVermaModule: root vector in the Levi segment");
    }
  }

  EntryId intern_entry(const Monomial& m) {
    auto it = entry_ids_.find(m);
    if (it != entry_ids_.end()) return it->second;
    EntryId id = static_cast<EntryId>(entries_.size());
    entries_.push_back(m);
    Weight w{VecZ(table_->finite_rank(), Int(0)), 0};
    for (uint32_t eid : m) w = w + table_->weight(reg_.at(eid));
    weights_.push_back(w);
    entry_ids_.emplace(m, id);
    return id;
  }

  std::vector<BasisElement> operator_side(const Int& size_bound, TriClass want) const {
    std::vector<BasisElement> out;
    // Levi root vectors within the size bound
    for (const auto& r : table_->chev.sys.positive)
      for (const VecZ& alpha : {r, -r}) {
        Int hr = height(alpha);
        if (hr < 0) hr = -hr;
        for (long n = -long_of(size_bound); n <= long_of(size_bound); ++n) {
          BasisElement e = BasisElement::root_vec(alpha, n);
          if (table_->size(e) > size_bound) continue;
          VecZ amb = table_->ambient_coords(table_->weight(e));
          if (order_->subset()->side(amb) != Side::Kernel) continue;
          if (order_->cls(e) == want) out.push_back(e);
        }
      }
    // imaginary directions: components always, complement only when included
    const auto& dirs = order_->cartan_basis_coroot();
    int limit = include_heis_ ? static_cast<int>(dirs.size()) : order_->component_direction_count();
    for (int i = 0; i < limit; ++i)
      for (long n = 1; Int(n) <= size_bound; ++n) {
        long deg = want == TriClass::Raising ? n : -n;
        out.push_back(BasisElement::cartan_vec(dirs[i], deg));
      }
    return out;
  }

  static long long_of(const Int& v) { return v.get_si(); }

  void build_window() {
    std::vector<BasisElement> gens = lowering_elements(depth_);
    // deterministic generator order
    std::sort(gens.begin(), gens.end(),
              [&](const BasisElement& a, const BasisElement& b) { return order_->less(a, b); });
    std::vector<uint32_t> ids;
    for (const auto& g : gens) ids.push_back(reg_.intern(g));
    Monomial cur;
    build_rec(ids, 0, depth_, cur);
    std::sort(window_.begin(), window_.end());
  }

  void build_rec(const std::vector<uint32_t>& gens, size_t from, const Int& budget, Monomial& cur) {
    window_.push_back(intern_entry(cur));
    for (size_t i = from; i < gens.size(); ++i) {
      Int s = table_->size(reg_.at(gens[i]));
      if (s > budget) continue;
      cur.push_back(gens[i]);
      build_rec(gens, i, budget - s, cur);
      cur.pop_back();
    }
  }
};

// factory matching the paper-facing operation name
inline std::shared_ptr<LeviVermaModule> levi_verma(std::shared_ptr<const StructureTable> table,
                                                   const PseudoParabolicData& pseudo,
                                                   HighestWeightSpec spec, const Int& depth_bound,
                                                   bool include_heisenberg = false) {
  return std::make_shared<LeviVermaModule>(std::move(table), pseudo, std::move(spec), depth_bound,
                                           include_heisenberg);
}

// ---------------------------------------------------------------------------
// One-dimensional top (Borel induction / classical Verma regression)
// ---------------------------------------------------------------------------

class OneDimModule : public WeightModule {
 public:
  OneDimModule(std::shared_ptr<const StructureTable> table, HighestWeightSpec spec)
      : table_(std::move(table)), spec_(std::move(spec)) {
    if (spec_.charge_a == 0)
      throw std::invalid_argument("OneDimModule: zero central charge");
    window_.push_back(0);
  }

  const std::vector<EntryId>& window() const override { return window_; }
  Weight weight_of(EntryId) const override { return {VecZ(table_->finite_rank(), Int(0)), 0}; }
  Rat charge() const override { return spec_.charge_a; }
  std::vector<BasisElement> raising_operators(const Int&) const override { return {}; }
  std::string entry_label(EntryId) const override { return "1"; }

  ModuleVec act(const BasisElement& e, EntryId) override {
    ModuleVec out;
    Rat v = 0;
    switch (e.tag) {
      case BasisElement::Tag::Central: v = spec_.charge_a; break;
      case BasisElement::Tag::Derivation: v = 0; break;
      case BasisElement::Tag::Cartan:
        if (e.deg == 0)
          for (int i = 0; i < table_->finite_rank(); ++i) v += e.cartan[i] * spec_.lambda[i];
        break;
      case BasisElement::Tag::Root: break;  // trivial nilradical action
    }
    if (v != 0) out[0] = v;
    return out;
  }

 private:
  std::shared_ptr<const StructureTable> table_;
  HighestWeightSpec spec_;
  std::vector<EntryId> window_;
};

// ---------------------------------------------------------------------------
// Direct sum
// ---------------------------------------------------------------------------

class DirectSumModule : public WeightModule {
 public:
  DirectSumModule(std::shared_ptr<WeightModule> a, std::shared_ptr<WeightModule> b)
      : a_(std::move(a)), b_(std::move(b)) {
    if (a_->charge() != b_->charge())
      throw std::invalid_argument("DirectSumModule: central charges differ");
    for (EntryId v : a_->window()) window_.push_back(2 * v);
    for (EntryId v : b_->window()) window_.push_back(2 * v + 1);
  }

  const std::vector<EntryId>& window() const override { return window_; }
  Weight weight_of(EntryId v) const override {
    return v % 2 == 0 ? a_->weight_of(v / 2) : b_->weight_of(v / 2);
  }
  Rat charge() const override { return a_->charge(); }

  ModuleVec act(const BasisElement& e, EntryId v) override {
    WeightModule& side = v % 2 == 0 ? *a_ : *b_;
    ModuleVec inner = side.act(e, v / 2);
    ModuleVec out;
    for (const auto& [id, c] : inner) out[2 * id + (v % 2)] = c;
    return out;
  }

  std::vector<BasisElement> raising_operators(const Int& size_bound) const override {
    std::vector<BasisElement> ops = a_->raising_operators(size_bound);
    for (const auto& op : b_->raising_operators(size_bound)) {
      bool seen = false;
      for (const auto& have : ops) seen = seen || have == op;
      if (!seen) ops.push_back(op);
    }
    return ops;
  }

  std::string entry_label(EntryId v) const override {
    return (v % 2 == 0 ? "L:" : "R:") + (v % 2 == 0 ? a_ : b_)->entry_label(v / 2);
  }

 private:
  std::shared_ptr<WeightModule> a_, b_;
  std::vector<EntryId> window_;
};

}  // namespace kmlie
