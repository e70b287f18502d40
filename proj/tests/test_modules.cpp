#include <map>
#include <memory>

#include "doctest.h"
#include "kmlie/induction.hpp"

using namespace kmlie;

namespace {

VecZ zv(std::initializer_list<long> xs) {
  VecZ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

VecQ qv(std::initializer_list<long> xs) {
  VecQ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

struct Setup {
  std::shared_ptr<const StructureTable> table;
  PseudoParabolicData pseudo;
};

const Setup& setup_a2_s1() {
  static Setup s = [] {
    auto table = std::make_shared<StructureTable>(TypeLabel{'A', 2, 1});
    ParabolicSubset p = subset_from_S(table->affine, 0, {1});
    return Setup{table, pseudo_parabolic(p)};
  }();
  return s;
}

HighestWeightSpec generic_spec() { return {{make_rat(5, 7), make_rat(3, 11)}, Rat(1)}; }

// independent monomial-count oracle over hard-coded generator data
struct GenDatum {
  VecZ finite;
  long deg;
  long size;
};

void count_rec(const std::vector<GenDatum>& gens, size_t from, long budget, Weight cur,
               std::map<Weight, Int>& out) {
  out[cur] += 1;
  for (size_t i = from; i < gens.size(); ++i) {
    if (gens[i].size > budget) continue;
    count_rec(gens, i, budget - gens[i].size, Weight{cur.finite + gens[i].finite, cur.deg + gens[i].deg},
              out);
  }
}

std::map<Weight, Int> oracle_counts(const std::vector<GenDatum>& gens, long budget, int rank) {
  std::map<Weight, Int> out;
  count_rec(gens, 0, budget, Weight{VecZ(rank, Int(0)), 0}, out);
  return out;
}

}  // namespace

TEST_CASE("levi verma window dims against the brute-force oracle") {
  const Setup& s = setup_a2_s1();
  auto v = levi_verma(s.table, s.pseudo, generic_spec(), Int(2));

  // component negatives of the A1~1 Levi at depth 2, written out by hand
  std::vector<GenDatum> gens = {
      {zv({-1, 0}), 0, 1},   // -alpha_1
      {zv({-1, 0}), -1, 2},  // -alpha_1 - delta
      {zv({1, 0}), -1, 2},   // alpha_1 - delta
      {zv({0, 0}), -1, 1},   // component Cartan (x) t^{-1}
      {zv({0, 0}), -2, 2},
  };
  auto expect = oracle_counts(gens, 2, 2);
  std::map<Weight, Int> got;
  for (EntryId id : v->window()) got[v->weight_of(id)] += 1;
  CHECK(got == expect);
  CHECK(v->window().size() == 9);
  // dims 1, 1, 2 along the -alpha_1 direction at sizes 0, 1, 2
  CHECK(got.at(Weight{zv({0, 0}), 0}) == 1);
  CHECK(got.at(Weight{zv({-1, 0}), 0}) == 1);
  CHECK(got.at(Weight{zv({-1, 0}), -1}) == 2);
}

TEST_CASE("levi verma depth 0 is a highest weight line") {
  const Setup& s = setup_a2_s1();
  auto v = levi_verma(s.table, s.pseudo, generic_spec(), Int(0));
  REQUIRE(v->window().size() == 1);
  for (const auto& op : v->raising_operators(Int(3))) CHECK(v->act(op, 0).empty());
  // h-action is diagonal with the labeled weight
  ModuleVec h = v->act(BasisElement::cartan_vec(qv({1, 0}), 0), 0);
  REQUIRE(h.size() == 1);
  CHECK(h.at(0) == make_rat(5, 7));
  ModuleVec c = v->act(BasisElement::central(), 0);
  CHECK(c.at(0) == 1);
}

TEST_CASE("zero central charge is rejected") {
  const Setup& s = setup_a2_s1();
  CHECK_THROWS_AS(levi_verma(s.table, s.pseudo, {{Rat(1), Rat(1)}, Rat(0)}, Int(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OneDimModule(s.table, {{Rat(1), Rat(1)}, Rat(0)}), std::invalid_argument);
}

TEST_CASE("heisenberg verma: degree-k pair acts by k (w|w) a on the top") {
  const Setup& s = setup_a2_s1();
  auto v = levi_verma(s.table, s.pseudo, generic_spec(), Int(3), /*include_heisenberg=*/true);
  // the complement direction in coroot coordinates comes from the order basis
  ElementOrder order(s.table, s.pseudo.subset, s.pseudo, true);
  REQUIRE(order.cartan_basis_coroot().size() == 2);
  VecQ w = order.cartan_basis_coroot()[1];  // the complement direction
  for (long k = 1; k <= 2; ++k) {
    // entry for the monomial Cartan(w, -k) (x) 1
    ModuleVec down = v->act(BasisElement::cartan_vec(w, -k), 0);
    REQUIRE(down.size() == 1);
    EntryId mid = down.begin()->first;
    ModuleVec up = v->act(BasisElement::cartan_vec(w, k), mid);
    REQUIRE(up.size() == 1);
    CHECK(up.begin()->first == 0);
    Rat kappa = s.table->chev.form_h(w, w);
    CHECK(kappa != 0);
    CHECK(up.begin()->second == Rat(k) * kappa * Rat(1) / down.begin()->second);
  }
}

TEST_CASE("induced module dims against the monomial oracle") {
  const Setup& s = setup_a2_s1();
  auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(0));
  auto m = induce(s.table, s.pseudo, top, Int(3));

  // nilradical negatives within size 3, written out by hand:
  // -alpha_2 + n delta (|n|+1 <= 3), -(alpha_1+alpha_2) + n delta (|n|+2 <= 3),
  // complement Cartans at degrees -1, -2, -3
  std::vector<GenDatum> gens;
  for (long n = -2; n <= 2; ++n) gens.push_back({zv({0, -1}), n, 1 + std::abs(n)});
  for (long n = -1; n <= 1; ++n) gens.push_back({zv({-1, -1}), n, 2 + std::abs(n)});
  for (long n = 1; n <= 3; ++n) gens.push_back({zv({0, 0}), -n, n});
  auto expect = oracle_counts(gens, 3, 2);

  std::map<Weight, Int> got;
  for (EntryId id : m->window()) got[m->weight_of(id)] += 1;
  CHECK(got == expect);
  // dim at lambda - alpha_2 - delta within size 3: x(-alpha_2;-1) and
  // x(-alpha_2;0)*h(-1): the oracle gives 2
  CHECK(expect.at(Weight{zv({0, -1}), -1}) == 2);
  CHECK(weight_dim(*m, Weight{zv({0, -1}), -1}) == 2);
  CHECK(weight_dim(*m, Weight{zv({0, 0}), 0}) == 1);
  CHECK(weight_dim(*m, Weight{zv({5, 5}), 2}) == 0);
}

TEST_CASE("characters agree between constructed basis and product formula") {
  const Setup& s = setup_a2_s1();
  for (long depth : {0L, 1L}) {
    auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(depth));
    auto m = induce(s.table, s.pseudo, top, Int(3));
    Character direct = character(*m);
    Character product = pbw_character(*m);
    CHECK(direct == product);
  }
  // coefficient of e^{lambda - alpha_2} at window 2: the single monomial
  // x(-alpha_2;0) (x) 1
  auto top0 = levi_verma(s.table, s.pseudo, generic_spec(), Int(0));
  auto m2 = induce(s.table, s.pseudo, top0, Int(2));
  CHECK(character(*m2).at(Weight{zv({0, -1}), 0}) == 1);
}

TEST_CASE("module axioms: a(bv) - b(av) = [a,b]v on random-ish samples") {
  const Setup& s = setup_a2_s1();
  auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(1));
  auto m = induce(s.table, s.pseudo, top, Int(2));

  std::vector<BasisElement> sample = m->nilrad_operators(Int(2));
  for (const auto& e : m->lowering_elements(Int(2))) sample.push_back(e);
  sample.push_back(BasisElement::cartan_vec(qv({1, 0}), 0));
  sample.push_back(BasisElement::central());
  sample.push_back(BasisElement::derivation());
  sample.push_back(BasisElement::root_vec(zv({1, 0}), 0));   // Levi raising
  sample.push_back(BasisElement::root_vec(zv({-1, 0}), 1));  // Levi raising, shifted

  auto apply = [&](const BasisElement& e, const ModuleVec& v) {
    ModuleVec out;
    for (const auto& [id, c] : v)
      for (const auto& [id2, c2] : m->act(e, id)) {
        Rat& slot = out[id2];
        slot += c * c2;
        if (slot == 0) out.erase(id2);
      }
    return out;
  };

  // weight consistency: images land in the weight space predicted by additivity
  for (const auto& a : sample)
    for (EntryId v : {m->window()[0], m->window()[m->window().size() / 2]}) {
      Weight expect = s.table->weight(a) + m->weight_of(v);
      for (const auto& [img, c] : m->act(a, v))
        if (a.tag != BasisElement::Tag::Central && a.tag != BasisElement::Tag::Derivation)
          CHECK(m->weight_of(img) == expect);
    }

  size_t step = 0;
  for (const auto& a : sample)
    for (const auto& b : sample) {
      if (++step % 7 != 0) continue;  // sample pairs, keep the suite quick
      for (EntryId v : {m->window()[0], m->window()[m->window().size() / 2],
                        m->window()[m->window().size() - 1]}) {
        ModuleVec base{{v, Rat(1)}};
        ModuleVec lhs = apply(a, apply(b, base));
        for (const auto& [id, c] : apply(b, apply(a, base))) {
          Rat& slot = lhs[id];
          slot -= c;
          if (slot == 0) lhs.erase(id);
        }
        ModuleVec rhs;
        for (const auto& [e, c] : m->order().bracket(a, b))
          for (const auto& [id, c2] : m->act(e, v)) {
            Rat& slot = rhs[id];
            slot += c * c2;
            if (slot == 0) rhs.erase(id);
          }
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("nilradical annihilates 1 (x) V and c acts by the charge everywhere") {
  const Setup& s = setup_a2_s1();
  auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(1));
  auto m = induce(s.table, s.pseudo, top, Int(2));
  for (EntryId id : m->window()) {
    if (m->is_top(id))
      for (const auto& op : m->nilrad_operators(Int(2))) CHECK(m->act(op, id).empty());
    ModuleVec c = m->act(BasisElement::central(), id);
    REQUIRE(c.size() == 1);
    CHECK(c.at(id) == 1);
  }
}

TEST_CASE("self primitive run: generic vs singular top") {
  const Setup& s = setup_a2_s1();

  SUBCASE("generic weight: kernel only on the highest weight line") {
    auto v = levi_verma(s.table, s.pseudo, generic_spec(), Int(2));
    PrimitiveReport rep = primitives(*v, Int(2));
    for (const auto& w : rep.windows) {
      bool top_line = is_zero(w.weight.finite) && w.weight.deg == 0;
      CHECK(static_cast<int>(w.kernel.size()) == (top_line ? 1 : 0));
    }
  }

  SUBCASE("lambda(h_1) = 0: the singular vector f v appears") {
    auto v = levi_verma(s.table, s.pseudo, {{Rat(0), make_rat(3, 11)}, Rat(1)}, Int(2));
    PrimitiveReport rep = primitives(*v, Int(2));
    std::map<Weight, int> dims;
    for (const auto& w : rep.windows) dims[w.weight] = static_cast<int>(w.kernel.size());
    CHECK(dims.at(Weight{zv({0, 0}), 0}) == 1);
    CHECK(dims.at(Weight{zv({-1, 0}), 0}) == 1);  // f_{alpha_1} v
    int total = 0;
    for (const auto& [w, d] : dims) total += d;
    CHECK(total == 2);
  }
}

TEST_CASE("direct sums: induced dims are additive") {
  const Setup& s = setup_a2_s1();
  auto v1 = levi_verma(s.table, s.pseudo, generic_spec(), Int(1));
  auto v2 = levi_verma(s.table, s.pseudo, {{make_rat(1, 2), make_rat(2, 5)}, Rat(1)}, Int(1));
  auto m1 = induce(s.table, s.pseudo, v1, Int(2));
  auto m2 = induce(s.table, s.pseudo, v2, Int(2));
  auto msum = induce(s.table, s.pseudo, std::make_shared<DirectSumModule>(v1, v2), Int(2));
  Character c1 = character(*m1), c2 = character(*m2), cs = character(*msum);
  Character added = c1;
  for (const auto& [w, n] : c2) added[w] += n;
  CHECK(cs == added);
}

TEST_CASE("classical Verma regression over a partition flag") {
  auto table = std::make_shared<StructureTable>(TypeLabel{'A', 2, 1});
  // full flag: height functional first, so P = affine positive roots
  ParabolicSubset borel =
      subset_from_flag(make_flag(table->affine, {qv({1, 1, 1}), qv({1, 0, 0}), qv({0, 1, 0})}));
  CHECK(kind(borel).kind == ParabolicKind::Partition);
  auto top = std::make_shared<OneDimModule>(table, generic_spec());
  auto m = induce_from_partition(table, borel, top, Int(3));
  CHECK(character(*m) == pbw_character(*m));
  PrimitiveReport rep = primitives(*m, Int(3));
  for (const auto& w : rep.windows) {
    bool top_line = is_zero(w.weight.finite) && w.weight.deg == 0;
    CHECK(static_cast<int>(w.kernel.size()) == (top_line ? 1 : 0));
  }
}

TEST_CASE("reduction certifies across ambients, components and root lengths") {
  struct Cfg {
    TypeLabel type;
    std::vector<int> S;
    VecQ lambda;
    long depth, window, ops;
  };
  std::vector<Cfg> cfgs = {
      // two orthogonal components: the top is a tensor of component Vermas
      {{'A', 3, 1}, {1, 3}, {make_rat(5, 7), make_rat(3, 11), make_rat(7, 13)}, 2, 2, 2},
      // one A2~1 component with complement rank 1
      {{'A', 3, 1}, {1, 2}, {make_rat(5, 7), make_rat(3, 11), make_rat(7, 13)}, 1, 2, 2},
      // non-simply-laced ambient, short and long component roots
      {{'C', 2, 1}, {1}, {make_rat(5, 7), make_rat(3, 11)}, 2, 3, 3},
      {{'C', 2, 1}, {2}, {make_rat(5, 7), make_rat(3, 11)}, 2, 3, 3},
      {{'G', 2, 1}, {2}, {make_rat(5, 7), make_rat(3, 11)}, 1, 2, 2},
  };
  for (const auto& cfg : cfgs) {
    CAPTURE(to_string(cfg.type));
    auto table = std::make_shared<StructureTable>(cfg.type);
    PseudoParabolicData ps = pseudo_parabolic(subset_from_S(table->affine, 0, cfg.S));
    auto v = levi_verma(table, ps, {cfg.lambda, Rat(1)}, Int(cfg.depth));
    auto m = induce(table, ps, v, Int(cfg.window));
    CHECK(character(*m) == pbw_character(*m));
    ReductionVerdict verdict = check_reduction(*m, Int(cfg.ops));
    CHECK(verdict.outcome == ReductionVerdict::PASS);
    CHECK(verdict.top_report.total_kernel_dim() == 1);  // generic top self-certified
  }
}

TEST_CASE("natural Borel regression: nonzero charge makes the module top-generated") {
  auto table = std::make_shared<StructureTable>(TypeLabel{'A', 2, 1});
  Gcm g = table->affine;
  // finite-part height first, then delta degree: the natural partition
  ParabolicSubset nat = subset_from_flag(
      make_flag(g, {VecQ{Rat(-2), Rat(1), Rat(1)}, VecQ{Rat(1), Rat(0), Rat(0)}}));
  CHECK(kind(nat).kind == ParabolicKind::Partition);
  // irreducibility is independent of lambda here, so lambda = 0 works too
  for (const VecQ& lam : {VecQ{make_rat(5, 7), make_rat(3, 11)}, VecQ{Rat(0), Rat(0)}}) {
    auto top = std::make_shared<OneDimModule>(table, HighestWeightSpec{lam, Rat(1)});
    auto m = induce_from_partition(table, nat, top, Int(3));
    CHECK(character(*m) == pbw_character(*m));
    PrimitiveReport rep = primitives(*m, Int(3));
    for (const auto& w : rep.windows) {
      bool top_line = is_zero(w.weight.finite) && w.weight.deg == 0;
      CHECK(static_cast<int>(w.kernel.size()) == (top_line ? 1 : 0));
    }
  }
}

TEST_CASE("check_reduction inconclusive on an empty operator set") {
  const Setup& s = setup_a2_s1();
  auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(1));
  auto m = induce(s.table, s.pseudo, top, Int(2));
  ReductionVerdict v = check_reduction(*m, Int(0));
  CHECK(v.outcome == ReductionVerdict::INCONCLUSIVE);
}

TEST_CASE("induction preconditions") {
  const Setup& s = setup_a2_s1();
  auto top = levi_verma(s.table, s.pseudo, generic_spec(), Int(1));
  CHECK_THROWS_AS(induce(s.table, s.pseudo, top, Int(0)), std::invalid_argument);
  // S = {} has no real Levi roots: pseudo data refuses upstream
  CHECK_THROWS_AS(pseudo_parabolic(subset_from_S(s.table->affine, 0, {})), std::invalid_argument);
}
