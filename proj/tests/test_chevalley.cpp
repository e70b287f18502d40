#include <map>
#include <variant>

#include "doctest.h"
#include "kmlie/chevalley.hpp"

using namespace kmlie;

namespace {

VecZ zv(std::initializer_list<long> xs) {
  VecZ v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Finite-algebra element for the Jacobi oracle: root vectors + Cartan
struct Elem {
  std::map<VecZ, Rat> x;  // root vector coefficients
  VecQ h;                 // coroot coordinates

  explicit Elem(int rank) : h(rank, Rat(0)) {}
  bool zero() const {
    for (const auto& [r, c] : x)
      if (c != 0) return false;
    return is_zero(h);
  }
};

Elem bracket(const ChevalleyTable& t, const Elem& a, const Elem& b) {
  const int rank = t.sys.gcm.n;
  Elem out(rank);
  for (const auto& [ra, ca] : a.x) {
    for (const auto& [rb, cb] : b.x) {
      VecZ sum = ra + rb;
      if (is_zero(sum)) {
        VecQ co = t.coroot(ra);
        for (int i = 0; i < rank; ++i) out.h[i] += ca * cb * co[i];
      } else if (t.sys.is_root(sum)) {
        out.x[sum] += ca * cb * Rat(t.n_constant(ra, rb));
      }
    }
    // [x_a, h] = -<a,h> x_a
    Rat v = t.eval(ra, b.h);
    if (v != 0) out.x[ra] += -ca * v;
  }
  for (const auto& [rb, cb] : b.x) {
    Rat v = t.eval(rb, a.h);
    if (v != 0) out.x[rb] += cb * v;
  }
  return out;
}

Elem root_elem(const ChevalleyTable& t, const VecZ& r) {
  Elem e(t.sys.gcm.n);
  e.x[r] = 1;
  return e;
}

Elem cartan_elem(const ChevalleyTable& t, int i) {
  Elem e(t.sys.gcm.n);
  e.h[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("chevalley constants on A2") {
  ChevalleyTable t = chevalley_constants({'A', 2, 0});
  VecZ a1 = zv({1, 0}), a2 = zv({0, 1}), theta = zv({1, 1});

  Int n12 = t.n_constant(a1, a2);
  CHECK((n12 == 1 || n12 == -1));
  CHECK(t.n_constant(a2, a1) == -n12);
  // extraspecial pair has the positive sign; a2 < a1 in the (height, lex) order
  CHECK(t.n_constant(a2, a1) == 1);

  // [x_theta, x_{-a1}] = ±x_{a2}, string length 0
  Int n = t.n_constant(theta, -a1);
  CHECK((n == 1 || n == -1));

  CHECK(t.n_constant(a1, a1) == 0);
  CHECK(t.n_constant(a1, -a2) == 0);  // a1 - a2 is not a root

  SUBCASE("coroots") {
    CHECK(t.coroot(a1) == VecQ{1, 0});
    CHECK(t.coroot(theta) == VecQ{1, 1});
    CHECK(t.form_x(a1) == 1);  // (x|y) = 2/|a|^2 = 1 in the simply-laced normalization... 2/2
  }
}

TEST_CASE("chevalley constants on C2: string of length 2") {
  ChevalleyTable t = chevalley_constants({'C', 2, 0});
  VecZ a1 = zv({1, 0});            // short
  VecZ a2 = zv({0, 1});            // long
  VecZ s = zv({1, 1});             // a1 + a2, short
  VecZ l = zv({2, 1});             // 2a1 + a2, long

  CHECK(t.sys.positive.size() == 4);
  Int n1 = t.n_constant(a1, a2);
  CHECK((n1 == 1 || n1 == -1));
  // p = 1 string: |N| = 2
  Int n2 = t.n_constant(a1, s);
  CHECK((n2 == 2 || n2 == -2));
  CHECK(t.sys.string_down(a1, s) == 1);
  CHECK(t.n_constant(s, a1) == -n2);
  CHECK(a1 + a1 + a2 == l);

  // coroot of the long root 2e1 = 2a1 + a2: norm 4 -> h = a1-part 1, a2-part 1
  VecQ co = t.coroot(l);
  CHECK(t.eval(l, co) == 2);
}

TEST_CASE("jacobi holds exhaustively on small finite algebras") {
  for (const auto& label : {TypeLabel{'A', 1, 0}, TypeLabel{'A', 2, 0}, TypeLabel{'A', 3, 0},
                            TypeLabel{'C', 2, 0}, TypeLabel{'C', 3, 0}, TypeLabel{'B', 3, 0},
                            TypeLabel{'G', 2, 0}, TypeLabel{'D', 4, 0}, TypeLabel{'F', 4, 0}}) {
    CAPTURE(to_string(label));
    ChevalleyTable t = chevalley_constants(label);
    std::vector<Elem> basis;
    for (const auto& r : t.sys.positive) {
      basis.push_back(root_elem(t, r));
      basis.push_back(root_elem(t, -r));
    }
    for (int i = 0; i < t.sys.gcm.n; ++i) basis.push_back(cartan_elem(t, i));
    // |N| = p+1 and antisymmetry across all pairs
    for (const auto& a : t.sys.positive)
      for (const auto& b : t.sys.positive) {
        for (const VecZ& x : {a, -a})
          for (const VecZ& y : {b, -b}) {
            CHECK(t.n_constant(x, y) == -t.n_constant(y, x));
            VecZ sum = x + y;
            if (!is_zero(sum) && t.sys.is_root(sum)) {
              Int mag = t.n_constant(x, y);
              if (mag < 0) mag = -mag;
              CHECK(mag == t.sys.string_down(x, y) + 1);
            }
          }
      }
    // full Jacobi sweep (skip the largest cases to keep the suite quick)
    if (t.sys.positive.size() > 12) continue;
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          Elem j1 = bracket(t, bracket(t, a, b), c);
          Elem j2 = bracket(t, bracket(t, b, c), a);
          Elem j3 = bracket(t, bracket(t, c, a), b);
          Elem sum(t.sys.gcm.n);
          for (const auto& e : {j1, j2, j3}) {
            for (const auto& [r, v] : e.x) sum.x[r] += v;
            for (int i = 0; i < t.sys.gcm.n; ++i) sum.h[i] += e.h[i];
          }
          CHECK(sum.zero());
        }
  }
}

TEST_CASE("exceptional tables build with self-consistent constants") {
  // construction verifies |N| = p+1 for every derived constant internally
  for (int r = 6; r <= 8; ++r) CHECK_NOTHROW(chevalley_constants({'E', r, 0}));
}

TEST_CASE("unsupported structure tables are capability errors") {
  CHECK_THROWS_AS(chevalley_constants({'A', 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(chevalley_constants({'B', 2, 0}), std::invalid_argument);
}
