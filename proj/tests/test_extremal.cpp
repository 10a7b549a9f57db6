#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extlie/builtins.hpp"
#include "extlie/extremal.hpp"

using namespace extlie;

namespace {

Vector random_vector(Field f, std::size_t n, std::mt19937_64& rng) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 11) - 5);
  return v;
}

// Integer-residue witt5 bracket written from the formula, independent of
// the table in the library.
using Coords = std::array<int, 5>;
Coords witt_bracket(const Coords& u, const Coords& v) {
  Coords r{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      int k = i + j - 1;
      if (k < 0 || k > 4) continue;
      r[static_cast<std::size_t>(k)] = ((r[static_cast<std::size_t>(k)] + u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] * (j - i)) % 5 + 5) % 5;
    }
  return r;
}

// 0 not extremal, 1 sandwich, 2 extremal non-sandwich.
int witt_kind(const Coords& x) {
  bool sandwich = true;
  std::size_t lead = 0;
  while (x[lead] == 0) ++lead;
  for (std::size_t m = 0; m < 5; ++m) {
    Coords e{};
    e[m] = 1;
    Coords img = witt_bracket(x, witt_bracket(x, e));
    int c = 0;
    for (int t = 1; t < 5; ++t)
      if (x[lead] * t % 5 == img[lead]) c = t;
    for (std::size_t i = 0; i < 5; ++i) {
      if (img[i]) sandwich = false;
      if ((img[i] - c * x[i]) % 5) return 0;
    }
  }
  return sandwich ? 1 : 2;
}

}  // namespace

TEST_CASE("witt5 basis scan") {
  auto w = builtin("witt5", 5);
  auto s = scan_basis(w);
  REQUIRE(s.size() == 5);
  CHECK(s[0].kind == ExtremalKind::not_extremal);
  CHECK(s[1].kind == ExtremalKind::not_extremal);
  CHECK(s[2].kind == ExtremalKind::extremal_nonsandwich);
  CHECK(s[3].kind == ExtremalKind::not_extremal);
  CHECK(s[4].kind == ExtremalKind::sandwich);
  // [d2,d0] = -2 d1 and [d2,-2 d1] = 2 d2.
  CHECK(s[2].f_of(w.basis_vector(0)) == Scalar::from_int(w.field(), 2));
  CHECK(s[4].f->is_zero());
}

TEST_CASE("sl3 root vectors are extremal") {
  for (std::int64_t p : {5, 7, 0}) {
    auto l = builtin("sl3", p);
    auto s = scan_basis(l);
    for (std::size_t i = 0; i < 6; ++i) CHECK(s[i].kind == ExtremalKind::extremal_nonsandwich);
    CHECK(s[6].kind == ExtremalKind::not_extremal);
    CHECK(s[7].kind == ExtremalKind::not_extremal);
  }
  auto sl2 = builtin("sl2", 5);
  CHECK(classify_element(sl2, sl2.basis_vector(2)).kind == ExtremalKind::not_extremal);
  auto h = builtin("heisenberg", 7);
  CHECK(classify_element(h, h.basis_vector(0)).kind == ExtremalKind::sandwich);
  CHECK(classify_element(h, h.basis_vector(2)).kind == ExtremalKind::sandwich);
  CHECK_THROWS_AS(classify_element(h, h.zero()), DomainError);
}

TEST_CASE("f_x is the extremal functional and scales with x") {
  std::mt19937_64 rng(8);
  for (const char* name : {"sl3", "sl4", "witt5"}) {
    auto l = builtin(name, 5);
    Field f = l.field();
    for (const auto& st : scan_basis(l)) {
      if (!st.is_extremal()) continue;
      for (int k = 0; k < 10; ++k) {
        Vector m = random_vector(f, l.dim(), rng);
        CHECK(l.bracket(st.x, l.bracket(st.x, m)) == st.f_of(m) * st.x);
      }
      for (std::int64_t c = 1; c < 5; ++c) {
        Scalar s = Scalar::from_int(f, c);
        auto scaled = classify_element(l, s * st.x);
        CHECK(scaled.kind == st.kind);
        CHECK(*scaled.f == s * *st.f);
      }
    }
  }
}

TEST_CASE("exhaustive scan of sl2 over F5 is the nilpotent cone") {
  auto l = builtin("sl2", 5);
  auto r = exhaustive_scan(l);
  std::vector<Vector> cone;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        if ((a || b || c) && (c * c + a * b) % 5 == 0) cone.push_back(Vector::from_ints(l.field(), {a, b, c}));
  CHECK(r.count_extremal_nonsandwich == 24);
  CHECK(r.count_sandwich == 0);
  CHECK(r.count_not_extremal == 124 - 24);
  CHECK(r.extremal_nonsandwich == cone);
}

TEST_CASE("exhaustive scan of witt5 agrees with a direct oracle") {
  auto l = builtin("witt5", 5);
  auto r = exhaustive_scan(l);
  std::vector<Vector> ext, sand;
  Coords x{};
  for (int a = 0; a < 3125; ++a) {
    int t = a;
    for (int i = 4; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = t % 5;
      t /= 5;
    }
    if (a == 0) continue;
    int k = witt_kind(x);
    Vector v = Vector::from_ints(l.field(), {x[0], x[1], x[2], x[3], x[4]});
    if (k == 2) ext.push_back(v);
    if (k == 1) sand.push_back(v);
  }
  CHECK(r.extremal_nonsandwich == ext);
  CHECK(r.sandwich == sand);
  CHECK(r.count_extremal_nonsandwich + r.count_sandwich + r.count_not_extremal == 3124);
  CHECK(r.count_sandwich == 4);
}

TEST_CASE("scan results do not depend on threads") {
  for (const char* name : {"witt5", "sl2", "heisenberg"}) {
    auto l = builtin(name, 5);
    auto one = exhaustive_scan(l);
    for (unsigned t : {2u, 3u, 7u}) {
      auto many = exhaustive_scan(l, {t, false});
      CHECK(many.extremal_nonsandwich == one.extremal_nonsandwich);
      CHECK(many.sandwich == one.sandwich);
      CHECK(many.count_not_extremal == one.count_not_extremal);
    }
    auto reps = exhaustive_scan(l, {2, true});
    CHECK(reps.count_extremal_nonsandwich == one.count_extremal_nonsandwich);
    CHECK(reps.extremal_nonsandwich.size() * 4 == one.extremal_nonsandwich.size());
    for (const auto& v : reps.extremal_nonsandwich) CHECK(v[*v.first_nonzero()].is_one());
  }
  CHECK_THROWS_AS(exhaustive_scan(builtin("sl3", 0)), CapabilityError);
  CHECK_THROWS_AS(exhaustive_scan(builtin("sl4", 7)), CapabilityError);
}
