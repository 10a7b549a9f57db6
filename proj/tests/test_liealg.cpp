#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extlie/algebra_io.hpp"
#include "extlie/builtins.hpp"

using namespace extlie;

namespace {

Vector random_vector(Field f, std::size_t n, std::mt19937_64& rng) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_finite())
      v[i] = Scalar::from_int(f, static_cast<std::int64_t>(rng() % f.characteristic()));
    else
      v[i] = Scalar::from_fraction(f, static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 2) + 1);
  }
  return v;
}

// E_ab as an n x n matrix.
Matrix unit_matrix(Field f, std::size_t n, std::size_t a, std::size_t b) {
  Matrix m(f, n, n);
  m(a, b) = Scalar::one(f);
  return m;
}

// The basis of sl_n as matrices, in builtin order: off-diagonal E_ij
// lexicographically, then E_ii - E_{i+1,i+1}.
std::vector<Matrix> sl_matrices(Field f, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(unit_matrix(f, n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit_matrix(f, n, i, i) - unit_matrix(f, n, i + 1, i + 1));
  return out;
}

Vector sl_coordinates(const std::vector<Matrix>& basis, const Matrix& m) {
  Field f = m.field();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.flatten());
  auto c = solve(Matrix::from_columns(f, m.rows() * m.cols(), cols), m.flatten());
  REQUIRE(c);
  return *c;
}

}  // namespace

TEST_CASE("sl_n structure constants match matrix commutators") {
  for (std::int64_t p : {0, 5, 7}) {
    Field f = Field::of(p);
    for (std::size_t n : {2u, 3u, 4u}) {
      auto l = special_linear(n, f);
      auto mats = sl_matrices(f, n);
      REQUIRE(l.dim() == mats.size());
      for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = 0; j < mats.size(); ++j)
          CHECK(l.bracket_basis(i, j) == sl_coordinates(mats, mats[i] * mats[j] - mats[j] * mats[i]));
    }
  }
  auto sl2 = builtin("sl2", 5);
  CHECK(sl2.basis_names() == std::vector<std::string>{"e", "f", "h"});
  CHECK(builtin("sl3", 7).basis_names().front() == "e12");
}

TEST_CASE("witt5 structure constants") {
  auto w = builtin("witt5", 5);
  Field f = w.field();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Vector want(f, 5);
      std::int64_t k = static_cast<std::int64_t>(i + j) - 1;
      if (k >= 0 && k < 5) want[static_cast<std::size_t>(k)] = Scalar::from_int(f, static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i));
      CHECK(w.bracket_basis(i, j) == want);
    }
  auto we = builtin("wittext5", 5);
  CHECK(we.bracket_basis(3, 4) == Vector::unit(f, 6, 5));
  CHECK(we.bracket_basis(2, 4).is_zero());
  CHECK_THROWS_AS(builtin("witt5", 7), CapabilityError);
  CHECK_THROWS_AS(builtin("sl3", 3), CapabilityError);
  CHECK_THROWS_AS(builtin("sl3", 2), CapabilityError);
  CHECK_THROWS_AS(builtin("so5", 5), CapabilityError);
}

TEST_CASE("builtins satisfy Jacobi and the ad homomorphism") {
  std::mt19937_64 rng(17);
  for (const auto& name : builtin_names())
    for (std::int64_t p : {5, 7, 0}) {
      if (name.rfind("witt", 0) == 0 && p != 5) continue;
      auto l = builtin(name, p);
      CHECK(validate(l).ok());
      for (int k = 0; k < 5; ++k) {
        Vector u = random_vector(l.field(), l.dim(), rng), v = random_vector(l.field(), l.dim(), rng);
        CHECK(l.ad(l.bracket(u, v)) == l.ad(u) * l.ad(v) - l.ad(v) * l.ad(u));
        CHECK(l.bracket(u, v) == -l.bracket(v, u));
        CHECK(l.bracket(u, u).is_zero());
        CHECK(l.ad(u) * v == l.bracket(u, v));
      }
    }
}

TEST_CASE("a mutated constant breaks Jacobi") {
  auto w = builtin("witt5", 5);
  Field f = w.field();
  auto table = w.table();
  table[{0, 1}] = {{0, Scalar::from_int(f, 2)}};
  LieAlgebra bad(f, w.basis_names(), table);
  auto r = validate(bad);
  REQUIRE_FALSE(r.ok());
  for (const auto& t : r.violations) {
    CHECK(t[0] < t[1]);
    CHECK(t[1] < t[2]);
  }
}

TEST_CASE("construction rejects malformed tables") {
  Field f = Field::gf(5);
  CHECK_THROWS_AS(LieAlgebra(f, {"a", "b"}, {{{1, 0}, {{0, Scalar::one(f)}}}}), ShapeError);
  CHECK_THROWS_AS(LieAlgebra(f, {"a", "b"}, {{{0, 1}, {{2, Scalar::one(f)}}}}), ShapeError);
  CHECK_THROWS_AS(LieAlgebra(f, {"a", "b"}, {{{0, 1}, {{0, Scalar::one(Field::gf(7))}}}}), FieldMismatch);
}

TEST_CASE("closures, center and derived algebra") {
  auto h = builtin("heisenberg", 5);
  Field f = h.field();
  auto c = Subspace::span(f, 3, {h.basis_vector(2)});
  CHECK(center(h) == c);
  CHECK(derived(h) == c);
  CHECK(ideal_closure(h, {h.basis_vector(2)}) == c);
  CHECK(ideal_closure(h, {h.basis_vector(0)}).dim() == 2);
  CHECK(subalgebra_closure(h, {h.basis_vector(0), h.basis_vector(1)}).is_full());

  auto sl3 = builtin("sl3", 7);
  // e12, e21 generate a copy of sl2.
  auto s = subalgebra_closure(sl3, {sl3.basis_vector(0), sl3.basis_vector(2)});
  CHECK(s.dim() == 3);
  CHECK(is_subalgebra(sl3, s));
  CHECK_FALSE(is_ideal(sl3, s));
  CHECK(ideal_closure(sl3, {sl3.basis_vector(0)}).is_full());
  CHECK(center(sl3).is_zero());
  CHECK(derived(sl3).is_full());

  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    std::vector<Vector> gens{random_vector(sl3.field(), 8, rng)};
    if (k % 2) gens.push_back(random_vector(sl3.field(), 8, rng));
    auto sub = subalgebra_closure(sl3, gens);
    auto id = ideal_closure(sl3, gens);
    CHECK(is_subalgebra(sl3, sub));
    CHECK(is_ideal(sl3, id));
    CHECK(id.contains(sub));
  }
}

TEST_CASE("wittext5 is a central extension of witt5") {
  auto we = builtin("wittext5", 5);
  auto z = center(we);
  CHECK(z == Subspace::span(we.field(), 6, {we.basis_vector(5)}));
  auto q = quotient_algebra(we, z);
  CHECK(write_algebra(q) == write_algebra(builtin("witt5", 5)));
  auto v = is_simple(we);
  CHECK_FALSE(v.simple);
  CHECK(v.certified);
  REQUIRE(v.witness);
  CHECK(*v.witness == z);
  CHECK_THROWS_AS(quotient_algebra(we, Subspace::span(we.field(), 6, {we.basis_vector(0)})), InvarianceError);
}

TEST_CASE("quotient action") {
  auto sl3 = builtin("sl3", 7);
  auto s = subalgebra_closure(sl3, {sl3.basis_vector(0), sl3.basis_vector(2)});
  auto mats = quotient_action(sl3, s, {sl3.basis_vector(0)});
  REQUIRE(mats.size() == 1);
  CHECK(mats[0].rows() == 5);
  auto q = s.complement_cols();
  // Oracle: bracket then project, column by column.
  for (std::size_t j = 0; j < q.size(); ++j) {
    Vector img = quotient_coordinates(s, sl3.bracket(sl3.basis_vector(0), sl3.basis_vector(q[j])));
    CHECK(mats[0].column(j) == img);
  }
  // e13 does not preserve <e12, e21, h1>.
  CHECK_THROWS_AS(quotient_action(sl3, s, {sl3.basis_vector(1)}), InvarianceError);
}

TEST_CASE("simplicity") {
  for (const char* name : {"sl2", "sl3", "witt5"}) {
    auto v = is_simple(builtin(name, 5));
    CHECK(v.simple);
    CHECK(v.certified);
  }
  CHECK_FALSE(is_simple(builtin("heisenberg", 5)).simple);
  SimplicityOptions ex{SimplicityMode::exhaustive};
  CHECK(is_simple(builtin("sl2", 7), ex).simple);
  CHECK(is_simple(builtin("witt5", 5), ex).simple);
  CHECK_FALSE(is_simple(builtin("wittext5", 5), ex).simple);
  SimplicityOptions pr{SimplicityMode::probabilistic};
  auto v = is_simple(builtin("sl4", 7), pr);
  CHECK(v.simple);
  CHECK_FALSE(v.certified);
  CHECK_THROWS_AS(is_simple(builtin("sl3", 0)), CapabilityError);
  CHECK_FALSE(simplicity_decidable(builtin("sl4", 5)));
  CHECK(simplicity_decidable(builtin("sl3", 7)));

  // A direct sum sl2 + sl2 has trivial center and is perfect, yet not simple.
  auto a = builtin("sl2", 5);
  Field f = a.field();
  LieAlgebra::Table t;
  for (const auto& [k, terms] : a.table()) {
    t[k] = terms;
    std::vector<Term> shifted;
    for (const auto& term : terms) shifted.push_back({term.index + 3, term.coeff});
    t[{k.first + 3, k.second + 3}] = shifted;
  }
  LieAlgebra sum(f, {"e", "f", "h", "e'", "f'", "h'"}, t);
  REQUIRE(validate(sum).ok());
  auto s = is_simple(sum);
  CHECK_FALSE(s.simple);
  REQUIRE(s.witness);
  CHECK(is_ideal(sum, *s.witness));
  CHECK(s.witness->dim() == 3);
  CHECK_FALSE(is_simple(sum, ex).simple);
}

TEST_CASE("algebra files round trip") {
  for (const auto& name : builtin_names())
    for (std::int64_t p : {5, 7, 0}) {
      if (name.rfind("witt", 0) == 0 && p != 5) continue;
      auto l = builtin(name, p);
      auto text = write_algebra(l);
      auto back = read_algebra(text);
      CHECK(back == l);
      CHECK(write_algebra(back) == text);
    }
}

TEST_CASE("malformed algebra files") {
  const char* bad[] = {
      "",
      "{",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"]})",
      R"({"characteristic": 4, "dim": 2, "basis": ["a", "b"], "brackets": []})",
      R"({"characteristic": 5, "dim": 3, "basis": ["a", "b"], "brackets": []})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "a"], "brackets": []})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 0, "terms": [[0, "1"]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[2, "1"]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, "0"]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, "7"]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, 1]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, "1"], [0, "2"]]}]})",
      R"({"characteristic": 5, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, "1"]]}, {"i": 0, "j": 1, "terms": [[1, "1"]]}]})",
      R"({"characteristic": 0, "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [[0, "2/4"]]}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(read_algebra(text), ParseError);
  }
}
