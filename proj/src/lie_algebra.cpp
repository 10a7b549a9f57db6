#include "extlie/lie_algebra.hpp"

#include <random>

namespace extlie {

LieAlgebra::LieAlgebra(Field field, std::vector<std::string> basis_names, const Table& brackets)
    : field_(field), names_(std::move(basis_names)) {
  const std::size_t n = dim();
  if (n == 0) throw ShapeError("Lie algebra of dimension 0");
  for (const auto& [key, terms] : brackets) {
    auto [i, j] = key;
    if (i >= n || j >= n)
      throw ShapeError("bracket index out of range: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    if (i >= j) throw ShapeError("bracket key must have i < j: (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    std::map<std::size_t, Scalar> merged;
    for (const auto& t : terms) {
      if (t.index >= n) throw ShapeError("bracket term index out of range: " + std::to_string(t.index));
      if (t.coeff.field() != field_) throw FieldMismatch("structure constant over " + t.coeff.field().name());
      auto [it, inserted] = merged.emplace(t.index, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    std::vector<Term> canon;
    for (const auto& [k, c] : merged)
      if (!c.is_zero()) canon.push_back({k, c});
    if (!canon.empty()) table_[key] = std::move(canon);
  }
  dense_.assign(n * n, {});
  for (const auto& [key, terms] : table_) {
    auto [i, j] = key;
    dense_[i * n + j] = terms;
    auto& neg = dense_[j * n + i];
    for (const auto& t : terms) neg.push_back({t.index, -t.coeff});
  }
}

std::vector<Vector> LieAlgebra::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

void LieAlgebra::check(const Vector& v) const {
  if (v.size() != dim())
    throw ShapeError("vector of length " + std::to_string(v.size()) + " in algebra of dimension " +
                     std::to_string(dim()));
  if (v.field() != field_) throw ShapeError("vector over " + v.field().name() + " in algebra over " + field_.name());
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw ShapeError("basis index out of range");
  Vector r = zero();
  for (const auto& t : dense_[i * dim() + j]) r[t.index] += t.coeff;
  return r;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  check(u);
  check(v);
  Vector r = zero();
  for (const auto& [key, terms] : table_) {
    auto [i, j] = key;
    Scalar c = u[i] * v[j] - u[j] * v[i];
    if (c.is_zero()) continue;
    for (const auto& t : terms) r[t.index] += c * t.coeff;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  check(x);
  const std::size_t n = dim();
  Matrix m(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : dense_[i * n + j]) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return field_ == o.field_ && names_ == o.names_ && table_ == o.table_;
}

Subspace span_of(const LieAlgebra& l, const std::vector<Vector>& vectors) {
  return Subspace::span(l.field(), l.dim(), vectors);
}

ValidationReport validate(const LieAlgebra& l) {
  ValidationReport rep;
  const std::size_t n = l.dim();
  std::vector<Vector> basis = l.basis();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector bij = l.bracket_basis(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = l.bracket(bij, basis[k]) + l.bracket(l.bracket_basis(j, k), basis[i]) +
                   l.bracket(l.bracket_basis(k, i), basis[j]);
        if (!s.is_zero()) rep.violations.push_back({i, j, k});
      }
    }
  return rep;
}

Subspace subalgebra_closure(const LieAlgebra& l, const std::vector<Vector>& gens) {
  IncrementalBasis b(l.field(), l.dim());
  std::vector<Vector> frontier;
  for (const auto& g : gens)
    if (b.add(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& a : frontier)
      for (std::size_t k = 0; k < b.dim(); ++k) {
        Vector c = l.bracket(a, b.vectors()[k]);
        if (b.add(c)) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return b.to_subspace();
}

Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& gens) {
  IncrementalBasis b(l.field(), l.dim());
  std::vector<Vector> frontier;
  for (const auto& g : gens)
    if (b.add(g)) frontier.push_back(g);
  std::vector<Matrix> ads;
  for (const auto& e : l.basis()) ads.push_back(l.ad(e));
  while (!frontier.empty() && b.dim() < l.dim()) {
    std::vector<Vector> next;
    for (const auto& a : frontier)
      for (const auto& m : ads) {
        Vector c = m * a;
        if (b.add(c)) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return b.to_subspace();
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix stacked(l.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m = l.ad(l.basis_vector(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = m(r, c);
  }
  return kernel(stacked);
}

Subspace derived(const LieAlgebra& l) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) brackets.push_back(l.bracket_basis(i, j));
  return span_of(l, brackets);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  auto vs = s.basis_vectors();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!s.contains(l.bracket(vs[i], vs[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  for (const auto& v : s.basis_vectors())
    for (std::size_t i = 0; i < l.dim(); ++i)
      if (!s.contains(l.bracket(l.basis_vector(i), v))) return false;
  return true;
}

Vector quotient_coordinates(const Subspace& s, const Vector& v) {
  Vector r = s.residual(v);
  auto comp = s.complement_cols();
  Vector q(s.field(), comp.size());
  for (std::size_t j = 0; j < comp.size(); ++j) q[j] = r[comp[j]];
  return q;
}

std::vector<Matrix> quotient_action(const LieAlgebra& l, const Subspace& s, const std::vector<Vector>& actors) {
  if (s.ambient_dim() != l.dim()) throw ShapeError("quotient_action: subspace ambient dimension mismatch");
  auto comp = s.complement_cols();
  auto sbasis = s.basis_vectors();
  std::vector<Matrix> out;
  for (const auto& a : actors) {
    Matrix m = l.ad(a);
    for (const auto& v : sbasis)
      if (!s.contains(m * v))
        throw InvarianceError("subspace is not invariant under ad of " + a.to_string());
    Matrix q(l.field(), comp.size(), comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j)
      q.set_column(j, quotient_coordinates(s, m.column(comp[j])));
    out.push_back(std::move(q));
  }
  return out;
}

LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal) {
  if (!is_ideal(l, ideal)) throw InvarianceError("quotient by a subspace that is not an ideal");
  auto comp = ideal.complement_cols();
  if (comp.empty()) throw ShapeError("quotient by the whole algebra");
  std::vector<std::string> names;
  for (auto c : comp) names.push_back(l.basis_names()[c]);
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      Vector q = quotient_coordinates(ideal, l.bracket_basis(comp[a], comp[b]));
      std::vector<Term> terms;
      for (std::size_t k = 0; k < q.size(); ++k)
        if (!q[k].is_zero()) terms.push_back({k, q[k]});
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  return LieAlgebra(l.field(), std::move(names), table);
}

namespace {

constexpr std::uint64_t kEnumerationLimit = 10'000'000;

std::optional<std::uint64_t> field_size_power(const LieAlgebra& l) {
  if (!l.field().is_finite()) return std::nullopt;
  std::uint64_t p = static_cast<std::uint64_t>(l.field().characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (total > kEnumerationLimit / p) return std::nullopt;
    total *= p;
  }
  return total;
}

// Dimension of the associative algebra generated by 1 and ad(b_i).
std::size_t multiplication_algebra_dim(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> gens;
  for (const auto& e : l.basis()) gens.push_back(l.ad(e));
  IncrementalBasis b(l.field(), n * n);
  Matrix id = Matrix::identity(l.field(), n);
  b.add(id.flatten());
  std::vector<Matrix> frontier{id};
  while (!frontier.empty() && b.dim() < n * n) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Matrix prod = g * m;
        if (b.add(prod.flatten())) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return b.dim();
}

// Base-p counter; returns false after wrapping around to all zeros.
bool advance_odometer(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < p) return true;
    digits[pos] = 0;
  }
  return false;
}

// First proper nonzero ideal generated by a single vector, enumerating one
// representative (leading coordinate 1) per projective point.
std::optional<Subspace> enumerate_projective(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Field f = l.field();
  const std::uint32_t p = static_cast<std::uint32_t>(f.characteristic());
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint32_t> tail(n - lead - 1, 0);
    while (true) {
      Vector v(f, n);
      v[lead] = Scalar::one(f);
      for (std::size_t t = 0; t < tail.size(); ++t) v[lead + 1 + t] = Scalar::from_int(f, tail[t]);
      Subspace id = ideal_closure(l, {v});
      if (!id.is_full()) return id;
      if (!advance_odometer(tail, p)) break;
    }
  }
  return std::nullopt;
}

}  // namespace

bool simplicity_decidable(const LieAlgebra& l) { return field_size_power(l).has_value(); }

SimplicityVerdict is_simple(const LieAlgebra& l, const SimplicityOptions& opts) {
  const std::size_t n = l.dim();
  if (opts.mode != SimplicityMode::probabilistic) {
    if (!l.field().is_finite())
      throw CapabilityError("certified simplicity is not available over Q; use the probabilistic mode");
    if (!field_size_power(l))
      throw CapabilityError("certified simplicity needs p^n <= 10^7, got " + l.field().name() + "^" +
                            std::to_string(n));
  }

  SimplicityVerdict v;
  Subspace z = center(l);
  if (!z.is_zero()) {
    v.certified = true;
    if (z.is_full()) {
      v.reason = "abelian";
      if (n > 1) v.witness = span_of(l, {l.basis_vector(0)});
    } else {
      v.reason = "nonzero center";
      v.witness = z;
    }
    return v;
  }
  Subspace d = derived(l);
  if (!d.is_full()) {
    v.certified = true;
    v.reason = "derived algebra is proper";
    v.witness = d;
    return v;
  }

  if (opts.mode == SimplicityMode::probabilistic) {
    std::vector<Vector> samples = l.basis();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> coeff(-7, 7);
    for (std::size_t s = 0; s < opts.random_samples; ++s) {
      Vector r(l.field(), n);
      for (std::size_t i = 0; i < n; ++i) r[i] = Scalar::from_int(l.field(), coeff(rng));
      if (!r.is_zero()) samples.push_back(std::move(r));
    }
    for (const auto& s : samples) {
      Subspace id = ideal_closure(l, {s});
      if (!id.is_full()) {
        v.certified = true;
        v.reason = "proper ideal generated by a sample";
        v.witness = id;
        return v;
      }
    }
    v.simple = true;
    v.reason = "probably simple: " + std::to_string(samples.size()) + " samples each generate L";
    return v;
  }

  v.certified = true;
  if (opts.mode == SimplicityMode::certified && multiplication_algebra_dim(l) == n * n) {
    v.simple = true;
    v.reason = "ad(L) generates End(L)";
    return v;
  }
  if (auto id = enumerate_projective(l)) {
    v.reason = "proper ideal generated by a single vector";
    v.witness = std::move(id);
    return v;
  }
  v.simple = true;
  v.reason = "every projective point generates L";
  return v;
}

}  // namespace extlie
