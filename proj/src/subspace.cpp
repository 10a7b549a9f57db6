#include "extlie/subspace.hpp"

#include <algorithm>

namespace extlie {

Subspace Subspace::zero(Field f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  return row_space(Matrix::identity(f, ambient));
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = rref(m);
  Subspace s;
  s.field_ = m.field();
  s.ambient_ = m.cols();
  s.basis_ = Matrix(m.field(), e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = e.form(r, c);
  s.pivots_ = std::move(e.pivot_cols);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

std::vector<std::size_t> Subspace::complement_cols() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

void Subspace::check_compatible(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    throw ShapeError("subspaces of F^" + std::to_string(ambient_) + " and F^" + std::to_string(o.ambient_));
  if (field_ != o.field_) throw FieldMismatch("subspaces over " + field_.name() + " and " + o.field_.name());
}

void Subspace::check_vector(const Vector& v) const {
  if (v.size() != ambient_)
    throw ShapeError("vector of length " + std::to_string(v.size()) + " in F^" + std::to_string(ambient_));
  if (v.field() != field_) throw FieldMismatch("vector over " + v.field().name() + " in " + field_.name() + " subspace");
}

Vector Subspace::residual(const Vector& v) const {
  check_vector(v);
  Vector r = v;
  for (std::size_t k = 0; k < dim(); ++k) {
    Scalar c = r[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (!basis_(k, j).is_zero()) r[j] -= c * basis_(k, j);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return residual(v).is_zero(); }

bool Subspace::contains(const Subspace& o) const {
  check_compatible(o);
  for (std::size_t r = 0; r < o.dim(); ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DomainError("vector " + v.to_string() + " is not in the subspace");
  std::vector<Scalar> c;
  c.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) c.push_back(v[pivots_[k]]);
  return c;
}

Subspace Subspace::sum(const Subspace& o) const {
  check_compatible(o);
  std::vector<Vector> rows = basis_vectors();
  for (auto& v : o.basis_vectors()) rows.push_back(std::move(v));
  return span(field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return zero(field_, ambient_);
  // Columns: this basis, then o's basis. Kernel vectors (a, b) give a.U = -b.O.
  std::vector<Vector> cols = basis_vectors();
  for (auto& v : o.basis_vectors()) cols.push_back(std::move(v));
  Subspace k = kernel(Matrix::from_columns(field_, ambient_, cols));
  std::vector<Vector> out;
  for (const auto& kv : k.basis_vectors()) {
    Vector w(field_, ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!kv[i].is_zero()) w += kv[i] * basis_.row(i);
    out.push_back(std::move(w));
  }
  return span(field_, ambient_, out);
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& a) {
  Echelon e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.field(), n);
    v[free] = Scalar::one(a.field());
    for (std::size_t k = 0; k < e.rank; ++k) v[e.pivot_cols[k]] = -e.form(k, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, basis);
}

Subspace eigenspace(const Matrix& a, const Scalar& lambda) {
  if (!a.is_square()) throw ShapeError("eigenspace of a non-square matrix");
  Matrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

Vector IncrementalBasis::reduce(Vector v) const {
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Vector& row = reduced_[k];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  return v;
}

bool IncrementalBasis::add(const Vector& v) {
  if (v.size() != ambient_) throw ShapeError("IncrementalBasis: wrong vector length");
  Vector r = reduce(v);
  auto piv = r.first_nonzero();
  if (!piv) return false;
  r *= r[*piv].inverse();
  reduced_.push_back(std::move(r));
  pivots_.push_back(*piv);
  vectors_.push_back(v);
  return true;
}

bool IncrementalBasis::contains(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("IncrementalBasis: wrong vector length");
  return reduce(v).is_zero();
}

Subspace IncrementalBasis::to_subspace() const {
  return Subspace::span(field_, ambient_, reduced_);
}

}  // namespace extlie
