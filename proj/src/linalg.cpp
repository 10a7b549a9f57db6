#include "extlie/linalg.hpp"

#include <algorithm>

namespace extlie {

Vector::Vector(Field f, std::vector<Scalar> coords) : field_(f), coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c.field() != f) throw FieldMismatch("vector entry over " + c.field().name() + ", expected " + f.name());
}

Vector Vector::unit(Field f, std::size_t n, std::size_t i) {
  if (i >= n) throw ShapeError("unit vector index out of range");
  Vector v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vector Vector::from_ints(Field f, std::initializer_list<std::int64_t> values) {
  std::vector<Scalar> c;
  c.reserve(values.size());
  for (auto x : values) c.push_back(Scalar::from_int(f, x));
  return Vector(f, std::move(c));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<std::size_t> Vector::first_nonzero() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return i;
  return std::nullopt;
}

std::vector<std::string> Vector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.to_string());
  return out;
}

std::string Vector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].to_string();
  }
  return s + ")";
}

void Vector::check_compatible(const Vector& o) const {
  if (size() != o.size())
    throw ShapeError("vector sizes " + std::to_string(size()) + " and " + std::to_string(o.size()));
  if (field_ != o.field_) throw FieldMismatch("vectors over " + field_.name() + " and " + o.field_.name());
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch("scaling " + field_.name() + " vector by " + c.field().name());
  for (auto& x : coords_) x *= c;
  return *this;
}

bool Vector::operator==(const Vector& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

bool Vector::lex_less(const Vector& o) const {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Scalar& a = coords_[i];
    const Scalar& b = o.coords_[i];
    if (a == b) continue;
    if (field_.is_finite()) return a.residue() < b.residue();
    return a.rational() < b.rational();
  }
  return false;
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row of wrong length");
    if (rows[r].field() != f) throw FieldMismatch("row over " + rows[r].field().name());
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  std::vector<Scalar> v(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return Vector(field_, std::move(v));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw ShapeError("column of wrong length");
  if (v.field() != field_) throw FieldMismatch("column over " + v.field().name());
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::flatten() const { return Vector(field_, data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) m(i, j) += aik * bkj;
      }
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  if (a.field_ != v.field()) throw FieldMismatch("matrix-vector product over different fields");
  Vector r(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (!aik.is_zero() && !v[k].is_zero()) r[i] += aik * v[k];
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Echelon rref(const Matrix& m) {
  Echelon e{m, 0, {}};
  Matrix& a = e.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw ShapeError("solve: right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                     std::to_string(a.rows()) + " rows");
  if (b.field() != a.field()) throw FieldMismatch("solve over different fields");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector v(a.field(), a.cols());
  for (std::size_t k = 0; k < e.rank; ++k) v[e.pivot_cols[k]] = e.form(k, a.cols());
  return v;
}

}  // namespace extlie
