#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extlie/scalar.hpp"

namespace extlie {

/// Dense coordinate vector over one Field.
class Vector {
 public:
  Vector() = default;
  Vector(Field f, std::size_t n) : field_(f), coords_(n, Scalar(f)) {}
  /// Every entry must live in `f`.
  Vector(Field f, std::vector<Scalar> coords);

  static Vector unit(Field f, std::size_t n, std::size_t i);
  /// Convenience for tests and builtins: integers reduced into `f`.
  static Vector from_ints(Field f, std::initializer_list<std::int64_t> values);

  Field field() const { return field_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }

  bool is_zero() const;
  std::optional<std::size_t> first_nonzero() const;
  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& c);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
  friend Vector operator*(Vector v, const Scalar& c) { return v *= c; }

  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

  /// Lexicographic order on canonical residues/rationals; used for
  /// deterministic sorting of scan results.
  bool lex_less(const Vector& o) const;

 private:
  void check_compatible(const Vector& o) const;

  Field field_;
  std::vector<Scalar> coords_;
};

/// Dense row-major matrix over one Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  /// rows x cols vector of entries, row-major.
  Vector flatten() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix form;  ///< reduced row-echelon form, same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column in row order.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some v with a*v == b, or nullopt when b is outside the column space.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace extlie
