#pragma once

#include <vector>

#include "extlie/linalg.hpp"

namespace extlie {

/// Linear subspace of F^n stored by its reduced row-echelon basis, which is
/// the canonical representative; equality is a basis comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of `m`.
  static Subspace row_space(const Matrix& m);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
  /// Standard basis indices not among the pivot columns, increasing. Their
  /// unit vectors complete the echelon basis to a basis of F^n.
  std::vector<std::size_t> complement_cols() const;

  /// v minus its projection along the echelon basis; zero at pivot columns.
  Vector residual(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  /// Coefficients of v in the echelon basis; v must lie in the subspace.
  std::vector<Scalar> coordinates(const Vector& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void check_compatible(const Subspace& o) const;
  void check_vector(const Vector& v) const;

  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {v : a*v = 0}.
Subspace kernel(const Matrix& a);
/// kernel(a - lambda*I); `a` must be square.
Subspace eigenspace(const Matrix& a, const Scalar& lambda);

/// Growing linearly independent set with membership queries; backs the
/// span-growth closures.
class IncrementalBasis {
 public:
  IncrementalBasis(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

  /// Adds v if it is independent of the current set; returns true if added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const { return vectors_.size(); }
  /// Vectors in insertion order, as given to add().
  const std::vector<Vector>& vectors() const { return vectors_; }
  Subspace to_subspace() const;

 private:
  Vector reduce(Vector v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> vectors_;
  std::vector<Vector> reduced_;  // pivot-normalized rows, pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace extlie
