#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "extlie/subspace.hpp"

namespace extlie {

/// One term c*b_k of a structure-constant expansion.
struct Term {
  std::size_t index;
  Scalar coeff;
  bool operator==(const Term&) const = default;
};

/// Finite-dimensional algebra with an alternating bracket given by structure
/// constants [b_i, b_j] = sum_k c_ijk b_k, stored for i < j only.
///
/// The constructor canonicalizes the table (terms sorted by index, duplicates
/// merged, zeros and empty pairs dropped) but does not check Jacobi; see
/// validate().
class LieAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

  LieAlgebra() = default;
  LieAlgebra(Field field, std::vector<std::string> basis_names, const Table& brackets);

  Field field() const { return field_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Table& table() const { return table_; }

  Vector zero() const { return Vector(field_, dim()); }
  Vector basis_vector(std::size_t i) const { return Vector::unit(field_, dim(), i); }
  std::vector<Vector> basis() const;

  /// [b_i, b_j] for any i, j.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  /// Matrix of m -> [x, m]; column j is [x, b_j].
  Matrix ad(const Vector& x) const;

  bool operator==(const LieAlgebra& o) const;

 private:
  void check(const Vector& v) const;

  Field field_;
  std::vector<std::string> names_;
  Table table_;
  // dense_[i * n + j]: terms of [b_i, b_j] for all ordered pairs
  std::vector<std::vector<Term>> dense_;
};

Subspace span_of(const LieAlgebra& l, const std::vector<Vector>& vectors);

struct ValidationReport {
  /// Basis triples i < j < k where the Jacobi sum is nonzero.
  std::vector<std::array<std::size_t, 3>> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebra& l);

/// Smallest subalgebra containing `gens`.
Subspace subalgebra_closure(const LieAlgebra& l, const std::vector<Vector>& gens);
/// Smallest ideal containing `gens`.
Subspace ideal_closure(const LieAlgebra& l, const std::vector<Vector>& gens);
Subspace center(const LieAlgebra& l);
/// [L, L].
Subspace derived(const LieAlgebra& l);

/// Whether [s, s] is contained in s.
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
/// Whether [L, s] is contained in s.
bool is_ideal(const LieAlgebra& l, const Subspace& s);

/// Matrices of the induced actions of `actors` on L/s, in the basis of unit
/// vectors at s.complement_cols(). Throws InvarianceError if some actor does
/// not map s into itself.
std::vector<Matrix> quotient_action(const LieAlgebra& l, const Subspace& s,
                                    const std::vector<Vector>& actors);

/// L/ideal with basis the complement unit vectors (names inherited).
/// Throws InvarianceError if `ideal` is not an ideal.
LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal);

/// Coordinates of the class of v in L/s, in the quotient_action basis.
Vector quotient_coordinates(const Subspace& s, const Vector& v);

enum class SimplicityMode {
  certified,      ///< decided exactly; finite fields with p^n <= 10^7
  exhaustive,     ///< certified by enumerating every projective point
  probabilistic,  ///< basis vectors plus seeded random vectors
};

struct SimplicityVerdict {
  bool simple = false;
  /// false for probabilistic "probably simple" answers; a negative answer
  /// always comes with a genuine witness and is exact.
  bool certified = false;
  /// Proper nonzero ideal (or the zero derived algebra / full center) that
  /// refutes simplicity.
  std::optional<Subspace> witness;
  std::string reason;
};

struct SimplicityOptions {
  SimplicityMode mode = SimplicityMode::certified;
  std::size_t random_samples = 32;
  std::uint64_t seed = 0x5eed;
};

/// Throws CapabilityError for certified/exhaustive modes over Q or when
/// p^n exceeds 10^7.
SimplicityVerdict is_simple(const LieAlgebra& l, const SimplicityOptions& opts = {});

/// Whether certified simplicity is available for `l`.
bool simplicity_decidable(const LieAlgebra& l);

}  // namespace extlie
