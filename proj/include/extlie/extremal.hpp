#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extlie/lie_algebra.hpp"

namespace extlie {

enum class ExtremalKind { not_extremal, sandwich, extremal_nonsandwich };

std::string to_string(ExtremalKind k);

/// Classification of one element x. When x is extremal, `f` is the
/// functional with [x,[x,m]] = f(m) x, stored as coefficients on the basis.
struct ExtremalStatus {
  Vector x;
  ExtremalKind kind = ExtremalKind::not_extremal;
  std::optional<Vector> f;

  bool is_extremal() const { return kind != ExtremalKind::not_extremal; }
  /// f(m) for extremal x.
  Scalar f_of(const Vector& m) const;
};

/// Throws DomainError for x = 0.
ExtremalStatus classify_element(const LieAlgebra& l, const Vector& x);

std::vector<ExtremalStatus> scan_basis(const LieAlgebra& l);

struct ScanOptions {
  unsigned threads = 1;
  /// Keep only vectors whose first nonzero coordinate is 1.
  bool representatives_only = false;
};

struct ScanResult {
  std::vector<Vector> extremal_nonsandwich;  ///< lexicographic order
  std::vector<Vector> sandwich;              ///< lexicographic order
  std::uint64_t count_extremal_nonsandwich = 0;
  std::uint64_t count_sandwich = 0;
  std::uint64_t count_not_extremal = 0;
};

/// Classifies every nonzero vector, in lexicographic coordinate order
/// (first coordinate most significant). Counts always cover all p^n - 1
/// vectors; the lists honour `representatives_only`. Needs GF(p) with
/// p^n <= 10^7, else CapabilityError. The result does not depend on
/// `threads`.
ScanResult exhaustive_scan(const LieAlgebra& l, const ScanOptions& opts = {});

}  // namespace extlie
