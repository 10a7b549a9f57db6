#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extlie/extremal.hpp"

namespace extlie {

/// x, y, h with [x,y] = h, [h,x] = 2x, [h,y] = -2y; checked on construction.
class Sl2Triple {
 public:
  /// Throws HypothesisError naming the first failing relation.
  static Sl2Triple make(const LieAlgebra& l, Vector x, Vector y, Vector h);
  /// The triple determined by an sl2-pair (h = [x,y]).
  static Sl2Triple from_pair(const LieAlgebra& l, Vector x, Vector y);

  const Vector& x() const { return x_; }
  const Vector& y() const { return y_; }
  const Vector& h() const { return h_; }

 private:
  Sl2Triple(Vector x, Vector y, Vector h) : x_(std::move(x)), y_(std::move(y)), h_(std::move(h)) {}
  Vector x_, y_, h_;
};

/// Intermediate data of the construction of y from a witness w.
struct WalesCertificate {
  Vector w;   ///< f_x(w) = -2
  Vector x1;  ///< [w,h] - 2w, lies in C_L(x)
  Vector w1;  ///< in C_L(x) with (ad_h + 2) w1 = x1
  Vector y;   ///< w + w1
  Subspace centralizer;  ///< C_L(x) = ker ad_x
};

/// First basis vector b with f(b) != 0, scaled so that f_x(w) = -2.
/// Throws HypothesisError if f vanishes (x is a sandwich).
Vector find_witness(const LieAlgebra& l, const Vector& x, const Vector& f);

/// Builds y from x and a witness w. Throws CapabilityError in characteristic
/// 2 or 3 and HypothesisError when x is not extremal, f_x(w) != -2, x1 is not
/// in C_L(x) or ad_h + 2 is singular there.
std::pair<Sl2Triple, WalesCertificate> wales_sl2(const LieAlgebra& l, const Vector& x, const Vector& w);

/// Eigenspaces L_i of -ad_h for labels i = -2..2.
class HGrading {
 public:
  static constexpr int kMinLabel = -2;
  static constexpr int kMaxLabel = 2;

  HGrading(Field f, std::array<Subspace, 5> components) : field_(f), components_(std::move(components)) {}

  const Subspace& component(int label) const { return components_.at(static_cast<std::size_t>(label + 2)); }
  std::array<std::size_t, 5> dims() const;
  /// Label in [-2, 2] congruent to i + j modulo p (plain i + j over Q), or
  /// nullopt when no label matches and [L_i, L_j] must vanish.
  std::optional<int> product_label(int i, int j) const;

 private:
  Field field_;
  std::array<Subspace, 5> components_;
};

/// Throws CapabilityError in characteristic 2 or 3, HypothesisError when x
/// is not extremal or the eigenspaces do not exhaust L, ContradictionError
/// when the decomposition exists but violates a proved property.
HGrading h_grading(const LieAlgebra& l, const Sl2Triple& t);

/// Whether every product [L_i, L_j] lies in L_{product_label(i,j)}, or is
/// zero when there is no such label.
bool grading_compatible(const LieAlgebra& l, const HGrading& g);

/// Whether ad_y^2 maps L into S = <x, y, h>, through the matrix of y on L/S.
/// Throws InvarianceError if S is not a subalgebra.
bool quadraticity_check(const LieAlgebra& l, const Sl2Triple& t);

enum class DichotomyBranch { exceptional, regular };

struct RegularEvidence {
  ExtremalStatus y_status;
  bool x_maps_l1_onto_lminus1 = false;  ///< [x, L_1] = L_-1
  bool y_maps_lminus1_onto_l1 = false;  ///< [y, L_-1] = L_1
  bool integer_grading = false;         ///< [L_i, L_j] = 0 for |i + j| > 2
};

struct DichotomyResult {
  DichotomyBranch branch = DichotomyBranch::regular;
  std::optional<Vector> v;  ///< exceptional: v in L_-1 with [y,[y,v]] = x
  std::optional<RegularEvidence> evidence;
};

/// Exceptional branch when [y,[y,L_-1]] != 0. Throws ContradictionError when
/// this happens outside characteristic 5, or when the regular branch fails
/// one of its checks.
DichotomyResult dichotomy(const LieAlgebra& l, const Sl2Triple& t, const HGrading& g);

}  // namespace extlie
