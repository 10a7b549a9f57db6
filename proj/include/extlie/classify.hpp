#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extlie/sl2.hpp"

namespace extlie {

/// A named identity and whether it held. Operations that return these
/// records have already thrown if any check failed; the list documents
/// what was verified.
struct RelationCheck {
  std::string name;
  bool holds = false;
};

/// x + ad_z x + ad_z^2 x / 2 + ad_z^3 x / 6 + ad_z^4 x / 24.
/// CapabilityError in characteristic 2 or 3; HypothesisError if ad_z^5 x != 0.
Vector exp_ad(const LieAlgebra& l, const Vector& z, const Vector& x);

/// Certificate that u = exp(ad_z) x is extremal and that z lies in the
/// subalgebra generated by x, y and u.
struct ExtremalGenCertificate {
  Vector z;
  Scalar alpha;  ///< ad_z^4 x = alpha y
  Vector h1;     ///< [[x,z],z]
  Vector u;      ///< exp(ad_z) x
  /// x, [x,z], [[h1,z],x], h, h1, z, [h1,z], y
  std::vector<Vector> spanning_b;
  std::size_t closure_xyz_dim = 0;
  std::size_t closure_xyu_dim = 0;
  std::vector<RelationCheck> checks;
};

/// Throws HypothesisError when z is not in L_1 and ContradictionError naming
/// the first relation that fails.
ExtremalGenCertificate extremal_from_l1(const LieAlgebra& l, const Sl2Triple& t, const HGrading& g, const Vector& z);

enum class WittTarget { W, W_tilde };
std::string to_string(WittTarget t);

struct WittIsoReport {
  WittTarget target = WittTarget::W;
  /// x, y, h, v, [v,y], [v,[v,y]] with v rescaled so that [y,[y,v]] = x.
  std::array<Vector, 6> spanning_set;
  /// Images -d2, d0, 2 d1, 2 d4, 2 d3, d6 in the builtin target (witt5 or
  /// wittext5); the last is zero for target W.
  std::array<Vector, 6> images;
  Scalar v_rescale;  ///< factor applied to the input v
  std::vector<RelationCheck> rules;
  std::size_t pairs_checked = 0;
  bool spans_l = false;
};

const std::array<std::string, 6>& witt_spanning_names();

/// Needs characteristic 5 and [y,[y,v]] a nonzero multiple of x (v is
/// rescaled to make it x). Throws HypothesisError when a multiplication rule
/// fails, ContradictionError when `l_is_simple` and the span is not all of L.
WittIsoReport witt_recognize(const LieAlgebra& l, const Sl2Triple& t, const Vector& v, bool l_is_simple);

enum class Verdict { WittExceptional, ExtremalGenerated };
std::string to_string(Verdict v);

enum class SimplicityStatus { certified, probable, assumed };
std::string to_string(SimplicityStatus s);

struct ClassifyOptions {
  bool assume_simple = false;
  std::size_t probabilistic_samples = 32;
  std::uint64_t seed = 0x5eed;
};

struct ClassificationReport {
  Verdict verdict = Verdict::ExtremalGenerated;
  std::int64_t characteristic = 0;
  std::size_t dim = 0;
  SimplicityStatus simplicity = SimplicityStatus::assumed;
  std::string simplicity_note;
  bool assume_simple = false;
  ExtremalStatus x_status;
  Vector x, y, h;
  WalesCertificate wales;
  std::array<std::size_t, 5> grading_dims{};
  bool quadratic = false;
  DichotomyResult dichotomy;
  std::optional<WittIsoReport> witt;
  std::vector<Vector> generators;
  std::size_t closure_dim = 0;
  std::vector<ExtremalGenCertificate> certificates;
  std::vector<std::string> notes;
};

/// The whole pipeline from one extremal non-sandwich x. Simplicity is
/// certified when decidable, otherwise tested probabilistically; a failed
/// simplicity test raises HypothesisError unless `assume_simple`.
ClassificationReport classify_theorem_main(const LieAlgebra& l, const Vector& x, const ClassifyOptions& opts = {});

}  // namespace extlie
