#pragma once

#include <string>
#include <string_view>

#include "extlie/lie_algebra.hpp"

namespace extlie {

/// Canonical algebra file: a JSON document
///
///   {"characteristic": p, "dim": n, "basis": [names...],
///    "brackets": [{"i": i, "j": j, "terms": [[k, "coeff"], ...]}, ...]}
///
/// with i < j, pairs in lexicographic order, terms sorted by k and nonzero.
/// The writer is byte-stable: equal algebras give identical text.
std::string write_algebra(const LieAlgebra& l);

/// Throws ParseError for malformed JSON, missing fields, i >= j, indices out
/// of range, duplicate pairs or terms, zero or non-canonical coefficients.
LieAlgebra read_algebra(std::string_view text);

}  // namespace extlie
