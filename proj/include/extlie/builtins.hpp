#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extlie/lie_algebra.hpp"

namespace extlie {

/// Builtin algebras and their basis orders:
///   sl2         e, f, h  with [e,f] = h, [h,e] = 2e, [h,f] = -2f
///   sl3, sl4    e_ij (i != j, lexicographic), then h_i = E_ii - E_{i+1,i+1}
///   witt5       d0..d4, d_i = z^i d/dz, [d_i, d_j] = (j - i) d_{i+j-1}
///   wittext5    d0..d4, d6, the same table plus [d3, d4] = d6
///   heisenberg  p, q, c  with [p,q] = c
///
/// Raises CapabilityError for unknown names, characteristic 2 or 3, and the
/// Witt algebras outside characteristic 5. The result is Jacobi-validated.
LieAlgebra builtin(std::string_view name, std::int64_t characteristic);

const std::vector<std::string>& builtin_names();

/// sl_n built from matrix commutators; any n >= 2.
LieAlgebra special_linear(std::size_t n, Field f);

}  // namespace extlie
