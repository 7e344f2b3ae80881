#ifndef SDC_DIVISOR_COMPLEX_HPP
#define SDC_DIVISOR_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/semigroup.hpp"

namespace sdc {

/// Squarefree divisor complex: F is a face iff m - n_F lies in the monoid.
/// Void when m is outside the monoid. Faces are grown one vertex at a time,
/// so non-faces are never extended.
SimplicialComplex delta(const NumericalSemigroup& s, Int m);

/// Largest m that can have a nonzero Euler characteristic: F(S) + n_[d].
/// Beyond it every m - n_F exceeds F(S), so Delta_m is the full simplex.
Int scan_bound(const NumericalSemigroup& s);

/// All m in [0, scan_bound] with chi(Delta_m) != 0, ascending. The range is
/// split across `threads` workers and merged in order.
std::map<Int, std::int64_t> nonzero_euler_scan(const NumericalSemigroup& s, unsigned threads = 1);

/// { n_[d] + f : f in PF(S) }, the elements whose complex is the boundary
/// of the full simplex.
std::vector<Int> hollow_simplex_elements(const NumericalSemigroup& s);

}  // namespace sdc

#endif
