#ifndef SDC_INTEGER_HPP
#define SDC_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace sdc {

/// Exact integer used for semigroup elements and polynomial coefficients.
///
/// Inflation multiplies elements by primes larger than the element itself,
/// so a 6-vertex tree already needs ~73 bits. All arithmetic that can grow
/// goes through the checked helpers below, which throw OverflowError instead
/// of wrapping.
using Int = __int128;

inline constexpr Int kIntMax = static_cast<Int>((static_cast<unsigned __int128>(1) << 127) - 1);

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Nonnegative residue of a modulo m (m > 0).
Int floor_mod(Int a, Int m);
/// (a*b) mod m for 0 <= a,b < m; never overflows.
Int mul_mod(Int a, Int b, Int m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Int mod_inverse(Int a, Int m);

/// Miller-Rabin. Deterministic below 3.3e24, probabilistic with 25 bases above.
bool is_prime(Int n);

std::string to_string(Int v);
/// Parses an optionally signed decimal literal; throws InvalidInput.
Int parse_int(std::string_view text);

bool fits_int64(Int v);

}  // namespace sdc

#endif
