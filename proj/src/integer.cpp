#include "sdc/integer.hpp"

#include <algorithm>
#include <array>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

using UInt = unsigned __int128;

constexpr Int kInt64Max = static_cast<Int>(INT64_MAX);
constexpr Int kInt64Min = static_cast<Int>(INT64_MIN);

Int pow_mod(Int base, Int exp, Int m)
{
    Int result = 1 % m;
    base = floor_mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

Int floor_mod(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m)
{
    if (m <= kInt64Max) {
        return static_cast<Int>((static_cast<UInt>(a) * static_cast<UInt>(b)) % static_cast<UInt>(m));
    }
    // double-and-add; a + a < 2^128 since a < m < 2^127
    UInt x = static_cast<UInt>(a), y = static_cast<UInt>(b), mod = static_cast<UInt>(m), acc = 0;
    while (y != 0) {
        if (y & 1) {
            acc += x;
            if (acc >= mod) acc -= mod;
        }
        x += x;
        if (x >= mod) x -= mod;
        y >>= 1;
    }
    return static_cast<Int>(acc);
}

Int mod_inverse(Int a, Int m)
{
    if (m == 1) return 0;
    Int old_r = floor_mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw InvalidInput("mod_inverse: arguments are not coprime");
    return floor_mod(old_s, m);
}

bool is_prime(Int n)
{
    static constexpr std::array<int, 25> kBases = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    if (n < 2) return false;
    for (int p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : kBases) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::string to_string(Int v)
{
    if (v == 0) return "0";
    bool negative = v < 0;
    UInt u = negative ? static_cast<UInt>(-(v + 1)) + 1 : static_cast<UInt>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    Int value = 0;
    for (char c : body) {
        if (c < '0' || c > '9') throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
        value = checked_add(checked_mul(value, 10), c - '0');
    }
    return negative ? -value : value;
}

bool fits_int64(Int v) { return v >= kInt64Min && v <= kInt64Max; }

}  // namespace sdc
