#ifndef SDC_HILBERT_HPP
#define SDC_HILBERT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "sdc/integer.hpp"
#include "sdc/semigroup.hpp"

namespace sdc {

/// Polynomial with exact integer coefficients keyed by nonnegative exponent.
/// Zero coefficients are never stored.
class SparsePolynomial {
public:
    using Terms = std::map<std::int64_t, Int>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(Terms terms);
    static SparsePolynomial monomial(std::int64_t exponent, Int coefficient);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Int coefficient(std::int64_t exponent) const;
    Int value_at_one() const;

    void add_term(std::int64_t exponent, Int coefficient);
    SparsePolynomial truncated(std::int64_t max_degree) const;

    friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    bool operator==(const SparsePolynomial&) const = default;

    /// "1 - 2*t^30 + t^60"
    std::string to_string() const;

private:
    Terms terms_;
};

/// sum over m of chi(Delta_m) t^m, scanning up to F(S) + n_[d].
SparsePolynomial hilbert_numerator(const NumericalSemigroup& s, unsigned threads = 1);

/// (sum_{m in S, m <= N} t^m) * prod (1 - t^{n_i}), truncated at degree N.
/// Needs N >= F(S) + n_[d] so that the truncation is the whole numerator.
SparsePolynomial numerator_oracle(const NumericalSemigroup& s, Int truncation);

}  // namespace sdc

#endif
