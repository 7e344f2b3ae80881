#include "sdc/hilbert.hpp"

#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"

namespace sdc {

SparsePolynomial::SparsePolynomial(Terms terms)
{
    for (const auto& [e, c] : terms) add_term(e, c);
}

SparsePolynomial SparsePolynomial::monomial(std::int64_t exponent, Int coefficient)
{
    SparsePolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

Int SparsePolynomial::coefficient(std::int64_t exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

Int SparsePolynomial::value_at_one() const
{
    Int total = 0;
    for (const auto& [e, c] : terms_) total = checked_add(total, c);
    return total;
}

void SparsePolynomial::add_term(std::int64_t exponent, Int coefficient)
{
    if (exponent < 0) throw InvalidInput("negative exponent");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (inserted) return;
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
}

SparsePolynomial SparsePolynomial::truncated(std::int64_t max_degree) const
{
    SparsePolynomial p;
    for (const auto& [e, c] : terms_) {
        if (e > max_degree) break;
        p.terms_.emplace(e, c);
    }
    return p;
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b)
{
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b)
{
    SparsePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
    }
    return out;
}

std::string SparsePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += sdc::to_string(mag);
            continue;
        }
        if (mag != 1) out += sdc::to_string(mag) + "*";
        out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out;
}

SparsePolynomial hilbert_numerator(const NumericalSemigroup& s, unsigned threads)
{
    SparsePolynomial p;
    for (const auto& [m, chi] : nonzero_euler_scan(s, threads)) p.add_term(static_cast<std::int64_t>(m), chi);
    return p;
}

SparsePolynomial numerator_oracle(const NumericalSemigroup& s, Int truncation)
{
    if (truncation < scan_bound(s)) {
        throw InvalidInput("truncation degree " + to_string(truncation) + " is below F(S) + n = " +
                           to_string(scan_bound(s)));
    }
    if (truncation > kSweepLimit) throw InvalidInput("truncation degree too large");
    const auto n = static_cast<std::int64_t>(truncation);

    SparsePolynomial product;
    for (std::int64_t m = 0; m <= n; ++m) {
        if (s.contains(m)) product.add_term(m, 1);
    }
    for (Int g : s.generators()) {
        SparsePolynomial factor = SparsePolynomial::monomial(0, 1) + SparsePolynomial::monomial(static_cast<std::int64_t>(g), -1);
        product = (product * factor).truncated(n);
    }
    return product;
}

}  // namespace sdc
