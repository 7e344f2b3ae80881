#include "sdc/special_classes.hpp"

#include <algorithm>

#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"

namespace sdc {

namespace {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void validate_t_list(const std::vector<Int>& t_list)
{
    if (t_list.size() < 2) throw InvalidInput("supersymmetric needs at least two t values");
    for (Int t : t_list) {
        if (t < 2) throw InvalidInput("t values must be >= 2");
    }
    for (std::size_t i = 0; i < t_list.size(); ++i) {
        for (std::size_t j = i + 1; j < t_list.size(); ++j) {
            if (gcd(t_list[i], t_list[j]) != 1) {
                throw InvalidInput("t values " + to_string(t_list[i]) + " and " + to_string(t_list[j]) +
                                   " are not coprime");
            }
        }
    }
}

Int product(const std::vector<Int>& values)
{
    Int p = 1;
    for (Int v : values) p = checked_mul(p, v);
    return p;
}

void require_three(const NumericalSemigroup& s)
{
    if (s.embedding_dimension() != 3) {
        throw InvalidInput("needs embedding dimension 3, got " + std::to_string(s.embedding_dimension()));
    }
    if (!s.is_numerical()) throw NonNumericalError("needs a numerical semigroup");
}

}  // namespace

NumericalSemigroup supersymmetric_from(const std::vector<Int>& t_list)
{
    validate_t_list(t_list);
    const Int total = product(t_list);
    std::vector<Int> gens;
    for (Int t : t_list) gens.push_back(total / t);
    NumericalSemigroup s = new_semigroup(gens);
    if (s.embedding_dimension() != t_list.size()) throw InvalidInput("generators are not minimal");
    return s;
}

std::optional<std::vector<Int>> is_supersymmetric(const NumericalSemigroup& s)
{
    if (!s.is_numerical() || s.embedding_dimension() < 2) return std::nullopt;
    Int l = 1;
    for (Int g : s.generators()) l = lcm(l, g);
    std::vector<Int> t_list;
    for (Int g : s.generators()) t_list.push_back(l / g);
    for (std::size_t i = 0; i < t_list.size(); ++i) {
        for (std::size_t j = i + 1; j < t_list.size(); ++j) {
            if (gcd(t_list[i], t_list[j]) != 1) return std::nullopt;
        }
    }
    return t_list;
}

SkeletonReport supersymmetric_skeleton_check(const std::vector<Int>& t_list, int k)
{
    if (k < 0) throw InvalidInput("k must be nonnegative");
    NumericalSemigroup s = supersymmetric_from(t_list);
    const int d = static_cast<int>(t_list.size());

    SkeletonReport r;
    r.element = checked_mul(product(t_list), k);
    r.computed = delta(s, r.element);
    r.expected = skeleton(d, std::min(k, d));
    r.euler = euler_characteristic(r.computed);
    r.expected_euler = ((k % 2 == 0) ? 1 : -1) * binomial(d - 1, k);
    for (int i = 0; i <= std::min(k, d); ++i) r.alternating_sum += ((i % 2 == 0) ? 1 : -1) * binomial(d, i);
    r.passed = r.computed == r.expected && r.euler == r.expected_euler && r.alternating_sum == r.expected_euler;
    return r;
}

VanishingReport supersymmetric_vanishing_check(const std::vector<Int>& t_list, Int bound)
{
    NumericalSemigroup s = supersymmetric_from(t_list);
    const Int l = product(t_list);
    if (bound < l) throw InvalidInput("bound " + to_string(bound) + " is below L = " + to_string(l));
    if (bound > kSweepLimit) throw InvalidInput("bound too large");

    VanishingReport r;
    for (Int m = 0; m <= bound; ++m) {
        if (m % l == 0 || !s.contains(m)) continue;
        ++r.checked;
        std::int64_t chi = euler_characteristic(delta(s, m));
        if (chi != 0) {
            r.first_violation = m;
            r.violation_euler = chi;
            return r;
        }
    }
    r.passed = true;
    return r;
}

std::array<Int, 3> disconnected_elements_3gen(const NumericalSemigroup& s)
{
    require_three(s);
    const auto& n = s.generators();
    std::array<Int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Int nj = n[(i + 1) % 3], nk = n[(i + 2) % 3];
        NumericalSemigroup pair = new_semigroup({nj, nk}, false);
        // past g*F(<nj/g, nk/g>) + nj + nk every multiple of g is in the pair
        // monoid, and some multiple of n_i * g lies within n_i * g beyond that
        const Int g = gcd(nj, nk);
        const Int reduced_frobenius = (nj / g) * (nk / g) - nj / g - nk / g;
        const Int limit = checked_add(g * reduced_frobenius + nj + nk, checked_mul(n[i], g));
        bool found = false;
        for (Int m = n[i];; m += n[i]) {
            if (pair.contains(m)) {
                out[i] = m;
                found = true;
                break;
            }
            if (m > limit) break;
        }
        if (!found) throw InvalidInput("no multiple of " + to_string(n[i]) + " found in the other generators' monoid");
    }
    return out;
}

std::map<Int, std::int64_t> nonzero_set_3gen(const NumericalSemigroup& s)
{
    require_three(s);
    std::vector<Int> support{0};
    for (Int m : disconnected_elements_3gen(s)) support.push_back(m);
    for (Int m : hollow_simplex_elements(s)) support.push_back(m);
    std::map<Int, std::int64_t> out;
    for (Int m : support) out[m] = euler_characteristic(delta(s, m));
    return out;
}

FrobeniusFamily frobenius_gen_family(Int n1, Int n2)
{
    if (n1 < 2 || n2 < 2) throw InvalidInput("n1 and n2 must be at least 2");
    if (gcd(n1, n2) != 1) throw InvalidInput("n1 and n2 must be coprime");
    const Int n3 = checked_sub(checked_mul(n1, n2), n1 + n2);
    if (n3 < 2) throw InvalidInput("n3 = " + to_string(n3) + " is below 2");
    std::vector<Int> gens{n1, n2, n3};
    if (minimal_generators(gens).size() != 3) throw InvalidInput("{n1, n2, n3} is not a minimal generating set");

    FrobeniusFamily out{new_semigroup(gens), {0, n2 + n3, n1 + n3, 2 * n3, n1 + 2 * n3, n2 + 2 * n3}};
    std::sort(out.closed_form.begin(), out.closed_form.end());
    out.closed_form.erase(std::unique(out.closed_form.begin(), out.closed_form.end()), out.closed_form.end());
    return out;
}

}  // namespace sdc
