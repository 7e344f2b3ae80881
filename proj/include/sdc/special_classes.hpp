#ifndef SDC_SPECIAL_CLASSES_HPP
#define SDC_SPECIAL_CLASSES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/semigroup.hpp"

namespace sdc {

// Supersymmetric semigroups <L/t_1, ..., L/t_d>, L = t_1 * ... * t_d.

NumericalSemigroup supersymmetric_from(const std::vector<Int>& t_list);
/// t_i = lcm(gens)/n_i in generator order, when they are pairwise coprime.
std::optional<std::vector<Int>> is_supersymmetric(const NumericalSemigroup& s);

struct SkeletonReport {
    bool passed = false;
    Int element = 0;                // kL
    SimplicialComplex computed;     // Delta_{kL}
    SimplicialComplex expected;     // skeleton(d, min(k, d))
    std::int64_t euler = 0;
    std::int64_t expected_euler = 0;  // (-1)^k C(d-1, k)
    std::int64_t alternating_sum = 0; // sum_{i<=k} (-1)^i C(d, i)
};

SkeletonReport supersymmetric_skeleton_check(const std::vector<Int>& t_list, int k);

struct VanishingReport {
    bool passed = false;
    std::size_t checked = 0;
    std::optional<Int> first_violation;
    std::int64_t violation_euler = 0;
};

/// chi(Delta_m) = 0 for every m in S, m <= bound, L not dividing m.
VanishingReport supersymmetric_vanishing_check(const std::vector<Int>& t_list, Int bound);

// Embedding dimension three.

/// m_i = least positive multiple of n_i lying in <n_j, n_k>.
std::array<Int, 3> disconnected_elements_3gen(const NumericalSemigroup& s);

/// {0, m_1, m_2, m_3} together with n_1+n_2+n_3 + PF(S), each with chi(Delta_m).
std::map<Int, std::int64_t> nonzero_set_3gen(const NumericalSemigroup& s);

struct FrobeniusFamily {
    NumericalSemigroup semigroup;
    std::vector<Int> closed_form;  // ascending
};

/// <n1, n2, n1*n2 - n1 - n2> and its nonzero-chi set from the closed form
/// {0, n2+n3, n1+n3, 2n3, n1+2n3, n2+2n3}.
FrobeniusFamily frobenius_gen_family(Int n1, Int n2);

}  // namespace sdc

#endif
