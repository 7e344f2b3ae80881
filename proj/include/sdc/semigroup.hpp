#ifndef SDC_SEMIGROUP_HPP
#define SDC_SEMIGROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sdc/integer.hpp"

namespace sdc {

/// Largest reduced smallest-generator for which an Apéry table is built.
inline constexpr Int kAperyTableLimit = Int{1} << 21;
/// Glued monoids answer membership through their decomposition and only
/// build a table when it is this cheap.
inline constexpr Int kGluedTableLimit = Int{1} << 12;
/// Upper bound on value ranges swept by the dynamic-programming helpers.
inline constexpr Int kSweepLimit = Int{1} << 27;

/// A finitely generated submonoid of the nonnegative integers, stored by
/// its minimal generators n_1 < ... < n_d.
///
/// When the generators share a content g > 1 the object represents the
/// scaled monoid g*S', with S' numerical; only membership and divisor
/// complexes are meaningful then.
///
/// Membership has two backends. Small monoids carry the Apéry table of the
/// reduced monoid with respect to its smallest generator. Monoids built by
/// gluing (alpha*A + beta*B with alpha in B, beta in A, gcd(alpha, beta) = 1)
/// also keep the two factors and can decide membership recursively, which is
/// the only workable route once generators reach 10^20.
///
/// Immutable after construction; copies share state and may be used from
/// any number of threads.
class NumericalSemigroup {
public:
    /// The monoid <1> (all nonnegative integers).
    NumericalSemigroup();

    const std::vector<Int>& generators() const;
    std::size_t embedding_dimension() const { return generators().size(); }
    Int generator(std::size_t index) const { return generators()[index]; }
    Int content() const;
    bool is_numerical() const { return content() == 1; }

    bool contains(Int m) const;
    bool is_minimal_generator(Int m) const;

    bool has_apery_table() const;
    /// Apéry table of the reduced monoid w.r.t. its smallest generator.
    const std::vector<Int>& apery_table() const;
    bool contains_via_apery(Int m) const;

    bool has_gluing() const;
    bool contains_via_gluing(Int m) const;

    /// Frobenius number when known (content 1); -1 for <1>.
    std::optional<Int> frobenius_number() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b)
    {
        return a.generators() == b.generators();
    }

    /// Builds the Apéry-table backend from an already minimal, sorted list.
    static NumericalSemigroup from_minimal(std::vector<Int> generators);
    /// Builds alpha*a + beta*b. The generator list must be the minimal,
    /// sorted union alpha*gens(a) + beta*gens(b); hypotheses are checked.
    static NumericalSemigroup glued(const NumericalSemigroup& a, Int alpha, const NumericalSemigroup& b, Int beta,
                                    std::vector<Int> generators);

    struct Impl;  // opaque; defined in semigroup.cpp

private:
    std::shared_ptr<const Impl> impl_;
};

/// Least element of the monoid in each residue class modulo `modulus`,
/// by Dijkstra over residues with one edge per generator. Unreachable
/// classes hold -1.
std::vector<Int> residue_shortest_paths(std::span<const Int> generators, Int modulus);

/// Unique minimal generating set of the monoid generated by `gens`, ascending.
std::vector<Int> minimal_generators(std::span<const Int> gens);

/// Minimalizes `gens`; with require_numerical a content above 1 is rejected.
NumericalSemigroup new_semigroup(std::span<const Int> gens, bool require_numerical = true);
NumericalSemigroup new_semigroup(std::initializer_list<Int> gens, bool require_numerical = true);

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);
Int frobenius(const NumericalSemigroup& s);
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
std::vector<Int> elements_up_to(const NumericalSemigroup& s, Int bound);

/// Number of nonnegative tuples a with sum a_i n_i = m.
Int count_factorizations(const NumericalSemigroup& s, Int m);
/// Same count for every value 0..bound in one sweep.
std::vector<Int> factorization_counts_up_to(const NumericalSemigroup& s, Int bound);

}  // namespace sdc

#endif
