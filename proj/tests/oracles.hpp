// Brute-force reference implementations used only by the tests. Everything
// here is deliberately naive: sieves over explicit ranges and subset loops.
#ifndef SDC_TESTS_ORACLES_HPP
#define SDC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/integer.hpp"

namespace oracle {

using Gens = std::vector<long long>;

inline std::vector<sdc::Int> to_int(const Gens& g) { return {g.begin(), g.end()}; }

/// Membership bitmap for 0..bound.
inline std::vector<bool> sieve(const Gens& gens, long long bound)
{
    std::vector<bool> in(static_cast<std::size_t>(bound + 1), false);
    in[0] = true;
    for (long long x = 1; x <= bound; ++x) {
        for (long long g : gens) {
            if (g <= x && in[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
    return in;
}

inline long long gcd_all(const Gens& gens)
{
    long long g = 0;
    for (long long x : gens) g = std::gcd(g, x);
    return g;
}

/// Frobenius number by sieving until min(gens) consecutive members appear.
inline long long frobenius(const Gens& gens)
{
    long long n = *std::min_element(gens.begin(), gens.end());
    long long bound = 64;
    for (;;) {
        auto in = sieve(gens, bound);
        long long run = 0, last_gap = -1;
        for (long long x = 0; x <= bound; ++x) {
            if (in[static_cast<std::size_t>(x)]) {
                if (++run == n) return last_gap;
            } else {
                run = 0;
                last_gap = x;
            }
        }
        bound *= 2;
    }
}

/// Gaps x with x + g in S for every generator g (equivalently for every
/// nonzero s in S, since S is closed under adding generators).
inline std::vector<long long> pseudo_frobenius(const Gens& gens)
{
    long long f = frobenius(gens);
    long long top = f + *std::max_element(gens.begin(), gens.end());
    auto in = sieve(gens, std::max(top, 0LL));
    std::vector<long long> pf;
    for (long long x = 1; x <= f; ++x) {
        if (in[static_cast<std::size_t>(x)]) continue;
        bool all = true;
        for (long long g : gens) all = all && in[static_cast<std::size_t>(x + g)];
        if (all) pf.push_back(x);
    }
    return pf;
}

/// Minimal generators: drop every generator that is a sum of the others.
inline Gens minimal(Gens gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Gens out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Gens others;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j != i && gens[j] < gens[i]) others.push_back(gens[j]);
        }
        if (others.empty() || !sieve(others, gens[i])[static_cast<std::size_t>(gens[i])]) out.push_back(gens[i]);
    }
    return out;
}

/// Delta_m by looping over all subsets of the generators.
inline sdc::SimplicialComplex delta(const Gens& gens, long long m)
{
    const int d = static_cast<int>(gens.size());
    std::vector<bool> in = m >= 0 ? sieve(gens, m) : std::vector<bool>{};
    std::vector<sdc::Face> faces;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        long long sum = 0;
        for (int i = 0; i < d; ++i) {
            if ((mask >> i) & 1U) sum += gens[static_cast<std::size_t>(i)];
        }
        if (sum <= m && in[static_cast<std::size_t>(m - sum)]) faces.emplace_back(mask);
    }
    return sdc::SimplicialComplex::from_faces(d, faces);
}

/// Sum over all faces of (-1)^|F|, by explicit face enumeration.
inline std::int64_t euler(const sdc::SimplicialComplex& c)
{
    std::int64_t chi = 0;
    const int d = c.num_vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        if (c.contains(sdc::Face(mask))) chi += (std::popcount(mask) % 2 == 0) ? 1 : -1;
    }
    return chi;
}

/// Coefficient table of prod (1 - t^g) times the indicator series of S,
/// truncated at `top`, by dense arithmetic.
inline std::map<long long, long long> numerator(const Gens& gens, long long top)
{
    auto in = sieve(gens, top);
    std::vector<long long> coeff(static_cast<std::size_t>(top + 1));
    for (long long x = 0; x <= top; ++x) coeff[static_cast<std::size_t>(x)] = in[static_cast<std::size_t>(x)] ? 1 : 0;
    for (long long g : gens) {
        for (long long x = top; x >= g; --x) coeff[static_cast<std::size_t>(x)] -= coeff[static_cast<std::size_t>(x - g)];
    }
    std::map<long long, long long> out;
    for (long long x = 0; x <= top; ++x) {
        if (coeff[static_cast<std::size_t>(x)] != 0) out[x] = coeff[static_cast<std::size_t>(x)];
    }
    return out;
}

/// Number of factorizations of m, by enumerating exponent vectors.
inline long long factorizations(const Gens& gens, long long m, std::size_t from = 0)
{
    if (m == 0) return 1;
    if (from == gens.size()) return 0;
    long long total = 0;
    for (long long used = 0; used <= m; used += gens[from]) total += factorizations(gens, m - used, from + 1);
    return total;
}

/// Fat-tree test by trying every facet order.
inline bool is_fat_tree(const std::vector<sdc::Face>& facets)
{
    if (facets.empty()) return false;
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        sdc::Face seen = facets[order[0]];
        for (std::size_t j = 1; j < order.size() && ok; ++j) {
            sdc::Face meet = facets[order[j]] & seen;
            bool simplex_in_earlier = false;
            for (std::size_t i = 0; i < j; ++i) {
                if (meet.subset_of(facets[order[i]])) simplex_in_earlier = true;
            }
            ok = !meet.empty() && simplex_in_earlier;
            seen = seen | facets[order[j]];
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

/// Every minimal generating set with gcd 1, embedding dimension between lo
/// and hi, and all generators in [2, max_gen].
inline std::vector<Gens> numerical_semigroups(int lo, int hi, long long max_gen)
{
    std::vector<Gens> out;
    Gens current;
    auto rec = [&](auto&& self, long long next) -> void {
        if (static_cast<int>(current.size()) >= lo && gcd_all(current) == 1 && minimal(current) == current) {
            out.push_back(current);
        }
        if (static_cast<int>(current.size()) == hi) return;
        for (long long g = next; g <= max_gen; ++g) {
            current.push_back(g);
            // a generator that is a sum of smaller ones can never be minimal
            if (current.size() == 1 || !sieve(Gens(current.begin(), current.end() - 1), g)[static_cast<std::size_t>(g)]) {
                self(self, g + 1);
            }
            current.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

/// Random minimal generating sets of embedding dimension d with gcd 1,
/// distinct, drawn from [lo, hi]. Throws if the range cannot supply `count`.
inline std::vector<Gens> random_semigroups(int d, int count, long long lo, long long hi, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> pick(lo, hi);
    std::set<Gens> seen;
    std::vector<Gens> out;
    for (long tries = 0; static_cast<int>(out.size()) < count; ++tries) {
        if (tries > 1000000) throw std::runtime_error("random_semigroups: range too small");
        Gens g;
        for (int i = 0; i < d; ++i) g.push_back(pick(rng));
        std::sort(g.begin(), g.end());
        if (gcd_all(g) != 1 || minimal(g) != g || !seen.insert(g).second) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace oracle

#endif
