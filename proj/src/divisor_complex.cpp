#include "sdc/divisor_complex.hpp"

#include <algorithm>
#include <thread>

#include "sdc/errors.hpp"

namespace sdc {

SimplicialComplex delta(const NumericalSemigroup& s, Int m)
{
    const auto& gens = s.generators();
    const int d = static_cast<int>(gens.size());
    if (d > kMaxVertices) throw InvalidInput("embedding dimension exceeds 63");
    if (!s.contains(m)) return SimplicialComplex::void_complex(d);

    // Depth-first over faces, extending only by larger vertices; `rest` is m - n_F.
    std::vector<Face> facets;
    struct Frame {
        Face face;
        Int rest;
    };
    std::vector<Frame> stack{{Face{}, m}};
    while (!stack.empty()) {
        Frame top = stack.back();
        stack.pop_back();
        bool maximal = true;
        for (int v = 1; v <= d; ++v) {
            if (top.face.contains(v)) continue;
            Int rest = top.rest - gens[static_cast<std::size_t>(v - 1)];
            if (!s.contains(rest)) continue;
            maximal = false;
            const int last = top.face.empty() ? 0 : 64 - std::countl_zero(top.face.bits());
            if (v > last) stack.push_back({top.face.with(v), rest});
        }
        if (maximal) facets.push_back(top.face);
    }
    return SimplicialComplex::from_faces(d, std::move(facets));
}

Int scan_bound(const NumericalSemigroup& s)
{
    Int n = 0;
    for (Int g : s.generators()) n = checked_add(n, g);
    return checked_add(frobenius(s), n);
}

std::map<Int, std::int64_t> nonzero_euler_scan(const NumericalSemigroup& s, unsigned threads)
{
    const Int bound = scan_bound(s);
    if (bound > kSweepLimit) throw InvalidInput("scan range " + to_string(bound) + " is too large");
    threads = std::max(1U, threads);

    std::vector<std::vector<std::pair<Int, std::int64_t>>> parts(threads);
    auto work = [&](unsigned part) {
        for (Int m = part; m <= bound; m += threads) {
            std::int64_t chi = euler_characteristic(delta(s, m));
            if (chi != 0) parts[part].emplace_back(m, chi);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    std::map<Int, std::int64_t> out;
    for (const auto& part : parts) out.insert(part.begin(), part.end());
    return out;
}

std::vector<Int> hollow_simplex_elements(const NumericalSemigroup& s)
{
    Int n = 0;
    for (Int g : s.generators()) n = checked_add(n, g);
    std::vector<Int> out;
    for (Int f : pseudo_frobenius(s)) out.push_back(n + f);
    return out;
}

}  // namespace sdc
