#include "test_support.hpp"
#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"

using namespace sdc;

TEST_CASE("reference complexes")
{
    auto s = new_semigroup({3, 5, 7});
    CHECK(delta(s, 10) == SimplicialComplex::from_facets(3, {{1, 3}, {2}}));
    CHECK(delta(new_semigroup({18, 171, 190}), 532) == SimplicialComplex::from_facets(3, {{1, 3}, {2, 3}}));
    CHECK(delta(new_semigroup({5, 8, 12}), 20) == SimplicialComplex::from_facets(3, {{1}, {2, 3}}));
    CHECK(delta(new_semigroup({9, 10}), 28) == SimplicialComplex::simplex(2));
    CHECK(delta(new_semigroup({25, 26, 28}), 104) == SimplicialComplex::simplex(3));
    CHECK(delta(new_semigroup({8, 10, 12, 15}), 20) == SimplicialComplex::from_facets(4, {{1, 3}, {2}}));
    CHECK(delta(s, 4).is_void());
    CHECK(delta(s, -5).is_void());
    CHECK(delta(s, 0) == SimplicialComplex::from_faces(3, {Face{}}));
}

TEST_CASE("delta agrees with subset enumeration")
{
    for (const auto& g : oracle::numerical_semigroups(2, 4, 13)) {
        auto s = new_semigroup(oracle::to_int(g));
        const long long top = oracle::frobenius(g) + 2 * g.back();
        for (long long m = 0; m <= top; ++m) CHECK(delta(s, m) == oracle::delta(g, m));
    }
}

TEST_CASE("Euler scan matches the dense numerator oracle")
{
    CHECK(nonzero_euler_scan(new_semigroup({3, 5, 7})) ==
          std::map<Int, std::int64_t>{{0, 1}, {10, -1}, {12, -1}, {14, -1}, {17, 1}, {19, 1}});
    CHECK(nonzero_euler_scan(new_semigroup({2, 3})) == std::map<Int, std::int64_t>{{0, 1}, {6, -1}});
    CHECK(nonzero_euler_scan(new_semigroup({6, 10, 15})) ==
          std::map<Int, std::int64_t>{{0, 1}, {30, -2}, {60, 1}});
    for (const auto& g : oracle::random_semigroups(4, 25, 5, 40, 3)) {
        auto s = new_semigroup(oracle::to_int(g));
        const long long bound = static_cast<long long>(scan_bound(s));
        std::map<Int, std::int64_t> expect;
        for (auto [m, c] : oracle::numerator(g, bound + 50)) expect[m] = c;
        CHECK(nonzero_euler_scan(s, 1) == expect);
        CHECK(nonzero_euler_scan(s, 4) == expect);
    }
}

TEST_CASE("hollow simplex elements are n + PF")
{
    auto s = new_semigroup({3, 5, 7});
    CHECK(hollow_simplex_elements(s) == std::vector<Int>{17, 19});
    auto hollow = SimplicialComplex::from_faces(3, {Face::of({1, 2}), Face::of({1, 3}), Face::of({2, 3})});
    for (Int m : hollow_simplex_elements(s)) CHECK(delta(s, m) == hollow);
}

TEST_CASE("scan refuses oversized sweeps")
{
    CHECK_THROWS_AS(nonzero_euler_scan(new_semigroup({1000003, 1000033})), InvalidInput);
}
