#include <random>

#include "test_support.hpp"
#include "sdc/constructions.hpp"
#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"
#include "sdc/json_io.hpp"

using namespace sdc;

namespace {

/// Delta with the faces containing `vertex` removed, on d - 1 vertices,
/// together with the facets that contain it.
std::pair<SimplicialComplex, std::vector<Face>> split_vertex(const SimplicialComplex& c, int vertex)
{
    std::vector<Face> rest, star;
    for (Face f : c.faces()) {
        if (f.contains(vertex)) continue;
        // squeeze out the bit of `vertex`
        rest.emplace_back(f.at_most(vertex - 1).bits() | (f.above(vertex).bits() >> 1));
    }
    for (Face f : c.facets()) {
        if (f.contains(vertex)) star.push_back(f);
    }
    return {SimplicialComplex::from_faces(c.num_vertices() - 1, rest), star};
}

}  // namespace

TEST_CASE("glue: reference values")
{
    auto s23 = new_semigroup({2, 3});
    CHECK(glue(s23, s23, 5, 4, true).generators() == std::vector<Int>{8, 10, 12, 15});
    auto s25 = new_semigroup({2, 5});
    auto s61015 = new_semigroup({6, 10, 15});
    CHECK(glue(s25, s61015, 2, 6, false).generators() == std::vector<Int>{12, 20, 30});
    CHECK_THROWS_AS(glue(s25, s61015, 2, 6, true), GluingHypothesisError);
    CHECK_THROWS_AS(glue(s23, s23, 3, 4, true), GluingHypothesisError);  // 3 is a generator
    CHECK_THROWS_AS(glue(s23, s23, 1, 4, true), GluingHypothesisError);  // 1 is not in S
}

TEST_CASE("glued membership decomposes as k'a + kb")
{
    auto s = new_semigroup({3, 5});
    auto s2 = new_semigroup({2, 7});
    const Int k = 8, k2 = 9;
    auto t = glue(s, s2, k, k2, true);
    for (Int x = 0; x <= 400; ++x) {
        bool decomposes = false;
        for (Int a = 0; k2 * a <= x && !decomposes; ++a) {
            Int rest = x - k2 * a;
            decomposes = rest % k == 0 && s.contains(a) && s2.contains(rest / k);
        }
        CHECK(t.contains(x) == decomposes);
    }
}

TEST_CASE("disjoint union: reference values")
{
    auto one = new_semigroup({1});
    auto c = disjoint_union_realize(one, 3, one, 2);
    CHECK(c.generators == std::vector<Int>{2, 3});
    CHECK(c.element == 6);
    CHECK(c.complex == SimplicialComplex::from_facets(2, {{1}, {2}}));
    CHECK(c.verified);

    auto d = disjoint_union_realize(new_semigroup({2, 3}), 5, one, 4);
    CHECK(d.generators == std::vector<Int>{5, 8, 12});
    CHECK(d.element == 20);
    CHECK(d.complex == SimplicialComplex::from_facets(3, {{1, 2}, {3}}));
    CHECK(equals_relabeled(d.complex, delta(d.monoid, 20), d.vertex_map));

    CHECK_THROWS_AS(disjoint_union_realize(new_semigroup({2, 5}), 2, new_semigroup({6, 10, 15}), 6), InvalidInput);
    CHECK_THROWS_AS(disjoint_union_realize(one, 1, one, 7), InvalidInput);  // 1 is a generator of <1>
}

TEST_CASE("disjoint union property on random pairs")
{
    std::mt19937 rng(17);
    auto pool = oracle::random_semigroups(2, 20, 2, 13, 21);
    auto pool3 = oracle::random_semigroups(3, 20, 3, 11, 22);
    pool.insert(pool.end(), pool3.begin(), pool3.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> elem(1, 40);
    int done = 0;
    while (done < 30) {
        auto g = pool[pick(rng)], g2 = pool[pick(rng)];
        auto s = new_semigroup(oracle::to_int(g)), s2 = new_semigroup(oracle::to_int(g2));
        Int k = elem(rng), k2 = elem(rng);
        if (!s.contains(k) || !s2.contains(k2) || s.is_minimal_generator(k) || s2.is_minimal_generator(k2) ||
            gcd(k, k2) != 1) {
            continue;
        }
        auto cert = disjoint_union_realize(s, k, s2, k2);
        CHECK(cert.complex == shifted_union(oracle::delta(g, static_cast<long long>(k)),
                                            oracle::delta(g2, static_cast<long long>(k2))));
        CHECK(cert.element == k * k2);
        ++done;
    }
}

TEST_CASE("inflate: reference values and preconditions")
{
    auto r = inflate(new_semigroup({9, 10}), 28, Face::of({2}), 19);
    CHECK(r.monoid.generators() == std::vector<Int>{18, 171, 190});
    CHECK(r.element == 532);
    CHECK(r.offset == 18);
    CHECK(r.new_vertex == 1);
    CHECK(r.old_to_new == std::vector<int>{2, 3});
    CHECK(delta(r.monoid, 532) == SimplicialComplex::from_facets(3, {{2, 3}, {1, 3}}));

    auto s23 = new_semigroup({2, 3});
    CHECK_THROWS_WITH_AS(inflate(s23, 5, Face::of({2}), 7), doctest::Contains("minimal generator"), PreconditionError);
    CHECK_THROWS_WITH_AS(inflate(s23, 5, Face::of({1, 2}), 7), doctest::Contains("b = m - n_F is 0"),
                         PreconditionError);
    CHECK_THROWS_AS(inflate(new_semigroup({9, 10}), 28, Face::of({2}), 18), PreconditionError);  // not prime
    CHECK_THROWS_AS(inflate(new_semigroup({9, 10}), 28, Face::of({2}), 17), PreconditionError);  // p <= b
    CHECK_THROWS_AS(inflate(new_semigroup({9, 10}), 28, Face::of({3}), 19), PreconditionError);
    CHECK_THROWS_AS(inflate(new_semigroup({9, 10}), 29, Face::of({2}), 19), PreconditionError);
}

TEST_CASE("inflation property: one new facet, old complex restored on deletion")
{
    int checked = 0;
    for (const auto& g : oracle::numerical_semigroups(2, 3, 9)) {
        auto s = new_semigroup(oracle::to_int(g));
        for (Int m = 1; m <= 60; ++m) {
            auto old = delta(s, m);
            for (Face f : old.faces()) {
                Int b = m - face_sum(s, f);
                if (b <= 0 || s.is_minimal_generator(b) || delta(s, face_sum(s, f)) != SimplicialComplex::from_faces(
                                                                 static_cast<int>(g.size()), {f})) {
                    continue;
                }
                Int p = b + 1;
                while (!is_prime(p)) ++p;
                auto r = inflate(s, m, f, p);
                auto now = delta(r.monoid, r.element);
                auto [rest, star] = split_vertex(now, r.new_vertex);
                REQUIRE(star.size() == 1);
                // the remaining vertices, in new-index order, carry the old labels
                std::vector<int> map(g.size());
                for (std::size_t i = 0; i < g.size(); ++i) {
                    map[i] = r.old_to_new[i] > r.new_vertex ? r.old_to_new[i] - 1 : r.old_to_new[i];
                }
                CHECK(equals_relabeled(old, rest, map));
                CHECK(star[0].size() == f.size() + 1);
                ++checked;
            }
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("base simplices")
{
    auto one = realize_simplex(1);
    CHECK(one.monoid.generators() == std::vector<Int>{1});
    CHECK(one.element == 2);
    auto two = realize_simplex(2);
    CHECK(two.monoid.generators() == std::vector<Int>{9, 10});
    CHECK(two.element == 28);
    auto three = realize_simplex(3);
    CHECK(three.monoid.generators() == std::vector<Int>{25, 26, 28});
    CHECK(three.element == 104);
    for (int v = 1; v <= 7; ++v) {
        auto r = realize_simplex(v);
        CHECK(delta(r.monoid, r.element) == SimplicialComplex::simplex(v));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
            CHECK(count_factorizations(r.monoid, face_sum(r.monoid, Face(mask))) == 1);
        }
    }
    CHECK_THROWS_AS(realize_simplex(11), InvalidInput);
    CHECK_THROWS_AS(realize_simplex(0), InvalidInput);
}

TEST_CASE("realize fat forests: reference values")
{
    auto path = realize_fat_forest(parse_complex("1,2;2,3"));
    CHECK(path.verified);
    CHECK(path.generators == std::vector<Int>{18, 171, 190});
    CHECK(path.element == 532);
    CHECK(equals_relabeled(path.complex, delta(new_semigroup({18, 171, 190}), 532), path.vertex_map));

    auto tri = realize_fat_forest(parse_complex("1,2,3"));
    CHECK(tri.generators == std::vector<Int>{25, 26, 28});
    CHECK(tri.element == 104);

    CHECK_THROWS_AS(realize_fat_forest(parse_complex("1,2;2,3;1,3")), NotFatForest);
    CHECK_THROWS_AS(realize_fat_forest(SimplicialComplex::from_facets(3, {{1, 2}})), InvalidInput);
}

TEST_CASE("forest certificates survive a JSON round trip and replay")
{
    for (const char* text : {"1,2;2,3", "1,2|3", "1,2,3;3,4|5,6", "1|2|3", "1,2,3|4,5,6", "1;2,3,4", "1,2,3;1,2,4;1,3,5;2,3,6", "1,2,3,4;2,3,4,5;4,5,6,7;7,8"}) {
        CAPTURE(text);
        auto cert = realize_fat_forest(parse_complex(text));
        REQUIRE(cert.verified);
        auto back = certificate_from_json(Json::parse(certificate_to_json(cert).dump()));
        CHECK(back.generators == cert.generators);
        CHECK(back.element == cert.element);
        CHECK(back.vertex_map == cert.vertex_map);
        auto check = verify_certificate(back);
        CHECK_MESSAGE(check.ok, check.reason);

        auto tampered = back;
        tampered.element += 1;
        CHECK_FALSE(verify_certificate(tampered).ok);
        tampered = back;
        std::swap(tampered.vertex_map.front(), tampered.vertex_map.back());
        if (tampered.vertex_map != back.vertex_map) CHECK_FALSE(verify_certificate(tampered).ok);
    }
}

TEST_CASE("retry budget is honoured")
{
    RealizeOptions none;
    none.retry_budget = 0;
    // two single vertices need coprime elements; attempt 0 alone gives 2 and 2
    CHECK_THROWS_AS(realize_fat_forest(parse_complex("1|2"), none), RetryExhausted);
    CHECK(realize_fat_forest(parse_complex("1|2")).verified);
}
