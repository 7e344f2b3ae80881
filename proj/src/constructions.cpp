#include "sdc/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"

namespace sdc {

namespace {

int index_of(const NumericalSemigroup& s, Int value)
{
    const auto& gens = s.generators();
    auto it = std::lower_bound(gens.begin(), gens.end(), value);
    if (it == gens.end() || *it != value) {
        throw ConstructionVerificationError(to_string(value) + " is not a minimal generator of the constructed monoid");
    }
    return static_cast<int>(it - gens.begin()) + 1;
}

// A partially built realization: the monoid, its target element, and the
// generator carried by each input vertex.
struct BuildState {
    NumericalSemigroup monoid;
    Int element = 0;
    std::map<int, Int> generator_of_vertex;

    Face face_of(const std::vector<int>& vertices) const
    {
        Face f;
        for (int v : vertices) f = f.with(index_of(monoid, generator_of_vertex.at(v)));
        return f;
    }
};

BuildState state_from_simplex(const std::vector<int>& vertices, const NumericalSemigroup& monoid, Int element)
{
    if (vertices.size() != monoid.embedding_dimension()) {
        throw ConstructionVerificationError("base simplex size does not match its monoid");
    }
    BuildState state{monoid, element, {}};
    for (std::size_t i = 0; i < vertices.size(); ++i) state.generator_of_vertex[vertices[i]] = monoid.generator(i);
    return state;
}

BuildState inflate_state(const BuildState& state, int vertex, const std::vector<int>& attach, Int prime)
{
    InflationResult res = inflate(state.monoid, state.element, state.face_of(attach), prime);
    BuildState next{res.monoid, res.element, {}};
    for (const auto& [v, g] : state.generator_of_vertex) next.generator_of_vertex[v] = checked_mul(g, prime);
    next.generator_of_vertex[vertex] = res.offset;
    return next;
}

BuildState union_states(const BuildState& left, const BuildState& right)
{
    RealizationCertificate cert = disjoint_union_realize(left.monoid, left.element, right.monoid, right.element);
    BuildState next{cert.monoid, cert.element, {}};
    for (const auto& [v, g] : left.generator_of_vertex) {
        next.generator_of_vertex[v] = checked_mul(g, right.element);
    }
    for (const auto& [v, g] : right.generator_of_vertex) {
        if (next.generator_of_vertex.count(v)) throw InvalidInput("trees share vertex " + std::to_string(v));
        next.generator_of_vertex[v] = checked_mul(g, left.element);
    }
    return next;
}

std::vector<int> map_for(const BuildState& state, int num_vertices)
{
    std::vector<int> map(static_cast<std::size_t>(num_vertices), 0);
    for (const auto& [v, g] : state.generator_of_vertex) {
        if (v < 1 || v > num_vertices) throw ConstructionVerificationError("vertex outside the input complex");
        map[static_cast<std::size_t>(v - 1)] = index_of(state.monoid, g);
    }
    return map;
}

Int next_unused_prime(Int above, const std::set<Int>& used)
{
    for (Int p = checked_add(above, 1);; p = checked_add(p, 1)) {
        if (!used.count(p) && is_prime(p)) return p;
    }
}

struct TreeBuild {
    BuildState state;
    std::vector<TraceStep> steps;
};

TreeBuild build_tree(const SimplicialComplex& tree, int tree_index, int attempt, std::set<Int>& used_primes,
                     const RealizeOptions& options)
{
    const std::vector<Face> order = fat_tree_order(tree);
    const std::vector<int> base = order.front().vertices();
    const int v = static_cast<int>(base.size());

    // retries walk the slack choices first, then move N. N alone cannot fix
    // parity (for v = 3 the default element 4N + 8 is always even), and a
    // slack equal to a generator n_j breaks later attachments along faces
    // through j (n_F - b lands back in S), so two-generator slacks are tried too.
    const int slack_index = v > 1 ? attempt % simplex_slack_choices(v) : 0;
    const Int shift = v > 1 ? attempt / simplex_slack_choices(v) : attempt;
    SimplexRealization simplex =
        realize_simplex_from(v, default_simplex_offset(v) + shift, options.simplex_cap, slack_index);
    TreeBuild out{state_from_simplex(base, simplex.monoid, simplex.element), {}};
    {
        TraceStep step;
        step.kind = TraceStep::Kind::Simplex;
        step.tree = tree_index;
        step.vertices = base;
        step.generators = simplex.monoid.generators();
        step.offset = simplex.offset;
        step.element = simplex.element;
        out.steps.push_back(std::move(step));
    }

    Face covered = order.front();
    for (std::size_t j = 1; j < order.size(); ++j) {
        Face attach = order[j] & covered;
        // one new vertex at a time; each step's new facet is the grown attachment face
        for (int vertex : (order[j] - covered).vertices()) {
            const std::vector<int> attach_vertices = attach.vertices();
            Int b = out.state.element - face_sum(out.state.monoid, out.state.face_of(attach_vertices));
            Int prime = next_unused_prime(b, used_primes);
            out.state = inflate_state(out.state, vertex, attach_vertices, prime);
            used_primes.insert(prime);

            TraceStep step;
            step.kind = TraceStep::Kind::Inflate;
            step.tree = tree_index;
            step.vertices = {vertex};
            step.attach = attach_vertices;
            step.offset = b;
            step.prime = prime;
            step.element = out.state.element;
            out.steps.push_back(std::move(step));

            attach = attach.with(vertex);
        }
        covered = covered | order[j];
    }
    return out;
}

TraceStep union_step(int tree_index, const BuildState& left, const BuildState& right, Int element)
{
    TraceStep step;
    step.kind = TraceStep::Kind::Union;
    step.tree = tree_index;
    step.generators = left.monoid.generators();
    step.right = right.monoid.generators();
    step.left_element = left.element;
    step.right_element = right.element;
    step.element = element;
    return step;
}

}  // namespace

NumericalSemigroup glue(const NumericalSemigroup& s, const NumericalSemigroup& s2, Int k, Int k2, bool strict)
{
    if (strict) {
        if (!s.is_numerical() || !s2.is_numerical()) {
            throw GluingHypothesisError("strict gluing needs numerical semigroups");
        }
        if (k <= 0 || !s.contains(k) || s.is_minimal_generator(k)) {
            throw GluingHypothesisError("k = " + to_string(k) + " must be a positive non-generator element of S");
        }
        if (k2 <= 0 || !s2.contains(k2) || s2.is_minimal_generator(k2)) {
            throw GluingHypothesisError("k' = " + to_string(k2) + " must be a positive non-generator element of S'");
        }
        if (gcd(k, k2) != 1) {
            throw GluingHypothesisError("gcd(k, k') = " + to_string(gcd(k, k2)) + ", must be 1");
        }
    }
    std::vector<Int> gens;
    for (Int n : s.generators()) gens.push_back(checked_mul(k2, n));
    for (Int n : s2.generators()) gens.push_back(checked_mul(k, n));
    if (!strict) return new_semigroup(gens, false);

    std::sort(gens.begin(), gens.end());
    if (std::adjacent_find(gens.begin(), gens.end()) != gens.end()) {
        throw GluingHypothesisError("scaled generator lists overlap");
    }
    NumericalSemigroup t = NumericalSemigroup::glued(s, k2, s2, k, gens);
    // g is redundant iff g - h lies in T for some smaller generator h
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (t.contains(gens[i] - gens[j])) {
                throw GluingHypothesisError("embedding dimension is not d + d': " + to_string(gens[i]) +
                                            " is redundant");
            }
        }
    }
    return t;
}

RealizationCertificate disjoint_union_realize(const NumericalSemigroup& s, Int k, const NumericalSemigroup& s2,
                                              Int k2)
{
    if (!s.contains(k) || !s2.contains(k2)) throw InvalidInput("k and k' must be elements of their semigroups");
    if (gcd(k, k2) != 1) throw InvalidInput("k and k' must be coprime, gcd = " + to_string(gcd(k, k2)));
    if (k <= 0 || k2 <= 0 || s.is_minimal_generator(k) || s2.is_minimal_generator(k2)) {
        throw InvalidInput("k and k' must be positive non-generators");
    }
    NumericalSemigroup t = glue(s, s2, k, k2, true);
    const Int element = checked_mul(k, k2);

    const SimplicialComplex expected = shifted_union(delta(s, k), delta(s2, k2));
    std::vector<int> map;
    for (Int n : s.generators()) map.push_back(index_of(t, k2 * n));
    for (Int n : s2.generators()) map.push_back(index_of(t, k * n));

    const SimplicialComplex actual = delta(t, element);
    if (!equals_relabeled(expected, actual, map)) {
        throw ConstructionVerificationError("Delta_" + to_string(element) + " is " + format_complex(actual) +
                                            ", expected the relabeled union " + format_complex(expected));
    }

    RealizationCertificate cert;
    cert.complex = expected;
    cert.generators = t.generators();
    cert.element = element;
    cert.vertex_map = std::move(map);
    cert.verified = true;
    cert.monoid = t;
    TraceStep step;
    step.kind = TraceStep::Kind::Union;
    step.generators = s.generators();
    step.right = s2.generators();
    step.left_element = k;
    step.right_element = k2;
    step.element = element;
    cert.trace.push_back(std::move(step));
    return cert;
}

InflationResult inflate(const NumericalSemigroup& s, Int m, Face f, Int p)
{
    const int d = static_cast<int>(s.embedding_dimension());
    if (!s.is_numerical()) throw PreconditionError("inflation needs a numerical semigroup");
    if (!f.subset_of(Face::full(d))) throw PreconditionError("F is not a subset of [d]");
    if (d + 1 > kMaxVertices) throw PreconditionError("inflation would exceed 63 generators");
    if (!s.contains(m)) throw PreconditionError("m = " + to_string(m) + " is not in S");

    const Int n_f = face_sum(s, f);
    const Int b = m - n_f;
    if (b == 0) throw PreconditionError("b = m - n_F is 0");
    if (!s.contains(b)) throw PreconditionError("b = " + to_string(b) + " is not in S (F is not a face of Delta_m)");
    if (s.is_minimal_generator(b)) throw PreconditionError("b = " + to_string(b) + " is a minimal generator of S");
    if (!is_prime(p)) throw PreconditionError("p = " + to_string(p) + " is not prime");
    if (p <= b) throw PreconditionError("p = " + to_string(p) + " must exceed b = " + to_string(b));
    if (delta(s, n_f) != SimplicialComplex::from_faces(d, {f})) {
        throw PreconditionError("Delta_{n_F} is not the full simplex on F");
    }

    InflationResult res;
    res.monoid = glue(s, NumericalSemigroup{}, b, p, true);
    res.element = checked_mul(p, m);
    res.offset = b;
    res.prime = p;
    for (Int n : s.generators()) res.old_to_new.push_back(index_of(res.monoid, p * n));
    res.new_vertex = index_of(res.monoid, b);

    std::vector<Face> facets;
    SimplicialComplex before = delta(s, m);
    for (Face g : before.facets()) facets.push_back(g);
    facets.push_back(f.with(d + 1));
    const SimplicialComplex expected = SimplicialComplex::from_faces(d + 1, std::move(facets));
    std::vector<int> map = res.old_to_new;
    map.push_back(res.new_vertex);

    const SimplicialComplex actual = delta(res.monoid, res.element);
    if (!equals_relabeled(expected, actual, map)) {
        throw ConstructionVerificationError("inflation of Delta_" + to_string(m) + " along " + format_complex(
                                                SimplicialComplex::from_faces(d, {f})) +
                                            " gave " + format_complex(actual));
    }
    return res;
}

int simplex_slack_choices(int v) { return v <= 1 ? 1 : v + v * (v - 1) / 2; }

namespace {

/// The slack_index-th nonempty subset of [v] of size <= 2, by (size, mask).
Face slack_face(int v, int slack_index)
{
    if (slack_index < v) return Face::of({slack_index + 1});
    int rest = slack_index - v;
    for (int i = 1; i <= v; ++i) {
        for (int j = i + 1; j <= v; ++j) {
            if (rest-- == 0) return Face::of({i, j});
        }
    }
    throw InvalidInput("slack index out of range");
}

}  // namespace

Int default_simplex_offset(int v) { return v <= 1 ? Int{0} : Int{v} << v; }

SimplexRealization realize_simplex_from(int v, Int offset, int cap, int slack_index)
{
    if (v < 1) throw InvalidInput("simplex needs at least one vertex");
    if (v > cap) throw InvalidInput("simplex size " + std::to_string(v) + " exceeds the cap " + std::to_string(cap));
    if (slack_index < 0 || (v > 1 && slack_index >= simplex_slack_choices(v))) {
        throw InvalidInput("slack index out of range");
    }
    if (v == 1) {
        // <1> with slack: every m >= 1 gives {emptyset, {1}}
        return {NumericalSemigroup{}, checked_add(offset, 2), offset};
    }
    constexpr int kAttempts = 256;
    for (int attempt = 0; attempt < kAttempts; ++attempt, offset = checked_add(offset, 1)) {
        std::vector<Int> gens;
        for (int i = 0; i < v; ++i) gens.push_back(checked_add(offset, Int{1} << i));
        NumericalSemigroup s = new_semigroup(gens, false);
        if (s.embedding_dimension() != static_cast<std::size_t>(v) || !s.is_numerical()) continue;
        const Int total = face_sum(s, Face::full(v));
        // the slack is a sum of one or two generators, so m - n_F is in S for every F
        const Int element = checked_add(total, face_sum(s, slack_face(v, slack_index)));
        if (delta(s, element) != SimplicialComplex::simplex(v)) continue;
        const std::vector<Int> counts = factorization_counts_up_to(s, total);
        bool unique = true;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v) && unique; ++mask) {
            unique = counts[static_cast<std::size_t>(face_sum(s, Face(mask)))] == 1;
        }
        if (unique) return {s, element, offset};
    }
    throw RetryExhausted("no base simplex found for v = " + std::to_string(v));
}

SimplexRealization realize_simplex(int v, int cap) { return realize_simplex_from(v, default_simplex_offset(v), cap); }

RealizationCertificate realize_fat_forest(const SimplicialComplex& forest, const RealizeOptions& options)
{
    const int d = forest.num_vertices();
    if (d == 0 || forest.vertex_set() != Face::full(d)) {
        throw InvalidInput("every vertex 1.." + std::to_string(d) + " must appear in some facet");
    }
    const std::vector<SimplicialComplex> trees = connected_components(forest);
    for (const auto& tree : trees) {
        try {
            (void)fat_tree_order(tree);
        } catch (const NotFatTree& e) {
            throw NotFatForest("component " + format_complex(tree) + " is not a fat tree: " + e.what());
        }
    }

    std::set<Int> used_primes;
    std::optional<BuildState> acc;
    std::string last_failure = "no coprime element pair";
    std::vector<TraceStep> trace;
    for (std::size_t t = 0; t < trees.size(); ++t) {
        bool committed = false;
        for (int attempt = 0; attempt <= options.retry_budget && !committed; ++attempt) {
            std::set<Int> primes = used_primes;
            TreeBuild built;
            try {
                built = build_tree(trees[t], static_cast<int>(t), attempt, primes, options);
            } catch (const PreconditionError& e) {
                // an inflation hypothesis failed for these base parameters
                last_failure = e.what();
                continue;
            }
            if (acc) {
                const bool usable = gcd(acc->element, built.state.element) == 1 &&
                                    !acc->monoid.is_minimal_generator(acc->element) &&
                                    !built.state.monoid.is_minimal_generator(built.state.element);
                if (!usable) {
                    last_failure = "no coprime element pair";
                    continue;
                }
            }
            used_primes = std::move(primes);
            trace.insert(trace.end(), built.steps.begin(), built.steps.end());
            if (acc) {
                BuildState merged = union_states(*acc, built.state);
                trace.push_back(union_step(static_cast<int>(t), *acc, built.state, merged.element));
                acc = std::move(merged);
            } else {
                TraceStep first = union_step(static_cast<int>(t), built.state, built.state, built.state.element);
                first.right.clear();
                first.right_element = 0;
                trace.push_back(std::move(first));
                acc = std::move(built.state);
            }
            committed = true;
        }
        if (!committed) {
            throw RetryExhausted("could not realize component " + std::to_string(t) +
                                 " within the retry budget; last failure: " + last_failure);
        }
    }

    RealizationCertificate cert;
    cert.complex = forest;
    cert.monoid = acc->monoid;
    cert.generators = acc->monoid.generators();
    cert.element = acc->element;
    cert.vertex_map = map_for(*acc, d);
    cert.trace = std::move(trace);

    const SimplicialComplex actual = delta(cert.monoid, cert.element);
    if (!equals_relabeled(forest, actual, cert.vertex_map)) {
        throw ConstructionVerificationError("final Delta_" + to_string(cert.element) + " is " + format_complex(actual));
    }
    cert.verified = true;
    return cert;
}

RealizationCertificate realize_fat_forest(const std::vector<SimplicialComplex>& trees, const RealizeOptions& options)
{
    if (trees.empty()) throw InvalidInput("forest has no trees");
    int d = 0;
    for (const auto& tree : trees) d = std::max(d, tree.num_vertices());
    std::vector<Face> facets;
    Face seen;
    for (const auto& tree : trees) {
        if (!(tree.vertex_set() & seen).empty()) throw InvalidInput("trees of a forest must be vertex-disjoint");
        seen = seen | tree.vertex_set();
        facets.insert(facets.end(), tree.facets().begin(), tree.facets().end());
    }
    return realize_fat_forest(SimplicialComplex::from_faces(d, std::move(facets)), options);
}

CertificateCheck verify_certificate(const RealizationCertificate& cert)
{
    try {
        std::map<int, BuildState> trees;
        std::optional<BuildState> acc;
        for (const TraceStep& step : cert.trace) {
            switch (step.kind) {
            case TraceStep::Kind::Simplex: {
                NumericalSemigroup base = new_semigroup(step.generators);
                trees[step.tree] = state_from_simplex(step.vertices, base, step.element);
                break;
            }
            case TraceStep::Kind::Inflate: {
                auto it = trees.find(step.tree);
                if (it == trees.end() || step.vertices.size() != 1) return {false, "inflate step out of order"};
                it->second = inflate_state(it->second, step.vertices.front(), step.attach, step.prime);
                if (it->second.element != step.element) return {false, "inflate step element mismatch"};
                break;
            }
            case TraceStep::Kind::Union: {
                if (step.tree < 0) {
                    NumericalSemigroup left = new_semigroup(step.generators);
                    NumericalSemigroup right = new_semigroup(step.right);
                    std::vector<int> lv, rv;
                    for (std::size_t i = 0; i < left.embedding_dimension(); ++i) lv.push_back(static_cast<int>(i) + 1);
                    for (std::size_t i = 0; i < right.embedding_dimension(); ++i) {
                        rv.push_back(static_cast<int>(left.embedding_dimension() + i) + 1);
                    }
                    acc = union_states(state_from_simplex(lv, left, step.left_element),
                                       state_from_simplex(rv, right, step.right_element));
                    break;
                }
                auto it = trees.find(step.tree);
                if (it == trees.end()) return {false, "union step names an unknown tree"};
                acc = acc ? union_states(*acc, it->second) : it->second;
                if (acc->element != step.element) return {false, "union step element mismatch"};
                break;
            }
            }
        }
        if (!acc) return {false, "trace builds no monoid"};
        if (acc->monoid.generators() != cert.generators) return {false, "replayed generators differ"};
        if (acc->element != cert.element) return {false, "replayed element differs"};
        if (map_for(*acc, cert.complex.num_vertices()) != cert.vertex_map) return {false, "vertex map differs"};
        const SimplicialComplex actual = delta(acc->monoid, acc->element);
        if (!equals_relabeled(cert.complex, actual, cert.vertex_map)) {
            return {false, "Delta_M is " + format_complex(actual)};
        }
        return {true, {}};
    } catch (const Error& e) {
        return {false, std::string(e.kind()) + ": " + e.what()};
    }
}

}  // namespace sdc
