#include "sdc/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "sdc/errors.hpp"

namespace sdc {

struct NumericalSemigroup::Impl {
    struct Gluing {
        NumericalSemigroup a, b;
        Int alpha = 1, beta = 1;
        Int alpha_inv_mod_beta = 0, beta_inv_mod_alpha = 0;
        bool iterate_over_a = true;
    };

    std::vector<Int> generators;
    Int content = 1;
    Int modulus = 0;          // reduced smallest generator, 0 when no table
    std::vector<Int> table;   // reduced Apéry table
    std::optional<Int> frobenius;
    std::optional<Gluing> gluing;
};

namespace {

void check_generators(std::span<const Int> gens)
{
    if (gens.empty()) throw InvalidInput("generator list is empty");
    for (Int g : gens) {
        if (g < 1) throw InvalidInput("generators must be positive, got " + to_string(g));
    }
}

Int content_of(std::span<const Int> gens)
{
    Int g = 0;
    for (Int x : gens) g = gcd(g, x);
    return g;
}

void build_table(NumericalSemigroup::Impl& impl, Int limit)
{
    std::vector<Int> reduced;
    reduced.reserve(impl.generators.size());
    for (Int g : impl.generators) reduced.push_back(g / impl.content);
    if (reduced.front() > limit) return;
    impl.modulus = reduced.front();
    impl.table = residue_shortest_paths(reduced, impl.modulus);
}

}  // namespace

std::vector<Int> residue_shortest_paths(std::span<const Int> generators, Int modulus)
{
    if (modulus < 1) throw InvalidInput("residue modulus must be positive");
    if (modulus > kAperyTableLimit) {
        throw InvalidInput("residue table of size " + to_string(modulus) + " exceeds the supported limit");
    }
    const auto n = static_cast<std::size_t>(modulus);
    std::vector<Int> dist(n, -1);
    using Entry = std::pair<Int, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[r]) continue;
        for (Int g : generators) {
            auto next = static_cast<std::size_t>((static_cast<Int>(r) + g) % modulus);
            Int candidate = checked_add(d, g);
            if (dist[next] < 0 || candidate < dist[next]) {
                dist[next] = candidate;
                queue.emplace(candidate, next);
            }
        }
    }
    return dist;
}

std::vector<Int> minimal_generators(std::span<const Int> gens)
{
    check_generators(gens);
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const Int first = sorted.front();
    std::vector<Int> kept{first};
    std::vector<Int> dist = residue_shortest_paths(kept, first);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        Int g = sorted[i];
        Int best = dist[static_cast<std::size_t>(g % first)];
        if (best >= 0 && best <= g) continue;
        kept.push_back(g);
        dist = residue_shortest_paths(kept, first);
    }
    return kept;
}

NumericalSemigroup NumericalSemigroup::from_minimal(std::vector<Int> generators)
{
    check_generators(generators);
    auto impl = std::make_shared<Impl>();
    impl->generators = std::move(generators);
    impl->content = content_of(impl->generators);
    build_table(*impl, kAperyTableLimit);
    if (impl->table.empty()) {
        throw InvalidInput("smallest generator " + to_string(impl->generators.front()) +
                           " is too large for an Apéry table");
    }
    if (impl->content == 1) {
        impl->frobenius = *std::max_element(impl->table.begin(), impl->table.end()) - impl->modulus;
    }
    NumericalSemigroup s;
    s.impl_ = std::move(impl);
    return s;
}

NumericalSemigroup NumericalSemigroup::glued(const NumericalSemigroup& a, Int alpha, const NumericalSemigroup& b,
                                             Int beta, std::vector<Int> generators)
{
    if (!a.is_numerical() || !b.is_numerical()) {
        throw GluingHypothesisError("gluing decomposition needs numerical factors");
    }
    if (alpha < 1 || beta < 1 || gcd(alpha, beta) != 1) {
        throw GluingHypothesisError("gluing multipliers must be positive and coprime");
    }
    if (!b.contains(alpha) || !a.contains(beta)) {
        throw GluingHypothesisError("each gluing multiplier must lie in the opposite factor");
    }
    check_generators(generators);

    auto impl = std::make_shared<Impl>();
    impl->generators = std::move(generators);
    impl->content = content_of(impl->generators);
    if (impl->content != 1) throw GluingHypothesisError("glued monoid is not numerical");

    Int fa = *a.frobenius_number();
    Int fb = *b.frobenius_number();
    impl->frobenius = checked_add(checked_add(checked_mul(alpha, fa), checked_mul(beta, fb)), checked_mul(alpha, beta));

    Impl::Gluing glue;
    glue.a = a;
    glue.b = b;
    glue.alpha = alpha;
    glue.beta = beta;
    glue.alpha_inv_mod_beta = mod_inverse(alpha, beta);
    glue.beta_inv_mod_alpha = mod_inverse(beta, alpha);
    // Walk the residue progression on the side whose Frobenius bound is hit first.
    glue.iterate_over_a = (fa < 0 ? Int{0} : fa / beta) <= (fb < 0 ? Int{0} : fb / alpha);
    impl->gluing = std::move(glue);

    build_table(*impl, kGluedTableLimit);

    NumericalSemigroup s;
    s.impl_ = std::move(impl);
    return s;
}

NumericalSemigroup::NumericalSemigroup()
{
    static const std::shared_ptr<const Impl> trivial = [] {
        auto impl = std::make_shared<Impl>();
        impl->generators = {1};
        impl->modulus = 1;
        impl->table = {0};
        impl->frobenius = -1;
        return impl;
    }();
    impl_ = trivial;
}

const std::vector<Int>& NumericalSemigroup::generators() const { return impl_->generators; }

Int NumericalSemigroup::content() const { return impl_->content; }

bool NumericalSemigroup::has_apery_table() const { return !impl_->table.empty(); }

const std::vector<Int>& NumericalSemigroup::apery_table() const
{
    if (!has_apery_table()) throw InvalidInput("no Apéry table for this monoid (generators too large)");
    return impl_->table;
}

bool NumericalSemigroup::has_gluing() const { return impl_->gluing.has_value(); }

std::optional<Int> NumericalSemigroup::frobenius_number() const { return impl_->frobenius; }

bool NumericalSemigroup::contains_via_apery(Int m) const
{
    const auto& table = apery_table();
    if (m < 0) return false;
    if (m % impl_->content != 0) return false;
    Int q = m / impl_->content;
    return q >= table[static_cast<std::size_t>(q % impl_->modulus)];
}

bool NumericalSemigroup::contains_via_gluing(Int m) const
{
    if (!impl_->gluing) throw InvalidInput("monoid was not built by gluing");
    if (m < 0) return false;
    if (m == 0) return true;
    if (impl_->frobenius && m > *impl_->frobenius) return true;

    // m = alpha*x + beta*y with x in A, y in B. Once the least admissible x in
    // its class mod beta is found, larger x only trade multiples of alpha
    // (an element of B) out of y, so the first hit decides membership.
    const auto& g = *impl_->gluing;
    const NumericalSemigroup& walk = g.iterate_over_a ? g.a : g.b;
    const NumericalSemigroup& other = g.iterate_over_a ? g.b : g.a;
    const Int scale = g.iterate_over_a ? g.alpha : g.beta;
    const Int step = g.iterate_over_a ? g.beta : g.alpha;
    const Int inverse = g.iterate_over_a ? g.alpha_inv_mod_beta : g.beta_inv_mod_alpha;

    for (Int x = mul_mod(floor_mod(m, step), inverse, step);; x += step) {
        Int used = checked_mul(scale, x);
        if (used > m) return false;
        if (walk.contains(x)) return other.contains((m - used) / step);
    }
}

bool NumericalSemigroup::contains(Int m) const
{
    return has_apery_table() ? contains_via_apery(m) : contains_via_gluing(m);
}

bool NumericalSemigroup::is_minimal_generator(Int m) const
{
    const auto& gens = generators();
    return std::binary_search(gens.begin(), gens.end(), m);
}

NumericalSemigroup new_semigroup(std::span<const Int> gens, bool require_numerical)
{
    check_generators(gens);
    if (require_numerical && content_of(gens) != 1) {
        throw NonNumericalError("generators have gcd " + to_string(content_of(gens)) + ", not a numerical semigroup");
    }
    return NumericalSemigroup::from_minimal(minimal_generators(gens));
}

NumericalSemigroup new_semigroup(std::initializer_list<Int> gens, bool require_numerical)
{
    return new_semigroup(std::span<const Int>(gens.begin(), gens.size()), require_numerical);
}

namespace {

void require_numerical(const NumericalSemigroup& s, const char* what)
{
    if (!s.is_numerical()) {
        throw NonNumericalError(std::string(what) + " requires gcd 1, monoid has content " + to_string(s.content()));
    }
}

}  // namespace

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n)
{
    require_numerical(s, "apery_set");
    if (n <= 0 || !s.contains(n)) throw InvalidInput("apery_set: " + to_string(n) + " is not a positive element");
    return residue_shortest_paths(s.generators(), n);
}

Int frobenius(const NumericalSemigroup& s)
{
    require_numerical(s, "frobenius");
    return *s.frobenius_number();
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s)
{
    require_numerical(s, "pseudo_frobenius");
    const auto& gens = s.generators();
    if (gens.front() == 1) return {};
    const auto& table = s.apery_table();
    const Int n1 = gens.front();
    // w in Ap(S, n1) is maximal under <=_S iff no w + n_i stays in Ap(S, n1).
    std::vector<Int> result;
    for (Int w : table) {
        bool maximal = std::all_of(gens.begin(), gens.end(), [&](Int g) { return s.contains(w + g - n1); });
        if (maximal) result.push_back(w - n1);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Int> elements_up_to(const NumericalSemigroup& s, Int bound)
{
    if (bound > kSweepLimit) throw InvalidInput("elements_up_to: bound too large");
    std::vector<Int> out;
    for (Int x = 0; x <= bound; ++x) {
        if (s.contains(x)) out.push_back(x);
    }
    return out;
}

std::vector<Int> factorization_counts_up_to(const NumericalSemigroup& s, Int bound)
{
    if (bound < 0) return {};
    if (bound > kSweepLimit) throw InvalidInput("factorization count: value too large for the sweep");
    std::vector<Int> counts(static_cast<std::size_t>(bound) + 1, 0);
    counts[0] = 1;
    for (Int g : s.generators()) {
        if (g > bound) break;
        for (auto x = static_cast<std::size_t>(g); x < counts.size(); ++x) {
            counts[x] = checked_add(counts[x], counts[x - static_cast<std::size_t>(g)]);
        }
    }
    return counts;
}

Int count_factorizations(const NumericalSemigroup& s, Int m)
{
    if (m < 0) return 0;
    return factorization_counts_up_to(s, m).back();
}

}  // namespace sdc
