#include "sdc/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n + 1))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void join(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// Sum over subsets J of `rest` (facets after `next`) of (-1)^{|I|+|J|+1}[cap(I u J) empty].
std::int64_t inclusion_exclusion(const std::vector<Face>& facets, std::size_t next, Face cap, int chosen)
{
    if (cap.empty()) {
        // every extension also has empty intersection; the alternating sum
        // over extensions vanishes unless there are none
        return next == facets.size() ? ((chosen % 2 == 1) ? 1 : -1) : 0;
    }
    std::int64_t total = 0;
    for (std::size_t i = next; i < facets.size(); ++i) {
        total += inclusion_exclusion(facets, i + 1, cap & facets[i], chosen + 1);
    }
    return total;
}

}  // namespace

Face Face::of(const std::vector<int>& vertices)
{
    Face f;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices) throw InvalidInput("vertex " + std::to_string(v) + " out of range 1..63");
        f = f.with(v);
    }
    return f;
}

std::vector<int> Face::vertices() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

SimplicialComplex SimplicialComplex::from_faces(int num_vertices, std::vector<Face> facets)
{
    if (num_vertices < 0 || num_vertices > kMaxVertices) {
        throw InvalidInput("vertex count " + std::to_string(num_vertices) + " outside 0..63");
    }
    const Face all = Face::full(num_vertices);
    for (Face f : facets) {
        if (!f.subset_of(all)) throw InvalidInput("facet uses a vertex beyond " + std::to_string(num_vertices));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Face> kept;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool covered = false;
        for (std::size_t j = i + 1; j < facets.size() && !covered; ++j) {
            covered = facets[i].subset_of(facets[j]);
        }
        if (!covered) kept.push_back(facets[i]);
    }
    SimplicialComplex c;
    c.num_vertices_ = num_vertices;
    c.facets_ = std::move(kept);
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int num_vertices, const std::vector<std::vector<int>>& facets)
{
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) {
        for (int v : f) {
            if (v < 1 || v > num_vertices) {
                throw InvalidInput("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(num_vertices));
            }
        }
        faces.push_back(Face::of(f));
    }
    return from_faces(num_vertices, std::move(faces));
}

bool SimplicialComplex::contains(Face f) const
{
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
}

Face SimplicialComplex::vertex_set() const
{
    Face v;
    for (Face f : facets_) v = v | f;
    return v;
}

std::vector<Face> SimplicialComplex::faces() const
{
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        const std::uint64_t m = f.bits();
        for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
            seen.insert(sub);
            if (sub == 0) break;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (auto bits : seen) out.emplace_back(bits);
    std::sort(out.begin(), out.end());
    return out;
}

Int face_sum(const NumericalSemigroup& s, Face f)
{
    const auto& gens = s.generators();
    Int total = 0;
    for (int v : f.vertices()) {
        if (static_cast<std::size_t>(v) > gens.size()) throw InvalidInput("face vertex exceeds embedding dimension");
        total = checked_add(total, gens[static_cast<std::size_t>(v - 1)]);
    }
    return total;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex)
{
    const auto& facets = complex.facets();
    double work = 0;
    for (Face f : facets) work += static_cast<double>(std::uint64_t{1} << std::min(f.size(), 62));
    if (work > static_cast<double>(1 << 22)) return euler_characteristic_by_intersections(complex);
    std::int64_t chi = 0;
    for (Face f : complex.faces()) chi += (f.size() % 2 == 0) ? 1 : -1;
    return chi;
}

std::int64_t euler_characteristic_by_intersections(const SimplicialComplex& complex)
{
    // chi(2^G) = [G empty], so chi(union of simplices) is the signed count of
    // facet subfamilies with empty common intersection.
    const auto& facets = complex.facets();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < facets.size(); ++i) total += inclusion_exclusion(facets, i + 1, facets[i], 1);
    return total;
}

bool is_connected(const SimplicialComplex& complex)
{
    const Face present = complex.vertex_set();
    if (present.size() <= 1) return true;
    DisjointSets sets(complex.num_vertices());
    for (Face f : complex.facets()) {
        auto vs = f.vertices();
        for (std::size_t i = 1; i < vs.size(); ++i) sets.join(vs[0], vs[i]);
    }
    auto vs = present.vertices();
    int root = sets.find(vs.front());
    return std::all_of(vs.begin(), vs.end(), [&](int v) { return sets.find(v) == root; });
}

SimplicialComplex skeleton(int num_vertices, int k)
{
    if (k < -1) throw InvalidInput("skeleton dimension must be >= -1");
    if (num_vertices < 0 || num_vertices > kMaxVertices) throw InvalidInput("vertex count outside 0..63");
    if (k == -1) return SimplicialComplex::void_complex(num_vertices);
    const int size = std::min(k, num_vertices);
    std::vector<Face> facets;
    if (size == 0) {
        facets.emplace_back();
    } else {
        // Gosper's hack over all masks with `size` bits below 2^num_vertices
        const std::uint64_t limit = Face::full(num_vertices).bits();
        for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m != 0 && m <= limit;) {
            facets.emplace_back(m);
            std::uint64_t c = m & (~m + 1);
            std::uint64_t r = m + c;
            if (r == 0) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return SimplicialComplex::from_faces(num_vertices, std::move(facets));
}

SimplicialComplex shifted_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int shift = a.num_vertices();
    const int total = shift + b.num_vertices();
    if (total > kMaxVertices) throw InvalidInput("union exceeds 63 vertices");
    std::vector<Face> facets = a.facets();
    for (Face f : b.facets()) facets.emplace_back(f.bits() << shift);
    return SimplicialComplex::from_faces(total, std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& map, int num_vertices)
{
    if (map.size() != static_cast<std::size_t>(complex.num_vertices())) throw InvalidInput("relabel map has wrong size");
    std::vector<Face> facets;
    for (Face f : complex.facets()) {
        Face image;
        for (int v : f.vertices()) {
            int w = map[static_cast<std::size_t>(v - 1)];
            if (w < 1 || w > num_vertices) throw InvalidInput("relabel map target out of range");
            image = image.with(w);
        }
        facets.push_back(image);
    }
    return SimplicialComplex::from_faces(num_vertices, std::move(facets));
}

bool equals_relabeled(const SimplicialComplex& a, const SimplicialComplex& b, const std::vector<int>& map)
{
    const int d = a.num_vertices();
    if (b.num_vertices() != d || map.size() != static_cast<std::size_t>(d)) return false;
    std::vector<bool> hit(static_cast<std::size_t>(d) + 1, false);
    for (int w : map) {
        if (w < 1 || w > d || hit[static_cast<std::size_t>(w)]) return false;
        hit[static_cast<std::size_t>(w)] = true;
    }
    return relabel(a, map, d).facets() == b.facets();
}

std::vector<Face> fat_tree_order(const SimplicialComplex& complex)
{
    const auto& facets = complex.facets();
    if (facets.empty() || complex.vertex_set().empty()) throw NotFatTree("complex has no vertices");
    if (!is_connected(complex)) throw NotFatTree("complex is disconnected; split it into trees first");

    const std::size_t n = facets.size();
    // Larger facets first: the realizer starts from the first facet's simplex.
    std::vector<std::size_t> candidates(n);
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t x, std::size_t y) { return facets[x].size() > facets[y].size(); });

    std::vector<std::size_t> order;
    std::vector<bool> used(n, false);
    std::set<std::vector<bool>> dead;

    auto attachable = [&](std::size_t i, Face covered) {
        Face meet = facets[i] & covered;
        if (meet.empty()) return false;
        return std::any_of(order.begin(), order.end(), [&](std::size_t j) { return meet.subset_of(facets[j]); });
    };

    auto search = [&](auto&& self, Face covered) -> bool {
        if (order.size() == n) return true;
        if (dead.count(used)) return false;
        for (std::size_t i : candidates) {
            if (used[i]) continue;
            if (!order.empty() && !attachable(i, covered)) continue;
            used[i] = true;
            order.push_back(i);
            if (self(self, covered | facets[i])) return true;
            order.pop_back();
            used[i] = false;
        }
        dead.insert(used);
        return false;
    };

    if (!search(search, Face{})) throw NotFatTree("no facet order attaches every facet along a single face");
    std::vector<Face> out;
    out.reserve(n);
    for (std::size_t i : order) out.push_back(facets[i]);
    return out;
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex)
{
    const Face present = complex.vertex_set();
    if (present.empty()) return {};
    DisjointSets sets(complex.num_vertices());
    for (Face f : complex.facets()) {
        auto vs = f.vertices();
        for (std::size_t i = 1; i < vs.size(); ++i) sets.join(vs[0], vs[i]);
    }
    std::vector<SimplicialComplex> out;
    std::vector<bool> done(static_cast<std::size_t>(complex.num_vertices()) + 1, false);
    for (int v : present.vertices()) {
        int root = sets.find(v);
        if (done[static_cast<std::size_t>(root)]) continue;
        done[static_cast<std::size_t>(root)] = true;
        std::vector<Face> part;
        for (Face f : complex.facets()) {
            if (!f.empty() && sets.find(f.vertices().front()) == root) part.push_back(f);
        }
        out.push_back(SimplicialComplex::from_faces(complex.num_vertices(), std::move(part)));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> parse_forest_text(std::string_view text)
{
    if (trim(text).empty()) throw InvalidInput("facet list is empty");
    std::vector<std::vector<std::vector<int>>> forest;
    for (auto tree_text : split(text, '|')) {
        std::vector<std::vector<int>> tree;
        for (auto facet_text : split(tree_text, ';')) {
            if (trim(facet_text).empty()) throw InvalidInput("empty facet in '" + std::string(text) + "'");
            std::vector<int> facet;
            for (auto vertex_text : split(facet_text, ',')) {
                Int v = parse_int(trim(vertex_text));
                if (v < 1 || v > kMaxVertices) throw InvalidInput("vertex " + to_string(v) + " out of range 1..63");
                facet.push_back(static_cast<int>(v));
            }
            tree.push_back(std::move(facet));
        }
        forest.push_back(std::move(tree));
    }
    return forest;
}

SimplicialComplex parse_complex(std::string_view text, int num_vertices)
{
    std::vector<std::vector<int>> facets;
    int d = num_vertices;
    for (auto& tree : parse_forest_text(text)) {
        for (auto& facet : tree) {
            for (int v : facet) d = std::max(d, v);
            facets.push_back(std::move(facet));
        }
    }
    return SimplicialComplex::from_facets(d, facets);
}

std::string format_complex(const SimplicialComplex& complex)
{
    if (complex.is_void()) return "<void>";
    std::string out;
    for (Face f : complex.facets()) {
        if (!out.empty()) out += ';';
        if (f.empty()) {
            out += "{}";
            continue;
        }
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

}  // namespace sdc
