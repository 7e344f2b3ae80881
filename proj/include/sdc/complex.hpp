#ifndef SDC_COMPLEX_HPP
#define SDC_COMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/integer.hpp"
#include "sdc/semigroup.hpp"

namespace sdc {

inline constexpr int kMaxVertices = 63;

/// A subset of {1, ..., d} stored as a bit mask; vertex v is bit v-1.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    /// Face from 1-based vertex labels; throws InvalidInput outside 1..63.
    static Face of(const std::vector<int>& vertices);
    static constexpr Face full(int d) { return Face(d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int vertex) const { return (bits_ >> (vertex - 1)) & 1U; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr Face with(int vertex) const { return Face(bits_ | (std::uint64_t{1} << (vertex - 1))); }
    /// F^{<=k}
    constexpr Face at_most(int k) const { return Face(bits_ & full(k).bits_); }
    /// F^{>k}
    constexpr Face above(int k) const { return Face(bits_ & ~full(k).bits_); }

    std::vector<int> vertices() const;

    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }
    constexpr bool operator==(const Face&) const = default;

    /// Canonical order: by size, then by mask value.
    constexpr std::strong_ordering operator<=>(const Face& o) const
    {
        if (auto c = size() <=> o.size(); c != 0) return c;
        return bits_ <=> o.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Finite simplicial complex on the vertex set [d], stored by its facets.
///
/// The facet list is a canonically ordered antichain. Two degenerate
/// shapes are kept apart: the void complex (no faces, no facets) stands for
/// Delta_m with m outside the monoid, while the facet list {emptyset} is the
/// complex whose only face is the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_faces(int num_vertices, std::vector<Face> facets);
    static SimplicialComplex from_facets(int num_vertices, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex void_complex(int num_vertices) { return from_faces(num_vertices, {}); }
    static SimplicialComplex simplex(int num_vertices) { return from_faces(num_vertices, {Face::full(num_vertices)}); }

    int num_vertices() const { return num_vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    bool contains(Face f) const;
    /// Union of all facets.
    Face vertex_set() const;
    /// Every face, in canonical order. Exponential in facet size.
    std::vector<Face> faces() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int num_vertices_ = 0;
    std::vector<Face> facets_;
};

/// n_F = sum of the generators indexed by F.
Int face_sum(const NumericalSemigroup& s, Face f);

/// chi = sum over all faces, empty face included, of (-1)^{|F|}; 0 for the void complex.
std::int64_t euler_characteristic(const SimplicialComplex& complex);
/// Same value by inclusion-exclusion over facet intersections.
std::int64_t euler_characteristic_by_intersections(const SimplicialComplex& complex);

bool is_connected(const SimplicialComplex& complex);

/// All faces of size <= k; k = -1 gives the void complex.
SimplicialComplex skeleton(int num_vertices, int k);

/// Disjoint union with b's vertices shifted up by a.num_vertices().
SimplicialComplex shifted_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// True iff mapping every facet of a through `map` (map[v-1] is the image of v)
/// gives exactly the facets of b. Non-bijective maps compare unequal.
bool equals_relabeled(const SimplicialComplex& a, const SimplicialComplex& b, const std::vector<int>& map);

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& map, int num_vertices);

/// Facet order witnessing a fat tree: every facet after the first meets the
/// union of its predecessors in a nonempty set contained in one earlier
/// facet. Throws NotFatTree.
std::vector<Face> fat_tree_order(const SimplicialComplex& complex);

/// Connected components as complexes on the same vertex count. The void
/// complex and {emptyset} have no components.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex);

/// Facet grammar: "1,2,3;2,3,4|5,6". Facets are ';'-separated, trees '|'-separated.
std::vector<std::vector<std::vector<int>>> parse_forest_text(std::string_view text);
SimplicialComplex parse_complex(std::string_view text, int num_vertices = 0);
std::string format_complex(const SimplicialComplex& complex);

}  // namespace sdc

#endif
