#ifndef SDC_CONSTRUCTIONS_HPP
#define SDC_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "sdc/complex.hpp"
#include "sdc/semigroup.hpp"

namespace sdc {

/// One step of a realization, in execution order. Vertices are labels of
/// the input complex; generators/elements refer to the monoid after the step.
struct TraceStep {
    enum class Kind { Simplex, Inflate, Union };

    Kind kind = Kind::Simplex;
    int tree = -1;                 // component index; -1 for a standalone union
    std::vector<int> vertices;     // Simplex: base facet; Inflate: {new vertex}
    std::vector<int> attach;       // Inflate: attachment face
    std::vector<Int> generators;   // Simplex: base generators; Union: left factor
    std::vector<Int> right;        // Union: right factor generators
    Int offset = 0;                // Simplex: N; Inflate: b = m - n_F
    Int prime = 0;                 // Inflate
    Int left_element = 0;          // Union: k
    Int right_element = 0;         // Union: k'
    Int element = 0;               // target element after the step
};

/// Witness that `complex` is the squarefree divisor complex of `element` in
/// the monoid generated by `generators`, under vertex_map (input vertex v is
/// generator index vertex_map[v-1], 1-based).
struct RealizationCertificate {
    SimplicialComplex complex;
    std::vector<Int> generators;
    Int element = 0;
    std::vector<int> vertex_map;
    bool verified = false;
    std::vector<TraceStep> trace;
    NumericalSemigroup monoid;  // in-memory only
};

/// k'S + kS'. Strict mode demands k, k' non-generator elements with
/// gcd(k, k') = 1 and checks that the embedding dimensions add; the result
/// keeps its gluing decomposition. Relaxed mode just minimalizes.
NumericalSemigroup glue(const NumericalSemigroup& s, const NumericalSemigroup& s2, Int k, Int k2, bool strict);

/// T = k'S + kS' with Delta_{kk'}^T = Delta_k^S disjoint-union Delta_{k'}^{S'}, verified.
RealizationCertificate disjoint_union_realize(const NumericalSemigroup& s, Int k, const NumericalSemigroup& s2,
                                              Int k2);

struct InflationResult {
    NumericalSemigroup monoid;
    Int element = 0;
    Int offset = 0;                // b
    Int prime = 0;
    std::vector<int> old_to_new;   // old generator index i (1-based) -> index in the new monoid
    int new_vertex = 0;            // index of b in the new monoid
};

/// T = pS + b<1> with b = m - n_F, M = p*m. Delta_M^T is Delta_m^S plus one
/// vertex whose only facet is F + {new}; checked by recomputation.
InflationResult inflate(const NumericalSemigroup& s, Int m, Face f, Int p);

struct SimplexRealization {
    NumericalSemigroup monoid;
    Int element = 0;
    Int offset = 0;  // N
};

inline constexpr int kDefaultSimplexCap = 10;

/// Monoid and element whose complex is the full simplex on v vertices, with
/// every sum of distinct generators uniquely factorable and positive slack.
SimplexRealization realize_simplex(int v, int cap = kDefaultSimplexCap);
/// Same family starting the search at offset N instead of the default v*2^v.
/// The slack m - n_[v] is n_G for the slack_index-th nonempty G of size <= 2
/// in (size, mask) order; index 0 is n_1 = N + 1, the default.
SimplexRealization realize_simplex_from(int v, Int offset, int cap = kDefaultSimplexCap, int slack_index = 0);
/// Number of slack choices for realize_simplex_from (1 when v = 1).
int simplex_slack_choices(int v);
Int default_simplex_offset(int v);

struct RealizeOptions {
    int retry_budget = 32;
    int simplex_cap = kDefaultSimplexCap;
};

/// Realizes a fat forest: each component is built facet by facet with
/// inflation, then components are glued with disjoint unions.
RealizationCertificate realize_fat_forest(const SimplicialComplex& forest, const RealizeOptions& options = {});
/// Trees given separately on one shared vertex labelling; must be vertex-disjoint.
RealizationCertificate realize_fat_forest(const std::vector<SimplicialComplex>& trees,
                                          const RealizeOptions& options = {});

struct CertificateCheck {
    bool ok = false;
    std::string reason;
};

/// Rebuilds the monoid by replaying the trace from scratch, then checks the
/// generators, the element, and delta(T, M) against the complex under the map.
CertificateCheck verify_certificate(const RealizationCertificate& cert);

}  // namespace sdc

#endif
