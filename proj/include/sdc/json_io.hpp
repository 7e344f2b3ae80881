#ifndef SDC_JSON_IO_HPP
#define SDC_JSON_IO_HPP

#include <map>
#include <vector>

#include "json.hpp"

#include "sdc/complex.hpp"
#include "sdc/constructions.hpp"
#include "sdc/hilbert.hpp"

namespace sdc {

using Json = nlohmann::json;

/// Integers within int64 become JSON numbers, larger ones decimal strings.
Json int_to_json(Int v);
/// Accepts both encodings; throws InvalidInput.
Int int_from_json(const Json& j);
Json ints_to_json(const std::vector<Int>& values);
std::vector<Int> ints_from_json(const Json& j);

/// {"facets": [[1,3],[2]], "num_vertices": 3}
Json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

/// Exponent -> coefficient object.
Json polynomial_to_json(const SparsePolynomial& p);
Json euler_map_to_json(const std::map<Int, std::int64_t>& values);

Json certificate_to_json(const RealizationCertificate& cert);
RealizationCertificate certificate_from_json(const Json& j);

}  // namespace sdc

#endif
