#include "sdc/json_io.hpp"

#include "sdc/errors.hpp"

namespace sdc {

namespace {

const char* kind_name(TraceStep::Kind kind)
{
    switch (kind) {
    case TraceStep::Kind::Simplex: return "simplex";
    case TraceStep::Kind::Inflate: return "inflate";
    case TraceStep::Kind::Union: return "union";
    }
    return "?";
}

Json step_to_json(const TraceStep& s)
{
    Json j;
    j["step"] = kind_name(s.kind);
    j["tree"] = s.tree;
    j["element"] = int_to_json(s.element);
    switch (s.kind) {
    case TraceStep::Kind::Simplex:
        j["vertices"] = s.vertices;
        j["generators"] = ints_to_json(s.generators);
        j["offset"] = int_to_json(s.offset);
        break;
    case TraceStep::Kind::Inflate:
        j["vertex"] = s.vertices.empty() ? 0 : s.vertices.front();
        j["attach"] = s.attach;
        j["b"] = int_to_json(s.offset);
        j["prime"] = int_to_json(s.prime);
        break;
    case TraceStep::Kind::Union:
        j["left"] = ints_to_json(s.generators);
        j["right"] = ints_to_json(s.right);
        j["k"] = int_to_json(s.left_element);
        j["k_prime"] = int_to_json(s.right_element);
        break;
    }
    return j;
}

TraceStep step_from_json(const Json& j)
{
    TraceStep s;
    const std::string kind = j.at("step").get<std::string>();
    s.tree = j.at("tree").get<int>();
    s.element = int_from_json(j.at("element"));
    if (kind == "simplex") {
        s.kind = TraceStep::Kind::Simplex;
        s.vertices = j.at("vertices").get<std::vector<int>>();
        s.generators = ints_from_json(j.at("generators"));
        s.offset = int_from_json(j.at("offset"));
    } else if (kind == "inflate") {
        s.kind = TraceStep::Kind::Inflate;
        s.vertices = {j.at("vertex").get<int>()};
        s.attach = j.at("attach").get<std::vector<int>>();
        s.offset = int_from_json(j.at("b"));
        s.prime = int_from_json(j.at("prime"));
    } else if (kind == "union") {
        s.kind = TraceStep::Kind::Union;
        s.generators = ints_from_json(j.at("left"));
        s.right = ints_from_json(j.at("right"));
        s.left_element = int_from_json(j.at("k"));
        s.right_element = int_from_json(j.at("k_prime"));
    } else {
        throw InvalidInput("unknown trace step '" + kind + "'");
    }
    return s;
}

}  // namespace

Json int_to_json(Int v)
{
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(to_string(v));
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw InvalidInput("expected an integer in JSON, got " + j.dump());
}

Json ints_to_json(const std::vector<Int>& values)
{
    Json arr = Json::array();
    for (Int v : values) arr.push_back(int_to_json(v));
    return arr;
}

std::vector<Int> ints_from_json(const Json& j)
{
    if (!j.is_array()) throw InvalidInput("expected an array of integers");
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(int_from_json(v));
    return out;
}

Json complex_to_json(const SimplicialComplex& complex)
{
    Json facets = Json::array();
    for (Face f : complex.facets()) facets.push_back(f.vertices());
    return Json{{"facets", facets}, {"num_vertices", complex.num_vertices()}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    return SimplicialComplex::from_facets(j.at("num_vertices").get<int>(),
                                          j.at("facets").get<std::vector<std::vector<int>>>());
}

Json polynomial_to_json(const SparsePolynomial& p)
{
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = int_to_json(c);
    return j;
}

Json euler_map_to_json(const std::map<Int, std::int64_t>& values)
{
    Json j = Json::object();
    for (const auto& [m, chi] : values) j[to_string(m)] = chi;
    return j;
}

Json certificate_to_json(const RealizationCertificate& cert)
{
    Json map = Json::object();
    for (std::size_t i = 0; i < cert.vertex_map.size(); ++i) map[std::to_string(i + 1)] = cert.vertex_map[i];
    Json trace = Json::array();
    for (const auto& step : cert.trace) trace.push_back(step_to_json(step));
    return Json{{"complex", complex_to_json(cert.complex)},
                {"element", int_to_json(cert.element)},
                {"generators", ints_to_json(cert.generators)},
                {"trace", trace},
                {"verified", cert.verified},
                {"vertex_map", map}};
}

RealizationCertificate certificate_from_json(const Json& j)
{
    try {
        RealizationCertificate cert;
        cert.complex = complex_from_json(j.at("complex"));
        cert.element = int_from_json(j.at("element"));
        cert.generators = ints_from_json(j.at("generators"));
        cert.verified = j.at("verified").get<bool>();
        const Json& map = j.at("vertex_map");
        cert.vertex_map.assign(static_cast<std::size_t>(cert.complex.num_vertices()), 0);
        for (const auto& [key, value] : map.items()) {
            const int v = std::stoi(key);
            if (v < 1 || v > cert.complex.num_vertices()) throw InvalidInput("vertex_map key out of range");
            cert.vertex_map[static_cast<std::size_t>(v - 1)] = value.get<int>();
        }
        for (const auto& step : j.at("trace")) cert.trace.push_back(step_from_json(step));
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    } catch (const std::logic_error& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace sdc
