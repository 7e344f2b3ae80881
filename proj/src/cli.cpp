#include "sdc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sdc/constructions.hpp"
#include "sdc/divisor_complex.hpp"
#include "sdc/errors.hpp"
#include "sdc/hilbert.hpp"
#include "sdc/json_io.hpp"
#include "sdc/special_classes.hpp"

namespace sdc::cli {

namespace {

std::vector<Int> parse_list(const std::string& text, const char* flag)
{
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_int(item));
        } catch (const InvalidInput&) {
            throw CLI::ValidationError(flag, "expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "list is empty");
    return out;
}

Int parse_value(const std::string& text, const char* flag)
{
    try {
        return parse_int(text);
    } catch (const InvalidInput&) {
        throw CLI::ValidationError(flag, "expected an integer, got '" + text + "'");
    }
}

int retry_budget_from_env()
{
    const char* raw = std::getenv("SDC_RETRY_BUDGET");
    if (raw == nullptr || *raw == '\0') return RealizeOptions{}.retry_budget;
    try {
        Int v = parse_int(raw);
        if (v < 0 || v > 1'000'000) throw InvalidInput("out of range");
        return static_cast<int>(v);
    } catch (const InvalidInput&) {
        throw InvalidInput(std::string("SDC_RETRY_BUDGET must be a nonnegative integer, got '") + raw + "'");
    }
}

Json delta_json(const NumericalSemigroup& s, Int m)
{
    SimplicialComplex c = delta(s, m);
    Json j = complex_to_json(c);
    j["element"] = int_to_json(m);
    j["euler"] = euler_characteristic(c);
    j["void"] = c.is_void();
    j["connected"] = is_connected(c);
    return j;
}

Json skeleton_json(const SkeletonReport& r, int k)
{
    return Json{{"k", k},
                {"element", int_to_json(r.element)},
                {"passed", r.passed},
                {"euler", r.euler},
                {"expected_euler", r.expected_euler},
                {"facets", complex_to_json(r.computed)["facets"]},
                {"expected_facets", complex_to_json(r.expected)["facets"]}};
}

Json vanishing_json(const VanishingReport& r, Int bound)
{
    Json j{{"bound", int_to_json(bound)}, {"passed", r.passed}, {"checked", r.checked}};
    if (r.first_violation) {
        j["first_violation"] = int_to_json(*r.first_violation);
        j["violation_euler"] = r.violation_euler;
    }
    return j;
}

std::string text_for(const Json& j)
{
    // one "key: value" line per top-level entry
    if (!j.is_object()) return j.dump() + "\n";
    std::string out;
    for (const auto& [key, value] : j.items()) out += key + ": " + value.dump() + "\n";
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Squarefree divisor complexes of numerical semigroup elements"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string gens_text, gens2_text, m_text, k_text, k2_text, face_text, prime_text, forest_text, file_text;
    std::string t_text, bound_text;
    bool relaxed = false, verify = false;
    unsigned threads = 1;
    int v = 0, cap = kDefaultSimplexCap, k_level = -1;
    Int n1 = 0, n2 = 0;
    std::string n1_text, n2_text;

    auto* info = app.add_subcommand("info", "Minimal generators, Frobenius number, PF set, Apéry set");
    info->add_option("--gens", gens_text, "Comma-separated generators")->required();
    info->add_flag("--relaxed", relaxed, "Allow gcd > 1");

    auto* del = app.add_subcommand("delta", "Squarefree divisor complex of an element");
    del->add_option("--gens", gens_text)->required();
    del->add_option("--m", m_text)->required();
    del->add_flag("--relaxed", relaxed);

    auto* scan = app.add_subcommand("scan", "Elements with nonzero Euler characteristic");
    scan->add_option("--gens", gens_text)->required();
    scan->add_option("--threads", threads)->check(CLI::Range(1U, 256U));

    auto* hilb = app.add_subcommand("hilbert", "Hilbert series numerator");
    hilb->add_option("--gens", gens_text)->required();
    hilb->add_flag("--verify", verify, "Cross-check against the truncated-series oracle");
    hilb->add_option("--threads", threads)->check(CLI::Range(1U, 256U));

    auto* glu = app.add_subcommand("glue", "k'S + kS'");
    glu->add_option("--gens", gens_text)->required();
    glu->add_option("--gens2", gens2_text)->required();
    glu->add_option("--k", k_text)->required();
    glu->add_option("--k2", k2_text)->required();
    glu->add_flag("--relaxed", relaxed, "Skip the gluing hypotheses");

    auto* uni = app.add_subcommand("union", "Disjoint-union realization");
    uni->add_option("--gens", gens_text)->required();
    uni->add_option("--k", k_text)->required();
    uni->add_option("--gens2", gens2_text)->required();
    uni->add_option("--k2", k2_text)->required();

    auto* inf = app.add_subcommand("inflate", "Attach a vertex along a face");
    inf->add_option("--gens", gens_text)->required();
    inf->add_option("--m", m_text)->required();
    inf->add_option("--face", face_text, "Comma-separated 1-based vertices")->required();
    inf->add_option("--prime", prime_text)->required();

    auto* sim = app.add_subcommand("simplex", "Base simplex realization");
    sim->add_option("--v", v)->required()->check(CLI::Range(1, 63));
    sim->add_option("--cap", cap)->check(CLI::Range(1, 63));

    auto* rea = app.add_subcommand("realize", "Realize a fat forest");
    rea->add_option("--forest", forest_text, "Facet list, e.g. \"1,2;2,3|4\"")->required();

    auto* ver = app.add_subcommand("verify-cert", "Replay and check a certificate");
    ver->add_option("--file", file_text, "Certificate JSON ('-' for stdin)")->required();

    auto* sup = app.add_subcommand("supersymmetric", "Skeleton and vanishing checks for <L/t_i>");
    sup->add_option("--t", t_text, "Comma-separated pairwise coprime t values")->required();
    sup->add_option("--k", k_level, "Single skeleton level (default 0..d+1)")->check(CLI::NonNegativeNumber);
    sup->add_option("--bound", bound_text, "Vanishing bound (default (d+1)L)");

    auto* cl3 = app.add_subcommand("classify3", "Nonzero-Euler elements of a 3-generated semigroup");
    cl3->add_option("--gens", gens_text)->required();

    auto* fam = app.add_subcommand("family", "<n1, n2, n1 n2 - n1 - n2> closed form");
    fam->add_option("--n1", n1_text)->required();
    fam->add_option("--n2", n2_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    auto emit = [&](const Json& j) {
        out << (format == "json" ? j.dump() + "\n" : text_for(j));
    };

    try {
        if (*info) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"), !relaxed);
            Json j{{"generators", ints_to_json(s.generators())},
                   {"content", int_to_json(s.content())},
                   {"embedding_dimension", s.embedding_dimension()}};
            if (s.is_numerical()) {
                j["frobenius"] = int_to_json(frobenius(s));
                j["pseudo_frobenius"] = ints_to_json(pseudo_frobenius(s));
                j["apery"] = ints_to_json(apery_set(s, s.generator(0)));
            }
            emit(j);
        } else if (*del) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"), !relaxed);
            emit(delta_json(s, parse_value(m_text, "--m")));
        } else if (*scan) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            emit(euler_map_to_json(nonzero_euler_scan(s, threads)));
        } else if (*hilb) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            SparsePolynomial p = hilbert_numerator(s, threads);
            Json j{{"numerator", polynomial_to_json(p)}, {"polynomial", p.to_string()}};
            if (verify) {
                bool same = numerator_oracle(s, scan_bound(s)) == p;
                j["verified"] = same;
                if (!same) {
                    emit(j);
                    throw ConstructionVerificationError("numerator differs from the series oracle");
                }
            }
            emit(j);
        } else if (*glu) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            NumericalSemigroup s2 = new_semigroup(parse_list(gens2_text, "--gens2"));
            NumericalSemigroup t =
                glue(s, s2, parse_value(k_text, "--k"), parse_value(k2_text, "--k2"), !relaxed);
            emit(Json{{"generators", ints_to_json(t.generators())},
                      {"content", int_to_json(t.content())},
                      {"embedding_dimension", t.embedding_dimension()}});
        } else if (*uni) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            NumericalSemigroup s2 = new_semigroup(parse_list(gens2_text, "--gens2"));
            emit(certificate_to_json(
                disjoint_union_realize(s, parse_value(k_text, "--k"), s2, parse_value(k2_text, "--k2"))));
        } else if (*inf) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            std::vector<int> vertices;
            for (Int x : parse_list(face_text, "--face")) {
                if (x < 1 || x > kMaxVertices) throw CLI::ValidationError("--face", "vertex out of range");
                vertices.push_back(static_cast<int>(x));
            }
            InflationResult r =
                inflate(s, parse_value(m_text, "--m"), Face::of(vertices), parse_value(prime_text, "--prime"));
            Json j = delta_json(r.monoid, r.element);
            j["generators"] = ints_to_json(r.monoid.generators());
            j["b"] = int_to_json(r.offset);
            j["prime"] = int_to_json(r.prime);
            j["new_vertex"] = r.new_vertex;
            j["old_to_new"] = r.old_to_new;
            emit(j);
        } else if (*sim) {
            SimplexRealization r = realize_simplex(v, cap);
            Json j = delta_json(r.monoid, r.element);
            j["generators"] = ints_to_json(r.monoid.generators());
            j["offset"] = int_to_json(r.offset);
            emit(j);
        } else if (*rea) {
            std::vector<SimplicialComplex> trees;
            int d = 0;
            auto parsed = parse_forest_text(forest_text);
            for (const auto& tree : parsed) {
                for (const auto& facet : tree) {
                    for (int x : facet) d = std::max(d, x);
                }
            }
            for (const auto& tree : parsed) trees.push_back(SimplicialComplex::from_facets(d, tree));
            RealizeOptions options;
            options.retry_budget = retry_budget_from_env();
            emit(certificate_to_json(realize_fat_forest(trees, options)));
        } else if (*ver) {
            std::string text;
            if (file_text == "-") {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(file_text);
                if (!in) throw InvalidInput("cannot read " + file_text);
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            Json parsed = Json::parse(text, nullptr, false);
            if (parsed.is_discarded()) throw InvalidInput("certificate is not valid JSON");
            CertificateCheck check = verify_certificate(certificate_from_json(parsed));
            emit(Json{{"ok", check.ok}, {"reason", check.reason}});
            return check.ok ? 0 : 1;
        } else if (*sup) {
            std::vector<Int> t = parse_list(t_text, "--t");
            NumericalSemigroup s = supersymmetric_from(t);
            Int l = 1;
            for (Int x : t) l = checked_mul(l, x);
            const int d = static_cast<int>(t.size());
            Json levels = Json::array();
            bool passed = true;
            const int lo = k_level >= 0 ? k_level : 0, hi = k_level >= 0 ? k_level : d + 1;
            for (int k = lo; k <= hi; ++k) {
                SkeletonReport r = supersymmetric_skeleton_check(t, k);
                passed = passed && r.passed;
                levels.push_back(skeleton_json(r, k));
            }
            Int bound = bound_text.empty() ? checked_mul(l, d + 1) : parse_value(bound_text, "--bound");
            VanishingReport van = supersymmetric_vanishing_check(t, bound);
            emit(Json{{"generators", ints_to_json(s.generators())},
                      {"L", int_to_json(l)},
                      {"skeleton", levels},
                      {"vanishing", vanishing_json(van, bound)},
                      {"passed", passed && van.passed}});
        } else if (*cl3) {
            NumericalSemigroup s = new_semigroup(parse_list(gens_text, "--gens"));
            auto m = disconnected_elements_3gen(s);
            auto b = nonzero_set_3gen(s);
            auto scanned = nonzero_euler_scan(s);
            emit(Json{{"disconnected", ints_to_json({m[0], m[1], m[2]})},
                      {"pseudo_frobenius", ints_to_json(pseudo_frobenius(s))},
                      {"B", euler_map_to_json(b)},
                      {"matches_scan", b == scanned}});
        } else if (*fam) {
            n1 = parse_value(n1_text, "--n1");
            n2 = parse_value(n2_text, "--n2");
            FrobeniusFamily f = frobenius_gen_family(n1, n2);
            std::vector<Int> support;
            for (const auto& [m, chi] : nonzero_euler_scan(f.semigroup)) support.push_back(m);
            emit(Json{{"generators", ints_to_json(f.semigroup.generators())},
                      {"B", ints_to_json(f.closed_form)},
                      {"scan_support", ints_to_json(support)},
                      {"matches_scan", support == f.closed_form}});
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sdc::cli
