#include "torbord/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "torbord/bier.hpp"
#include "torbord/bordism.hpp"
#include "torbord/charnum.hpp"
#include "torbord/vectors.hpp"

namespace torbord {

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    fail(errc::parse, "expected an integer or decimal string");
}

Json int_vector_to_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

Json rat_to_json(const Rat& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v) << '/' << boost::multiprecision::denominator(v);
    return os.str();
}

Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["m"] = k.m();
    Json facets = Json::array();
    for (const auto& f : k.facet_vertices())
        if (!f.empty()) facets.push_back(f);
    j["facets"] = facets;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        fail(errc::parse, "complex JSON needs keys \"m\" and \"facets\"");
    int m = j.at("m").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::parse(m, facets);
}

SimplicialComplex parse_complex_text(const std::string& text) {
    // skip leading whitespace, dispatch on '{'
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) fail(errc::parse, "empty input");
    if (text[pos] == '{') {
        Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) fail(errc::parse, "malformed JSON");
        return complex_from_json(j);
    }
    std::size_t colon = text.find(':', pos);
    if (colon == std::string::npos) fail(errc::parse, "expected \"m: facets\"");
    int m = 0;
    try {
        m = std::stoi(text.substr(pos, colon - pos));
    } catch (const std::exception&) {
        fail(errc::parse, "bad vertex count before ':'");
    }
    std::vector<std::vector<int>> facets;
    std::string rest = text.substr(colon + 1);
    std::istringstream facet_stream(rest);
    std::string facet;
    while (std::getline(facet_stream, facet, ',')) {
        std::istringstream vs(facet);
        std::vector<int> verts;
        int v;
        while (vs >> v) verts.push_back(v);
        if (!verts.empty()) facets.push_back(verts);
    }
    return SimplicialComplex::parse(m, facets);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex_text(buf.str());
}

Json analyze_report(const SimplicialComplex& k) {
    const int m = k.m();
    Json j;
    j["complex"] = complex_to_json(k);
    j["f"] = int_vector_to_json(k.f_vector());
    j["euler"] = int_to_json(k.euler_characteristic());
    j["alpha"] = int_vector_to_json(alpha_vector(k));
    j["mu"] = int_vector_to_json(mu_vector(k));
    j["h_bier"] = int_vector_to_json(h_vector_bier(k));

    if (m <= 10) {
        Json chern = Json::object();
        for (const auto& I : partitions(m - 1)) chern[I.to_string()] = int_to_json(chern_number(k, I));
        j["chern"] = chern;
    }
    j["milnor"] = int_to_json(milnor_number(k));

    const auto cy = chi_y(k);
    j["chi_y"] = int_vector_to_json(cy.coeffs);
    j["euler_x"] = int_to_json(cy.at_minus_one());
    j["todd"] = int_to_json(cy.at_zero());
    j["signature"] = int_to_json(cy.at_plus_one());

    if (m % 2 == 1) {
        Json pont = Json::object();
        for (const auto& I : partitions((m - 1) / 2))
            pont[I.to_string()] = int_to_json(pontryagin_number(k, I));
        j["pontryagin"] = pont;
    }

    Json swr = Json::object(), swc = Json::object();
    for (const auto& I : partitions(m - 1)) {
        swr[I.to_string()] = sw_number_real(k, I);
        swc[I.to_string()] = sw_number_complex(k, I);
    }
    j["sw_real"] = swr;
    j["sw_complex"] = swc;

    const auto bounds = immersion_bounds(k);
    j["immersion"] = Json{{"k_max", bounds.k_max},
                          {"n_real_min", bounds.n_real_min},
                          {"n_complex_min", bounds.n_complex_min}};

    const auto cls = decompose(k);
    Json reduced = Json::object();
    for (const auto& [b, v] : cls.reduced) reduced[std::to_string(b)] = int_to_json(v);
    const auto cert = is_polynomial_generator(k);
    j["bordism"] = Json{{"raw", int_vector_to_json(cls.raw)},
                        {"reduced", reduced},
                        {"generator", cert.generator},
                        {"generator_condition", cert.condition},
                        {"milnor_bound", int_to_json(cert.bound)},
                        {"null_bordant_real", null_bordant_real(k)},
                        {"orientable_real", orientable_real(k)},
                        {"null_bordant_oriented", null_bordant_oriented(k)},
                        {"oriented_class", int_to_json(oriented_class_coefficient(k))}};

    Json notes = Json::array();
    if (k.has_doubly_ghost_vertex())
        notes.push_back("a vertex is ghost in both K and its dual: X_K is the (m-1)-fold product of CP^1");
    j["notes"] = notes;
    return j;
}

} // namespace torbord
