#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polycoh/cohomology_result.hpp"
#include "polycoh/simplicial.hpp"

namespace polycoh {

// Complex files: {"m": int, "facets": [[int, ...], ...]}, vertices 1-based.
inline SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw InputError("complex JSON needs an integer \"m\"");
    if (!j.contains("facets") || !j["facets"].is_array())
        throw InputError("complex JSON needs a \"facets\" array");
    int m = j["m"].get<int>();
    std::vector<VSet> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw InputError("every facet must be an array of vertices");
        std::vector<int> verts;
        for (const auto& v : f) verts.push_back(v.get<int>());
        facets.push_back(vset_of(verts));
    }
    return SimplicialComplex::close_and_validate(m, facets);
}

inline nlohmann::ordered_json complex_to_json(const SimplicialComplex& k)
{
    nlohmann::ordered_json j;
    j["m"] = k.vertex_count();
    nlohmann::ordered_json facets = nlohmann::ordered_json::array();
    for (VSet f : k.facets()) {
        nlohmann::ordered_json fl = nlohmann::ordered_json::array();
        for (int v : vset_elements(f)) fl.push_back(v);
        facets.push_back(std::move(fl));
    }
    j["facets"] = std::move(facets);
    return j;
}

inline SimplicialComplex load_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open complex file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad JSON in '" + path + "': " + e.what());
    }
    return complex_from_json(j);
}

// Poincare polynomial of the free part in one variable (total degree).
inline std::string poincare_polynomial(const CohomologyResult& h, const std::string& var = "t")
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [deg, g] : h.groups) {
        if (g.free_rank == 0) continue;
        if (!first) out << " + ";
        if (g.free_rank != 1 || deg == 0) out << g.free_rank;
        if (deg != 0) {
            if (g.free_rank != 1) out << "*";
            out << var;
            if (deg != 1) out << "^" << deg;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

// Two-variable form for bigraded results: s tracks the first degree
// (nonpositive), t the second.
inline std::string poincare_polynomial(const BigradedCohomology& h)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [dd, g] : h.groups) {
        if (g.free_rank == 0) continue;
        if (!first) out << " + ";
        bool coef = g.free_rank != 1 || (dd.first == 0 && dd.second == 0);
        if (coef) out << g.free_rank;
        if (dd.first != 0) {
            if (coef) out << "*";
            out << "s";
            if (dd.first != 1) out << "^" << dd.first;
            coef = true;
        }
        if (dd.second != 0) {
            if (coef) out << "*";
            out << "t";
            if (dd.second != 1) out << "^" << dd.second;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

inline nlohmann::ordered_json group_to_json(const GroupSummary& g)
{
    nlohmann::ordered_json j;
    j["free_rank"] = g.free_rank;
    nlohmann::ordered_json tors = nlohmann::ordered_json::array();
    for (const auto& t : g.torsion) tors.push_back(t.str());
    j["torsion"] = std::move(tors);
    return j;
}

inline nlohmann::ordered_json cohomology_to_json(const CohomologyResult& h)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [deg, g] : h.groups)
        arr.push_back({{"degree", deg},
                       {"free_rank", g.free_rank},
                       {"torsion", group_to_json(g)["torsion"]}});
    return arr;
}

inline nlohmann::ordered_json cohomology_to_json(const BigradedCohomology& h)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [dd, g] : h.groups)
        arr.push_back({{"deg1", dd.first},
                       {"deg2", dd.second},
                       {"free_rank", g.free_rank},
                       {"torsion", group_to_json(g)["torsion"]}});
    return arr;
}

inline std::string cohomology_table_text(const CohomologyResult& h)
{
    std::ostringstream out;
    out << "  degree  group\n";
    for (const auto& [deg, g] : h.groups)
        out << "  " << deg << (deg >= 0 && deg <= 9 ? "       " : "      ") << g.to_string()
            << "\n";
    if (h.groups.empty()) out << "  (zero)\n";
    return out.str();
}

inline std::string cohomology_table_text(const BigradedCohomology& h)
{
    std::ostringstream out;
    out << "  bidegree   group\n";
    for (const auto& [dd, g] : h.groups)
        out << "  (" << dd.first << "," << dd.second << ")     " << g.to_string() << "\n";
    if (h.groups.empty()) out << "  (zero)\n";
    return out.str();
}

}  // namespace polycoh
