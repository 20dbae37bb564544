#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycoh/errors.hpp"
#include "polycoh/monomial_complex.hpp"

namespace polycoh {

// Finite presentation of the reduced cohomology of one coefficient space:
// generators with degrees, multiplication structure constants on generator
// pairs, and (for the cochain-model variant) a differential making it a dga.
// The presentation is non-unital; the unit of the ambient ring is implicit.
struct SpaceGenerator {
    std::string id;
    int deg = 0;
};

struct SpacePresentation {
    std::string name;
    std::vector<SpaceGenerator> gens;
    std::vector<std::vector<Term>> prod;  // gen x gen -> combination of gens
    bool is_suspension = false;
    std::optional<std::vector<Term>> diff;  // per generator, total-degree derivation

    int gen_count() const { return static_cast<int>(gens.size()); }
    bool has_differential() const { return diff.has_value(); }

    const Term& product(int i, int j) const { return prod[i][j]; }

    Term multiply(const Term& a, const Term& b) const
    {
        Term out;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) term_axpy(out, prod[i][j], ci * cj);
        return out;
    }

    Term differential(const Term& a) const
    {
        Term out;
        if (!diff) return out;
        for (const auto& [i, c] : a) term_axpy(out, (*diff)[i], c);
        return out;
    }

    void validate() const
    {
        int n = gen_count();
        if (static_cast<int>(prod.size()) != n)
            throw InputError(name + ": product table size mismatch");
        for (const auto& row : prod)
            if (static_cast<int>(row.size()) != n)
                throw InputError(name + ": product table row size mismatch");
        for (int i = 0; i < n; ++i) {
            if (gens[i].id.empty()) throw InputError(name + ": empty generator id");
            if (gens[i].deg < 0) throw InputError(name + ": negative generator degree");
            for (int j = 0; j < n; ++j) {
                if (gens[i].id == gens[j].id && i != j)
                    throw InputError(name + ": duplicate generator id " + gens[i].id);
                for (const auto& [k, c] : prod[i][j])
                    if (gens[k].deg != gens[i].deg + gens[j].deg)
                        throw InputError(name + ": product " + gens[i].id + " * " + gens[j].id +
                                         " is not degree additive");
                // graded commutativity
                Term ji = prod[j][i];
                if ((gens[i].deg * gens[j].deg) % 2 != 0)
                    for (auto& [k, c] : ji) c = -c;
                if (prod[i][j] != ji)
                    throw InputError(name + ": product " + gens[i].id + " * " + gens[j].id +
                                     " is not graded commutative");
                if (is_suspension && gens[i].deg > 0 && gens[j].deg > 0 && !prod[i][j].empty())
                    throw InputError(name + ": suspension space with nonzero product " +
                                     gens[i].id + " * " + gens[j].id);
            }
        }
        if (is_suspension)
            for (const auto& g : gens)
                if (g.deg == 0)
                    throw InputError(name + ": suspension space with a degree-0 class");
        // associativity on generator triples
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (multiply(prod[i][j], Term{{k, 1}}) != multiply(Term{{i, 1}}, prod[j][k]))
                        throw InputError(name + ": product not associative on (" + gens[i].id +
                                         ", " + gens[j].id + ", " + gens[k].id + ")");
        if (diff) {
            if (static_cast<int>(diff->size()) != n)
                throw InputError(name + ": differential size mismatch");
            for (int i = 0; i < n; ++i) {
                for (const auto& [k, c] : (*diff)[i])
                    if (gens[k].deg != gens[i].deg + 1)
                        throw InputError(name + ": differential of " + gens[i].id +
                                         " is not of degree one");
                if (!differential((*diff)[i]).empty())
                    throw InputError(name + ": d*d != 0 on " + gens[i].id);
            }
            // Leibniz with total-degree signs
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Term lhs = differential(prod[i][j]);
                    Term rhs = multiply((*diff)[i], Term{{j, 1}});
                    term_axpy(rhs, multiply(Term{{i, 1}}, (*diff)[j]),
                              gens[i].deg % 2 == 0 ? 1 : -1);
                    if (lhs != rhs)
                        throw InputError(name + ": Leibniz fails on " + gens[i].id + " * " +
                                         gens[j].id);
                }
        }
    }
};

using Spaces = std::vector<SpacePresentation>;

inline void validate_spaces(const Spaces& spaces)
{
    for (const auto& s : spaces) s.validate();
}

inline bool all_suspensions(const Spaces& spaces)
{
    for (const auto& s : spaces)
        if (!s.is_suspension) return false;
    return true;
}

// Presets.

inline SpacePresentation sphere_space(int n)
{
    if (n < 1) throw InputError("sphere preset needs degree >= 1");
    SpacePresentation s;
    s.name = "S" + std::to_string(n);
    s.gens = {{"x", n}};
    s.prod = {{Term{}}};
    s.is_suspension = true;
    return s;
}

inline SpacePresentation wedge_s1_s2_space()
{
    SpacePresentation s;
    s.name = "S1vS2";
    s.gens = {{"x", 1}, {"y", 2}};
    s.prod = {{Term{}, Term{}}, {Term{}, Term{}}};
    s.is_suspension = true;
    return s;
}

// A space with a class whose square is nonzero; the complex projective
// plane's reduced ring. Not a suspension.
inline SpacePresentation cp2_space()
{
    SpacePresentation s;
    s.name = "CP2";
    s.gens = {{"x", 2}, {"x2", 4}};
    s.prod = {{Term{{1, 1}}, Term{}}, {Term{}, Term{}}};
    s.is_suspension = false;
    return s;
}

// Reduced two-term cochain model of the circle: one class, zero differential.
inline SpacePresentation s1_minimal_dga()
{
    SpacePresentation s = sphere_space(1);
    s.name = "S1-minimal";
    s.diff = std::vector<Term>{Term{}};
    return s;
}

// Reduced three-generator cochain model of the circle: a survives, d(b) = c.
inline SpacePresentation s1_big_dga()
{
    SpacePresentation s;
    s.name = "S1-3gen";
    s.gens = {{"a", 1}, {"b", 1}, {"c", 2}};
    s.prod = {{Term{}, Term{}, Term{}}, {Term{}, Term{}, Term{}}, {Term{}, Term{}, Term{}}};
    s.is_suspension = true;
    s.diff = std::vector<Term>{Term{}, Term{{2, 1}}, Term{}};
    return s;
}

inline Spaces preset_spheres(const std::vector<int>& degrees)
{
    Spaces out;
    for (int n : degrees) out.push_back(sphere_space(n));
    return out;
}

inline Spaces preset_all_s1(int m) { return preset_spheres(std::vector<int>(m, 1)); }

// S1 v S2 in one slot, circles elsewhere.
inline Spaces preset_one_wedge(int m, int wedge_at = 1)
{
    Spaces out = preset_all_s1(m);
    if (wedge_at < 1 || wedge_at > m) throw InputError("wedge index out of range");
    out[wedge_at - 1] = wedge_s1_s2_space();
    return out;
}

// Generator degree lists, the shape the tensor-mode oracle consumes.
inline std::vector<std::vector<int>> generator_degrees(const Spaces& spaces)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : spaces) {
        std::vector<int> degs;
        for (const auto& g : s.gens) degs.push_back(g.deg);
        out.push_back(std::move(degs));
    }
    return out;
}

// JSON format:
// {"spaces":[{"name":..., "generators":[{"id":..., "deg":int}, ...],
//             "products":[{"left":id, "right":id,
//                          "value":[{"id":..., "coef":int}, ...]}, ...],
//             "is_suspension":bool,
//             "differential":[{"src":id, "value":[...]}, ...]?}, ...]}
// Products and differentials omitted from the JSON are zero.
inline Spaces spaces_from_json(const nlohmann::json& j)
{
    if (!j.contains("spaces") || !j["spaces"].is_array())
        throw InputError("spaces JSON needs a top-level \"spaces\" array");
    Spaces out;
    for (const auto& js : j["spaces"]) {
        SpacePresentation s;
        s.name = js.value("name", "space" + std::to_string(out.size() + 1));
        if (!js.contains("generators") || !js["generators"].is_array())
            throw InputError(s.name + ": missing \"generators\" array");
        std::map<std::string, int> gen_index;
        for (const auto& jg : js["generators"]) {
            SpaceGenerator g{jg.at("id").get<std::string>(), jg.at("deg").get<int>()};
            if (gen_index.count(g.id)) throw InputError(s.name + ": duplicate generator " + g.id);
            gen_index[g.id] = s.gen_count();
            s.gens.push_back(std::move(g));
        }
        auto gen_of = [&](const std::string& id) {
            auto it = gen_index.find(id);
            if (it == gen_index.end())
                throw InputError(s.name + ": unknown generator id '" + id + "'");
            return it->second;
        };
        auto term_of = [&](const nlohmann::json& arr) {
            Term t;
            for (const auto& e : arr)
                term_add(t, gen_of(e.at("id").get<std::string>()), e.at("coef").get<long long>());
            return t;
        };
        s.prod.assign(s.gen_count(), std::vector<Term>(s.gen_count()));
        if (js.contains("products"))
            for (const auto& jp : js["products"]) {
                int a = gen_of(jp.at("left").get<std::string>());
                int b = gen_of(jp.at("right").get<std::string>());
                s.prod[a][b] = term_of(jp.at("value"));
            }
        s.is_suspension = js.value("is_suspension", false);
        if (js.contains("differential")) {
            std::vector<Term> d(s.gen_count());
            for (const auto& jd : js["differential"])
                d[gen_of(jd.at("src").get<std::string>())] = term_of(jd.at("value"));
            s.diff = std::move(d);
        }
        s.validate();
        out.push_back(std::move(s));
    }
    return out;
}

inline nlohmann::ordered_json spaces_to_json(const Spaces& spaces)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : spaces) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : s.gens) js["generators"].push_back({{"id", g.id}, {"deg", g.deg}});
        nlohmann::ordered_json prods = nlohmann::ordered_json::array();
        for (int i = 0; i < s.gen_count(); ++i)
            for (int j = 0; j < s.gen_count(); ++j) {
                if (s.prod[i][j].empty()) continue;
                nlohmann::ordered_json val = nlohmann::ordered_json::array();
                for (const auto& [k, c] : s.prod[i][j])
                    val.push_back({{"id", s.gens[k].id}, {"coef", c}});
                prods.push_back(
                    {{"left", s.gens[i].id}, {"right", s.gens[j].id}, {"value", val}});
            }
        js["products"] = prods;
        js["is_suspension"] = s.is_suspension;
        if (s.diff) {
            nlohmann::ordered_json dl = nlohmann::ordered_json::array();
            for (int i = 0; i < s.gen_count(); ++i) {
                if ((*s.diff)[i].empty()) continue;
                nlohmann::ordered_json val = nlohmann::ordered_json::array();
                for (const auto& [k, c] : (*s.diff)[i])
                    val.push_back({{"id", s.gens[k].id}, {"coef", c}});
                dl.push_back({{"src", s.gens[i].id}, {"value", val}});
            }
            js["differential"] = dl;
        }
        arr.push_back(std::move(js));
    }
    return nlohmann::ordered_json{{"spaces", std::move(arr)}};
}

// Command-line shorthands: a JSON path, or one of
//   s1                 circles everywhere
//   spheres:1,2,1      explicit sphere degrees
//   wedge:3            S1 v S2 at vertex 3, circles elsewhere
//   cp2:2              CP2 at vertex 2, circles elsewhere
inline Spaces parse_spaces_arg(const std::string& arg, int m)
{
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad number '" + s + "' in spaces preset '" + arg + "'");
        return std::stoi(s);
    };
    auto split_ints = [&](const std::string& s) {
        std::vector<int> out;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            out.push_back(parse_int(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return out;
    };
    if (arg == "s1") return preset_all_s1(m);
    if (arg.rfind("spheres:", 0) == 0) {
        auto degs = split_ints(arg.substr(8));
        if (static_cast<int>(degs.size()) != m)
            throw InputError("spheres preset needs " + std::to_string(m) + " degrees");
        return preset_spheres(degs);
    }
    if (arg.rfind("wedge:", 0) == 0) return preset_one_wedge(m, parse_int(arg.substr(6)));
    if (arg.rfind("cp2:", 0) == 0) {
        Spaces out = preset_all_s1(m);
        int at = parse_int(arg.substr(4));
        if (at < 1 || at > m) throw InputError("cp2 index out of range");
        out[at - 1] = cp2_space();
        return out;
    }
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open spaces file '" + arg + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad spaces JSON in '" + arg + "': " + e.what());
    }
    Spaces out = spaces_from_json(j);
    if (static_cast<int>(out.size()) != m)
        throw InputError("spaces file defines " + std::to_string(out.size()) +
                         " spaces but the complex has " + std::to_string(m) + " vertices");
    return out;
}

}  // namespace polycoh
