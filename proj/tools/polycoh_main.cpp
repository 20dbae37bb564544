// Command-line front end: cohomology tables, Tor computations, cohomology
// rings over a field, the verification suite, and polyhedral product models.

#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "polycoh/cohomology_ring.hpp"
#include "polycoh/io.hpp"
#include "polycoh/verify.hpp"

using namespace polycoh;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonArgs {
    std::string catalog;
    std::string complex_file;
    std::string coeff = "Z";
    std::string format = "text";
    std::string spaces;
    int cap = -1;
    bool timings = false;

    void attach_complex(CLI::App* cmd)
    {
        auto* cat = cmd->add_option("--catalog", catalog,
                                    "built-in complex (simplex{m}, boundary{m}, gon{m}, "
                                    "points{m}, rp2_6)");
        auto* file = cmd->add_option("--complex", complex_file,
                                     "JSON file {\"m\":int, \"facets\":[[...], ...]}");
        cat->excludes(file);
    }

    void attach_output(CLI::App* cmd)
    {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--timings", timings,
                      "include wall-clock timings in JSON output (breaks byte-for-byte "
                      "reproducibility)");
    }

    SimplicialComplex load_complex() const
    {
        if (!catalog.empty()) return catalog_complex(catalog);
        if (!complex_file.empty()) return load_complex_file(complex_file);
        throw InputError("need --catalog or --complex");
    }

    std::string complex_label() const { return !catalog.empty() ? catalog : complex_file; }

    CoeffRing ring() const { return CoeffRing::parse(coeff); }
};

void emit(const ordered_json& j, const std::string& format)
{
    if (format == "json")
        std::cout << j.dump(2) << "\n";
}

ordered_json document(const std::string& command, const CommonArgs& args)
{
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["complex"] = args.complex_label();
    return j;
}

int report_exit(const Report& report) { return report.all_passed() ? 0 : 1; }

void print_report_text(const Report& report, bool timings)
{
    for (const auto& c : report.checks) {
        std::cout << "[" << (c.status == CheckResult::Status::Pass
                                 ? "PASS"
                                 : c.status == CheckResult::Status::Fail ? "FAIL" : "SKIP")
                  << "] " << c.id;
        if (timings) std::cout << "  (" << c.seconds << "s)";
        if (!c.witness.empty()) std::cout << "\n       " << c.witness;
        std::cout << "\n";
    }
    std::cout << report.checks.size() - report.failures() << "/" << report.checks.size()
              << " checks passed\n";
}

int cmd_cohomology(const CommonArgs& args, const std::string& model)
{
    SimplicialComplex k = args.load_complex();
    CoeffRing coeff = args.ring();

    MonomialComplex complex;
    if (model == "rbar") complex = build_rbar(k).complex;
    else if (model == "bk") complex = build_bk(k).complex;
    else if (model == "koszul") complex = build_koszul(k, args.cap >= 0 ? args.cap : k.vertex_count() + 2).complex;
    else {
        Spaces spaces = parse_spaces_arg(args.spaces.empty() ? "s1" : args.spaces,
                                         k.vertex_count());
        if (model == "cxk") complex = build_cxk(k, spaces).complex;
        else if (model == "bxk") complex = build_bxk(k, spaces).model.complex;
        else if (model == "rxk") complex = build_rxk(k, spaces).complex;
        else throw InputError("unknown model '" + model + "'");
    }

    CohomologyResult h = complex.cohomology(coeff);
    ordered_json j = document("cohomology", args);
    j["model"] = model;
    j["coefficients"] = coeff.name();
    j["groups"] = cohomology_to_json(h);
    j["poincare"] = poincare_polynomial(h);
    bool bigraded = complex.grading_mode() == GradingMode::Bigraded;
    BigradedCohomology hb;
    if (bigraded) {
        hb = complex.bigraded_cohomology(coeff);
        j["bigraded_groups"] = cohomology_to_json(hb);
        j["bigraded_poincare"] = poincare_polynomial(hb);
    }

    if (args.format == "text") {
        std::cout << "H*(" << model << "(" << args.complex_label() << "); " << coeff.name()
                  << ")\n"
                  << cohomology_table_text(h) << "Poincare polynomial: "
                  << poincare_polynomial(h) << "\n";
        if (bigraded)
            std::cout << "Bigraded Poincare polynomial: " << poincare_polynomial(hb) << "\n";
    } else {
        emit(j, args.format);
    }
    return 0;
}

int cmd_tor(const CommonArgs& args)
{
    SimplicialComplex k = args.load_complex();
    int cap = args.cap >= 0 ? args.cap : k.vertex_count() + 2;
    CoeffRing coeff = args.ring();
    BigradedCohomology tor = tor_bigraded(k, cap, coeff);

    ordered_json j = document("tor", args);
    j["coefficients"] = coeff.name();
    j["cap"] = cap;
    j["truncated_verification"] = true;
    j["groups"] = cohomology_to_json(tor);
    j["poincare"] = poincare_polynomial(tor);

    if (args.format == "text") {
        std::cout << "Tor(" << args.complex_label() << "; " << coeff.name()
                  << "), second degree <= " << cap << " (truncated verification)\n"
                  << cohomology_table_text(tor)
                  << "Bigraded Poincare polynomial: " << poincare_polynomial(tor) << "\n";
    } else {
        emit(j, args.format);
    }
    return 0;
}

template <class Field>
ordered_json ring_to_json(const MonomialComplex& complex, const RingStructure<Field>& ring,
                          Field f)
{
    ordered_json classes = ordered_json::array();
    for (const auto& cls : ring.classes) {
        ordered_json rep = ordered_json::array();
        for (const auto& [idx, c] : cls.rep)
            rep.push_back({{"monomial", complex.monomial(idx).label},
                           {"coef", f.to_string(c)}});
        classes.push_back({{"name", cls.name}, {"degree", cls.degree}, {"rep", rep}});
    }
    ordered_json products = ordered_json::array();
    for (const auto& [ab, terms] : ring.prod) {
        ordered_json val = ordered_json::array();
        for (const auto& [cls, c] : terms)
            val.push_back({{"class", ring.classes[cls].name}, {"coef", f.to_string(c)}});
        products.push_back({{"left", ring.classes[ab.first].name},
                            {"right", ring.classes[ab.second].name},
                            {"value", val}});
    }
    return ordered_json{{"classes", classes}, {"products", products}};
}

template <class Field>
int run_ring(const CommonArgs& args, const std::string& model, const MonomialComplex& complex,
             const ProductTable& table, Field f)
{
    RingStructure<Field> ring = compute_cohomology_ring(complex, table, f);
    ordered_json j = document("ring", args);
    j["model"] = model;
    j["coefficients"] = args.ring().name();
    j["ring"] = ring_to_json(complex, ring, f);
    if (args.format == "text") {
        std::cout << "Cohomology ring over " << args.ring().name() << "\n";
        for (const auto& cls : ring.classes) {
            std::cout << "  " << cls.name << " (degree " << cls.degree << ") = ";
            bool first = true;
            for (const auto& [idx, c] : cls.rep) {
                if (!first) std::cout << " + ";
                std::cout << f.to_string(c) << "*" << complex.monomial(idx).label;
                first = false;
            }
            std::cout << "\n";
        }
        std::cout << "nonzero products:\n";
        bool any = false;
        for (const auto& [ab, terms] : ring.prod) {
            std::cout << "  " << ring.classes[ab.first].name << " * "
                      << ring.classes[ab.second].name << " = ";
            bool first = true;
            for (const auto& [cls, c] : terms) {
                if (!first) std::cout << " + ";
                std::cout << f.to_string(c) << "*" << ring.classes[cls].name;
                first = false;
            }
            std::cout << "\n";
            any = true;
        }
        if (!any) std::cout << "  (none)\n";
    } else {
        emit(j, args.format);
    }
    return 0;
}

int cmd_ring(const CommonArgs& args, const std::string& model)
{
    CoeffRing coeff = args.ring();
    if (!coeff.is_field())
        throw InputError(
            "ring structure constants need field coefficients: integer class products with "
            "torsion are not exposed; use --coeff Q or --coeff Z/p");
    SimplicialComplex k = args.load_complex();

    MonomialComplex complex;
    ProductTable table;
    if (model == "bk") {
        BkModel bk = build_bk(k);
        complex = std::move(bk.complex);
        table = std::move(bk.product);
    } else if (model == "bxk") {
        Spaces spaces = parse_spaces_arg(args.spaces.empty() ? "s1" : args.spaces,
                                         k.vertex_count());
        BxkModel bxk = build_bxk(k, spaces);
        complex = std::move(bxk.model.complex);
        table = std::move(bxk.product);
    } else {
        throw InputError("ring supports models bk and bxk");
    }

    if (coeff.kind == RingKind::Rationals)
        return run_ring(args, model, complex, table, FieldQ{});
    return run_ring(args, model, complex, table, FieldFp(coeff.p));
}

int cmd_verify(const CommonArgs& args, const std::vector<std::string>& coeffs,
               const std::string& checks)
{
    VerifyOptions opt;
    opt.k = args.load_complex();
    opt.complex_name = args.complex_label();
    opt.cap = args.cap;
    if (!coeffs.empty()) {
        opt.rings.clear();
        for (const auto& c : coeffs) opt.rings.push_back(CoeffRing::parse(c));
    }
    if (!args.spaces.empty())
        opt.spaces = parse_spaces_arg(args.spaces, opt.k.vertex_count());
    if (!checks.empty()) {
        size_t pos = 0;
        while (pos < checks.size()) {
            size_t comma = checks.find(',', pos);
            if (comma == std::string::npos) comma = checks.size();
            opt.selected.insert(checks.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }

    Report report = run_verification(opt);
    if (args.format == "text") {
        print_report_text(report, args.timings);
    } else {
        ordered_json j = document("verify", args);
        j["cap"] = opt.effective_cap();
        j["checks"] = report.to_json(args.timings);
        j["all_passed"] = report.all_passed();
        emit(j, args.format);
    }
    return report_exit(report);
}

int cmd_polyhedral(const CommonArgs& args)
{
    SimplicialComplex k = args.load_complex();
    if (args.spaces.empty()) throw InputError("polyhedral needs --spaces");
    Spaces spaces = parse_spaces_arg(args.spaces, k.vertex_count());
    CoeffRing coeff = args.ring();

    TensorModel cxk = build_cxk(k, spaces);
    BxkModel bxk = build_bxk(k, spaces);
    RxkModel rxk = build_rxk(k, spaces);
    CohomologyResult hc = cxk.complex.cohomology(coeff);
    CohomologyResult hb = bxk.model.complex.cohomology(coeff);
    CohomologyResult hr = rxk.complex.cohomology(coeff);
    Report oracle = oracle_compare_cxx(k, spaces, {coeff});

    ordered_json j = document("polyhedral", args);
    j["coefficients"] = coeff.name();
    ordered_json names = ordered_json::array();
    for (const auto& s : spaces) names.push_back(s.name);
    j["spaces"] = names;
    j["cxk"] = {{"basis", cxk.complex.size()}, {"groups", cohomology_to_json(hc)},
                {"poincare", poincare_polynomial(hc)}};
    j["bxk"] = {{"basis", bxk.model.complex.size()}, {"groups", cohomology_to_json(hb)},
                {"poincare", poincare_polynomial(hb)}};
    j["rxk"] = {{"basis", rxk.complex.size()}, {"groups", cohomology_to_json(hr)},
                {"poincare", poincare_polynomial(hr)}};
    j["oracle_checks"] = oracle.to_json(args.timings);

    if (args.format == "text") {
        std::cout << "polyhedral product models over " << coeff.name() << " (spaces:";
        for (const auto& s : spaces) std::cout << " " << s.name;
        std::cout << ")\n";
        std::cout << "C(X,K), basis " << cxk.complex.size() << ":\n"
                  << cohomology_table_text(hc);
        std::cout << "B(X,K), basis " << bxk.model.complex.size() << ":\n"
                  << cohomology_table_text(hb);
        std::cout << "R(X,K), basis " << rxk.complex.size() << ":\n"
                  << cohomology_table_text(hr);
        print_report_text(oracle, args.timings);
    } else {
        emit(j, args.format);
    }
    return report_exit(oracle);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"differential graded models for polyhedral product cohomology"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string model = "bk";
    std::vector<std::string> verify_coeffs;
    std::string checks;

    auto* cohomology = app.add_subcommand("cohomology", "cohomology table of a model");
    args.attach_complex(cohomology);
    args.attach_output(cohomology);
    cohomology->add_option("--model", model, "rbar | bk | koszul | cxk | bxk | rxk");
    cohomology->add_option("--coeff", args.coeff, "Z | Q | Z/p");
    cohomology->add_option("--cap", args.cap, "second-degree truncation cap (koszul)");
    cohomology->add_option("--spaces", args.spaces, "spaces JSON or preset (cxk/bxk/rxk)");

    auto* tor = app.add_subcommand("tor", "truncated Tor via the Koszul complex");
    args.attach_complex(tor);
    args.attach_output(tor);
    tor->add_option("--coeff", args.coeff, "Z | Q | Z/p");
    tor->add_option("--cap", args.cap, "second-degree truncation cap (default m+2)");

    auto* ring = app.add_subcommand("ring", "cohomology ring over a field");
    args.attach_complex(ring);
    args.attach_output(ring);
    ring->add_option("--model", model, "bk | bxk");
    ring->add_option("--coeff", args.coeff, "Q | Z/p");
    ring->add_option("--spaces", args.spaces, "spaces JSON or preset (bxk)");

    auto* verify = app.add_subcommand("verify", "run the structural verification suite");
    args.attach_complex(verify);
    args.attach_output(verify);
    verify->add_option("--coeff", verify_coeffs, "coefficient rings (repeatable)");
    verify->add_option("--cap", args.cap, "second-degree truncation cap (default m+2)");
    verify->add_option("--spaces", args.spaces, "spaces JSON or preset; enables model checks");
    verify->add_option("--checks", checks, "comma-separated id prefixes to run");

    auto* polyhedral = app.add_subcommand("polyhedral", "polyhedral product models");
    args.attach_complex(polyhedral);
    args.attach_output(polyhedral);
    polyhedral->add_option("--coeff", args.coeff, "Z | Q | Z/p");
    polyhedral->add_option("--spaces", args.spaces, "spaces JSON or preset")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cohomology->parsed()) return cmd_cohomology(args, model);
        if (tor->parsed()) return cmd_tor(args);
        if (ring->parsed()) return cmd_ring(args, model);
        if (verify->parsed()) return cmd_verify(args, verify_coeffs, checks);
        if (polyhedral->parsed()) return cmd_polyhedral(args);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
