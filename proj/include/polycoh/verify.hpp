#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polycoh/cohomology_ring.hpp"
#include "polycoh/koszul.hpp"
#include "polycoh/polyhedral.hpp"

namespace polycoh {

struct VerifyOptions {
    SimplicialComplex k;
    std::string complex_name = "complex";
    std::vector<CoeffRing> rings = {CoeffRing::Z(), CoeffRing::Q(), CoeffRing::Fp(2)};
    int cap = -1;  // truncation cap; defaults to m + 2
    std::optional<Spaces> spaces;
    // When nonempty, only checks whose id starts with one of these run.
    std::set<std::string> selected;

    int effective_cap() const { return cap >= 0 ? cap : k.vertex_count() + 2; }
};

namespace detail {

class CheckRunner {
public:
    explicit CheckRunner(const std::set<std::string>& selected) : selected_(selected) {}

    bool wanted(const std::string& id) const
    {
        if (selected_.empty()) return true;
        for (const auto& prefix : selected_)
            if (id.rfind(prefix, 0) == 0) return true;
        return false;
    }

    void run(Report& report, const std::string& id, const std::function<CheckResult()>& fn)
    {
        if (!wanted(id)) return;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = [&] {
            try {
                return fn();
            } catch (const std::exception& e) {
                return CheckResult::fail(id, std::string("exception: ") + e.what());
            }
        }();
        r.id = id;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.add(std::move(r));
    }

    void run_all(Report& report, const std::string& any_id,
                 const std::function<Report()>& fn)
    {
        if (!wanted(any_id)) return;
        auto t0 = std::chrono::steady_clock::now();
        Report sub = [&] {
            try {
                return fn();
            } catch (const std::exception& e) {
                Report r;
                r.add(CheckResult::fail(any_id, std::string("exception: ") + e.what()));
                return r;
            }
        }();
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto& c : sub.checks) {
            c.seconds = dt / static_cast<double>(sub.checks.size());
            report.add(std::move(c));
        }
    }

private:
    const std::set<std::string>& selected_;
};

}  // namespace detail

// Runs every structural check of the two real moment-angle models, the
// Koszul/Tor comparison, the homotopy identities, and (when coefficient
// spaces are supplied) the polyhedral product model checks.
inline Report run_verification(const VerifyOptions& opt)
{
    Report report;
    detail::CheckRunner runner(opt.selected);
    const SimplicialComplex& k = opt.k;
    int m = k.vertex_count();
    int cap = opt.effective_cap();

    RbarModel rbar = build_rbar(k);
    BkModel bk = build_bk(k);

    runner.run(report, "basis.count", [&] {
        long long expect = expected_basis_size(k);
        if (rbar.complex.size() != expect || bk.complex.size() != expect)
            return CheckResult::fail("basis.count",
                                     "expected " + std::to_string(expect) + " monomials");
        return CheckResult::pass("basis.count");
    });

    runner.run(report, "rbar.d_squared", [&] { return rbar.complex.check_d_squared(); });
    runner.run(report, "rbar.grading", [&] { return rbar.complex.check_grading(); });
    runner.run(report, "bk.d_squared", [&] { return bk.complex.check_d_squared(); });
    runner.run(report, "bk.grading", [&] { return bk.complex.check_grading(); });

    if (runner.wanted("rbar.product") || runner.wanted("rbar.leibniz_first")) {
        ProductTable rp = build_rbar_product(k, rbar);
        runner.run(report, "rbar.product.unit", [&] { return rp.check_unit(rbar.complex); });
        runner.run(report, "rbar.product.assoc",
                   [&] { return rp.check_associativity(rbar.complex); });
        runner.run(report, "rbar.product.support",
                   [&] { return rp.check_support_union(rbar.complex); });
        runner.run(report, "rbar.product.bidegree",
                   [&] { return rp.check_degree_additivity(rbar.complex, true); });
        runner.run(report, "rbar.leibniz_first",
                   [&] { return check_leibniz(rbar.complex, rp, LeibnizSign::FirstDegree); });
    }

    runner.run(report, "bk.product.unit", [&] { return bk.product.check_unit(bk.complex); });
    runner.run(report, "bk.product.assoc",
               [&] { return bk.product.check_associativity(bk.complex); });
    runner.run(report, "bk.product.support",
               [&] { return bk.product.check_support_union(bk.complex); });
    runner.run(report, "bk.product.total_degree",
               [&] { return bk.product.check_degree_additivity(bk.complex, false); });
    runner.run(report, "bk.leibniz_total",
               [&] { return check_leibniz(bk.complex, bk.product, LeibnizSign::TotalDegree); });

    runner.run(report, "f.sign_chain", [&] { return verify_f(rbar, bk); });

    // support components against the subcomplex oracle, over Z
    runner.run(report, "support.oracle", [&] {
        for (VSet j = 0;; ++j) {
            MonomialComplex comp = rbar.complex.support_component(j);
            CohomologyResult hj =
                comp.size() ? comp.cohomology(CoeffRing::Z()) : CohomologyResult{};
            CohomologyResult oracle =
                reduced_cohomology(k.full_subcomplex(j), CoeffRing::Z()).shifted(1);
            if (!(hj == oracle))
                return CheckResult::fail("support.oracle",
                                         "component " + vset_to_string(j) + ": model " +
                                             hj.to_string() + ", oracle " + oracle.to_string());
            if (j == full_vset(m)) break;
        }
        return CheckResult::pass("support.oracle");
    });

    // additive splitting against the oracle, per coefficient ring
    {
        ModelCohomology rbar_h(rbar.complex);
        ModelCohomology bk_h(bk.complex);
        for (const auto& coeff : opt.rings) {
            runner.run(report, "oracle.rbar." + coeff.name(), [&] {
                CohomologyResult oracle = splitting_oracle(k, coeff, OracleMode::real());
                CohomologyResult got = rbar_h.total(coeff);
                if (got == oracle) return CheckResult::pass("");
                return CheckResult::fail("", "model " + got.to_string() + "; oracle " +
                                                 oracle.to_string());
            });
            runner.run(report, "oracle.bk." + coeff.name(), [&] {
                CohomologyResult oracle = splitting_oracle(k, coeff, OracleMode::real());
                CohomologyResult got = bk_h.total(coeff);
                if (got == oracle) return CheckResult::pass("");
                return CheckResult::fail("", "model " + got.to_string() + "; oracle " +
                                                 oracle.to_string());
            });
        }
    }

    runner.run(report, "e.homotopy", [&] { return verify_e_homotopy(m, cap); });
    runner.run(report, "ideal.homotopy", [&] { return verify_ideal_homotopy(k, cap); });
    runner.run_all(report, "tor", [&] { return quotient_quasi_iso_check(k, cap, opt.rings); });

    // relabeling invariance under two fixed permutations
    runner.run(report, "relabel.invariance", [&] {
        ModelCohomology base_h(bk.complex);
        CohomologyResult expect = base_h.total(CoeffRing::Z());
        std::vector<std::vector<int>> perms;
        std::vector<int> rot(m), rev(m);
        for (int i = 0; i < m; ++i) {
            rot[i] = i % m + 1;
            rev[i] = m - i;
        }
        if (m > 1) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            perms = {rot, rev};
        }
        for (const auto& perm : perms) {
            auto hp = build_bk(k.relabeled(perm)).complex.cohomology(CoeffRing::Z());
            if (!(hp == expect))
                return CheckResult::fail("relabel.invariance",
                                         "cohomology changed under a vertex permutation");
        }
        return CheckResult::pass("relabel.invariance");
    });

    if (opt.spaces) {
        const Spaces& spaces = *opt.spaces;
        TensorModel cxk = build_cxk(k, spaces);
        BxkModel bxk = build_bxk(k, spaces);

        runner.run(report, "cxk.d_squared", [&] { return cxk.complex.check_d_squared(); });
        runner.run(report, "cxk.grading", [&] { return cxk.complex.check_grading(); });
        runner.run(report, "bxk.d_squared",
                   [&] { return bxk.model.complex.check_d_squared(); });
        runner.run(report, "bxk.grading", [&] { return bxk.model.complex.check_grading(); });
        runner.run(report, "bxk.product.unit",
                   [&] { return bxk.product.check_unit(bxk.model.complex); });
        runner.run(report, "bxk.product.assoc",
                   [&] { return bxk.product.check_associativity(bxk.model.complex); });
        runner.run(report, "bxk.product.support",
                   [&] { return bxk.product.check_support_union(bxk.model.complex); });
        runner.run(report, "bxk.product.total_degree",
                   [&] { return bxk.product.check_degree_additivity(bxk.model.complex, false); });
        runner.run(report, "bxk.leibniz_total", [&] {
            return check_leibniz(bxk.model.complex, bxk.product, LeibnizSign::TotalDegree);
        });
        runner.run(report, "fx.sign_chain", [&] { return verify_f_x(cxk, bxk.model); });

        RxkModel rxk = build_rxk(k, spaces);
        runner.run(report, "rxk.d_squared", [&] { return rxk.complex.check_d_squared(); });
        runner.run(report, "rxk.grading", [&] { return rxk.complex.check_grading(); });
        runner.run_all(report, "hg", [&] { return verify_h_g(cxk, rxk); });

        runner.run(report, "rxk.rank_bound", [&] {
            auto hr = rxk.complex.cohomology(CoeffRing::Z());
            auto hc = cxk.complex.cohomology(CoeffRing::Z());
            for (const auto& [deg, g] : hc.groups)
                if (hr.at(deg).free_rank < g.free_rank)
                    return CheckResult::fail("rxk.rank_bound",
                                             "H^" + std::to_string(deg) +
                                                 " of the Koszul model is smaller than the "
                                                 "tensor model");
            return CheckResult::pass("rxk.rank_bound");
        });

        runner.run_all(report, "suspension",
                       [&] { return suspension_coincidence_check(k, spaces); });
        runner.run_all(report, "oracle.cxk",
                       [&] { return oracle_compare_cxx(k, spaces, opt.rings); });

        runner.run(report, "bdga.reduction", [&] {
            if (std::any_of(spaces.begin(), spaces.end(),
                            [](const SpacePresentation& s) { return s.has_differential(); }))
                return CheckResult::skip("bdga.reduction",
                                         "spaces already carry differentials");
            Spaces dgas = spaces;
            for (auto& s : dgas) s.diff = std::vector<Term>(s.gen_count());
            BxkModel lifted = build_b_dga(k, dgas);
            if (lifted.model.complex.size() != bxk.model.complex.size())
                return CheckResult::fail("bdga.reduction", "basis size changed");
            for (int i = 0; i < bxk.model.complex.size(); ++i) {
                if (lifted.model.complex.differential_of(i) !=
                    bxk.model.complex.differential_of(i))
                    return CheckResult::fail("bdga.reduction",
                                             "differential changed at " +
                                                 bxk.model.complex.monomial(i).label);
                for (int j = 0; j < bxk.model.complex.size(); ++j)
                    if (lifted.product.product(i, j) != bxk.product.product(i, j))
                        return CheckResult::fail("bdga.reduction", "product changed");
            }
            return CheckResult::pass("bdga.reduction");
        });
    }

    report.sort_by_id();
    return report;
}

}  // namespace polycoh
