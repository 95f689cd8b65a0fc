#include "photocount/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "photocount/distribution.hpp"
#include "photocount/mc.hpp"
#include "photocount/moments.hpp"
#include "photocount/reference.hpp"
#include "photocount/rpoly.hpp"

namespace photocount {

namespace {

double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return 0.0;
    return std::fabs(a - b) / scale;
}

std::string fmtctx(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void add(VerifyReport& rep, std::string check, std::string context, double lhs, double rhs) {
    rep.rows.push_back(VerifyRow{std::move(check), std::move(context), lhs, rhs, lhs <= rhs});
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
    VerifyReport rep{{}, true};

    // a-priori coefficient inequalities, one aggregated row per estimate and tau
    for (double tau : opt.taus) {
        const InequalityReport ineq = inequality_suite(opt.max_m, tau);
        std::map<std::string, const InequalityRecord*> worst;
        for (const auto& r : ineq.records) {
            auto [it, inserted] = worst.emplace(r.name, &r);
            if (!inserted && r.margin < it->second->margin) it->second = &r;
        }
        for (const auto& [name, r] : worst)
            add(rep, "inequality:" + name,
                "tau=" + fmtctx(tau) + " worst " + r->context, r->lhs, r->rhs);
    }

    // direct series vs closed forms on the route overlap
    {
        const RPolyTable table(13);
        for (double tau : {0.8, 1.0, 1.2}) {
            double worst = 0.0;
            for (std::size_t m = 0; m <= 12; ++m) {
                const auto [ud, vd] = uv_direct(m, tau);
                const auto [uc, vc] = uv_closed(m, tau, table);
                worst = std::max({worst, rel_diff(ud, uc), rel_diff(vd, vc)});
            }
            add(rep, "uv-two-path", "tau=" + fmtctx(tau) + " m<=12", worst, 1e-8);
        }
    }

    // closed-form fixtures and truncated-sum normalization on the grid
    for (double tau : {0.1, 0.25, 0.5, 1.0, 2.0}) {
        for (double s : {0.01, 0.1, 0.3}) {
            const ModelParams params(1.0, s, tau);
            const std::string ctx = "tau=" + fmtctx(tau) + " sigma/nu2=" + fmtctx(s);

            const std::vector<double> x = x_coeffs(3, w_coeffs(3, tau));
            double worst_x = 0.0;
            for (std::size_t n = 1; n <= 3; ++n)
                worst_x = std::max(worst_x, rel_diff(x[n], reference::x_closed(n, tau)));
            add(rep, "fixtures:x", ctx, worst_x, 1e-10);

            double worst_p = 0.0;
            for (std::size_t order = 0; order <= 3; ++order) {
                const DistApprox d = approx_dist(order, params);
                for (std::size_t n = 0; n <= order; ++n)
                    worst_p = std::max(worst_p,
                                       rel_diff(d.probs[n], reference::p_closed(n, order, params)));
            }
            add(rep, "fixtures:p", ctx, worst_p, 1e-10);

            double worst_sum = 0.0;
            for (std::size_t order = 0; order <= 8; ++order) {
                const DistApprox d = approx_dist(order, params);
                double sum = 0.0;
                for (double p : d.probs) sum += p;
                worst_sum = std::max(worst_sum, std::fabs(sum - 1.0));
            }
            add(rep, "normalization", ctx + " N<=8", worst_sum, 1e-12);
        }
    }

    // Monte-Carlo cross-checks
    if (opt.samples > 0) {
        const ModelParams params(opt.nu, opt.sigma, opt.t_phys);
        const MomentTable mt = moments(2, params);
        const auto est = mc::estimate_moments(params, 2, opt.samples, opt.steps,
                                              opt.seed, opt.threads);
        for (std::size_t n = 1; n <= 2; ++n)
            add(rep, "mc:moment", "n=" + std::to_string(n),
                std::fabs(est[n].value - mt.moments[n]), 3.0 * est[n].std_error);

        const DistApprox d3 = approx_dist(3, params);
        const auto pn = mc::estimate_pn(params, 3, opt.samples, opt.steps,
                                        opt.seed + 1, opt.threads);
        const double bound = d3.bound ? *d3.bound : 0.0;
        for (std::size_t n = 0; n <= 3; ++n)
            add(rep, "mc:pn", "n=" + std::to_string(n) + " N=3",
                std::fabs(pn[n].value - d3.probs[n]), bound + 3.0 * pn[n].std_error);

        const double lambda = 1.0 / mt.moments[1];
        const auto lap = mc::estimate_laplace(params, lambda, opt.samples, opt.steps,
                                              opt.seed + 2, opt.threads);
        add(rep, "mc:laplace", "lambda=1/M1",
            std::fabs(lap.value - gen_func(EvalPoint(params, lambda), params)),
            3.0 * lap.std_error);
    }

    rep.all_pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                               [](const VerifyRow& r) { return r.pass; });
    return rep;
}

}  // namespace photocount
