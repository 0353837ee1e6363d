#include "padl/theorem.hpp"

#include <sstream>

namespace padl {

namespace {

struct BranchData {
    CtxPtr ctx;
    TruncatedSeries series;
    WeierstrassData prep;
};

BranchData build_branch(u64 p, unsigned k, const TheoremOptions& opt) {
    unsigned M = opt.precision;
    while (true) {
        try {
            CtxPtr ctx = make_context(p, M);
            unsigned lambda = lambda_invariant(ctx, k, opt.bernoulli_bound);
            unsigned N = std::max(8u, 2 * (lambda + 1));
            BranchSpec spec(ctx, k, N);
            TruncatedSeries f = branch_by_interpolation(spec, opt.bernoulli_bound);
            WeierstrassData wd = weierstrass_prepare(f);
            return BranchData{ctx, std::move(f), std::move(wd)};
        } catch (const precision_exhausted&) {
            if (M >= opt.precision_ceiling) throw;
            M = std::min(2 * M, opt.precision_ceiling);
        }
    }
}

}  // namespace

unsigned lhs_exponent(const CtxPtr& ctx, unsigned k, unsigned n) {
    BranchSpec spec(ctx, k, 8);
    GroupRingElement z_image = branch_by_stickelberger(spec, n);
    unsigned e = resultant_valuation(z_image);
    return e;
}

TheoremReport run_theorem(u64 p, unsigned k, unsigned n, const TheoremOptions& opt) {
    TheoremReport rep;
    rep.p = p;
    rep.k = k;
    rep.n = n;

    unsigned M = opt.precision;
    while (true) {
        try {
            BranchData bd = build_branch(p, k, TheoremOptions{M, opt.precision_ceiling, opt.bernoulli_bound, opt.fixture});
            rep.precision = bd.ctx->M();
            rep.truncation = bd.series.N();
            rep.lambda = bd.prep.lambda;

            // growth table up to n, with the dual resultant routes at each level
            rep.growth.clear();
            long prev = -1;
            for (unsigned nn = 0; nn <= n; ++nn) {
                unsigned e = lhs_exponent(bd.ctx, k, nn);
                unsigned e_P = resultant_valuation(bd.prep.P, nn);
                if (e != e_P)
                    throw padl_error("LHS cross-check failed: image route " + std::to_string(e) +
                                     " vs distinguished-polynomial route " + std::to_string(e_P));
                rep.growth.push_back(GrowthRow{nn, e, prev < 0 ? -1 : static_cast<long>(e) - prev});
                prev = static_cast<long>(e);
            }
            rep.lhs_exponent = rep.growth.back().e;

            for (const auto& c : bd.prep.P.coeffs()) rep.P_coeffs.push_back(c.value().get_str());
            ShiftedPoly Q = shift_variable(bd.prep.P);
            for (const auto& c : Q.coeffs) rep.Q_coeffs.push_back(c.value().get_str());
            rep.calibration = calibrate_stickelberger(p, k);
            break;
        } catch (const precision_exhausted&) {
            if (M >= opt.precision_ceiling) throw;
            M = std::min(2 * M, opt.precision_ceiling);
            rep.P_coeffs.clear();
            rep.Q_coeffs.clear();
        }
    }

    // RHS: stabilized Gauss-sum over the synthetic field spaces.  Class data
    // comes from a fixture when given (verification), else from the
    // pipeline's own prediction (consistency).
    unsigned e_class;
    if (opt.fixture) {
        const Fixture& f = *opt.fixture;
        if (f.p != p || f.k % (p - 1) != k % (p - 1)) throw schema_error("fixture does not match (p, k)");
        auto it = f.e_by_level.find(n);
        if (it == f.e_by_level.end()) throw schema_error("fixture has no entry for level n=" + std::to_string(n));
        e_class = it->second;
        rep.mode = "verification";
    } else {
        e_class = rep.lhs_exponent;
        rep.mode = "consistency";
    }
    CyclotomicScenario sc{p, k % static_cast<unsigned>(p - 1), e_class};
    unsigned m_hi = e_class + 3;
    rep.rhs_order = scenario_limit(sc, 1, m_hi);
    rep.agree = rep.rhs_order == checked_pow(p, rep.lhs_exponent);
    return rep;
}

std::vector<GrowthRow> growth_table(u64 p, unsigned k, unsigned n_max, const TheoremOptions& opt) {
    unsigned M = opt.precision;
    while (true) {
        try {
            BranchData bd = build_branch(p, k, TheoremOptions{M, opt.precision_ceiling, opt.bernoulli_bound, {}});
            std::vector<GrowthRow> rows;
            long prev = -1;
            for (unsigned nn = 0; nn <= n_max; ++nn) {
                unsigned e = lhs_exponent(bd.ctx, k, nn);
                unsigned e_P = resultant_valuation(bd.prep.P, nn);
                if (e != e_P) throw padl_error("growth cross-check failed at level " + std::to_string(nn));
                rows.push_back(GrowthRow{nn, e, prev < 0 ? -1 : static_cast<long>(e) - prev});
                prev = static_cast<long>(e);
            }
            return rows;
        } catch (const precision_exhausted&) {
            if (M >= opt.precision_ceiling) throw;
            M = std::min(2 * M, opt.precision_ceiling);
        }
    }
}

nlohmann::ordered_json report_to_json(const TheoremReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["n"] = r.n;
    j["precision"] = r.precision;
    j["truncation"] = r.truncation;
    j["lhs_exponent"] = r.lhs_exponent;
    j["lambda"] = r.lambda;
    j["P"] = r.P_coeffs;
    j["Q"] = r.Q_coeffs;
    j["rhs_order"] = r.rhs_order;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& g : r.growth) {
        nlohmann::ordered_json row;
        row["n"] = g.n;
        row["e"] = g.e;
        if (g.delta >= 0) row["delta"] = g.delta;
        rows.push_back(row);
    }
    j["growth"] = rows;
    j["calibration"] = {{"twist", r.calibration.twist},
                        {"iota_sign", r.calibration.iota_sign},
                        {"global_sign", r.calibration.global_sign},
                        {"normalization", "1/p^{n+1}"}};
    j["mode"] = r.mode;
    j["verdict"] = r.agree ? "agree" : "disagree";
    return j;
}

std::string report_to_text(const TheoremReport& r) {
    std::ostringstream os;
    os << "p = " << r.p << "  k = " << r.k << "  n = " << r.n << "  (precision " << r.precision << ")\n";
    os << "lambda = " << r.lambda << "\n";
    os << "P(T)   = ";
    for (size_t i = r.P_coeffs.size(); i-- > 0;) {
        os << r.P_coeffs[i] << (i > 0 ? ("*T^" + std::to_string(i) + " + ") : "");
        if (i == r.P_coeffs.size() - 1 && i > 0) continue;
    }
    os << "\n";
    os << "LHS    = p^" << r.lhs_exponent << "  (|prod z(zeta-1)^{-1}|_p = p^" << r.lhs_exponent << ")\n";
    os << "RHS    = " << r.rhs_order << "  [" << r.mode << " mode]\n";
    os << "growth :";
    for (const auto& g : r.growth) os << "  e_" << g.n << "=" << g.e;
    os << "\n";
    os << "verdict: " << (r.agree ? "agree" : "DISAGREE") << "\n";
    return os.str();
}

}  // namespace padl
