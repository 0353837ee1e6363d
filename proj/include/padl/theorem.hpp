#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "padl/instance_io.hpp"
#include "padl/lfunction.hpp"
#include "padl/resultant.hpp"
#include "padl/scenario.hpp"

namespace padl {

struct GrowthRow {
    unsigned n;
    unsigned e;       // LHS exponent at level n
    long delta;       // e_n - e_{n-1}, -1 for n = 0
};

struct TheoremReport {
    u64 p;
    unsigned k, n;
    unsigned precision;                 // M actually used
    unsigned truncation;                // N of the interpolation series
    unsigned lhs_exponent;              // LHS = p^{-e} as an absolute value, |..|_p^{-1} = p^e
    unsigned lambda;
    std::vector<std::string> P_coeffs;  // distinguished polynomial, degree lambda
    std::vector<std::string> Q_coeffs;  // Q(t) = P(t-1)
    u64 rhs_order;                      // stabilized path-integral value
    std::vector<GrowthRow> growth;      // n' = 0..n
    Calibration calibration;
    std::string mode;                   // "consistency" | "verification"
    bool agree;
};

// LHS exponent e_n = v_p(Res(omega_n, z)) from the exact Stickelberger image,
// cross-checked against the distinguished-polynomial resultant (unit factors
// contribute nothing).  Retries with doubled precision up to the ceiling.
unsigned lhs_exponent(const CtxPtr& ctx, unsigned k, unsigned n);

struct TheoremOptions {
    unsigned precision = 8;      // starting M; doubled on precision exhaustion
    unsigned precision_ceiling = 64;
    unsigned bernoulli_bound = 500;
    std::optional<Fixture> fixture;  // verification mode when present
};

TheoremReport run_theorem(u64 p, unsigned k, unsigned n, const TheoremOptions& opt = {});

std::vector<GrowthRow> growth_table(u64 p, unsigned k, unsigned n_max, const TheoremOptions& opt = {});

nlohmann::ordered_json report_to_json(const TheoremReport& r);
std::string report_to_text(const TheoremReport& r);

}  // namespace padl
