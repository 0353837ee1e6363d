#include "padl/scenario.hpp"

namespace padl {

namespace {

unsigned min_u(unsigned a, unsigned b) { return a < b ? a : b; }

}  // namespace

ScenarioOrders scenario_orders(const CyclotomicScenario& sc, unsigned m) {
    // cyclic model Cl_k = Z/p^e:
    //   Cl[p^m]_k        = Z/p^{min(m,e)}
    //   (Cl/p^m)_k       = Z/p^{min(m,e)}
    //   p^m Cl[p^{2m}]_k = p^{min(2m,e) - min(m,e)}
    unsigned ker_f2 = min_u(2 * m, sc.e) - min_u(m, sc.e);
    u64 units = unit_eigenspace_order(sc.k, m, sc.p);
    return ScenarioOrders{checked_pow(sc.p, ker_f2), units, checked_pow(sc.p, min_u(m, sc.e))};
}

BFInstance build_scenario_instance(const CyclotomicScenario& sc, unsigned m) {
    unsigned pm1 = static_cast<unsigned>(sc.p - 1);
    if (sc.k % pm1 == 1) throw schema_error("scenario: k = 1 mod (p-1) is excluded");
    unsigned kb = (pm1 - sc.k % pm1) % pm1;  // level of B
    unsigned t = min_u(m, sc.e);             // exponent of the cyclic class factor at level m

    BFInstance inst;
    inst.p = sc.p;
    inst.m = m;

    bool units_factor = (sc.k % 2 == 0);  // Z/p^m for even k, trivial for odd
    bool class_factor = (t > 0);

    // A = units part + Cl[p^m]_k
    inst.A.p = sc.p;
    std::vector<unsigned> gA;
    if (units_factor) {
        inst.A.exps.push_back(m);
        gA.push_back(sc.k % pm1);
    }
    if (class_factor) {
        inst.A.exps.push_back(t);
        gA.push_back(sc.k % pm1);
    }
    // C = (Cl/p^m)_k, B its dual
    inst.C.p = sc.p;
    inst.B.p = sc.p;
    std::vector<unsigned> gB, gC;
    if (class_factor) {
        inst.C.exps.push_back(t);
        gC.push_back(sc.k % pm1);
        inst.B.exps.push_back(t);
        gB.push_back(kb);
    }

    // d = f2 o f1: f1 projects A onto its class summand (kernel = units part),
    // f2 is the reduction Cl[p^m] -> Cl/p^m, multiplication by p^{max(0,e-m)}
    // in cyclic coordinates.
    inst.d.domain = inst.A;
    inst.d.codomain = inst.C;
    inst.d.matrix.assign(inst.C.rank(), std::vector<i64>(inst.A.rank(), 0));
    if (class_factor) {
        unsigned shift = sc.e > m ? sc.e - m : 0;
        u64 mod = checked_pow(sc.p, t);
        u64 entry = shift >= t ? 0 : checked_pow(sc.p, shift) % mod;
        inst.d.matrix[0][inst.A.rank() - 1] = static_cast<i64>(entry);
    }

    // perfect pairing C x B: <c, b> = c b p^{m-t}
    inst.pairing.left = inst.C;
    inst.pairing.right = inst.B;
    inst.pairing.m = m;
    inst.pairing.matrix.assign(inst.C.rank(), std::vector<i64>(inst.B.rank(), 0));
    if (class_factor) inst.pairing.matrix[0][0] = static_cast<i64>(checked_pow(sc.p, m - t));

    inst.grading_A = gA;
    inst.grading_B = gB;
    inst.grading_C = gC;
    inst.validate();
    return inst;
}

std::vector<u64> scenario_sums(const CyclotomicScenario& sc, unsigned m_lo, unsigned m_hi, u64 pair_bound) {
    std::vector<u64> out;
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        BFInstance inst = build_scenario_instance(sc, m);
        u64 s = bf_sum_closed_form(inst);
        if (checked_mul(inst.A.order(), inst.B.order()) <= pair_bound) {
            i64 bf = bf_sum_bruteforce(inst, pair_bound);
            if (bf < 0 || static_cast<u64>(bf) != s)
                throw padl_error("scenario: brute force and closed form disagree");
        }
        out.push_back(s);
    }
    return out;
}

u64 scenario_limit(const CyclotomicScenario& sc, unsigned m_lo, unsigned m_hi) {
    std::vector<u64> sums = scenario_sums(sc, m_lo, m_hi);
    StabilizationMode mode = (sc.k % 2 == 0) ? StabilizationMode::divided_by_pm : StabilizationMode::plain;
    return stabilization_limit(sums, m_lo, mode, sc.p);
}

}  // namespace padl
