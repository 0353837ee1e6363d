#pragma once

#include "padl/bf.hpp"

namespace padl {

// Synthetic cyclotomic field space F^m_k.  Class data enters as input (the
// module does not compute class groups): e = v_p(|Cl[p^infty]_k|), with a
// cyclic eigenspace model.  The unit factor follows the parity rule for the
// unit eigenspace.
struct CyclotomicScenario {
    u64 p;
    unsigned k;  // eigen-level mod (p-1)
    unsigned e;  // |Cl[p^infty]_k| = p^e
};

// The graded instance at level m, with d = f2 o f1 built in:
// A = (units part) + Cl[p^m]_k, d kills the units part and reduces the
// class part; the pairing on C x B is perfect.
BFInstance build_scenario_instance(const CyclotomicScenario& sc, unsigned m);

// The three orders of the product formula for this instance:
// (|p^m Cl[p^{2m}]_k|, |(O_X^x/p^m)_k|, |(Cl/p^m)_k|).
struct ScenarioOrders {
    u64 ker_f2, units, cl_mod;
};
ScenarioOrders scenario_orders(const CyclotomicScenario& sc, unsigned m);

// Path-integral values over m = m_lo .. m_hi (closed form; brute force when
// within the pair bound, cross-checked).
std::vector<u64> scenario_sums(const CyclotomicScenario& sc, unsigned m_lo, unsigned m_hi,
                               u64 pair_bound = 1ull << 22);

// The stabilized right-hand side: plain mode for odd k, divided for even k.
u64 scenario_limit(const CyclotomicScenario& sc, unsigned m_lo, unsigned m_hi);

}  // namespace padl
