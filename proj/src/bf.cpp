#include "padl/bf.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace padl {

u64 checked_pow(u64 p, unsigned e) {
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<u64>::max() / p) throw padl_error("p-power overflow");
        r *= p;
    }
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    if (b != 0 && a > std::numeric_limits<u64>::max() / b) throw padl_error("order overflow");
    return a * b;
}

u64 FiniteAbelianPGroup::order() const {
    u64 r = 1;
    for (unsigned e : exps) r = checked_mul(r, checked_pow(p, e));
    return r;
}

bool next_element(const FiniteAbelianPGroup& g, Element& e) {
    for (unsigned i = 0; i < g.rank(); ++i) {
        if (++e[i] < g.coord_mod(i)) return true;
        e[i] = 0;
    }
    return false;
}

namespace {

unsigned vp_u64(u64 x, u64 p, unsigned cap) {
    unsigned v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return x == 0 ? cap : v;
}

i64 mod_pos(i64 x, u64 m) {
    i64 r = x % static_cast<i64>(m);
    return r < 0 ? r + static_cast<i64>(m) : r;
}

}  // namespace

void Homomorphism::validate() const {
    if (matrix.size() != codomain.rank()) throw schema_error("d: row count != codomain rank");
    for (const auto& row : matrix)
        if (row.size() != domain.rank()) throw schema_error("d: column count != domain rank");
    if (domain.p != codomain.p) throw schema_error("d: mixed primes");
    // column i is killed by p^{r_i}: v(M_{ji}) >= s_j - r_i
    for (unsigned j = 0; j < codomain.rank(); ++j)
        for (unsigned i = 0; i < domain.rank(); ++i) {
            unsigned need = codomain.exps[j] > domain.exps[i] ? codomain.exps[j] - domain.exps[i] : 0;
            u64 e = static_cast<u64>(mod_pos(matrix[j][i], checked_pow(domain.p, codomain.exps[j])));
            if (e != 0 && vp_u64(e, domain.p, codomain.exps[j]) < need)
                throw schema_error("d does not respect generator orders");
        }
}

Element Homomorphism::apply(const Element& a) const {
    assert(a.size() == domain.rank());
    Element out(codomain.rank(), 0);
    for (unsigned j = 0; j < codomain.rank(); ++j) {
        u64 mod = codomain.coord_mod(j);
        unsigned __int128 acc = 0;
        for (unsigned i = 0; i < domain.rank(); ++i)
            acc += static_cast<unsigned __int128>(static_cast<u64>(mod_pos(matrix[j][i], mod))) * a[i];
        out[j] = static_cast<u64>(acc % mod);
    }
    return out;
}

void Pairing::validate() const {
    if (matrix.size() != left.rank()) throw schema_error("pairing: row count != |C| rank");
    for (const auto& row : matrix)
        if (row.size() != right.rank()) throw schema_error("pairing: column count != |B| rank");
    if (left.p != right.p) throw schema_error("pairing: mixed primes");
    u64 pm = checked_pow(left.p, m);
    for (unsigned i = 0; i < left.rank(); ++i)
        for (unsigned j = 0; j < right.rank(); ++j) {
            u64 e = static_cast<u64>(mod_pos(matrix[i][j], static_cast<i64>(pm)));
            if (e == 0) continue;
            unsigned v = vp_u64(e, left.p, m);
            unsigned need_i = m > left.exps[i] ? m - left.exps[i] : 0;
            unsigned need_j = m > right.exps[j] ? m - right.exps[j] : 0;
            if (v < std::max(need_i, need_j)) throw schema_error("pairing not bi-additive on the given orders");
        }
}

u64 Pairing::value(const Element& c, const Element& b) const {
    u64 pm = checked_pow(left.p, m);
    unsigned __int128 acc = 0;
    for (unsigned i = 0; i < left.rank(); ++i) {
        if (c[i] == 0) continue;
        unsigned __int128 row = 0;
        for (unsigned j = 0; j < right.rank(); ++j)
            row += static_cast<unsigned __int128>(static_cast<u64>(mod_pos(matrix[i][j], static_cast<i64>(pm)))) *
                   (b[j] % pm);
        acc += (c[i] % pm) * (row % pm);
    }
    return static_cast<u64>(acc % pm);
}

bool Pairing::is_perfect() const {
    // c -> <c, .> into Hom(B, (1/p^m)Z/Z); bijective iff trivial kernel and
    // matching orders.
    u64 dual_order = 1;
    for (unsigned e : right.exps) dual_order = checked_mul(dual_order, checked_pow(left.p, std::min(e, m)));
    if (left.order() != dual_order) return false;
    std::vector<std::vector<i64>> mat(right.rank(), std::vector<i64>(left.rank(), 0));
    for (unsigned i = 0; i < left.rank(); ++i)
        for (unsigned j = 0; j < right.rank(); ++j) mat[j][i] = matrix[i][j];
    std::vector<unsigned> row_mods(right.rank(), m);
    return congruence_kernel_order(left, mat, row_mods, left.p) == 1;
}

void BFInstance::validate() const {
    if (p < 3) throw schema_error("p must be an odd prime >= 3");
    for (u64 d2 = 2; d2 * d2 <= p; ++d2)
        if (p % d2 == 0) throw schema_error("p must be prime");
    if (m < 1) throw schema_error("m must be >= 1");
    if (A.p != p || B.p != p || C.p != p) throw schema_error("group prime mismatch");
    if (d.domain.exps != A.exps || d.codomain.exps != C.exps) throw schema_error("d must map A to C");
    if (pairing.left.exps != C.exps || pairing.right.exps != B.exps)
        throw schema_error("pairing must live on C x B");
    if (pairing.m != m) throw schema_error("pairing level != m");
    d.validate();
    pairing.validate();
    if (graded()) {
        if (!grading_B || !grading_C) throw schema_error("grading must cover A, B and C");
        if (grading_A->size() != A.rank() || grading_B->size() != B.rank() || grading_C->size() != C.rank())
            throw schema_error("grading length mismatch");
        unsigned pm1 = static_cast<unsigned>(p - 1);
        for (unsigned j = 0; j < C.rank(); ++j)
            for (unsigned i = 0; i < A.rank(); ++i)
                if (d.matrix[j][i] % static_cast<i64>(checked_pow(p, C.exps[j])) != 0 &&
                    (*grading_C)[j] % pm1 != (*grading_A)[i] % pm1)
                    throw schema_error("d is not equivariant for the given grading");
        for (unsigned i = 0; i < C.rank(); ++i)
            for (unsigned j = 0; j < B.rank(); ++j)
                if (pairing.matrix[i][j] % static_cast<i64>(checked_pow(p, m)) != 0 &&
                    ((*grading_C)[i] + (*grading_B)[j]) % pm1 != 0)
                    throw schema_error("pairing does not pair level k with level -k");
    }
}

Phase bf_value(const BFInstance& inst, const Element& a, const Element& b) {
    if (a.size() != inst.A.rank() || b.size() != inst.B.rank())
        throw schema_error("bf_value: coordinate length mismatch");
    for (unsigned i = 0; i < a.size(); ++i)
        if (a[i] >= inst.A.coord_mod(i)) throw schema_error("bf_value: A-coordinate out of range");
    for (unsigned j = 0; j < b.size(); ++j)
        if (b[j] >= inst.B.coord_mod(j)) throw schema_error("bf_value: B-coordinate out of range");
    return Phase{inst.m, inst.pairing.value(inst.d.apply(a), b)};
}

namespace kernels {

namespace {

// w[j] = <d(a), e_j> for the current a
void pair_row(const BFInstance& inst, const Element& da, std::vector<u64>& w) {
    u64 pm = checked_pow(inst.p, inst.m);
    for (unsigned j = 0; j < inst.B.rank(); ++j) {
        unsigned __int128 acc = 0;
        for (unsigned i = 0; i < inst.C.rank(); ++i)
            acc += static_cast<unsigned __int128>(static_cast<u64>(
                       ((inst.pairing.matrix[i][j] % static_cast<i64>(pm)) + static_cast<i64>(pm)) %
                       static_cast<i64>(pm))) *
                   da[i];
        w[j] = static_cast<u64>(acc % pm);
    }
}

void tally_b_loop(const BFInstance& inst, const std::vector<u64>& w, std::vector<u64>& tally) {
    u64 pm = checked_pow(inst.p, inst.m);
    Element b(inst.B.rank(), 0);
    // phase = sum_j w_j b_j; updated incrementally while iterating b
    u64 phase = 0;
    while (true) {
        ++tally[phase];
        unsigned i = 0;
        for (; i < inst.B.rank(); ++i) {
            if (++b[i] < inst.B.coord_mod(i)) {
                phase = (phase + w[i]) % pm;
                break;
            }
            // coordinate wraps from max to 0: subtract w_i * (max)
            u64 back = (w[i] % pm) * ((inst.B.coord_mod(i) - 1) % pm) % pm;
            phase = (phase + pm - back % pm) % pm;
            b[i] = 0;
        }
        if (i == inst.B.rank()) break;
        if (inst.B.rank() == 0) break;
    }
}

}  // namespace

std::vector<u64> bf_tally_serial(const BFInstance& inst) {
    u64 pm = checked_pow(inst.p, inst.m);
    std::vector<u64> tally(pm, 0);
    std::vector<u64> w(inst.B.rank());
    Element a(inst.A.rank(), 0);
    if (inst.A.rank() == 0 || inst.B.rank() == 0) {
        // degenerate factors: all phases are 0
        tally[0] = checked_mul(inst.A.order(), inst.B.order());
        return tally;
    }
    do {
        pair_row(inst, inst.d.apply(a), w);
        tally_b_loop(inst, w, tally);
    } while (next_element(inst.A, a));
    return tally;
}

std::vector<u64> bf_tally_omp(const BFInstance& inst) {
    u64 pm = checked_pow(inst.p, inst.m);
    if (inst.A.rank() == 0 || inst.B.rank() == 0) return bf_tally_serial(inst);
    u64 na = inst.A.order();
    std::vector<u64> tally(pm, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<u64> local(pm, 0);
        std::vector<u64> w(inst.B.rank());
#pragma omp for schedule(static) nowait
        for (long long ai = 0; ai < static_cast<long long>(na); ++ai) {
            // decode index -> coordinates
            Element a(inst.A.rank());
            u64 rest = static_cast<u64>(ai);
            for (unsigned i = 0; i < inst.A.rank(); ++i) {
                u64 mod = inst.A.coord_mod(i);
                a[i] = rest % mod;
                rest /= mod;
            }
            pair_row(inst, inst.d.apply(a), w);
            tally_b_loop(inst, w, local);
        }
#pragma omp critical
        for (u64 c = 0; c < pm; ++c) tally[c] += local[c];
    }
#else
    tally = bf_tally_serial(inst);
#endif
    return tally;
}

}  // namespace kernels

i64 bf_sum_bruteforce(const BFInstance& inst, u64 pair_bound) {
    inst.validate();
    u64 pairs = checked_mul(inst.A.order(), inst.B.order());
    if (pairs > pair_bound)
        throw padl_error("enumeration bound exceeded: " + std::to_string(pairs) + " pairs");
    std::vector<u64> tally = kernels::bf_tally_omp(inst);

    // reduce sum N_c x^c mod Phi_{p^m}(x) = sum_{i<p} x^{i p^{m-1}}
    u64 pm = checked_pow(inst.p, inst.m);
    u64 phi = pm / inst.p * (inst.p - 1);
    std::vector<i64> poly(tally.begin(), tally.end());
    for (u64 d = pm; d-- > phi;) {
        i64 lead = poly[d];
        if (lead == 0) continue;
        poly[d] = 0;
        // x^d = x^{d-phi} * x^{phi}, x^{phi} = -sum_{i<p-1} x^{i p^{m-1}}
        for (u64 i = 0; i + 1 < inst.p; ++i) poly[d - phi + i * (pm / inst.p)] -= lead;
    }
    for (u64 c = 1; c < phi; ++c)
        if (poly[c] != 0)
            throw non_integer_sum("cyclotomic reduction left x^" + std::to_string(c) +
                                  " with coefficient " + std::to_string(poly[c]));
    return poly[0];
}

std::vector<unsigned> snf_valuations(std::vector<std::vector<i64>> mat, u64 p, unsigned cap) {
    u64 mod = checked_pow(p, cap);
    size_t rows = mat.size();
    size_t cols = rows ? mat[0].size() : 0;
    for (auto& row : mat)
        for (auto& x : row) x = mod_pos(x, mod);
    std::vector<unsigned> divisors;
    size_t s = 0;
    while (s < rows && s < cols) {
        // minimal-valuation pivot; ties -> lowest row, then column
        unsigned best = cap + 1;
        size_t br = s, bc = s;
        for (size_t r = s; r < rows; ++r)
            for (size_t c = s; c < cols; ++c) {
                u64 x = static_cast<u64>(mat[r][c]);
                if (x == 0) continue;
                unsigned v = vp_u64(x, p, cap);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                }
            }
        if (best > cap) break;  // remaining block is 0 mod p^cap
        std::swap(mat[s], mat[br]);
        for (auto& row : mat) std::swap(row[s], row[bc]);
        // clear row and column using the unit part of the pivot
        u64 ppow = checked_pow(p, best);
        u64 unit = static_cast<u64>(mat[s][s]) / ppow;
        u64 uinv = 1;
        {  // inverse of unit mod p^cap
            u64 phi = mod / p * (p - 1), e = phi - 1, b = unit % mod;
            while (e) {
                if (e & 1) uinv = static_cast<u64>((static_cast<unsigned __int128>(uinv) * b) % mod);
                b = static_cast<u64>((static_cast<unsigned __int128>(b) * b) % mod);
                e >>= 1;
            }
        }
        for (size_t r = s + 1; r < rows; ++r) {
            u64 x = static_cast<u64>(mat[r][s]);
            if (x == 0) continue;
            u64 mult = static_cast<u64>((static_cast<unsigned __int128>(x / ppow) * uinv) % mod);
            for (size_t c = s; c < cols; ++c) {
                i64 v = mat[r][c] - static_cast<i64>(static_cast<u64>(
                                        (static_cast<unsigned __int128>(mult) * static_cast<u64>(mat[s][c])) % mod));
                mat[r][c] = mod_pos(v, mod);
            }
        }
        for (size_t c = s + 1; c < cols; ++c) {
            u64 x = static_cast<u64>(mat[s][c]);
            if (x == 0) continue;
            u64 mult = static_cast<u64>((static_cast<unsigned __int128>(x / ppow) * uinv) % mod);
            for (size_t r = s; r < rows; ++r) {
                i64 v = mat[r][c] - static_cast<i64>(static_cast<u64>(
                                        (static_cast<unsigned __int128>(mult) * static_cast<u64>(mat[r][s])) % mod));
                mat[r][c] = mod_pos(v, mod);
            }
        }
        divisors.push_back(best);
        ++s;
    }
    return divisors;
}

u64 congruence_kernel_order(const FiniteAbelianPGroup& A, const std::vector<std::vector<i64>>& mat,
                            const std::vector<unsigned>& row_mods, u64 p) {
    // kernel of A -> prod Z/p^{mods_j}: |A| * |coker| / prod p^{mods_j},
    // coker from SNF of [M | diag(p^{mods_j})]
    size_t rows = mat.size();
    assert(row_mods.size() == rows);
    unsigned cap = 1;
    for (unsigned mj : row_mods) cap = std::max(cap, mj + 1);
    std::vector<std::vector<i64>> aug(rows, std::vector<i64>(A.rank() + rows, 0));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < A.rank(); ++c) aug[r][c] = mat[r][c];
        aug[r][A.rank() + r] = static_cast<i64>(checked_pow(p, row_mods[r]));
    }
    std::vector<unsigned> divs = snf_valuations(std::move(aug), p, cap);
    // all rows must yield a divisor (diag block guarantees nonzero)
    assert(divs.size() == rows);
    long expo = 0;
    for (unsigned e : A.exps) expo += e;
    for (unsigned e : divs) expo += e;
    for (unsigned mj : row_mods) expo -= mj;
    assert(expo >= 0);
    return checked_pow(p, static_cast<unsigned>(expo));
}

u64 bf_sum_closed_form(const BFInstance& inst) {
    inst.validate();
    u64 pm = checked_pow(inst.p, inst.m);
    // composite W = Q^T d : A -> (Z/p^m)^{rank B}
    std::vector<std::vector<i64>> W(inst.B.rank(), std::vector<i64>(inst.A.rank(), 0));
    for (unsigned j = 0; j < inst.B.rank(); ++j)
        for (unsigned i = 0; i < inst.A.rank(); ++i) {
            unsigned __int128 acc = 0;
            for (unsigned l = 0; l < inst.C.rank(); ++l) {
                u64 q = static_cast<u64>(mod_pos(inst.pairing.matrix[l][j], pm));
                u64 dm = static_cast<u64>(mod_pos(inst.d.matrix[l][i], checked_pow(inst.p, inst.C.exps[l])));
                acc += static_cast<unsigned __int128>(q) * dm;
            }
            W[j][i] = static_cast<i64>(static_cast<u64>(acc % pm));
        }
    std::vector<unsigned> row_mods(inst.B.rank(), inst.m);
    u64 ker = congruence_kernel_order(inst.A, W, row_mods, inst.p);
    return checked_mul(ker, inst.B.order());
}

namespace {

BFInstance sub_instance(const BFInstance& inst, unsigned k) {
    unsigned pm1 = static_cast<unsigned>(inst.p - 1);
    auto pick = [&](const FiniteAbelianPGroup& g, const std::vector<unsigned>& lv, unsigned want,
                    std::vector<unsigned>& idx) {
        FiniteAbelianPGroup out{g.p, {}};
        for (unsigned i = 0; i < g.rank(); ++i)
            if (lv[i] % pm1 == want % pm1) {
                out.exps.push_back(g.exps[i]);
                idx.push_back(i);
            }
        return out;
    };
    std::vector<unsigned> ia, ib, ic;
    BFInstance sub;
    sub.p = inst.p;
    sub.m = inst.m;
    sub.A = pick(inst.A, *inst.grading_A, k, ia);
    sub.B = pick(inst.B, *inst.grading_B, (pm1 - k % pm1) % pm1, ib);
    sub.C = pick(inst.C, *inst.grading_C, k, ic);
    sub.d.domain = sub.A;
    sub.d.codomain = sub.C;
    sub.d.matrix.assign(sub.C.rank(), std::vector<i64>(sub.A.rank(), 0));
    for (unsigned j = 0; j < ic.size(); ++j)
        for (unsigned i = 0; i < ia.size(); ++i) sub.d.matrix[j][i] = inst.d.matrix[ic[j]][ia[i]];
    sub.pairing.left = sub.C;
    sub.pairing.right = sub.B;
    sub.pairing.m = inst.m;
    sub.pairing.matrix.assign(sub.C.rank(), std::vector<i64>(sub.B.rank(), 0));
    for (unsigned i = 0; i < ic.size(); ++i)
        for (unsigned j = 0; j < ib.size(); ++j) sub.pairing.matrix[i][j] = inst.pairing.matrix[ic[i]][ib[j]];
    return sub;
}

}  // namespace

GradedSum graded_bf_sum(const BFInstance& inst) {
    if (!inst.graded()) throw schema_error("graded_bf_sum requires a grading");
    inst.validate();
    unsigned pm1 = static_cast<unsigned>(inst.p - 1);
    // levels occurring in A (or paired through B)
    std::vector<bool> seen(pm1, false);
    for (unsigned lv : *inst.grading_A) seen[lv % pm1] = true;
    for (unsigned lv : *inst.grading_B) seen[(pm1 - lv % pm1) % pm1] = true;

    GradedSum out;
    out.total = 1;
    for (unsigned k = 0; k < pm1; ++k) {
        if (!seen[k]) continue;
        u64 s = bf_sum_closed_form(sub_instance(inst, k));
        out.per_level[k] = s;
        out.total = checked_mul(out.total, s);
    }
    return out;
}

u64 prop21_product(u64 a, u64 b, u64 c, u64 p) {
    for (u64 x : {a, b, c}) {
        u64 t = x;
        while (t % p == 0) t /= p;
        if (t != 1) throw padl_error("prop21_product: order " + std::to_string(x) + " is not a power of " +
                                     std::to_string(p));
    }
    return checked_mul(checked_mul(a, b), c);
}

u64 unit_eigenspace_order(unsigned k, unsigned m, u64 p) {
    unsigned pm1 = static_cast<unsigned>(p - 1);
    if (k % pm1 == 1) throw padl_error("unit_eigenspace_order: k = 1 mod (p-1) is excluded");
    return (k % 2 == 1) ? 1 : checked_pow(p, m);
}

u64 stabilization_limit(const std::vector<u64>& values, unsigned m_start, StabilizationMode mode, u64 p) {
    if (values.size() < 3) throw not_stabilized("need at least 3 consecutive m-values");
    std::vector<u64> v = values;
    if (mode == StabilizationMode::divided_by_pm) {
        for (size_t i = 0; i < v.size(); ++i) {
            u64 pm = checked_pow(p, m_start + static_cast<unsigned>(i));
            if (v[i] % pm != 0) throw not_stabilized("entry not divisible by p^m in divided mode");
            v[i] /= pm;
        }
    }
    size_t n = v.size();
    if (v[n - 1] != v[n - 2]) throw not_stabilized();
    return v[n - 1];
}

BFInstance random_instance(std::mt19937_64& rng, const RandomInstanceParams& params) {
    auto pick = [&](u64 lo, u64 hi) { return lo + rng() % (hi - lo + 1); };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BFInstance inst;
        inst.p = params.primes[rng() % params.primes.size()];
        inst.m = static_cast<unsigned>(pick(1, params.max_m));
        u64 pm = checked_pow(inst.p, inst.m);
        auto rand_group = [&]() {
            FiniteAbelianPGroup g{inst.p, {}};
            unsigned rank = static_cast<unsigned>(pick(1, params.max_rank));
            for (unsigned i = 0; i < rank; ++i) g.exps.push_back(static_cast<unsigned>(pick(1, params.max_exp)));
            return g;
        };
        inst.A = rand_group();
        inst.C = rand_group();
        if (params.force_perfect) {
            // B = dual of C at level m: exponents min(c_i, m)
            inst.B.p = inst.p;
            for (unsigned e : inst.C.exps) inst.B.exps.push_back(std::min(e, inst.m));
        } else {
            inst.B = rand_group();
        }
        if (checked_mul(inst.A.order(), inst.B.order()) > params.pair_bound) continue;

        inst.d.domain = inst.A;
        inst.d.codomain = inst.C;
        inst.d.matrix.assign(inst.C.rank(), std::vector<i64>(inst.A.rank(), 0));
        for (unsigned j = 0; j < inst.C.rank(); ++j)
            for (unsigned i = 0; i < inst.A.rank(); ++i) {
                unsigned need = inst.C.exps[j] > inst.A.exps[i] ? inst.C.exps[j] - inst.A.exps[i] : 0;
                u64 step = checked_pow(inst.p, need);
                u64 mod = checked_pow(inst.p, inst.C.exps[j]);
                inst.d.matrix[j][i] = static_cast<i64>(step * (rng() % (mod / step)));
            }

        inst.pairing.left = inst.C;
        inst.pairing.right = inst.B;
        inst.pairing.m = inst.m;
        inst.pairing.matrix.assign(inst.C.rank(), std::vector<i64>(inst.B.rank(), 0));
        if (params.force_perfect) {
            // diagonal perfect pairing: <c_i, b_i> = c_i b_i / p^{min(c_i, m)}
            for (unsigned i = 0; i < inst.C.rank(); ++i)
                inst.pairing.matrix[i][i] = static_cast<i64>(checked_pow(inst.p, inst.m - std::min(inst.C.exps[i], inst.m)));
        } else {
            for (unsigned i = 0; i < inst.C.rank(); ++i)
                for (unsigned j = 0; j < inst.B.rank(); ++j) {
                    unsigned need_i = inst.m > inst.C.exps[i] ? inst.m - inst.C.exps[i] : 0;
                    unsigned need_j = inst.m > inst.B.exps[j] ? inst.m - inst.B.exps[j] : 0;
                    u64 step = checked_pow(inst.p, std::max(need_i, need_j));
                    inst.pairing.matrix[i][j] = static_cast<i64>(step * (rng() % (pm / step)));
                }
        }
        inst.validate();
        return inst;
    }
    throw padl_error("random_instance: could not satisfy the pair bound");
}

}  // namespace padl
