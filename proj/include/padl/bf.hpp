#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "padl/errors.hpp"

namespace padl {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// p-power with overflow guard.
u64 checked_pow(u64 p, unsigned e);
u64 checked_mul(u64 a, u64 b);

// Direct sum of Z/p^{r_i}.
struct FiniteAbelianPGroup {
    u64 p = 0;
    std::vector<unsigned> exps;  // r_i >= 1; empty = trivial group

    unsigned rank() const { return static_cast<unsigned>(exps.size()); }
    u64 order() const;
    u64 coord_mod(unsigned i) const { return checked_pow(p, exps[i]); }
};

using Element = std::vector<u64>;  // coordinates, coords[i] in [0, p^{r_i})

// Iterates all elements of a group in lexicographic coordinate order.
bool next_element(const FiniteAbelianPGroup& g, Element& e);

// Homomorphism between direct sums, column i = image of generator e_i.
struct Homomorphism {
    FiniteAbelianPGroup domain, codomain;
    std::vector<std::vector<i64>> matrix;  // [codomain.rank()][domain.rank()]

    void validate() const;  // column i must be killed by p^{r_i}
    Element apply(const Element& a) const;
};

// Bi-additive map C x B -> (1/p^m) Z/Z, entries as residues mod p^m.
struct Pairing {
    FiniteAbelianPGroup left, right;  // C, B
    unsigned m = 1;
    std::vector<std::vector<i64>> matrix;  // [left.rank()][right.rank()]

    void validate() const;
    u64 value(const Element& c, const Element& b) const;  // mod p^m
    bool is_perfect() const;
};

// exp(2 pi i c / p^m)
struct Phase {
    unsigned m;
    u64 c;  // canonical residue in [0, p^m)
};

// Finite BF data: d: A -> C and a pairing C x B -> (1/p^m)Z/Z.
struct BFInstance {
    u64 p = 0;
    unsigned m = 1;
    FiniteAbelianPGroup A, B, C;
    Homomorphism d;        // A -> C
    Pairing pairing;       // on C x B
    // optional grading: eigen-level mod (p-1) per direct summand
    std::optional<std::vector<unsigned>> grading_A, grading_B, grading_C;

    bool graded() const { return grading_A.has_value(); }
    void validate() const;  // shapes, well-definedness, equivariance if graded
};

Phase bf_value(const BFInstance& inst, const Element& a, const Element& b);

// Exact path integral by enumeration: tallies phase counts and reduces the
// cyclotomic sum through Phi_{p^m}.  Throws non_integer_sum if nonconstant
// coefficients survive (malformed instance).
i64 bf_sum_bruteforce(const BFInstance& inst, u64 pair_bound = (1ull << 22));

// |ker(b -> <d(.), b>)| * |B| via Smith normal form; handles imperfect
// pairings.
u64 bf_sum_closed_form(const BFInstance& inst);

struct GradedSum {
    std::map<unsigned, u64> per_level;  // k -> sum over F^m_k
    u64 total;                          // product over k
};

// Per-eigenlevel sums; requires grading and d equivariant.
GradedSum graded_bf_sum(const BFInstance& inst);

// |(p^m Cl[p^{2m}])_k| * |(O_X^x / p^m)_k| * |(Cl/p^m)_k|
u64 prop21_product(u64 a, u64 b, u64 c, u64 p);

// Lemma: trivial for odd k != 1, Z/p^m for even k.
u64 unit_eigenspace_order(unsigned k, unsigned m, u64 p);

enum class StabilizationMode { plain, divided_by_pm };

// Detect the eventual value of an m-indexed sequence (>= 3 consecutive
// entries, starting at m_start).  In divided mode entry m is divided by p^m
// first.  Throws not_stabilized.
u64 stabilization_limit(const std::vector<u64>& values, unsigned m_start, StabilizationMode mode, u64 p);

// --- helpers shared with tests -------------------------------------------

// Valuations of the elementary divisors of an integer matrix mod p^{cap},
// by pivoting on minimal-valuation entries (ties: lowest row, then column).
std::vector<unsigned> snf_valuations(std::vector<std::vector<i64>> mat, u64 p, unsigned cap);

// Order of {a in A : M a = 0 mod p^{mods_j} row-wise}; matrix columns follow
// A's generators.
u64 congruence_kernel_order(const FiniteAbelianPGroup& A, const std::vector<std::vector<i64>>& mat,
                            const std::vector<unsigned>& row_mods, u64 p);

struct RandomInstanceParams {
    std::vector<u64> primes{3, 5, 7};
    unsigned max_rank = 3;
    unsigned max_exp = 3;
    unsigned max_m = 3;
    u64 pair_bound = 1ull << 22;
    bool force_perfect = false;
};

BFInstance random_instance(std::mt19937_64& rng, const RandomInstanceParams& params);

namespace kernels {

// Histogram of <Q^T d(a), b> mod p^m over the full pair space.
std::vector<u64> bf_tally_serial(const BFInstance& inst);
std::vector<u64> bf_tally_omp(const BFInstance& inst);

}  // namespace kernels

}  // namespace padl
