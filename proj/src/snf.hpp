// Exact integer matrix routines: Smith normal form with unimodular
// transforms, and the modular solvers built on top of it.  All other
// cohomology machinery reduces to these.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pontra::snf {

using i64 = long long;
using Mat = std::vector<std::vector<i64>>;

Mat identity(std::size_t k);
Mat mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

// S = U * A * V with U, V unimodular.  diag holds the invariant factors
// d_1 | d_2 | ... (positive), rank their count.  Uinv, Vinv are the exact
// inverses of U and V.
struct SmithForm {
    Mat S;
    Mat U, Uinv;
    Mat V, Vinv;
    std::vector<i64> diag;
    int rank = 0;
};

SmithForm smith(const Mat& a, std::size_t ncols = static_cast<std::size_t>(-1));

// One solution of A x = b over the integers, if any.
std::optional<std::vector<i64>> solve_integer(const Mat& a, const std::vector<i64>& b);

// One solution of A x = b (mod n), coordinates reduced into [0, n).
std::optional<std::vector<i64>> solve_mod(const Mat& a, const std::vector<i64>& b, i64 n);

// Generating set of { x in (Z/n)^cols : A x = 0 (mod n) }.
std::vector<std::vector<i64>> kernel_mod(const Mat& a, i64 n);

// Presentation of the finite abelian group L/M where
//   L = { x in Z^c : A x = 0 (mod n) }   (contains n Z^c)
//   M = column lattice of B + n Z^c       (requires A*B = 0 over Z)
// factors lists the invariant factors > 1; rep column i generates the
// i-th factor; reduce() maps an element of L to its class coordinates.
struct QuotientGroup {
    std::vector<i64> factors;
    std::vector<std::vector<i64>> reps;   // each length c, reduced mod n
    // internals used by reduce()
    Mat bk_u, bk_v;                       // smith data of the L-basis
    std::vector<i64> bk_diag;
    Mat uc;                               // row transform of the relation matrix
    std::vector<i64> all_factors;         // incl. factors == 1
    i64 n = 0;

    std::vector<i64> reduce(const std::vector<i64>& x) const;
};

QuotientGroup quotient_mod(const Mat& a, const Mat& b, i64 n);

// Presentation of col(a)/col(b) for integer matrices with k rows whose
// columns span finite-index sublattices of Z^k, col(b) inside col(a).
struct LatticeQuotient {
    std::vector<i64> factors;            // invariant factors > 1
    std::vector<std::vector<i64>> reps;  // length-k coset representatives
    // internals used by reduce()
    Mat a_u;
    std::vector<i64> a_diag;
    Mat r_u;
    std::vector<i64> all_factors;

    std::vector<i64> reduce(const std::vector<i64>& x) const;  // x in col(a)
};

LatticeQuotient lattice_quotient(const Mat& a, const Mat& b);

i64 gcd_i64(i64 a, i64 b);
i64 mod_pos(i64 a, i64 n);
// Inverse of a modulo n for gcd(a, n) = 1.
i64 mod_inverse(i64 a, i64 n);

}  // namespace pontra::snf
