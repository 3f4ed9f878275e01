#include "snf.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace pontra::snf {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

i64 chk_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

i64 chk_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

// The elimination itself runs in 128-bit arithmetic; transform entries can
// swell far past 64 bits mid-computation even when the results fit.
using i128 = __int128;
using MatW = std::vector<std::vector<i128>>;

i128 chk_add_w(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

i128 chk_mul_w(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

MatW widen(const Mat& a) {
    MatW r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
}

Mat narrow(const MatW& a) {
    Mat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i].reserve(a[i].size());
        for (i128 v : a[i]) {
            if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
                throw std::overflow_error("integer overflow in exact arithmetic");
            r[i].push_back(static_cast<i64>(v));
        }
    }
    return r;
}

MatW identity_w(std::size_t k) {
    MatW m(k, std::vector<i128>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

MatW mul_w(const MatW& a, const MatW& b) {
    std::size_t m = a.size();
    std::size_t k = b.size();
    std::size_t n = k ? b[0].size() : 0;
    MatW r(m, std::vector<i128>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] = chk_add_w(r[i][j], chk_mul_w(a[i][l], b[l][j]));
        }
    return r;
}

void row_addmul(MatW& m, std::size_t dst, std::size_t src, i128 q) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = chk_add_w(m[dst][j], chk_mul_w(q, m[src][j]));
}

void col_addmul(MatW& m, std::size_t dst, std::size_t src, i128 q) {
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i][dst] = chk_add_w(m[i][dst], chk_mul_w(q, m[i][src]));
}

void swap_rows(MatW& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(MatW& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(MatW& m, std::size_t r) {
    for (auto& v : m[r]) v = -v;
}

void negate_col(MatW& m, std::size_t c) {
    for (auto& row : m) row[c] = -row[c];
}

bool equal_w(const MatW& a, const MatW& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

i128 abs_w(i128 v) { return v < 0 ? -v : v; }

}  // namespace

i64 gcd_i64(i64 a, i64 b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

i64 mod_pos(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 mod_inverse(i64 a, i64 n) {
    // extended euclid on (a mod n, n)
    i64 r0 = n, r1 = mod_pos(a, n), t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_pos(t0, n);
}

Mat identity(std::size_t k) {
    Mat m(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

Mat mul(const Mat& a, const Mat& b) {
    std::size_t m = a.size();
    std::size_t k = b.size();
    std::size_t n = k ? b[0].size() : 0;
    Mat r(m, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mul: dimension mismatch");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i][j] = chk_add(r[i][j], chk_mul(a[i][l], b[l][j]));
        }
    }
    return r;
}

Mat transpose(const Mat& a) {
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    Mat r(n, std::vector<i64>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r[j][i] = a[i][j];
    return r;
}

SmithForm smith(const Mat& a, std::size_t ncols) {
    std::size_t m = a.size();
    std::size_t n = (ncols != npos) ? ncols : (m ? a[0].size() : 0);
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("smith: ragged matrix");

    MatW S = widen(a);
    MatW U = identity_w(m), Uinv = identity_w(m);
    MatW V = identity_w(n), Vinv = identity_w(n);

    auto do_swap_rows = [&](std::size_t x, std::size_t y) {
        swap_rows(S, x, y);
        swap_rows(U, x, y);
        swap_cols(Uinv, x, y);
    };
    auto do_swap_cols = [&](std::size_t x, std::size_t y) {
        swap_cols(S, x, y);
        swap_cols(V, x, y);
        swap_rows(Vinv, x, y);
    };
    auto do_row_addmul = [&](std::size_t dst, std::size_t src, i128 q) {
        // row_dst += q * row_src;  inverse: col_src -= q * col_dst on Uinv
        row_addmul(S, dst, src, q);
        row_addmul(U, dst, src, q);
        col_addmul(Uinv, src, dst, -q);
    };
    auto do_col_addmul = [&](std::size_t dst, std::size_t src, i128 q) {
        col_addmul(S, dst, src, q);
        col_addmul(V, dst, src, q);
        row_addmul(Vinv, src, dst, -q);
    };
    auto do_negate_row = [&](std::size_t r) {
        negate_row(S, r);
        negate_row(U, r);
        negate_col(Uinv, r);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        std::size_t pi = t, pj = t;
        i128 best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                i128 v = abs_w(S[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        do_swap_rows(t, pi);
        do_swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S[i][t] == 0) continue;
                i128 q = S[i][t] / S[t][t];
                do_row_addmul(i, t, -q);
                if (S[i][t] != 0) {
                    do_swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S[t][j] == 0) continue;
                i128 q = S[t][j] / S[t][t];
                do_col_addmul(j, t, -q);
                if (S[t][j] != 0) {
                    do_swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if (S[t][t] < 0) do_negate_row(t);

        bool redo = false;
        for (std::size_t i = t + 1; i < m && !redo; ++i)
            for (std::size_t j = t + 1; j < n && !redo; ++j)
                if (S[i][j] % S[t][t] != 0) {
                    do_row_addmul(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }

    // exactness guard: recompute the factorisation in wide arithmetic
    if (!equal_w(mul_w(mul_w(U, widen(a)), V), S) || !equal_w(mul_w(U, Uinv), identity_w(m)) ||
        !equal_w(mul_w(V, Vinv), identity_w(n)))
        throw std::logic_error("smith: transform verification failed");

    SmithForm f;
    f.S = narrow(S);
    f.U = narrow(U);
    f.Uinv = narrow(Uinv);
    f.V = narrow(V);
    f.Vinv = narrow(Vinv);
    f.rank = static_cast<int>(t);
    for (std::size_t i = 0; i < t; ++i) f.diag.push_back(f.S[i][i]);
    return f;
}

std::optional<std::vector<i64>> solve_integer(const Mat& a, const std::vector<i64>& b) {
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithForm f = smith(a, n);
    std::vector<i64> ub(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            ub[i] = chk_add(ub[i], chk_mul(f.U[i][j], b[j]));
    std::vector<i64> y(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < static_cast<std::size_t>(f.rank)) {
            if (ub[i] % f.diag[i] != 0) return std::nullopt;
            y[i] = ub[i] / f.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<i64> x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x[i] = chk_add(x[i], chk_mul(f.V[i][j], y[j]));
    return x;
}

std::optional<std::vector<i64>> solve_mod(const Mat& a, const std::vector<i64>& b, i64 n) {
    std::size_t m = a.size();
    std::size_t cols = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_mod: dimension mismatch");
    if (n <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
    SmithForm f = smith(a, cols);
    std::vector<i64> ub(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            ub[i] = chk_add(ub[i], chk_mul(f.U[i][j], b[j]));
        ub[i] = mod_pos(ub[i], n);
    }
    std::vector<i64> y(cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < static_cast<std::size_t>(f.rank)) {
            i64 s = f.diag[i];
            i64 g = gcd_i64(s, n);
            if (ub[i] % g != 0) return std::nullopt;
            if (g == n) continue;  // equation vacuous mod n
            i64 ns = n / g;
            i64 inv = mod_inverse((s / g) % ns, ns);
            y[i] = mod_pos((ub[i] / g) % ns * inv, ns);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<i64> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            x[i] = chk_add(x[i], chk_mul(f.V[i][j], y[j]));
        x[i] = mod_pos(x[i], n);
    }
    return x;
}

std::vector<std::vector<i64>> kernel_mod(const Mat& a, i64 n) {
    std::size_t m = a.size();
    std::size_t cols = m ? a[0].size() : 0;
    if (n <= 0) throw std::invalid_argument("kernel_mod: modulus must be positive");
    SmithForm f = smith(a, cols);
    std::vector<std::vector<i64>> gens;
    for (std::size_t j = 0; j < cols; ++j) {
        i64 scale = 1;
        if (j < static_cast<std::size_t>(f.rank)) {
            i64 g = gcd_i64(f.diag[j], n);
            scale = n / g;
            if (scale == n) continue;  // generator is trivial mod n
        }
        std::vector<i64> gen(cols, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < cols; ++i) {
            gen[i] = mod_pos(chk_mul(f.V[i][j], scale), n);
            nonzero = nonzero || gen[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

QuotientGroup quotient_mod(const Mat& a, const Mat& b, i64 n) {
    std::size_t m = a.size();
    std::size_t c = m ? a[0].size() : (b.size());
    if (!b.empty() && b.size() != c && c != 0)
        throw std::invalid_argument("quotient_mod: dimension mismatch");
    QuotientGroup q;
    q.n = n;
    if (c == 0) return q;

    SmithForm fa = smith(a, c);
    // basis of L = { x : A x = 0 mod n }: columns of V scaled per invariant factor
    Mat bk(c, std::vector<i64>(c, 0));
    for (std::size_t j = 0; j < c; ++j) {
        i64 scale = 1;
        if (j < static_cast<std::size_t>(fa.rank)) scale = n / gcd_i64(fa.diag[j], n);
        for (std::size_t i = 0; i < c; ++i) bk[i][j] = chk_mul(fa.V[i][j], scale);
    }
    SmithForm fb = smith(bk, c);
    if (fb.rank != static_cast<int>(c))
        throw std::logic_error("quotient_mod: cocycle lattice basis is singular");

    // relation generators: columns of B plus n * identity, in bk coordinates
    std::size_t l = b.empty() ? 0 : b[0].size();
    Mat rel(c, std::vector<i64>(l + c, 0));
    auto to_bk_coords = [&](const std::vector<i64>& x) {
        std::vector<i64> t(c, 0);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j)
                t[i] = chk_add(t[i], chk_mul(fb.U[i][j], x[j]));
        std::vector<i64> z(c, 0);
        for (std::size_t i = 0; i < c; ++i) {
            if (t[i] % fb.diag[i] != 0)
                throw std::invalid_argument("quotient_mod: vector outside the cocycle lattice");
            z[i] = t[i] / fb.diag[i];
        }
        std::vector<i64> w(c, 0);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j)
                w[i] = chk_add(w[i], chk_mul(fb.V[i][j], z[j]));
        return w;
    };
    for (std::size_t k = 0; k < l; ++k) {
        std::vector<i64> col(c);
        for (std::size_t i = 0; i < c; ++i) col[i] = b[i][k];
        auto w = to_bk_coords(col);
        for (std::size_t i = 0; i < c; ++i) rel[i][k] = w[i];
    }
    for (std::size_t k = 0; k < c; ++k) {
        std::vector<i64> col(c, 0);
        col[k] = n;
        auto w = to_bk_coords(col);
        for (std::size_t i = 0; i < c; ++i) rel[i][l + k] = w[i];
    }

    SmithForm fc = smith(rel, l + c);
    if (fc.rank != static_cast<int>(c))
        throw std::logic_error("quotient_mod: relation lattice not full rank");

    q.bk_u = fb.U;
    q.bk_v = fb.V;
    q.bk_diag = fb.diag;
    q.uc = fc.U;
    q.all_factors = fc.diag;

    for (std::size_t i = 0; i < c; ++i) {
        if (fc.diag[i] <= 1) continue;
        q.factors.push_back(fc.diag[i]);
        // representative: bk * (Uc^{-1} e_i)
        std::vector<i64> rep(c, 0);
        for (std::size_t r = 0; r < c; ++r) {
            i64 acc = 0;
            for (std::size_t s = 0; s < c; ++s)
                acc = chk_add(acc, chk_mul(bk[r][s], fc.Uinv[s][i]));
            rep[r] = mod_pos(acc, n);
        }
        q.reps.push_back(std::move(rep));
    }
    return q;
}

LatticeQuotient lattice_quotient(const Mat& a, const Mat& b) {
    std::size_t k = a.size();
    if (b.size() != k) throw std::invalid_argument("lattice_quotient: row count mismatch");
    SmithForm fa = smith(a, a.empty() ? 0 : a[0].size());
    if (fa.rank != static_cast<int>(k))
        throw std::invalid_argument("lattice_quotient: numerator lattice not of full rank");

    // basis of col(a): columns of Uinv scaled by the invariant factors;
    // basis coordinates of x are diag^{-1} (U x)
    auto basis_coords = [&](const std::vector<i64>& x) {
        std::vector<i64> t(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                t[i] = chk_add(t[i], chk_mul(fa.U[i][j], x[j]));
        for (std::size_t i = 0; i < k; ++i) {
            if (t[i] % fa.diag[i] != 0)
                throw std::invalid_argument("lattice_quotient: vector outside the lattice");
            t[i] /= fa.diag[i];
        }
        return t;
    };

    std::size_t l = b.empty() ? 0 : b[0].size();
    Mat w(k, std::vector<i64>(l, 0));
    for (std::size_t c = 0; c < l; ++c) {
        std::vector<i64> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = b[i][c];
        auto y = basis_coords(col);
        for (std::size_t i = 0; i < k; ++i) w[i][c] = y[i];
    }
    SmithForm fr = smith(w, l);
    if (fr.rank != static_cast<int>(k))
        throw std::invalid_argument("lattice_quotient: quotient is not finite");

    LatticeQuotient q;
    q.a_u = fa.U;
    q.a_diag = fa.diag;
    q.r_u = fr.U;
    q.all_factors = fr.diag;
    for (std::size_t i = 0; i < k; ++i) {
        if (fr.diag[i] <= 1) continue;
        q.factors.push_back(fr.diag[i]);
        std::vector<i64> rep(k, 0);
        for (std::size_t r = 0; r < k; ++r) {
            i64 acc = 0;
            for (std::size_t s = 0; s < k; ++s)
                acc = chk_add(acc, chk_mul(chk_mul(fa.Uinv[r][s], fa.diag[s]), fr.Uinv[s][i]));
            rep[r] = acc;
        }
        q.reps.push_back(std::move(rep));
    }
    return q;
}

std::vector<i64> LatticeQuotient::reduce(const std::vector<i64>& x) const {
    std::size_t k = all_factors.size();
    if (x.size() != k) throw std::invalid_argument("LatticeQuotient::reduce: dimension mismatch");
    std::vector<i64> t(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            t[i] = chk_add(t[i], chk_mul(a_u[i][j], x[j]));
    for (std::size_t i = 0; i < k; ++i) {
        if (t[i] % a_diag[i] != 0)
            throw std::invalid_argument("LatticeQuotient::reduce: vector outside the lattice");
        t[i] /= a_diag[i];
    }
    std::vector<i64> out;
    for (std::size_t i = 0; i < k; ++i) {
        i64 acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc = chk_add(acc, chk_mul(r_u[i][j], t[j]));
        if (all_factors[i] > 1) out.push_back(mod_pos(acc, all_factors[i]));
    }
    return out;
}

std::vector<i64> QuotientGroup::reduce(const std::vector<i64>& x) const {
    std::size_t c = all_factors.size();
    if (c == 0) return {};
    if (x.size() != c) throw std::invalid_argument("QuotientGroup::reduce: dimension mismatch");
    std::vector<i64> t(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            t[i] = chk_add(t[i], chk_mul(bk_u[i][j], x[j]));
    std::vector<i64> z(c, 0);
    for (std::size_t i = 0; i < c; ++i) {
        if (t[i] % bk_diag[i] != 0)
            throw std::invalid_argument("QuotientGroup::reduce: vector outside the cocycle lattice");
        z[i] = t[i] / bk_diag[i];
    }
    std::vector<i64> w(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            w[i] = chk_add(w[i], chk_mul(bk_v[i][j], z[j]));
    std::vector<i64> full(c, 0);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            full[i] = chk_add(full[i], chk_mul(uc[i][j], w[j]));
    std::vector<i64> out;
    for (std::size_t i = 0; i < c; ++i)
        if (all_factors[i] > 1) out.push_back(mod_pos(full[i], all_factors[i]));
    return out;
}

}  // namespace pontra::snf
