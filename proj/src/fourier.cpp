#include "fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pontra::fourier {

using abelian::i64;

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<cplx> values)
    : group(std::move(g)), v(std::move(values)) {
    if (v.size() != static_cast<std::size_t>(group.order()))
        throw std::invalid_argument("GroupFunction: value count must equal the group order");
}

namespace {

std::vector<cplx> unit_roots(i64 n) {
    std::vector<cplx> w(static_cast<std::size_t>(n));
    for (i64 j = 0; j < n; ++j) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        w[static_cast<std::size_t>(j)] = {std::cos(t), std::sin(t)};
    }
    return w;
}

// Phase odometer: enumerates g in mixed-radix order while tracking
// sum_k g_k chi_k (L/n_k) mod L incrementally.
struct PhaseWalker {
    const std::vector<i64>& factors;
    std::vector<i64> digit;
    std::vector<i64> step;  // chi_k * (L / n_k) mod L
    i64 phase = 0;
    i64 mod;

    PhaseWalker(const std::vector<i64>& f, const std::vector<i64>& chi, i64 l)
        : factors(f), digit(f.size(), 0), step(f.size(), 0), mod(l) {
        for (std::size_t k = 0; k < f.size(); ++k)
            step[k] = chi[k] % f[k] * (l / f[k]) % l;
    }

    void advance() {
        for (std::size_t k = factors.size(); k-- > 0;) {
            phase += step[k];
            if (phase >= mod) phase -= mod;
            if (++digit[k] < factors[k]) return;
            digit[k] = 0;
        }
    }
};

void dft_recursive(std::vector<cplx>& x) {
    std::size_t n = x.size();
    if (n <= 1) return;
    std::size_t p = n;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    std::size_t m = n / p;
    auto w = unit_roots(static_cast<i64>(n));

    std::vector<std::vector<cplx>> sub(p, std::vector<cplx>(m));
    for (std::size_t b = 0; b < p; ++b) {
        for (std::size_t a = 0; a < m; ++a) sub[b][a] = x[p * a + b];
        dft_recursive(sub[b]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{0.0, 0.0};
        for (std::size_t b = 0; b < p; ++b)
            acc += w[(b * k) % n] * sub[b][k % m];
        x[k] = acc;
    }
}

void transform_axis(std::vector<cplx>& v, const std::vector<i64>& factors, std::size_t axis) {
    std::size_t n = static_cast<std::size_t>(factors[axis]);
    std::size_t stride = 1;
    for (std::size_t j = axis + 1; j < factors.size(); ++j)
        stride *= static_cast<std::size_t>(factors[j]);
    std::size_t block = stride * n;
    std::vector<cplx> tmp(n);
    for (std::size_t base = 0; base < v.size(); base += block)
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t j = 0; j < n; ++j) tmp[j] = v[base + off + j * stride];
            dft_recursive(tmp);
            for (std::size_t j = 0; j < n; ++j) v[base + off + j * stride] = tmp[j];
        }
}

}  // namespace

GroupFunction ft(const GroupFunction& f) {
    const auto& factors = f.group.factors();
    i64 l = f.group.exponent();
    i64 order = f.group.order();
    auto w = unit_roots(l);
    GroupFunction out(f.group);
    abelian::GroupElement chi = f.group.zero();
    for (i64 ci = 0; ci < order; ++ci) {
        PhaseWalker walk(factors, chi.c, l);
        cplx acc{0.0, 0.0};
        for (i64 gi = 0; gi < order; ++gi) {
            acc += f.v[static_cast<std::size_t>(gi)] * w[static_cast<std::size_t>(walk.phase)];
            walk.advance();
        }
        out.v[static_cast<std::size_t>(ci)] = acc;
        chi = f.group.element_at((ci + 1) % order);
    }
    return out;
}

GroupFunction ift(const GroupFunction& f) {
    const auto& factors = f.group.factors();
    i64 l = f.group.exponent();
    i64 order = f.group.order();
    auto w = unit_roots(l);
    GroupFunction out(f.group);
    abelian::GroupElement g = f.group.zero();
    double scale = 1.0 / static_cast<double>(order);
    for (i64 gi = 0; gi < order; ++gi) {
        PhaseWalker walk(factors, g.c, l);
        cplx acc{0.0, 0.0};
        for (i64 ci = 0; ci < order; ++ci) {
            i64 inv = walk.phase == 0 ? 0 : l - walk.phase;
            acc += f.v[static_cast<std::size_t>(ci)] * w[static_cast<std::size_t>(inv)];
            walk.advance();
        }
        out.v[static_cast<std::size_t>(gi)] = acc * scale;
        g = f.group.element_at((gi + 1) % order);
    }
    return out;
}

GroupFunction fast_ft(const GroupFunction& f) {
    GroupFunction out = f;
    const auto& factors = f.group.factors();
    for (std::size_t axis = 0; axis < factors.size(); ++axis)
        transform_axis(out.v, factors, axis);
    return out;
}

GroupFunction fast_ift(const GroupFunction& f) {
    GroupFunction out = f;
    for (auto& z : out.v) z = std::conj(z);
    out = fast_ft(out);
    double scale = 1.0 / static_cast<double>(f.group.order());
    for (auto& z : out.v) z = std::conj(z) * scale;
    return out;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& h) {
    if (f.group != h.group)
        throw std::invalid_argument("convolve: arguments live on different groups");
    i64 order = f.group.order();
    GroupFunction out(f.group);
    for (i64 xi = 0; xi < order; ++xi) {
        auto x = f.group.element_at(xi);
        cplx acc{0.0, 0.0};
        for (i64 yi = 0; yi < order; ++yi) {
            auto y = f.group.element_at(yi);
            i64 di = f.group.index_of(f.group.sub(x, y));
            acc += f.v[static_cast<std::size_t>(di)] * h.v[static_cast<std::size_t>(yi)];
        }
        out.v[static_cast<std::size_t>(xi)] = acc;
    }
    return out;
}

double max_abs_diff(const GroupFunction& a, const GroupFunction& b) {
    if (a.group != b.group || a.v.size() != b.v.size())
        throw std::invalid_argument("max_abs_diff: mismatched functions");
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i)
        m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}

double norm_sq(const GroupFunction& f) {
    double s = 0.0;
    for (const auto& z : f.v) s += std::norm(z);
    return s;
}

}  // namespace pontra::fourier
