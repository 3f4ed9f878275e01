#include "cstar.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fourier.hpp"

namespace pontra::cstar {

using abelian::root_to_complex;
using abelian::RootOfUnity;
using bundles::TripleData;
using topology::Cochain;
using bundles::ZetaTable;
using fourier::GroupFunction;

namespace {

bool same_ring(const bundles::RingPairData& a, const bundles::RingPairData& b) {
    return a.base.get() == b.base.get() && a.group == b.group && a.n == b.n &&
           a.chi.values == b.chi.values;
}

bool same_triple(const TripleData& a, const TripleData& b) {
    return a.base.get() == b.base.get() && a.group == b.group && a.n == b.n &&
           a.g.values == b.g.values && a.chi_hat.values == b.chi_hat.values &&
           a.s.values == b.s.values;
}

void check_shape(const std::vector<std::vector<cplx>>& v, std::size_t vertices, i64 order,
                 const char* who) {
    if (v.size() != vertices) throw std::invalid_argument(std::string(who) + ": vertex count");
    for (const auto& row : v)
        if (row.size() != static_cast<std::size_t>(order))
            throw std::invalid_argument(std::string(who) + ": fibre vector length");
}

std::vector<std::vector<cplx>> blank(std::size_t vertices, i64 order) {
    return std::vector<std::vector<cplx>>(vertices,
                                          std::vector<cplx>(static_cast<std::size_t>(order)));
}

// difference table d[g][h] = index of g - h, shared by the fibre sums
std::vector<std::vector<i64>> diff_table(const FiniteAbelianGroup& g) {
    i64 o = g.order();
    std::vector<std::vector<i64>> d(static_cast<std::size_t>(o),
                                    std::vector<i64>(static_cast<std::size_t>(o)));
    for (i64 a = 0; a < o; ++a)
        for (i64 b = 0; b < o; ++b)
            d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                g.index_of(g.sub(g.element_at(a), g.element_at(b)));
    return d;
}

std::vector<cplx> transport_with(const ZetaTable& z, const Cochain& g, std::size_t edge,
                                 const std::vector<cplx>& vals) {
    const auto& grp = z.group;
    if (edge >= z.space->count(1)) throw std::invalid_argument("transport: edge out of range");
    if (vals.size() != static_cast<std::size_t>(grp.order()))
        throw std::invalid_argument("transport: fibre vector length");
    GroupElement ge{g.values[edge]};
    std::vector<cplx> out(vals.size());
    for (i64 y = 0; y < grp.order(); ++y) {
        i64 src = grp.index_of(grp.sub(grp.element_at(y), ge));
        out[static_cast<std::size_t>(y)] =
            root_to_complex(RootOfUnity(z.num(edge, src), z.n)) *
            vals[static_cast<std::size_t>(src)];
    }
    return out;
}

}  // namespace

RingElement zero_ring_element(const bundles::RingPairData& r) {
    return RingElement{r, blank(r.base->count(0), r.group.order())};
}

RingElement delta_ring_element(const bundles::RingPairData& r, const GroupElement& a) {
    RingElement e = zero_ring_element(r);
    std::size_t idx = static_cast<std::size_t>(r.group.index_of(r.group.element(a.c)));
    for (auto& row : e.v) row[idx] = cplx{1.0, 0.0};
    return e;
}

Section zero_section(const bundles::TripleData& t) {
    return Section{t, blank(t.base->count(0), t.group.order())};
}

DualSection zero_dual_section(const bundles::TripleData& t) {
    return DualSection{t, blank(t.base->count(0), t.group.order())};
}

bundles::RingPairData ring_of(const bundles::TripleData& t) {
    return bundles::ring_pair_from_dual_bundle(topology::neg(t.chi_hat), t.n);
}

RingElement convolve_ring(const RingElement& a, const RingElement& b) {
    if (!same_ring(a.ring, b.ring))
        throw std::invalid_argument("convolve_ring: elements of different algebras");
    const auto& grp = a.ring.group;
    i64 o = grp.order();
    check_shape(a.v, a.ring.base->count(0), o, "convolve_ring");
    check_shape(b.v, a.ring.base->count(0), o, "convolve_ring");
    auto d = diff_table(grp);
    RingElement out = zero_ring_element(a.ring);
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (i64 g = 0; g < o; ++g) {
            cplx acc{0.0, 0.0};
            for (i64 h = 0; h < o; ++h)
                acc += a.v[vtx][static_cast<std::size_t>(
                           d[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)])] *
                       b.v[vtx][static_cast<std::size_t>(h)];
            out.v[vtx][static_cast<std::size_t>(g)] = acc;
        }
    return out;
}

RingElement star(const RingElement& a) {
    const auto& grp = a.ring.group;
    check_shape(a.v, a.ring.base->count(0), grp.order(), "star");
    RingElement out = zero_ring_element(a.ring);
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (i64 g = 0; g < grp.order(); ++g) {
            i64 m = grp.index_of(grp.neg(grp.element_at(g)));
            out.v[vtx][static_cast<std::size_t>(g)] =
                std::conj(a.v[vtx][static_cast<std::size_t>(m)]);
        }
    return out;
}

double norm_inf1(const RingElement& a) {
    double best = 0.0;
    for (const auto& row : a.v) {
        double s = 0.0;
        for (const cplx& z : row) s += std::abs(z);
        best = std::max(best, s);
    }
    return best;
}

Section module_action(const Section& g, const RingElement& a) {
    if (!same_ring(a.ring, ring_of(g.triple)))
        throw std::invalid_argument("module_action: algebra does not act on this module");
    const auto& grp = g.triple.group;
    i64 o = grp.order();
    check_shape(g.v, g.triple.base->count(0), o, "module_action");
    check_shape(a.v, g.triple.base->count(0), o, "module_action");
    auto d = diff_table(grp);
    Section out = zero_section(g.triple);
    for (std::size_t vtx = 0; vtx < g.v.size(); ++vtx)
        for (i64 x = 0; x < o; ++x) {
            cplx acc{0.0, 0.0};
            for (i64 h = 0; h < o; ++h)
                acc += g.v[vtx][static_cast<std::size_t>(
                           d[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)])] *
                       a.v[vtx][static_cast<std::size_t>(h)];
            out.v[vtx][static_cast<std::size_t>(x)] = acc;
        }
    return out;
}

RingElement inner_c(const Section& a, const Section& b) {
    if (!same_triple(a.triple, b.triple))
        throw std::invalid_argument("inner_c: sections of different modules");
    const auto& grp = a.triple.group;
    i64 o = grp.order();
    check_shape(a.v, a.triple.base->count(0), o, "inner_c");
    check_shape(b.v, a.triple.base->count(0), o, "inner_c");
    RingElement out = zero_ring_element(ring_of(a.triple));
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (i64 g = 0; g < o; ++g) {
            cplx acc{0.0, 0.0};
            for (i64 h = 0; h < o; ++h) {
                i64 hg = grp.index_of(grp.add(grp.element_at(h), grp.element_at(g)));
                acc += std::conj(a.v[vtx][static_cast<std::size_t>(h)]) *
                       b.v[vtx][static_cast<std::size_t>(hg)];
            }
            out.v[vtx][static_cast<std::size_t>(g)] = acc;
        }
    return out;
}

DualSection ft_triple(const Section& g, const bundles::TripleData& t) {
    if (!same_triple(g.triple, t))
        throw std::invalid_argument("ft_triple: section does not belong to the triple");
    check_shape(g.v, t.base->count(0), t.group.order(), "ft_triple");
    DualSection out = zero_dual_section(t);
    for (std::size_t vtx = 0; vtx < g.v.size(); ++vtx)
        out.v[vtx] = fourier::ft(GroupFunction(t.group, g.v[vtx])).v;
    return out;
}

Section ift_triple(const DualSection& gh) {
    const auto& t = gh.triple;
    check_shape(gh.v, t.base->count(0), t.group.order(), "ift_triple");
    Section out = zero_section(t);
    for (std::size_t vtx = 0; vtx < gh.v.size(); ++vtx)
        out.v[vtx] = fourier::ift(GroupFunction(t.group, gh.v[vtx])).v;
    return out;
}

DualSection ft_ring(const RingElement& a, const bundles::TripleData& t) {
    if (!same_ring(a.ring, ring_of(t)))
        throw std::invalid_argument("ft_ring: element does not belong to the triple's algebra");
    check_shape(a.v, t.base->count(0), t.group.order(), "ft_ring");
    DualSection out = zero_dual_section(t);
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        out.v[vtx] = fourier::ft(GroupFunction(t.group, a.v[vtx])).v;
    return out;
}

DualSection inner_0(const DualSection& a, const DualSection& b) {
    if (!same_triple(a.triple, b.triple))
        throw std::invalid_argument("inner_0: sections of different duals");
    check_shape(a.v, a.triple.base->count(0), a.triple.group.order(), "inner_0");
    check_shape(b.v, a.triple.base->count(0), a.triple.group.order(), "inner_0");
    DualSection out = zero_dual_section(a.triple);
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (std::size_t k = 0; k < a.v[vtx].size(); ++k)
            out.v[vtx][k] = std::conj(a.v[vtx][k]) * b.v[vtx][k];
    return out;
}

double cstar_norm(const RingElement& a) {
    double best = 0.0;
    for (const auto& row : a.v) {
        auto f = fourier::ft(GroupFunction(a.ring.group, row));
        for (const cplx& z : f.v) best = std::max(best, std::abs(z));
    }
    return best;
}

std::vector<cplx> transport(const bundles::TripleData& t, std::size_t edge,
                            const std::vector<cplx>& tail_values) {
    return transport_with(bundles::triple_zeta(t), t.g, edge, tail_values);
}

std::vector<cplx> transport_dual(const bundles::TripleData& t, std::size_t edge,
                                 const std::vector<cplx>& tail_values) {
    return transport_with(bundles::triple_zeta_hat(t), t.chi_hat, edge, tail_values);
}

double TheoremReport::max_deviation() const {
    return std::max({inner_product, convolution, action, equivariance, positivity, star_compat,
                     cstar_identity, cauchy_schwarz});
}

namespace {

double max_abs_diff(const DualSection& a, const DualSection& b) {
    double best = 0.0;
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (std::size_t k = 0; k < a.v[vtx].size(); ++k)
            best = std::max(best, std::abs(a.v[vtx][k] - b.v[vtx][k]));
    return best;
}

DualSection pointwise_mul(const DualSection& a, const DualSection& b) {
    DualSection out = zero_dual_section(a.triple);
    for (std::size_t vtx = 0; vtx < a.v.size(); ++vtx)
        for (std::size_t k = 0; k < a.v[vtx].size(); ++k)
            out.v[vtx][k] = a.v[vtx][k] * b.v[vtx][k];
    return out;
}

DualSection conj_dual(const DualSection& a) {
    DualSection out = a;
    for (auto& row : out.v)
        for (cplx& z : row) z = std::conj(z);
    return out;
}

}  // namespace

TheoremReport verify_main_theorem(const bundles::TripleData& t, i64 trials,
                                  std::uint64_t seed) {
    bundles::make_triple(t.g, t.chi_hat, t.s, t.n);  // revalidate, throws when stale
    if (trials < 1) throw std::invalid_argument("verify_main_theorem: trials must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    auto rand_values = [&](std::vector<std::vector<cplx>>& v) {
        for (auto& row : v)
            for (cplx& z : row) z = cplx{amp(rng), amp(rng)};
    };

    auto ring = ring_of(t);
    TheoremReport rep;
    rep.trials = trials;
    rep.seed = seed;

    for (i64 trial = 0; trial < trials; ++trial) {
        Section gamma = zero_section(t);
        Section delta = zero_section(t);
        RingElement alpha = zero_ring_element(ring);
        RingElement beta = zero_ring_element(ring);
        rand_values(gamma.v);
        rand_values(delta.v);
        rand_values(alpha.v);
        rand_values(beta.v);

        auto gamma_hat = ft_triple(gamma, t);
        auto delta_hat = ft_triple(delta, t);
        auto alpha_hat = ft_ring(alpha, t);
        auto beta_hat = ft_ring(beta, t);

        rep.inner_product =
            std::max(rep.inner_product, max_abs_diff(ft_ring(inner_c(gamma, delta), t),
                                                     inner_0(gamma_hat, delta_hat)));
        rep.convolution =
            std::max(rep.convolution, max_abs_diff(ft_ring(convolve_ring(alpha, beta), t),
                                                   pointwise_mul(alpha_hat, beta_hat)));
        rep.action =
            std::max(rep.action, max_abs_diff(ft_triple(module_action(gamma, alpha), t),
                                              pointwise_mul(gamma_hat, alpha_hat)));

        for (std::size_t e = 0; e < t.base->count(1); ++e) {
            const auto& edge = t.base->simplices(1)[e];
            std::size_t tail = t.base->vertex_pos(edge[0]);
            auto lhs = fourier::ft(GroupFunction(t.group, transport(t, e, gamma.v[tail]))).v;
            auto rhs = transport_dual(t, e, gamma_hat.v[tail]);
            for (std::size_t k = 0; k < lhs.size(); ++k)
                rep.equivariance = std::max(rep.equivariance, std::abs(lhs[k] - rhs[k]));
        }

        auto self = ft_ring(inner_c(gamma, gamma), t);
        for (const auto& row : self.v)
            for (const cplx& z : row) {
                rep.positivity = std::max(rep.positivity, -z.real());
                rep.positivity = std::max(rep.positivity, std::abs(z.imag()));
            }

        rep.star_compat = std::max(
            rep.star_compat, max_abs_diff(ft_ring(star(alpha), t), conj_dual(alpha_hat)));

        double na = cstar_norm(alpha);
        rep.cstar_identity =
            std::max(rep.cstar_identity,
                     std::abs(cstar_norm(convolve_ring(star(alpha), alpha)) - na * na));

        double ng = std::sqrt(cstar_norm(inner_c(gamma, gamma)));
        double nd = std::sqrt(cstar_norm(inner_c(delta, delta)));
        rep.cauchy_schwarz = std::max(
            rep.cauchy_schwarz, cstar_norm(inner_c(gamma, delta)) - ng * nd);
    }
    rep.cauchy_schwarz = std::max(rep.cauchy_schwarz, 0.0);
    return rep;
}

}  // namespace pontra::cstar
