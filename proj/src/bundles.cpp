#include "bundles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pontra::bundles {

using abelian::pairing;
using abelian::pairing_num;
using snf::mod_pos;
using topology::add;
using topology::coboundary;
using topology::cohomology;
using topology::CohomologyGroup;
using topology::cup01;
using topology::cup10;
using topology::cup11;
using topology::is_cocycle;
using topology::neg;
using topology::solve_coboundary;
using topology::sub;
using topology::zero_cochain;

namespace {

FiniteAbelianGroup mu_n(i64 n) { return FiniteAbelianGroup({n}); }

bool all_zero(const std::vector<i64>& v) {
    return std::all_of(v.begin(), v.end(), [](i64 e) { return e == 0; });
}

// mu_N cochains have one coordinate per simplex, or none when N = 1
i64 cval(const Cochain& s, std::size_t i) {
    return s.values[i].empty() ? 0 : s.values[i][0];
}

void cset(Cochain& s, std::size_t i, i64 v) {
    if (!s.values[i].empty()) s.values[i][0] = v;
}

void check_group_cocycle(const Cochain& g, const char* who) {
    if (g.degree != 1) throw std::invalid_argument(std::string(who) + ": cochain must have degree 1");
    if (!is_cocycle(g)) throw std::invalid_argument(std::string(who) + ": transition data is not a cocycle");
}

void check_ambient(const FiniteAbelianGroup& g, i64 n, const char* who) {
    if (n < 1 || n % g.exponent() != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": ambient order must be a positive multiple of the exponent");
}

}  // namespace

RootOfUnity ZetaTable::at(std::size_t edge, const GroupElement& x) const {
    return RootOfUnity(num(edge, group.index_of(x)), n);
}

i64 ZetaTable::num(std::size_t edge, i64 element_index) const {
    return t.at(edge).at(static_cast<std::size_t>(element_index));
}

ZetaTable constant_one_zeta(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n) {
    ZetaTable z;
    z.space = x;
    z.group = g;
    z.n = n;
    z.t.assign(x->count(1), std::vector<i64>(static_cast<std::size_t>(g.order()), 0));
    return z;
}

PairData trivial_pair(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n) {
    check_ambient(g, n, "trivial_pair");
    PairData p;
    p.base = x;
    p.group = g;
    p.n = n;
    p.g = zero_cochain(x, 1, g);
    p.zeta = constant_one_zeta(x, g, n);
    return p;
}

PairReport validate_pair(const PairData& p) {
    if (p.g.space.get() != p.base.get() || p.g.degree != 1 || !(p.g.coeff == p.group))
        throw std::invalid_argument("validate_pair: base cocycle shape mismatch");
    if (p.zeta.space.get() != p.base.get() || !(p.zeta.group == p.group) || p.zeta.n != p.n)
        throw std::invalid_argument("validate_pair: zeta table shape mismatch");
    check_ambient(p.group, p.n, "validate_pair");
    if (p.zeta.t.size() != p.base->count(1))
        throw std::invalid_argument("validate_pair: zeta table edge count mismatch");
    i64 order = p.group.order();
    for (const auto& row : p.zeta.t) {
        if (row.size() != static_cast<std::size_t>(order))
            throw std::invalid_argument("validate_pair: zeta table row length mismatch");
        for (i64 v : row)
            if (v < 0 || v >= p.n)
                throw std::invalid_argument("validate_pair: zeta entry out of range");
    }

    PairReport rep;
    const auto& x = p.base;
    for (std::size_t tri = 0; tri < x->count(2); ++tri) {
        const auto& tau = x->simplices(2)[tri];
        std::size_t e01 = x->simplex_index(1, {tau[0], tau[1]}).value();
        std::size_t e02 = x->simplex_index(1, {tau[0], tau[2]}).value();
        std::size_t e12 = x->simplex_index(1, {tau[1], tau[2]}).value();
        GroupElement gji{p.g.values[e01]};
        GroupElement gkj{p.g.values[e12]};
        GroupElement gki{p.g.values[e02]};
        ++rep.checked;
        if (!(p.group.add(gkj, gji) == gki))
            rep.violations.push_back({tri, -1, PairViolation::Law::base_cocycle});
        for (i64 xi = 0; xi < order; ++xi) {
            ++rep.checked;
            i64 shifted = p.group.index_of(p.group.add(gji, p.group.element_at(xi)));
            i64 lhs = mod_pos(p.zeta.num(e12, shifted) + p.zeta.num(e01, xi), p.n);
            if (lhs != p.zeta.num(e02, xi))
                rep.violations.push_back({tri, xi, PairViolation::Law::zeta_cocycle});
        }
    }
    return rep;
}

RingPairData ring_pair_from_dual_bundle(const Cochain& chi, i64 n) {
    check_group_cocycle(chi, "ring_pair_from_dual_bundle");
    check_ambient(chi.coeff, n, "ring_pair_from_dual_bundle");
    RingPairData r;
    r.base = chi.space;
    r.group = chi.coeff;
    r.n = n;
    r.chi = chi;
    return r;
}

PairData underlying_pair(const RingPairData& r) {
    PairData p = trivial_pair(r.base, r.group, r.n);
    for (std::size_t e = 0; e < r.base->count(1); ++e)
        for (i64 xi = 0; xi < r.group.order(); ++xi)
            p.zeta.t[e][static_cast<std::size_t>(xi)] = pairing_num(
                r.group, r.group.element_at(xi), GroupElement{r.chi.values[e]}, r.n);
    return p;
}

ModulePairData make_module_pair(const PairData& f, const RingPairData& r, const Cochain& s) {
    if (f.base.get() != r.base.get())
        throw std::invalid_argument("make_module_pair: pair and ring pair live on different bases");
    if (f.group.factors() != r.group.factors() || f.n != r.n)
        throw std::invalid_argument("make_module_pair: group or ambient order mismatch");
    if (s.space.get() != f.base.get() || s.degree != 1 || !(s.coeff == mu_n(f.n)))
        throw std::invalid_argument("make_module_pair: s must be a mu_N 1-cochain on the base");
    if (!validate_pair(f).valid())
        throw std::invalid_argument("make_module_pair: pair data violates the cocycle laws");
    if (!(coboundary(s) == cup11(f.g, r.chi, f.n)))
        throw std::invalid_argument("make_module_pair: delta s differs from the cup cocycle");
    for (std::size_t e = 0; e < f.base->count(1); ++e)
        for (i64 xi = 0; xi < f.group.order(); ++xi) {
            i64 want = mod_pos(pairing_num(f.group, f.group.element_at(xi),
                                           GroupElement{r.chi.values[e]}, f.n) -
                                   cval(s, e),
                               f.n);
            if (f.zeta.num(e, xi) != want)
                throw std::invalid_argument(
                    "make_module_pair: zeta table does not match <x, chi> - s");
        }
    return ModulePairData{f, r, s};
}

TripleData make_triple(const Cochain& g, const Cochain& chi_hat, const Cochain& s, i64 n) {
    if (g.space.get() != chi_hat.space.get() || g.space.get() != s.space.get())
        throw std::invalid_argument("make_triple: cochains live on different complexes");
    if (g.coeff.factors() != chi_hat.coeff.factors())
        throw std::invalid_argument("make_triple: group and dual factor lists differ");
    check_group_cocycle(g, "make_triple");
    check_group_cocycle(chi_hat, "make_triple");
    check_ambient(g.coeff, n, "make_triple");
    if (s.degree != 1 || !(s.coeff == mu_n(n)))
        throw std::invalid_argument("make_triple: s must be a mu_N 1-cochain");
    if (!(coboundary(s) == cup11(g, chi_hat, n)))
        throw std::invalid_argument("make_triple: delta s differs from the cup cocycle");
    return TripleData{g.space, g.coeff, n, g, chi_hat, s};
}

TripleData canonical_triple(const Cochain& chi_hat, i64 n) {
    return make_triple(zero_cochain(chi_hat.space, 1, chi_hat.coeff), chi_hat,
                       zero_cochain(chi_hat.space, 1, mu_n(n)), n);
}

TripleData trivial_triple(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n) {
    return canonical_triple(zero_cochain(x, 1, g), n);
}

ZetaTable triple_zeta(const TripleData& t) {
    ZetaTable z = constant_one_zeta(t.base, t.group, t.n);
    for (std::size_t e = 0; e < t.base->count(1); ++e)
        for (i64 xi = 0; xi < t.group.order(); ++xi)
            z.t[e][static_cast<std::size_t>(xi)] =
                mod_pos(-pairing_num(t.group, t.group.element_at(xi),
                                     GroupElement{t.chi_hat.values[e]}, t.n) +
                            cval(t.s, e),
                        t.n);
    return z;
}

ZetaTable triple_zeta_hat(const TripleData& t) {
    ZetaTable z = constant_one_zeta(t.base, t.group, t.n);
    for (std::size_t e = 0; e < t.base->count(1); ++e) {
        GroupElement gji{t.g.values[e]};
        i64 twist = mod_pos(
            pairing_num(t.group, gji, GroupElement{t.chi_hat.values[e]}, t.n) + cval(t.s, e),
            t.n);
        for (i64 xi = 0; xi < t.group.order(); ++xi)
            z.t[e][static_cast<std::size_t>(xi)] = mod_pos(
                pairing_num(t.group, gji, t.group.element_at(xi), t.n) + twist, t.n);
    }
    return z;
}

PairData triple_pair(const TripleData& t) {
    return PairData{t.base, t.group, t.n, t.g, triple_zeta(t)};
}

PairData triple_dual_pair(const TripleData& t) {
    return PairData{t.base, t.group, t.n, t.chi_hat, triple_zeta_hat(t)};
}

TripleData mod_to_pon(const ModulePairData& m) {
    return make_triple(m.pair.g, neg(m.ring.chi), neg(m.s), m.pair.n);
}

ModulePairData pon_to_mod(const TripleData& t) {
    RingPairData r = ring_pair_from_dual_bundle(neg(t.chi_hat), t.n);
    return make_module_pair(triple_pair(t), r, neg(t.s));
}

Cochain zeta_total_cochain(const CoveringSpace& cov, const ZetaTable& z) {
    if (z.space.get() != cov.base().get() || !(z.group == cov.group()))
        throw std::invalid_argument("zeta_total_cochain: table does not match the cover");
    Cochain r = zero_cochain(cov.total(), 1, mu_n(z.n));
    for (std::size_t e = 0; e < cov.total()->count(1); ++e) {
        std::size_t be = cov.project_simplex(1, e);
        i64 x = cov.fibre_at_first_vertex(1, e);
        cset(r, e, z.num(be, x));
    }
    return r;
}

std::optional<PairGauge> pair_trivialization_gauge(const PairData& p) {
    for (const auto& v : p.g.values)
        if (!all_zero(v))
            throw std::invalid_argument(
                "pair_trivialization_gauge: only pairs with zero base cocycle are supported");
    if (!validate_pair(p).valid())
        throw std::invalid_argument("pair_trivialization_gauge: invalid pair data");

    const auto& x = p.base;
    i64 order = p.group.order();
    CohomologyGroup h0(x, 0, p.group);
    for (const auto& coords : h0.all_classes()) {
        Cochain c = h0.rep_combination(coords);
        PairGauge gauge;
        gauge.c = c;
        gauge.f.assign(x->count(0), std::vector<i64>(static_cast<std::size_t>(order), 0));
        bool ok = true;
        // sheets stay independent because the base cocycle vanishes
        for (i64 xi = 0; xi < order && ok; ++xi) {
            Cochain e = zero_cochain(x, 1, mu_n(p.n));
            for (std::size_t ei = 0; ei < x->count(1); ++ei) {
                const auto& edge = x->simplices(1)[ei];
                std::size_t v0 = x->simplex_index(0, {edge[0]}).value();
                GroupElement shifted =
                    p.group.add(p.group.element_at(xi), GroupElement{c.values[v0]});
                cset(e, ei, p.zeta.num(ei, p.group.index_of(shifted)));
            }
            auto f = solve_coboundary(e);
            if (!f) {
                ok = false;
                break;
            }
            for (std::size_t v = 0; v < x->count(0); ++v)
                gauge.f[v][static_cast<std::size_t>(xi)] = cval(*f, v);
        }
        if (ok) return gauge;
    }
    return std::nullopt;
}

namespace {

// Witness s0 for the cup cocycle of (g, chi_or_chihat); throws when the
// obstruction class is nonzero.
Cochain base_witness(const Cochain& g, const Cochain& chi, i64 n, const char* who) {
    auto cup = cup11(g, chi, n);
    auto s0 = solve_coboundary(cup);
    if (!s0)
        throw std::invalid_argument(std::string(who) + ": the cup obstruction class is nonzero");
    return *s0;
}

TorsorReport classify_by_h1(const ComplexPtr& base, const Cochain& s0, i64 n) {
    CohomologyGroup h1(base, 1, mu_n(n));
    TorsorReport rep;
    rep.acting_factors = h1.factors();
    rep.class_count = h1.class_count();
    for (const auto& coords : h1.all_classes()) {
        rep.orbit_reps.push_back(coords);
        rep.witnesses.push_back(add(s0, h1.rep_combination(coords)));
    }
    // freeness and distinctness of the representatives, checked exactly:
    // the difference of two witnesses reduces to the coordinate difference
    for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
        auto back = h1.reduce(sub(rep.witnesses[i], s0));
        if (back != rep.orbit_reps[i])
            throw std::logic_error("classification: representative does not reduce to its class");
    }
    rep.verified_small_scale = true;
    return rep;
}

}  // namespace

ModuleDecision module_pair_exists(const Cochain& g, const Cochain& chi, const PairData& f,
                                  i64 n) {
    check_group_cocycle(g, "module_pair_exists");
    check_group_cocycle(chi, "module_pair_exists");
    if (g.space.get() != chi.space.get() || g.space.get() != f.base.get())
        throw std::invalid_argument("module_pair_exists: inputs live on different bases");
    if (!(f.g == g))
        throw std::invalid_argument("module_pair_exists: pair does not lie over the given cocycle");
    if (f.n != n || g.coeff.factors() != chi.coeff.factors())
        throw std::invalid_argument("module_pair_exists: group or ambient order mismatch");
    if (!validate_pair(f).valid())
        throw std::invalid_argument("module_pair_exists: malformed pair data");

    ModuleDecision d;
    auto cup = cup11(g, chi, n);
    CohomologyGroup h2(g.space, 2, mu_n(n));
    auto cup_class = h2.reduce(cup);
    if (!all_zero(cup_class)) {
        d.reason = "cup_obstruction";
        d.obstruction = cup_class;
        return d;
    }
    Cochain s0 = *solve_coboundary(cup);

    // model pair for s0: zeta(x) = <x, chi> - s0
    PairData model = trivial_pair(f.base, f.group, n);
    for (std::size_t e = 0; e < f.base->count(1); ++e)
        for (i64 xi = 0; xi < f.group.order(); ++xi)
            model.zeta.t[e][static_cast<std::size_t>(xi)] =
                mod_pos(pairing_num(f.group, f.group.element_at(xi),
                                    GroupElement{chi.values[e]}, n) -
                            cval(s0, e),
                        n);
    model.g = g;

    CoveringSpace cov(f.base, g);
    Cochain diff = sub(zeta_total_cochain(cov, f.zeta), zeta_total_cochain(cov, model.zeta));
    CohomologyGroup h1t(cov.total(), 1, mu_n(n));
    CohomologyGroup h1b(f.base, 1, mu_n(n));
    // the model for s0 + z differs from the model for s0 by -pullback(z)
    for (const auto& coords : h1b.all_classes()) {
        Cochain z = h1b.rep_combination(coords);
        if (all_zero(h1t.reduce(add(diff, cov.pullback(z))))) {
            d.yes = true;
            d.witness_s = add(s0, z);
            return d;
        }
    }
    d.reason = "class_obstruction";
    d.obstruction = h1t.reduce(diff);
    return d;
}

TorsorReport enumerate_module_classes(const Cochain& g, const Cochain& chi, i64 n) {
    check_group_cocycle(g, "enumerate_module_classes");
    check_group_cocycle(chi, "enumerate_module_classes");
    check_ambient(g.coeff, n, "enumerate_module_classes");
    Cochain s0 = base_witness(g, chi, n, "enumerate_module_classes");
    return classify_by_h1(g.space, s0, n);
}

ObstructionDecision triple_exists(const Cochain& g, const Cochain& chi_hat, i64 n) {
    check_group_cocycle(g, "triple_exists");
    check_group_cocycle(chi_hat, "triple_exists");
    check_ambient(g.coeff, n, "triple_exists");
    ObstructionDecision d;
    auto cup = cup11(g, chi_hat, n);
    CohomologyGroup h2(g.space, 2, mu_n(n));
    auto cls = h2.reduce(neg(cup));
    d.yes = all_zero(cls);
    if (!d.yes) d.obstruction = cls;
    return d;
}

TorsorReport enumerate_triples(const Cochain& g, const Cochain& chi_hat, i64 n) {
    check_group_cocycle(g, "enumerate_triples");
    check_group_cocycle(chi_hat, "enumerate_triples");
    check_ambient(g.coeff, n, "enumerate_triples");
    Cochain s0 = base_witness(g, chi_hat, n, "enumerate_triples");
    return classify_by_h1(g.space, s0, n);
}

TripleIsomorphism triple_isomorphic(const TripleData& t1, const TripleData& t2) {
    if (t1.base.get() != t2.base.get() || !(t1.group == t2.group) || t1.n != t2.n ||
        !(t1.g == t2.g) || !(t1.chi_hat == t2.chi_hat))
        throw std::invalid_argument("triple_isomorphic: triples do not share (E, Ehat) data");
    TripleIsomorphism iso;
    Cochain d = sub(t1.s, t2.s);
    iso.gauge = solve_coboundary(d);
    CohomologyGroup h1(t1.base, 1, mu_n(t1.n));
    iso.class_difference = h1.reduce(d);
    return iso;
}

namespace {

// subgroup of a coordinate group: closure of the generators under addition
std::set<std::vector<i64>> subgroup_closure(const std::vector<std::vector<i64>>& gens,
                                            const std::vector<i64>& factors) {
    std::set<std::vector<i64>> elems;
    std::vector<std::vector<i64>> frontier{std::vector<i64>(factors.size(), 0)};
    elems.insert(frontier[0]);
    while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            auto nx = cur;
            for (std::size_t i = 0; i < factors.size(); ++i)
                nx[i] = mod_pos(nx[i] + g[i], factors[i]);
            if (elems.insert(nx).second) frontier.push_back(nx);
        }
    }
    return elems;
}

// column matrix [members | diag(factors)] lifting a subgroup to a lattice
snf::Mat subgroup_lattice(const std::set<std::vector<i64>>& elems,
                          const std::vector<i64>& factors) {
    std::size_t k = factors.size();
    snf::Mat m(k, std::vector<i64>{});
    for (const auto& e : elems)
        for (std::size_t i = 0; i < k; ++i) m[i].push_back(e[i]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i].push_back(i == j ? factors[i] : 0);
    return m;
}

std::vector<i64> invariant_factors(const std::set<std::vector<i64>>& elems,
                                   const std::vector<i64>& factors) {
    std::size_t k = factors.size();
    if (k == 0) return {};
    snf::Mat unit(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) unit[i][i] = factors[i];
    return snf::lattice_quotient(subgroup_lattice(elems, factors), unit).factors;
}

}  // namespace

TorsorReport full_extension_classes(const TripleData& t0) {
    // re-validate the base triple
    make_triple(t0.g, t0.chi_hat, t0.s, t0.n);

    const auto& base = t0.base;
    i64 n = t0.n;
    CohomologyGroup h1b(base, 1, mu_n(n));
    std::vector<i64> f = h1b.factors();

    CoveringSpace cov_e(base, t0.g);
    CoveringSpace cov_ehat(base, t0.chi_hat);
    CohomologyGroup h1te(cov_e.total(), 1, mu_n(n));
    CohomologyGroup h1tehat(cov_ehat.total(), 1, mu_n(n));

    auto kills_on = [&](const CoveringSpace& cov, const CohomologyGroup& h1t,
                        const std::vector<i64>& coords) {
        return all_zero(h1t.reduce(cov.pullback(h1b.rep_combination(coords))));
    };

    std::set<std::vector<i64>> ker_p, ker_phat, n_set;
    for (const auto& coords : h1b.all_classes()) {
        bool kp = kills_on(cov_e, h1te, coords);
        bool kph = kills_on(cov_ehat, h1tehat, coords);
        if (kp) ker_p.insert(coords);
        if (kph) ker_phat.insert(coords);
        if (kp && kph) n_set.insert(coords);
    }

    // im(_ cup [Ehat]) over H0(B; G) and im([E] cup _) over H0(B; Ghat)
    std::set<std::vector<i64>> im1, im2;
    CohomologyGroup h0g(base, 0, t0.group);
    for (const auto& coords : h0g.all_classes()) {
        Cochain c = h0g.rep_combination(coords);
        im1.insert(h1b.reduce(cup01(c, t0.chi_hat, n)));
        im2.insert(h1b.reduce(cup10(t0.g, c, n)));
    }

    std::vector<std::vector<i64>> m_gens;
    for (const auto& e : im1)
        if (ker_p.count(e)) m_gens.push_back(e);
    for (const auto& e : im2)
        if (ker_phat.count(e)) m_gens.push_back(e);
    auto m_set = subgroup_closure(m_gens, f);
    for (const auto& e : m_set)
        if (!n_set.count(e))
            throw std::logic_error("full_extension_classes: stabiliser escapes the kernel group");

    TorsorReport rep;
    rep.n_factors = invariant_factors(n_set, f);
    rep.m_factors = invariant_factors(m_set, f);
    if (f.empty() || n_set.size() == 1) {
        rep.class_count = static_cast<i64>(n_set.size() / m_set.size());
        rep.orbit_reps.push_back(std::vector<i64>(f.size(), 0));
        rep.witnesses.push_back(t0.s);
    } else {
        auto q = snf::lattice_quotient(subgroup_lattice(n_set, f), subgroup_lattice(m_set, f));
        rep.quotient_factors = q.factors;
        rep.class_count = 1;
        for (i64 d : q.factors) rep.class_count *= d;
        // orbit representatives: t0.s shifted by coset representatives
        std::vector<std::vector<i64>> coset_coords;
        std::vector<i64> cur(q.factors.size(), 0);
        while (true) {
            std::vector<i64> point(f.size(), 0);
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j)
                    point[j] = mod_pos(point[j] + cur[i] * q.reps[i][j], f[j]);
            coset_coords.push_back(point);
            std::size_t k = cur.size();
            bool done = cur.empty();
            while (k-- > 0) {
                if (++cur[k] < q.factors[k]) break;
                cur[k] = 0;
                if (k == 0) done = true;
            }
            if (done) break;
        }
        std::sort(coset_coords.begin(), coset_coords.end());
        for (const auto& coords : coset_coords) {
            rep.orbit_reps.push_back(coords);
            rep.witnesses.push_back(add(t0.s, h1b.rep_combination(coords)));
        }
    }
    rep.acting_factors = rep.quotient_factors;
    // torsor size law: |classes| * |stabiliser| = |acting kernel group|
    if (rep.class_count * static_cast<i64>(m_set.size()) != static_cast<i64>(n_set.size()))
        throw std::logic_error("full_extension_classes: orbit size law violated");
    rep.verified_small_scale = true;
    return rep;
}

std::vector<DualCandidate> triples_extending_pair(const PairData& f, i64 n) {
    if (!validate_pair(f).valid())
        throw std::invalid_argument("triples_extending_pair: invalid pair data");
    check_group_cocycle(f.g, "triples_extending_pair");
    if (n != f.n) throw std::invalid_argument("triples_extending_pair: ambient order mismatch");

    const auto& base = f.base;
    CohomologyGroup h1dual(base, 1, f.group);
    CohomologyGroup h2(base, 2, mu_n(n));
    CohomologyGroup h1b(base, 1, mu_n(n));
    CoveringSpace cov(base, f.g);
    CohomologyGroup h1t(cov.total(), 1, mu_n(n));
    Cochain zf = zeta_total_cochain(cov, f.zeta);

    std::vector<DualCandidate> out;
    for (const auto& coords : h1dual.all_classes()) {
        DualCandidate cand;
        cand.class_coords = coords;
        cand.chi_hat_rep = h1dual.rep_combination(coords);
        auto cup = cup11(f.g, cand.chi_hat_rep, n);
        cand.cup_ok = all_zero(h2.reduce(cup));
        if (cand.cup_ok) {
            Cochain s0 = *solve_coboundary(cup);
            TripleData model = make_triple(f.g, cand.chi_hat_rep, s0, n);
            Cochain diff = sub(zf, zeta_total_cochain(cov, triple_zeta(model)));
            // s0 + z changes the model class by +pullback(z)
            for (const auto& zc : h1b.all_classes()) {
                Cochain z = h1b.rep_combination(zc);
                if (all_zero(h1t.reduce(sub(diff, cov.pullback(z))))) {
                    cand.witness_classes.push_back(zc);
                    if (!cand.witness_s) cand.witness_s = add(s0, z);
                }
            }
            cand.member = !cand.witness_classes.empty();
        }
        out.push_back(std::move(cand));
    }
    return out;
}

PonAutElement pon_identity(const FiniteAbelianGroup& grp) {
    return PonAutElement{grp.zero(), RootOfUnity(0, 1), grp.zero()};
}

PonAutElement pon_mul(const FiniteAbelianGroup& grp, const PonAutElement& a,
                      const PonAutElement& b) {
    return PonAutElement{grp.add(a.g, b.g),
                         a.t.times(b.t).times(pairing(grp, b.g, a.chi)),
                         grp.add(a.chi, b.chi)};
}

PonAutElement pon_inverse(const FiniteAbelianGroup& grp, const PonAutElement& a) {
    // (g,t,chi)^{-1} = (-g, t^{-1} <g,chi>, -chi)
    return PonAutElement{grp.neg(a.g), a.t.inverse().times(pairing(grp, a.g, a.chi)),
                         grp.neg(a.chi)};
}

PonAutElement pon_phi(const FiniteAbelianGroup& grp, const PonAutElement& a) {
    return PonAutElement{grp.neg(a.chi), a.t.times(pairing(grp, a.g, grp.neg(a.chi))), a.g};
}

}  // namespace pontra::bundles
