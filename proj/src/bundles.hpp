// Cocycle-level bundle data over a finite simplicial base: pairs (a group
// cocycle g plus a per-edge twisting table zeta), ring pairs (dual-group
// cocycles), module pairs and duality triples, together with the existence
// obstructions, enumerations and classification torsors they generate.
//
// mu_N values are stored additively as integers in [0, N); the exact
// multiplicative root is recovered through RootOfUnity when needed.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topology.hpp"

namespace pontra::bundles {

using abelian::FiniteAbelianGroup;
using abelian::GroupElement;
using abelian::i64;
using abelian::RootOfUnity;
using topology::Cochain;
using topology::ComplexPtr;
using topology::CoveringSpace;

// zeta table of a pair: one mu_N value per (edge, fibre element).
struct ZetaTable {
    ComplexPtr space;
    FiniteAbelianGroup group;
    i64 n = 1;
    std::vector<std::vector<i64>> t;  // [edge index][group element index]

    RootOfUnity at(std::size_t edge, const GroupElement& x) const;
    i64 num(std::size_t edge, i64 element_index) const;
};

ZetaTable constant_one_zeta(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n);

// F -> E -> B with structure group G x' C(G, mu_N): a 1-cocycle g in G and
// the zeta twisting table.
struct PairData {
    ComplexPtr base;
    FiniteAbelianGroup group;
    i64 n = 1;
    Cochain g;        // degree 1, coefficients group
    ZetaTable zeta;
};

PairData trivial_pair(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n);

// One violated law instance: the triangle, the fibre element x it failed
// at (element index, -1 for the g-law which does not involve x), and
// which law broke.
struct PairViolation {
    std::size_t triangle = 0;
    i64 element_index = -1;
    enum class Law { base_cocycle, zeta_cocycle } law = Law::base_cocycle;
};

struct PairReport {
    std::vector<PairViolation> violations;
    std::size_t checked = 0;
    bool valid() const { return violations.empty(); }
};

// On each 2-simplex (v0 < v1 < v2) with (i,j,k) = (v0,v1,v2), checks
// g_kj + g_ji = g_ki and zeta_kj(g_ji + x) + zeta_ji(x) = zeta_ki(x)
// for every x (mu_N written additively).
PairReport validate_pair(const PairData& p);

// A ring pair is determined by a dual-group 1-cocycle chi; the underlying
// pair has g = 0 and zeta_ji(x) = <x, chi_ji>.
struct RingPairData {
    ComplexPtr base;
    FiniteAbelianGroup group;
    i64 n = 1;
    Cochain chi;  // degree 1, coefficients dual group (same factor list)
};

RingPairData ring_pair_from_dual_bundle(const Cochain& chi, i64 n);
PairData underlying_pair(const RingPairData& r);

// Module pair over a ring pair: zeta_ji(x) = <x, chi_ji> - s_ji with
// delta s = cup11(g, chi).
struct ModulePairData {
    PairData pair;
    RingPairData ring;
    Cochain s;  // degree 1, mu_N coefficients
};

ModulePairData make_module_pair(const PairData& f, const RingPairData& r, const Cochain& s);

// Pontrjagin duality triple: zeta_ji(x) = -<x, chihat_ji> + s_ji on the
// group side and zetahat_ji(xi) = <g_ji, xi> + <g_ji, chihat_ji> + s_ji
// on the dual side; valid iff delta g = 0, delta chihat = 0 and
// delta s = cup11(g, chihat).
struct TripleData {
    ComplexPtr base;
    FiniteAbelianGroup group;
    i64 n = 1;
    Cochain g;        // degree 1 in G
    Cochain chi_hat;  // degree 1 in the dual
    Cochain s;        // degree 1, mu_N
};

TripleData make_triple(const Cochain& g, const Cochain& chi_hat, const Cochain& s, i64 n);
TripleData canonical_triple(const Cochain& chi_hat, i64 n);
TripleData trivial_triple(const ComplexPtr& x, const FiniteAbelianGroup& g, i64 n);

// Derived twisting tables of a triple.
ZetaTable triple_zeta(const TripleData& t);
ZetaTable triple_zeta_hat(const TripleData& t);
PairData triple_pair(const TripleData& t);       // the F -> E side
PairData triple_dual_pair(const TripleData& t);  // the Fhat -> Ehat side

// Conversions of section-six type: a module pair (g, chi, s) maps to the
// triple (g, -chi, -s) and back; both composites are the identity on the
// stored tables.
TripleData mod_to_pon(const ModulePairData& m);
ModulePairData pon_to_mod(const TripleData& t);

// mu_N 1-cochain on the total space of the cover of p.g whose value on the
// lift of (v_i, v_j) through x is zeta_ji(x).
Cochain zeta_total_cochain(const CoveringSpace& cov, const ZetaTable& z);

// Gauge data trivializing a pair with zero base cocycle: a locally
// constant shift c and per-vertex functions f_v: G -> mu_N with
// f_j(x) - f_i(x) = zeta_ji(x + c_i) on every edge.
struct PairGauge {
    Cochain c;                         // degree 0 in G, locally constant
    std::vector<std::vector<i64>> f;   // [vertex][element index] mu_N values
};

// Exhaustive gauge search over all locally constant c (only pairs with
// g = 0 are eligible; others throw).
std::optional<PairGauge> pair_trivialization_gauge(const PairData& p);

// Decision of the module-structure existence problem for a pair F over the
// cover of g against the ring pair of chi.
struct ModuleDecision {
    bool yes = false;
    std::optional<Cochain> witness_s;
    std::string reason;             // empty, "cup_obstruction" or "class_obstruction"
    std::vector<i64> obstruction;   // class coordinates of the failing class
};

ModuleDecision module_pair_exists(const Cochain& g, const Cochain& chi, const PairData& f,
                                  i64 n);

// Orbit data of a classification: the acting group, the class coordinates
// of the representatives, and the witness cochains.
struct TorsorReport {
    std::vector<i64> acting_factors;
    std::vector<std::vector<i64>> orbit_reps;
    std::vector<Cochain> witnesses;
    // full-extension classification only:
    std::vector<i64> n_factors;
    std::vector<i64> m_factors;
    std::vector<i64> quotient_factors;
    i64 class_count = 0;
    bool verified_small_scale = false;
};

TorsorReport enumerate_module_classes(const Cochain& g, const Cochain& chi, i64 n);

struct ObstructionDecision {
    bool yes = false;
    std::vector<i64> obstruction;  // class of -[g] cup [chi_hat] when nonzero
};

ObstructionDecision triple_exists(const Cochain& g, const Cochain& chi_hat, i64 n);
TorsorReport enumerate_triples(const Cochain& g, const Cochain& chi_hat, i64 n);

// Gauge equivalence within Pon(E, Ehat): a 0-cochain u with
// delta u = s1 - s2, or the nonzero class separating the triples.
struct TripleIsomorphism {
    std::optional<Cochain> gauge;
    std::vector<i64> class_difference;
    bool isomorphic() const { return gauge.has_value(); }
};

TripleIsomorphism triple_isomorphic(const TripleData& t1, const TripleData& t2);

// Full-extension classification: N = ker(pullback to the cover of g)
// intersected with ker(pullback to the cover of chi_hat) inside
// H1(B; mu_N); M = (im(_ cup [chi_hat]) n ker p*) + (im([g] cup _) n ker phat*);
// the classes form an N/M-torsor.
TorsorReport full_extension_classes(const TripleData& t0);

// Candidate dual classes extending a fixed pair F over the cover of F.g:
// for each class of H1(B; Ghat), the cup obstruction and the membership
// test of [F] with its witness classes.
struct DualCandidate {
    std::vector<i64> class_coords;
    Cochain chi_hat_rep;
    bool cup_ok = false;
    bool member = false;
    std::optional<Cochain> witness_s;
    std::vector<std::vector<i64>> witness_classes;  // H1(B; mu_N) coordinates
};

std::vector<DualCandidate> triples_extending_pair(const PairData& f, i64 n);

// The automorphism group of the trivial duality triple over a point:
// elements (g, t, chi) with (g,t,chi)(g',t',chi') =
// (g+g', t t' <g',chi>, chi+chi') and the duality swap
// phi(g,t,chi) = (-chi, t<g,-chi>, g).
struct PonAutElement {
    GroupElement g;
    RootOfUnity t;
    GroupElement chi;
    bool operator==(const PonAutElement& o) const {
        return g == o.g && t == o.t && chi == o.chi;
    }
};

PonAutElement pon_identity(const FiniteAbelianGroup& grp);
PonAutElement pon_mul(const FiniteAbelianGroup& grp, const PonAutElement& a,
                      const PonAutElement& b);
PonAutElement pon_inverse(const FiniteAbelianGroup& grp, const PonAutElement& a);
PonAutElement pon_phi(const FiniteAbelianGroup& grp, const PonAutElement& a);

}  // namespace pontra::bundles
