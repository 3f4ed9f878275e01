// Finite-scale convolution algebras and Hilbert modules attached to the
// cocycle data of bundles.hpp, plus the section-level Fourier transform
// and a randomized verifier for its structural identities.
//
// Sections are stored chart-wise: one complex vector per base vertex,
// interpreted in that vertex's trivialization. All integrals over the
// fibre group are unweighted sums (counting measure), so the duality
// identities hold with constant one.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bundles.hpp"

namespace pontra::cstar {

using abelian::FiniteAbelianGroup;
using abelian::GroupElement;
using abelian::i64;
using cplx = std::complex<double>;

// element of the vertex-wise convolution algebra of a ring pair
struct RingElement {
    bundles::RingPairData ring;
    std::vector<std::vector<cplx>> v;  // [vertex][group element index]
};

// element of the module of sections attached to a triple
struct Section {
    bundles::TripleData triple;
    std::vector<std::vector<cplx>> v;  // [vertex][group element index]
};

// function on the dual total space, chart-wise over the base
struct DualSection {
    bundles::TripleData triple;
    std::vector<std::vector<cplx>> v;  // [vertex][dual element index]
};

RingElement zero_ring_element(const bundles::RingPairData& r);
RingElement delta_ring_element(const bundles::RingPairData& r, const GroupElement& a);
Section zero_section(const bundles::TripleData& t);
DualSection zero_dual_section(const bundles::TripleData& t);

// the algebra acting on the sections of t (its twist is the opposite
// of the triple's dual cocycle)
bundles::RingPairData ring_of(const bundles::TripleData& t);

// vertex-wise twisted convolution; the twist sits in the transition
// data, so each chart multiplies classically
RingElement convolve_ring(const RingElement& a, const RingElement& b);

// involution alpha*(b, g) = conj(alpha(b, -g))
RingElement star(const RingElement& a);

// max over vertices of the fibre l1 norm
double norm_inf1(const RingElement& a);

// right action (gamma * alpha)_b(x) = sum_h gamma_b(x - h) alpha_b(h)
Section module_action(const Section& g, const RingElement& a);

// algebra-valued inner product, conjugate-linear in the first slot:
// <gamma, delta>_b(g) = sum_h conj(gamma_b(h)) delta_b(h + g)
RingElement inner_c(const Section& a, const Section& b);

// chart-wise transform gamma_hat_b(chi) = sum_h gamma_b(h) <h, chi>
DualSection ft_triple(const Section& g, const bundles::TripleData& t);
Section ift_triple(const DualSection& gh);
DualSection ft_ring(const RingElement& a, const bundles::TripleData& t);

// pointwise conj(a) * b on the dual side
DualSection inner_0(const DualSection& a, const DualSection& b);

// sup over dual points of the transform magnitude
double cstar_norm(const RingElement& a);

// chart change along one base edge: values in the tail vertex chart
// mapped to the head vertex chart through the triple's transitions
std::vector<cplx> transport(const bundles::TripleData& t, std::size_t edge,
                            const std::vector<cplx>& tail_values);
std::vector<cplx> transport_dual(const bundles::TripleData& t, std::size_t edge,
                                 const std::vector<cplx>& tail_values);

// max deviations seen across all trials, one field per identity family
struct TheoremReport {
    i64 trials = 0;
    std::uint64_t seed = 0;
    double inner_product = 0;   // transform of <.,.>_c vs pointwise dual product
    double convolution = 0;     // transform of the algebra product vs pointwise product
    double action = 0;          // transform of the module action vs pointwise action
    double equivariance = 0;    // dual transport of the transform vs transform of transport
    double positivity = 0;      // negative part of the transform of <g, g>_c
    double star_compat = 0;     // transform of the involution vs conjugate
    double cstar_identity = 0;  // |norm(a* a) - norm(a)^2|
    double cauchy_schwarz = 0;  // positive part of |<g,d>| - |g||d|
    double max_deviation() const;
};

TheoremReport verify_main_theorem(const bundles::TripleData& t, i64 trials,
                                  std::uint64_t seed);

}  // namespace pontra::cstar
