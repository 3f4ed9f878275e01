// Fourier analysis on finite abelian groups with counting measure:
//   ft(f)(chi)  = sum_g f(g) <g, chi>
//   ift(F)(g)   = |G|^{-1} sum_chi F(chi) <g, chi>^{-1}
// ft is the quadratic-time reference; fast_ft applies a mixed-radix
// Cooley-Tukey transform factor by factor (radix-2 splitting inside
// power-of-two lengths, naive leaves at odd primes).
#pragma once

#include <complex>
#include <vector>

#include "abelian.hpp"

namespace pontra::fourier {

using abelian::FiniteAbelianGroup;
using cplx = std::complex<double>;

struct GroupFunction {
    FiniteAbelianGroup group;
    std::vector<cplx> v;  // indexed by the group's mixed-radix enumeration

    explicit GroupFunction(FiniteAbelianGroup g)
        : group(std::move(g)), v(static_cast<std::size_t>(group.order()), cplx{0.0, 0.0}) {}
    GroupFunction(FiniteAbelianGroup g, std::vector<cplx> values);
};

GroupFunction ft(const GroupFunction& f);
GroupFunction ift(const GroupFunction& f);
GroupFunction fast_ft(const GroupFunction& f);
GroupFunction fast_ift(const GroupFunction& f);

// (f * h)(x) = sum_y f(x - y) h(y); both arguments over the same group.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& h);

double max_abs_diff(const GroupFunction& a, const GroupFunction& b);
double norm_sq(const GroupFunction& f);

}  // namespace pontra::fourier
