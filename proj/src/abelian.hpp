// Finite abelian groups presented as direct sums of cyclic factors,
// their elements, exact roots of unity, and the duality pairing
//   <g, chi> = exp(2 pi i * sum_k g_k chi_k / n_k).
// The dual group is identified with the group itself through this pairing,
// coordinate by coordinate.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pontra::abelian {

using i64 = long long;

// Exact element of U(1): the value exp(2 pi i * num / order) with
// 0 <= num < order.  Arithmetic never touches floating point.
class RootOfUnity {
public:
    RootOfUnity() : num_(0), order_(1) {}
    RootOfUnity(i64 num, i64 order);

    i64 num() const { return num_; }
    i64 order() const { return order_; }

    RootOfUnity times(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(i64 k) const;
    bool operator==(const RootOfUnity& o) const;
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

    // Same value expressed with the smallest possible denominator.
    RootOfUnity reduced() const;
    // Same value rescaled to denominator n (throws if not representable).
    RootOfUnity rescaled(i64 n) const;

private:
    i64 num_;
    i64 order_;
};

std::complex<double> root_to_complex(const RootOfUnity& r);

// Element coordinates; always interpreted relative to an explicit group.
struct GroupElement {
    std::vector<i64> c;
    bool operator==(const GroupElement& o) const { return c == o.c; }
};

class FiniteAbelianGroup {
public:
    // Factors < 1 are rejected; factors equal to 1 are dropped, so the
    // stored list only carries cyclic orders >= 2.  An empty list is the
    // trivial group.
    explicit FiniteAbelianGroup(std::vector<i64> factors = {});

    const std::vector<i64>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    i64 order() const { return order_; }
    i64 exponent() const { return exponent_; }

    GroupElement zero() const;
    GroupElement element(std::vector<i64> coords) const;  // validates and reduces
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(i64 k, const GroupElement& a) const;

    // Mixed-radix enumeration, last factor fastest.
    i64 index_of(const GroupElement& a) const;
    GroupElement element_at(i64 index) const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    void check(const GroupElement& a) const;
    std::vector<i64> factors_;
    i64 order_;
    i64 exponent_;
};

// The Pontrjagin dual: same cyclic factors, elements read as characters.
FiniteAbelianGroup dual(const FiniteAbelianGroup& g);

// <g, chi> as an exact root of unity with denominator exponent(G).
RootOfUnity pairing(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& chi);

// Numerator of <g, chi> over an ambient order n (n must be a multiple of
// exponent(G)); this is the form used by the cocycle machinery.
i64 pairing_num(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& chi, i64 n);

i64 lcm_i64(i64 a, i64 b);

}  // namespace pontra::abelian
