#include "abelian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "snf.hpp"

namespace pontra::abelian {

using snf::gcd_i64;
using snf::mod_pos;

i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    i64 g = gcd_i64(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > std::numeric_limits<i64>::max())
        throw std::overflow_error("lcm overflow");
    return static_cast<i64>(l);
}

RootOfUnity::RootOfUnity(i64 num, i64 order) {
    if (order < 1) throw std::invalid_argument("RootOfUnity: order must be positive");
    order_ = order;
    num_ = mod_pos(num, order);
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
    i64 l = lcm_i64(order_, o.order_);
    i64 a = num_ * (l / order_);
    i64 b = o.num_ * (l / o.order_);
    return RootOfUnity(mod_pos(a + b, l), l);
}

RootOfUnity RootOfUnity::inverse() const {
    return RootOfUnity(mod_pos(-num_, order_), order_);
}

RootOfUnity RootOfUnity::pow(i64 k) const {
    __int128 p = static_cast<__int128>(mod_pos(k, order_)) * num_ % order_;
    return RootOfUnity(static_cast<i64>(p), order_);
}

RootOfUnity RootOfUnity::reduced() const {
    if (num_ == 0) return RootOfUnity(0, 1);
    i64 g = gcd_i64(num_, order_);
    return RootOfUnity(num_ / g, order_ / g);
}

RootOfUnity RootOfUnity::rescaled(i64 n) const {
    RootOfUnity r = reduced();
    if (n % r.order() != 0)
        throw std::invalid_argument("RootOfUnity: value not representable over requested order");
    return RootOfUnity(r.num() * (n / r.order()), n);
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    RootOfUnity a = reduced(), b = o.reduced();
    return a.num_ == b.num_ && a.order_ == b.order_;
}

std::complex<double> root_to_complex(const RootOfUnity& r) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(r.num()) / static_cast<double>(r.order());
    return {std::cos(t), std::sin(t)};
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<i64> factors) {
    for (i64 f : factors) {
        if (f < 1) throw std::invalid_argument("FiniteAbelianGroup: factors must be positive");
        if (f == 1) continue;
        factors_.push_back(f);
    }
    order_ = 1;
    exponent_ = 1;
    for (i64 f : factors_) {
        __int128 o = static_cast<__int128>(order_) * f;
        if (o > std::numeric_limits<i64>::max())
            throw std::overflow_error("FiniteAbelianGroup: order overflow");
        order_ = static_cast<i64>(o);
        exponent_ = lcm_i64(exponent_, f);
    }
}

void FiniteAbelianGroup::check(const GroupElement& a) const {
    if (a.c.size() != factors_.size())
        throw std::invalid_argument("GroupElement: rank mismatch with group");
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (a.c[k] < 0 || a.c[k] >= factors_[k])
            throw std::invalid_argument("GroupElement: coordinate out of range");
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement{std::vector<i64>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<i64> coords) const {
    if (coords.size() != factors_.size())
        throw std::invalid_argument("GroupElement: rank mismatch with group");
    for (std::size_t k = 0; k < factors_.size(); ++k)
        coords[k] = mod_pos(coords[k], factors_[k]);
    return GroupElement{std::move(coords)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement r = a;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        r.c[k] = mod_pos(r.c[k] + b.c[k], factors_[k]);
    return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
    check(a);
    GroupElement r = a;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        r.c[k] = mod_pos(-r.c[k], factors_[k]);
    return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement FiniteAbelianGroup::scale(i64 k, const GroupElement& a) const {
    check(a);
    GroupElement r = a;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        __int128 v = static_cast<__int128>(mod_pos(k, factors_[j])) * r.c[j];
        r.c[j] = static_cast<i64>(v % factors_[j]);
    }
    return r;
}

i64 FiniteAbelianGroup::index_of(const GroupElement& a) const {
    check(a);
    i64 idx = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        idx = idx * factors_[k] + a.c[k];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(i64 index) const {
    if (index < 0 || index >= order_)
        throw std::invalid_argument("FiniteAbelianGroup: element index out of range");
    std::vector<i64> c(factors_.size(), 0);
    for (std::size_t k = factors_.size(); k-- > 0;) {
        c[k] = index % factors_[k];
        index /= factors_[k];
    }
    return GroupElement{std::move(c)};
}

FiniteAbelianGroup dual(const FiniteAbelianGroup& g) {
    return FiniteAbelianGroup(g.factors());
}

RootOfUnity pairing(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& chi) {
    i64 n = g.exponent();
    return RootOfUnity(pairing_num(g, a, chi, n), n);
}

i64 pairing_num(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& chi, i64 n) {
    if (a.c.size() != g.rank() || chi.c.size() != g.rank())
        throw std::invalid_argument("pairing: rank mismatch with group");
    if (n % g.exponent() != 0)
        throw std::invalid_argument("pairing: ambient order must be a multiple of the exponent");
    __int128 acc = 0;
    for (std::size_t k = 0; k < g.rank(); ++k) {
        i64 nk = g.factors()[k];
        __int128 t = static_cast<__int128>(mod_pos(a.c[k], nk)) * mod_pos(chi.c[k], nk) % nk;
        acc += t * (n / nk);
    }
    return static_cast<i64>(acc % n);
}

}  // namespace pontra::abelian
