#pragma once

#include "diagcell/scalar.hpp"

#include <cstdint>
#include <gmpxx.h>

namespace diagcell::detail {

// Unboxed field arithmetic for the hot loops; Scalar stays the public currency.
struct FpField {
    using value_type = std::uint32_t;
    std::uint32_t p;

    explicit FpField(std::uint32_t modulus) : p(modulus) {}
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t(a) * b % p);
    }
    value_type inv(value_type a) const { return inverse_mod(a, p); }
    value_type from(const Scalar& s) const { return s.residue(); }
    Scalar to_scalar(value_type a) const { return Scalar::modp(a, p); }
};

struct QField {
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return 1 / a; }
    value_type from(const Scalar& s) const { return s.rational_value(); }
    Scalar to_scalar(const value_type& a) const { return Scalar::rational(a); }
};

// Calls f(FpField) or f(QField) according to the ring.
template <class Fn>
decltype(auto) with_field(const Ring& ring, Fn&& f) {
    if (ring.is_rational()) return f(QField{});
    return f(FpField{ring.modulus()});
}

}  // namespace diagcell::detail
