#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>

namespace diagcell {

class Scalar;

// Ground ring: a prime field F_p (p < 2^31) or the rationals.
class Ring {
public:
    enum class Kind { prime_field, rationals };

    static Ring prime_field(std::uint32_t p);
    static Ring rationals() { return Ring(Kind::rationals, 0); }
    // Accepts "Q", "QQ", "F5", "GF5" or a bare prime "5".
    static Ring parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rationals; }
    std::uint32_t modulus() const { return p_; }
    std::uint32_t characteristic() const { return p_; }

    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    // "3", "-2", "3/7"; fractions over F_p are reduced modulo p.
    Scalar parse_element(std::string_view text) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    friend class Scalar;
    Ring(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

class Scalar {
public:
    struct Fp {
        std::uint32_t v;
        std::uint32_t p;
    };

    Scalar() : value_(Fp{0, 2}) {}
    static Scalar modp(std::int64_t v, std::uint32_t p);
    static Scalar rational(mpq_class q);

    Ring ring() const;
    bool is_rational() const { return value_.index() == 1; }
    bool is_zero() const;
    bool is_one() const;

    std::uint32_t residue() const { return std::get<Fp>(value_).v; }
    const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    bool is_invertible() const { return !is_zero(); }

    // "a/b" for rationals, "v mod p" for field elements.
    std::string to_string() const;
    // Bare value without the modulus suffix: "a/b" or "v".
    std::string to_plain_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    explicit Scalar(Fp f) : value_(f) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    void check_same(const Scalar& o) const;

    std::variant<Fp, mpq_class> value_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);

}  // namespace diagcell
