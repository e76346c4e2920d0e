#include "diagcell/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace diagcell {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

Ring Ring::prime_field(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
    return Ring(Kind::prime_field, p);
}

Ring Ring::parse(std::string_view text) {
    std::string s;
    for (char c : text) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (s == "Q" || s == "QQ") return rationals();
    std::string_view digits = s;
    if (digits.substr(0, 2) == "GF") digits.remove_prefix(2);
    else if (digits.substr(0, 1) == "F") digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 10) throw std::invalid_argument("bad ring: " + std::string(text));
    std::uint64_t p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad ring: " + std::string(text));
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (p >= (1ull << 31)) throw std::invalid_argument("modulus too large: " + std::string(text));
    return prime_field(static_cast<std::uint32_t>(p));
}

std::string Ring::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long v) const {
    if (is_rational()) return Scalar::rational(mpq_class(v));
    return Scalar::modp(v, p_);
}

Scalar Ring::parse_element(std::string_view text) const {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (is_rational()) {
            mpq_class q(s, 10);
            if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
                throw std::invalid_argument("zero denominator");
            q.canonicalize();
            return Scalar::rational(q);
        }
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(s.substr(slash + 1), 10);
        mpz_class pz(p_);
        mpz_class a = num % pz, b = den % pz;
        if (a < 0) a += pz;
        if (b < 0) b += pz;
        Scalar x = Scalar::modp(a.get_si(), p_);
        return x / Scalar::modp(b.get_si(), p_);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad scalar literal '" + s + "' for ring " + name());
    } catch (const std::domain_error&) {
        throw std::invalid_argument("bad scalar literal '" + s + "' for ring " + name());
    }
}

Scalar Scalar::modp(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Scalar(Fp{static_cast<std::uint32_t>(r), p});
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
}

Ring Scalar::ring() const {
    if (is_rational()) return Ring::rationals();
    return Ring(Ring::Kind::prime_field, std::get<Fp>(value_).p);
}

bool Scalar::is_zero() const {
    if (is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<Fp>(value_).v == 0;
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<Fp>(value_).v == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (value_.index() != o.value_.index() ||
        (!is_rational() && std::get<Fp>(value_).p != std::get<Fp>(o.value_).p))
        throw std::invalid_argument("scalars from different rings");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (is_rational()) return Scalar(mpq_class(rational_value() + o.rational_value()));
    auto a = std::get<Fp>(value_), b = std::get<Fp>(o.value_);
    std::uint64_t s = std::uint64_t(a.v) + b.v;
    return Scalar(Fp{static_cast<std::uint32_t>(s % a.p), a.p});
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (is_rational()) return Scalar(mpq_class(rational_value() - o.rational_value()));
    auto a = std::get<Fp>(value_), b = std::get<Fp>(o.value_);
    std::uint64_t s = std::uint64_t(a.v) + a.p - b.v;
    return Scalar(Fp{static_cast<std::uint32_t>(s % a.p), a.p});
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (is_rational()) return Scalar(mpq_class(rational_value() * o.rational_value()));
    auto a = std::get<Fp>(value_), b = std::get<Fp>(o.value_);
    return Scalar(Fp{static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % a.p), a.p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-rational_value()));
    auto a = std::get<Fp>(value_);
    return Scalar(Fp{a.v == 0 ? 0 : a.p - a.v, a.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Scalar(mpq_class(1 / rational_value()));
    auto a = std::get<Fp>(value_);
    return Scalar(Fp{inverse_mod(a.v, a.p), a.p});
}

Scalar Scalar::pow(unsigned e) const {
    Scalar base = *this;
    Scalar r = ring().one();
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Scalar::to_plain_string() const {
    if (is_rational()) return rational_value().get_str();
    return std::to_string(std::get<Fp>(value_).v);
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational_value().get_str();
    auto a = std::get<Fp>(value_);
    return std::to_string(a.v) + " mod " + std::to_string(a.p);
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_rational()) return a.rational_value() == b.rational_value();
    auto x = std::get<Scalar::Fp>(a.value_), y = std::get<Scalar::Fp>(b.value_);
    return x.p == y.p && x.v == y.v;
}

}  // namespace diagcell
