#include "homwb/field.hpp"

namespace homwb {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(long p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
}

Scalar Field::reduce(Scalar a) const {
    if (a.den == 0) throw std::domain_error("zero denominator");
    if (p_ != 0) {
        Int num = a.num % p_;
        if (num < 0) num += p_;
        Int den = a.den % p_;
        if (den < 0) den += p_;
        if (den == 0) throw std::domain_error("denominator vanishes mod p");
        if (den != 1) {
            // den^-1 by Fermat
            Int inv = 1, base = den;
            long e = p_ - 2;
            while (e > 0) {
                if (e & 1) inv = inv * base % p_;
                base = base * base % p_;
                e >>= 1;
            }
            num = num * inv % p_;
        }
        return {num, 1};
    }
    if (a.num == 0) return {0, 1};
    Int g = gcd(a.num, a.den);
    a.num /= g;
    a.den /= g;
    if (a.den < 0) {
        a.num = -a.num;
        a.den = -a.den;
    }
    return a;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ != 0) {
        Int n = a.num + b.num;
        if (n >= p_) n -= p_;
        return {n, 1};
    }
    return reduce({a.num * b.den + b.num * a.den, a.den * b.den});
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ != 0) return {a.num * b.num % p_, 1};
    return reduce({a.num * b.num, a.den * b.den});
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
    if (p_ != 0) return a.num == 0 ? a : Scalar{p_ - a.num, 1};
    return {-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
    if (a.num == 0) throw std::domain_error("division by zero");
    if (p_ != 0) return reduce({1, a.num});
    Scalar r{a.den, a.num};
    return reduce(r);
}

std::string Field::to_string(const Scalar& a) const {
    std::string s = a.num.str();
    if (a.den != 1) s += "/" + a.den.str();
    return s;
}

Scalar Field::parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return reduce({Int(text), 1});
        return reduce({Int(text.substr(0, slash)), Int(text.substr(slash + 1))});
    } catch (const std::exception&) {
        throw std::invalid_argument("bad scalar literal: " + text);
    }
}

}  // namespace homwb
