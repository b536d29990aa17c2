#ifndef HOMWB_FIELD_HPP
#define HOMWB_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace homwb {

using Int = boost::multiprecision::cpp_int;

/// A scalar of the ground field, stored as a reduced fraction.
/// Over a prime field the value is the residue in [0, p) with den == 1.
struct Scalar {
    Int num{0};
    Int den{1};

    bool operator==(const Scalar&) const = default;
};

/// Ground field: F_p for a prime p, or the rationals when p == 0.
class Field {
public:
    Field() = default;
    explicit Field(long p);

    static Field rationals() { return Field(); }
    static Field prime(long p) { return Field(p); }

    bool is_finite() const { return p_ != 0; }
    long characteristic() const { return p_; }

    Scalar zero() const { return {}; }
    Scalar one() const { return {1, 1}; }
    Scalar from_int(long n) const { return reduce({Int(n), Int(1)}); }
    Scalar from_fraction(const Int& num, const Int& den) const { return reduce({num, den}); }

    bool is_zero(const Scalar& a) const { return a.num == 0; }
    bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    /// Canonical form: reduced fraction with positive denominator, or the
    /// least non-negative residue mod p.
    Scalar reduce(Scalar a) const;

    std::string to_string(const Scalar& a) const;
    /// Parses "n" or "n/d".
    Scalar parse(const std::string& text) const;

    bool operator==(const Field&) const = default;

private:
    long p_ = 0;
};

bool is_prime(long n);

}  // namespace homwb

#endif
