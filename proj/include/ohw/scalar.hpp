#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <variant>

#include "ohw/cyclotomic.hpp"
#include "ohw/errors.hpp"
#include "ohw/rational.hpp"

namespace ohw {

// Exact scalar: an arbitrary-precision rational, or a real element of a
// cyclotomic field. Mixed-backend arithmetic is rejected, never coerced;
// callers lift rationals explicitly with lift_like(). All values are
// immutable after construction.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(mpq_class q) : v_(std::move(q)) {}
    Scalar(Cyclo c) : v_(std::move(c)) {}
    explicit Scalar(long n) : v_(mpq_class(n)) {}

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_cyclo() const { return std::holds_alternative<Cyclo>(v_); }
    const mpq_class& rat() const;
    const Cyclo& cyc() const;

    bool same_backend(const Scalar& other) const;
    // Converts a rational into the backend/modulus of `model` (identity when
    // backends already agree). Throws BackendMismatch for incompatible moduli.
    Scalar lift_like(const Scalar& model) const;

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& other) const;  // requires same backend
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar inverse() const;

    // -1, 0, or +1; exact for rationals, certified interval evaluation for
    // real cyclotomic elements. Throws NonRealError on non-real input.
    int certified_sign() const;

    // Deterministic serialization: "num/den" for rationals (den omitted when
    // 1), "M:c0,c1,..." for cyclotomic elements. Doubles as a hash key.
    std::string key() const;

private:
    std::variant<mpq_class, Cyclo> v_;
};

// (cos 2*pi*k/M, sin 2*pi*k/M) as exact real elements of Q(zeta_{lcm(4,M)}).
// The pair satisfies c^2 + s^2 = 1.
std::pair<Scalar, Scalar> root_of_unity_parts(unsigned modulus, long k);

}  // namespace ohw
