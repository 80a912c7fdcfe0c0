#include "ohw/scalar.hpp"

#include <numeric>

namespace ohw {

const mpq_class& Scalar::rat() const {
    if (!is_rational()) throw BackendMismatch("expected rational scalar");
    return std::get<mpq_class>(v_);
}

const Cyclo& Scalar::cyc() const {
    if (!is_cyclo()) throw BackendMismatch("expected cyclotomic scalar");
    return std::get<Cyclo>(v_);
}

bool Scalar::same_backend(const Scalar& other) const {
    if (is_rational() != other.is_rational()) return false;
    if (is_cyclo()) return cyc().field().modulus() == other.cyc().field().modulus();
    return true;
}

Scalar Scalar::lift_like(const Scalar& model) const {
    if (same_backend(model)) return *this;
    if (is_rational() && model.is_cyclo())
        return Scalar(Cyclo::from_rational(model.cyc().field(), rat()));
    throw BackendMismatch("cannot lift scalar into target backend");
}

bool Scalar::is_zero() const {
    return is_rational() ? rat() == 0 : cyc().is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return rat() == 1;
    Cyclo one = Cyclo::from_rational(cyc().field(), 1);
    return cyc() == one;
}

bool Scalar::operator==(const Scalar& other) const {
    if (!same_backend(other)) throw BackendMismatch("scalar comparison across backends");
    if (is_rational()) return rat() == other.rat();
    return cyc() == other.cyc();
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(mpq_class(-rat()));
    return Scalar(-cyc());
}

#define OHW_SCALAR_BINOP(op)                                                      \
    Scalar Scalar::operator op(const Scalar& other) const {                       \
        if (!same_backend(other)) throw BackendMismatch("mixed-backend arithmetic"); \
        if (is_rational()) return Scalar(mpq_class(rat() op other.rat()));        \
        return Scalar(cyc() op other.cyc());                                      \
    }

OHW_SCALAR_BINOP(+)
OHW_SCALAR_BINOP(-)
OHW_SCALAR_BINOP(*)
#undef OHW_SCALAR_BINOP

Scalar Scalar::operator/(const Scalar& other) const {
    if (!same_backend(other)) throw BackendMismatch("mixed-backend arithmetic");
    if (other.is_zero()) throw DivisionByZero("scalar division by zero");
    if (is_rational()) return Scalar(mpq_class(rat() / other.rat()));
    return Scalar(cyc() / other.cyc());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("scalar inverse of zero");
    if (is_rational()) return Scalar(mpq_class(1 / rat()));
    return Scalar(cyc().inverse());
}

int Scalar::certified_sign() const {
    if (is_rational()) return rational_sign(rat());
    return cyc().certified_sign();
}

std::string Scalar::key() const {
    if (is_rational()) return rational_to_string(rat());
    return cyc().to_string();
}

std::pair<Scalar, Scalar> root_of_unity_parts(unsigned modulus, long k) {
    if (modulus == 0) throw ParseError("root_of_unity_parts: modulus must be positive");
    const unsigned m = std::lcm(4u, modulus);
    const CycloField& field = CycloField::get(m);
    const long stride = static_cast<long>(m / modulus);
    Cyclo zp = Cyclo::zeta_pow(field, k * stride);
    Cyclo zm = Cyclo::zeta_pow(field, -k * stride);
    Cyclo half = Cyclo::from_rational(field, mpq_class(1, 2));
    Cyclo cosv = (zp + zm) * half;
    // 1/(2i) = zeta^{3M/4} / 2
    Cyclo inv2i = Cyclo::zeta_pow(field, 3L * (m / 4)) * half;
    Cyclo sinv = (zp - zm) * inv2i;
    return {Scalar(cosv), Scalar(sinv)};
}

}  // namespace ohw
