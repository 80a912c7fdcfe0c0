#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "ohw/errors.hpp"

namespace ohw {

// Q(zeta_M), represented as Q[x] / (Phi_M(x)) in the power basis
// 1, zeta, ..., zeta^{phi(M)-1}. Elements are kept fully reduced, so the
// zero test is "all coefficients zero" and equality is coefficient-wise.
class CycloField {
public:
    // Shared per-modulus instance; fields are immutable once built.
    static const CycloField& get(unsigned modulus);

    unsigned modulus() const { return modulus_; }
    unsigned degree() const { return degree_; }  // phi(M)
    const std::vector<mpz_class>& minpoly() const { return phi_; }

    // Reduces a polynomial (coefficient vector, low degree first) of any
    // length modulo Phi_M in place, truncating to exactly degree() entries.
    void reduce(std::vector<mpq_class>& coeffs) const;

private:
    explicit CycloField(unsigned modulus);

    unsigned modulus_;
    unsigned degree_;
    std::vector<mpz_class> phi_;  // monic, degree_ + 1 entries
};

// Cyclotomic polynomial Phi_M over Z, computed by dividing x^M - 1 by the
// Phi_e of all proper divisors e of M.
std::vector<mpz_class> cyclotomic_polynomial(unsigned modulus);

class Cyclo {
public:
    explicit Cyclo(const CycloField& field);  // zero
    static Cyclo from_rational(const CycloField& field, const mpq_class& q);
    static Cyclo zeta_pow(const CycloField& field, long k);  // zeta^k, any k

    const CycloField& field() const { return *field_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const Cyclo& other) const;
    bool operator!=(const Cyclo& other) const { return !(*this == other); }

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& other) const;
    Cyclo operator-(const Cyclo& other) const;
    Cyclo operator*(const Cyclo& other) const;
    Cyclo inverse() const;  // throws DivisionByZero on zero
    Cyclo operator/(const Cyclo& other) const;

    // Image under zeta -> zeta^{-1}; "real" means fixed by it.
    Cyclo conjugate() const;
    bool is_real() const;

    // Sign of the real number this element represents under the embedding
    // zeta -> exp(2*pi*i/M). Exact zero test first, then adaptive-precision
    // interval evaluation (terminates because nonzero elements are bounded
    // away from zero). Throws NonRealError if not real.
    int certified_sign() const;

    std::string to_string() const;  // "M:c0,c1,..." (deterministic key)

private:
    Cyclo(const CycloField& field, std::vector<mpq_class> coeffs);
    void require_same_field(const Cyclo& other) const;

    const CycloField* field_;
    std::vector<mpq_class> coeffs_;  // exactly field_->degree() entries
};

}  // namespace ohw
