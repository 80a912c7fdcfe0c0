#include "ohw/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "ohw/rational.hpp"

namespace ohw {

namespace {

// Exact division of integer polynomials, divisor monic. Low degree first.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
    if (den.empty() || den.back() != 1)
        throw InternalError("poly_div_exact: divisor must be monic");
    std::vector<mpz_class> rem = num;
    const size_t dn = den.size() - 1;
    if (rem.size() < den.size()) throw InternalError("poly_div_exact: degree underflow");
    std::vector<mpz_class> quot(rem.size() - dn, 0);
    for (size_t j = rem.size(); j-- > dn;) {
        mpz_class c = rem[j];
        if (c == 0) continue;
        quot[j - dn] = c;
        for (size_t i = 0; i <= dn; ++i) rem[j - dn + i] -= c * den[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw InternalError("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<unsigned> divisors_of(unsigned m) {
    std::vector<unsigned> divs;
    for (unsigned e = 1; e <= m; ++e)
        if (m % e == 0) divs.push_back(e);
    return divs;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned modulus) {
    if (modulus == 0) throw InternalError("cyclotomic_polynomial: modulus 0");
    // Phi_e for every divisor e, ascending: Phi_e = (x^e - 1) / prod Phi_f, f | e, f < e.
    std::map<unsigned, std::vector<mpz_class>> phi;
    for (unsigned e : divisors_of(modulus)) {
        std::vector<mpz_class> num(e + 1, 0);
        num[0] = -1;
        num[e] = 1;
        for (unsigned f : divisors_of(e))
            if (f < e) num = poly_div_exact(num, phi[f]);
        phi[e] = std::move(num);
    }
    return phi[modulus];
}

const CycloField& CycloField::get(unsigned modulus) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(modulus);
    if (it == registry.end())
        it = registry.emplace(modulus, std::unique_ptr<CycloField>(new CycloField(modulus))).first;
    return *it->second;
}

CycloField::CycloField(unsigned modulus) : modulus_(modulus) {
    phi_ = cyclotomic_polynomial(modulus);
    degree_ = static_cast<unsigned>(phi_.size() - 1);
}

void CycloField::reduce(std::vector<mpq_class>& coeffs) const {
    // Synthetic division by the monic Phi_M.
    for (size_t j = coeffs.size(); j-- > degree_;) {
        if (coeffs[j] == 0) continue;
        mpq_class c = coeffs[j];
        coeffs[j] = 0;
        for (unsigned i = 0; i < degree_; ++i) coeffs[j - degree_ + i] -= c * phi_[i];
    }
    coeffs.resize(degree_);
    for (auto& c : coeffs) c.canonicalize();
}

Cyclo::Cyclo(const CycloField& field) : field_(&field), coeffs_(field.degree(), mpq_class(0)) {}

Cyclo::Cyclo(const CycloField& field, std::vector<mpq_class> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree()) throw InternalError("Cyclo: bad coefficient count");
}

Cyclo Cyclo::from_rational(const CycloField& field, const mpq_class& q) {
    Cyclo r(field);
    r.coeffs_[0] = q;
    return r;
}

Cyclo Cyclo::zeta_pow(const CycloField& field, long k) {
    const long m = static_cast<long>(field.modulus());
    long e = ((k % m) + m) % m;
    std::vector<mpq_class> c(static_cast<size_t>(e) + 1, mpq_class(0));
    c[static_cast<size_t>(e)] = 1;
    field.reduce(c);
    return Cyclo(field, std::move(c));
}

void Cyclo::require_same_field(const Cyclo& other) const {
    if (field_->modulus() != other.field_->modulus())
        throw BackendMismatch("cyclotomic moduli differ: " + std::to_string(field_->modulus()) +
                              " vs " + std::to_string(other.field_->modulus()));
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Cyclo::operator==(const Cyclo& other) const {
    require_same_field(other);
    return coeffs_ == other.coeffs_;
}

Cyclo Cyclo::operator-() const {
    std::vector<mpq_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return Cyclo(*field_, std::move(c));
}

Cyclo Cyclo::operator+(const Cyclo& other) const {
    require_same_field(other);
    std::vector<mpq_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + other.coeffs_[i];
    return Cyclo(*field_, std::move(c));
}

Cyclo Cyclo::operator-(const Cyclo& other) const {
    require_same_field(other);
    std::vector<mpq_class> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - other.coeffs_[i];
    return Cyclo(*field_, std::move(c));
}

Cyclo Cyclo::operator*(const Cyclo& other) const {
    require_same_field(other);
    const size_t deg = field_->degree();
    // Constant operands multiply coefficient-wise; common when rationals are
    // lifted into the field.
    auto constant_of = [deg](const std::vector<mpq_class>& c) -> const mpq_class* {
        for (size_t i = 1; i < deg; ++i)
            if (c[i] != 0) return nullptr;
        return &c[0];
    };
    if (const mpq_class* k = constant_of(other.coeffs_)) {
        std::vector<mpq_class> c(deg);
        for (size_t i = 0; i < deg; ++i) c[i] = coeffs_[i] * (*k);
        return Cyclo(*field_, std::move(c));
    }
    if (const mpq_class* k = constant_of(coeffs_)) {
        std::vector<mpq_class> c(deg);
        for (size_t i = 0; i < deg; ++i) c[i] = other.coeffs_[i] * (*k);
        return Cyclo(*field_, std::move(c));
    }
    std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
    for (size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (other.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    field_->reduce(prod);
    return Cyclo(*field_, std::move(prod));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
    // Extended Euclid in Q[x]: u*this + v*Phi = gcd = const, so this^{-1} = u/gcd.
    std::vector<mpq_class> r0(field_->minpoly().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(field_->minpoly()[i]);
    std::vector<mpq_class> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<mpq_class> u0(1, mpq_class(0)), u1(1, mpq_class(1));

    auto deg = [](const std::vector<mpq_class>& p) { return static_cast<long>(p.size()) - 1; };
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };

    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<mpq_class> r2 = r0;
        std::vector<mpq_class> q(std::max<long>(deg(r0) - deg(r1) + 1, 0), mpq_class(0));
        for (long j = deg(r2); j >= deg(r1); --j) {
            if (r2[static_cast<size_t>(j)] == 0) continue;
            mpq_class f = r2[static_cast<size_t>(j)] / r1.back();
            q[static_cast<size_t>(j - deg(r1))] = f;
            for (long i = 0; i <= deg(r1); ++i)
                r2[static_cast<size_t>(j - deg(r1) + i)] -= f * r1[static_cast<size_t>(i)];
        }
        trim(r2);
        // u2 = u0 - q*u1
        std::vector<mpq_class> u2 = u0;
        u2.resize(std::max(u0.size(), q.size() + u1.size()), mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw InternalError("cyclotomic inverse: gcd degenerated (Phi not coprime?)");
    // r1 is a nonzero constant.
    std::vector<mpq_class> inv(field_->degree(), mpq_class(0));
    for (size_t i = 0; i < u1.size() && i < inv.size(); ++i) inv[i] = u1[i] / r1[0];
    if (u1.size() > inv.size()) {
        std::vector<mpq_class> full(u1.size());
        for (size_t i = 0; i < u1.size(); ++i) full[i] = u1[i] / r1[0];
        field_->reduce(full);
        inv = std::move(full);
    }
    return Cyclo(*field_, std::move(inv));
}

Cyclo Cyclo::operator/(const Cyclo& other) const { return *this * other.inverse(); }

Cyclo Cyclo::conjugate() const {
    const unsigned m = field_->modulus();
    std::vector<mpq_class> out(m, mpq_class(0));
    for (size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        out[(m - t) % m] += coeffs_[t];
    }
    field_->reduce(out);
    return Cyclo(*field_, std::move(out));
}

bool Cyclo::is_real() const { return conjugate() == *this; }

std::string Cyclo::to_string() const {
    std::ostringstream os;
    os << field_->modulus() << ':';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << rational_to_string(coeffs_[i]);
    }
    return os.str();
}

namespace {

// One-sided enclosure machinery for the embedding zeta -> exp(2*pi*i/M).
// For a real element, value = sum_t c_t * cos(2*pi*t/M). Everything below
// rounds outward, so [lo, hi] always contains the true value.
struct Interval {
    mpfr_t lo, hi;
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
};

// Adds q * cos(2*pi*t/M) to acc, outward-rounded.
void accumulate_term(Interval& acc, const mpq_class& q, unsigned t, unsigned m,
                     mpfr_prec_t prec) {
    mpfr_t pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi, w, tmp;
    mpfr_inits2(prec, pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi, w, tmp, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    // angle = 2*pi*t/M >= 0
    mpfr_mul_ui(ang_lo, pi_lo, 2 * t, MPFR_RNDD);
    mpfr_div_ui(ang_lo, ang_lo, m, MPFR_RNDD);
    mpfr_mul_ui(ang_hi, pi_hi, 2 * t, MPFR_RNDU);
    mpfr_div_ui(ang_hi, ang_hi, m, MPFR_RNDU);
    mpfr_sub(w, ang_hi, ang_lo, MPFR_RNDU);  // angle width
    // cos is 1-Lipschitz: cos(angle) is within [cos(ang_lo) -+ w] for any
    // angle in the enclosure; widen by one ulp via directed rounding.
    mpfr_cos(c_lo, ang_lo, MPFR_RNDD);
    mpfr_cos(c_hi, ang_lo, MPFR_RNDU);
    mpfr_sub(c_lo, c_lo, w, MPFR_RNDD);
    mpfr_add(c_hi, c_hi, w, MPFR_RNDU);
    // coefficient enclosure
    mpfr_t q_lo, q_hi;
    mpfr_inits2(prec, q_lo, q_hi, (mpfr_ptr) nullptr);
    mpfr_set_q(q_lo, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(q_hi, q.get_mpq_t(), MPFR_RNDU);
    // product enclosure: min/max over the four corner products
    mpfr_t best_lo, best_hi;
    mpfr_inits2(prec, best_lo, best_hi, (mpfr_ptr) nullptr);
    bool first = true;
    for (mpfr_ptr a : {(mpfr_ptr)q_lo, (mpfr_ptr)q_hi})
        for (mpfr_ptr b : {(mpfr_ptr)c_lo, (mpfr_ptr)c_hi}) {
            mpfr_mul(tmp, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(tmp, best_lo) < 0) mpfr_set(best_lo, tmp, MPFR_RNDD);
            mpfr_mul(tmp, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(tmp, best_hi) > 0) mpfr_set(best_hi, tmp, MPFR_RNDU);
            first = false;
        }
    mpfr_add(acc.lo, acc.lo, best_lo, MPFR_RNDD);
    mpfr_add(acc.hi, acc.hi, best_hi, MPFR_RNDU);
    mpfr_clears(pi_lo, pi_hi, ang_lo, ang_hi, c_lo, c_hi, w, tmp, q_lo, q_hi, best_lo, best_hi,
                (mpfr_ptr) nullptr);
}

}  // namespace

int Cyclo::certified_sign() const {
    if (!is_real()) throw NonRealError("certified_sign: cyclotomic element is not real");
    if (is_zero()) return 0;
    const unsigned m = field_->modulus();
    for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
        Interval acc(prec);
        for (size_t t = 0; t < coeffs_.size(); ++t) {
            if (coeffs_[t] == 0) continue;
            accumulate_term(acc, coeffs_[t], static_cast<unsigned>(t), m, prec);
        }
        if (mpfr_sgn(acc.lo) > 0) return 1;
        if (mpfr_sgn(acc.hi) < 0) return -1;
    }
    throw InternalError("certified_sign: interval refinement did not separate from zero");
}

}  // namespace ohw
