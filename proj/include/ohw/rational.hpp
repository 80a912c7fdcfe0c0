#pragma once

#include <gmpxx.h>

#include <string>

#include "ohw/errors.hpp"

namespace ohw {

// Arbitrary-precision rationals are GMP's mpq_class, which keeps values in
// canonical form (positive denominator, coprime). These helpers cover the
// string format used everywhere in this project: "num/den", with "/den"
// omitted when the denominator is 1.

mpq_class parse_rational(const std::string& s);
std::string rational_to_string(const mpq_class& q);

// True iff q = r^2 for some rational r; on success stores the nonnegative root.
bool rational_sqrt(const mpq_class& q, mpq_class& root);

inline int rational_sign(const mpq_class& q) { return sgn(q); }

}  // namespace ohw
