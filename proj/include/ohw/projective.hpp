#pragma once

#include <string>
#include <vector>

#include "ohw/scalar.hpp"

namespace ohw {

// Homogeneous coordinates [x_0, ..., x_d]; equality is up to a nonzero
// scalar multiple.
struct ProjPoint {
    std::vector<Scalar> coords;
    int dim() const { return static_cast<int>(coords.size()) - 1; }
};

// Covector in canonical form: first nonzero entry equals 1. `key` is the
// deduplication key (primitive integer vector with positive leading entry
// for the rational backend, serialized coefficients otherwise).
struct Hyperplane {
    std::vector<Scalar> normal;
    std::string key;
};

struct Configuration {
    int dim = 0;
    std::vector<ProjPoint> points;
    std::string label;
    int n() const { return static_cast<int>(points.size()); }
};

// Exact rank: fraction-free Bareiss over integers for the rational backend,
// plain elimination with reduced pivots for cyclotomic entries.
int rank(const std::vector<std::vector<Scalar>>& rows);

bool proportional(const ProjPoint& a, const ProjPoint& b);

// Checks dim >= 2, uniform backend/modulus, nonzero coordinates, pairwise
// distinct points. Throws on violation.
void validate_configuration(const Configuration& cfg);

// All d+1 signed maximal minors of the d x (d+1) coordinate matrix, i.e.
// the spanning covector. All zero iff the points do not span a hyperplane.
std::vector<Scalar> nullspace_covector(const std::vector<const ProjPoint*>& pts);

// The hyperplane spanned by d points of FP^d. Throws DegenerateSubset when
// the points have rank < d.
Hyperplane hyperplane_through(const std::vector<const ProjPoint*>& pts);
Hyperplane hyperplane_through(const std::vector<ProjPoint>& pts);

// Canonicalizes a covector in place and returns the deduplication key.
// Throws DegenerateSubset if the covector is zero.
std::string canonicalize_normal(std::vector<Scalar>& normal);

bool incident(const Hyperplane& h, const ProjPoint& p);

struct GeneralPositionReport {
    bool ok = true;
    std::vector<int> witness;  // one violating d-subset when !ok
};

// True iff every d-subset of points spans a hyperplane; short-circuits on
// the first violation and reports it.
GeneralPositionReport general_position(const Configuration& cfg);

// Colexicographic subset streaming, shared by the enumeration code.
void first_subset(std::vector<int>& subset, int k);
bool next_subset_colex(std::vector<int>& subset, int n);
std::vector<int> unrank_subset_colex(long long rank, int n, int k);
long long binomial_ll(int n, int k);

}  // namespace ohw
