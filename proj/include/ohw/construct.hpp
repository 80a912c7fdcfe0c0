#pragma once

#include <utility>
#include <vector>

#include "ohw/curve.hpp"
#include "ohw/groupmodel.hpp"
#include "ohw/projective.hpp"

namespace ohw {

// Provenance of an acnodal-coset configuration. The points realize the coset
// H + x of H = Z_n inside the circle group of the acnodal normal-form curve,
// at angles pi * (k(d+1) + j) / (n(d+1)); the counting target is c = -j mod n.
struct CosetMeta {
    int d = 0;
    int n = 0;
    long j = 0;
    Group group;   // Cyclic(n)
    int c = 0;     // -j mod n
    unsigned modulus = 0;  // ambient field Q(zeta_M), M = lcm(4, 2n(d+1))
};

// n-1 points on a moment curve inside the hyperplane x_d = 0 plus an apex
// off it. General position holds by Vandermonde minors and is asserted.
Configuration near_pencil(int d, int n);

// The coset configuration on the fixed acnodal normal-form curve, with exact
// coordinates in Q(zeta_M). Distinctness, smoothness and general position
// are asserted at build time.
std::pair<Configuration, CosetMeta> acnodal_coset(int d, int n, long j);

// A smooth curve point at angle index r (mod 2n(d+1)) that avoids every
// coset angle; throws ParseError when r collides with the coset.
ProjPoint off_coset_probe(const CosetMeta& meta, long r);

// Removes the given indices, appends the given points, revalidates general
// position (throwing DegenerateSubset with a witness on failure), and labels
// the provenance.
Configuration perturb(const Configuration& cfg, const std::vector<int>& remove,
                      const std::vector<ProjPoint>& add);

}  // namespace ohw
