#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ohw/projective.hpp"
#include "ohw/scalar.hpp"

namespace ohw {

// Center of projection p in FP^{d+1}; delta_p is the image of the rational
// normal curve nu_{d+1} under projection from p.
struct ProjectionCenter {
    int d = 0;
    std::vector<Scalar> p;  // d+2 homogeneous coordinates
};

ProjectionCenter make_center(int d, std::vector<Scalar> coords);

// Parameter pair [x, y] on FP^1.
using Param = std::pair<Scalar, Scalar>;

// nu_{d+1}[x,y]: coordinate i equals (-x)^i y^{d+1-i}.
ProjPoint rnc_point(int d, const Param& param);

// Linear projection with kernel spanned by p: subtract the p-component and
// drop the chart coordinate (largest index where p is nonzero).
ProjPoint project(const ProjectionCenter& center, const ProjPoint& v);

// delta_p[x,y] = project(center, rnc_point(d, [x,y])); center must be off the curve.
ProjPoint curve_point(const ProjectionCenter& center, const Param& param);

// Binary form of degree `degree`; coeffs[i] multiplies x^{degree-i} y^i.
struct BinaryForm {
    int degree = 0;
    std::vector<Scalar> coeffs;
};

// f_p(x,y) = sum_i p_i binom(d+1, i) x^{d+1-i} y^i.
BinaryForm fundamental_form(const ProjectionCenter& center);

Scalar binary_form_eval(const BinaryForm& f, const Param& at);

// Polarisation F_p evaluated at d+1 parameter pairs, via the generating
// identity sum_i P_i z^i = prod_j (x_j + y_j z).
Scalar polar_eval(const ProjectionCenter& center, const std::vector<Param>& params);

// d+1 curve points lie on a hyperplane iff F_p vanishes there.
bool cohyperplanar(const ProjectionCenter& center, const std::vector<Param>& params);

// Checks det(nu rows; p) = F_p * prod_{j<k} |x_j x_k; y_j y_k| exactly.
// Repeated parameters are allowed (both sides vanish).
bool det_identity_check(const ProjectionCenter& center, const std::vector<Param>& params);

// M_k(p): (k+1) x (d-k+2) matrix with entry (i,j) = p_{i+j}, 2 <= k <= d-1.
std::vector<std::vector<Scalar>> hankel(const ProjectionCenter& center, int k);

enum class SingularityClass { OnCurve, Smooth, Cusp, Crunode, Acnode };

const char* to_string(SingularityClass c);

// Element a + b*sqrt(delta) of a quadratic extension of the scalar field;
// delta is carried by the owning decomposition/classification.
struct QuadExt {
    Scalar a, b;
};

struct Classification {
    SingularityClass cls = SingularityClass::Smooth;
    // Populated when rank M_2(p) == 2:
    std::optional<std::array<Scalar, 3>> quadratic;  // [c0, 2c1, c2] nullvector
    Scalar delta;                                    // c1^2 - c0*c2
    int delta_sign = 0;
    // The two parameter pairs where delta_p is singular, as elements of the
    // quadratic extension by sqrt(delta). For a cusp both pairs coincide.
    std::optional<std::pair<std::array<QuadExt, 2>, std::array<QuadExt, 2>>> singular_params;
    // Populated when the center lies on the curve: p = nu_{d+1}[alpha].
    std::optional<Param> on_curve_param;
};

// Rank-based singularity classification: OnCurve (rank M_2 = 1), Smooth
// (rank >= 3), else cusp/crunode/acnode by the sign of the discriminant of
// the quadratic extracted from the nullvector of M_2(p).
Classification classify(const ProjectionCenter& center);

struct SylvesterDecomposition {
    enum class Kind { TangentPower, SecantSum } kind;
    // Linear forms L(x,y) = lx*x + ly*y over the quadratic extension by
    // sqrt(delta); base-field values have zero sqrt-part.
    QuadExt l1x, l1y, l2x, l2y;
    // TangentPower: f_p = L1^d * L2 (weight2 unused, scale = 1).
    // SecantSum:    f_p = weight1 * L1^{d+1} + weight2 * L2^{d+1}.
    QuadExt weight1, weight2;
    // Real-secant sign classification: +1 when f_p takes the shape
    // L1^{d+1} - L2^{d+1} over R, -1 for L1^{d+1} + L2^{d+1}; +1 in the
    // conjugate (acnodal) case. 0 for TangentPower.
    int sign = 0;
    Scalar delta;
    QuadExt scale;  // alias of weight1, the leading scale
};

// Sylvester decomposition of f_p for singular or on-curve centers; throws
// UnsupportedCenter for smooth centers. The re-expansion of the decomposed
// form is verified exactly before returning.
SylvesterDecomposition sylvester_decompose(const ProjectionCenter& center);

enum class GroupCoordKind { Additive, Multiplicative, Circle };

struct GroupCoord {
    GroupCoordKind kind;
    Scalar a;  // Additive/Multiplicative value, or circle real part
    Scalar b;  // circle imaginary part
};

// Group coordinate of a smooth parameter on one of the three normal forms:
//   cusp    p ~ [0,1,0,...,0]        -> y/x in (F,+)
//   crunode p ~ [1,0,...,0,-1]       -> y/x in (F*,*)
//   acnode  p_i = 0 (even i), (-1)^((i-1)/2) (odd i) -> Moebius image on the
//           unit circle, (x+iy)/(x-iy) = ((x^2-y^2) + 2xy i)/(x^2+y^2)
GroupCoord group_param(const ProjectionCenter& center, SingularityClass cls, const Param& param);

// d+1 smooth points are cohyperplanar iff their coordinates compose to the
// class identity: sum 0, product 1, or circle product (1, 0).
bool group_identity_holds(const std::vector<GroupCoord>& coords);

// The fixed acnodal normal-form center in dimension d over the given scalar
// backend model (rational by default).
ProjectionCenter acnodal_normal_center(int d, const Scalar& model = Scalar(long(0)));

}  // namespace ohw
