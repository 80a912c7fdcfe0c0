#include "ohw/curve.hpp"

#include <algorithm>
#include <map>

namespace ohw {

namespace {

Scalar lift_int(long v, const Scalar& model) { return Scalar(mpq_class(v)).lift_like(model); }

mpz_class binom(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Scalar pow_scalar(const Scalar& base, int e, const Scalar& one) {
    Scalar acc = one;
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// Generic determinant by Laplace expansion over column subsets; division-free
// so it works uniformly over both scalar backends.
Scalar det_dp(const std::vector<std::vector<Scalar>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::map<uint32_t, Scalar> level;
    for (int j = 0; j < n; ++j) level[uint32_t(1) << j] = rows[0][j];
    for (int r = 1; r < n; ++r) {
        std::map<uint32_t, Scalar> out;
        for (const auto& [mask, det] : level) {
            for (int j = 0; j < n; ++j) {
                uint32_t bit = uint32_t(1) << j;
                if (mask & bit) continue;
                uint32_t nm = mask | bit;
                int pos = __builtin_popcount(nm & (bit - 1));
                Scalar term = rows[r][j] * det;
                if ((r + pos) % 2) term = -term;
                auto it = out.find(nm);
                if (it == out.end())
                    out.emplace(nm, std::move(term));
                else
                    it->second = it->second + term;
            }
        }
        level = std::move(out);
    }
    return level.at((uint32_t(1) << n) - 1);
}

bool is_on_rnc(const ProjectionCenter& center) {
    const int d = center.d;
    std::vector<std::vector<Scalar>> band(2, std::vector<Scalar>(d + 1));
    for (int j = 0; j <= d; ++j) {
        band[0][j] = center.p[j];
        band[1][j] = center.p[j + 1];
    }
    return rank(band) <= 1;
}

void require_param_nonzero(const Param& param) {
    if (param.first.is_zero() && param.second.is_zero())
        throw ParseError("parameter [0,0] is not a point of FP^1");
}

}  // namespace

ProjectionCenter make_center(int d, std::vector<Scalar> coords) {
    if (d < 2) throw ParseError("projection center needs d >= 2");
    if (static_cast<int>(coords.size()) != d + 2)
        throw ParseError("projection center needs d+2 coordinates");
    bool nonzero = false;
    for (const auto& c : coords) {
        if (!c.same_backend(coords[0])) throw BackendMismatch("center mixes scalar backends");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) throw ParseError("zero vector is not a projective point");
    return ProjectionCenter{d, std::move(coords)};
}

ProjPoint rnc_point(int d, const Param& param) {
    require_param_nonzero(param);
    const Scalar& x = param.first;
    const Scalar& y = param.second;
    Scalar one = lift_int(1, x);
    std::vector<Scalar> coords(d + 2);
    Scalar mx = -x;
    for (int i = 0; i <= d + 1; ++i)
        coords[i] = pow_scalar(mx, i, one) * pow_scalar(y, d + 1 - i, one);
    return ProjPoint{std::move(coords)};
}

ProjPoint project(const ProjectionCenter& center, const ProjPoint& v) {
    if (v.coords.size() != center.p.size())
        throw ParseError("project: point/center dimension mismatch");
    if (proportional(v, ProjPoint{center.p}))
        throw ProjectionUndefined("projection of the center itself is undefined");
    size_t chart = center.p.size();
    while (chart-- > 0)
        if (!center.p[chart].is_zero()) break;
    Scalar f = v.coords[chart] / center.p[chart];
    std::vector<Scalar> w;
    w.reserve(v.coords.size() - 1);
    for (size_t j = 0; j < v.coords.size(); ++j) {
        if (j == chart) continue;
        w.push_back(v.coords[j] - f * center.p[j]);
    }
    return ProjPoint{std::move(w)};
}

ProjPoint curve_point(const ProjectionCenter& center, const Param& param) {
    if (is_on_rnc(center))
        throw UnsupportedCenter("curve_point: center lies on the rational normal curve");
    return project(center, rnc_point(center.d, param));
}

BinaryForm fundamental_form(const ProjectionCenter& center) {
    const int d = center.d;
    BinaryForm f;
    f.degree = d + 1;
    f.coeffs.resize(d + 2);
    for (int i = 0; i <= d + 1; ++i) {
        Scalar b = Scalar(mpq_class(binom(d + 1, i))).lift_like(center.p[i]);
        f.coeffs[i] = center.p[i] * b;
    }
    return f;
}

Scalar binary_form_eval(const BinaryForm& f, const Param& at) {
    Scalar one = lift_int(1, at.first);
    Scalar acc = lift_int(0, at.first);
    for (int i = 0; i <= f.degree; ++i)
        acc = acc + f.coeffs[i] * pow_scalar(at.first, f.degree - i, one) *
                        pow_scalar(at.second, i, one);
    return acc;
}

Scalar polar_eval(const ProjectionCenter& center, const std::vector<Param>& params) {
    const int d = center.d;
    if (static_cast<int>(params.size()) != d + 1)
        throw ParseError("polar_eval: expected d+1 parameter pairs");
    for (const auto& pr : params) require_param_nonzero(pr);
    const Scalar zero = lift_int(0, center.p[0]);
    // prod_j (x_j + y_j z): coefficient of z^i is P_i.
    std::vector<Scalar> co{lift_int(1, center.p[0])};
    for (const auto& [x, y] : params) {
        std::vector<Scalar> nx(co.size() + 1, zero);
        Scalar lx = x.lift_like(center.p[0]);
        Scalar ly = y.lift_like(center.p[0]);
        for (size_t i = 0; i < co.size(); ++i) {
            nx[i] = nx[i] + co[i] * lx;
            nx[i + 1] = nx[i + 1] + co[i] * ly;
        }
        co = std::move(nx);
    }
    Scalar acc = zero;
    for (int i = 0; i <= d + 1; ++i) acc = acc + center.p[i] * co[i];
    return acc;
}

bool cohyperplanar(const ProjectionCenter& center, const std::vector<Param>& params) {
    return polar_eval(center, params).is_zero();
}

bool det_identity_check(const ProjectionCenter& center, const std::vector<Param>& params) {
    const int d = center.d;
    if (static_cast<int>(params.size()) != d + 1)
        throw ParseError("det_identity_check: expected d+1 parameter pairs");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(d + 2);
    for (const auto& pr : params) {
        Param lifted{pr.first.lift_like(center.p[0]), pr.second.lift_like(center.p[0])};
        rows.push_back(rnc_point(d, lifted).coords);
    }
    rows.push_back(center.p);
    Scalar lhs = det_dp(rows);
    Scalar rhs = polar_eval(center, params);
    for (int j = 0; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k) {
            Scalar xj = params[j].first.lift_like(center.p[0]);
            Scalar yj = params[j].second.lift_like(center.p[0]);
            Scalar xk = params[k].first.lift_like(center.p[0]);
            Scalar yk = params[k].second.lift_like(center.p[0]);
            rhs = rhs * (xj * yk - xk * yj);
        }
    return lhs == rhs;
}

std::vector<std::vector<Scalar>> hankel(const ProjectionCenter& center, int k) {
    const int d = center.d;
    if (k < 2 || k > d - 1) throw ParseError("hankel: band index out of range 2..d-1");
    std::vector<std::vector<Scalar>> m(k + 1, std::vector<Scalar>(d - k + 2));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= d - k + 1; ++j) m[i][j] = center.p[i + j];
    return m;
}

const char* to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::OnCurve: return "on-curve";
        case SingularityClass::Smooth: return "smooth";
        case SingularityClass::Cusp: return "cusp";
        case SingularityClass::Crunode: return "crunode";
        case SingularityClass::Acnode: return "acnode";
    }
    return "?";
}

namespace {

// Quadratic extension arithmetic: elements a + b*sqrt(delta). When delta is
// a square the callers arrange b = 0, so inversion never meets a zero
// divisor on the supported paths.
struct QuadCtx {
    Scalar delta;
    Scalar zero, one;
};

QuadCtx make_ctx(const Scalar& delta) {
    return QuadCtx{delta, lift_int(0, delta), lift_int(1, delta)};
}

QuadExt q_from(const QuadCtx& ctx, const Scalar& a) { return {a, ctx.zero}; }
bool q_is_zero(const QuadExt& v) { return v.a.is_zero() && v.b.is_zero(); }
bool q_eq(const QuadExt& u, const QuadExt& v) { return u.a == v.a && u.b == v.b; }
QuadExt q_neg(const QuadExt& v) { return {-v.a, -v.b}; }
QuadExt q_add(const QuadExt& u, const QuadExt& v) { return {u.a + v.a, u.b + v.b}; }
QuadExt q_sub(const QuadExt& u, const QuadExt& v) { return {u.a - v.a, u.b - v.b}; }

QuadExt q_mul(const QuadCtx& ctx, const QuadExt& u, const QuadExt& v) {
    return {u.a * v.a + ctx.delta * u.b * v.b, u.a * v.b + u.b * v.a};
}

QuadExt q_inv(const QuadCtx& ctx, const QuadExt& v) {
    Scalar norm = v.a * v.a - ctx.delta * v.b * v.b;
    if (norm.is_zero())
        throw InternalError("quadratic extension: zero divisor (delta is a square?)");
    Scalar ninv = norm.inverse();
    return {v.a * ninv, -(v.b * ninv)};
}

QuadExt q_div(const QuadCtx& ctx, const QuadExt& u, const QuadExt& v) {
    return q_mul(ctx, u, q_inv(ctx, v));
}

QuadExt q_pow(const QuadCtx& ctx, const QuadExt& v, int e) {
    QuadExt acc = q_from(ctx, ctx.one);
    for (int i = 0; i < e; ++i) acc = q_mul(ctx, acc, v);
    return acc;
}

// Exact sign of a + b*sqrt(delta), delta > 0 and not a square (or b = 0).
int q_sign(const QuadCtx& ctx, const QuadExt& v) {
    int sa = v.a.certified_sign();
    int sb = v.b.certified_sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Scalar norm = v.a * v.a - ctx.delta * v.b * v.b;
    return sa * norm.certified_sign();
}

void require_real_center(const ProjectionCenter& center) {
    for (const auto& c : center.p)
        if (c.is_cyclo() && !c.cyc().is_real())
            throw NonRealError("classification requires a real center");
}

// Parameter pairs of the linear factors of c0 x^2 + 2c1 xy + c2 y^2 over the
// extension by sqrt(delta). For delta = 0 both pairs coincide.
std::pair<std::array<QuadExt, 2>, std::array<QuadExt, 2>> factor_quadratic(
    const QuadCtx& ctx, const Scalar& c0, const Scalar& c1d, const Scalar& c2, int delta_sign,
    bool delta_square, const Scalar& delta_root) {
    if (c0.is_zero()) {
        // q = y (c1d x + c2 y)
        std::array<QuadExt, 2> first{q_from(ctx, lift_int(0, c0)), q_from(ctx, lift_int(1, c0))};
        std::array<QuadExt, 2> second =
            c1d.is_zero() ? first
                          : std::array<QuadExt, 2>{q_from(ctx, c1d), q_from(ctx, c2)};
        return {first, second};
    }
    Scalar half = Scalar(mpq_class(1, 2)).lift_like(c0);
    Scalar c1 = c1d * half;
    QuadExt s = delta_square ? q_from(ctx, delta_root) : QuadExt{ctx.zero, ctx.one};
    if (delta_sign == 0) s = q_from(ctx, ctx.zero);
    QuadExt c0inv = q_inv(ctx, q_from(ctx, c0));
    QuadExt up = q_mul(ctx, q_add(q_from(ctx, -c1), s), c0inv);
    QuadExt um = q_mul(ctx, q_sub(q_from(ctx, -c1), s), c0inv);
    // root u of q(u,1) gives the factor (x - u y), i.e. parameter pair (1, -u)
    std::array<QuadExt, 2> first{q_from(ctx, ctx.one), q_neg(up)};
    std::array<QuadExt, 2> second{q_from(ctx, ctx.one), q_neg(um)};
    return {first, second};
}

}  // namespace

Classification classify(const ProjectionCenter& center) {
    if (center.d < 3) throw ParseError("classify: requires d >= 3");
    require_real_center(center);
    Classification out;
    out.delta = lift_int(0, center.p[0]);
    if (is_on_rnc(center)) {
        out.cls = SingularityClass::OnCurve;
        if (!center.p[0].is_zero())
            out.on_curve_param = Param{-(center.p[1] / center.p[0]), lift_int(1, center.p[0])};
        else
            out.on_curve_param = Param{lift_int(1, center.p[0]), lift_int(0, center.p[0])};
        return out;
    }
    auto m2 = hankel(center, 2);
    int r = rank(m2);
    if (r >= 3) {
        out.cls = SingularityClass::Smooth;
        return out;
    }
    if (r != 2) throw InternalError("classify: rank 1 without on-curve detection");
    // Left nullvector of the 3 x (d) band: cross product of two independent
    // columns.
    const int cols = static_cast<int>(m2[0].size());
    std::array<Scalar, 3> nv{};
    bool found = false;
    for (int i = 0; i < cols && !found; ++i)
        for (int j = i + 1; j < cols && !found; ++j) {
            Scalar u0 = m2[0][i], u1 = m2[1][i], u2 = m2[2][i];
            Scalar v0 = m2[0][j], v1 = m2[1][j], v2 = m2[2][j];
            Scalar w0 = u1 * v2 - u2 * v1;
            Scalar w1 = u2 * v0 - u0 * v2;
            Scalar w2 = u0 * v1 - u1 * v0;
            if (!(w0.is_zero() && w1.is_zero() && w2.is_zero())) {
                nv = {w0, w1, w2};
                found = true;
            }
        }
    if (!found) throw InternalError("classify: no independent column pair at rank 2");
    const Scalar& c0 = nv[0];
    const Scalar& c1d = nv[1];
    const Scalar& c2 = nv[2];
    out.quadratic = nv;
    Scalar quarter = Scalar(mpq_class(1, 4)).lift_like(c0);
    out.delta = c1d * c1d * quarter - c0 * c2;
    out.delta_sign = out.delta.certified_sign();
    out.cls = out.delta_sign > 0   ? SingularityClass::Crunode
              : out.delta_sign < 0 ? SingularityClass::Acnode
                                   : SingularityClass::Cusp;
    bool delta_square = false;
    Scalar delta_root = lift_int(0, c0);
    if (out.delta.is_rational()) {
        mpq_class root;
        if (out.delta_sign >= 0 && rational_sqrt(out.delta.rat(), root)) {
            delta_square = true;
            delta_root = Scalar(root);
        }
    }
    QuadCtx ctx = make_ctx(out.delta);
    out.singular_params =
        factor_quadratic(ctx, c0, c1d, c2, out.delta_sign, delta_square, delta_root);
    return out;
}

namespace {

// Exact division of a binary form by the linear form (a x + b y). Throws
// InternalError when the division leaves a remainder.
BinaryForm divide_linear(const BinaryForm& f, const Scalar& a, const Scalar& b) {
    BinaryForm g;
    g.degree = f.degree - 1;
    g.coeffs.resize(f.degree);
    if (!a.is_zero()) {
        Scalar ai = a.inverse();
        Scalar prev = lift_int(0, a);
        for (int i = 0; i < f.degree; ++i) {
            g.coeffs[i] = (f.coeffs[i] - b * prev) * ai;
            prev = g.coeffs[i];
        }
        if (!(f.coeffs[f.degree] == b * prev))
            throw InternalError("binary form not divisible by linear factor");
    } else {
        if (!f.coeffs[0].is_zero())
            throw InternalError("binary form not divisible by linear factor");
        Scalar bi = b.inverse();
        for (int i = 0; i < f.degree; ++i) g.coeffs[i] = f.coeffs[i + 1] * bi;
    }
    return g;
}

std::vector<QuadExt> expand_linear_power(const QuadCtx& ctx, const QuadExt& lx, const QuadExt& ly,
                                         int e) {
    // (lx x + ly y)^e as coefficients of x^{e-i} y^i.
    std::vector<QuadExt> out(e + 1, q_from(ctx, ctx.zero));
    for (int i = 0; i <= e; ++i) {
        QuadExt c = q_from(ctx, Scalar(mpq_class(binom(e, i))).lift_like(ctx.zero));
        c = q_mul(ctx, c, q_pow(ctx, lx, e - i));
        c = q_mul(ctx, c, q_pow(ctx, ly, i));
        out[i] = c;
    }
    return out;
}

std::array<QuadExt, 2> normalize_param(const QuadCtx& ctx, std::array<QuadExt, 2> pr) {
    if (!q_is_zero(pr[0])) {
        QuadExt inv = q_inv(ctx, pr[0]);
        return {q_from(ctx, ctx.one), q_mul(ctx, pr[1], inv)};
    }
    return {q_from(ctx, ctx.zero), q_from(ctx, ctx.one)};
}

// Flips (lx, ly) so that a base-field leading coefficient comes out
// positive; returns -1 when flipped, else +1. Leading coefficients with a
// sqrt part are left alone.
int canonicalize_linear_sign(QuadExt& lx, QuadExt& ly) {
    const QuadExt& lead = q_is_zero(lx) ? ly : lx;
    if (!lead.b.is_zero()) return 1;
    if (lead.a.certified_sign() >= 0) return 1;
    lx = q_neg(lx);
    ly = q_neg(ly);
    return -1;
}

std::vector<QuadExt> nu_of(const QuadCtx& ctx, int d, const std::array<QuadExt, 2>& pr) {
    std::vector<QuadExt> v(d + 2);
    QuadExt mx = q_neg(pr[0]);
    for (int i = 0; i <= d + 1; ++i)
        v[i] = q_mul(ctx, q_pow(ctx, mx, i), q_pow(ctx, pr[1], d + 1 - i));
    return v;
}

}  // namespace

SylvesterDecomposition sylvester_decompose(const ProjectionCenter& center) {
    Classification cls = classify(center);
    if (cls.cls == SingularityClass::Smooth)
        throw UnsupportedCenter("sylvester_decompose: smooth centers have no such decomposition");
    const int d = center.d;
    BinaryForm f = fundamental_form(center);
    SylvesterDecomposition out;
    out.delta = cls.delta;
    QuadCtx ctx = make_ctx(cls.delta);

    if (cls.cls == SingularityClass::OnCurve || cls.cls == SingularityClass::Cusp) {
        out.kind = SylvesterDecomposition::Kind::TangentPower;
        Scalar a1, a2;  // tangency parameter [a1, a2]
        if (cls.cls == SingularityClass::OnCurve) {
            a1 = cls.on_curve_param->first;
            a2 = cls.on_curve_param->second;
        } else {
            const auto& pr = cls.singular_params->first;  // double root, sqrt part zero
            if (!pr[0].b.is_zero() || !pr[1].b.is_zero())
                throw InternalError("cusp factor has irrational part");
            a1 = pr[0].a;
            a2 = pr[1].a;
        }
        Scalar l1x = a2, l1y = -a1;
        {
            QuadExt tx = q_from(ctx, l1x), ty = q_from(ctx, l1y);
            canonicalize_linear_sign(tx, ty);  // flip folds into L2 via the division
            l1x = tx.a;
            l1y = ty.a;
        }
        BinaryForm rest = f;
        for (int i = 0; i < d; ++i) rest = divide_linear(rest, l1x, l1y);
        out.l1x = q_from(ctx, l1x);
        out.l1y = q_from(ctx, l1y);
        out.l2x = q_from(ctx, rest.coeffs[0]);
        out.l2y = q_from(ctx, rest.coeffs[1]);
        out.weight1 = q_from(ctx, ctx.one);
        out.weight2 = q_from(ctx, ctx.zero);
        out.scale = out.weight1;
        out.sign = 0;
        // re-expansion check: L1^d * L2 == f
        std::vector<QuadExt> power = expand_linear_power(ctx, out.l1x, out.l1y, d);
        std::vector<QuadExt> full(d + 2, q_from(ctx, ctx.zero));
        for (int i = 0; i <= d; ++i) {
            full[i] = q_add(full[i], q_mul(ctx, power[i], out.l2x));
            full[i + 1] = q_add(full[i + 1], q_mul(ctx, power[i], out.l2y));
        }
        for (int i = 0; i <= d + 1; ++i)
            if (!q_eq(full[i], q_from(ctx, f.coeffs[i])))
                throw InternalError("tangent-power re-expansion mismatch");
        return out;
    }

    // SecantSum: crunode or acnode.
    out.kind = SylvesterDecomposition::Kind::SecantSum;
    auto alpha = normalize_param(ctx, cls.singular_params->first);
    auto beta = normalize_param(ctx, cls.singular_params->second);
    std::vector<QuadExt> na = nu_of(ctx, d, alpha);
    std::vector<QuadExt> nb = nu_of(ctx, d, beta);
    // Solve p = mu1 * nu[alpha] + mu2 * nu[beta] from two coordinates, then
    // verify the rest exactly.
    QuadExt mu1 = q_from(ctx, ctx.zero), mu2 = mu1;
    bool solved = false;
    for (int i = 0; i <= d + 1 && !solved; ++i)
        for (int j = i + 1; j <= d + 1 && !solved; ++j) {
            QuadExt det = q_sub(q_mul(ctx, na[i], nb[j]), q_mul(ctx, na[j], nb[i]));
            Scalar norm = det.a * det.a - ctx.delta * det.b * det.b;
            if (norm.is_zero()) continue;
            QuadExt pi = q_from(ctx, center.p[i]);
            QuadExt pj = q_from(ctx, center.p[j]);
            mu1 = q_div(ctx, q_sub(q_mul(ctx, pi, nb[j]), q_mul(ctx, pj, nb[i])), det);
            mu2 = q_div(ctx, q_sub(q_mul(ctx, na[i], pj), q_mul(ctx, na[j], pi)), det);
            solved = true;
        }
    if (!solved) throw InternalError("sylvester: no invertible coordinate pair");
    for (int i = 0; i <= d + 1; ++i) {
        QuadExt lhs = q_add(q_mul(ctx, mu1, na[i]), q_mul(ctx, mu2, nb[i]));
        if (!q_eq(lhs, q_from(ctx, center.p[i])))
            throw InternalError("sylvester: inconsistent linear solve");
    }
    out.l1x = alpha[1];
    out.l1y = q_neg(alpha[0]);
    out.l2x = beta[1];
    out.l2y = q_neg(beta[0]);
    // Sign-canonicalize the forms; L -> -L multiplies its weight by (-1)^{d+1}.
    QuadExt minus_one = q_from(ctx, lift_int(-1, ctx.one));
    if (canonicalize_linear_sign(out.l1x, out.l1y) < 0 && d % 2 == 0)
        mu1 = q_mul(ctx, mu1, minus_one);
    if (canonicalize_linear_sign(out.l2x, out.l2y) < 0 && d % 2 == 0)
        mu2 = q_mul(ctx, mu2, minus_one);
    out.weight1 = mu1;
    out.weight2 = mu2;
    out.scale = mu1;
    if (cls.delta_sign < 0) {
        out.sign = +1;  // conjugate pair, minus shape
    } else if (d % 2 == 0) {
        out.sign = +1;  // lower sign always attainable over R for even d
    } else {
        out.sign = (q_sign(ctx, mu1) == q_sign(ctx, mu2)) ? -1 : +1;
    }
    // re-expansion check: mu1 L1^{d+1} + mu2 L2^{d+1} == f
    std::vector<QuadExt> p1 = expand_linear_power(ctx, out.l1x, out.l1y, d + 1);
    std::vector<QuadExt> p2 = expand_linear_power(ctx, out.l2x, out.l2y, d + 1);
    for (int i = 0; i <= d + 1; ++i) {
        QuadExt v = q_add(q_mul(ctx, mu1, p1[i]), q_mul(ctx, mu2, p2[i]));
        if (!q_eq(v, q_from(ctx, f.coeffs[i])))
            throw InternalError("secant-sum re-expansion mismatch");
    }
    return out;
}

namespace {

bool matches_normal_form(const ProjectionCenter& center, const std::vector<Scalar>& model) {
    return proportional(ProjPoint{center.p}, ProjPoint{model});
}

}  // namespace

ProjectionCenter acnodal_normal_center(int d, const Scalar& model) {
    std::vector<Scalar> p(d + 2);
    for (int i = 0; i <= d + 1; ++i) {
        long v = 0;
        if (i % 2 == 1) v = ((i - 1) / 2) % 2 == 0 ? 1 : -1;
        p[i] = lift_int(v, model);
    }
    return make_center(d, std::move(p));
}

GroupCoord group_param(const ProjectionCenter& center, SingularityClass cls, const Param& param) {
    require_param_nonzero(param);
    const int d = center.d;
    const Scalar& x = param.first;
    const Scalar& y = param.second;
    switch (cls) {
        case SingularityClass::Cusp: {
            std::vector<Scalar> model(d + 2, lift_int(0, center.p[0]));
            model[1] = lift_int(1, center.p[0]);
            if (!matches_normal_form(center, model))
                throw UnsupportedCenter("group_param: center is not the cuspidal normal form");
            if (x.is_zero()) throw ParseError("group_param: singular parameter [0,1]");
            return {GroupCoordKind::Additive, y / x, lift_int(0, x)};
        }
        case SingularityClass::Crunode: {
            std::vector<Scalar> model(d + 2, lift_int(0, center.p[0]));
            model[0] = lift_int(1, center.p[0]);
            model[d + 1] = lift_int(-1, center.p[0]);
            if (!matches_normal_form(center, model))
                throw UnsupportedCenter("group_param: center is not the crunodal normal form");
            if (x.is_zero() || y.is_zero())
                throw ParseError("group_param: singular parameter [1,0] or [0,1]");
            return {GroupCoordKind::Multiplicative, y / x, lift_int(0, x)};
        }
        case SingularityClass::Acnode: {
            if (!matches_normal_form(center, acnodal_normal_center(d, center.p[0]).p))
                throw UnsupportedCenter("group_param: center is not the acnodal normal form");
            Scalar denom = x * x + y * y;
            if (denom.is_zero()) throw ParseError("group_param: singular parameter");
            Scalar dinv = denom.inverse();
            Scalar re = (x * x - y * y) * dinv;
            Scalar im = (x * y + x * y) * dinv;
            return {GroupCoordKind::Circle, re, im};
        }
        default:
            throw UnsupportedCenter("group_param: class carries no finite normal form group");
    }
}

bool group_identity_holds(const std::vector<GroupCoord>& coords) {
    if (coords.empty()) throw ParseError("group_identity_holds: empty input");
    for (const auto& c : coords)
        if (c.kind != coords[0].kind) throw ParseError("group_identity_holds: mixed coordinate kinds");
    switch (coords[0].kind) {
        case GroupCoordKind::Additive: {
            Scalar acc = coords[0].a;
            for (size_t i = 1; i < coords.size(); ++i) acc = acc + coords[i].a;
            return acc.is_zero();
        }
        case GroupCoordKind::Multiplicative: {
            Scalar acc = coords[0].a;
            for (size_t i = 1; i < coords.size(); ++i) acc = acc * coords[i].a;
            return acc.is_one();
        }
        case GroupCoordKind::Circle: {
            Scalar re = coords[0].a, im = coords[0].b;
            for (size_t i = 1; i < coords.size(); ++i) {
                Scalar nre = re * coords[i].a - im * coords[i].b;
                Scalar nim = re * coords[i].b + im * coords[i].a;
                re = nre;
                im = nim;
            }
            return re.is_one() && im.is_zero();
        }
    }
    return false;
}

}  // namespace ohw
