#include <random>

#include "doctest.h"
#include "ohw/construct.hpp"
#include "ohw/curve.hpp"

using namespace ohw;

namespace {

Scalar rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

ProjectionCenter center_of(std::initializer_list<long> vals) {
    std::vector<Scalar> p;
    for (long v : vals) p.push_back(rat(v));
    const int d = static_cast<int>(p.size()) - 2;
    return make_center(d, std::move(p));
}

ProjectionCenter cusp_center(int d) {
    std::vector<Scalar> p(d + 2, rat(0));
    p[1] = rat(1);
    return make_center(d, std::move(p));
}

ProjectionCenter crunode_center(int d) {
    std::vector<Scalar> p(d + 2, rat(0));
    p[0] = rat(1);
    p[d + 1] = rat(-1);
    return make_center(d, std::move(p));
}

Param rp(long x, long y) { return {rat(x), rat(y)}; }

std::vector<Param> random_distinct_params(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<int> v(-6, 6);
    std::vector<Param> out;
    while (static_cast<int>(out.size()) < count) {
        Param c{rat(v(rng)), rat(v(rng))};
        if (c.first.is_zero() && c.second.is_zero()) continue;
        bool dup = false;
        for (const auto& q : out)
            if ((q.first * c.second - q.second * c.first).is_zero()) dup = true;
        if (!dup) out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("rnc_point parametrization") {
    ProjPoint p = rnc_point(4, rp(0, 1));
    CHECK(p.coords == std::vector<Scalar>{rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)});
    ProjPoint q = rnc_point(4, rp(1, 0));
    CHECK(q.coords == std::vector<Scalar>{rat(0), rat(0), rat(0), rat(0), rat(0), rat(-1)});
    ProjPoint r = rnc_point(4, rp(1, 1));
    CHECK(r.coords == std::vector<Scalar>{rat(1), rat(-1), rat(1), rat(-1), rat(1), rat(-1)});
    CHECK_THROWS_AS(rnc_point(4, rp(0, 0)), ohw::ParseError);
}

TEST_CASE("projection chart") {
    // p = e_5: the chart drops coordinate 5
    std::vector<Scalar> pc(6, rat(0));
    pc[5] = rat(1);
    ProjectionCenter p = make_center(4, pc);
    ProjPoint v;
    v.coords = {rat(3), rat(1), rat(4), rat(1), rat(5), rat(9)};
    ProjPoint w = project(p, v);
    CHECK(w.coords == std::vector<Scalar>{rat(3), rat(1), rat(4), rat(1), rat(5)});
    CHECK_THROWS_AS(project(p, ProjPoint{pc}), ProjectionUndefined);

    ProjectionCenter ac = center_of({0, 1, 0, -1, 0, 1});
    ProjPoint img = project(ac, rnc_point(4, rp(1, 1)));
    bool nonzero = false;
    for (const auto& c : img.coords) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
    CHECK(img.coords.size() == 5);
}

TEST_CASE("curve_point on the cuspidal normal form") {
    ProjectionCenter p = cusp_center(4);
    ProjPoint a = curve_point(p, rp(1, 0));
    int nonzero = 0;
    for (const auto& c : a.coords) nonzero += !c.is_zero();
    CHECK(nonzero == 1);
    ProjPoint b = curve_point(p, rp(0, 1));
    CHECK(b.coords == std::vector<Scalar>{rat(1), rat(0), rat(0), rat(0), rat(0)});
    // projecting from a point of the curve is rejected
    ProjectionCenter on_curve = make_center(4, rnc_point(4, rp(1, 2)).coords);
    CHECK_THROWS_AS(curve_point(on_curve, rp(1, 1)), UnsupportedCenter);
}

TEST_CASE("fundamental_form golden coefficients") {
    // p = e_1: f_p = (d+1) x^d y
    for (int d : {3, 4, 6}) {
        BinaryForm f = fundamental_form(cusp_center(d));
        for (int i = 0; i <= d + 1; ++i)
            CHECK(f.coeffs[i] == (i == 1 ? rat(d + 1) : rat(0)));
    }
    // p = [1,0,...,0,-1]: f_p = x^{d+1} - y^{d+1}
    for (int d : {3, 5}) {
        BinaryForm f = fundamental_form(crunode_center(d));
        for (int i = 0; i <= d + 1; ++i)
            CHECK(f.coeffs[i] == (i == 0 ? rat(1) : i == d + 1 ? rat(-1) : rat(0)));
    }
    // acnodal normal form at d = 4: 5x^4y - 10x^2y^3 + y^5
    BinaryForm f = fundamental_form(center_of({0, 1, 0, -1, 0, 1}));
    CHECK(f.coeffs == std::vector<Scalar>{rat(0), rat(5), rat(0), rat(-10), rat(0), rat(1)});
}

TEST_CASE("polar_eval restitution, multilinearity, symmetry") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + trial % 7;  // d in 2..8
        std::vector<Scalar> pc(d + 2);
        bool nz = false;
        for (auto& c : pc) {
            c = rat(v(rng));
            nz = nz || !c.is_zero();
        }
        if (!nz) pc[0] = rat(1);
        ProjectionCenter p = make_center(d, pc);
        Param at{rat(v(rng)), rat(v(rng))};
        if (at.first.is_zero() && at.second.is_zero()) at.first = rat(1);
        // restitution: all slots equal evaluates f_p
        std::vector<Param> diag(d + 1, at);
        CHECK(polar_eval(p, diag) == binary_form_eval(fundamental_form(p), at));
    }
    // multilinearity in slot 0 and symmetry, spot-checked exactly
    ProjectionCenter p = center_of({2, -1, 3, 0, 1, 5});
    std::vector<Param> params = random_distinct_params(rng, 5);
    std::vector<Param> q1 = params, q2 = params, qsum = params;
    q1[0] = rp(1, 2);
    q2[0] = rp(3, -1);
    qsum[0] = {q1[0].first * rat(4) + q2[0].first, q1[0].second * rat(4) + q2[0].second};
    CHECK(polar_eval(p, qsum) == rat(4) * polar_eval(p, q1) + polar_eval(p, q2));
    std::vector<Param> perm = params;
    std::swap(perm[0], perm[3]);
    std::swap(perm[1], perm[4]);
    CHECK(polar_eval(p, perm) == polar_eval(p, params));
    CHECK_THROWS_AS(polar_eval(p, std::vector<Param>(3, rp(1, 1))), ohw::ParseError);
}

TEST_CASE("polar_eval degenerate centers") {
    // p = e_0: F_p = P_0 = prod x_j
    ProjectionCenter e0 = center_of({1, 0, 0, 0, 0, 0});
    std::vector<Param> params{rp(2, 5), rp(3, 1), rp(1, 1), rp(5, -2), rp(7, 4)};
    CHECK(polar_eval(e0, params) == rat(2 * 3 * 1 * 5 * 7));
    // p = e_1: F_p = P_1 vanishes when two x coordinates are zero
    std::vector<Param> two_zero{rp(0, 1), rp(0, 3), rp(1, 1), rp(5, -2), rp(7, 4)};
    CHECK(polar_eval(cusp_center(4), two_zero).is_zero());
}

TEST_CASE("determinant identity") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        int d = 2 + trial % 5;
        std::vector<Scalar> pc(d + 2);
        bool nz = false;
        for (auto& c : pc) {
            c = rat(v(rng));
            nz = nz || !c.is_zero();
        }
        if (!nz) pc[0] = rat(1);
        ProjectionCenter p = make_center(d, pc);
        CHECK(det_identity_check(p, random_distinct_params(rng, d + 1)));
    }
    // repeated parameters: both sides vanish
    ProjectionCenter p = center_of({1, 2, 3, 4, 5, 6});
    std::vector<Param> rep{rp(1, 1), rp(1, 1), rp(2, 1), rp(3, 1), rp(4, 1)};
    CHECK(det_identity_check(p, rep));
}

TEST_CASE("center spanned by nu rows is cohyperplanar there") {
    // p in the span of nu[params]: F_p(params) = 0
    std::mt19937_64 rng(23);
    std::vector<Param> params = random_distinct_params(rng, 5);
    std::vector<Scalar> pc(6, rat(0));
    long w = 1;
    for (const auto& pr : params) {
        ProjPoint nu = rnc_point(4, pr);
        for (int i = 0; i < 6; ++i) pc[i] = pc[i] + rat(w) * nu.coords[i];
        ++w;
    }
    ProjectionCenter p = make_center(4, pc);
    CHECK(cohyperplanar(p, params));
    CHECK(det_identity_check(p, params));
    // generic parameters do not lie on a common hyperplane
    ProjectionCenter generic = center_of({1, 2, -3, 4, 5, 7});
    CHECK_FALSE(cohyperplanar(generic, {rp(1, 0), rp(0, 1), rp(1, 1), rp(1, 2), rp(2, 1)}));
}

TEST_CASE("hankel matrices") {
    ProjectionCenter on = make_center(4, rnc_point(4, rp(1, 1)).coords);
    CHECK(rank(hankel(on, 2)) == 1);
    CHECK(rank(hankel(crunode_center(4), 2)) == 2);
    ProjectionCenter generic = center_of({1, 2, -3, 4, 5, 7});
    CHECK(rank(hankel(generic, 2)) == 3);
    CHECK_THROWS_AS(hankel(generic, 1), ohw::ParseError);
    CHECK_THROWS_AS(hankel(generic, 4), ohw::ParseError);
    // entries are constant along anti-diagonals by construction
    auto m = hankel(generic, 3);
    CHECK(m.size() == 4);
    CHECK(m[0].size() == 3);
    CHECK(m[0][1] == m[1][0]);
}

TEST_CASE("classification golden set") {
    for (int d : {3, 4, 5, 6}) {
        CHECK(classify(cusp_center(d)).cls == SingularityClass::Cusp);
        Classification cr = classify(crunode_center(d));
        CHECK(cr.cls == SingularityClass::Crunode);
        CHECK(cr.delta_sign == 1);
        // node parameters [1,0] and [0,1]
        REQUIRE(cr.singular_params.has_value());
        const auto& [a, b] = *cr.singular_params;
        bool first_is_01 = a[0].a.is_zero();
        const auto& p01 = first_is_01 ? a : b;
        const auto& p10 = first_is_01 ? b : a;
        CHECK(p01[0].a.is_zero());
        CHECK(p01[1].a.is_one());
        CHECK(p10[1].a.is_zero());
        CHECK_FALSE(p10[0].a.is_zero());
        CHECK(classify(acnodal_normal_center(d)).cls == SingularityClass::Acnode);
        CHECK(classify(make_center(d, rnc_point(d, rp(2, 3)).coords)).cls ==
              SingularityClass::OnCurve);
    }
    // acnodal normal form at d = 4 has discriminant exactly -1
    Classification ac = classify(center_of({0, 1, 0, -1, 0, 1}));
    CHECK(ac.delta == rat(-1));
    CHECK(ac.delta_sign == -1);
    // seeded random centers are smooth, asserted through the rank
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> v(-9, 9);
    for (int t = 0; t < 20; ++t) {
        int d = 3 + t % 4;
        std::vector<Scalar> pc(d + 2);
        for (auto& c : pc) c = rat(v(rng));
        if (pc[0].is_zero()) pc[0] = rat(1);
        ProjectionCenter p = make_center(d, pc);
        CHECK(rank(hankel(p, 2)) == 3);
        CHECK(classify(p).cls == SingularityClass::Smooth);
    }
}

TEST_CASE("sylvester decomposition golden cases") {
    for (int d : {3, 4, 5}) {
        SylvesterDecomposition cusp = sylvester_decompose(cusp_center(d));
        CHECK(cusp.kind == SylvesterDecomposition::Kind::TangentPower);
        CHECK(cusp.l1x.a.is_one());
        CHECK(cusp.l1y.a.is_zero());
        CHECK(cusp.l2x.a.is_zero());
        CHECK(cusp.l2y.a == rat(d + 1));

        SylvesterDecomposition cr = sylvester_decompose(crunode_center(d));
        CHECK(cr.kind == SylvesterDecomposition::Kind::SecantSum);
        CHECK(cr.sign == 1);
        // L1 = x, L2 = y with weights 1 and -1: x^{d+1} - y^{d+1}
        CHECK(cr.l1x.a.is_one());
        CHECK(cr.l1y.a.is_zero());
        CHECK(cr.l2x.a.is_zero());
        CHECK(cr.l2y.a.is_one());
        CHECK(cr.weight1.a.is_one());
        CHECK(cr.weight2.a == rat(-1));

        SylvesterDecomposition ac = sylvester_decompose(acnodal_normal_center(d));
        CHECK(ac.kind == SylvesterDecomposition::Kind::SecantSum);
        CHECK(ac.sign == 1);
        CHECK_FALSE(ac.l1x.b.is_zero());  // conjugate pair lives in the extension
    }
    // on-curve centers decompose as a pure power
    SylvesterDecomposition on = sylvester_decompose(make_center(4, rnc_point(4, rp(1, 2)).coords));
    CHECK(on.kind == SylvesterDecomposition::Kind::TangentPower);
    // smooth centers are rejected
    CHECK_THROWS_AS(sylvester_decompose(center_of({1, 2, -3, 4, 5, 7})), UnsupportedCenter);
    // a crunodal center with irrational node parameters still decomposes
    // exactly over the extension: p = nu[1,1] + 2 nu[1,3] has real secants
    std::vector<Scalar> pc(6, rat(0));
    ProjPoint n1 = rnc_point(4, rp(1, 1)), n2 = rnc_point(4, rp(1, 3));
    for (int i = 0; i < 6; ++i) pc[i] = n1.coords[i] + rat(2) * n2.coords[i];
    SylvesterDecomposition gen = sylvester_decompose(make_center(4, pc));
    CHECK(gen.kind == SylvesterDecomposition::Kind::SecantSum);
    CHECK(gen.sign == 1);  // d even: the difference shape is always attainable
}

TEST_CASE("group coordinates on the normal forms") {
    // cusp: sum of y/x
    ProjectionCenter cu = cusp_center(4);
    std::vector<Param> add{rp(1, 1), rp(1, 2), rp(1, 3), rp(1, -5), rp(1, -1)};
    std::vector<GroupCoord> coords;
    for (const auto& pr : add) coords.push_back(group_param(cu, SingularityClass::Cusp, pr));
    CHECK(group_identity_holds(coords));  // 1+2+3-5-1 = 0
    CHECK(cohyperplanar(cu, add));
    coords[0] = group_param(cu, SingularityClass::Cusp, rp(1, 2));
    CHECK_FALSE(group_identity_holds(coords));
    CHECK_THROWS_AS(group_param(cu, SingularityClass::Cusp, rp(0, 1)), ohw::ParseError);

    // crunode: product of y/x
    ProjectionCenter cr = crunode_center(4);
    std::vector<Param> mul{rp(1, 2), rp(1, 3), rp(2, 1), rp(3, 1), rp(1, 1)};
    coords.clear();
    for (const auto& pr : mul) coords.push_back(group_param(cr, SingularityClass::Crunode, pr));
    CHECK(group_identity_holds(coords));  // 2*3*(1/2)*(1/3)*1 = 1
    CHECK(cohyperplanar(cr, mul));
    CHECK_THROWS_AS(group_param(cr, SingularityClass::Crunode, rp(1, 0)), ohw::ParseError);

    // the wrong normal form is rejected
    CHECK_THROWS_AS(group_param(cu, SingularityClass::Crunode, rp(1, 1)), UnsupportedCenter);
}

TEST_CASE("acnodal bridge: circle identity vs cohyperplanarity, exhaustive n = 8") {
    const int d = 4, n = 8;
    const long period = static_cast<long>(n) * (d + 1);
    unsigned modulus = std::lcm(4u, 2u * static_cast<unsigned>(period));
    Scalar model(Cyclo(CycloField::get(modulus)));
    ProjectionCenter center = acnodal_normal_center(d, model);
    const long j = 1;
    std::vector<Param> params;
    for (int k = 0; k < n; ++k) {
        auto [c, s] = root_of_unity_parts(2 * period, k * (d + 1) + j);
        params.push_back({c, s});
    }
    // all 5-subsets: cohyperplanar iff the circle product is 1 iff sum of
    // indices is -j mod n
    std::vector<int> subset;
    first_subset(subset, d + 1);
    do {
        std::vector<Param> sel;
        std::vector<GroupCoord> coords;
        int sum = 0;
        for (int i : subset) {
            sel.push_back(params[i]);
            coords.push_back(group_param(center, SingularityClass::Acnode, params[i]));
            sum += i;
        }
        bool expect = (sum + static_cast<int>(j)) % n == 0;
        CHECK(cohyperplanar(center, sel) == expect);
        CHECK(group_identity_holds(coords) == expect);
    } while (next_subset_colex(subset, n));
    // tangency: a doubled point plus three distinct ones
    for (int k0 : {0, 2}) {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = k1 + 1; k2 < n; ++k2) {
                if (k1 == k0 || k2 == k0) continue;
                for (int k3 = k2 + 1; k3 < n; ++k3) {
                    if (k3 == k0) continue;
                    std::vector<Param> sel{params[k0], params[k0], params[k1], params[k2],
                                           params[k3]};
                    bool expect = (2 * k0 + k1 + k2 + k3 + static_cast<int>(j)) % n == 0;
                    CHECK(cohyperplanar(center, sel) == expect);
                }
            }
    }
}
