#include "ohw/construct.hpp"

#include <numeric>
#include <sstream>

namespace ohw {

Configuration near_pencil(int d, int n) {
    if (d < 2) throw ParseError("near_pencil: d >= 2 required");
    if (n < d + 2) throw ParseError("near_pencil: n >= d + 2 required");
    Configuration cfg;
    cfg.dim = d;
    cfg.label = "near-pencil d=" + std::to_string(d) + " n=" + std::to_string(n);
    for (int t = 1; t <= n - 1; ++t) {
        ProjPoint p;
        p.coords.resize(d + 1);
        mpq_class power(1);
        for (int i = 0; i < d; ++i) {
            p.coords[i] = Scalar(power);
            power *= t;
        }
        p.coords[d] = Scalar(mpq_class(0));
        cfg.points.push_back(std::move(p));
    }
    ProjPoint apex;
    apex.coords.assign(d + 1, Scalar(mpq_class(0)));
    apex.coords[d] = Scalar(mpq_class(1));
    cfg.points.push_back(std::move(apex));
    GeneralPositionReport gp = general_position(cfg);
    if (!gp.ok) throw InternalError("near_pencil: general position failed unexpectedly");
    return cfg;
}

namespace {

ProjPoint coset_point(const ProjectionCenter& center, unsigned half_modulus, long angle_index) {
    // parameter [cos(pi * idx / m), sin(pi * idx / m)] with m = half_modulus
    auto [c, s] = root_of_unity_parts(2 * half_modulus, angle_index);
    return curve_point(center, Param{c, s});
}

}  // namespace

std::pair<Configuration, CosetMeta> acnodal_coset(int d, int n, long j) {
    if (d < 3) throw ParseError("acnodal_coset: d >= 3 required");
    if (n < d + 2) throw ParseError("acnodal_coset: n >= d + 2 required");
    const long period = static_cast<long>(n) * (d + 1);
    if (j < 0 || j >= period) throw ParseError("acnodal_coset: offset out of range 0..n(d+1)-1");

    CosetMeta meta;
    meta.d = d;
    meta.n = n;
    meta.j = j;
    meta.group = Group::cyclic(n);
    meta.c = static_cast<int>(((-j) % n + n) % n);
    meta.modulus = std::lcm(4u, 2u * static_cast<unsigned>(period));

    Scalar model(Cyclo(CycloField::get(meta.modulus)));
    ProjectionCenter center = acnodal_normal_center(d, model);

    Configuration cfg;
    cfg.dim = d;
    std::ostringstream label;
    label << "acnodal-coset d=" << d << " n=" << n << " j=" << j;
    cfg.label = label.str();
    for (int k = 0; k < n; ++k)
        cfg.points.push_back(coset_point(center, static_cast<unsigned>(period),
                                         static_cast<long>(k) * (d + 1) + j));

    validate_configuration(cfg);  // asserts distinctness
    GeneralPositionReport gp = general_position(cfg);
    if (!gp.ok) throw InternalError("acnodal_coset: general position failed unexpectedly");
    return {std::move(cfg), meta};
}

ProjPoint off_coset_probe(const CosetMeta& meta, long r) {
    const long period = static_cast<long>(meta.n) * (meta.d + 1);
    long rr = ((r % period) + period) % period;
    if (((rr - meta.j) % (meta.d + 1) + (meta.d + 1)) % (meta.d + 1) == 0)
        throw ParseError("off_coset_probe: angle index lies on the coset");
    Scalar model(Cyclo(CycloField::get(meta.modulus)));
    ProjectionCenter center = acnodal_normal_center(meta.d, model);
    return coset_point(center, static_cast<unsigned>(period), rr);
}

Configuration perturb(const Configuration& cfg, const std::vector<int>& remove,
                      const std::vector<ProjPoint>& add) {
    std::vector<char> drop(cfg.points.size(), 0);
    for (int i : remove) {
        if (i < 0 || i >= cfg.n()) throw ParseError("perturb: removal index out of range");
        drop[i] = 1;
    }
    Configuration out;
    out.dim = cfg.dim;
    for (int i = 0; i < cfg.n(); ++i)
        if (!drop[i]) out.points.push_back(cfg.points[i]);
    for (const auto& p : add) out.points.push_back(p);
    std::ostringstream label;
    label << cfg.label << " [-" << remove.size() << " +" << add.size() << "]";
    out.label = label.str();
    if (out.n() < cfg.dim + 1) throw ParseError("perturb: fewer than d+1 points remain");
    validate_configuration(out);
    GeneralPositionReport gp = general_position(out);
    if (!gp.ok) throw DegenerateSubset("perturb: general position violated", gp.witness);
    return out;
}

}  // namespace ohw
