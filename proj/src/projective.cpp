#include "ohw/projective.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ohw {

namespace {

void require_rectangular(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return;
    const size_t w = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != w) throw ParseError("rank: ragged matrix");
        for (const auto& e : r)
            if (!e.same_backend(rows[0][0])) throw BackendMismatch("rank: mixed backends");
    }
}

int rank_bareiss_integer(const std::vector<std::vector<Scalar>>& rows) {
    const size_t nr = rows.size(), nc = rows[0].size();
    // Clear denominators row by row; rank is scale-invariant per row.
    std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc));
    for (size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rows[i][j].rat().get_den().get_mpz_t());
        for (size_t j = 0; j < nc; ++j) {
            mpq_class v = rows[i][j].rat() * l;
            m[i][j] = v.get_num();  // denominator is 1 by construction
        }
    }
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = r;
        while (piv < nr && m[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = c + 1; j < nc; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw InternalError("Bareiss division not exact");
                m[i][j] = q;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_field_elimination(std::vector<std::vector<Scalar>> m) {
    const size_t nr = m.size(), nc = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t piv = r;
        while (piv < nr && m[piv][c].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(m[r], m[piv]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < nc; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = r + 1; i < nr; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < nc; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return 0;
    require_rectangular(rows);
    if (rows[0].empty()) return 0;
    if (rows[0][0].is_rational()) return rank_bareiss_integer(rows);
    return rank_field_elimination(rows);
}

bool proportional(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords.size() != b.coords.size()) return false;
    size_t i0 = 0;
    while (i0 < a.coords.size() && a.coords[i0].is_zero()) ++i0;
    if (i0 == a.coords.size()) throw InternalError("proportional: zero point");
    if (b.coords[i0].is_zero()) return false;
    Scalar ratio = b.coords[i0] / a.coords[i0];
    for (size_t j = 0; j < a.coords.size(); ++j)
        if (!(b.coords[j] == a.coords[j] * ratio)) return false;
    return true;
}

void validate_configuration(const Configuration& cfg) {
    if (cfg.dim < 2) throw ParseError("configuration dimension must be at least 2");
    if (cfg.points.empty()) throw ParseError("configuration has no points");
    const Scalar& model = cfg.points[0].coords.at(0);
    for (const auto& p : cfg.points) {
        if (static_cast<int>(p.coords.size()) != cfg.dim + 1)
            throw ParseError("point coordinate count does not match dimension");
        bool nonzero = false;
        for (const auto& c : p.coords) {
            if (!c.same_backend(model)) throw BackendMismatch("configuration mixes scalar backends");
            nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) throw ParseError("zero vector is not a projective point");
    }
    for (size_t i = 0; i < cfg.points.size(); ++i)
        for (size_t j = i + 1; j < cfg.points.size(); ++j)
            if (proportional(cfg.points[i], cfg.points[j]))
                throw ParseError("configuration has coincident points " + std::to_string(i) +
                                 " and " + std::to_string(j));
}

std::vector<Scalar> nullspace_covector(const std::vector<const ProjPoint*>& pts) {
    const int d = static_cast<int>(pts.size());
    const int w = d + 1;
    for (const auto* p : pts)
        if (static_cast<int>(p->coords.size()) != w)
            throw ParseError("hyperplane_through: expected d points with d+1 coordinates");
    // Laplace expansion row by row over column subsets: minor(r, S) for all
    // S of size r+1, ending with all maximal minors in one pass.
    std::map<uint32_t, Scalar> level;
    for (int j = 0; j < w; ++j) level[uint32_t(1) << j] = pts[0]->coords[j];
    for (int r = 1; r < d; ++r) {
        std::map<uint32_t, Scalar> out;
        for (const auto& [mask, det] : level) {
            for (int j = 0; j < w; ++j) {
                uint32_t bit = uint32_t(1) << j;
                if (mask & bit) continue;
                uint32_t nm = mask | bit;
                // sign of the expansion term: row r, column position of j in nm
                int pos = __builtin_popcount(nm & (bit - 1));
                Scalar term = pts[r]->coords[j] * det;
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
    std::vector<Scalar> normal(w);
    const uint32_t full = (uint32_t(1) << w) - 1;
    for (int j = 0; j < w; ++j) {
        uint32_t mask = full ^ (uint32_t(1) << j);
        Scalar minor = level.at(mask);
        normal[j] = (j % 2) ? -minor : minor;
    }
    return normal;
}

std::string canonicalize_normal(std::vector<Scalar>& normal) {
    size_t i0 = 0;
    while (i0 < normal.size() && normal[i0].is_zero()) ++i0;
    if (i0 == normal.size()) throw DegenerateSubset("zero covector: points do not span a hyperplane");
    std::ostringstream key;
    if (normal[i0].is_rational()) {
        // Primitive integer vector, positive leading entry.
        mpz_class l = 1;
        for (const auto& s : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.rat().get_den().get_mpz_t());
        std::vector<mpz_class> v(normal.size());
        mpz_class g = 0;
        for (size_t j = 0; j < normal.size(); ++j) {
            v[j] = mpq_class(normal[j].rat() * l).get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        int lead = sgn(v[i0]);
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            if (lead < 0) x = -x;
        }
        key << "r|";
        for (size_t j = 0; j < v.size(); ++j) {
            if (j) key << ',';
            key << v[j].get_str();
        }
    } else {
        key << "c|";
    }
    Scalar inv = normal[i0].inverse();
    for (auto& s : normal) s = s * inv;
    if (!normal[i0].is_rational()) {
        for (size_t j = 0; j < normal.size(); ++j) {
            if (j) key << ';';
            key << normal[j].key();
        }
    }
    return key.str();
}

Hyperplane hyperplane_through(const std::vector<const ProjPoint*>& pts) {
    std::vector<Scalar> normal = nullspace_covector(pts);
    Hyperplane h;
    h.normal = std::move(normal);
    h.key = canonicalize_normal(h.normal);
    return h;
}

Hyperplane hyperplane_through(const std::vector<ProjPoint>& pts) {
    std::vector<const ProjPoint*> ptrs;
    ptrs.reserve(pts.size());
    for (const auto& p : pts) ptrs.push_back(&p);
    return hyperplane_through(ptrs);
}

bool incident(const Hyperplane& h, const ProjPoint& p) {
    if (h.normal.size() != p.coords.size())
        throw ParseError("incident: dimension mismatch");
    Scalar acc = (h.normal[0] * p.coords[0]);
    for (size_t j = 1; j < h.normal.size(); ++j) acc = acc + h.normal[j] * p.coords[j];
    return acc.is_zero();
}

GeneralPositionReport general_position(const Configuration& cfg) {
    validate_configuration(cfg);
    const int n = cfg.n(), d = cfg.dim;
    if (n < d) throw ParseError("general_position: fewer than d points");
    std::vector<int> subset;
    first_subset(subset, d);
    do {
        std::vector<const ProjPoint*> pts;
        pts.reserve(d);
        for (int i : subset) pts.push_back(&cfg.points[i]);
        std::vector<Scalar> cov = nullspace_covector(pts);
        bool all_zero = std::all_of(cov.begin(), cov.end(), [](const Scalar& s) { return s.is_zero(); });
        if (all_zero) return {false, subset};
    } while (next_subset_colex(subset, n));
    return {true, {}};
}

void first_subset(std::vector<int>& subset, int k) {
    subset.resize(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
}

bool next_subset_colex(std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i) {
        int cap = (i + 1 < k) ? subset[i + 1] : n;
        if (subset[i] + 1 < cap) {
            ++subset[i];
            for (int j = 0; j < i; ++j) subset[j] = j;
            return true;
        }
    }
    return false;
}

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long num = 1;
    for (int i = 1; i <= k; ++i) {
        num = num * (n - k + i) / i;  // exact at each step
    }
    return num;
}

std::vector<int> unrank_subset_colex(long long rank, int n, int k) {
    // Combinatorial number system: rank = sum_i C(a_i, i+1), a_1 < ... < a_k.
    std::vector<int> subset(k);
    for (int i = k; i >= 1; --i) {
        int a = i - 1;
        for (int cand = n - 1; cand >= i - 1; --cand) {
            if (binomial_ll(cand, i) <= rank) {
                a = cand;
                break;
            }
        }
        subset[i - 1] = a;
        rank -= binomial_ll(a, i);
        n = a;
    }
    return subset;
}

}  // namespace ohw
