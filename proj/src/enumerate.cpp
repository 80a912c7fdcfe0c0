#include "ohw/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace ohw {

namespace {

using HyperplaneMap = std::map<std::string, std::vector<Scalar>>;

// Collects the distinct canonical hyperplanes spanned by the points. When
// `allow_degenerate` is set, non-spanning subsets are skipped instead of
// raising.
HyperplaneMap collect_hyperplanes(const std::vector<ProjPoint>& points, int d, int workers,
                                  bool allow_degenerate) {
    const int n = static_cast<int>(points.size());
    const long long total = binomial_ll(n, d);
    long long cap = std::max<long long>(1, total / 64);
    workers = static_cast<int>(std::max<long long>(1, std::min<long long>(workers, cap)));

    std::vector<HyperplaneMap> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    const long long chunk = (total + workers - 1) / workers;

    auto run = [&](int w) {
        try {
            long long lo = w * chunk;
            long long hi = std::min(total, lo + chunk);
            if (lo >= hi) return;
            std::vector<int> subset = unrank_subset_colex(lo, n, d);
            std::vector<const ProjPoint*> pts(d);
            for (long long r = lo; r < hi; ++r) {
                for (int i = 0; i < d; ++i) pts[i] = &points[subset[i]];
                std::vector<Scalar> cov = nullspace_covector(pts);
                bool zero = std::all_of(cov.begin(), cov.end(),
                                        [](const Scalar& s) { return s.is_zero(); });
                if (zero) {
                    if (allow_degenerate) {
                        next_subset_colex(subset, n);
                        continue;
                    }
                    throw DegenerateSubset("points do not span a hyperplane", subset);
                }
                std::string key = canonicalize_normal(cov);
                partial[w].emplace(std::move(key), std::move(cov));
                next_subset_colex(subset, n);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    HyperplaneMap merged = std::move(partial[0]);
    for (int w = 1; w < workers; ++w) merged.merge(partial[w]);
    return merged;
}

long long count_incident(const std::vector<Scalar>& normal, const std::vector<ProjPoint>& points) {
    long long c = 0;
    Hyperplane h{normal, ""};
    for (const auto& p : points)
        if (incident(h, p)) ++c;
    return c;
}

}  // namespace

SpectrumReport spectrum(const Configuration& cfg, int workers) {
    validate_configuration(cfg);
    const int n = cfg.n(), d = cfg.dim;
    if (n < d) throw ParseError("spectrum: fewer than d points");
    HyperplaneMap planes = collect_hyperplanes(cfg.points, d, workers, false);

    SpectrumReport report;
    report.n = n;
    report.d = d;
    for (const auto& [key, normal] : planes) {
        (void)key;
        long long i = count_incident(normal, cfg.points);
        if (i < d) throw InternalError("spectrum: spanned hyperplane with fewer than d points");
        ++report.counts[static_cast<int>(i)];
    }
    long long check = 0;
    for (const auto& [i, m] : report.counts) {
        check += binomial_ll(i, d) * m;
        report.total_hyperplanes += m;
    }
    if (check != binomial_ll(n, d))
        throw InternalError("spectrum: counting identity violated");
    auto it = report.counts.find(d);
    report.ordinary = it == report.counts.end() ? 0 : it->second;
    it = report.counts.find(d + 1);
    report.dplus1 = it == report.counts.end() ? 0 : it->second;
    return report;
}

long long through_point_exactly(const Configuration& cfg, const ProjPoint& q, int t,
                                int workers) {
    validate_configuration(cfg);
    for (const auto& p : cfg.points)
        if (proportional(p, q)) throw ParseError("through_point_exactly: q is a configuration point");
    if (t > cfg.n() || t < 0) return 0;

    std::vector<ProjPoint> all = cfg.points;
    all.push_back(q);
    HyperplaneMap planes = collect_hyperplanes(all, cfg.dim, workers, true);
    long long hits = 0;
    for (const auto& [key, normal] : planes) {
        (void)key;
        Hyperplane h{normal, ""};
        if (!incident(h, q)) continue;
        if (count_incident(normal, cfg.points) == t) ++hits;
    }
    return hits;
}

bool stability_check(const Configuration& cfg, const std::vector<int>& removed, int workers) {
    const int n = cfg.n(), d = cfg.dim;
    std::vector<char> drop(cfg.points.size(), 0);
    for (int i : removed) {
        if (i < 0 || i >= n) throw ParseError("stability_check: removal index out of range");
        if (drop[i]) throw ParseError("stability_check: repeated removal index");
        drop[i] = 1;
    }
    const int k = static_cast<int>(removed.size());
    if (n - k < d + 1) throw ParseError("stability_check: too few points would remain");

    Configuration rest;
    rest.dim = d;
    rest.label = cfg.label + " minus " + std::to_string(k);
    for (int i = 0; i < n; ++i)
        if (!drop[i]) rest.points.push_back(cfg.points[i]);

    SpectrumReport before = spectrum(cfg, workers);
    SpectrumReport after = spectrum(rest, workers);
    // after.ordinary <= before.ordinary + (1/d) k binom(n-1, d-1), checked in
    // integers as d * lhs <= d * rhs + k * binom.
    return d * after.ordinary <= d * before.ordinary + (long long)k * binomial_ll(n - 1, d - 1);
}

}  // namespace ohw
