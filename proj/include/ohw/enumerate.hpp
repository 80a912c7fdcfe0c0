#pragma once

#include <map>
#include <vector>

#include "ohw/projective.hpp"

namespace ohw {

// The hyperplane spectrum of a configuration: counts[i] is the number of
// distinct hyperplanes containing exactly i of its points. Satisfies
// sum_i binom(i, d) counts[i] = binom(n, d) under general position.
struct SpectrumReport {
    int n = 0;
    int d = 0;
    std::map<int, long long> counts;
    long long ordinary = 0;       // counts[d]
    long long dplus1 = 0;         // counts[d+1]
    long long total_hyperplanes = 0;

    bool operator==(const SpectrumReport& other) const {
        return n == other.n && d == other.d && counts == other.counts;
    }
};

// Exhaustive exact spectrum over all C(n, d) spanning subsets, grouped by
// canonical hyperplane key. The subset stream is split into contiguous
// colexicographic chunks per worker; the result is identical for any worker
// count. Throws DegenerateSubset (with witness) on a general-position
// violation; throws InternalError if the counting identity fails.
SpectrumReport spectrum(const Configuration& cfg, int workers = 1);

// Number of hyperplanes spanned by cfg + {q} that contain q and exactly t
// points of cfg. Degenerate d-subsets of the union span nothing and are
// skipped. Throws ParseError when q coincides with a configuration point.
long long through_point_exactly(const Configuration& cfg, const ProjPoint& q, int t,
                                int workers = 1);

// Removing K points from an n-point configuration may create at most
// (1/d) K binom(n-1, d-1) new ordinary hyperplanes. Enumerates both spectra
// and checks that bound exactly.
bool stability_check(const Configuration& cfg, const std::vector<int>& removed,
                     int workers = 1);

}  // namespace ohw
