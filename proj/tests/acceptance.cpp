// Acceptance suite: runs every criterion of the workbench end to end and
// prints one pass/fail line each. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "ohw/config_io.hpp"
#include "ohw/construct.hpp"
#include "ohw/curve.hpp"
#include "ohw/enumerate.hpp"
#include "ohw/groupmodel.hpp"

using namespace ohw;

namespace {

int g_failures = 0;

int workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 4u));
}

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << id << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << " (" << ms << " ms)\n"
              << std::flush;
    if (!ok) ++g_failures;
}

Scalar rat(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

long long expected_min_d4(int n) {
    return binomial_ll(n - 1, 3) - (n % 5 == 0 ? 4 : 0);
}

long long expected_min_d6(int n) {
    return binomial_ll(n - 1, 5) - (n % 7 == 0 ? 6 : 0);
}

Configuration shuffled(const Configuration& cfg, std::mt19937_64& rng) {
    Configuration out = cfg;
    std::shuffle(out.points.begin(), out.points.end(), rng);
    out.label += " shuffled";
    return out;
}

Configuration transformed(const Configuration& cfg, std::mt19937_64& rng) {
    const int size = cfg.dim + 1;
    std::uniform_int_distribution<int> v(-4, 4);
    for (;;) {
        std::vector<std::vector<mpq_class>> m(size, std::vector<mpq_class>(size));
        std::vector<std::vector<Scalar>> rows(size, std::vector<Scalar>(size));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                m[i][j] = v(rng);
                rows[i][j] = Scalar(m[i][j]);
            }
        if (rank(rows) != size) continue;
        Configuration out;
        out.dim = cfg.dim;
        out.label = cfg.label + " transformed";
        for (const auto& p : cfg.points) {
            ProjPoint q;
            q.coords.resize(size);
            for (int i = 0; i < size; ++i) {
                Scalar acc = Scalar(m[i][0]).lift_like(p.coords[0]) * p.coords[0];
                for (int j = 1; j < size; ++j)
                    acc = acc + Scalar(m[i][j]).lift_like(p.coords[0]) * p.coords[j];
                q.coords[i] = acc;
            }
            out.points.push_back(std::move(q));
        }
        return out;
    }
}

}  // namespace

int main() {
    const int W = workers();
    std::cout << "acceptance suite, " << W << " worker(s)\n";

    criterion(1, "exact extremal minima, d=4, 8<=n<=30", [](std::string& detail) {
        for (int n = 8; n <= 30; ++n) {
            long long got = minimize_ordinary(4, n).value;
            if (got != expected_min_d4(n) || got != closed_form_min(4, n)) {
                detail = "n=" + std::to_string(n) + " got " + std::to_string(got);
                return false;
            }
        }
        if (minimize_ordinary(4, 10).value != 80) return false;
        if (minimize_ordinary(4, 11).value != 120) return false;
        return true;
    });

    criterion(2, "exact extremal minima, d=5, 8<=n<=24, both kinds", [](std::string& detail) {
        for (int n = 8; n <= 24; ++n) {
            long long got = minimize_ordinary(5, n).value;
            if (got != closed_form_min(5, n)) {
                detail = "n=" + std::to_string(n) + " got " + std::to_string(got);
                return false;
            }
        }
        return minimize_ordinary(5, 8).value == 32 && minimize_ordinary(5, 9).value == 66 &&
               minimize_ordinary(5, 12).value == 312;
    });

    criterion(3, "exact extremal minima, d=6, 9<=n<=21", [](std::string& detail) {
        for (int n = 9; n <= 21; ++n) {
            long long got = minimize_ordinary(6, n).value;
            if (got != expected_min_d6(n) || got != closed_form_min(6, n)) {
                detail = "n=" + std::to_string(n) + " got " + std::to_string(got);
                return false;
            }
        }
        return minimize_ordinary(6, 14).value == 1281 && minimize_ordinary(6, 15).value == 2002;
    });

    criterion(4, "maximum (d+1)-point tables, d=4,5,6", [](std::string& detail) {
        for (int n = 8; n <= 30; ++n)
            if (maximize_dplus1(4, n).value != closed_form_max(4, n)) {
                detail = "d=4 n=" + std::to_string(n);
                return false;
            }
        for (int n = 8; n <= 24; ++n)
            if (maximize_dplus1(5, n).value != closed_form_max(5, n)) {
                detail = "d=5 n=" + std::to_string(n);
                return false;
            }
        for (int n = 9; n <= 21; ++n)
            if (maximize_dplus1(6, n).value != closed_form_max(6, n)) {
                detail = "d=6 n=" + std::to_string(n);
                return false;
            }
        return maximize_dplus1(4, 10).value == 26 && maximize_dplus1(4, 11).value == 42 &&
               maximize_dplus1(5, 12).value == 80 && maximize_dplus1(6, 14).value == 246;
    });

    criterion(5, "recurrence equals brute force, weights in {1,2,3}, k<=6, n<=14",
              [](std::string& detail) {
                  long long checked = 0;
                  for (int n = 1; n <= 14; ++n) {
                      std::vector<Group> kinds{Group::cyclic(n)};
                      if (n % 4 == 0) kinds.push_back(Group::product(n));
                      for (const Group& g : kinds) {
                          // sorted-descending weight multisets over {1,2,3} with a
                          // trailing 1; permutation invariance covers the rest
                          std::function<bool(std::vector<int>&)> rec =
                              [&](std::vector<int>& w) -> bool {
                              if (!w.empty() && w.back() == 1) {
                                  std::vector<long long> hist = count_all_targets(g, w);
                                  for (int c = 0; c < g.n; ++c) {
                                      if (count_recurrence(g, {w, c}) != hist[c]) {
                                          detail = g.name() + " weights";
                                          for (int x : w) detail += " " + std::to_string(x);
                                          detail += " c=" + std::to_string(c);
                                          return false;
                                      }
                                      ++checked;
                                  }
                              }
                              if (static_cast<int>(w.size()) == 6) return true;
                              int hi = w.empty() ? 3 : w.back();
                              for (int next = hi; next >= 1; --next) {
                                  w.push_back(next);
                                  if (!rec(w)) return false;
                                  w.pop_back();
                              }
                              return true;
                          };
                          std::vector<int> w;
                          if (!rec(w)) return false;
                      }
                  }
                  detail = std::to_string(checked) + " instances";
                  return checked > 0;
              });

    criterion(6, "determinant identity, 100 seeded instances per d in 2..6",
              [](std::string& detail) {
                  std::mt19937_64 rng(20240601);
                  std::uniform_int_distribution<int> v(-7, 7);
                  for (int d = 2; d <= 6; ++d)
                      for (int trial = 0; trial < 100; ++trial) {
                          std::vector<Scalar> pc(d + 2);
                          bool nz = false;
                          for (auto& c : pc) {
                              c = rat(v(rng));
                              nz = nz || !c.is_zero();
                          }
                          if (!nz) pc[0] = rat(1);
                          ProjectionCenter center = make_center(d, pc);
                          std::vector<Param> params;
                          while (static_cast<int>(params.size()) < d + 1) {
                              Param cand{rat(v(rng)), rat(v(rng))};
                              if (cand.first.is_zero() && cand.second.is_zero()) continue;
                              bool dup = false;
                              for (const auto& q : params)
                                  if ((q.first * cand.second - q.second * cand.first).is_zero())
                                      dup = true;
                              if (!dup) params.push_back(cand);
                          }
                          if (!det_identity_check(center, params)) {
                              detail = "d=" + std::to_string(d) + " trial " + std::to_string(trial);
                              return false;
                          }
                      }
                  return true;
              });

    // Bridge configurations are reused by criteria 11 and 12.
    std::vector<std::pair<Configuration, CosetMeta>> bridge;
    std::vector<Configuration> pencils;

    criterion(7, "geometric-algebraic bridge, d=4, n=8..12, j=0,1", [&](std::string& detail) {
        for (int n = 8; n <= 12; ++n)
            for (long j : {0L, 1L}) {
                auto built = acnodal_coset(4, n, j);
                const CosetMeta& meta = built.second;
                if (meta.modulus != std::lcm(4u, 10u * static_cast<unsigned>(n))) {
                    detail = "modulus mismatch";
                    return false;
                }
                SpectrumReport rep = spectrum(built.first, workers());
                long long po = ordinary_predict(meta.group, 4, meta.c);
                long long pd = dplus1_predict(meta.group, 4, meta.c);
                if (rep.ordinary != po || rep.dplus1 != pd) {
                    std::ostringstream os;
                    os << "n=" << n << " j=" << j << " geometric (" << rep.ordinary << ","
                       << rep.dplus1 << ") vs predicted (" << po << "," << pd << ")";
                    detail = os.str();
                    return false;
                }
                bridge.push_back(std::move(built));
            }
        return true;
    });

    criterion(8, "near-pencil spectra, d=4, n=7..14", [&](std::string& detail) {
        for (int n = 7; n <= 14; ++n) {
            Configuration cfg = near_pencil(4, n);
            SpectrumReport rep = spectrum(cfg, workers());
            std::map<int, long long> want{{4, binomial_ll(n - 1, 3)}, {n - 1, 1}};
            if (rep.counts != want) {
                detail = "n=" + std::to_string(n);
                return false;
            }
            pencils.push_back(std::move(cfg));
        }
        return true;
    });

    criterion(9, "external-point bound, coset(4,10,0), three probes", [&](std::string& detail) {
        auto [cfg, meta] = acnodal_coset(4, 10, 0);
        const long long bound = binomial_ll(10, 3);
        for (long r : {1L, 2L, 3L}) {
            ProjPoint q = off_coset_probe(meta, r);
            long long got = through_point_exactly(cfg, q, 3, workers());
            if (got < bound) {
                detail = "probe " + std::to_string(r) + " gave " + std::to_string(got);
                return false;
            }
        }
        return true;
    });

    criterion(10, "singularity classification golden set", [](std::string& detail) {
        for (int d : {3, 4, 5, 6}) {
            std::vector<Scalar> cusp(d + 2, rat(0));
            cusp[1] = rat(1);
            std::vector<Scalar> crunode(d + 2, rat(0));
            crunode[0] = rat(1);
            crunode[d + 1] = rat(-1);
            ProjectionCenter pc_cusp = make_center(d, cusp);
            ProjectionCenter pc_cru = make_center(d, crunode);
            ProjectionCenter pc_acn = acnodal_normal_center(d);
            ProjectionCenter pc_on = make_center(d, rnc_point(d, {rat(2), rat(5)}).coords);
            if (classify(pc_cusp).cls != SingularityClass::Cusp ||
                classify(pc_cru).cls != SingularityClass::Crunode ||
                classify(pc_acn).cls != SingularityClass::Acnode ||
                classify(pc_on).cls != SingularityClass::OnCurve) {
                detail = "class mismatch at d=" + std::to_string(d);
                return false;
            }
            // re-expansion is verified inside the decomposition
            sylvester_decompose(pc_cusp);
            sylvester_decompose(pc_cru);
            sylvester_decompose(pc_acn);
            sylvester_decompose(pc_on);
        }
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<int> v(-9, 9);
        for (int trial = 0; trial < 25; ++trial) {
            int d = 3 + trial % 4;
            std::vector<Scalar> pc(d + 2);
            for (auto& c : pc) c = rat(v(rng));
            if (pc[0].is_zero()) pc[0] = rat(1);
            ProjectionCenter center = make_center(d, pc);
            if (rank(hankel(center, 2)) != 3 ||
                classify(center).cls != SingularityClass::Smooth) {
                detail = "random center not smooth at trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });

    criterion(11, "spectrum identity and invariances on criteria 7-9 configurations",
              [&](std::string& detail) {
                  if (bridge.empty() || pencils.empty()) {
                      detail = "prerequisite configurations missing";
                      return false;
                  }
                  std::mt19937_64 rng(777);
                  std::vector<const Configuration*> all;
                  for (const auto& [cfg, meta] : bridge) all.push_back(&cfg);
                  for (const auto& cfg : pencils) all.push_back(&cfg);
                  auto [ext, extmeta] = acnodal_coset(4, 10, 0);
                  (void)extmeta;
                  all.push_back(&ext);
                  for (const Configuration* cfg : all) {
                      SpectrumReport base = spectrum(*cfg, workers());
                      if (spectrum(shuffled(*cfg, rng), workers()) != base) {
                          detail = "permutation variance on " + cfg->label;
                          return false;
                      }
                      if (spectrum(transformed(*cfg, rng), workers()) != base) {
                          detail = "projective variance on " + cfg->label;
                          return false;
                      }
                  }
                  detail = std::to_string(all.size()) + " configurations";
                  return true;
              });

    criterion(12, "stability bound on 20 seeded removal pairs", [&](std::string& detail) {
        if (bridge.empty() || pencils.empty()) {
            detail = "prerequisite configurations missing";
            return false;
        }
        std::mt19937_64 rng(1234321);
        int done = 0;
        // fourteen near-pencil pairs with K in {1, 2}, then six coset pairs
        for (const Configuration& cfg : pencils) {
            for (int k = 1; k <= 2 && done < 14; ++k) {
                std::vector<int> removed;
                std::uniform_int_distribution<int> idx(0, cfg.n() - 1);
                while (static_cast<int>(removed.size()) < k) {
                    int i = idx(rng);
                    if (std::find(removed.begin(), removed.end(), i) == removed.end())
                        removed.push_back(i);
                }
                if (!stability_check(cfg, removed, workers())) {
                    detail = "failed on " + cfg.label;
                    return false;
                }
                ++done;
            }
        }
        // coset configurations with n <= 10 from the bridge pool
        for (const auto& [cfg, meta] : bridge) {
            if (meta.n > 10 || done >= 20) continue;
            std::vector<int> removed{static_cast<int>(rng() % cfg.n())};
            if (rng() & 1) {
                int extra = static_cast<int>(rng() % cfg.n());
                if (extra != removed[0]) removed.push_back(extra);
            }
            if (!stability_check(cfg, removed, workers())) {
                detail = "failed on " + cfg.label;
                return false;
            }
            ++done;
        }
        detail = std::to_string(done) + " pairs";
        return done == 20;
    });

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
              << "\n";
    return g_failures;
}
