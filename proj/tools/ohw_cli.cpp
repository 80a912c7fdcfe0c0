// ohw: exact workbench for ordinary-hyperplane extremal configurations.
//
// Subcommands: construct, count, predict, classify, table, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 budget exceeded, 4 degeneracy/general-position violation, 5 domain
// error, 70 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ohw/config_io.hpp"
#include "ohw/construct.hpp"
#include "ohw/curve.hpp"
#include "ohw/enumerate.hpp"
#include "ohw/groupmodel.hpp"

using nlohmann::json;
using namespace ohw;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string join_args(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) os << ' ';
        os << argv[i];
    }
    return os.str();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << text;
}

mpq_class random_rational(std::mt19937_64& rng, int num_lo = -9, int num_hi = 9,
                          int den_hi = 6) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

json quadext_to_json(const QuadExt& v) {
    return json{{"a", v.a.key()}, {"b", v.b.key()}};
}

// ---- verify suites -------------------------------------------------------

struct SuiteResult {
    long long passed = 0;
    long long total = 0;
};

SuiteResult suite_identity(std::mt19937_64& rng, int trials) {
    SuiteResult r;
    for (int t = 0; t < trials; ++t) {
        int d = 2 + static_cast<int>(t % 5);
        std::vector<Scalar> p(d + 2);
        bool nonzero = false;
        for (auto& c : p) {
            c = Scalar(random_rational(rng));
            nonzero = nonzero || !c.is_zero();
        }
        if (!nonzero) p[0] = Scalar(1L);
        ProjectionCenter center = make_center(d, std::move(p));
        std::vector<Param> params;
        while (static_cast<int>(params.size()) < d + 1) {
            Param cand{Scalar(random_rational(rng)), Scalar(random_rational(rng))};
            if (cand.first.is_zero() && cand.second.is_zero()) continue;
            bool dup = false;
            for (const auto& q : params)
                if ((q.first * cand.second - q.second * cand.first).is_zero()) dup = true;
            if (!dup) params.push_back(cand);
        }
        ++r.total;
        if (det_identity_check(center, params)) ++r.passed;
    }
    return r;
}

SuiteResult suite_recurrence(std::mt19937_64& rng, int trials, long long budget) {
    SuiteResult r;
    for (int t = 0; t < trials; ++t) {
        std::uniform_int_distribution<int> nd(3, 12);
        int n = nd(rng);
        Group g = Group::cyclic(n);
        if (n % 4 == 0 && (rng() & 1)) g = Group::product(n);
        std::uniform_int_distribution<int> kd(1, 5);
        int k = kd(rng);
        std::vector<int> w(k);
        std::uniform_int_distribution<int> wd(1, 3);
        for (int i = 0; i + 1 < k; ++i) w[i] = wd(rng);
        w[k - 1] = 1;
        std::uniform_int_distribution<int> cd(0, n - 1);
        EquationSpec eq{w, cd(rng)};
        ++r.total;
        if (count_recurrence(g, eq) == count_bruteforce(g, eq, budget)) ++r.passed;
    }
    return r;
}

SuiteResult suite_bridge(int workers) {
    SuiteResult r;
    for (int n : {8, 9})
        for (long j : {0L, 1L}) {
            auto [cfg, meta] = acnodal_coset(4, n, j);
            SpectrumReport rep = spectrum(cfg, workers);
            ++r.total;
            if (rep.ordinary == ordinary_predict(meta.group, 4, meta.c) &&
                rep.dplus1 == dplus1_predict(meta.group, 4, meta.c))
                ++r.passed;
        }
    return r;
}

SuiteResult suite_stability(std::mt19937_64& rng, int trials, int workers) {
    SuiteResult r;
    for (int t = 0; t < trials; ++t) {
        Configuration cfg = near_pencil(4, 10 + (t % 3));
        std::uniform_int_distribution<int> kd(1, 2);
        int k = kd(rng);
        std::vector<int> removed;
        std::uniform_int_distribution<int> idx(0, cfg.n() - 1);
        while (static_cast<int>(removed.size()) < k) {
            int i = idx(rng);
            if (std::find(removed.begin(), removed.end(), i) == removed.end())
                removed.push_back(i);
        }
        ++r.total;
        if (stability_check(cfg, removed, workers)) ++r.passed;
    }
    return r;
}

SuiteResult suite_external_point(int workers) {
    SuiteResult r;
    auto [cfg, meta] = acnodal_coset(4, 8, 0);
    const long long bound = binomial_ll(8, 3);
    for (long probe : {1L, 2L, 3L}) {
        ProjPoint q = off_coset_probe(meta, probe);
        ++r.total;
        if (through_point_exactly(cfg, q, 3, workers) >= bound) ++r.passed;
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ordinary-hyperplane workbench"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a point configuration");
    std::string type, out_path;
    int d = 4, n = 10;
    long offset = 0;
    c_construct->add_option("--type", type, "near-pencil or acnodal-coset")->required();
    c_construct->add_option("--d", d, "projective dimension")->required();
    c_construct->add_option("--n", n, "number of points")->required();
    c_construct->add_option("--offset", offset, "coset offset j (acnodal-coset)");
    c_construct->add_option("--out", out_path, "output points.json")->required();

    // count
    auto* c_count = app.add_subcommand("count", "enumerate the hyperplane spectrum");
    std::string input_path, through_path, format = "json", count_out;
    int exactly = -1, workers = 1;
    c_count->add_option("--input", input_path, "points.json")->required();
    c_count->add_option("--through", through_path, "probe point file (single-point configuration)");
    c_count->add_option("--exactly", exactly, "count hyperplanes through the probe and exactly T points");
    c_count->add_option("--format", format, "json or csv");
    c_count->add_option("--out", count_out, "output file (stdout when omitted)");
    c_count->add_option("--workers", workers, "enumeration worker threads");

    // predict
    auto* c_predict = app.add_subcommand("predict", "group-model ordinary/(d+1)-point counts");
    int p_d = 4, p_n = 10, p_c = -1;
    std::string p_group = "cyclic", predict_out;
    c_predict->add_option("--d", p_d)->required();
    c_predict->add_option("--n", p_n)->required();
    c_predict->add_option("--c", p_c, "target element; scans all c when omitted");
    c_predict->add_option("--group", p_group, "cyclic or product");
    c_predict->add_option("--out", predict_out);

    // classify
    auto* c_classify = app.add_subcommand("classify", "singularity class of a projection center");
    std::string p_coords, classify_out;
    c_classify->add_option("--p", p_coords, "comma-separated rational coordinates of p")->required();
    c_classify->add_option("--out", classify_out);

    // table
    auto* c_table = app.add_subcommand("table", "extremal scan vs closed forms (CSV)");
    int t_d = 4, n_min = 8, n_max = 20;
    std::string table_out;
    c_table->add_option("--d", t_d, "dimension in {4,5,6}")->required();
    c_table->add_option("--n-min", n_min)->required();
    c_table->add_option("--n-max", n_max)->required();
    c_table->add_option("--out", table_out);

    // verify
    auto* c_verify = app.add_subcommand("verify", "randomized/oracle verification suites");
    std::string suite = "all";
    int trials = 100, v_workers = 1;
    unsigned long long seed = 12345;
    long long budget = kDefaultBudget;
    c_verify->add_option("--suite", suite,
                         "identity | recurrence | bridge | stability | external-point | all");
    c_verify->add_option("--trials", trials);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--workers", v_workers);
    c_verify->add_option("--budget", budget, "brute-force step budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Timer timer;
    RunManifest manifest;
    manifest.command = app.get_subcommands().front()->get_name();
    manifest.parameters = join_args(argc, argv);
    manifest.seed = seed;

    try {
        if (*c_construct) {
            Configuration cfg;
            if (type == "near-pencil") {
                cfg = near_pencil(d, n);
            } else if (type == "acnodal-coset") {
                cfg = acnodal_coset(d, n, offset).first;
            } else {
                throw ParseError("unknown --type: " + type);
            }
            manifest.wall_time_ms = timer.ms();
            write_configuration(cfg, out_path, &manifest);
            std::cout << "wrote " << cfg.n() << " points to " << out_path << "\n";
        } else if (*c_count) {
            Configuration cfg = read_configuration(input_path);
            json result;
            if (!through_path.empty()) {
                Configuration probe_cfg = read_configuration(through_path);
                if (probe_cfg.n() != 1)
                    throw ParseError("--through file must contain exactly one point");
                if (exactly < 0) throw ParseError("--through requires --exactly");
                long long hits = through_point_exactly(cfg, probe_cfg.points[0], exactly, workers);
                result = json{{"n", cfg.n()}, {"d", cfg.dim}, {"exactly", exactly}, {"count", hits}};
            } else {
                result = spectrum_to_json(spectrum(cfg, workers));
            }
            manifest.wall_time_ms = timer.ms();
            result["manifest"] = manifest_to_json(manifest);
            if (format == "csv") {
                std::ostringstream os;
                os << "# manifest: " << manifest_to_json(manifest).dump() << "\n";
                if (result.contains("counts")) {
                    os << "incidence,hyperplanes\n";
                    for (auto& [k, v] : result.at("counts").items())
                        os << k << ',' << v.get<long long>() << "\n";
                } else {
                    os << "exactly,count\n"
                       << result["exactly"].get<int>() << ',' << result["count"].get<long long>()
                       << "\n";
                }
                emit_text(os.str(), count_out);
            } else {
                emit(result, count_out);
            }
        } else if (*c_predict) {
            json result{{"d", p_d}, {"n", p_n}};
            if (p_c >= 0) {
                Group g = p_group == "product" ? Group::product(p_n) : Group::cyclic(p_n);
                result["group"] = g.name();
                result["c"] = p_c;
                result["ordinary"] = ordinary_predict(g, p_d, p_c);
                result["dplus1"] = dplus1_predict(g, p_d, p_c);
            } else {
                ScanResult mn = minimize_ordinary(p_d, p_n);
                ScanResult mx = maximize_dplus1(p_d, p_n);
                result["min_ordinary"] =
                    json{{"group", mn.group.name()}, {"c", mn.c}, {"value", mn.value}};
                result["max_dplus1"] =
                    json{{"group", mx.group.name()}, {"c", mx.c}, {"value", mx.value}};
            }
            manifest.wall_time_ms = timer.ms();
            result["manifest"] = manifest_to_json(manifest);
            emit(result, predict_out);
        } else if (*c_classify) {
            std::vector<Scalar> coords;
            std::stringstream ss(p_coords);
            std::string tok;
            while (std::getline(ss, tok, ',')) coords.push_back(Scalar(parse_rational(tok)));
            if (coords.size() < 5)
                throw ParseError("classify needs at least 5 coordinates (d >= 3)");
            ProjectionCenter center = make_center(static_cast<int>(coords.size()) - 2, coords);
            Classification cls = classify(center);
            json result{{"d", center.d},
                        {"class", to_string(cls.cls)},
                        {"discriminant_sign", cls.delta_sign},
                        {"discriminant", cls.delta.key()}};
            if (cls.cls != SingularityClass::Smooth) {
                SylvesterDecomposition dec = sylvester_decompose(center);
                result["kind"] = dec.kind == SylvesterDecomposition::Kind::TangentPower
                                     ? "tangent-power"
                                     : "secant-sum";
                result["L1"] = json{{"x", quadext_to_json(dec.l1x)}, {"y", quadext_to_json(dec.l1y)}};
                result["L2"] = json{{"x", quadext_to_json(dec.l2x)}, {"y", quadext_to_json(dec.l2y)}};
                result["sign"] = dec.sign;
                result["scale"] = quadext_to_json(dec.scale);
                result["weight2"] = quadext_to_json(dec.weight2);
            }
            manifest.wall_time_ms = timer.ms();
            result["manifest"] = manifest_to_json(manifest);
            emit(result, classify_out);
        } else if (*c_table) {
            std::ostringstream os;
            os << "# manifest: " << manifest_to_json(manifest).dump() << "\n";
            os << "d,n,group,c,min_ordinary,closed_form_min,max_dplus1,closed_form_max,match\n";
            bool all_match = true;
            for (int nn = n_min; nn <= n_max; ++nn) {
                ScanResult mn = minimize_ordinary(t_d, nn);
                ScanResult mx = maximize_dplus1(t_d, nn);
                long long cmin = closed_form_min(t_d, nn);
                long long cmax = closed_form_max(t_d, nn);
                bool match = mn.value == cmin && mx.value == cmax;
                all_match = all_match && match;
                os << t_d << ',' << nn << ',' << mn.group.name() << ',' << mn.c << ','
                   << mn.value << ',' << cmin << ',' << mx.value << ',' << cmax << ','
                   << (match ? "true" : "false") << "\n";
            }
            emit_text(os.str(), table_out);
            if (!all_match) return 1;
        } else if (*c_verify) {
            std::mt19937_64 rng(seed);
            std::vector<std::pair<std::string, SuiteResult>> results;
            auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
            if (want("identity")) results.emplace_back("identity", suite_identity(rng, trials));
            if (want("recurrence"))
                results.emplace_back("recurrence", suite_recurrence(rng, trials, budget));
            if (want("bridge")) results.emplace_back("bridge", suite_bridge(v_workers));
            if (want("stability"))
                results.emplace_back("stability",
                                     suite_stability(rng, std::min(trials, 10), v_workers));
            if (want("external-point"))
                results.emplace_back("external-point", suite_external_point(v_workers));
            if (results.empty()) throw ParseError("unknown suite: " + suite);
            bool ok = true;
            for (const auto& [name, r] : results) {
                std::cout << "suite " << name << ": " << r.passed << "/" << r.total << " passed\n";
                ok = ok && r.passed == r.total;
            }
            std::cout << "seed " << seed << ", wall time " << timer.ms() << " ms\n";
            return ok ? 0 : 1;
        }
    } catch (const ohw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateSubset& e) {
        std::cerr << "error: " << e.what();
        if (!e.subset.empty()) {
            std::cerr << " (witness:";
            for (int i : e.subset) std::cerr << ' ' << i;
            std::cerr << ")";
        }
        std::cerr << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
