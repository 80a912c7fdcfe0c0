#include "ohw/config_io.hpp"

#include <fstream>
#include <sstream>

namespace ohw {

using nlohmann::json;

std::string tool_version() { return "0.1.0"; }

json manifest_to_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"parameters", m.parameters},
                {"seed", m.seed},
                {"versions", json{{"tool", tool_version()}, {"format", 1}}},
                {"wall_time_ms", m.wall_time_ms}};
}

json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return rational_to_string(s.rat());
    const Cyclo& c = s.cyc();
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
    return json{{"modulus", c.field().modulus()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("modulus") || !j.contains("coeffs"))
        throw ParseError("scalar JSON must be a string or {modulus, coeffs}");
    unsigned m = j.at("modulus").get<unsigned>();
    const CycloField& field = CycloField::get(m);
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != field.degree())
        throw ParseError("cyclotomic scalar needs exactly phi(M) coefficients");
    // Rebuild through the arithmetic layer so invariants hold.
    Cyclo acc(field);
    for (size_t t = 0; t < coeffs.size(); ++t) {
        mpq_class q = parse_rational(coeffs[t].get<std::string>());
        if (q == 0) continue;
        acc = acc + Cyclo::zeta_pow(field, static_cast<long>(t)) *
                        Cyclo::from_rational(field, q);
    }
    return Scalar(acc);
}

json configuration_to_json(const Configuration& cfg) {
    json points = json::array();
    bool cyclo = !cfg.points.empty() && cfg.points[0].coords[0].is_cyclo();
    for (const auto& p : cfg.points) {
        json row = json::array();
        for (const auto& c : p.coords) row.push_back(scalar_to_json(c));
        points.push_back(row);
    }
    json out{{"d", cfg.dim},
             {"field", cyclo ? "cyclotomic" : "rational"},
             {"label", cfg.label},
             {"points", points}};
    if (cyclo) out["modulus"] = cfg.points[0].coords[0].cyc().field().modulus();
    return out;
}

Configuration configuration_from_json(const json& j) {
    Configuration cfg;
    cfg.dim = j.at("d").get<int>();
    cfg.label = j.value("label", std::string{});
    std::string field = j.at("field").get<std::string>();
    if (field != "rational" && field != "cyclotomic")
        throw ParseError("field must be rational or cyclotomic");
    for (const auto& row : j.at("points")) {
        ProjPoint p;
        for (const auto& cj : row) p.coords.push_back(scalar_from_json(cj));
        cfg.points.push_back(std::move(p));
    }
    if (field == "cyclotomic") {
        unsigned m = j.at("modulus").get<unsigned>();
        for (const auto& p : cfg.points)
            for (const auto& c : p.coords)
                if (!c.is_cyclo() || c.cyc().field().modulus() != m)
                    throw ParseError("point scalar does not match declared modulus");
    }
    validate_configuration(cfg);
    return cfg;
}

void write_configuration(const Configuration& cfg, const std::string& path,
                         const RunManifest* manifest) {
    json j = configuration_to_json(cfg);
    if (manifest) j["manifest"] = manifest_to_json(*manifest);
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

Configuration read_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return configuration_from_json(j);
}

json spectrum_to_json(const SpectrumReport& report) {
    json counts = json::object();
    for (const auto& [i, m] : report.counts) counts[std::to_string(i)] = m;
    return json{{"n", report.n},
                {"d", report.d},
                {"counts", counts},
                {"ordinary", report.ordinary},
                {"dplus1", report.dplus1},
                {"total_hyperplanes", report.total_hyperplanes}};
}

std::string points_to_csv(const Configuration& cfg) {
    std::ostringstream os;
    for (const auto& p : cfg.points) {
        for (size_t i = 0; i < p.coords.size(); ++i) {
            if (i) os << ',';
            std::string s = p.coords[i].key();
            if (s.find(',') != std::string::npos)
                os << '"' << s << '"';
            else
                os << s;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ohw
