#pragma once

#include <string>

#include "json.hpp"
#include "ohw/enumerate.hpp"
#include "ohw/projective.hpp"

namespace ohw {

// Reproducibility record embedded in every output file. wall_time_ms is the
// one field excluded from byte-identical comparisons.
struct RunManifest {
    std::string command;
    std::string parameters;
    unsigned long long seed = 0;
    long long wall_time_ms = 0;
};

nlohmann::json manifest_to_json(const RunManifest& m);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

// Configuration file schema:
//   {"d": int, "field": "rational"|"cyclotomic", "modulus": int (cyclotomic),
//    "label": str, "points": [[scalar, ...], ...], "manifest": {...}?}
// Rational scalars are strings "num/den"; cyclotomic scalars are objects
// {"modulus": M, "coeffs": ["num/den", ...]}.
nlohmann::json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const nlohmann::json& j);

void write_configuration(const Configuration& cfg, const std::string& path,
                         const RunManifest* manifest = nullptr);
Configuration read_configuration(const std::string& path);

nlohmann::json spectrum_to_json(const SpectrumReport& report);

// CSV export of points, one row per point, scalars in their string form.
std::string points_to_csv(const Configuration& cfg);

std::string tool_version();

}  // namespace ohw
