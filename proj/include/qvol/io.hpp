#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qvol/montecarlo.hpp"
#include "qvol/quadric.hpp"
#include "qvol/spectral.hpp"
#include "qvol/verify.hpp"

namespace qvol::io {

using nlohmann::json;

// {"pos": ["1","2"], "neg": ["3"], "zeros": 0}; rationals as "a/b" strings.
json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

// {"ratio": "11/20", "n": 2, "volume_over_pi_n": "11/40", "decimal": 2.714...}
json volume_to_json(const ExactVolume& v);

// {"n": 2, "entries": [[[re,im], ...], ...]} where n is the projective
// dimension; entries form the (n+1) x (n+1) matrix, row-major.
HermitianMatrix matrix_from_json(const json& j);
HermitianMatrix matrix_from_file(const std::string& path);

json mc_to_json(const MCEstimate& e);

// {"ratio_exact": "...", "mc": {...}, "quad": <volume or null>, "agree": bool}
json verification_report(const Rational& exact_ratio, const MCEstimate& mc,
                         std::optional<double> quad_volume, bool agree);

json suite_to_json(const SuiteReport& report);

}  // namespace qvol::io
