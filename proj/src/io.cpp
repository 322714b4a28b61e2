#include "qvol/io.hpp"

#include <fstream>
#include <stdexcept>

namespace qvol::io {

namespace {

json tuple_to_json(const RationalTuple& t) {
    json arr = json::array();
    for (const Rational& v : t) arr.push_back(v.to_string());
    return arr;
}

RationalTuple tuple_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) {
        throw std::invalid_argument(std::string(what) + ": expected an array");
    }
    RationalTuple t;
    t.reserve(arr.size());
    for (const json& v : arr) {
        if (v.is_number_integer()) {
            t.push_back(Rational(v.get<long>()));
        } else if (v.is_string()) {
            t.push_back(Rational::from_string(v.get<std::string>()));
        } else {
            throw std::invalid_argument(std::string(what) + ": entries must be rational strings");
        }
    }
    return t;
}

}  // namespace

json spectrum_to_json(const Spectrum& s) {
    return json{{"pos", tuple_to_json(s.positives)},
                {"neg", tuple_to_json(s.negatives)},
                {"zeros", s.zeros}};
}

Spectrum spectrum_from_json(const json& j) {
    return Spectrum(tuple_from_json(j.at("pos"), "spectrum.pos"),
                    tuple_from_json(j.at("neg"), "spectrum.neg"),
                    j.value("zeros", 0u));
}

json volume_to_json(const ExactVolume& v) {
    return json{{"ratio", v.ratio.to_string()},
                {"n", v.dimension},
                {"volume_over_pi_n", v.ratio_over_factorial().to_string()},
                {"decimal", v.decimal()}};
}

HermitianMatrix matrix_from_json(const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const std::size_t size = n + 1;
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != size) {
        throw std::invalid_argument("matrix: expected n+1 rows");
    }
    std::vector<Complex> entries;
    entries.reserve(size * size);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != size) {
            throw std::invalid_argument("matrix: expected n+1 entries per row");
        }
        for (const json& e : row) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("matrix: entries must be [re, im] pairs");
            }
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
    }
    return HermitianMatrix(size, std::move(entries));
}

HermitianMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("matrix: cannot open '" + path + "'");
    }
    json j;
    in >> j;
    return matrix_from_json(j);
}

json mc_to_json(const MCEstimate& e) {
    return json{{"fraction", e.fraction},
                {"stderr", e.standard_error},
                {"samples", e.samples},
                {"seed", e.seed}};
}

json verification_report(const Rational& exact_ratio, const MCEstimate& mc,
                         std::optional<double> quad_volume, bool agree) {
    json report{{"ratio_exact", exact_ratio.to_string()}, {"mc", mc_to_json(mc)},
                {"agree", agree}};
    if (quad_volume) {
        report["quad"] = json{{"volume", *quad_volume}};
    }
    return report;
}

json suite_to_json(const SuiteReport& report) {
    json families = json::array();
    for (const FamilyResult& f : report.families) {
        json fj{{"name", f.name}, {"checks", f.checks}, {"failures", f.failures}};
        if (!f.passed()) fj["counterexample"] = f.first_counterexample;
        families.push_back(fj);
    }
    return json{{"families", families}, {"all_pass", report.all_pass()}};
}

}  // namespace qvol::io
