// Command-line driver: exact quadric-domain volumes from spectra or matrices,
// identity verification, Monte Carlo checks, and symbolic expansions.

#include <omp.h>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvol/io.hpp"
#include "qvol/montecarlo.hpp"
#include "qvol/partition.hpp"
#include "qvol/quadric.hpp"
#include "qvol/schur.hpp"
#include "qvol/spectral.hpp"
#include "qvol/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

qvol::RationalTuple parse_tuple(const std::string& csv) {
    qvol::RationalTuple out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(qvol::Rational::from_string(item));
    }
    return out;
}

struct SpectrumFlags {
    std::string pos;
    std::string neg;
    unsigned zeros = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--pos", pos, "Positive eigenvalues, comma-separated rationals (a/b)");
        cmd->add_option("--neg", neg,
                        "Magnitudes of negative eigenvalues, comma-separated rationals");
        cmd->add_option("--zeros", zeros, "Number of zero eigenvalues");
    }

    qvol::Spectrum build() const { return qvol::Spectrum(parse_tuple(pos), parse_tuple(neg), zeros); }
};

void print_volume_text(const qvol::Spectrum& s, const qvol::ExactVolume& v) {
    std::cout << "p = " << s.positives.size() << ", q = " << s.negatives.size()
              << ", r = " << s.zeros << ", n = " << v.dimension << "\n";
    std::cout << "ratio = " << v.ratio << "\n";
    std::cout << "volume = " << v.ratio_over_factorial() << " * pi^" << v.dimension << "\n";
    std::cout << "decimal = " << v.decimal() << "\n";
}

int cmd_spectrum(const SpectrumFlags& flags, const std::string& format) {
    const qvol::Spectrum s = flags.build();
    const qvol::ExactVolume v = qvol::volume(s);
    if (format == "json") {
        qvol::io::json out = qvol::io::volume_to_json(v);
        out["spectrum"] = qvol::io::spectrum_to_json(s);
        std::cout << out.dump(2) << "\n";
    } else {
        print_volume_text(s, v);
    }
    return kExitOk;
}

int cmd_matrix(const std::string& path, double zero_tol, const std::string& format) {
    const qvol::HermitianMatrix a = qvol::io::matrix_from_file(path);
    const qvol::FloatSpectrum fs = qvol::classify(qvol::eigenvalues_hermitian(a), zero_tol);
    const double ratio = qvol::volume_ratio(fs);
    const double vol = qvol::volume_decimal(fs);
    if (format == "json") {
        qvol::io::json out{{"eigenvalues", fs.eigenvalues},
                           {"p", fs.positives},
                           {"q", fs.negatives},
                           {"r", fs.zeros},
                           {"n", fs.dimension()},
                           {"ratio", ratio},
                           {"volume", vol}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "eigenvalues =";
        for (double e : fs.eigenvalues) std::cout << " " << e;
        std::cout << "\nclassification: p = " << fs.positives << ", q = " << fs.negatives
                  << ", r = " << fs.zeros << " (n = " << fs.dimension() << ")\n";
        std::cout << "ratio = " << ratio << "\n";
        std::cout << "volume = " << vol << "\n";
    }
    return kExitOk;
}

int cmd_verify(unsigned pmax, unsigned qmax, unsigned trials, std::uint64_t seed,
               bool inject_fault, const std::string& format) {
    const qvol::SuiteReport report = qvol::run_identity_suite(pmax, qmax, trials, seed,
                                                              inject_fault);
    if (format == "json") {
        std::cout << qvol::io::suite_to_json(report).dump(2) << "\n";
    } else {
        for (const qvol::FamilyResult& f : report.families) {
            std::cout << (f.passed() ? "[PASS] " : "[FAIL] ") << f.name << " (" << f.checks
                      << " checks)";
            if (!f.passed()) {
                std::cout << " counterexample: " << f.first_counterexample;
            }
            std::cout << "\n";
        }
        std::cout << (report.all_pass() ? "all identities hold" : "identity FAILURES found")
                  << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_mc(const SpectrumFlags& flags, std::uint64_t samples, std::uint64_t seed,
           const std::string& format) {
    const qvol::Spectrum s = flags.build();
    const qvol::ExactVolume exact = qvol::volume(s);
    const qvol::MCEstimate est = qvol::mc_fraction(s, samples, seed);
    const double delta = std::abs(est.fraction - exact.ratio.to_double());
    const bool agree = delta <= 4.0 * est.standard_error;
    if (format == "json") {
        std::cout << qvol::io::verification_report(exact.ratio, est, std::nullopt, agree).dump(2)
                  << "\n";
    } else {
        std::cout << "exact ratio = " << exact.ratio << " (" << exact.ratio.to_double() << ")\n";
        std::cout << "mc fraction = " << est.fraction << " +/- " << est.standard_error << " ("
                  << est.samples << " samples, seed " << est.seed << ")\n";
        std::cout << "|delta| = " << delta << (agree ? " <= " : " > ") << "4*stderr = "
                  << 4.0 * est.standard_error << "\n";
        std::cout << (agree ? "agreement: yes" : "agreement: NO") << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int cmd_expand(unsigned p, unsigned q, const std::string& format) {
    if (p > 3 || q > 3) {
        throw CLI::ValidationError("expand", "p and q are capped at 3");
    }
    const qvol::SparsePoly numer = qvol::numerator_polynomial(p, q);
    const qvol::SparsePoly denom = qvol::denominator_polynomial(p, q);
    const bool dominated = qvol::coefficients_dominated(numer, denom);
    if (format == "json") {
        qvol::io::json out{{"p", p},
                           {"q", q},
                           {"S", numer.to_string()},
                           {"D", denom.to_string()},
                           {"dominated", dominated}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "S = " << numer.to_string() << "\n";
        std::cout << "D = " << denom.to_string() << "\n";
        std::cout << "dominated: " << (dominated ? "yes" : "no") << "\n";
    }
    return dominated ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fubini-Study volumes of Hermitian quadric domains in CP^n"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: machine parallelism)");

    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* sub_spectrum =
        app.add_subcommand("spectrum", "Exact volume from an eigenvalue spectrum");
    SpectrumFlags spectrum_flags;
    spectrum_flags.attach(sub_spectrum);

    auto* sub_matrix = app.add_subcommand("matrix", "Volume from a Hermitian matrix (JSON file)");
    std::string matrix_path;
    double zero_tol = 1e-9;
    sub_matrix->add_option("--file", matrix_path, "Matrix JSON file")->required();
    sub_matrix->add_option("--zero-tol", zero_tol,
                           "Relative tolerance for classifying an eigenvalue as zero");

    auto* sub_verify = app.add_subcommand("verify", "Run the exact identity suite");
    unsigned pmax = 3, qmax = 3, trials = 20;
    std::uint64_t verify_seed = 0;
    bool inject_fault = false;
    sub_verify->add_option("--pmax", pmax, "Largest number of positive eigenvalues");
    sub_verify->add_option("--qmax", qmax, "Largest number of negative eigenvalues");
    sub_verify->add_option("--trials", trials, "Random points per (p, q)");
    sub_verify->add_option("--seed", verify_seed, "Random seed");
    sub_verify->add_flag("--inject-fault", inject_fault)->group("");  // negative control

    auto* sub_mc = app.add_subcommand("mc", "Monte Carlo check against the exact ratio");
    SpectrumFlags mc_flags;
    mc_flags.attach(sub_mc);
    std::uint64_t samples = 1'000'000;
    std::uint64_t mc_seed = 0;
    sub_mc->add_option("--samples", samples, "Sample count");
    sub_mc->add_option("--seed", mc_seed, "Stream seed");

    auto* sub_expand = app.add_subcommand("expand", "Symbolic S and D with domination check");
    unsigned expand_p = 1, expand_q = 1;
    sub_expand->add_option("--p", expand_p, "Number of positive eigenvalues (<= 3)");
    sub_expand->add_option("--q", expand_q, "Number of negative eigenvalues (<= 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (threads > 0) omp_set_num_threads(static_cast<int>(threads));

    try {
        if (sub_spectrum->parsed()) return cmd_spectrum(spectrum_flags, format);
        if (sub_matrix->parsed()) return cmd_matrix(matrix_path, zero_tol, format);
        if (sub_verify->parsed())
            return cmd_verify(pmax, qmax, trials, verify_seed, inject_fault, format);
        if (sub_mc->parsed()) return cmd_mc(mc_flags, samples, mc_seed, format);
        if (sub_expand->parsed()) return cmd_expand(expand_p, expand_q, format);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
