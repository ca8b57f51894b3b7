#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tenfold/classifier.hpp"
#include "tenfold/dirac_chiral.hpp"
#include "tenfold/ensembles.hpp"
#include "tenfold/io.hpp"
#include "tenfold/spectra.hpp"
#include "tenfold/verify.hpp"

namespace {

using nlohmann::json;
using namespace tenfold;

constexpr const char* toolkit_version = "1.0.0";

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_input_error = 2;
constexpr int exit_numeric_failure = 3;

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::uint64_t seed = 0;
    std::string cls;
    Eigen::Index n = 0, p = 0, q = 0;
    double sigma = 1.0;
    Eigen::Index samples = 1;
    std::optional<double> tol;
    std::string module_filter;
};

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("TENFOLD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<unsigned>(v);
    }
    return n;
}

json config_manifest(const RunConfig& cfg) {
    json m;
    m["schema_version"] = schema_version;
    m["toolkit_version"] = toolkit_version;
    m["command"] = cfg.command;
    m["seed"] = cfg.seed;
    m["class"] = cfg.cls;
    m["n"] = cfg.n;
    m["p"] = cfg.p;
    m["q"] = cfg.q;
    m["sigma"] = cfg.sigma;
    m["samples"] = cfg.samples;
    m["rng"] = RngStream::algorithm();
    if (cfg.tol) m["tol"] = *cfg.tol;
    if (!cfg.module_filter.empty()) m["module_filter"] = cfg.module_filter;
    return m;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SpecInvalid("cannot open output file " + path);
    out << text;
}

EnsembleSpec spec_from_config(const RunConfig& cfg) {
    const auto cls = class_from_string(cfg.cls);
    if (!cls) throw SpecInvalid("unknown or missing --class '" + cfg.cls + "'");
    EnsembleSpec spec;
    spec.cls = *cls;
    spec.n = cfg.n;
    spec.p = cfg.p;
    spec.q = cfg.q;
    spec.sigma = cfg.sigma;
    spec.seed = cfg.seed;
    spec.validate();
    return spec;
}

std::vector<Matrix> sample_campaign(const RunConfig& cfg) {
    const EnsembleSpec base = spec_from_config(cfg);
    std::vector<Matrix> out(static_cast<std::size_t>(cfg.samples));
    std::atomic<Eigen::Index> next{0};
    auto work = [&] {
        for (;;) {
            const Eigen::Index i = next.fetch_add(1);
            if (i >= cfg.samples) return;
            EnsembleSpec spec = base;
            spec.stream_id = static_cast<std::uint64_t>(i);
            out[static_cast<std::size_t>(i)] = sample(spec).matrix;
        }
    };
    const unsigned nw = worker_count();
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nw; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    return out;
}

int cmd_classify(const RunConfig& cfg) {
    if (cfg.input_path.empty()) {
        std::cerr << "classify: --input required\n";
        return exit_input_error;
    }
    std::ifstream in(cfg.input_path);
    if (!in) {
        std::cerr << "classify: cannot open " << cfg.input_path << "\n";
        return exit_input_error;
    }
    json j;
    SymmetryData data;
    try {
        in >> j;
        data = symmetry_data_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "classify: input error: " << e.what() << "\n";
        return exit_input_error;
    }
    ClassifyReport report;
    try {
        report = classify(data);
    } catch (const Error& e) {
        std::cerr << "classify: numeric failure in classify: " << e.what() << "\n";
        return exit_numeric_failure;
    }
    json out = classify_report_to_json(report);
    out["manifest"] = config_manifest(cfg);
    write_text(cfg.output_path, out.dump(2) + "\n");
    return exit_ok;
}

int cmd_sample(const RunConfig& cfg) {
    std::vector<Matrix> mats;
    try {
        mats = sample_campaign(cfg);
    } catch (const Error& e) {
        std::cerr << "sample: invalid spec: " << e.what() << "\n";
        return exit_input_error;
    }
    json manifest = config_manifest(cfg);
    manifest["stream_ids"] = json::array();
    for (Eigen::Index i = 0; i < cfg.samples; ++i) manifest["stream_ids"].push_back(i);

    const bool csv = cfg.output_path.size() > 4 &&
                     cfg.output_path.substr(cfg.output_path.size() - 4) == ".csv";
    if (csv) {
        const std::string stem = cfg.output_path.substr(0, cfg.output_path.size() - 4);
        for (Eigen::Index i = 0; i < cfg.samples; ++i) {
            std::ostringstream name;
            name << stem;
            if (cfg.samples > 1) name << "_" << i;
            name << ".csv";
            std::ostringstream body;
            write_matrix_csv(body, mats[static_cast<std::size_t>(i)]);
            write_text(name.str(), body.str());
        }
        write_text(stem + ".manifest.json", manifest.dump(2) + "\n");
    } else {
        json out;
        out["schema_version"] = schema_version;
        out["manifest"] = manifest;
        out["samples"] = json::array();
        for (const Matrix& m : mats) out["samples"].push_back(matrix_to_json_rows(m));
        write_text(cfg.output_path, out.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_stats(const RunConfig& cfg) {
    std::vector<Matrix> mats;
    std::optional<SymmetryClass> cls = class_from_string(cfg.cls);
    try {
        if (!cfg.input_path.empty()) {
            std::ifstream in(cfg.input_path);
            if (!in) throw SpecInvalid("cannot open " + cfg.input_path);
            json j;
            in >> j;
            if (!j.contains("samples") || !j.at("samples").is_array())
                throw SpecInvalid("archive has no samples array");
            if (j.at("samples").empty())
                throw TooFewLevels("archive is empty");
            for (const json& jm : j.at("samples"))
                mats.push_back(matrix_from_json_rows(jm));
        } else {
            mats = sample_campaign(cfg);
        }
    } catch (const TooFewLevels& e) {
        std::cerr << "stats: numeric failure: " << e.what() << "\n";
        return exit_numeric_failure;
    } catch (const SpecInvalid& e) {
        std::cerr << "stats: input error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        const bool kramers = cls && (*cls == SymmetryClass::AII ||
                                     *cls == SymmetryClass::DIII ||
                                     *cls == SymmetryClass::CII);
        std::vector<double> pooled_spacings;
        std::vector<double> pooled_levels;
        std::map<Eigen::Index, Eigen::Index> zero_hist;
        double sym_violation = 0;
        for (const Matrix& m : mats) {
            const EigResult eig = hermitian_eig(m);
            std::vector<double> levels(eig.eigenvalues.data(),
                                       eig.eigenvalues.data() + eig.eigenvalues.size());
            pooled_levels.insert(pooled_levels.end(), levels.begin(), levels.end());
            sym_violation = std::max(sym_violation, symmetric_spectrum_check(levels));
            const double radius =
                std::max(std::abs(levels.front()), std::abs(levels.back()));
            Eigen::Index zeros = 0;
            for (double v : levels)
                if (std::abs(v) <= 1e-8 * radius) ++zeros;
            ++zero_hist[zeros];
            std::vector<double> use = kramers ? deduplicate_kramers(levels) : levels;
            const std::vector<double> sp = bulk_spacings(unfold(use, 7));
            pooled_spacings.insert(pooled_spacings.end(), sp.begin(), sp.end());
        }

        json report;
        report["schema_version"] = schema_version;
        report["manifest"] = config_manifest(cfg);
        report["n_samples"] = mats.size();
        if (cls) report["class"] = to_string(*cls);
        report["n_spacings"] = pooled_spacings.size();
        report["symmetry_violation"] = sym_violation;
        report["ks_beta1"] = spacing_ks(pooled_spacings, 1);
        report["ks_beta2"] = spacing_ks(pooled_spacings, 2);
        report["ks_beta4"] = spacing_ks(pooled_spacings, 4);
        report["zero_mode_histogram"] = json::object();
        for (const auto& [k, v] : zero_hist)
            report["zero_mode_histogram"][std::to_string(k)] = v;
        try {
            const LowEnergyHistogram hist = low_energy_density(
                pooled_levels, static_cast<Eigen::Index>(mats.size()));
            report["low_energy_density"] = {{"bin_width", hist.bin_width},
                                            {"density", hist.density},
                                            {"bulk_density", hist.bulk_density}};
        } catch (const TooFewLevels&) {
            report["low_energy_density"] = nullptr;
        }
        write_text(cfg.output_path, report.dump(2) + "\n");
        return exit_ok;
    } catch (const Error& e) {
        std::cerr << "stats: numeric failure: " << e.what() << "\n";
        return exit_numeric_failure;
    }
}

int cmd_verify(const RunConfig& cfg) {
    const std::vector<VerifyResult> results =
        run_verification(cfg.module_filter, cfg.tol);
    if (results.empty()) {
        std::cerr << "verify: no checks match module filter '" << cfg.module_filter
                  << "'\n";
        return exit_input_error;
    }
    bool all_pass = true;
    json jr = json::array();
    for (const VerifyResult& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.module << "] "
                  << r.name << "  deviation=" << format_double(r.deviation)
                  << " tol=" << format_double(r.tolerance);
        if (!r.error.empty()) std::cout << "  error=" << r.error;
        std::cout << "\n";
        jr.push_back({{"module", r.module},
                      {"name", r.name},
                      {"deviation", r.deviation},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"error", r.error}});
    }
    if (!cfg.output_path.empty()) {
        json out;
        out["schema_version"] = schema_version;
        out["manifest"] = config_manifest(cfg);
        out["results"] = jr;
        write_text(cfg.output_path, out.dump(2) + "\n");
    }
    std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES present")
              << "\n";
    return all_pass ? exit_ok : exit_verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tenfold: symmetry-class toolkit for quantum Hamiltonians"};
    RunConfig cfg;
    app.add_option("--command", cfg.command, "classify | sample | stats | verify")
        ->required();
    app.add_option("--input", cfg.input_path, "input file");
    app.add_option("--output", cfg.output_path, "output file (stdout if omitted)");
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--class", cfg.cls, "symmetry class label");
    app.add_option("--n", cfg.n, "matrix dimension");
    app.add_option("--p", cfg.p, "chiral block rows");
    app.add_option("--q", cfg.q, "chiral block cols");
    app.add_option("--sigma", cfg.sigma, "Gaussian scale");
    app.add_option("--samples", cfg.samples, "number of samples");
    double tol_value = 0;
    auto* tol_opt = app.add_option("--tol", tol_value, "tolerance override");
    app.add_option("--module-filter", cfg.module_filter, "verify only one module");
    CLI11_PARSE(app, argc, argv);
    if (tol_opt->count() > 0) cfg.tol = tol_value;

    try {
        if (cfg.command == "classify") return cmd_classify(cfg);
        if (cfg.command == "sample") return cmd_sample(cfg);
        if (cfg.command == "stats") return cmd_stats(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        std::cerr << "unknown command '" << cfg.command << "'\n";
        return exit_input_error;
    } catch (const SpecInvalid& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return exit_numeric_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric_failure;
    }
}
