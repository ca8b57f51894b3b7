#include "tenfold/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace tenfold {

namespace {

// Evaluate the fitted polynomial with coefficients in ascending degree
// on the normalized variable.
double poly_eval(const RealVector& coeff, double x) {
    double v = 0;
    for (Eigen::Index k = coeff.size() - 1; k >= 0; --k) v = v * x + coeff[k];
    return v;
}

constexpr double ks_grid_max = 12.0;
constexpr int ks_grid_points = 24001;

const std::vector<double>& surmise_cdf_grid(int beta) {
    auto build = [](int b) {
        std::vector<double> cdf(ks_grid_points, 0.0);
        const double h = ks_grid_max / (ks_grid_points - 1);
        double prev = wigner_surmise(b, 0.0);
        for (int i = 1; i < ks_grid_points; ++i) {
            const double cur = wigner_surmise(b, i * h);
            cdf[i] = cdf[i - 1] + 0.5 * h * (prev + cur);
            prev = cur;
        }
        return cdf;
    };
    static const std::vector<double> g1 = build(1);
    static const std::vector<double> g2 = build(2);
    static const std::vector<double> g4 = build(4);
    switch (beta) {
        case 1: return g1;
        case 2: return g2;
        case 4: return g4;
        default: throw InvalidBeta("surmise cdf: beta must be 1, 2 or 4");
    }
}

}  // namespace

std::vector<double> unfold(const std::vector<double>& levels, int poly_degree) {
    if (levels.size() < 20)
        throw TooFewLevels("unfold: need at least 20 levels");
    if (poly_degree < 1)
        throw TooFewLevels("unfold: polynomial degree must be >= 1");
    std::vector<double> x = levels;
    std::sort(x.begin(), x.end());
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());

    // normalize abscissa for conditioning
    const double lo = x.front(), hi = x.back();
    const double span = std::max(hi - lo, 1e-300);
    auto norm = [&](double v) { return 2.0 * (v - lo) / span - 1.0; };

    Eigen::MatrixXd vand(n, poly_degree + 1);
    RealVector target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = norm(x[i]);
        double p = 1.0;
        for (int k = 0; k <= poly_degree; ++k) {
            vand(i, k) = p;
            p *= t;
        }
        target[i] = static_cast<double>(i) + 0.5;
    }
    const RealVector coeff = vand.colPivHouseholderQr().solve(target);

    std::vector<double> out(x.size());
    for (Eigen::Index i = 0; i < n; ++i) out[i] = poly_eval(coeff, norm(x[i]));
    return out;
}

std::vector<double> bulk_spacings(const std::vector<double>& unfolded) {
    std::vector<double> u = unfolded;
    std::sort(u.begin(), u.end());
    const std::size_t n = u.size();
    const std::size_t lo = n / 10, hi = n - n / 10;
    std::vector<double> out;
    for (std::size_t i = lo + 1; i < hi; ++i) out.push_back(u[i] - u[i - 1]);
    return out;
}

double wigner_surmise(int beta, double s) {
    if (s < 0) throw SpecInvalid("wigner_surmise: s must be nonnegative");
    switch (beta) {
        case 1:
            return 0.5 * M_PI * s * std::exp(-0.25 * M_PI * s * s);
        case 2:
            return (32.0 / (M_PI * M_PI)) * s * s * std::exp(-4.0 * s * s / M_PI);
        case 4: {
            const double c = 262144.0 / (729.0 * M_PI * M_PI * M_PI);
            return c * std::pow(s, 4) * std::exp(-64.0 * s * s / (9.0 * M_PI));
        }
        default:
            throw InvalidBeta("wigner_surmise: beta must be 1, 2 or 4");
    }
}

double wigner_surmise_cdf(int beta, double s) {
    if (s < 0) throw SpecInvalid("wigner_surmise_cdf: s must be nonnegative");
    const std::vector<double>& grid = surmise_cdf_grid(beta);
    if (s >= ks_grid_max) return 1.0;
    const double h = ks_grid_max / (ks_grid_points - 1);
    const double pos = s / h;
    const int i = static_cast<int>(pos);
    const double frac = pos - i;
    return grid[i] * (1.0 - frac) + grid[i + 1] * frac;
}

double spacing_ks(std::vector<double> spacings, int beta) {
    if (spacings.size() < 1000)
        throw TooFewSpacings("spacing_ks: need at least 1000 spacings");
    std::sort(spacings.begin(), spacings.end());
    const double n = static_cast<double>(spacings.size());
    double ks = 0;
    for (std::size_t i = 0; i < spacings.size(); ++i) {
        const double f = wigner_surmise_cdf(beta, std::max(spacings[i], 0.0));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return ks;
}

double symmetric_spectrum_check(std::vector<double> levels) {
    std::sort(levels.begin(), levels.end());
    const std::size_t n = levels.size();
    double defect = 0;
    for (std::size_t i = 0; i < n; ++i)
        defect = std::max(defect, std::abs(levels[i] + levels[n - 1 - i]));
    return defect;
}

std::vector<double> deduplicate_kramers(std::vector<double> levels) {
    std::sort(levels.begin(), levels.end());
    if (levels.empty()) return levels;
    double radius = 0;
    for (double v : levels) radius = std::max(radius, std::abs(v));
    const double gap = 1e-6 * std::max(radius, 1e-300);
    std::vector<double> out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        out.push_back(levels[i]);
        if (i + 1 < levels.size() && levels[i + 1] - levels[i] < gap) ++i;
    }
    return out;
}

LowEnergyHistogram low_energy_density(const std::vector<double>& levels,
                                      Eigen::Index n_samples, double bin_width) {
    if (levels.size() < 10000)
        throw TooFewLevels("low_energy_density: need at least 1e4 pooled levels");
    if (n_samples < 1) throw SpecInvalid("low_energy_density: need n_samples >= 1");
    std::vector<double> y;
    y.reserve(levels.size());
    for (double v : levels) y.push_back(std::abs(v));
    std::sort(y.begin(), y.end());

    // Window: the smallest ~24 levels per sample; estimate the per-sample
    // mean spacing from the outer half of the window (away from the
    // class-sensitive first spacings near zero).
    const std::size_t m = std::min<std::size_t>(
        y.size(), static_cast<std::size_t>(24 * n_samples));
    if (m < 2 * static_cast<std::size_t>(n_samples))
        throw TooFewLevels("low_energy_density: too few levels per sample");
    const std::size_t half = m / 2;
    const double spacing =
        static_cast<double>(n_samples) * (y[m - 1] - y[half]) /
        static_cast<double>(m - 1 - half);
    if (!(spacing > 0))
        throw SpecInvalid("low_energy_density: degenerate spacing estimate");

    LowEnergyHistogram hist;
    hist.bin_width = bin_width;
    const double bin_energy = bin_width * spacing;
    const std::size_t n_bins =
        static_cast<std::size_t>(y[m - 1] / bin_energy) + 1;
    std::vector<double> counts(n_bins, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b =
            std::min(n_bins - 1, static_cast<std::size_t>(y[i] / bin_energy));
        counts[b] += 1.0;
    }
    // density in (levels per mean spacing per sample); bulk value ~ 1
    hist.density.resize(n_bins);
    for (std::size_t b = 0; b < n_bins; ++b)
        hist.density[b] =
            counts[b] * spacing / (bin_energy * static_cast<double>(n_samples));
    double bulk = 0;
    std::size_t n_bulk = 0;
    for (std::size_t b = n_bins / 2; b + 1 < n_bins; ++b) {  // drop partial last bin
        bulk += hist.density[b];
        ++n_bulk;
    }
    hist.bulk_density = n_bulk ? bulk / static_cast<double>(n_bulk) : 0.0;
    return hist;
}

}  // namespace tenfold
