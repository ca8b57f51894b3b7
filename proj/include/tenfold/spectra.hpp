#pragma once

#include <map>
#include <vector>

#include "tenfold/classes.hpp"
#include "tenfold/types.hpp"

namespace tenfold {

struct SpectralReport {
    SymmetryClass cls = SymmetryClass::A;
    Eigen::Index n_samples = 0;
    std::vector<double> spacings;
    double ks_beta1 = 0, ks_beta2 = 0, ks_beta4 = 0;
    std::map<Eigen::Index, Eigen::Index> zero_mode_histogram;
    double symmetry_violation = 0;
};

// Polynomial unfolding: fit the empirical counting function with a
// degree-d polynomial and map levels through it. Needs >= 20 sorted
// levels and degree >= 1.
std::vector<double> unfold(const std::vector<double>& levels, int poly_degree);

// Spacings of consecutive unfolded levels restricted to the bulk
// (middle 80% of the spectrum).
std::vector<double> bulk_spacings(const std::vector<double>& unfolded);

// Wigner surmise density for beta in {1, 2, 4}; normalized, unit mean.
double wigner_surmise(int beta, double s);

// Surmise CDF by quadrature (cached grid internally).
double wigner_surmise_cdf(int beta, double s);

// Kolmogorov-Smirnov distance of the empirical spacing CDF from the
// beta surmise. Needs >= 1000 spacings.
double spacing_ks(std::vector<double> spacings, int beta);

// max_i |lambda_i + lambda_{n+1-i}| after sorting.
double symmetric_spectrum_check(std::vector<double> levels);

// Drops one member of each near-degenerate Kramers pair
// (gap < 1e-6 * spectral radius).
std::vector<double> deduplicate_kramers(std::vector<double> levels);

struct LowEnergyHistogram {
    double bin_width = 0;              // in units of mean bulk spacing
    std::vector<double> density;       // per-bin density, mean spacing units
    double bulk_density = 0;           // average density over the tail bins
};

// Histogram of |lambda| near zero in units of the per-sample mean
// spacing, pooled over n_samples spectra of equal size. Bulk density is
// normalized to ~1. Needs >= 1e4 levels.
LowEnergyHistogram low_energy_density(const std::vector<double>& levels,
                                      Eigen::Index n_samples,
                                      double bin_width = 0.25);

}  // namespace tenfold
