#include <doctest.h>

#include <numeric>

#include "test_helpers.hpp"

#include "tenfold/ensembles.hpp"
#include "tenfold/spectra.hpp"

using namespace tenfold;
using namespace tenfold::testing;

namespace {

std::vector<double> spectrum(const Matrix& h) {
    const EigResult eig = hermitian_eig(h);
    return {eig.eigenvalues.data(),
            eig.eigenvalues.data() + eig.eigenvalues.size()};
}

// Spacing of a 2x2 matrix from the relevant beta-class: the level split is
// sqrt((a-d)^2 + 4|b|^2) = the norm of beta+1 iid Gaussians, i.e. a chi
// distribution with beta+1 degrees of freedom. After normalizing to unit
// mean this is exactly the Wigner surmise -- an oracle independent of the
// quadrature code under test.
std::vector<double> chi_spacings(int beta, int n, RngStream& rng) {
    std::vector<double> s(n);
    double mean = 0;
    for (int k = 0; k < n; ++k) {
        double sq = 0;
        for (int i = 0; i <= beta; ++i) {
            const double g = rng.normal();
            sq += g * g;
        }
        s[k] = std::sqrt(sq);
        mean += s[k];
    }
    mean /= n;
    for (double& v : s) v /= mean;
    return s;
}

double simpson(int beta, auto&& f, double hi, int steps) {
    const double h = hi / steps;
    double acc = f(beta, 0.0) + f(beta, hi);
    for (int i = 1; i < steps; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * f(beta, i * h);
    return acc * h / 3.0;
}

double surmise_quantile(int beta, double u) {
    double lo = 0, hi = 12.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (wigner_surmise_cdf(beta, mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE_BEGIN("spectra");

TEST_CASE("unfold maps a uniform ladder to i + 1/2") {
    std::vector<double> levels(100);
    std::iota(levels.begin(), levels.end(), 0.0);
    const auto u = unfold(levels, 3);
    for (std::size_t i = 0; i < u.size(); ++i)
        CHECK(u[i] == doctest::Approx(i + 0.5).epsilon(1e-8));
    const auto sp = bulk_spacings(u);
    for (double s : sp) CHECK(s == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(unfold(std::vector<double>(10, 0.0), 3), TooFewLevels);
    CHECK_THROWS_AS(unfold(levels, 0), TooFewLevels);
}

TEST_CASE("unfolding a GUE spectrum yields unit mean bulk spacing") {
    EnsembleSpec spec;
    spec.cls = SymmetryClass::A;
    spec.n = 200;
    spec.seed = 91;
    const auto sp = bulk_spacings(unfold(spectrum(sample(spec).matrix), 7));
    const double mean =
        std::accumulate(sp.begin(), sp.end(), 0.0) / static_cast<double>(sp.size());
    CHECK(mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("surmises are normalized densities with unit mean") {
    for (int beta : {1, 2, 4}) {
        CHECK(wigner_surmise(beta, 0.0) == 0.0);
        const double norm = simpson(
            beta, [](int b, double s) { return wigner_surmise(b, s); }, 12.0,
            20000);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
        const double mean = simpson(
            beta, [](int b, double s) { return s * wigner_surmise(b, s); }, 12.0,
            20000);
        CHECK(mean == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(wigner_surmise_cdf(beta, 12.0) == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK_THROWS_AS(wigner_surmise(3, 1.0), InvalidBeta);
    CHECK_THROWS_AS(wigner_surmise_cdf(0, 1.0), InvalidBeta);
}

TEST_CASE("chi-distribution oracle matches each surmise") {
    RngStream rng(92, 0);
    for (int beta : {1, 2, 4}) {
        const auto s = chi_spacings(beta, 5000, rng);
        CHECK(spacing_ks(s, beta) < 0.04);
    }
    // mismatched beta is clearly rejected
    const auto s1 = chi_spacings(1, 5000, rng);
    CHECK(spacing_ks(s1, 4) > 0.15);
    CHECK_THROWS_AS(spacing_ks(std::vector<double>(100, 1.0), 1),
                    TooFewSpacings);
}

TEST_CASE("inverse-CDF sampling closes the loop through spacing_ks") {
    RngStream rng(93, 0);
    for (int beta : {1, 2, 4}) {
        std::vector<double> s(4000);
        for (double& v : s) v = surmise_quantile(beta, rng.uniform());
        CHECK(spacing_ks(s, beta) < 0.03);
    }
}

TEST_CASE("symmetric_spectrum_check measures the +- pairing defect") {
    CHECK(symmetric_spectrum_check({-2, -1, 1, 2}) == 0.0);
    CHECK(symmetric_spectrum_check({-2, -1, 1, 2.5}) == doctest::Approx(0.5));
    EnsembleSpec spec;
    spec.cls = SymmetryClass::C;
    spec.n = 20;
    spec.seed = 94;
    CHECK(symmetric_spectrum_check(spectrum(sample(spec).matrix)) < 1e-9);
    spec.cls = SymmetryClass::A;
    CHECK(symmetric_spectrum_check(spectrum(sample(spec).matrix)) > 0.1);
}

TEST_CASE("deduplicate_kramers keeps one level per near-degenerate pair") {
    const auto out = deduplicate_kramers({1.0, 1.0 + 1e-9, 2.0});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[1] == doctest::Approx(2.0));
    EnsembleSpec spec;
    spec.cls = SymmetryClass::AII;
    spec.n = 6;
    spec.seed = 95;
    CHECK(deduplicate_kramers(spectrum(sample(spec).matrix)).size() == 3);
}

TEST_CASE("low_energy_density reports flat density for a uniform ladder") {
    // 100 samples of 200 uniformly spaced levels, staggered so the pooled
    // set is dense; density should be ~1 everywhere including the first bin
    std::vector<double> levels;
    const Eigen::Index n_samples = 100;
    for (Eigen::Index j = 0; j < n_samples; ++j)
        for (int k = 0; k < 200; ++k)
            levels.push_back(k + (j + 0.5) / static_cast<double>(n_samples));
    const LowEnergyHistogram hist = low_energy_density(levels, n_samples);
    CHECK(hist.bulk_density == doctest::Approx(1.0).epsilon(0.05));
    REQUIRE(!hist.density.empty());
    CHECK(hist.density[0] == doctest::Approx(hist.bulk_density).epsilon(0.1));
    CHECK_THROWS_AS(low_energy_density(std::vector<double>(100, 1.0), 4),
                    TooFewLevels);
}

TEST_CASE("low_energy_density resolves a depleted origin") {
    // shift every sample's ladder away from zero by four spacings: the
    // first bins must be empty while the bulk stays ~1
    std::vector<double> levels;
    const Eigen::Index n_samples = 100;
    for (Eigen::Index j = 0; j < n_samples; ++j)
        for (int k = 0; k < 200; ++k)
            levels.push_back(k + 4.0 + (j + 0.5) / static_cast<double>(n_samples));
    const LowEnergyHistogram hist = low_energy_density(levels, n_samples);
    REQUIRE(hist.density.size() > 4);
    CHECK(hist.density[0] == 0.0);
    CHECK(hist.density[0] < 0.6 * hist.bulk_density);
}

TEST_SUITE_END();
