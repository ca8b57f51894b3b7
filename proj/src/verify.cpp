#include "tenfold/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "tenfold/classifier.hpp"
#include "tenfold/dirac_chiral.hpp"
#include "tenfold/ensembles.hpp"
#include "tenfold/io.hpp"
#include "tenfold/nambu.hpp"
#include "tenfold/spectra.hpp"
#include "tenfold/symmetric_space.hpp"

namespace tenfold {

namespace {

struct Check {
    std::string module;
    std::string name;
    double tolerance;
    std::function<double()> deviation;
};

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

EnsembleSpec small_spec(SymmetryClass cls, std::uint64_t stream) {
    EnsembleSpec spec;
    spec.cls = cls;
    spec.seed = 4242;
    spec.stream_id = stream;
    if (is_chiral(cls)) {
        spec.p = 3;
        spec.q = 2;
    } else {
        spec.n = (cls == SymmetryClass::DIII) ? 8 : 6;
    }
    return spec;
}

std::vector<Check> build_checks() {
    std::vector<Check> checks;

    checks.push_back({"core_linalg", "random unitary is unitary", 1e-12, [] {
        RngStream rng(1, 0);
        const Matrix u = random_unitary(rng, 12);
        return max_abs_diff(u.adjoint() * u, Matrix::Identity(12, 12));
    }});
    checks.push_back({"core_linalg", "hermitian eigendecomposition reconstructs", 1e-10, [] {
        RngStream rng(2, 0);
        const Matrix h = random_hermitian(rng, 16);
        const EigResult eig = hermitian_eig(h);
        const Matrix r = eig.eigenvectors *
                         eig.eigenvalues.cast<Complex>().asDiagonal() *
                         eig.eigenvectors.adjoint();
        return max_abs_diff(r, h);
    }});
    checks.push_back({"core_linalg", "nullspace annihilates", 1e-10, [] {
        RngStream rng(3, 0);
        Matrix a(6, 8);
        for (Eigen::Index j = 0; j < 8; ++j)
            for (Eigen::Index i = 0; i < 6; ++i) a(i, j) = rng.complex_normal();
        const Matrix ns = complex_nullspace(a);
        return ns.cols() == 2 ? (a * ns).cwiseAbs().maxCoeff() : 1.0;
    }});

    checks.push_back({"classifier", "diagonal generator with conjugation gives AI blocks", 0.5, [] {
        SymmetryData data;
        data.dim = 2;
        Matrix sz(2, 2);
        sz << 1, 0, 0, -1;
        data.g0_generators = {sz};
        data.t_op = AntiUnitaryOp(Matrix::Identity(2, 2));
        const ClassifyReport rep = classify(data);
        if (rep.blocks.size() != 2) return 1.0;
        for (const BlockReport& b : rep.blocks)
            if (b.cls != SymmetryClass::AI) return 1.0;
        return 0.0;
    }});
    checks.push_back({"classifier", "quaternion group commutant is scalar", 0.5, [] {
        Matrix i_sz(2, 2), i_sy(2, 2);
        i_sz << Complex(0, 1), 0, 0, Complex(0, -1);
        i_sy << 0, 1, -1, 0;
        const auto group = group_closure({i_sz, i_sy});
        return std::abs(static_cast<double>(commutant_dimension(group)) - 1.0);
    }});

    for (SymmetryClass cls : all_classes) {
        checks.push_back({"ensembles", "structure of class " + to_string(cls), 1e-10,
                          [cls] {
            double worst = 0;
            for (std::uint64_t s = 0; s < 5; ++s) {
                const Hamiltonian h = sample(small_spec(cls, s));
                const ValidationReport rep = validate_structure(h);
                if (!rep.ok) return 1.0;
                worst = std::max(worst, max_abs_diff(h.matrix, h.matrix.adjoint()));
            }
            return worst;
        }});
    }

    checks.push_back({"symmetric_space", "time evolutions satisfy U = tau(U)^-1", 1e-9, [] {
        double worst = 0;
        for (SymmetryClass cls : all_classes) {
            const EnsembleSpec spec = small_spec(cls, 77);
            const Hamiltonian h = sample(spec);
            const ClassInvolution ci =
                canonical_tau(cls, h.matrix.rows(), spec.p, spec.q);
            const Matrix u = embed_evolution(time_evolution(h.matrix, 0.37), ci);
            worst = std::max(worst, max_abs_diff(u, ci.tau.apply(u).adjoint()));
        }
        return worst;
    }});
    checks.push_back({"symmetric_space", "fixed-point dimensions (DIII, CI)", 0.5, [] {
        const double d1 = std::abs(
            static_cast<double>(fixed_point_dimension(SymmetryClass::DIII, 8)) - 16.0);
        const double d2 = std::abs(
            static_cast<double>(fixed_point_dimension(SymmetryClass::CI, 4)) - 4.0);
        return std::max(d1, d2);
    }});

    checks.push_back({"nambu", "particle-hole conjugation squares to +Id", 1e-12, [] {
        const AntiUnitaryOp c = particle_hole_op(5);
        return max_abs_diff(c.w * c.w.conjugate(), Matrix::Identity(10, 10));
    }});
    checks.push_back({"nambu", "C relates the two canonical forms", 1e-12, [] {
        RngStream rng(11, 0);
        const AntiUnitaryOp c = particle_hole_op(4);
        double worst = 0;
        for (int k = 0; k < 20; ++k) {
            Vector a(8), b(8);
            for (Eigen::Index i = 0; i < 8; ++i) {
                a[i] = rng.complex_normal();
                b[i] = rng.complex_normal();
            }
            const Complex lhs = c.apply(a).dot(b);  // <C a, b>
            worst = std::max(worst, std::abs(lhs - symmetric_form(a, b)));
        }
        return worst;
    }});
    checks.push_back({"nambu", "Majorana basis makes BdG imaginary skew", 1e-12, [] {
        RngStream rng(12, 0);
        const Matrix w = majorana_basis(4);
        double worst = 0;
        for (int k = 0; k < 10; ++k) {
            QuadraticHamiltonian qh;
            qh.a = random_hermitian(rng, 4);
            Matrix b(4, 4);
            for (Eigen::Index j = 0; j < 4; ++j)
                for (Eigen::Index i = 0; i < 4; ++i) b(i, j) = rng.complex_normal();
            qh.b = 0.5 * (b - b.transpose());
            const Matrix m = w * assemble_bdg(qh).matrix * w.adjoint();
            worst = std::max(worst, max_abs_diff(m.conjugate(), -m));
        }
        return worst;
    }});
    checks.push_back({"nambu", "Q = iCT split in the canonical realization", 1e-12, [] {
        const CanonicalInvolutions inv = canonical_involutions(SymmetryClass::DIII, 8);
        const QSplit qs = q_split(*inv.c, *inv.t);
        const double tr = std::abs(qs.q.trace());
        const double sq = max_abs_diff(qs.q * qs.q, Matrix::Identity(8, 8));
        return std::max(tr, sq);
    }});

    checks.push_back({"dirac_chiral", "gamma algebra exact", 0.5, [] {
        gamma_matrices().check();
        return 0.0;
    }});
    checks.push_back({"dirac_chiral", "gauge Hamiltonian imaginary skew", 1e-12, [] {
        RngStream rng(13, 0);
        std::vector<Matrix> a_mu;
        for (int mu = 0; mu < 4; ++mu) {
            const Matrix h = random_hermitian(rng, 3);
            Matrix a = Complex(0, 1) *
                       (h - h.trace() / 3.0 * Matrix::Identity(3, 3));
            a_mu.push_back(a);
        }
        const Matrix h = dirac_hamiltonian(gamma_matrices(), {0.3, -0.7, 0.2, 0.9}, a_mu);
        return std::max(max_abs_diff(h.conjugate(), -h),
                        max_abs_diff(h, h.adjoint()));
    }});
    checks.push_back({"dirac_chiral", "index theorem at (3,1)", 0.5, [] {
        RngStream rng(14, 0);
        double worst = 0;
        for (int k = 0; k < 10; ++k) {
            const ChiralOperator op =
                sample_chiral(3, 1, ChiralField::complex_entries, 1.0, rng);
            worst = std::max(
                worst, std::abs(static_cast<double>(zero_modes(op).raw) - 2.0));
        }
        return worst;
    }});

    checks.push_back({"spectra", "surmises normalized with unit mean", 1e-10, [] {
        double worst = 0;
        for (int beta : {1, 2, 4}) {
            const double z = simpson(
                [beta](double s) { return wigner_surmise(beta, s); }, 0, 40, 400000);
            const double mean = simpson(
                [beta](double s) { return s * wigner_surmise(beta, s); }, 0, 40,
                400000);
            worst = std::max({worst, std::abs(z - 1.0), std::abs(mean - 1.0)});
        }
        return worst;
    }});
    checks.push_back({"spectra", "unfolding normalizes uniform levels", 0.02, [] {
        std::vector<double> levels(100);
        for (int i = 0; i < 100; ++i) levels[i] = i + 1.0;
        const std::vector<double> sp = bulk_spacings(unfold(levels, 1));
        double mean = 0;
        for (double s : sp) mean += s;
        mean /= static_cast<double>(sp.size());
        return std::abs(mean - 1.0);
    }});

    checks.push_back({"cli_harness", "CSV matrix round-trip exact", 0.0, [] {
        RngStream rng(15, 0);
        const Matrix m = random_hermitian(rng, 5);
        std::stringstream ss;
        write_matrix_csv(ss, m);
        return max_abs_diff(read_matrix_csv(ss), m);
    }});
    checks.push_back({"cli_harness", "symmetry-data JSON round-trip exact", 0.0, [] {
        SymmetryData data;
        data.dim = 2;
        Matrix sz(2, 2);
        sz << 1, 0, 0, -1;
        data.g0_generators = {sz};
        data.t_op = AntiUnitaryOp(Matrix::Identity(2, 2));
        data.nambu = false;
        const SymmetryData back = symmetry_data_from_json(symmetry_data_to_json(data));
        double dev = max_abs_diff(back.g0_generators[0], sz);
        dev = std::max(dev, max_abs_diff(back.t_op->w, data.t_op->w));
        if (back.dim != 2 || back.c_op || back.chirality || back.nambu) dev = 1.0;
        return dev;
    }});

    return checks;
}

}  // namespace

std::vector<VerifyResult> run_verification(const std::string& module_filter,
                                           std::optional<double> tol_override) {
    std::vector<VerifyResult> results;
    for (const Check& check : build_checks()) {
        if (!module_filter.empty() && check.module != module_filter) continue;
        VerifyResult r;
        r.module = check.module;
        r.name = check.name;
        r.tolerance = tol_override.value_or(check.tolerance);
        try {
            r.deviation = check.deviation();
            r.pass = r.deviation <= r.tolerance;
        } catch (const std::exception& e) {
            r.deviation = std::numeric_limits<double>::infinity();
            r.pass = false;
            r.error = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace tenfold
