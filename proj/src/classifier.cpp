#include "tenfold/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace tenfold {

namespace {

Matrix vec_to_matrix(const Vector& v, Eigen::Index n) {
    return Eigen::Map<const Matrix>(v.data(), n, n);
}

Vector matrix_to_vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

// vec(AX) = (I (x) A) vec(X), vec(XB) = (B^T (x) I) vec(X), column-major.
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Stacked commutator system for {X : gX = Xg for all g in list}.
Matrix commutator_system(const std::vector<Matrix>& group) {
    const Eigen::Index n = group.front().rows();
    Matrix sys(static_cast<Eigen::Index>(group.size()) * n * n, n * n);
    const Matrix id = Matrix::Identity(n, n);
    Eigen::Index row = 0;
    for (const Matrix& g : group) {
        sys.middleRows(row, n * n) = kron(id, g) - kron(g.transpose(), id);
        row += n * n;
    }
    return sys;
}

std::vector<Matrix> nullspace_as_matrices(const Matrix& sys, Eigen::Index n,
                                          const Tolerances& tol) {
    const Matrix null = complex_nullspace(sys, tol);
    std::vector<Matrix> basis;
    basis.reserve(null.cols());
    for (Eigen::Index c = 0; c < null.cols(); ++c)
        basis.push_back(vec_to_matrix(null.col(c), n));
    return basis;
}

// Eigenvalue clustering by gap. Returns index ranges [begin, end).
std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_eigenvalues(
    const RealVector& ev, double gap_tol) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= ev.size(); ++i) {
        if (i == ev.size() || ev[i] - ev[i - 1] > gap_tol) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }
    return clusters;
}

// Real basis of Hermitian nb x nb matrices: E_ii, (E_ij+E_ji)/sqrt2,
// (iE_ij - iE_ji)/sqrt2.
std::vector<Matrix> hermitian_basis(Eigen::Index n) {
    std::vector<Matrix> basis;
    basis.reserve(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Matrix e = Matrix::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(e);
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            Matrix e = Matrix::Zero(n, n);
            e(i, j) = M_SQRT1_2;
            e(j, i) = M_SQRT1_2;
            basis.push_back(e);
            Matrix f = Matrix::Zero(n, n);
            f(i, j) = Complex(0, M_SQRT1_2);
            f(j, i) = Complex(0, -M_SQRT1_2);
            basis.push_back(f);
        }
    return basis;
}

// Tensor-adapted data for one isotypic block: unitary B (block
// coordinates) with B^dagger g B = I_m (x) g_V, plus the conjugation
// intertwiner s on the single copy.
struct AdaptedBlock {
    Matrix b;                  // nb x nb
    std::vector<Matrix> g_v;   // generators restricted to one copy, d x d
    Matrix s;                  // conj(g_V) = s^{-1} g_V s
    int fs_sign = 0;
};

// Restrict the generators to the block and split it into m conjugate
// copies via a generic Hermitian commutant element; then align copy
// bases with Schur intertwiners.
AdaptedBlock build_adapted_block(const IsotypicBlock& block,
                                 const std::vector<Matrix>& group,
                                 RngStream& rng, const Tolerances& tol) {
    const Matrix& q = block.basis;
    const Eigen::Index nb = block.block_dim;
    const Eigen::Index m = block.multiplicity;
    const Eigen::Index d = block.irrep_dim;

    std::vector<Matrix> gens_b;
    gens_b.reserve(group.size());
    for (const Matrix& g : group) gens_b.push_back(q.adjoint() * g * q);

    const std::vector<Matrix> comm = nullspace_as_matrices(
        commutator_system(gens_b), nb, tol);
    if (static_cast<Eigen::Index>(comm.size()) != m * m)
        throw Error("adapted block: commutant dimension != multiplicity^2");

    // generic Hermitian commutant element with m eigenvalue clusters
    Matrix evecs;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    bool ok = false;
    for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
        Matrix y = Matrix::Zero(nb, nb);
        for (const Matrix& bi : comm) {
            const Complex z(rng.normal(), rng.normal());
            y += z * bi;
        }
        y = 0.5 * (y + y.adjoint()).eval();
        EigResult eig = hermitian_eig(y, 1e-8);
        const double spread =
            std::max(1.0, eig.eigenvalues[nb - 1] - eig.eigenvalues[0]);
        clusters = cluster_eigenvalues(eig.eigenvalues, 1e-6 * spread);
        if (static_cast<Eigen::Index>(clusters.size()) == m) {
            bool sizes_ok = true;
            for (auto [b0, e0] : clusters) sizes_ok &= (e0 - b0 == d);
            if (sizes_ok) {
                evecs = eig.eigenvectors;
                ok = true;
            }
        }
    }
    if (!ok)
        throw DegenerateGenericElement(
            "adapted block: could not split copies after 5 retries");

    AdaptedBlock out;
    out.b.resize(nb, nb);
    const Matrix u0 = evecs.middleCols(clusters[0].first, d);
    for (const Matrix& g : gens_b) out.g_v.push_back(u0.adjoint() * g * u0);
    out.b.leftCols(d) = u0;

    for (Eigen::Index j = 1; j < m; ++j) {
        const Matrix uj = evecs.middleCols(clusters[j].first, d);
        // intertwiner W with (Uj^dagger g Uj) W = W g_V
        Matrix sys(static_cast<Eigen::Index>(gens_b.size()) * d * d, d * d);
        const Matrix id = Matrix::Identity(d, d);
        for (std::size_t k = 0; k < gens_b.size(); ++k) {
            const Matrix gj = uj.adjoint() * gens_b[k] * uj;
            sys.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
                kron(id, gj) - kron(out.g_v[k].transpose(), id);
        }
        const Matrix null = complex_nullspace(sys, tol);
        if (null.cols() != 1)
            throw Error("adapted block: copy intertwiner not unique");
        Matrix w = vec_to_matrix(null.col(0), d);
        const Complex c = (w.adjoint() * w).trace() / static_cast<double>(d);
        w /= std::sqrt(std::abs(c));
        out.b.middleCols(j * d, d) = uj * w;
    }

    // conjugation intertwiner on the copy: g_V s = s conj(g_V)
    {
        Matrix sys(static_cast<Eigen::Index>(out.g_v.size()) * d * d, d * d);
        const Matrix id = Matrix::Identity(d, d);
        for (std::size_t k = 0; k < out.g_v.size(); ++k) {
            sys.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
                kron(id, out.g_v[k]) - kron(out.g_v[k].adjoint(), id);
        }
        const Matrix null = complex_nullspace(sys, tol);
        if (null.cols() == 0) {
            out.fs_sign = 0;
            return out;
        }
        if (null.cols() > 1)
            throw NonScalarSquare(
                "conjugation intertwiner space has dimension > 1");
        Matrix s = vec_to_matrix(null.col(0), d);
        const Matrix sts = s.adjoint() * s;
        const Complex c = sts.trace() / static_cast<double>(d);
        if ((sts - c * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() >
            100 * tol.tol_struct)
            throw NonScalarSquare("s^dagger s is not scalar");
        s /= std::sqrt(std::abs(c));
        const Matrix ssc = s * s.conjugate();
        const Complex f = ssc.trace() / static_cast<double>(d);
        if ((ssc - f * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() >
            100 * tol.tol_struct)
            throw NonScalarSquare("s*conj(s) is not scalar");
        out.fs_sign = (f.real() > 0) ? +1 : -1;
        out.s = s;
    }
    return out;
}

}  // namespace

std::vector<Matrix> group_closure(const std::vector<Matrix>& generators,
                                  const Tolerances& tol, Eigen::Index max_order) {
    if (generators.empty()) return {};
    const Eigen::Index n = generators.front().rows();
    for (const Matrix& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw DimensionMismatch("group_closure: generator dimensions differ");
        if (!is_unitary(g, tol.tol_struct))
            throw NonUnitaryGenerator("group_closure: non-unitary generator");
    }
    std::vector<Matrix> elements;
    elements.push_back(Matrix::Identity(n, n));
    auto find = [&](const Matrix& g) {
        for (const Matrix& e : elements)
            if (max_abs_diff(e, g) < tol.tol_group) return true;
        return false;
    };
    std::deque<Matrix> frontier;
    for (const Matrix& g : generators)
        if (!find(g)) {
            elements.push_back(g);
            frontier.push_back(g);
        }
    while (!frontier.empty()) {
        const Matrix g = frontier.front();
        frontier.pop_front();
        for (const Matrix& h : generators) {
            for (const Matrix& p : {Matrix(g * h), Matrix(h * g)}) {
                if (!find(p)) {
                    if (static_cast<Eigen::Index>(elements.size()) >= max_order)
                        throw GroupTooLarge("group_closure: exceeded max order");
                    elements.push_back(p);
                    frontier.push_back(p);
                }
            }
        }
    }
    return elements;  // closed under products of unitaries => under inverse
}

Eigen::Index commutant_dimension(const std::vector<Matrix>& group,
                                 const Tolerances& tol) {
    if (group.empty()) throw Error("commutant_dimension: empty group");
    const Eigen::Index n = group.front().rows();
    const Matrix sys = commutator_system(group);
    Eigen::JacobiSVD<Matrix> svd(sys);
    const Eigen::Index rank =
        numeric_rank(svd.singularValues(), sys.rows(), sys.cols(), tol);
    return n * n - rank;
}

std::vector<Matrix> commutant_basis(const std::vector<Matrix>& group,
                                    const Tolerances& tol) {
    if (group.empty()) throw Error("commutant_basis: empty group");
    const Eigen::Index n = group.front().rows();
    return nullspace_as_matrices(commutator_system(group), n, tol);
}

std::vector<IsotypicBlock> isotypic_decompose(const SymmetryData& data,
                                              RngStream rng,
                                              const Tolerances& tol) {
    const Eigen::Index n = data.dim;
    std::vector<Matrix> gens = data.g0_generators;
    if (gens.empty()) gens.push_back(Matrix::Identity(n, n));
    const std::vector<Matrix> group = group_closure(gens, tol);
    const std::vector<Matrix> comm = commutant_basis(gens, tol);
    const Eigen::Index k = static_cast<Eigen::Index>(comm.size());

    // center of the commutant: elements commuting with the whole commutant
    Matrix center_sys(k * n * n, k);
    for (Eigen::Index j = 0; j < k; ++j)
        for (Eigen::Index i = 0; i < k; ++i)
            center_sys.block(i * n * n, j, n * n, 1) =
                matrix_to_vec(comm[j] * comm[i] - comm[i] * comm[j]);
    const Matrix center_coeff = complex_nullspace(center_sys, tol);
    const Eigen::Index n_irreps = center_coeff.cols();

    // generic Hermitian center element -> minimal central idempotents
    Matrix evecs;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
    bool ok = false;
    for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
        Matrix y = Matrix::Zero(n, n);
        for (Eigen::Index l = 0; l < n_irreps; ++l) {
            Matrix z = Matrix::Zero(n, n);
            for (Eigen::Index j = 0; j < k; ++j) z += center_coeff(j, l) * comm[j];
            y += rng.normal() * (z + z.adjoint());
        }
        EigResult eig = hermitian_eig(y, 1e-8);
        const double spread =
            std::max(1.0, eig.eigenvalues[n - 1] - eig.eigenvalues[0]);
        clusters = cluster_eigenvalues(eig.eigenvalues, 1e-6 * spread);
        if (static_cast<Eigen::Index>(clusters.size()) == n_irreps) {
            evecs = eig.eigenvectors;
            ok = true;
        }
    }
    if (!ok)
        throw DegenerateGenericElement(
            "isotypic_decompose: degenerate center element after 5 retries");

    std::vector<IsotypicBlock> blocks;
    for (auto [b0, e0] : clusters) {
        IsotypicBlock blk;
        blk.basis = evecs.middleCols(b0, e0 - b0);
        blk.projection = blk.basis * blk.basis.adjoint();
        blk.block_dim = e0 - b0;
        // multiplicity^2 = dim of P * commutant * P
        Matrix restricted(n * n, k);
        for (Eigen::Index j = 0; j < k; ++j)
            restricted.col(j) =
                matrix_to_vec(blk.projection * comm[j] * blk.projection);
        Eigen::JacobiSVD<Matrix> svd(restricted);
        const Eigen::Index m2 =
            numeric_rank(svd.singularValues(), restricted.rows(), restricted.cols(), tol);
        const Eigen::Index m =
            static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(m2))));
        if (m * m != m2)
            throw Error("isotypic_decompose: block commutant dim is not a square");
        if (blk.block_dim % m != 0)
            throw Error("isotypic_decompose: multiplicity does not divide block dim");
        blk.multiplicity = m;
        blk.irrep_dim = blk.block_dim / m;
        if (data.t_op) {
            const Matrix tpt = data.t_op->conjugate_operator(blk.projection);
            blk.t_invariant = max_abs_diff(tpt, blk.projection) < tol.tol_group;
        }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

IntertwinerResult conjugation_intertwiner(const IsotypicBlock& block,
                                          const std::vector<Matrix>& group,
                                          RngStream rng, const Tolerances& tol) {
    AdaptedBlock ad = build_adapted_block(block, group, rng, tol);
    if (ad.fs_sign == 0) return {Matrix(), 0};
    return {ad.s, ad.fs_sign};
}

BlockClassResult dyson_block_class(const IsotypicBlock& block,
                                   const SymmetryData& data,
                                   const std::vector<Matrix>& group,
                                   RngStream rng, const Tolerances& tol) {
    const Eigen::Index m = block.multiplicity;
    if (!data.t_op || !block.t_invariant)
        return {SymmetryClass::A, std::nullopt, m * m};

    const Matrix& q = block.basis;
    const Eigen::Index nb = block.block_dim;
    std::vector<Matrix> gens_b;
    for (const Matrix& g : data.g0_generators.empty()
                               ? std::vector<Matrix>{Matrix::Identity(data.dim, data.dim)}
                               : data.g0_generators)
        gens_b.push_back(q.adjoint() * g * q);
    const Matrix w_tb = q.adjoint() * data.t_op->w * q.conjugate();
    if (!is_unitary(w_tb, tol.tol_group))
        throw DimensionMismatch("dyson_block_class: T does not restrict to block");

    // real dimension of {H Hermitian : [H,g]=0, T H T^{-1} = H}
    const std::vector<Matrix> hbasis = hermitian_basis(nb);
    const Eigen::Index np = static_cast<Eigen::Index>(hbasis.size());
    const Eigen::Index rows_per = 2 * nb * nb;
    RealMatrix sys((static_cast<Eigen::Index>(gens_b.size()) + 1) * rows_per, np);
    for (Eigen::Index p = 0; p < np; ++p) {
        Eigen::Index row = 0;
        for (const Matrix& g : gens_b) {
            const Matrix c = g * hbasis[p] - hbasis[p] * g;
            Eigen::Map<const RealVector> flat(
                reinterpret_cast<const double*>(c.data()), 2 * nb * nb);
            sys.block(row, p, 2 * nb * nb, 1) = flat;
            row += rows_per;
        }
        const Matrix c = w_tb * hbasis[p].conjugate() * w_tb.adjoint() - hbasis[p];
        Eigen::Map<const RealVector> flat(
            reinterpret_cast<const double*>(c.data()), 2 * nb * nb);
        sys.block(row, p, 2 * nb * nb, 1) = flat;
    }
    const Eigen::Index dim_h = real_nullity(sys, tol);

    BlockClassResult result;
    result.dim_h = dim_h;
    if (dim_h == m * (m + 1) / 2)
        result.cls = SymmetryClass::AI;
    else if (dim_h == m * (m - 1) / 2)
        result.cls = SymmetryClass::AII;
    else
        throw DimensionMismatch(
            "dyson_block_class: invariant Hermitian dimension matches neither "
            "m(m+1)/2 nor m(m-1)/2");

    // inner case: look for R in the group image with TgT^{-1} = R^{-1} g R
    const Matrix id = Matrix::Identity(nb, nb);
    std::optional<Matrix> r_b;
    for (const Matrix& cand : group) {
        const Matrix rb = q.adjoint() * cand * q;
        bool match = true;
        for (const Matrix& g : gens_b) {
            const Matrix lhs = w_tb * g.conjugate() * w_tb.adjoint();
            if (max_abs_diff(rb * lhs * rb.adjoint(), g) > tol.tol_group) {
                match = false;
                break;
            }
        }
        if (match) {
            r_b = rb;
            break;
        }
    }
    if (r_b) {
        AdaptedBlock ad = build_adapted_block(block, group, rng, tol);
        if (ad.fs_sign != 0) {
            const Eigen::Index d = block.irrep_dim;
            const Matrix s_full = kron(Matrix::Identity(m, m), ad.s);
            const Matrix w_t_t = ad.b.adjoint() * w_tb * ad.b.conjugate();
            const Matrix r_t = ad.b.adjoint() * (*r_b) * ad.b;
            const Matrix w_prime = r_t * w_t_t * s_full.conjugate();
            const int eps = antiunitary_square_sign(AntiUnitaryOp(w_prime),
                                                    100 * tol.tol_struct);
            result.epsilon = eps;
            const bool ai = (result.cls == SymmetryClass::AI);
            if ((eps == +1) != ai)
                throw Error("dyson_block_class: epsilon contradicts dimension count");
            (void)d;
        }
    }
    return result;
}

SymmetryClass classify_by_involutions(int t_square, int c_square,
                                      bool has_chirality) {
    auto bad = [&] {
        throw InvalidSignature("classify_by_involutions: signature (" +
                               std::to_string(t_square) + ", " +
                               std::to_string(c_square) + ", " +
                               (has_chirality ? std::string("chiral") : "non-chiral") +
                               ") is outside the ten classes");
    };
    if (t_square != 0 && c_square != 0) {
        // chirality is derived from the T*C product in these four rows
        if (t_square == +1 && c_square == +1) return SymmetryClass::BDI;
        if (t_square == -1 && c_square == -1) return SymmetryClass::CII;
        if (t_square == -1 && c_square == +1) return SymmetryClass::DIII;
        if (t_square == +1 && c_square == -1) return SymmetryClass::CI;
    }
    if (t_square == 0 && c_square == 0)
        return has_chirality ? SymmetryClass::AIII : SymmetryClass::A;
    if (has_chirality) bad();  // a lone T or C cannot coexist with chirality
    if (t_square == +1) return SymmetryClass::AI;
    if (t_square == -1) return SymmetryClass::AII;
    if (c_square == +1) return SymmetryClass::D;
    if (c_square == -1) return SymmetryClass::C;
    bad();
    return SymmetryClass::A;  // unreachable
}

ClassifyReport classify(const SymmetryData& data, RngStream rng,
                        const Tolerances& tol) {
    ClassifyReport report;
    if (data.nambu) {
        report.nambu_route = true;
        if (data.dim % 2 != 0)
            throw SpecInvalid("classify: Nambu space dimension must be even");
        int c_sq;
        if (data.c_op) {
            if (!is_unitary(data.c_op->w, tol.tol_struct))
                throw SpecInvalid("classify: c_op linear part not unitary");
            c_sq = antiunitary_square_sign(*data.c_op, tol.tol_struct);
        } else {
            c_sq = +1;  // canonical particle-hole conjugation of Nambu space
        }
        int t_sq = 0;
        if (data.t_op) {
            t_sq = antiunitary_square_sign(*data.t_op, tol.tol_struct);
            if (data.c_op) {
                const Matrix tc = data.t_op->w * data.c_op->w.conjugate();
                const Matrix ct = data.c_op->w * data.t_op->w.conjugate();
                if (max_abs_diff(tc, ct) > tol.tol_group &&
                    max_abs_diff(tc, Matrix(-ct)) > tol.tol_group)
                    throw InvalidSignature("classify: T and C neither commute nor anti-commute");
            }
        }
        const SymmetryClass cls =
            classify_by_involutions(t_sq, c_sq, data.chirality.has_value());
        report.blocks.push_back({data.dim, 1, data.dim, cls, std::nullopt});
        return report;
    }

    std::vector<Matrix> gens = data.g0_generators;
    if (gens.empty()) gens.push_back(Matrix::Identity(data.dim, data.dim));
    const std::vector<Matrix> group = group_closure(gens, tol);
    std::vector<IsotypicBlock> blocks = isotypic_decompose(data, rng, tol);
    for (IsotypicBlock& blk : blocks) {
        BlockClassResult bc =
            dyson_block_class(blk, data, group, rng.derive(rng.next_u64()), tol);
        blk.block_class = bc.cls;
        blk.epsilon = bc.epsilon;
        report.blocks.push_back({blk.block_dim, blk.irrep_dim, blk.multiplicity,
                                 bc.cls, bc.epsilon});
    }
    return report;
}

}  // namespace tenfold
