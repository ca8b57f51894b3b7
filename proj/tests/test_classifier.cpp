#include <doctest.h>

#include "test_helpers.hpp"

#include "tenfold/ensembles.hpp"

using namespace tenfold;
using namespace tenfold::testing;

TEST_SUITE_BEGIN("classifier");

TEST_CASE("group_closure reproduces known group orders") {
    CHECK(group_closure({pauli('z')}).size() == 2);
    CHECK(group_closure(q8_generators()).size() == 8);
    CHECK(group_closure(s3_generators()).size() == 6);
    Matrix z4(2, 2);
    z4 << Complex(0, 1), 0, 0, Complex(0, -1);
    CHECK(group_closure({z4}).size() == 4);
    // identity is always included
    const auto triv = group_closure({Matrix::Identity(3, 3)});
    REQUIRE(triv.size() == 1);
    CHECK(max_abs_diff(triv[0], Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("group_closure rejects non-unitary generators and infinite groups") {
    Matrix bad(2, 2);
    bad << 2, 0, 0, 1;
    CHECK_THROWS_AS(group_closure({bad}), NonUnitaryGenerator);
    Matrix irrational(2, 2);
    irrational << std::polar(1.0, 1.0), 0, 0, 1.0;  // rotation never closes
    CHECK_THROWS_AS(group_closure({irrational}), GroupTooLarge);
}

TEST_CASE("commutant dimension equals the sum of squared multiplicities") {
    // trivial group on C^4: commutant is everything
    CHECK(commutant_dimension(group_closure({Matrix::Identity(4, 4)})) == 16);
    // sigma_z: two distinct 1-dim irreps, 1^2 + 1^2
    CHECK(commutant_dimension(group_closure({pauli('z')})) == 2);
    // Q8 irreducible 2-dim rep: Schur => 1
    CHECK(commutant_dimension(group_closure(q8_generators())) == 1);
    // three copies of the Q8 irrep in a random basis: 3^2
    RngStream rng(31, 0);
    const Matrix u = random_unitary(rng, 6);
    std::vector<Matrix> gens;
    for (const Matrix& g : q8_generators())
        gens.push_back(u * kron(g, Matrix::Identity(3, 3)) * u.adjoint());
    CHECK(commutant_dimension(group_closure(gens)) == 9);
}

TEST_CASE("commutant basis elements commute with the whole group") {
    const auto group = group_closure(s3_generators());
    for (const Matrix& x : commutant_basis(group))
        for (const Matrix& g : group)
            CHECK(max_abs_diff(x * g, g * x) < 1e-9);
}

TEST_CASE("isotypic decomposition splits sigma_z into two lines") {
    SymmetryData data;
    data.dim = 2;
    data.g0_generators = {pauli('z')};
    const auto blocks = isotypic_decompose(data);
    REQUIRE(blocks.size() == 2);
    for (const auto& b : blocks) {
        CHECK(b.block_dim == 1);
        CHECK(b.irrep_dim == 1);
        CHECK(b.multiplicity == 1);
    }
}

TEST_CASE("isotypic decomposition finds multiplicity in a random basis") {
    RngStream rng(32, 0);
    const Matrix u = random_unitary(rng, 6);
    SymmetryData data;
    data.dim = 6;
    for (const Matrix& g : q8_generators())
        data.g0_generators.push_back(u * kron(g, Matrix::Identity(3, 3)) *
                                     u.adjoint());
    const auto blocks = isotypic_decompose(data);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].block_dim == 6);
    CHECK(blocks[0].irrep_dim == 2);
    CHECK(blocks[0].multiplicity == 3);
    // projection is a Hermitian idempotent
    const Matrix& p = blocks[0].projection;
    CHECK(max_abs_diff(p, p.adjoint()) < 1e-10);
    CHECK(max_abs_diff(p * p, p) < 1e-9);
}

TEST_CASE("isotypic decomposition separates mixed irrep content") {
    // S3 2-dim irrep plus two trivial copies
    RngStream rng(33, 0);
    const Matrix u = random_unitary(rng, 4);
    SymmetryData data;
    data.dim = 4;
    for (const Matrix& g : s3_generators()) {
        Matrix big = Matrix::Identity(4, 4);
        big.topLeftCorner(2, 2) = g;
        data.g0_generators.push_back(u * big * u.adjoint());
    }
    auto blocks = isotypic_decompose(data);
    REQUIRE(blocks.size() == 2);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.irrep_dim < b.irrep_dim; });
    CHECK(blocks[0].irrep_dim == 1);
    CHECK(blocks[0].multiplicity == 2);
    CHECK(blocks[1].irrep_dim == 2);
    CHECK(blocks[1].multiplicity == 1);
}

TEST_CASE("Frobenius-Schur signs match the character-formula oracle") {
    struct Case {
        std::vector<Matrix> gens;
        int expected;
    };
    Matrix z4(2, 2);
    z4 << Complex(0, 1), 0, 0, Complex(0, -1);
    const std::vector<Case> cases = {
        {s3_generators(), +1},   // real irrep
        {q8_generators(), -1},   // quaternionic irrep
    };
    for (const auto& [gens, expected] : cases) {
        const auto group = group_closure(gens);
        SymmetryData data;
        data.dim = 2;
        data.g0_generators = gens;
        const auto blocks = isotypic_decompose(data);
        REQUIRE(blocks.size() == 1);
        const auto it = conjugation_intertwiner(blocks[0], group);
        CHECK(it.fs_sign == expected);
        CHECK(frobenius_schur_character(group) == doctest::Approx(expected));
        // s * conj(s) = fs * Id
        const Matrix sc = it.s * it.s.conjugate();
        CHECK(max_abs_diff(sc, double(expected) * Matrix::Identity(2, 2)) < 1e-8);
    }
    // Z4 in the rep diag(i, -i): two complex-conjugate 1-dim irreps; each
    // block alone is not self-conjugate and the character oracle vanishes
    CHECK(frobenius_schur_character(group_closure({Matrix(
              z4.topLeftCorner(1, 1))})) == doctest::Approx(0.0));
}

TEST_CASE("Dyson anchors: trivial group with T^2 = +1 gives AI") {
    SymmetryData data;
    data.dim = 3;
    data.t_op = AntiUnitaryOp(Matrix::Identity(3, 3));
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].cls == SymmetryClass::AI);
    CHECK(report.blocks[0].multiplicity == 3);
}

TEST_CASE("Dyson anchors: trivial group with T^2 = -1 gives AII") {
    SymmetryData data;
    data.dim = 4;
    data.t_op = AntiUnitaryOp(symplectic(4));
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].cls == SymmetryClass::AII);
}

TEST_CASE("Dyson anchors: quaternion stand-in with T^2 = -1 gives AI, eps = +1") {
    SymmetryData data;
    data.dim = 4;  // spin-1/2 doublet with 2 orbital copies
    for (const Matrix& g : q8_generators())
        data.g0_generators.push_back(kron(g, Matrix::Identity(2, 2)));
    data.t_op = AntiUnitaryOp(
        kron(Complex(0, 1) * pauli('y'), Matrix::Identity(2, 2)));
    CHECK(antiunitary_square_sign(*data.t_op) == -1);
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].cls == SymmetryClass::AI);
    CHECK(report.blocks[0].irrep_dim == 2);
    CHECK(report.blocks[0].multiplicity == 2);
    REQUIRE(report.blocks[0].epsilon.has_value());
    CHECK(*report.blocks[0].epsilon == +1);
}

TEST_CASE("real irrep with T^2 = -1 on the multiplicity space gives AII") {
    SymmetryData data;
    data.dim = 4;
    for (const Matrix& g : s3_generators())
        data.g0_generators.push_back(kron(g, Matrix::Identity(2, 2)));
    data.t_op = AntiUnitaryOp(kron(Matrix::Identity(2, 2), symplectic(2)));
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].cls == SymmetryClass::AII);
    if (report.blocks[0].epsilon) CHECK(*report.blocks[0].epsilon == -1);
}

TEST_CASE("blocks not invariant under T fall back to class A") {
    // diag(i,-i) generates Z4 with two conjugate lines swapped by T = conj
    SymmetryData data;
    data.dim = 2;
    Matrix z4(2, 2);
    z4 << Complex(0, 1), 0, 0, Complex(0, -1);
    data.g0_generators = {z4};
    data.t_op = AntiUnitaryOp(pauli('x'));  // swaps the two lines
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 2);
    for (const auto& b : report.blocks) CHECK(b.cls == SymmetryClass::A);
}

TEST_CASE("classify example: sigma_z generators with T = conj give AI twice") {
    SymmetryData data;
    data.dim = 2;
    data.g0_generators = {pauli('z')};
    data.t_op = AntiUnitaryOp(Matrix::Identity(2, 2));
    const auto report = classify(data);
    REQUIRE(report.blocks.size() == 2);
    for (const auto& b : report.blocks) CHECK(b.cls == SymmetryClass::AI);
}

TEST_CASE("classify_by_involutions covers the full ten-row table") {
    CHECK(classify_by_involutions(0, 0, false) == SymmetryClass::A);
    CHECK(classify_by_involutions(+1, 0, false) == SymmetryClass::AI);
    CHECK(classify_by_involutions(-1, 0, false) == SymmetryClass::AII);
    CHECK(classify_by_involutions(0, +1, false) == SymmetryClass::D);
    CHECK(classify_by_involutions(0, -1, false) == SymmetryClass::C);
    CHECK(classify_by_involutions(0, 0, true) == SymmetryClass::AIII);
    CHECK(classify_by_involutions(+1, +1, true) == SymmetryClass::BDI);
    CHECK(classify_by_involutions(-1, -1, true) == SymmetryClass::CII);
    CHECK(classify_by_involutions(-1, +1, true) == SymmetryClass::DIII);
    CHECK(classify_by_involutions(+1, -1, true) == SymmetryClass::CI);
    CHECK_THROWS_AS(classify_by_involutions(+1, 0, true), InvalidSignature);
    CHECK_THROWS_AS(classify_by_involutions(0, -1, true), InvalidSignature);
    CHECK_THROWS_AS(classify_by_involutions(2, 0, false), InvalidSignature);
}

TEST_CASE("nambu route: no declared symmetries means class D") {
    SymmetryData data;
    data.dim = 6;
    data.nambu = true;
    const auto report = classify(data);
    CHECK(report.nambu_route);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].cls == SymmetryClass::D);
}

TEST_CASE("nambu route recovers the BdG classes from canonical operators") {
    struct Case {
        SymmetryClass cls;
        Eigen::Index dim;
    };
    for (const auto& [cls, dim] : {Case{SymmetryClass::DIII, 8},
                                   Case{SymmetryClass::C, 6},
                                   Case{SymmetryClass::CI, 6}}) {
        const CanonicalInvolutions inv = canonical_involutions(cls, dim);
        SymmetryData data;
        data.dim = dim;
        data.nambu = true;
        data.c_op = inv.c;
        data.t_op = inv.t;
        if (cls == SymmetryClass::DIII || cls == SymmetryClass::CI)
            data.chirality = inv.t->compose_linear(*inv.c);
        const auto report = classify(data);
        REQUIRE(report.blocks.size() == 1);
        CHECK(report.blocks[0].cls == cls);
    }
}

TEST_SUITE_END();
