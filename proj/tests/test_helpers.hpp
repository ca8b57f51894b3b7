#pragma once

#include <cmath>
#include <vector>

#include "tenfold/classifier.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold::testing {

inline Matrix pauli(char which) {
    Matrix s(2, 2);
    switch (which) {
        case 'x': s << 0, 1, 1, 0; break;
        case 'y': s << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default:  s << 1, 0, 0, -1; break;
    }
    return s;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// quaternion group Q8 generators (2-dim irreducible rep)
inline std::vector<Matrix> q8_generators() {
    return {Complex(0, 1) * pauli('z'), Complex(0, 1) * pauli('y')};
}

// 2-dim real irrep of the symmetric group S3: rotation by 120 degrees
// and a reflection
inline std::vector<Matrix> s3_generators() {
    const double c = std::cos(2.0 * M_PI / 3.0), s = std::sin(2.0 * M_PI / 3.0);
    Matrix rot(2, 2), refl(2, 2);
    rot << c, -s, s, c;
    refl << 1, 0, 0, -1;
    return {rot, refl};
}

// interleaved symplectic unit blockdiag([[0,1],[-1,0]], ...)
inline Matrix symplectic(Eigen::Index dim) {
    Matrix j = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k + 1 < dim; k += 2) {
        j(k, k + 1) = 1.0;
        j(k + 1, k) = -1.0;
    }
    return j;
}

// Frobenius-Schur indicator by the character formula (1/|G|) sum chi(g^2)
inline double frobenius_schur_character(const std::vector<Matrix>& group) {
    Complex sum = 0;
    for (const Matrix& g : group) sum += (g * g).trace();
    return (sum / static_cast<double>(group.size())).real();
}

}  // namespace tenfold::testing
