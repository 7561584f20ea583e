// Shared helpers for the test suites: deterministic random generators and the
// independent oracles the expected values are frozen from. Oracles stay off
// the library code paths they check.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <catclone/catclone.hpp>

namespace testsupport {

using catclone::CMatrix;
using catclone::CVector;
using catclone::cxd;
using catclone::PureState;

using Rng = std::mt19937_64;

// Normalized vector of independent standard complex Gaussians.
inline PureState random_state(std::size_t n_qubits, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(std::size_t{1} << n_qubits);
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = cxd{g(rng), g(rng)};
    const double norm = v.norm();
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= norm;
    return PureState(n_qubits, std::move(v));
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cxd{g(rng), g(rng)};
    return m;
}

inline CMatrix random_hermitian(std::size_t n, Rng& rng) {
    const CMatrix m = random_matrix(n, n, rng);
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

// Modified Gram-Schmidt on a Gaussian matrix.
inline CMatrix random_unitary(std::size_t n, Rng& rng) {
    CMatrix m = random_matrix(n, n, rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cxd proj{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(m(i, k)) * m(i, j);
            for (std::size_t i = 0; i < n; ++i) m(i, j) -= proj * m(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) m(i, j) /= norm;
    }
    return m;
}

// --- independent oracles -------------------------------------------------------

// Entry (i*rb+k, j*cb+l) of a (x) b by direct index arithmetic.
inline cxd oracle_kron_entry(const CMatrix& a, const CMatrix& b, std::size_t row, std::size_t col) {
    const std::size_t rb = b.rows(), cb = b.cols();
    return a(row / rb, col / cb) * b(row % rb, col % cb);
}

// Partial transpose written against raw bit masks rather than the library's
// Bipartition plumbing: transposes the qubits listed in b_qubits (1-based,
// qubit 1 = most significant bit).
inline CMatrix oracle_partial_transpose(const CMatrix& rho, std::size_t n_qubits,
                                        const std::vector<std::size_t>& b_qubits) {
    const std::size_t d = rho.rows();
    CMatrix out = rho;
    std::size_t mask = 0;
    for (std::size_t q : b_qubits) mask |= std::size_t{1} << (n_qubits - q);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ti = (i & ~mask) | (j & mask);
            const std::size_t tj = (j & ~mask) | (i & mask);
            out(i, j) = rho(ti, tj);
        }
    return out;
}

// Reduced density matrix of a pure state on one kept qubit, by explicit
// summation over the others.
inline std::array<std::array<cxd, 2>, 2> oracle_single_qubit_marginal(const PureState& psi,
                                                                      std::size_t qubit) {
    const std::size_t n = psi.n_qubits();
    const std::size_t shift = n - qubit;
    std::array<std::array<cxd, 2>, 2> red{};
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const std::size_t bit = (idx >> shift) & 1u;
        const std::size_t rest = idx & ~(std::size_t{1} << shift);
        for (std::size_t bit2 = 0; bit2 < 2; ++bit2) {
            const std::size_t idx2 = rest | (bit2 << shift);
            red[bit][bit2] += psi[idx] * std::conj(psi[idx2]);
        }
    }
    return red;
}

// Eigenvalues of a Hermitian 2x2 [[a, z], [conj z, b]] in closed form.
inline std::array<double, 2> oracle_eig2(double a, double b, cxd z) {
    const double tr = a + b;
    const double det = a * b - std::norm(z);
    const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
    return {tr / 2.0 - disc, tr / 2.0 + disc};
}

// Schmidt weights of a pure state across {qubit} vs rest, via the closed-form
// 2x2 marginal spectrum. Independent of the Jacobi kernel.
inline std::array<double, 2> oracle_schmidt_weights(const PureState& psi, std::size_t qubit) {
    const auto red = oracle_single_qubit_marginal(psi, qubit);
    return oracle_eig2(red[0][0].real(), red[1][1].real(), red[0][1]);
}

inline double oracle_binary_entropy(double p) {
    double s = 0.0;
    if (p > 1e-15) s -= p * std::log2(p);
    if (1.0 - p > 1e-15) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

// Entropy across {qubit} vs rest from the Schmidt weights.
inline double oracle_single_cut_entropy(const PureState& psi, std::size_t qubit) {
    const auto w = oracle_schmidt_weights(psi, qubit);
    double s = 0.0;
    for (double lam : w)
        if (lam > 1e-15) s -= lam * std::log2(lam);
    return s;
}

// Negativity of a pure state across {qubit} vs rest: (sum of Schmidt
// coefficients)^2 - 1.
inline double oracle_single_cut_pure_negativity(const PureState& psi, std::size_t qubit) {
    const auto w = oracle_schmidt_weights(psi, qubit);
    const double s = std::sqrt(std::max(w[0], 0.0)) + std::sqrt(std::max(w[1], 0.0));
    return s * s - 1.0;
}

} // namespace testsupport
