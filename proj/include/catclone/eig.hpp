// Hermitian eigendecomposition by cyclic Jacobi rotations, plus the trace norm.
//
// Convergence contract: the off-diagonal Frobenius norm must fall below 1e-12
// within 100 sweeps, otherwise NoConvergence. Quadratic convergence makes the
// budget generous for the <=256x256 matrices this kernel serves.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace catclone {

struct Eigensystem {
    std::vector<double> values; // ascending
    CMatrix vectors;            // columns are the matching eigenvectors
};

namespace detail {

inline double offdiag_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). The 2x2 block is reduced to
// a real symmetric one by the phase of a(p,q), then rotated classically.
inline void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const cxd apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cxd phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Unitary J restricted to (p,q): column p = (c, -s*conj(phase)),
    // column q = (s, c*conj(phase)); update A <- J† A J, V <- V J.
    const cxd jpp = c;
    const cxd jqp = -s * std::conj(phase);
    const cxd jpq = s;
    const cxd jqq = c * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) { // A <- A J (columns p,q)
        const cxd akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) { // A <- J† A (rows p,q)
        const cxd apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) { // V <- V J
        const cxd vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
    a(p, q) = cxd{0.0, 0.0};
    a(q, p) = cxd{0.0, 0.0};
}

} // namespace detail

inline Eigensystem hermitian_eigensystem(const CMatrix& h) {
    if (!h.square()) throw NotHermitian("hermitian_eigensystem: matrix not square");
    if (h.hermiticity_defect() > 1e-10)
        throw NotHermitian("hermitian_eigensystem: hermiticity defect exceeds 1e-10");

    const std::size_t n = h.rows();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);

    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;
    bool converged = detail::offdiag_norm(a) < kOffTol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
        converged = detail::offdiag_norm(a) < kOffTol;
    }
    if (!converged)
        throw NoConvergence("hermitian_eigensystem: off-diagonal norm above 1e-12 after 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

inline std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    return hermitian_eigensystem(h).values;
}

// Trace norm ||m||_1 = tr sqrt(m† m). Hermitian inputs take the eigenvalue
// route (sum of |λ|); general inputs go through m†m.
inline double trace_norm(const CMatrix& m) {
    if (!m.square()) throw DimensionMismatch("trace_norm: matrix not square");
    if (m.is_hermitian(1e-10)) {
        double s = 0.0;
        for (double lam : hermitian_eigenvalues(m)) s += std::abs(lam);
        return s;
    }
    const std::size_t n = m.rows();
    CMatrix g(n, n); // m† m, mirrored so it is Hermitian bit-for-bit
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cxd s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) s += std::conj(m(k, i)) * m(k, j);
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
        g(i, i) = cxd{g(i, i).real(), 0.0};
    }
    double s = 0.0;
    for (double lam : hermitian_eigenvalues(g)) s += std::sqrt(std::max(lam, 0.0));
    return s;
}

} // namespace catclone
