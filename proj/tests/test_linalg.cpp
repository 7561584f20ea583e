#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include <catclone/eig.hpp>
#include <catclone/matrix.hpp>

#include "support.hpp"

using namespace catclone;
using Catch::Approx;

namespace {

// Bell projector P[(|00>+|11>)/sqrt2] partially transposed on qubit 2,
// written out by hand.
CMatrix bell_projector_pt() {
    return CMatrix{{0.5, 0.0, 0.0, 0.0},
                   {0.0, 0.0, 0.5, 0.0},
                   {0.0, 0.5, 0.0, 0.0},
                   {0.0, 0.0, 0.0, 0.5}};
}

// det(m - lambda I) for a 4x4, by cofactor expansion. Characteristic
// polynomial oracle for the eigenvalue kernel.
cxd char_poly_4(const CMatrix& m, double lambda) {
    CMatrix a = m;
    for (std::size_t i = 0; i < 4; ++i) a(i, i) -= lambda;
    auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0,
                    std::size_t c1, std::size_t c2) {
        return a(r0, c0) * (a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1)) -
               a(r0, c1) * (a(r1, c0) * a(r2, c2) - a(r1, c2) * a(r2, c0)) +
               a(r0, c2) * (a(r1, c0) * a(r2, c1) - a(r1, c1) * a(r2, c0));
    };
    cxd det{0.0, 0.0};
    const double sign[4] = {1.0, -1.0, 1.0, -1.0};
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t cols[3];
        std::size_t k = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != c) cols[k++] = j;
        det += sign[c] * a(0, c) * det3(1, 2, 3, cols[0], cols[1], cols[2]);
    }
    return det;
}

} // namespace

TEST_CASE("kron identity and bit flips") {
    const CMatrix i2 = CMatrix::identity(2);
    const CMatrix i4 = kron(i2, i2);
    REQUIRE(i4.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            REQUIRE(i4(i, j) == (i == j ? cxd{1.0, 0.0} : cxd{0.0, 0.0}));

    // (X (x) X)|00> = |11>
    const CMatrix xx = kron(pauli_x(), pauli_x());
    CVector e00(4);
    e00[0] = 1.0;
    const CVector flipped = xx * e00;
    REQUIRE(std::abs(flipped[3] - cxd{1.0, 0.0}) < 1e-15);
    REQUIRE(std::abs(flipped[0]) + std::abs(flipped[1]) + std::abs(flipped[2]) < 1e-15);
}

TEST_CASE("kron places diagonal weights by index arithmetic") {
    const double c = std::cos(0.3), s = std::sin(0.3);
    const CMatrix d{{c, 0.0}, {0.0, s}};
    const CMatrix m = kron(d, CMatrix::identity(2));
    // |00>-coefficient of kron(diag(c,s), I2)|00> is c
    CVector e00(4);
    e00[0] = 1.0;
    REQUIRE((m * e00)[0].real() == Approx(c).margin(1e-15));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            REQUIRE(std::abs(m(i, j) - testsupport::oracle_kron_entry(d, CMatrix::identity(2), i, j)) <
                    1e-15);
}

TEST_CASE("kron matches the direct index formula on random matrices") {
    testsupport::Rng rng(101);
    const CMatrix a = testsupport::random_matrix(3, 2, rng);
    const CMatrix b = testsupport::random_matrix(2, 4, rng);
    const CMatrix k = kron(a, b);
    REQUIRE(k.rows() == a.rows() * b.rows());
    REQUIRE(k.cols() == a.cols() * b.cols());
    for (std::size_t i = 0; i < k.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j)
            REQUIRE(std::abs(k(i, j) - testsupport::oracle_kron_entry(a, b, i, j)) < 1e-15);
}

TEST_CASE("unitary factory rejects non-unitaries") {
    REQUIRE_NOTHROW(CMatrix::unitary(2, {0, 1, 1, 0}));
    REQUIRE_THROWS_AS(CMatrix::unitary(2, {1, 0, 0, 1.0 + 1e-6}), NotUnitary);
}

TEST_CASE("eigenvalues of Pauli Z") {
    const auto ev = hermitian_eigenvalues(pauli_z());
    REQUIRE(ev.size() == 2);
    REQUIRE(ev[0] == Approx(-1.0).margin(1e-12));
    REQUIRE(ev[1] == Approx(1.0).margin(1e-12));
}

TEST_CASE("eigenvalues of the Bell projector partial transpose") {
    const CMatrix m = bell_projector_pt();
    const auto ev = hermitian_eigenvalues(m);
    const double expected[4] = {-0.5, 0.5, 0.5, 0.5};
    for (std::size_t i = 0; i < 4; ++i) REQUIRE(ev[i] == Approx(expected[i]).margin(1e-12));
    // every reported eigenvalue is a root of the characteristic polynomial
    for (double lam : ev) REQUIRE(std::abs(char_poly_4(m, lam)) < 1e-12);
}

TEST_CASE("diagonal matrices return their sorted diagonal") {
    const CMatrix d{{3.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 2.0}};
    const auto ev = hermitian_eigenvalues(d);
    REQUIRE(ev[0] == Approx(-1.0).margin(1e-14));
    REQUIRE(ev[1] == Approx(2.0).margin(1e-14));
    REQUIRE(ev[2] == Approx(3.0).margin(1e-14));
}

TEST_CASE("non-Hermitian input is rejected") {
    CMatrix m{{0.0, 1.0}, {0.0, 0.0}};
    REQUIRE_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
}

TEST_CASE("eigensystem residuals and trace sums on random Hermitian matrices") {
    testsupport::Rng rng(202);
    for (std::size_t n : {2, 5, 16, 33, 64}) {
        const CMatrix h = testsupport::random_hermitian(n, rng);
        const Eigensystem es = hermitian_eigensystem(h);
        double sum = 0.0;
        for (double lam : es.values) sum += lam;
        REQUIRE(sum == Approx(h.trace().real()).margin(1e-9));
        for (std::size_t j = 0; j < n; ++j) {
            CVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = es.vectors(i, j);
            const CVector hv = h * v;
            double residual = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                residual += std::norm(hv[i] - es.values[j] * v[i]);
            REQUIRE(std::sqrt(residual) < 1e-8);
        }
    }
}

TEST_CASE("trace norm basics") {
    REQUIRE(trace_norm(CMatrix::identity(5)) == Approx(5.0).margin(1e-12));
    REQUIRE(trace_norm(CMatrix::zero(3, 3)) == Approx(0.0).margin(1e-12));
    REQUIRE(trace_norm(bell_projector_pt()) == Approx(2.0).margin(1e-12));
}

TEST_CASE("trace norm dominates the trace and is unitarily invariant") {
    testsupport::Rng rng(303);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial);
        const CMatrix m = testsupport::random_matrix(n, n, rng);
        const double tn = trace_norm(m);
        REQUIRE(tn >= std::abs(m.trace()) - 1e-9);
        const CMatrix u = testsupport::random_unitary(n, rng);
        const CMatrix v = testsupport::random_unitary(n, rng);
        REQUIRE(trace_norm(u * m * v) == Approx(tn).margin(1e-8));
    }
}

TEST_CASE("matrix shape validation") {
    REQUIRE_THROWS_AS(CMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
    REQUIRE_THROWS_AS(trace_norm(CMatrix(2, 3)), DimensionMismatch);
}
