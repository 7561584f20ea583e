// Multi-qubit pure states and density operators.
//
// Conventions: qubits are 1-based and qubit 1 is the most significant bit of
// the basis index, so |q1 q2 ... qn> has index sum(q_k * 2^(n-k)). Parties are
// identified with qubit positions.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "eig.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace catclone {

inline int bit_of(std::size_t index, std::size_t n_qubits, std::size_t qubit) {
    return static_cast<int>((index >> (n_qubits - qubit)) & 1u);
}

class PureState {
  public:
    PureState(std::size_t n_qubits, CVector amplitudes)
        : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
        if (amps_.dim() != (std::size_t{1} << n_qubits_))
            throw DimensionMismatch("PureState: amplitude count must be 2^n");
        if (std::abs(amps_.norm() - 1.0) > 1e-12)
            throw NotNormalized("PureState: amplitude norm differs from 1 beyond 1e-12");
    }

    static PureState basis(std::size_t n_qubits, std::size_t index) {
        CVector v(std::size_t{1} << n_qubits);
        v[index] = 1.0;
        return PureState(n_qubits, std::move(v));
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.dim(); }
    const CVector& amplitudes() const { return amps_; }
    const cxd& operator[](std::size_t i) const { return amps_[i]; }

  private:
    std::size_t n_qubits_;
    CVector amps_;
};

class DensityOperator {
  public:
    DensityOperator(std::size_t n_qubits, CMatrix matrix)
        : n_qubits_(n_qubits), m_(std::move(matrix)) {
        const std::size_t d = std::size_t{1} << n_qubits_;
        if (m_.rows() != d || m_.cols() != d)
            throw DimensionMismatch("DensityOperator: matrix must be 2^n x 2^n");
        if (m_.hermiticity_defect() > 1e-10)
            throw InvalidDensity("DensityOperator: not Hermitian within 1e-10");
        if (std::abs(m_.trace() - cxd{1.0, 0.0}) > 1e-10)
            throw InvalidDensity("DensityOperator: trace differs from 1 beyond 1e-10");
        const auto eigs = hermitian_eigenvalues(m_);
        if (!eigs.empty() && eigs.front() < -1e-9)
            throw InvalidDensity("DensityOperator: smallest eigenvalue below -1e-9");
    }

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return m_.rows(); }
    const CMatrix& matrix() const { return m_; }

  private:
    std::size_t n_qubits_;
    CMatrix m_;
};

// One side of a bipartite cut: the qubit indices held by side A.
struct Bipartition {
    std::vector<std::size_t> side_a;

    Bipartition(std::initializer_list<std::size_t> qubits) : side_a(qubits) { canonicalize(); }
    explicit Bipartition(std::vector<std::size_t> qubits) : side_a(std::move(qubits)) { canonicalize(); }

    void canonicalize() {
        std::sort(side_a.begin(), side_a.end());
        side_a.erase(std::unique(side_a.begin(), side_a.end()), side_a.end());
    }

    // Nonempty proper subset of {1..n}.
    void validate(std::size_t n_qubits) const {
        if (side_a.empty()) throw BadCut("Bipartition: side A is empty");
        for (std::size_t q : side_a)
            if (q < 1 || q > n_qubits) throw BadCut("Bipartition: qubit index out of range");
        if (side_a.size() >= n_qubits) throw BadCut("Bipartition: side A must be a proper subset");
    }

    bool contains(std::size_t q) const {
        return std::binary_search(side_a.begin(), side_a.end(), q);
    }
};

inline cxd inner_product(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("inner_product: dimension mismatch");
    return dot(a.amplitudes(), b.amplitudes());
}

// |<a|b>|^2, phase-insensitive.
inline double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

inline PureState tensor(const PureState& a, const PureState& b) {
    return PureState(a.n_qubits() + b.n_qubits(), kron(a.amplitudes(), b.amplitudes()));
}

inline DensityOperator projector(const PureState& psi) {
    const std::size_t d = psi.dim();
    CMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (psi[i] == cxd{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    }
    return DensityOperator(psi.n_qubits(), std::move(m));
}

inline DensityOperator mix(const std::vector<PureState>& states, const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size())
        throw WeightMismatch("mix: need one weight per state");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw WeightMismatch("mix: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw WeightMismatch("mix: weights must sum to 1 within 1e-12");
    const std::size_t d = states.front().dim();
    CMatrix m(d, d);
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (states[s].dim() != d) throw DimensionMismatch("mix: state dimensions differ");
        const PureState& psi = states[s];
        for (std::size_t i = 0; i < d; ++i) {
            if (psi[i] == cxd{0.0, 0.0}) continue;
            const cxd wi = weights[s] * psi[i];
            for (std::size_t j = 0; j < d; ++j) m(i, j) += wi * std::conj(psi[j]);
        }
    }
    return DensityOperator(states.front().n_qubits(), std::move(m));
}

// Applies a 2^k x 2^k unitary to the ordered target qubits; targets[0] is the
// most significant bit of the gate's local index.
inline PureState apply_gate(const PureState& state, const CMatrix& gate,
                            const std::vector<std::size_t>& targets) {
    const std::size_t n = state.n_qubits();
    const std::size_t k = targets.size();
    if (k == 0 || k > n) throw BadTargets("apply_gate: bad target count");
    std::set<std::size_t> seen;
    for (std::size_t q : targets) {
        if (q < 1 || q > n) throw BadTargets("apply_gate: target out of range");
        if (!seen.insert(q).second) throw BadTargets("apply_gate: duplicate target");
    }
    const std::size_t gd = std::size_t{1} << k;
    if (gate.rows() != gd || gate.cols() != gd)
        throw BadTargets("apply_gate: gate dimension must be 2^|targets|");
    if (!gate.is_unitary(1e-12)) throw NotUnitary("apply_gate: gate is not unitary within 1e-12");

    // bit position (from LSB) of each target
    std::vector<std::size_t> shift(k);
    for (std::size_t t = 0; t < k; ++t) shift[t] = n - targets[t];

    CVector out(state.dim());
    std::vector<cxd> local(gd);
    const std::size_t dim = state.dim();
    std::size_t target_mask = 0;
    for (std::size_t t = 0; t < k; ++t) target_mask |= std::size_t{1} << shift[t];
    for (std::size_t rep = 0; rep < dim; ++rep) {
        if (rep & target_mask) continue; // one representative per orbit: target bits cleared
        for (std::size_t g = 0; g < gd; ++g) {
            std::size_t idx = rep;
            for (std::size_t t = 0; t < k; ++t)
                if ((g >> (k - 1 - t)) & 1u) idx |= std::size_t{1} << shift[t];
            local[g] = state[idx];
        }
        for (std::size_t gi = 0; gi < gd; ++gi) {
            cxd s{0.0, 0.0};
            for (std::size_t gj = 0; gj < gd; ++gj) s += gate(gi, gj) * local[gj];
            std::size_t idx = rep;
            for (std::size_t t = 0; t < k; ++t)
                if ((gi >> (k - 1 - t)) & 1u) idx |= std::size_t{1} << shift[t];
            out[idx] = s;
        }
    }
    return PureState(n, std::move(out));
}

// Transposes the indices of side B (the complement of cut.side_a).
inline CMatrix partial_transpose(const DensityOperator& rho, const Bipartition& cut) {
    const std::size_t n = rho.n_qubits();
    cut.validate(n);
    std::size_t b_mask = 0;
    for (std::size_t q = 1; q <= n; ++q)
        if (!cut.contains(q)) b_mask |= std::size_t{1} << (n - q);
    const std::size_t d = rho.dim();
    CMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t ti = (i & ~b_mask) | (j & b_mask);
            const std::size_t tj = (j & ~b_mask) | (i & b_mask);
            out(ti, tj) = rho.matrix()(i, j);
        }
    return out;
}

// N(rho) = ||rho^{T_B}||_1 - 1 across the given cut.
inline double negativity(const DensityOperator& rho, const Bipartition& cut) {
    return trace_norm(partial_transpose(rho, cut)) - 1.0;
}

inline DensityOperator partial_trace(const DensityOperator& rho, const Bipartition& keep) {
    const std::size_t n = rho.n_qubits();
    if (keep.side_a.empty()) throw BadCut("partial_trace: keep set is empty");
    for (std::size_t q : keep.side_a)
        if (q < 1 || q > n) throw BadCut("partial_trace: qubit index out of range");
    const std::size_t k = keep.side_a.size();
    if (k == n) return rho;

    std::vector<std::size_t> keep_shift;
    std::vector<std::size_t> drop_shift;
    for (std::size_t q = 1; q <= n; ++q)
        (keep.contains(q) ? keep_shift : drop_shift).push_back(n - q);

    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dd = std::size_t{1} << (n - k);
    auto expand = [&](std::size_t kept, std::size_t dropped) {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < k; ++t)
            if ((kept >> (k - 1 - t)) & 1u) idx |= std::size_t{1} << keep_shift[t];
        for (std::size_t t = 0; t < n - k; ++t)
            if ((dropped >> (n - k - 1 - t)) & 1u) idx |= std::size_t{1} << drop_shift[t];
        return idx;
    };

    CMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cxd s{0.0, 0.0};
            for (std::size_t e = 0; e < dd; ++e) s += rho.matrix()(expand(i, e), expand(j, e));
            out(i, j) = s;
        }
    return DensityOperator(k, std::move(out));
}

// Von Neumann entropy (base 2) of the reduced state on side A, in ebits.
inline double entanglement_entropy(const PureState& psi, const Bipartition& cut) {
    cut.validate(psi.n_qubits());
    const DensityOperator reduced = partial_trace(projector(psi), Bipartition(cut.side_a));
    double s = 0.0;
    for (double lam : hermitian_eigenvalues(reduced.matrix()))
        if (lam > 1e-15) s -= lam * std::log2(lam);
    return s;
}

} // namespace catclone
