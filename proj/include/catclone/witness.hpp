// Impossibility machinery: cloner input/output mixtures, negativity
// comparisons across party cuts, the closed-form curves and threshold, and
// one-sided unitary convertibility.
//
// The verdict is one-sided by design: negativity cannot increase under LOCC,
// so a strict gap n_out > n_in at any party cut certifies impossibility;
// anything else stays Inconclusive (possibility is only ever certified by
// running a protocol).
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "cat.hpp"
#include "errors.hpp"
#include "state.hpp"

namespace catclone {

struct CutRecord {
    std::size_t party = 0;
    double n_in = 0.0;
    double n_out = 0.0;
};

enum class Verdict { Impossible, Inconclusive };

struct WitnessReport {
    double alpha = std::numeric_limits<double>::quiet_NaN(); // filled by label-aware callers
    std::vector<CutRecord> cuts;
    Verdict verdict = Verdict::Inconclusive;
};

constexpr double kVerdictTol = 1e-9;

namespace detail {

inline void check_witness_set(const std::vector<PureState>& set, const PureState& blank) {
    if (set.empty()) throw DimensionMismatch("witness: empty state set");
    for (const auto& psi : set)
        if (psi.n_qubits() != blank.n_qubits())
            throw DimensionMismatch("witness: set and blank disagree in qubit count");
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (std::abs(inner_product(set[i], set[j])) > 1e-9)
                throw Error("witness: set members must be mutually orthogonal");
}

} // namespace detail

// (1/k) sum_j P[psi_j (x) blank]
inline DensityOperator build_rho_in(const std::vector<PureState>& set, const PureState& blank) {
    detail::check_witness_set(set, blank);
    std::vector<PureState> terms;
    terms.reserve(set.size());
    for (const auto& psi : set) terms.push_back(tensor(psi, blank));
    return mix(terms, std::vector<double>(set.size(), 1.0 / set.size()));
}

// (1/k) sum_j P[psi_j (x) psi_j]
inline DensityOperator build_rho_out(const std::vector<PureState>& set, const PureState& blank) {
    detail::check_witness_set(set, blank);
    std::vector<PureState> terms;
    terms.reserve(set.size());
    for (const auto& psi : set) terms.push_back(tensor(psi, psi));
    return mix(terms, std::vector<double>(set.size(), 1.0 / set.size()));
}

// Cut for party i of the two-copy register: {original qubit i, blank qubit n+i}.
inline Bipartition party_cut(std::size_t party, std::size_t n_parties) {
    return Bipartition{party, n_parties + party};
}

inline WitnessReport witness_set(const std::vector<PureState>& set, const PureState& blank) {
    const DensityOperator rho_in = build_rho_in(set, blank);
    const DensityOperator rho_out = build_rho_out(set, blank);
    const std::size_t n = blank.n_qubits();

    WitnessReport report;
    for (std::size_t party = 1; party <= n; ++party) {
        const Bipartition cut = party_cut(party, n);
        report.cuts.push_back({party, negativity(rho_in, cut), negativity(rho_out, cut)});
    }
    report.verdict = Verdict::Inconclusive;
    for (const auto& rec : report.cuts)
        if (rec.n_out > rec.n_in + kVerdictTol) report.verdict = Verdict::Impossible;
    return report;
}

inline WitnessReport witness_pair(const PureState& a, const PureState& b, const PureState& blank) {
    return witness_set({a, b}, blank);
}

// --- closed forms ------------------------------------------------------------------

enum class CaseKind { I, II };

struct ClosedForm {
    double n_in = 0.0;
    double n_out = 0.0;
};

// Case I:  n_in = sin 2a, n_out = sin 2a (sin 2a + 2 cos 2a)
// Case II: n_in = sin 2a, n_out = sqrt(sin^2 2a (2 - sin^2 2a))
inline ClosedForm closed_form(double alpha, CaseKind kind) {
    if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
        throw BadAlpha("closed_form: alpha must lie in (0, pi/4]");
    const double s2 = std::sin(2.0 * alpha);
    const double c2 = std::cos(2.0 * alpha);
    if (kind == CaseKind::I) return {s2, s2 * (s2 + 2.0 * c2)};
    return {s2, std::sqrt(s2 * s2 * (2.0 - s2 * s2))};
}

// Root of the case-I output curve crossing 1: alpha* = arcsin(1/sqrt 5)/2.
inline double threshold_alpha() {
    return 0.5 * std::asin(1.0 / std::sqrt(5.0));
}

// --- one-sided unitary convertibility ----------------------------------------------

// For 2-qubit states psi = sum M_ij |ij>, solves U = M_phi M_psi^{-1} and
// returns it iff U is unitary within 1e-9 (then (U (x) I) psi = phi).
inline std::optional<CMatrix> convertibility(const PureState& psi, const PureState& phi) {
    if (psi.n_qubits() != 2 || phi.n_qubits() != 2)
        throw DimensionMismatch("convertibility: expects 2-qubit states");
    const auto coeff = [](const PureState& s) {
        return CMatrix{{s[0], s[1]}, {s[2], s[3]}};
    };
    const CMatrix mp = coeff(psi);
    const cxd det = mp(0, 0) * mp(1, 1) - mp(0, 1) * mp(1, 0);
    if (std::abs(det) < 1e-12)
        throw SingularCoefficients("convertibility: psi has a singular coefficient matrix");
    const CMatrix inv{{mp(1, 1) / det, -mp(0, 1) / det}, {-mp(1, 0) / det, mp(0, 0) / det}};
    const CMatrix u = coeff(phi) * inv;
    if (!u.is_unitary(1e-9)) return std::nullopt;
    return u;
}

namespace detail {

// Exchanging |01> and |10> transposes the coefficient matrix, turning a
// second-subsystem relation (I (x) V) into a first-subsystem one.
inline PureState swap_qubits_2(const PureState& s) {
    CVector v(4);
    v[0] = s[0];
    v[1] = s[2];
    v[2] = s[1];
    v[3] = s[3];
    return PureState(2, std::move(v));
}

} // namespace detail

// True iff every set member is one-sided-unitary related to the first one,
// with the acting side fixed across the set (U_j (x) I for all j, or
// I (x) V_j for all j).
inline bool unitary_relation_check(const std::vector<PureState>& set) {
    if (set.empty()) throw DimensionMismatch("unitary_relation_check: empty set");
    bool first_side = true;
    bool second_side = true;
    for (std::size_t j = 1; j < set.size() && (first_side || second_side); ++j) {
        if (first_side && !convertibility(set.front(), set[j])) first_side = false;
        if (second_side && !convertibility(detail::swap_qubits_2(set.front()),
                                           detail::swap_qubits_2(set[j])))
            second_side = false;
    }
    return first_side || second_side;
}

// --- sweeps ------------------------------------------------------------------------

struct SweepRow {
    double alpha = 0.0;
    double n_in = 0.0;
    double n_out_case_i = 0.0;
    double n_out_case_ii = 0.0;
};

// Numeric negativities on a right-closed uniform grid: alpha_j = alpha_min +
// (j+1) (alpha_max - alpha_min)/steps, so alpha_max is always a row. Values
// come from built mixtures (3-qubit canonical pairs, party-1 cut), not from
// the closed forms.
inline std::vector<SweepRow> sweep(double alpha_min, double alpha_max, std::size_t steps) {
    if (!(alpha_min > 0.0) || !(alpha_max > alpha_min) ||
        alpha_max > std::numbers::pi / 4 + 1e-12 || steps < 2)
        throw BadRange("sweep: need 0 < alpha_min < alpha_max <= pi/4 and steps >= 2");

    std::vector<SweepRow> rows;
    rows.reserve(steps);
    const Bipartition cut = party_cut(1, 3);
    for (std::size_t j = 0; j < steps; ++j) {
        const double alpha = alpha_min + (alpha_max - alpha_min) *
                                             static_cast<double>(j + 1) /
                                             static_cast<double>(steps);
        const PureState base = cat_state(CatLabel(3, 0, {0, 0}, alpha));
        const PureState partner_i = cat_state(CatLabel(3, 1, {0, 0}, alpha));
        const PureState partner_ii = cat_state(CatLabel(3, 0, {1, 1}, alpha));

        SweepRow row;
        row.alpha = alpha;
        row.n_in = negativity(build_rho_in({base, partner_i}, base), cut);
        row.n_out_case_i = negativity(build_rho_out({base, partner_i}, base), cut);
        row.n_out_case_ii = negativity(build_rho_out({base, partner_ii}, base), cut);
        rows.push_back(row);
    }
    return rows;
}

} // namespace catclone
