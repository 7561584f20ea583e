// Serialization: the state document, report JSON, and the sweep CSV.
#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "cat.hpp"
#include "errors.hpp"
#include "locc.hpp"
#include "state.hpp"
#include "witness.hpp"

namespace catclone {

using json = nlohmann::json;

// {"n": n, "amplitudes": [[re, im], ...]} with 2^n entries
inline json state_to_json(const PureState& psi) {
    json amps = json::array();
    for (std::size_t i = 0; i < psi.dim(); ++i)
        amps.push_back({psi[i].real(), psi[i].imag()});
    return json{{"n", psi.n_qubits()}, {"amplitudes", std::move(amps)}};
}

inline PureState state_from_json(const json& doc) {
    if (!doc.contains("n") || !doc.contains("amplitudes"))
        throw BadLabel("state_from_json: need fields n and amplitudes");
    const std::size_t n = doc["n"].get<std::size_t>();
    const auto& amps = doc["amplitudes"];
    CVector v(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i)
        v[i] = cxd{amps[i][0].get<double>(), amps[i][1].get<double>()};
    return PureState(n, std::move(v));
}

inline json witness_report_to_json(const WitnessReport& report) {
    json cuts = json::array();
    for (const auto& rec : report.cuts)
        cuts.push_back({{"cut", rec.party}, {"n_in", rec.n_in}, {"n_out", rec.n_out}});
    json out{{"cuts", std::move(cuts)},
             {"verdict", report.verdict == Verdict::Impossible ? "impossible" : "inconclusive"}};
    if (std::isnan(report.alpha)) out["alpha"] = nullptr;
    else out["alpha"] = report.alpha;
    return out;
}

inline json set_report_to_json(const SetReport& report) {
    return json{{"orthogonal", report.orthogonal},
                {"equal_entanglement", report.equal_entanglement},
                {"contains_type_i_pair", report.contains_type_i_pair},
                {"cardinality", report.cardinality}};
}

inline const char* pair_kind_name(PairKind kind) {
    switch (kind) {
        case PairKind::TypeI: return "type-i";
        case PairKind::TypeII: return "type-ii";
        default: return "unclassified";
    }
}

inline json pair_class_to_json(const PairClass& pc) {
    json out{{"class", pair_kind_name(pc.kind)}, {"detail", pc.detail}};
    if (pc.kind != PairKind::Unclassified) {
        out["cut"] = pc.cut;
        if (pc.kind == PairKind::TypeII) out["crossed_on_a"] = pc.crossed_on_a;
    }
    return out;
}

// header + one row per grid point, 12 significant digits, newline-terminated
inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "alpha,n_in,n_out_case_i,n_out_case_ii\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", row.alpha, row.n_in,
                      row.n_out_case_i, row.n_out_case_ii);
        out += buf;
    }
    return out;
}

inline json clone_report_to_json(const std::vector<BranchOutcome>& branches,
                                 const PureState& target) {
    json out;
    json branch_docs = json::array();
    double min_fid = branches.empty() ? 0.0 : 1.0;
    double prob_sum = 0.0;
    for (const auto& br : branches) {
        const double fid = fidelity(br.state, target);
        min_fid = std::min(min_fid, fid);
        prob_sum += br.probability;
        branch_docs.push_back({{"transcript", br.transcript},
                               {"probability", br.probability},
                               {"fidelity", fid},
                               {"state", state_to_json(br.state)}});
    }
    out["branches"] = std::move(branch_docs);
    out["min_fidelity"] = min_fid;
    out["probability_sum"] = prob_sum;
    out["cloned"] = min_fid >= 1.0 - 1e-9;
    return out;
}

} // namespace catclone
