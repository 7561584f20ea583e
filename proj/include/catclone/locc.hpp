// LOCC protocols: local gates, local measurements with classical broadcast,
// and corrections conditioned on broadcast messages. Execution expands every
// measurement branch exactly; nothing is sampled.
//
// Register layout: party i of n holds the original-copy qubit i and the
// blank-copy qubit n+i of the 2n-qubit composite.
#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cat.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "state.hpp"

namespace catclone {

struct Registers {
    std::size_t n_parties = 0;

    std::size_t total_qubits() const { return 2 * n_parties; }
    std::size_t original(std::size_t party) const { return party; }
    std::size_t blank(std::size_t party) const { return n_parties + party; }
};

enum class Role { Original, Blank };

struct Slot {
    std::size_t party = 0;
    Role role = Role::Original;
};

inline std::size_t qubit_of(const Registers& regs, const Slot& slot) {
    return slot.role == Role::Original ? regs.original(slot.party) : regs.blank(slot.party);
}

inline const char* role_name(Role role) { return role == Role::Original ? "original" : "blank"; }

struct GateStep {
    std::vector<Slot> targets;
    CMatrix u;
    std::string name; // for traces, e.g. "X"
};

struct CnotStep {
    Slot source, target;
};

struct MeasureStep {
    Slot target;
    std::vector<CMatrix> operators; // Kraus operators, sum M†M = I within 1e-10
    bool broadcast = true;
};

struct ProtocolStep;

// Executes the inner step only on branches whose broadcast message at
// message_index equals the given value.
struct ConditionalStep {
    std::size_t message_index = 0;
    int equals = 0;
    std::shared_ptr<const ProtocolStep> inner;
};

struct ProtocolStep : std::variant<GateStep, CnotStep, MeasureStep, ConditionalStep> {
    using variant::variant;
};

struct Protocol {
    Registers registers;
    std::vector<ProtocolStep> steps;
};

struct BranchOutcome {
    std::vector<int> transcript; // broadcast messages in emission order
    double probability = 0.0;
    PureState state;
    std::vector<std::string> trace; // filled when run() is asked for traces
};

// --- locality ------------------------------------------------------------------

namespace detail {

inline std::optional<std::string> check_step_locality(const Registers& regs,
                                                      const ProtocolStep& step,
                                                      std::size_t index,
                                                      std::size_t broadcasts_so_far) {
    auto violation = [&](const std::string& what) {
        return "step " + std::to_string(index) + ": " + what;
    };
    if (const auto* g = std::get_if<GateStep>(&step)) {
        if (g->targets.empty()) return violation("gate with no targets");
        for (const auto& slot : g->targets) {
            if (slot.party < 1 || slot.party > regs.n_parties)
                return violation("party out of range");
            if (slot.party != g->targets.front().party)
                return violation("gate spans parties " +
                                 std::to_string(g->targets.front().party) + " and " +
                                 std::to_string(slot.party));
        }
        return std::nullopt;
    }
    if (const auto* c = std::get_if<CnotStep>(&step)) {
        if (c->source.party < 1 || c->source.party > regs.n_parties ||
            c->target.party < 1 || c->target.party > regs.n_parties)
            return violation("party out of range");
        if (c->source.party != c->target.party)
            return violation("CNOT spans parties " + std::to_string(c->source.party) +
                             " and " + std::to_string(c->target.party));
        if (c->source.role == c->target.role) return violation("CNOT source equals target");
        return std::nullopt;
    }
    if (const auto* m = std::get_if<MeasureStep>(&step)) {
        if (m->target.party < 1 || m->target.party > regs.n_parties)
            return violation("party out of range");
        if (m->operators.empty()) return violation("measurement with no operators");
        return std::nullopt;
    }
    const auto& cond = std::get<ConditionalStep>(step);
    if (!cond.inner) return violation("conditional with no inner step");
    if (cond.message_index >= broadcasts_so_far)
        return violation("conditional references message " + std::to_string(cond.message_index) +
                         " before it is broadcast");
    return check_step_locality(regs, *cond.inner, index, broadcasts_so_far);
}

} // namespace detail

// Passes iff every step acts on a single party's qubits and conditionals only
// read previously broadcast messages. Returns a description of the first
// violation otherwise.
inline std::optional<std::string> locality_check(const Protocol& protocol) {
    std::size_t broadcasts = 0;
    for (std::size_t i = 0; i < protocol.steps.size(); ++i) {
        if (auto v = detail::check_step_locality(protocol.registers, protocol.steps[i], i, broadcasts))
            return v;
        if (const auto* m = std::get_if<MeasureStep>(&protocol.steps[i]); m && m->broadcast)
            ++broadcasts;
    }
    return std::nullopt;
}

// --- execution -------------------------------------------------------------------

namespace detail {

struct Branch {
    CVector amps;
    std::vector<int> transcript;
    double probability = 1.0;
    std::vector<std::string> trace;
};

inline void check_measurement_complete(const MeasureStep& m) {
    const std::size_t d = m.operators.front().rows();
    CMatrix sum(d, d);
    for (const auto& op : m.operators) {
        if (op.rows() != d || op.cols() != d)
            throw IncompleteMeasurement("measurement operators differ in dimension");
        sum += op.dagger() * op;
    }
    const CMatrix defect = sum - CMatrix::identity(d);
    for (const auto& z : defect.entries())
        if (std::abs(z) > 1e-10)
            throw IncompleteMeasurement("measurement operators do not sum to identity within 1e-10");
}

// Applies a (not necessarily unitary) single-qubit operator at the qubit.
inline CVector apply_local_operator(const CVector& amps, std::size_t n, std::size_t qubit,
                                    const CMatrix& op) {
    const std::size_t shift = n - qubit;
    CVector out(amps.dim());
    for (std::size_t idx = 0; idx < amps.dim(); ++idx) {
        const std::size_t bit = (idx >> shift) & 1u;
        const std::size_t partner = idx ^ (std::size_t{1} << shift);
        out[idx] = op(bit, bit) * amps[idx] + op(bit, 1 - bit) * amps[partner];
    }
    return out;
}

} // namespace detail

inline std::vector<BranchOutcome> run(const Protocol& protocol, const PureState& input,
                                      bool with_trace = false) {
    if (auto v = locality_check(protocol)) throw Error("run: locality violation: " + *v);
    const Registers& regs = protocol.registers;
    const std::size_t n = regs.total_qubits();
    if (input.n_qubits() != n)
        throw BadDimension("run: input must have 2*n_parties qubits");

    std::vector<detail::Branch> branches;
    branches.push_back({input.amplitudes(), {}, 1.0, {}});

    auto format_slot = [&](const Slot& slot) {
        return "party=" + std::to_string(slot.party) + " role=" + role_name(slot.role);
    };

    for (std::size_t si = 0; si < protocol.steps.size(); ++si) {
        const ProtocolStep* step = &protocol.steps[si];
        std::string suffix;
        if (const auto* cond = std::get_if<ConditionalStep>(step)) {
            suffix = " (when m" + std::to_string(cond->message_index) + "=" +
                     std::to_string(cond->equals) + ")";
        }

        std::vector<detail::Branch> next;
        for (auto& br : branches) {
            const ProtocolStep* eff = step;
            bool active = true;
            if (const auto* cond = std::get_if<ConditionalStep>(eff)) {
                active = br.transcript[cond->message_index] == cond->equals;
                eff = cond->inner.get();
            }
            if (!active) {
                next.push_back(std::move(br));
                continue;
            }

            if (const auto* g = std::get_if<GateStep>(eff)) {
                std::vector<std::size_t> qubits;
                qubits.reserve(g->targets.size());
                for (const auto& slot : g->targets) qubits.push_back(qubit_of(regs, slot));
                PureState s = apply_gate(PureState(n, br.amps), g->u, qubits);
                br.amps = s.amplitudes();
                if (with_trace) {
                    std::string line = "step=" + std::to_string(si) + " op=gate name=" +
                                       (g->name.empty() ? "U" : g->name);
                    for (const auto& slot : g->targets) line += " " + format_slot(slot);
                    br.trace.push_back(line + suffix);
                }
                next.push_back(std::move(br));
            } else if (const auto* c = std::get_if<CnotStep>(eff)) {
                PureState s = apply_gate(PureState(n, br.amps), cnot_gate(),
                                         {qubit_of(regs, c->source), qubit_of(regs, c->target)});
                br.amps = s.amplitudes();
                if (with_trace)
                    br.trace.push_back("step=" + std::to_string(si) + " op=cnot party=" +
                                       std::to_string(c->source.party) + " source=" +
                                       role_name(c->source.role) + " target=" +
                                       role_name(c->target.role) + suffix);
                next.push_back(std::move(br));
            } else {
                const auto& m = std::get<MeasureStep>(*eff);
                detail::check_measurement_complete(m);
                const std::size_t qubit = qubit_of(regs, m.target);
                for (std::size_t k = 0; k < m.operators.size(); ++k) {
                    CVector post = detail::apply_local_operator(br.amps, n, qubit, m.operators[k]);
                    const double norm = post.norm();
                    const double pk = norm * norm;
                    if (pk < 1e-15) continue; // zero-probability outcome
                    for (std::size_t i = 0; i < post.dim(); ++i) post[i] /= norm;
                    detail::Branch child;
                    child.amps = std::move(post);
                    child.transcript = br.transcript;
                    if (m.broadcast) child.transcript.push_back(static_cast<int>(k));
                    child.probability = br.probability * pk;
                    child.trace = br.trace;
                    if (with_trace)
                        child.trace.push_back("step=" + std::to_string(si) + " op=measure " +
                                              format_slot(m.target) + " outcome=" +
                                              std::to_string(k) + " p=" + std::to_string(pk) +
                                              suffix);
                    next.push_back(std::move(child));
                }
            }
        }
        branches = std::move(next);
    }

    std::vector<BranchOutcome> out;
    out.reserve(branches.size());
    for (auto& br : branches)
        out.push_back({std::move(br.transcript), br.probability,
                       PureState(n, std::move(br.amps)), std::move(br.trace)});
    return out;
}

// --- the cloning protocols -------------------------------------------------------

// Transversal CNOTs original->blank, a two-outcome measurement
//   M0 = cos a |0><0| + sin a |1><1|,  M1 = sin a |0><0| + cos a |1><1|
// on party 1's blank qubit (broadcast), and on outcome 1 every party applies X
// to its blank qubit. Sum M†M = I holds exactly.
inline Protocol theorem4_protocol(std::size_t n, double alpha) {
    if (n < 2) throw BadN("theorem4_protocol: need n >= 2");
    if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
        throw BadAlpha("theorem4_protocol: alpha must lie in (0, pi/4]");

    Protocol proto;
    proto.registers = Registers{n};
    for (std::size_t i = 1; i <= n; ++i)
        proto.steps.push_back(CnotStep{Slot{i, Role::Original}, Slot{i, Role::Blank}});

    const double c = std::cos(alpha), s = std::sin(alpha);
    MeasureStep measure;
    measure.target = Slot{1, Role::Blank};
    measure.operators = {CMatrix{{c, 0.0}, {0.0, s}}, CMatrix{{s, 0.0}, {0.0, c}}};
    measure.broadcast = true;
    proto.steps.push_back(std::move(measure));

    for (std::size_t i = 1; i <= n; ++i) {
        auto inner = std::make_shared<ProtocolStep>(
            GateStep{{Slot{i, Role::Blank}}, pauli_x(), "X"});
        proto.steps.push_back(ConditionalStep{0, 1, std::move(inner)});
    }
    return proto;
}

enum class Theorem5Kind { PairI, PairII };

// Pair I: transversal CNOTs blank->original. Pair II: original->blank.
// No measurements in either case.
inline Protocol theorem5_protocol(Theorem5Kind kind, std::size_t n) {
    if (n < 2) throw BadN("theorem5_protocol: need n >= 2");
    Protocol proto;
    proto.registers = Registers{n};
    for (std::size_t i = 1; i <= n; ++i) {
        if (kind == Theorem5Kind::PairI)
            proto.steps.push_back(CnotStep{Slot{i, Role::Blank}, Slot{i, Role::Original}});
        else
            proto.steps.push_back(CnotStep{Slot{i, Role::Original}, Slot{i, Role::Blank}});
    }
    return proto;
}

// --- verification ------------------------------------------------------------------

struct CloneReport {
    struct Member {
        double min_fidelity = 0.0; // over branches, against psi (x) psi
        std::size_t branch_count = 0;
        double probability_sum = 0.0;
    };
    std::vector<Member> members;
    bool success = false; // every member's every branch reaches fidelity 1 - 1e-9
};

inline CloneReport verify_cloning(const Protocol& protocol, const std::vector<PureState>& set,
                                  const PureState& blank) {
    CloneReport report;
    report.success = true;
    for (const auto& psi : set) {
        const PureState target = tensor(psi, psi);
        const auto branches = run(protocol, tensor(psi, blank));
        CloneReport::Member member;
        member.branch_count = branches.size();
        member.min_fidelity = 1.0;
        for (const auto& br : branches) {
            member.min_fidelity = std::min(member.min_fidelity, fidelity(br.state, target));
            member.probability_sum += br.probability;
        }
        if (branches.empty()) member.min_fidelity = 0.0;
        report.success = report.success && member.min_fidelity >= 1.0 - 1e-9;
        report.members.push_back(member);
    }
    return report;
}

} // namespace catclone
