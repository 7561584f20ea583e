// catclone: negativity sweeps, cloning witnesses, pair classification, set
// validation, and LOCC protocol simulation for canonical CAT/GHZ states.
//
// Exit codes: 0 success, 2 validation error (bad flags, labels, ranges),
// 1 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <catclone/catclone.hpp>

namespace {

using namespace catclone;

double angle_flag(const std::string& text) { return parse_angle(text); }

std::vector<CatLabel> parse_labels(const std::vector<std::string>& texts,
                                   const std::string& alpha_flag) {
    std::optional<double> fallback;
    if (!alpha_flag.empty()) fallback = angle_flag(alpha_flag);
    std::vector<CatLabel> labels;
    labels.reserve(texts.size());
    for (const auto& t : texts) labels.push_back(parse_label(t, fallback));
    if (labels.empty()) throw BadLabel("no labels given");
    const std::size_t n = labels.front().n;
    for (const auto& l : labels)
        if (l.n != n) throw LabelMismatch("labels disagree in qubit count");
    return labels;
}

std::optional<double> common_alpha(const std::vector<CatLabel>& labels) {
    const double a = labels.front().alpha;
    for (const auto& l : labels)
        if (std::abs(l.alpha - a) > 1e-12) return std::nullopt;
    return a;
}

void write_output(const std::string& out_flag, const std::string& payload) {
    if (out_flag == "-" || out_flag.empty()) {
        std::cout << payload;
        return;
    }
    std::string path = out_flag;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("CATCLONE_OUTDIR"); dir && *dir)
            path = std::string(dir) + "/" + path;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file " + path);
    file << payload;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"LOCC cloning of canonical CAT/GHZ states: witnesses, sweeps, protocols"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "negativity curves on an alpha grid (CSV)");
    std::string sweep_min = "0.01", sweep_max = "pi/4", sweep_out = "-";
    std::size_t sweep_steps = 200;
    sweep_cmd->add_option("--alpha-min", sweep_min, "grid lower edge, radians (excluded)");
    sweep_cmd->add_option("--alpha-max", sweep_max, "grid upper edge, radians (included)");
    sweep_cmd->add_option("--steps", sweep_steps, "number of rows");
    sweep_cmd->add_option("--out", sweep_out,
                          "output path or '-' for stdout; relative paths resolve against "
                          "$CATCLONE_OUTDIR");
    sweep_cmd->callback([&] {
        const auto rows = sweep(angle_flag(sweep_min), angle_flag(sweep_max), sweep_steps);
        write_output(sweep_out, sweep_to_csv(rows));
    });

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "negativity witness for a state set");
    std::vector<std::string> witness_set_flags;
    std::string witness_blank = "ghz", witness_alpha;
    bool witness_json = false;
    witness_cmd->add_option("--set", witness_set_flags, "labels p,tail[@alpha]")->required();
    witness_cmd->add_option("--blank", witness_blank, "blank label or 'ghz'");
    witness_cmd->add_option("--alpha", witness_alpha, "alpha for labels that omit @alpha");
    witness_cmd->add_flag("--json", witness_json, "emit the JSON report");
    witness_cmd->callback([&] {
        const auto labels = parse_labels(witness_set_flags, witness_alpha);
        std::vector<PureState> states;
        for (const auto& l : labels) states.push_back(cat_state(l));
        const std::size_t n = labels.front().n;
        PureState blank = ghz_state(n);
        if (witness_blank != "ghz") {
            std::optional<double> fallback;
            if (!witness_alpha.empty()) fallback = angle_flag(witness_alpha);
            blank = cat_state(parse_label(witness_blank, fallback));
        }
        WitnessReport report = witness_set(states, blank);
        if (const auto alpha = common_alpha(labels)) report.alpha = *alpha;
        if (witness_json) {
            std::cout << witness_report_to_json(report).dump() << "\n";
        } else {
            for (const auto& rec : report.cuts)
                std::cout << "party " << rec.party << ": n_in=" << rec.n_in
                          << " n_out=" << rec.n_out << "\n";
            std::cout << "verdict: "
                      << (report.verdict == Verdict::Impossible ? "impossible" : "inconclusive")
                      << "\n";
        }
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a pair of labels");
    std::vector<std::string> pair_flags;
    std::string classify_alpha;
    classify_cmd->add_option("--pair", pair_flags, "two labels p,tail[@alpha]")
        ->expected(2)
        ->required();
    classify_cmd->add_option("--alpha", classify_alpha, "alpha for labels that omit @alpha");
    classify_cmd->callback([&] {
        const auto labels = parse_labels(pair_flags, classify_alpha);
        if (labels.size() != 2) throw BadLabel("classify needs exactly two labels");
        const auto pc = classify_pair(labels[0], labels[1]);
        json doc = pair_class_to_json(pc);
        doc["pair"] = {to_string(labels[0]), to_string(labels[1])};
        std::cout << doc.dump() << "\n";
    });

    // validate-set
    auto* validate_cmd = app.add_subcommand("validate-set", "orthogonality/entanglement/pair scan");
    std::vector<std::string> validate_flags;
    std::string validate_alpha;
    validate_cmd->add_option("--set", validate_flags, "labels p,tail[@alpha]")->required();
    validate_cmd->add_option("--alpha", validate_alpha, "alpha for labels that omit @alpha");
    validate_cmd->callback([&] {
        const auto labels = parse_labels(validate_flags, validate_alpha);
        std::cout << set_report_to_json(validate_set(labels)).dump() << "\n";
    });

    // clone
    auto* clone_cmd = app.add_subcommand("clone", "simulate a cloning protocol on one state");
    std::string clone_protocol, clone_alpha = "pi/4", clone_state;
    std::size_t clone_n = 3;
    bool clone_trace = false;
    clone_cmd
        ->add_option("--protocol", clone_protocol, "theorem4 | theorem5-i | theorem5-ii")
        ->required()
        ->check(CLI::IsMember({"theorem4", "theorem5-i", "theorem5-ii"}));
    clone_cmd->add_option("--n", clone_n, "number of parties");
    clone_cmd->add_option("--alpha", clone_alpha, "entanglement parameter, radians");
    clone_cmd->add_option("--state", clone_state, "label p,tail of the state to clone")->required();
    clone_cmd->add_flag("--trace", clone_trace, "emit the per-branch step trace on stderr");
    clone_cmd->callback([&] {
        const double alpha = angle_flag(clone_alpha);
        const CatLabel label = parse_label(clone_state, alpha);
        if (label.n != clone_n) throw BadLabel("--state tail length must be n-1");
        Protocol proto = clone_protocol == "theorem4"
                             ? theorem4_protocol(clone_n, alpha)
                             : theorem5_protocol(clone_protocol == "theorem5-i"
                                                     ? Theorem5Kind::PairI
                                                     : Theorem5Kind::PairII,
                                                 clone_n);
        const PureState psi = cat_state(label);
        const auto branches = run(proto, tensor(psi, ghz_state(clone_n)), clone_trace);
        json doc = clone_report_to_json(branches, tensor(psi, psi));
        doc["protocol"] = clone_protocol;
        doc["n"] = clone_n;
        doc["alpha"] = alpha;
        doc["state"] = to_string(label);
        std::cout << doc.dump() << "\n";
        if (clone_trace) {
            for (std::size_t b = 0; b < branches.size(); ++b) {
                std::cerr << "branch " << b << " (p=" << branches[b].probability << "):\n";
                for (const auto& line : branches[b].trace) std::cerr << "  " << line << "\n";
            }
        }
    });

    // convertibility
    auto* conv_cmd = app.add_subcommand("convertibility",
                                        "one-sided unitary convertibility of the reduced pair");
    std::string conv_alpha;
    conv_cmd->add_option("--alpha", conv_alpha, "entanglement parameter, radians")->required();
    conv_cmd->callback([&] {
        const double alpha = angle_flag(conv_alpha);
        if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
            throw BadAlpha("convertibility: alpha must lie in (0, pi/4]");
        CVector psi(4), phi(4);
        psi[0] = std::cos(alpha);
        psi[3] = std::sin(alpha);
        phi[0] = std::sin(alpha);
        phi[3] = -std::cos(alpha);
        const auto u = convertibility(PureState(2, psi), PureState(2, phi));
        json doc;
        doc["alpha"] = alpha;
        doc["convertible"] = u.has_value();
        if (u) {
            json rows = json::array();
            for (std::size_t i = 0; i < 2; ++i)
                rows.push_back({{(*u)(i, 0).real(), (*u)(i, 0).imag()},
                                {(*u)(i, 1).real(), (*u)(i, 1).imag()}});
            doc["unitary"] = std::move(rows);
        } else {
            doc["unitary"] = nullptr;
        }
        std::cout << doc.dump() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const catclone::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
