// Canonical CAT/GHZ states and their pair classification.
//
// A label (n, p, tail, alpha) names the state
//   (cos a)^(1-p) (sin a)^p |0 t2..tn>  +  (-1)^p (cos a)^p (sin a)^(1-p) |1 ~t2..~tn>
// with 0 < alpha <= pi/4; alpha = pi/4 is the GHZ case. At fixed alpha the
// 2^n labels are pairwise orthogonal.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "state.hpp"

namespace catclone {

struct CatLabel {
    std::size_t n = 0;
    int p = 0;
    std::vector<std::uint8_t> tail; // bits i2..in
    double alpha = 0.0;

    CatLabel(std::size_t n_, int p_, std::vector<std::uint8_t> tail_, double alpha_)
        : n(n_), p(p_), tail(std::move(tail_)), alpha(alpha_) {
        if (n < 2) throw BadN("CatLabel: need n >= 2");
        if (p != 0 && p != 1) throw BadLabel("CatLabel: p must be 0 or 1");
        if (tail.size() != n - 1) throw BadTail("CatLabel: tail length must be n-1");
        for (auto b : tail)
            if (b > 1) throw BadTail("CatLabel: tail entries must be bits");
        if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
            throw BadAlpha("CatLabel: alpha must lie in (0, pi/4]");
    }

    bool operator==(const CatLabel& o) const {
        return n == o.n && p == o.p && tail == o.tail && std::abs(alpha - o.alpha) <= 1e-12;
    }
};

inline std::string to_string(const CatLabel& label) {
    std::string tail;
    for (auto b : label.tail) tail += static_cast<char>('0' + b);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d,%s@%.10f", label.p, tail.c_str(), label.alpha);
    return buf;
}

// Text format "p,tail" or "p,tail@alpha"; alpha in radians, "pi/4" accepted.
inline double parse_angle(const std::string& text) {
    if (text == "pi") return std::numbers::pi;
    if (text.rfind("pi/", 0) == 0) {
        const std::string den = text.substr(3);
        std::size_t used = 0;
        double d = 0.0;
        try {
            d = std::stod(den, &used);
        } catch (const std::exception&) {
            throw BadLabel("parse_angle: bad pi/<k> form");
        }
        if (used != den.size() || d == 0.0) throw BadLabel("parse_angle: bad pi/<k> form");
        return std::numbers::pi / d;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw BadLabel("parse_angle: not a number: " + text);
    }
    if (used != text.size()) throw BadLabel("parse_angle: trailing characters in " + text);
    return v;
}

inline CatLabel parse_label(const std::string& text, std::optional<double> default_alpha = {}) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw BadLabel("parse_label: expected p,tail[@alpha]");
    const std::string p_part = text.substr(0, comma);
    std::string rest = text.substr(comma + 1);
    double alpha;
    if (const auto at = rest.find('@'); at != std::string::npos) {
        alpha = parse_angle(rest.substr(at + 1));
        rest = rest.substr(0, at);
    } else if (default_alpha) {
        alpha = *default_alpha;
    } else {
        throw BadLabel("parse_label: no alpha given for " + text);
    }
    if (p_part != "0" && p_part != "1") throw BadLabel("parse_label: p must be 0 or 1");
    if (rest.empty()) throw BadLabel("parse_label: empty tail");
    std::vector<std::uint8_t> tail;
    for (char c : rest) {
        if (c != '0' && c != '1') throw BadLabel("parse_label: tail must be bits");
        tail.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    const std::size_t n = tail.size() + 1;
    return CatLabel(n, p_part[0] - '0', std::move(tail), alpha);
}

inline PureState cat_state(const CatLabel& label) {
    const std::size_t n = label.n;
    const double c = std::cos(label.alpha), s = std::sin(label.alpha);
    std::size_t idx0 = 0, idx1 = std::size_t{1} << (n - 1);
    for (std::size_t k = 0; k < n - 1; ++k) {
        const std::size_t shift = n - 2 - k;
        if (label.tail[k]) idx0 |= std::size_t{1} << shift;
        else idx1 |= std::size_t{1} << shift;
    }
    CVector v(std::size_t{1} << n);
    if (label.p == 0) {
        v[idx0] = c;
        v[idx1] = s;
    } else {
        v[idx0] = s;
        v[idx1] = -c;
    }
    return PureState(n, std::move(v));
}

inline PureState ghz_state(std::size_t n) {
    if (n < 2) throw BadN("ghz_state: need n >= 2");
    CVector v(std::size_t{1} << n);
    v[0] = v[v.dim() - 1] = 1.0 / std::sqrt(2.0);
    return PureState(n, std::move(v));
}

// --- bipartite reduction -----------------------------------------------------

// Schmidt data of one state across a cut, rank <= 2, coefficients descending.
struct SchmidtForm {
    int rank = 0;
    std::array<double, 2> coefficients{};
    std::array<CVector, 2> a_vectors{};
    std::array<CVector, 2> b_vectors{};
};

enum class SupportPattern {
    SharedSupport,  // same two product-basis slots (aligned pairing)
    CrossedSupport, // same B-side 2-dim support, pairing exchanged
    DisjointSupport // anything else
};

struct BipartiteReduction {
    SchmidtForm first, second;
    SupportPattern pattern = SupportPattern::DisjointSupport;
};

namespace detail {

inline SchmidtForm schmidt_across(const PureState& psi, const Bipartition& cut) {
    const std::size_t n = psi.n_qubits();
    cut.validate(n);
    const std::size_t ka = cut.side_a.size();
    const std::size_t da = std::size_t{1} << ka;
    const std::size_t db = std::size_t{1} << (n - ka);

    std::vector<std::size_t> a_shift, b_shift;
    for (std::size_t q = 1; q <= n; ++q)
        (cut.contains(q) ? a_shift : b_shift).push_back(n - q);
    auto expand = [&](std::size_t ia, std::size_t ib) {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < ka; ++t)
            if ((ia >> (ka - 1 - t)) & 1u) idx |= std::size_t{1} << a_shift[t];
        for (std::size_t t = 0; t < n - ka; ++t)
            if ((ib >> (n - ka - 1 - t)) & 1u) idx |= std::size_t{1} << b_shift[t];
        return idx;
    };

    CMatrix m(da, db); // coefficient matrix over A x B
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ib = 0; ib < db; ++ib) m(ia, ib) = psi[expand(ia, ib)];

    CMatrix gram(da, da); // m m†, Hermitian by mirrored construction
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = i; j < da; ++j) {
            cxd s{0.0, 0.0};
            for (std::size_t kb = 0; kb < db; ++kb) s += m(i, kb) * std::conj(m(j, kb));
            gram(i, j) = s;
            gram(j, i) = std::conj(s);
        }
        gram(i, i) = cxd{gram(i, i).real(), 0.0};
    }
    const Eigensystem es = hermitian_eigensystem(gram);

    SchmidtForm out;
    std::vector<std::pair<double, std::size_t>> lambdas; // descending
    for (std::size_t j = 0; j < da; ++j)
        lambdas.push_back({std::max(es.values[j], 0.0), j});
    std::sort(lambdas.begin(), lambdas.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });

    constexpr double kCoeffTol = 1e-9;
    std::size_t rank = 0;
    while (rank < lambdas.size() && std::sqrt(lambdas[rank].first) > kCoeffTol) ++rank;
    if (rank > 2) throw RankTooHigh("reduce_to_bipartite: Schmidt rank exceeds 2");

    out.rank = static_cast<int>(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        const double coeff = std::sqrt(lambdas[r].first);
        out.coefficients[r] = coeff;
        CVector av(da), bv(db);
        for (std::size_t i = 0; i < da; ++i) av[i] = es.vectors(i, lambdas[r].second);
        for (std::size_t ib = 0; ib < db; ++ib) {
            cxd s{0.0, 0.0};
            for (std::size_t i = 0; i < da; ++i) s += std::conj(av[i]) * m(i, ib);
            bv[ib] = s / coeff;
        }
        out.a_vectors[r] = std::move(av);
        out.b_vectors[r] = std::move(bv);
    }
    return out;
}

inline bool same_ray(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) return false;
    return std::abs(dot(u, v)) > 1.0 - 1e-9;
}

} // namespace detail

// Schmidt vectors and coefficients of both states across the cut, plus the
// relation between their supports.
inline BipartiteReduction reduce_to_bipartite(const PureState& a, const PureState& b,
                                              const Bipartition& cut) {
    if (a.n_qubits() != b.n_qubits())
        throw DimensionMismatch("reduce_to_bipartite: states live on different registers");
    BipartiteReduction red;
    red.first = detail::schmidt_across(a, cut);
    red.second = detail::schmidt_across(b, cut);
    red.pattern = SupportPattern::DisjointSupport;
    if (red.first.rank == 2 && red.second.rank == 2) {
        const auto& f = red.first;
        const auto& s = red.second;
        const bool b_aligned = detail::same_ray(f.b_vectors[0], s.b_vectors[0]) &&
                               detail::same_ray(f.b_vectors[1], s.b_vectors[1]);
        const bool b_swapped = detail::same_ray(f.b_vectors[0], s.b_vectors[1]) &&
                               detail::same_ray(f.b_vectors[1], s.b_vectors[0]);
        if (b_aligned || b_swapped) {
            const bool a_aligned = detail::same_ray(f.a_vectors[0], s.a_vectors[0]);
            // Same product slots (aligned on both sides, or both exchanged as a
            // pair) = shared support; pairing exchanged on one side = crossed.
            const bool slots_match = (b_aligned && a_aligned) || (b_swapped && !a_aligned);
            red.pattern = slots_match ? SupportPattern::SharedSupport
                                      : SupportPattern::CrossedSupport;
        }
    }
    return red;
}

// --- pair classification -----------------------------------------------------

enum class PairKind { TypeI, TypeII, Unclassified };

struct PairClass {
    PairKind kind = PairKind::Unclassified;
    std::size_t cut = 0;       // certifying single-qubit cut, 0 when unclassified
    bool crossed_on_a = false; // TypeII only: crossing realized on the A side
    std::string detail;
};

// Searches every single-qubit-vs-rest cut for a certificate. Monomial local
// relabelings (bit flips, sign flips, per-state global phase) cannot change
// which product-basis slots carry which coefficient magnitude, so matching the
// reduced supports decides the class exactly:
//   TypeI  - both states occupy the same two product slots; orthogonality then
//            forces the (cos,sin)/(sin,-cos) weight pattern.
//   TypeII - the 2-dim B supports coincide but the pairing is exchanged; every
//            phase/coefficient-exchange variant of this shape produces the same
//            case-II output negativity, so they form one class.
inline PairClass classify_pair(const CatLabel& a, const CatLabel& b) {
    if (a.n != b.n) throw LabelMismatch("classify_pair: labels differ in n");
    if (std::abs(a.alpha - b.alpha) > 1e-12)
        throw LabelMismatch("classify_pair: labels differ in alpha");
    if (a.p == b.p && a.tail == b.tail) throw LabelMismatch("classify_pair: labels must be distinct");
    if (a.alpha >= std::numbers::pi / 4 - 1e-12)
        throw BadAlpha("classify_pair: requires the strict CAT regime alpha < pi/4");

    const PureState sa = cat_state(a);
    const PureState sb = cat_state(b);
    PairClass result;
    for (std::size_t m = 1; m <= a.n; ++m) {
        const BipartiteReduction red = reduce_to_bipartite(sa, sb, Bipartition{m});
        if (red.pattern == SupportPattern::SharedSupport) {
            result.kind = PairKind::TypeI;
            result.cut = m;
            result.detail = "shared 2-dim product support at cut " + std::to_string(m) +
                            "; weights (cos,sin)/(sin,-cos)";
            return result;
        }
        if (red.pattern == SupportPattern::CrossedSupport) {
            result.kind = PairKind::TypeII;
            result.cut = m;
            result.crossed_on_a = detail::same_ray(red.first.b_vectors[0], red.second.b_vectors[0]);
            result.detail = std::string("crossed supports at cut ") + std::to_string(m) +
                            (result.crossed_on_a ? " (pairing exchanged on side A)"
                                                 : " (pairing exchanged on side B)");
            return result;
        }
    }
    result.detail = "no single-qubit cut with a shared 2-dim support";
    return result;
}

// --- set level ----------------------------------------------------------------

struct SetReport {
    bool orthogonal = false;
    bool equal_entanglement = false;
    bool contains_type_i_pair = false;
    std::size_t cardinality = 0;
};

inline SetReport validate_set(const std::vector<CatLabel>& labels) {
    if (labels.size() < 2) throw LabelMismatch("validate_set: need at least 2 labels");
    const std::size_t n = labels.front().n;
    for (const auto& l : labels)
        if (l.n != n) throw LabelMismatch("validate_set: labels differ in n");

    SetReport report;
    report.cardinality = labels.size();

    std::vector<PureState> states;
    states.reserve(labels.size());
    for (const auto& l : labels) states.push_back(cat_state(l));

    report.orthogonal = true;
    for (std::size_t i = 0; i < states.size() && report.orthogonal; ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (std::abs(inner_product(states[i], states[j])) > 1e-9) {
                report.orthogonal = false;
                break;
            }

    report.equal_entanglement = true;
    const Bipartition head_cut{1};
    const double e0 = entanglement_entropy(states.front(), head_cut);
    for (std::size_t i = 1; i < states.size(); ++i)
        if (std::abs(entanglement_entropy(states[i], head_cut) - e0) > 1e-9) {
            report.equal_entanglement = false;
            break;
        }

    // Pairs at alpha = pi/4 or with unequal alphas carry no type-I obstruction:
    // the pi/4 same-support pair is itself clonable.
    report.contains_type_i_pair = false;
    for (std::size_t i = 0; i < labels.size() && !report.contains_type_i_pair; ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const auto& x = labels[i];
            const auto& y = labels[j];
            if (std::abs(x.alpha - y.alpha) > 1e-12) continue;
            if (x.alpha >= std::numbers::pi / 4 - 1e-12) continue;
            if (x.p == y.p && x.tail == y.tail) continue;
            if (classify_pair(x, y).kind == PairKind::TypeI) {
                report.contains_type_i_pair = true;
                break;
            }
        }
    return report;
}

// The 2^(n-1) labels {p=0, tail in {0,1}^(n-1)}, tails in ascending binary order.
inline std::vector<CatLabel> max_clonable_set(std::size_t n, double alpha) {
    if (n < 2) throw BadN("max_clonable_set: need n >= 2");
    if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
        throw BadAlpha("max_clonable_set: alpha must lie in (0, pi/4]");
    std::vector<CatLabel> out;
    const std::size_t count = std::size_t{1} << (n - 1);
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint8_t> tail(n - 1);
        for (std::size_t k = 0; k < n - 1; ++k)
            tail[k] = static_cast<std::uint8_t>((t >> (n - 2 - k)) & 1u);
        out.emplace_back(n, 0, std::move(tail), alpha);
    }
    return out;
}

} // namespace catclone
