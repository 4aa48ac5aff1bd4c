#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hhcert/bounds.hpp"
#include "hhcert/functions.hpp"
#include "hhcert/means.hpp"
#include "hhcert/quad_bounds.hpp"
#include "hhcert/special.hpp"

namespace hhcert {

/// Audit grid selector: named size ("small" keeps CLI runs quick, "full" is
/// the regression grid) plus the seed for the randomized portion.
struct GridSpec {
    std::string size = "full";
    std::uint64_t seed = 0;

    bool small() const { return size == "small"; }
};

namespace detail {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string num_key(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// One inequality instance: which claim, which variant of its right side,
/// and the fully reproducible inputs.
struct AuditCase {
    std::string claim_id;
    std::string variant = "as_printed"; // "as_printed" or "corrected"
    std::string tag;                    // sub-claim label (chain link, side, form)
    std::string fn;                     // catalog entry, empty for means claims
    std::vector<double> fn_params;
    std::map<std::string, double> params;
    std::vector<double> nodes; // partition nodes for quadrature claims

    std::string key() const {
        std::string k = claim_id + "|" + variant + "|" + tag + "|" + fn;
        for (double v : fn_params) k += ":" + detail::num_key(v);
        for (const auto& [name, v] : params) k += "|" + name + "=" + detail::num_key(v);
        if (!nodes.empty()) {
            k += "|K=";
            for (double v : nodes) k += detail::num_key(v) + ",";
        }
        return k;
    }

    double param(const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end())
            throw std::invalid_argument("audit case missing parameter '" + name + "'");
        return it->second;
    }
};

enum class AuditVerdict { holds, violated, hypothesis_unmet };

inline const char* to_string(AuditVerdict v) {
    switch (v) {
        case AuditVerdict::holds: return "holds";
        case AuditVerdict::violated: return "violated";
        default: return "hypothesis_unmet";
    }
}

struct AuditRecord {
    AuditCase c;
    double stated = 0.0;
    double measured = 0.0;
    AuditVerdict verdict = AuditVerdict::holds;
    double tightness = 0.0;
    std::string note;
};

/// Claims whose primary variant is proof-consistent gate the audit exit code;
/// printed-only measurement claims (m_prop2..4) never do.
inline bool claim_gates(const std::string& claim_id, const std::string& variant) {
    static const std::set<std::string> printed_sound = {"t1", "t2", "t3", "t4",  "t5",
                                                        "t7", "t8", "t9", "t10", "q_prop2",
                                                        "chain", "jagers"};
    static const std::set<std::string> corrected_primary = {"t6", "cor1", "cor2", "q_prop1",
                                                            "m_prop1"};
    if (printed_sound.count(claim_id)) return variant == "as_printed";
    if (corrected_primary.count(claim_id)) return variant == "corrected";
    return false;
}

inline const std::vector<std::string>& audit_claim_ids() {
    static const std::vector<std::string> ids = {
        "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9", "t10", "cor1", "cor2",
        "q_prop1", "q_prop2", "m_prop1", "m_prop2", "m_prop3", "m_prop4", "chain", "jagers"};
    return ids;
}

namespace detail {

inline double audit_slack(double stated) { return 1e-9 * (1.0 + std::abs(stated)); }

inline void judge(AuditRecord& r, bool hypothesis_ok) {
    if (!hypothesis_ok) {
        r.verdict = AuditVerdict::hypothesis_unmet;
    } else {
        r.verdict = r.measured <= r.stated + audit_slack(r.stated) ? AuditVerdict::holds
                                                                   : AuditVerdict::violated;
    }
    r.tightness = tightness_of(r.measured, r.stated);
}

} // namespace detail

/// Proposition 1 of the means section: |A - L| against (b-a)^2/3 * A(|a|,|b|)
/// as printed, or with (ln b - ln a)^2 substituted (variant "corrected"),
/// which is the scale the e^x proof route actually produces.
inline AuditRecord audit_means_prop1(PositivePair p, const std::string& variant) {
    AuditRecord r;
    r.c.claim_id = "m_prop1";
    r.c.variant = variant;
    r.c.params = {{"a", p.a}, {"b", p.b}};
    const double A = mean_arithmetic(p);
    const double L = mean_logarithmic(p);
    r.measured = std::abs(A - L);
    const double gap = (variant == "corrected") ? std::log(p.b) - std::log(p.a) : p.b - p.a;
    r.stated = gap * gap / 3.0 * mean_arithmetic(PositivePair(std::abs(p.a), std::abs(p.b)));
    r.note = (variant == "corrected") ? "log-substituted interval width" : "as printed";
    detail::judge(r, true);
    return r;
}

/// Proposition 2: G/I against exp[-(b-a)^2/2 * (2/(p+1))^2 / H]. Measured
/// as printed, no correction shipped.
inline AuditRecord audit_means_prop2(PositivePair p, double hoelder_p) {
    AuditRecord r;
    r.c.claim_id = "m_prop2";
    r.c.params = {{"a", p.a}, {"b", p.b}, {"p", hoelder_p}};
    r.measured = mean_geometric(p) / mean_identric(p);
    const double w = p.b - p.a;
    const double factor = 2.0 / (hoelder_p + 1.0);
    r.stated = std::exp(-0.5 * w * w * factor * factor / mean_harmonic(p));
    r.note = "as printed";
    detail::judge(r, true);
    return r;
}

/// Proposition 3: |A^{1/2} - L_p^2| with the declared reading
/// (A(a,b))^{1/2} and (L_p(a,b))^2, flagged in the note.
inline AuditRecord audit_means_prop3(PositivePair p, double hoelder_p, double q) {
    AuditRecord r;
    r.c.claim_id = "m_prop3";
    r.c.params = {{"a", p.a}, {"b", p.b}, {"p", hoelder_p}, {"q", q}};
    const double lp = mean_p_logarithmic(p, hoelder_p);
    r.measured = std::abs(std::sqrt(mean_arithmetic(p)) - lp * lp);
    const double w = p.b - p.a;
    const double hr = mean_harmonic(PositivePair(std::sqrt(p.a), std::sqrt(p.b)));
    r.stated = w * w / (2.0 * std::pow(hoelder_p + 1.0, 1.0 / hoelder_p)) *
               std::pow(0.5, 1.0 / q) / hr;
    r.note = "convention: A^{1/2}=(A(a,b))^{1/2}, L_p^2=(L_p(a,b))^2";
    detail::judge(r, true);
    return r;
}

/// Proposition 4: the (1-x)^n trapezoid-type relation; tag "tight" evaluates
/// the A^{1/q} chain, tag "weak" the plain-A chain, both as printed.
inline AuditRecord audit_means_prop4(PositivePair p, int n, double s, double q,
                                     const std::string& form = "tight") {
    if (std::abs(n) < 2) throw std::invalid_argument("audit_means_prop4: |n| >= 2 required");
    AuditRecord r;
    r.c.claim_id = "m_prop4";
    r.c.tag = form;
    r.c.params = {{"a", p.a}, {"b", p.b}, {"n", double(n)}, {"s", s}, {"q", q}};
    const double ua = 1.0 - p.a;
    const double ub = 1.0 - p.b;
    if (!(ua > 0.0) || !(ub > 0.0))
        throw std::invalid_argument("audit_means_prop4: needs a, b inside (0,1)");
    const double lhs_mean =
        mean_arithmetic(PositivePair(std::pow(ua, n), std::pow(ub, n)));
    const double ln = mean_p_logarithmic(PositivePair(std::min(ua, ub), std::max(ua, ub)),
                                         static_cast<double>(n));
    r.measured = std::abs(lhs_mean - std::pow(ln, n));
    const double w = p.b - p.a;
    const double pref = w * w / std::pow(12.0, (q - 1.0) / q) *
                        std::pow(n * (n - 1.0) / ((s + 2.0) * (s + 3.0)), 1.0 / q);
    const double ea = std::abs(ua);
    const double eb = std::abs(ub);
    if (form == "tight") {
        r.stated = pref * std::pow(mean_arithmetic(PositivePair(std::pow(ea, q * (n - 1)),
                                                                std::pow(eb, q * (n - 1)))),
                                   1.0 / q);
    } else {
        r.stated =
            pref * mean_arithmetic(PositivePair(std::pow(ea, n - 1.0), std::pow(eb, n - 1.0)));
    }
    r.note = "as printed";
    detail::judge(r, true);
    return r;
}

namespace detail {

inline DifferentiableFunction case_function(const AuditCase& c) {
    return catalog_get(c.fn, c.fn_params);
}

inline AuditRecord from_bound(const AuditCase& c, const BoundResult& b) {
    AuditRecord r;
    r.c = c;
    r.measured = b.lhs;
    if (c.variant == "corrected" || b.variants.find("printed") == b.variants.end()) {
        r.stated = b.bound;
    } else {
        r.stated = b.variants.at("printed");
    }
    for (const auto& note : b.notes) {
        if (!r.note.empty()) r.note += "; ";
        r.note += note;
    }
    judge(r, b.hypothesis_ok);
    return r;
}

} // namespace detail

/// Evaluates one audit case in isolation; replaying a stored violated record
/// through this function reproduces its verdict.
inline AuditRecord evaluate_case(const AuditCase& c) {
    const std::string& id = c.claim_id;

    if (id == "t1") {
        auto f = detail::case_function(c);
        Interval I(c.param("a"), c.param("b"));
        const double s = c.param("s");
        const HHSandwich hs = hh_bounds_s(f, I, s);
        AuditRecord r;
        r.c = c;
        if (c.tag == "left") {
            r.measured = hs.lower;
            r.stated = hs.mean_integral;
        } else {
            r.measured = hs.mean_integral;
            r.stated = hs.upper;
        }
        detail::judge(r, hs.s_convexity_ok);
        if (!hs.s_convexity_ok) r.note = "f not s-convex on the interval";
        return r;
    }

    if (id == "t2" || id == "t3" || id == "t4" || id == "t5" || id == "t6" || id == "t7" ||
        id == "t8" || id == "t9" || id == "t10") {
        auto f = detail::case_function(c);
        Interval I(c.param("a"), c.param("b"));
        const double lambda =
            c.params.count("lambda") ? c.param("lambda") : I.midpoint();
        BoundInput in(f, I, lambda, static_cast<int>(c.param("n")), c.param("s"), c.param("q"));
        BoundResult b;
        if (id == "t2") b = bound_t2(in);
        else if (id == "t3") b = bound_t3(in);
        else if (id == "t4") b = bound_t4(in);
        else if (id == "t5") b = bound_t5(in);
        else if (id == "t6") b = bound_t6(in);
        else if (id == "t7") b = bound_t7(in);
        else if (id == "t8") b = bound_t8(in);
        else if (id == "t9") b = bound_t9(in);
        else b = bound_t10(in);
        return detail::from_bound(c, b);
    }

    if (id == "cor1") {
        auto f = detail::case_function(c);
        Interval I(c.param("a"), c.param("b"));
        return detail::from_bound(c, bound_cor1_midpoint(f, I, c.param("s"), c.param("q")));
    }

    if (id == "cor2") {
        auto f = detail::case_function(c);
        Interval I(c.param("a"), c.param("b"));
        return detail::from_bound(c, bound_cor2_trapezoid(f, I, c.param("q")));
    }

    if (id == "q_prop1" || id == "q_prop2") {
        auto f = detail::case_function(c);
        Partition K(c.nodes);
        const QuadratureResult qr = (id == "q_prop1")
                                        ? midpoint_error_bound(f, K, c.param("s"), c.param("q"))
                                        : trapezoid_error_bound(f, K, c.param("s"), c.param("q"));
        AuditRecord r;
        r.c = c;
        r.measured = qr.oracle_error;
        r.stated =
            (c.variant == "corrected") ? qr.error_bound_corrected : qr.error_bound;
        detail::judge(r, qr.hypothesis_ok);
        if (!qr.hypothesis_ok) r.note = "derivative hypothesis not verified";
        return r;
    }

    if (id == "m_prop1") return audit_means_prop1(PositivePair(c.param("a"), c.param("b")), c.variant);
    if (id == "m_prop2")
        return audit_means_prop2(PositivePair(c.param("a"), c.param("b")), c.param("p"));
    if (id == "m_prop3")
        return audit_means_prop3(PositivePair(c.param("a"), c.param("b")), c.param("p"),
                                 c.param("q"));
    if (id == "m_prop4")
        return audit_means_prop4(PositivePair(c.param("a"), c.param("b")),
                                 static_cast<int>(c.param("n")), c.param("s"), c.param("q"),
                                 c.tag);

    if (id == "chain") {
        PositivePair p(c.param("a"), c.param("b"));
        const MeansChain ch = means_chain_check(p);
        AuditRecord r;
        r.c = c;
        if (c.tag == "H<=G") {
            r.measured = ch.harmonic;
            r.stated = ch.geometric;
        } else if (c.tag == "G<=L") {
            r.measured = ch.geometric;
            r.stated = ch.logarithmic;
        } else if (c.tag == "L<=I") {
            r.measured = ch.logarithmic;
            r.stated = ch.identric;
        } else {
            r.measured = ch.identric;
            r.stated = ch.arithmetic;
        }
        detail::judge(r, true);
        return r;
    }

    if (id == "jagers") {
        const JagersBounds jb = jagers_bounds(c.param("s"));
        AuditRecord r;
        r.c = c;
        if (c.tag == "lower<=middle") {
            r.measured = jb.lower;
            r.stated = jb.middle;
        } else if (c.tag == "middle<=upper") {
            r.measured = jb.middle;
            r.stated = jb.upper;
        } else { // "2^(s-1)<=lower": the Theorem-1 constant never beats the bracket
            r.measured = std::pow(2.0, jb.s - 1.0);
            r.stated = jb.lower;
        }
        detail::judge(r, true);
        return r;
    }

    throw std::invalid_argument("evaluate_case: unknown claim '" + id + "'");
}

namespace detail {

struct FnBox {
    const char* name;
    std::vector<double> params;
    double a_lo, a_hi;  // left endpoint range
    double w_lo, w_hi;  // width range
};

inline const std::vector<FnBox>& sconvex_family() {
    // one representative per catalog entry whose |f^(n)| family stays
    // s-convex on positive boxes
    static const std::vector<FnBox> fam = {
        {"exp", {}, -1.0, 2.0, 0.4, 2.5},
        {"poly", {0.0, 0.0, 1.0}, 0.25, 2.0, 0.4, 2.5},
        {"neg_log", {}, 0.3, 2.0, 0.4, 2.0},
        {"reciprocal", {}, 0.4, 2.0, 0.4, 2.0},
        {"sqrt", {}, 0.25, 2.0, 0.4, 2.0},
        {"pow_s", {0.75}, 0.25, 2.0, 0.4, 2.0},
        {"one_minus_x_pow_n", {3.0}, -1.5, 0.5, 0.4, 2.0},
    };
    return fam;
}

inline void push_lambda_grid(std::vector<double>& ls, double a, double b, int count) {
    ls.clear();
    if (count >= 5) ls = {a, a + 0.25 * (b - a), 0.5 * (a + b), a + 0.75 * (b - a), b};
    else ls = {a, 0.5 * (a + b), b};
}

inline std::vector<AuditCase> build_bound_cases(const std::string& id, const GridSpec& g) {
    SplitMix64 rng(g.seed ^ fnv1a(id));
    const bool small = g.small();
    std::vector<AuditCase> cases;

    const bool has_lambda = (id == "t2" || id == "t3" || id == "t4" || id == "t5" || id == "t7");
    const bool holder = (id != "t2"); // every claim except t2 raises |f^(n)| to q
    const bool concave_claim = (id == "t4" || id == "t7" || id == "t8" || id == "t10");
    const bool sfree = (id == "t4" || id == "t8"); // plain concavity, s fixed at 1

    const std::vector<double> s_grid = sfree ? std::vector<double>{1.0}
                                             : std::vector<double>{0.5, 1.0};
    const std::vector<double> q_grid = holder ? std::vector<double>{1.0, 2.0}
                                              : std::vector<double>{1.0};
    const std::vector<int> n_grid = small ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3};
    const int intervals = small ? 2 : (has_lambda ? 3 : 4);
    const int lambdas = small ? 3 : (id == "t2" ? 5 : 3);

    auto emit = [&](const FnBox& fb, double a, double b, int n, double s, double q,
                    double lambda, bool with_lambda) {
        AuditCase c;
        c.claim_id = id;
        c.fn = fb.name;
        c.fn_params = fb.params;
        c.params = {{"a", a}, {"b", b}, {"n", double(n)}, {"s", s}, {"q", q}};
        if (with_lambda) c.params["lambda"] = lambda;
        cases.push_back(c);
        if (id == "t6") {
            c.variant = "corrected";
            cases.push_back(c);
        }
    };

    if (!concave_claim) {
        for (const FnBox& fb : sconvex_family()) {
            for (int iv = 0; iv < intervals; ++iv) {
                const double a = rng.uniform(fb.a_lo, fb.a_hi);
                const double b = a + rng.uniform(fb.w_lo, fb.w_hi);
                for (int n : n_grid)
                    for (double s : s_grid)
                        for (double q : q_grid) {
                            if (has_lambda) {
                                std::vector<double> ls;
                                push_lambda_grid(ls, a, b, lambdas);
                                for (double l : ls) emit(fb, a, b, n, s, q, l, true);
                            } else {
                                emit(fb, a, b, n, s, q, 0.0, false);
                            }
                        }
            }
        }
        return cases;
    }

    // Concavity-hypothesis claims draw from polynomials whose n-th derivative
    // is constant (concave for every q) or linear (concave for q = 1), plus a
    // few deliberately hypothesis-violating exp cases kept for measurement.
    const int reps = small ? 2 : 4;
    for (int iv = 0; iv < reps; ++iv) {
        const double a = rng.uniform(0.25, 2.0);
        const double b = a + rng.uniform(0.5, 2.0);
        for (int n : n_grid) {
            for (double s : s_grid) {
                // constant n-th derivative: c * x^n
                for (double q : q_grid) {
                    if (s < 1.0) continue; // positive constants are not s-concave
                    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
                    coeffs.back() = 0.5 + rng.uniform();
                    FnBox fb{"poly", coeffs, 0, 0, 0, 0};
                    if (has_lambda) {
                        std::vector<double> ls;
                        push_lambda_grid(ls, a, b, 3);
                        for (double l : ls) emit(fb, a, b, n, s, q, l, true);
                    } else {
                        emit(fb, a, b, n, s, q, 0.0, false);
                    }
                }
                // linear n-th derivative: x^{n+1} (q = 1 keeps |f^(n)|^q concave)
                if (s == 1.0) {
                    std::vector<double> coeffs(static_cast<std::size_t>(n) + 2, 0.0);
                    coeffs.back() = 1.0;
                    FnBox fb{"poly", coeffs, 0, 0, 0, 0};
                    if (has_lambda) {
                        std::vector<double> ls;
                        push_lambda_grid(ls, a, b, 3);
                        for (double l : ls) emit(fb, a, b, n, s, 1.0, l, true);
                    } else {
                        emit(fb, a, b, n, s, 1.0, 0.0, false);
                    }
                }
                // s < 1: only an identically-zero n-th derivative is s-concave
                if (s < 1.0 && !sfree) {
                    std::vector<double> coeffs(static_cast<std::size_t>(n), 0.0);
                    coeffs.back() = 1.0 + rng.uniform(); // degree n-1
                    if (coeffs.size() == 1) coeffs[0] = 2.0;
                    FnBox fb{"poly", coeffs, 0, 0, 0, 0};
                    emit(fb, a, b, n, s, q_grid.front(), 0.5 * (a + b), has_lambda);
                }
            }
        }
        // measurement-only: hypothesis violators stay in the grid
        FnBox fe{"exp", {}, 0, 0, 0, 0};
        emit(fe, a, b, 1, 1.0, q_grid.back(), 0.5 * (a + b), has_lambda);
    }
    return cases;
}

inline std::vector<AuditCase> build_cor_cases(const std::string& id, const GridSpec& g) {
    SplitMix64 rng(g.seed ^ fnv1a(id));
    const bool small = g.small();
    std::vector<AuditCase> cases;
    const int intervals = small ? 2 : 6;
    const std::vector<double> q_grid = {1.0, 2.0};
    const std::vector<double> s_grid =
        (id == "cor1") ? std::vector<double>{0.5, 1.0} : std::vector<double>{1.0};
    for (const FnBox& fb : sconvex_family()) {
        for (int iv = 0; iv < intervals; ++iv) {
            const double a = rng.uniform(fb.a_lo, fb.a_hi);
            const double b = a + rng.uniform(fb.w_lo, fb.w_hi);
            for (double s : s_grid)
                for (double q : q_grid)
                    for (const char* variant : {"as_printed", "corrected"}) {
                        AuditCase c;
                        c.claim_id = id;
                        c.variant = variant;
                        c.fn = fb.name;
                        c.fn_params = fb.params;
                        c.params = {{"a", a}, {"b", b}, {"s", s}, {"q", q}};
                        cases.push_back(c);
                    }
        }
    }
    return cases;
}

inline std::vector<AuditCase> build_quad_cases(const std::string& id, const GridSpec& g) {
    SplitMix64 rng(g.seed ^ fnv1a(id));
    const bool small = g.small();
    std::vector<AuditCase> cases;
    const int intervals = small ? 1 : 3;
    const std::vector<int> pieces = small ? std::vector<int>{1, 4} : std::vector<int>{1, 2, 4, 8};
    for (const FnBox& fb : sconvex_family()) {
        for (int iv = 0; iv < intervals; ++iv) {
            const double a = rng.uniform(fb.a_lo, fb.a_hi);
            const double b = a + rng.uniform(fb.w_lo, fb.w_hi);
            std::vector<std::vector<double>> parts;
            for (int k : pieces) {
                Partition K = uniform_partition(Interval(a, b), k);
                parts.push_back(K.nodes);
            }
            // one non-uniform partition per interval
            std::vector<double> ns{a, 0.0, 0.0, b};
            ns[1] = a + (b - a) * rng.uniform(0.15, 0.45);
            ns[2] = a + (b - a) * rng.uniform(0.55, 0.9);
            parts.push_back(ns);
            for (const auto& nodes : parts)
                for (double s : {0.5, 1.0})
                    for (double q : {1.0, 2.0}) {
                        AuditCase c;
                        c.claim_id = id;
                        c.fn = fb.name;
                        c.fn_params = fb.params;
                        c.params = {{"a", a}, {"b", b}, {"s", s}, {"q", q}};
                        c.nodes = nodes;
                        if (id == "q_prop1") {
                            c.variant = "as_printed";
                            cases.push_back(c);
                            c.variant = "corrected";
                            cases.push_back(c);
                        } else {
                            cases.push_back(c);
                        }
                    }
        }
    }
    return cases;
}

inline std::vector<AuditCase> build_means_cases(const std::string& id, const GridSpec& g) {
    SplitMix64 rng(g.seed ^ fnv1a(id));
    const bool small = g.small();
    std::vector<AuditCase> cases;

    auto pair_case = [&](double a, double b) {
        AuditCase c;
        c.claim_id = id;
        c.params = {{"a", a}, {"b", b}};
        return c;
    };

    if (id == "chain") {
        const int count = small ? 100 : 1000;
        for (int i = 0; i < count; ++i) {
            const double a = rng.uniform(1e-3, 100.0);
            const double b = rng.uniform(1e-3, 100.0);
            for (const char* tag : {"H<=G", "G<=L", "L<=I", "I<=A"}) {
                AuditCase c = pair_case(a, b);
                c.tag = tag;
                cases.push_back(c);
            }
        }
        return cases;
    }

    if (id == "jagers") {
        const int count = small ? 100 : 1000;
        for (int i = 1; i <= count; ++i) {
            for (const char* tag : {"lower<=middle", "middle<=upper", "2^(s-1)<=lower"}) {
                AuditCase c;
                c.claim_id = id;
                c.tag = tag;
                c.params = {{"s", static_cast<double>(i) / count}};
                cases.push_back(c);
            }
        }
        return cases;
    }

    if (id == "m_prop1") {
        std::vector<std::pair<double, double>> pairs = {{0.1, 0.2}, {1.0, 2.0}, {2.0, 8.0}};
        const int extra = small ? 5 : 30;
        for (int i = 0; i < extra; ++i) {
            const double a = rng.uniform(0.05, 5.0);
            pairs.emplace_back(a, a + rng.uniform(0.05, 4.0));
        }
        for (auto [a, b] : pairs)
            for (const char* variant : {"as_printed", "corrected"}) {
                AuditCase c = pair_case(a, b);
                c.variant = variant;
                cases.push_back(c);
            }
        return cases;
    }

    if (id == "m_prop2") {
        std::vector<std::pair<double, double>> pairs = {{1.0, 1.0}, {1.0, 2.0}, {1.0, 10.0}};
        const int extra = small ? 4 : 20;
        for (int i = 0; i < extra; ++i) {
            const double a = rng.uniform(0.1, 5.0);
            pairs.emplace_back(a, a + rng.uniform(0.1, 5.0));
        }
        for (auto [a, b] : pairs)
            for (double p : {2.0, 3.0}) {
                AuditCase c = pair_case(a, b);
                c.params["p"] = p;
                cases.push_back(c);
            }
        return cases;
    }

    if (id == "m_prop3") {
        std::vector<std::pair<double, double>> pairs = {{1.0, 1.0}, {1.0, 4.0}, {0.5, 2.0}};
        const int extra = small ? 4 : 20;
        for (int i = 0; i < extra; ++i) {
            const double a = rng.uniform(0.1, 4.0);
            pairs.emplace_back(a, a + rng.uniform(0.1, 4.0));
        }
        for (auto [a, b] : pairs)
            for (auto [p, q] : std::vector<std::pair<double, double>>{{2.0, 2.0}, {3.0, 1.5}}) {
                AuditCase c = pair_case(a, b);
                c.params["p"] = p;
                c.params["q"] = q;
                cases.push_back(c);
            }
        return cases;
    }

    if (id == "m_prop4") {
        struct P4 {
            double a, b;
            int n;
            double s, q;
        };
        std::vector<P4> grid = {{0.1, 0.4, 2, 1.0, 2.0}, {0.2, 0.3, 3, 1.0, 1.0},
                                {0.3, 0.3, 2, 1.0, 2.0}};
        const int extra = small ? 4 : 16;
        for (int i = 0; i < extra; ++i) {
            const double a = rng.uniform(0.05, 0.85);
            const double b = std::min(0.95, a + rng.uniform(0.02, 0.5));
            const int ns[3] = {2, 3, -2};
            P4 p4{a, b, ns[i % 3], (i % 2) ? 0.5 : 1.0, (i % 2) ? 2.0 : 1.0};
            grid.push_back(p4);
        }
        for (const P4& p4 : grid)
            for (const char* form : {"tight", "weak"}) {
                AuditCase c;
                c.claim_id = id;
                c.tag = form;
                c.params = {{"a", p4.a}, {"b", p4.b}, {"n", double(p4.n)}, {"s", p4.s},
                            {"q", p4.q}};
                cases.push_back(c);
            }
        return cases;
    }

    throw std::invalid_argument("build_means_cases: unknown claim '" + id + "'");
}

inline std::vector<AuditCase> build_t1_cases(const GridSpec& g) {
    SplitMix64 rng(g.seed ^ fnv1a("t1"));
    const bool small = g.small();
    std::vector<AuditCase> cases;
    const int intervals = small ? 4 : 20;
    const std::vector<double> s_grid = {0.25, 0.5, 0.75, 1.0};
    struct Entry {
        const char* name;
        std::vector<double> params;
        bool s_param;
    };
    const std::vector<Entry> fns = {{"poly", {0.0, 1.0}, false},
                                    {"poly", {0.0, 0.0, 1.0}, false},
                                    {"exp", {}, false},
                                    {"pow_s", {}, true}};
    for (double s : s_grid) {
        for (const Entry& e : fns) {
            for (int iv = 0; iv < intervals; ++iv) {
                const double a = rng.uniform(0.0, 4.0);
                const double b = a + rng.uniform(0.15, 5.0 - a); // stays inside [0,5]
                for (const char* tag : {"left", "right"}) {
                    AuditCase c;
                    c.claim_id = "t1";
                    c.tag = tag;
                    c.fn = e.name;
                    c.fn_params = e.s_param ? std::vector<double>{s} : e.params;
                    c.params = {{"a", a}, {"b", b}, {"s", s}};
                    cases.push_back(c);
                }
            }
        }
    }
    return cases;
}

} // namespace detail

inline std::vector<AuditCase> build_cases(const std::string& claim_id, const GridSpec& g) {
    const auto& ids = audit_claim_ids();
    if (std::find(ids.begin(), ids.end(), claim_id) == ids.end())
        throw std::invalid_argument("build_cases: unknown claim '" + claim_id + "'");
    if (claim_id == "t1") return detail::build_t1_cases(g);
    if (claim_id == "cor1" || claim_id == "cor2") return detail::build_cor_cases(claim_id, g);
    if (claim_id == "q_prop1" || claim_id == "q_prop2")
        return detail::build_quad_cases(claim_id, g);
    if (claim_id.rfind("m_prop", 0) == 0 || claim_id == "chain" || claim_id == "jagers")
        return detail::build_means_cases(claim_id, g);
    if (claim_id.size() >= 2 && claim_id[0] == 't') return detail::build_bound_cases(claim_id, g);
    throw std::invalid_argument("build_cases: unknown claim '" + claim_id + "'");
}

/// Runs the claim's case grid; cases are independent and evaluated
/// concurrently, with the output order fixed by the grid.
inline std::vector<AuditRecord> audit_claim(const std::string& claim_id, const GridSpec& g) {
    const std::vector<AuditCase> cases = build_cases(claim_id, g);
    std::vector<AuditRecord> records(cases.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = cases.size() < 64 ? 1u : std::min(hw, 8u);
    if (workers <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) records[i] = evaluate_case(cases[i]);
        return records;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < cases.size(); i += workers)
                records[i] = evaluate_case(cases[i]);
        });
    }
    for (auto& th : pool) th.join();
    return records;
}

struct ClaimSummary {
    std::string claim_id;
    int cases = 0;
    int holds = 0;
    int violations = 0;
    int gating_violations = 0;
    int hypothesis_unmet = 0;
    double max_tightness_holding = 0.0;
    std::vector<std::string> violated_keys;
};

struct AuditSummary {
    std::vector<ClaimSummary> claims;
    int total_cases = 0;
    int total_violations = 0;
    int total_gating_violations = 0;
    int total_printed_violations = 0;
};

/// Order-fixed aggregate: claims sorted by id, violated case keys sorted.
inline AuditSummary audit_summary(const std::vector<AuditRecord>& records) {
    std::map<std::string, ClaimSummary> by_claim;
    for (const AuditRecord& r : records) {
        ClaimSummary& cs = by_claim[r.c.claim_id];
        cs.claim_id = r.c.claim_id;
        ++cs.cases;
        switch (r.verdict) {
            case AuditVerdict::holds:
                ++cs.holds;
                if (std::isfinite(r.tightness))
                    cs.max_tightness_holding = std::max(cs.max_tightness_holding, r.tightness);
                break;
            case AuditVerdict::violated:
                ++cs.violations;
                if (claim_gates(r.c.claim_id, r.c.variant)) ++cs.gating_violations;
                cs.violated_keys.push_back(r.c.key());
                break;
            case AuditVerdict::hypothesis_unmet:
                ++cs.hypothesis_unmet;
                break;
        }
    }
    AuditSummary s;
    for (auto& [id, cs] : by_claim) {
        std::sort(cs.violated_keys.begin(), cs.violated_keys.end());
        s.total_cases += cs.cases;
        s.total_violations += cs.violations;
        s.total_gating_violations += cs.gating_violations;
        s.total_printed_violations += cs.violations - cs.gating_violations;
        s.claims.push_back(cs);
    }
    return s;
}

} // namespace hhcert
