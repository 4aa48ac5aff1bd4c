// Acceptance suite: one line of output per criterion, nonzero exit when any
// criterion fails. Each check pins the tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "hhcert/hhcert.hpp"

using namespace hhcert;
using nlohmann::json;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d (%s): %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HHCERT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// ---- 1: identity suite -----------------------------------------------------

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    struct Entry {
        const char* name;
        std::vector<double> params;
        double a_lo, a_hi, w_lo, w_hi;
    };
    const std::vector<Entry> entries = {
        {"exp", {}, -2.0, 2.0, 0.3, 2.0},
        {"neg_log", {}, 0.1, 2.0, 0.2, 2.0},
        {"sqrt", {}, 0.1, 2.0, 0.2, 2.0},
        {"pow_s", {0.5}, 0.1, 2.0, 0.2, 2.0},
        {"one_minus_x_pow_n", {3}, -2.0, 0.5, 0.2, 2.0},
        {"reciprocal", {}, 0.1, 2.0, 0.2, 2.0},
        {"poly", {1.0, -2.0, 0.5, 3.0}, -2.0, 2.0, 0.3, 2.0},
    };
    std::mt19937_64 rng(20240001);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    long cases = 0;
    double worst = 0.0;
    std::string worst_key = "-";
    for (const Entry& e : entries) {
        auto f = catalog_get(e.name, e.params);
        for (int n = 1; n <= 4; ++n) {
            for (int iv = 0; iv < 10; ++iv) {
                const double a = e.a_lo + (e.a_hi - e.a_lo) * u(rng);
                const double b = a + e.w_lo + (e.w_hi - e.w_lo) * u(rng);
                Interval I(a, b);
                const double scale =
                    1.0 + std::abs(reference_integral([&](double x) { return f.value(x); }, I,
                                                      1e-11, f.domain().singular_at_lo(a, 0),
                                                      f.domain().singular_at_hi(b, 0)));
                for (int k = 0; k < 20; ++k) {
                    const double t = a + (b - a) * u(rng);
                    const double res = lemma3_residual(f, I, t, n) / scale;
                    ++cases;
                    if (res > worst) {
                        worst = res;
                        worst_key = std::string(e.name) + " n=" + std::to_string(n);
                    }
                }
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char detail[256];
    std::snprintf(detail, sizeof detail,
                  "%ld cases, worst scaled residual %.3e (tol 1e-8) at %s, %.1fs", cases, worst,
                  worst_key.c_str(), secs);
    report(1, "identity suite", worst <= 1e-8 && cases >= 4800 && secs < 60.0, detail);
}

// ---- 2: s-HH sandwich ------------------------------------------------------

void criterion2() {
    std::mt19937_64 rng(20240002);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bool ok = true;
    std::string why = "sandwich held on all cases";
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
        std::vector<DifferentiableFunction> fns = {
            catalog_get("poly", {0, 1}),
            catalog_get("poly", {0, 0, 1}),
            catalog_get("exp"),
            catalog_get("pow_s", {s}),
        };
        for (const auto& f : fns) {
            for (int iv = 0; iv < 50; ++iv) {
                const double a = 4.0 * u(rng);
                const double b = a + 0.15 + (5.0 - a - 0.15) * u(rng);
                const HHSandwich hs = hh_bounds_s(f, Interval(a, b), s);
                const double slack = 1e-10 * std::max(1.0, std::abs(hs.mean_integral));
                if (!(hs.lower <= hs.mean_integral + slack) ||
                    !(hs.mean_integral <= hs.upper + slack)) {
                    ok = false;
                    why = "violation for " + f.name() + " s=" + std::to_string(s);
                }
            }
        }
    }
    const HHSandwich pin = hh_bounds_s(catalog_get("poly", {0, 0, 1}), Interval(0, 1), 1.0);
    const bool pinned = std::abs(pin.lower - 0.25) <= 1e-12 &&
                        std::abs(pin.mean_integral - 1.0 / 3.0) <= 1e-12 &&
                        std::abs(pin.upper - 0.5) <= 1e-12;
    if (!pinned) {
        ok = false;
        why = "x^2 on [0,1] triple drifted";
    }
    report(2, "s-HH sandwich", ok, why + "; x^2 triple (0.25, 1/3, 0.5) pinned");
}

// ---- 3: Jagers sandwich ----------------------------------------------------

void criterion3() {
    bool ok = true;
    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1000.0;
        const JagersBounds jb = jagers_bounds(s);
        if (!(jb.lower <= jb.middle + 1e-12) || !(jb.middle <= jb.upper + 1e-12) ||
            !(std::pow(2.0, s - 1.0) <= jb.lower + 1e-12))
            ok = false;
    }
    const JagersBounds one = jagers_bounds(1.0);
    const bool at_one = std::abs(one.lower - 1.0) <= 1e-12 && std::abs(one.middle - 1.0) <= 1e-12 &&
                        std::abs(one.upper - 1.0) <= 1e-12;
    report(3, "Jagers sandwich", ok && at_one,
           "1000-point s-grid ordered, 2^{s-1} <= lower, equality at s=1");
}

// ---- 4: bound dominance regression ------------------------------------------

void criterion4() {
    const GridSpec g{"full", 0};
    const std::vector<std::string> claims = {"t2", "t3", "t4", "t5", "t6",
                                             "t7", "t8", "t9", "t10", "cor1", "cor2"};
    int cases = 0, violations = 0, hypothesis_passing = 0;
    for (const auto& id : claims) {
        for (const AuditRecord& r : audit_claim(id, g)) {
            if (!claim_gates(r.c.claim_id, r.c.variant)) continue;
            ++cases;
            if (r.verdict != AuditVerdict::hypothesis_unmet) ++hypothesis_passing;
            if (r.verdict == AuditVerdict::violated) ++violations;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%d corrected-variant cases (%d hypothesis-passing), %d violations", cases,
                  hypothesis_passing, violations);
    report(4, "bound dominance regression", cases >= 2000 && hypothesis_passing >= 2000 &&
                                                violations == 0,
           detail);
}

// ---- 5: specialization coherence --------------------------------------------

void criterion5() {
    std::mt19937_64 rng(20240005);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<std::pair<std::string, std::vector<double>>> fams = {
        {"exp", {}}, {"poly", {0, 0, 1}}, {"poly", {0, 0, 0, 1}}, {"neg_log", {}},
        {"sqrt", {}}};
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& fam = fams[trial % fams.size()];
        auto f = catalog_get(fam.first, fam.second);
        const double a = 0.3 + 1.5 * u(rng);
        const double b = a + 0.4 + 1.5 * u(rng);
        const double lam = a + (b - a) * u(rng);
        const int n = 1 + static_cast<int>(u(rng) * 3);
        const double q = 1.0 + 2.0 * u(rng);
        BoundInput in(f, Interval(a, b), lam, n, 1.0, q);
        const double d47 = std::abs(bound_t7(in).bound - bound_t4(in).bound) /
                           (1.0 + bound_t4(in).bound);
        const double d810 = std::abs(bound_t10(in).bound - bound_t8(in).bound) /
                            (1.0 + bound_t8(in).bound);
        worst = std::max({worst, d47, d810});
    }
    char detail[128];
    std::snprintf(detail, sizeof detail, "200 shared inputs, worst relative gap %.3e (tol 1e-12)",
                  worst);
    report(5, "specialization coherence", worst <= 1e-12, detail);
}

// ---- 6: quadrature certificates ---------------------------------------------

void criterion6() {
    auto sq = catalog_get("poly", {0, 0, 1});
    Partition K({0.0, 0.5, 1.0});
    const QuadratureResult mid = midpoint_error_bound(sq, K, 1.0, 2.0);
    const QuadratureResult trap = trapezoid_error_bound(sq, K, 1.0, 2.0);
    const bool mid_ok = std::abs(mid.oracle_error - 0.020833333333333333) <= 1e-9 &&
                        std::abs(mid.error_bound - 0.10206) <= 1e-4 &&
                        mid.oracle_error <= mid.error_bound;
    const bool trap_ok = std::abs(trap.oracle_error - 0.041666666666666667) <= 1e-9 &&
                         trap.oracle_error <= trap.error_bound + 1e-9 &&
                         std::abs(trap.error_bound - 0.041666666666666667) <= 1e-9;

    const std::vector<int> pieces = {2, 4, 8, 16, 32};
    const auto rows =
        convergence_study(catalog_get("exp"), Interval(0, 1), QuadRule::midpoint, 1.0, 2.0,
                          pieces);
    const double slope = convergence_slope(rows);
    const bool slope_ok = slope >= -2.2 && slope <= -1.8;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "midpoint err %.6f <= %.5f; trapezoid err %.6f ~ bound %.6f; slope %.3f",
                  mid.oracle_error, mid.error_bound, trap.oracle_error, trap.error_bound, slope);
    report(6, "quadrature certificates", mid_ok && trap_ok && slope_ok, detail);
}

// ---- 7: means ---------------------------------------------------------------

void criterion7() {
    std::mt19937_64 rng(20240007);
    std::uniform_real_distribution<double> u(1e-3, 100.0);
    int chain_viol = 0;
    for (int i = 0; i < 1000; ++i)
        if (!means_chain_check(PositivePair(u(rng), u(rng))).ordered) ++chain_viol;

    PositivePair p(2, 8);
    const bool pinned = mean_arithmetic(p) == 5.0 && mean_geometric(p) == 4.0 &&
                        mean_harmonic(p) == 3.2 &&
                        std::abs(mean_p_logarithmic(p, 1.0) - 5.0) <= 1e-13;

    bool monotone = true;
    std::uniform_real_distribution<double> v(0.05, 20.0);
    for (int i = 0; i < 200 && monotone; ++i) {
        PositivePair pr(v(rng), v(rng));
        double prev = -1.0;
        for (double r = -3.0; r <= 3.0 + 1e-9; r += 0.25) {
            const double lr = mean_p_logarithmic(pr, r);
            if (prev >= 0.0 && !(prev <= lr + 1e-12 * std::max(1.0, lr))) monotone = false;
            prev = lr;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "chain violations %d/1000; A,G,H,L_1 pinned %s; L_r monotone %s", chain_viol,
                  pinned ? "yes" : "NO", monotone ? "yes" : "NO");
    report(7, "means", chain_viol == 0 && pinned && monotone, detail);
}

// ---- 8: counterexample reproduction -----------------------------------------

void criterion8() {
    const AuditRecord printed = audit_means_prop1(PositivePair(0.1, 0.2), "as_printed");
    const AuditRecord corrected = audit_means_prop1(PositivePair(0.1, 0.2), "corrected");
    const bool printed_ok = printed.verdict == AuditVerdict::violated &&
                            std::abs(printed.measured - 5.731e-3) <= 1e-5 &&
                            std::abs(printed.stated - 5.0e-4) <= 1e-12;
    const bool corrected_ok =
        corrected.verdict == AuditVerdict::holds && corrected.stated / corrected.measured >= 4.0;

    bool stable = true;
    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
        bool found = false;
        for (const AuditRecord& r : audit_claim("m_prop1", GridSpec{"full", seed}))
            if (r.c.variant == "as_printed" && r.c.param("a") == 0.1 && r.c.param("b") == 0.2 &&
                r.verdict == AuditVerdict::violated)
                found = true;
        if (!found) stable = false;
    }
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "printed: %.4e > %.1e violated; corrected margin %.2fx; stable over seeds %s",
                  printed.measured, printed.stated, corrected.stated / corrected.measured,
                  stable ? "yes" : "NO");
    report(8, "counterexample reproduction", printed_ok && corrected_ok && stable, detail);
}

// ---- 9: Beta oracle equivalence ----------------------------------------------

void criterion9() {
    const double grid[] = {0.5, 1.0, 1.5, 2.0, 3.5};
    double worst = 0.0;
    for (double x : grid)
        for (double y : grid) {
            auto integrand = [x, y](double t) {
                return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0);
            };
            const double quad =
                reference_integral(integrand, Interval(0, 1), 1e-10, x < 1.0, y < 1.0);
            worst = std::max(worst,
                             std::abs(beta(x, y) - quad) / std::max(1.0, std::abs(quad)));
        }
    const bool identities = std::abs(beta(2.0, 3.0) - 1.0 / 12.0) <= 1e-13 && [] {
        for (int m = 1; m <= 20; ++m)
            if (std::abs(beta(1.0, m) - 1.0 / m) > 1e-13) return false;
        return true;
    }();
    char detail[128];
    std::snprintf(detail, sizeof detail, "25-point grid worst gap %.3e (tol 1e-9); identities %s",
                  worst, identities ? "hold" : "FAIL");
    report(9, "Beta oracle equivalence", worst <= 1e-9 && identities, detail);
}

// ---- 10: CLI determinism and exit codes ---------------------------------------

void criterion10() {
    const CliResult a1 = run_cli("audit --claim all --grid small --seed 0");
    const CliResult a2 = run_cli("audit --claim all --grid small --seed 0");
    const bool identical = a1.exit_code == 0 && a1.out == a2.out && !a1.out.empty();

    const CliResult holds = run_cli("bound --theorem cor1 --fn poly:0,0,1 --a 0 --b 1 --s 1 --q 2");
    const CliResult unmet =
        run_cli("bound --theorem t2 --fn poly:0,-1,0,1 --a 0 --b 1 --n 1 --certify");
    const CliResult printed_viol = run_cli("audit --claim m_prop1 --grid small --seed 0");
    bool printed_warned = false;
    if (printed_viol.exit_code == 0) {
        const json j = json::parse(printed_viol.out, nullptr, false);
        printed_warned = !j.is_discarded() && j["warnings"].size() >= 1 &&
                         j["results"]["summary"]["printed_violations"].get<int>() >= 1;
    }
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "reruns byte-identical %s; exits: holds=%d unmet=%d printed-violation=%d(+warn %s)",
                  identical ? "yes" : "NO", holds.exit_code, unmet.exit_code,
                  printed_viol.exit_code, printed_warned ? "yes" : "NO");
    report(10, "CLI determinism and exit codes",
           identical && holds.exit_code == 0 && unmet.exit_code == 2 &&
               printed_viol.exit_code == 0 && printed_warned,
           detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
