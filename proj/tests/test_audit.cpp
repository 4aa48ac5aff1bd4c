#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hhcert/audit.hpp"
#include "hhcert/report.hpp"

using namespace hhcert;

TEST_CASE("deterministic grids and summaries") {
    const GridSpec g{"small", 0};
    for (const std::string id : {"chain", "t2", "q_prop1", "m_prop1"}) {
        const auto once = audit_claim(id, g);
        const auto twice = audit_claim(id, g);
        REQUIRE(once.size() == twice.size());
        const json a = to_json(audit_summary(once));
        const json b = to_json(audit_summary(twice));
        CHECK(a.dump() == b.dump());
        json ra = json::array(), rb = json::array();
        for (const auto& r : once) ra.push_back(to_json(r));
        for (const auto& r : twice) rb.push_back(to_json(r));
        CHECK(ra.dump() == rb.dump());
    }
    // a different seed produces a different random portion
    const auto seed0 = audit_claim("t2", GridSpec{"small", 0});
    const auto seed1 = audit_claim("t2", GridSpec{"small", 1});
    CHECK(seed0.front().c.key() != seed1.front().c.key());
}

TEST_CASE("chain and jagers audits are clean") {
    for (const std::string id : {"chain", "jagers"}) {
        const auto recs = audit_claim(id, GridSpec{"full", 0});
        for (const auto& r : recs) CHECK(r.verdict == AuditVerdict::holds);
    }
}

TEST_CASE("means proposition 1 counterexample at (0.1, 0.2)") {
    AuditRecord printed = audit_means_prop1(PositivePair(0.1, 0.2), "as_printed");
    CHECK(printed.verdict == AuditVerdict::violated);
    CHECK(printed.stated == doctest::Approx(5.0e-4).epsilon(1e-12));
    CHECK(printed.measured == doctest::Approx(0.15 - 0.1 / std::log(2.0)).epsilon(1e-12));
    CHECK(printed.measured == doctest::Approx(5.7305e-3).epsilon(1e-3));

    AuditRecord corrected = audit_means_prop1(PositivePair(0.1, 0.2), "corrected");
    CHECK(corrected.verdict == AuditVerdict::holds);
    CHECK(corrected.stated / corrected.measured >= 4.0);

    AuditRecord tame = audit_means_prop1(PositivePair(1.0, 2.0), "as_printed");
    CHECK(tame.verdict == AuditVerdict::holds);
    CHECK(tame.measured == doctest::Approx(1.5 - 1.0 / std::log(2.0)).epsilon(1e-12));

    // the anchored pair appears in the grid for every seed
    for (std::uint64_t seed : {0ull, 1ull, 7ull}) {
        const auto recs = audit_claim("m_prop1", GridSpec{"small", seed});
        bool found = false;
        for (const auto& r : recs)
            if (r.c.variant == "as_printed" && r.c.param("a") == 0.1 && r.c.param("b") == 0.2) {
                found = true;
                CHECK(r.verdict == AuditVerdict::violated);
            }
        CHECK(found);
    }
}

TEST_CASE("violated records replay to the same verdict") {
    const auto recs = audit_claim("m_prop1", GridSpec{"full", 0});
    int replayed = 0;
    for (const auto& r : recs) {
        if (r.verdict != AuditVerdict::violated) continue;
        const AuditRecord again = evaluate_case(r.c);
        CHECK(again.verdict == AuditVerdict::violated);
        CHECK(again.measured == doctest::Approx(r.measured).epsilon(1e-15));
        ++replayed;
    }
    CHECK(replayed >= 1);
}

TEST_CASE("degenerate means-proposition cases hold") {
    AuditRecord p2 = audit_means_prop2(PositivePair(1.5, 1.5), 2.0);
    CHECK(p2.verdict == AuditVerdict::holds);
    CHECK(p2.measured == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p2.stated == doctest::Approx(1.0).epsilon(1e-12));

    AuditRecord p3 = audit_means_prop3(PositivePair(1.0, 1.0), 2.0, 2.0);
    CHECK(p3.verdict == AuditVerdict::holds);
    CHECK(p3.measured <= 1e-12);
    CHECK(p3.note.find("convention") != std::string::npos);

    AuditRecord p4 = audit_means_prop4(PositivePair(0.3, 0.3), 2, 1.0, 2.0, "tight");
    CHECK(p4.verdict == AuditVerdict::holds);
    CHECK(p4.measured <= 1e-12);

    CHECK_THROWS_AS(audit_means_prop4(PositivePair(0.5, 1.5), 2, 1.0, 2.0, "tight"),
                    std::invalid_argument);
    CHECK_THROWS_AS(audit_means_prop4(PositivePair(0.2, 0.4), 1, 1.0, 2.0, "tight"),
                    std::invalid_argument);
}

TEST_CASE("soundness regression: corrected variants never violate") {
    const GridSpec g{"full", 0};
    const std::vector<std::string> claims = {"t1", "t2", "t3", "t4", "t5",   "t6",  "t7",
                                             "t8", "t9", "t10", "cor1", "cor2", "q_prop1",
                                             "q_prop2", "m_prop1", "chain", "jagers"};
    int gating_cases = 0;
    for (const auto& id : claims) {
        for (const auto& r : audit_claim(id, g)) {
            if (!claim_gates(r.c.claim_id, r.c.variant)) continue;
            ++gating_cases;
            CHECK(r.verdict != AuditVerdict::violated);
        }
    }
    CHECK(gating_cases >= 2000);
}

TEST_CASE("printed variants do surface violations") {
    const auto t6recs = audit_claim("t6", GridSpec{"full", 0});
    int printed_viol = 0;
    for (const auto& r : t6recs)
        if (r.c.variant == "as_printed" && r.verdict == AuditVerdict::violated) ++printed_viol;
    CHECK(printed_viol > 0); // the statement's q/(q-1) exponent is not proof-consistent
}

TEST_CASE("summary shape") {
    auto recs = audit_claim("m_prop1", GridSpec{"small", 0});
    const AuditSummary s = audit_summary(recs);
    REQUIRE(s.claims.size() == 1);
    const ClaimSummary& cs = s.claims.front();
    CHECK(cs.claim_id == "m_prop1");
    CHECK(cs.cases == static_cast<int>(recs.size()));
    CHECK(cs.holds + cs.violations + cs.hypothesis_unmet == cs.cases);
    CHECK(cs.violations >= 1);
    CHECK(static_cast<int>(cs.violated_keys.size()) == cs.violations);
    CHECK(std::is_sorted(cs.violated_keys.begin(), cs.violated_keys.end()));
    CHECK(s.total_gating_violations == 0);
    CHECK(s.total_printed_violations >= 1);
    for (const auto& r : recs)
        if (r.verdict == AuditVerdict::holds) CHECK(r.tightness <= 1.0 + 1e-9);
}

TEST_CASE("unknown claims are rejected") {
    CHECK_THROWS_AS(build_cases("t99", GridSpec{"small", 0}), std::invalid_argument);
    AuditCase c;
    c.claim_id = "nope";
    CHECK_THROWS_AS(evaluate_case(c), std::invalid_argument);
}
