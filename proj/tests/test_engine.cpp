#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "turnover/engine.hpp"
#include "turnover/report_json.hpp"
#include "turnover/rooms.hpp"

using namespace turnover;
using oracle::pi;

namespace {

std::vector<TurnoverSignature> sigs(const std::vector<Candidate>& list) {
    std::vector<TurnoverSignature> out;
    for (const auto& c : list) out.push_back(c.sig);
    return out;
}

// Brute force in floating point with a generous margin check: every
// hyperbolic triple from `orders` whose area is below the budget.
std::vector<TurnoverSignature> brute_force(const BoundLedger& ledger, const std::vector<int>& orders) {
    std::vector<std::pair<double, TurnoverSignature>> found;
    for (int a : orders)
        for (int b : orders)
            for (int c : orders) {
                if (!(a <= b && b <= c)) continue;
                const double area = 2 * pi * (1.0 - 1.0 / a - 1.0 / b - 1.0 / c);
                if (area <= 1e-12) continue;
                if (area < ledger.two_sided_budget - 1e-12) found.push_back({area, TurnoverSignature(a, b, c)});
                else
                    CHECK(area > ledger.two_sided_budget - 1e-12);
            }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return x.first < y.first - 1e-14 || (std::fabs(x.first - y.first) <= 1e-14 && x.second < y.second);
    });
    std::vector<TurnoverSignature> out;
    for (const auto& f : found) out.push_back(f.second);
    return out;
}

const CaseResult& find_case(const std::vector<CaseResult>& cases, TurnoverSignature b, int k, bool closed) {
    auto it = std::find_if(cases.begin(), cases.end(), [&](const CaseResult& c) {
        return c.path.boundary_sig == b && c.path.k == k && c.path.closed == closed;
    });
    REQUIRE(it != cases.end());
    return *it;
}

}  // namespace

TEST_CASE("ledger values") {
    const BoundLedger l1 = make_ledger(TurnoverSignature(2, 4, 5), 1);
    CHECK(l1.upper_bound_with_boundary == doctest::Approx(0.376890).epsilon(1e-6));
    CHECK(l1.upper_bound_no_boundary == doctest::Approx(pi / 10).epsilon(1e-15));
    CHECK(l1.two_sided_budget == doctest::Approx(pi / 5).epsilon(1e-15));
    CHECK(l1.max_boundary_pieces == 4);
    const BoundLedger l2 = make_ledger(TurnoverSignature(2, 4, 5), 2);
    CHECK(std::fabs(l2.upper_bound_no_boundary - 0.157079) < 1e-6);
    CHECK(l2.upper_bound_no_boundary == doctest::Approx(pi / 20).epsilon(1e-15));
    CHECK_THROWS_AS(make_ledger(TurnoverSignature(2, 3, 6), 1), DomainError);
    CHECK_THROWS_AS(make_ledger(TurnoverSignature(2, 4, 5), 3), DomainError);
}

TEST_CASE("ledger invariants over many signatures") {
    for (int p = 2; p <= 12; ++p)
        for (int q = p; q <= 12; ++q)
            for (int r = q; r <= 40; ++r) {
                const TurnoverSignature sig(p, q, r);
                if (classify(sig) != GeometryClass::Hyperbolic) continue;
                for (int ext : {1, 2}) {
                    const BoundLedger l = make_ledger(sig, ext);
                    CHECK(l.two_sided_budget > 0.0);
                    CHECK(l.upper_bound_with_boundary / l.upper_bound_no_boundary ==
                          doctest::Approx(constant_H()).epsilon(1e-15));
                    const double pieces = l.two_sided_budget / (pi / 21);
                    // Exact floor; the float quotient may sit a hair off integers.
                    CHECK(std::fabs(l.max_boundary_pieces - std::floor(pieces + 1e-9)) < 1e-12);
                }
            }
}

TEST_CASE("boundary candidates") {
    const BoundLedger l245 = make_ledger(TurnoverSignature(2, 4, 5), 1);
    CHECK(sigs(boundary_candidates(l245, ConeOrderSet::from({2, 3, 4, 5}))) ==
          std::vector<TurnoverSignature>{TurnoverSignature(2, 4, 5), TurnoverSignature(3, 3, 4)});
    // (2,5,5) has area exactly pi/5, the budget, and is left out.
    CHECK(turnover_area(TurnoverSignature(2, 5, 5)) == doctest::Approx(l245.two_sided_budget).epsilon(1e-15));
    CHECK(boundary_candidates(l245, ConeOrderSet{}).empty());

    const TurnoverSignature s237(2, 3, 7);
    const BoundLedger l237 = make_ledger(s237, 1);
    CHECK(sigs(boundary_candidates(l237, refined_boundary_orders(s237))) ==
          std::vector<TurnoverSignature>{s237});
    CHECK(sigs(boundary_candidates(l237, cone_order_universe(s237))) ==
          std::vector<TurnoverSignature>{s237, TurnoverSignature(2, 3, 8)});
}

TEST_CASE("candidates agree with brute force and are monotone in the order set") {
    for (int p = 2; p <= 5; ++p)
        for (int q = p; q <= 7; ++q)
            for (int r = q; r <= 14; ++r) {
                const TurnoverSignature sig(p, q, r);
                if (classify(sig) != GeometryClass::Hyperbolic) continue;
                for (int ext : {1, 2}) {
                    const BoundLedger l = make_ledger(sig, ext);
                    const ConeOrderSet refined = refined_boundary_orders(sig);
                    std::vector<int> all = refined.orders;
                    for (int n = 2; n <= 14; ++n) all.push_back(n);
                    all = ConeOrderSet::from(all).orders;
                    const auto small = boundary_candidates(l, refined);
                    const auto large = boundary_candidates(l, ConeOrderSet::from(all));
                    CHECK(sigs(large) == brute_force(l, all));
                    for (const auto& c : small) {
                        CHECK(c.area < l.two_sided_budget);
                        CHECK(std::find_if(large.begin(), large.end(),
                                           [&](const Candidate& x) { return x.sig == c.sig; }) != large.end());
                    }
                }
            }
}

TEST_CASE("case scan for the (2,4,5) ledger") {
    const BoundLedger ledger = make_ledger(TurnoverSignature(2, 4, 5), 1);
    const auto cases334 = miyamoto_case_scan(ledger, TurnoverSignature(3, 3, 4));
    CHECK(cases334.size() == 6);
    const CaseResult& c = find_case(cases334, TurnoverSignature(3, 3, 4), 4, true);
    CHECK(c.path.theta == pi / 4);
    CHECK(std::fabs(c.lower_bound - 0.428850) < 1e-5);
    CHECK(c.verdict == Verdict::Excluded);

    const auto cases245 = miyamoto_case_scan(ledger, TurnoverSignature(2, 4, 5));
    CHECK(cases245.size() == 8);
    const CaseResult& k2 = find_case(cases245, TurnoverSignature(2, 4, 5), 2, true);
    CHECK(k2.path.theta == doctest::Approx(pi / 3.3).epsilon(1e-15));
    CHECK(k2.verdict == Verdict::Excluded);
    // Without refinements only the closed k = 4 and k = 5 cases survive.
    for (const CaseResult& r : cases245) {
        const bool expected_survivor = r.path.closed && (r.path.k == 4 || r.path.k == 5);
        CHECK((r.verdict == Verdict::Survives) == expected_survivor);
    }

    const auto skipped = miyamoto_case_scan(ledger, TurnoverSignature(2, 4, 5), CaseScanOptions{true, {}});
    CHECK(skipped.size() == 5);
}

TEST_CASE("an unbounded ledger never excludes") {
    BoundLedger ledger = make_ledger(TurnoverSignature(2, 4, 5), 1);
    ledger.upper_bound_with_boundary = std::numeric_limits<double>::infinity();
    for (const CaseResult& c : miyamoto_case_scan(ledger, TurnoverSignature(3, 3, 4)))
        CHECK(c.verdict == Verdict::Survives);
}

TEST_CASE("refinements") {
    const TurnoverSignature s245(2, 4, 5);
    const BoundLedger ledger = make_ledger(s245, 1);
    const RefinementResult r4 = order4_refinement(ledger, s245, std::acosh(std::sqrt(2.0) * std::cos(pi / 5)));
    CHECK(std::fabs(r4.theta - 0.904556) < 1e-5);
    CHECK(std::fabs(r4.lower_bound - 0.383986) < 1e-5);
    CHECK(r4.verdict == Verdict::Excluded);

    const double sep = lambert_leg_bound(std::acosh(1.0 / std::tan(pi / 5)));
    const RefinementResult r5 = order5_refinement(ledger, s245, sep);
    CHECK(std::fabs(sep - 0.921365) < 1e-5);
    CHECK(std::fabs(r5.theta - 0.938037) < 1e-5);
    CHECK(std::fabs(r5.lower_bound - 0.460222) < 1e-5);
    CHECK(r5.verdict == Verdict::Excluded);

    // Large disks force short paths, small angles and a small density.
    const RefinementResult wide = order4_refinement(ledger, s245, 10.0);
    CHECK(wide.theta < 1e-3);
    CHECK(wide.lower_bound == doctest::Approx(truncated_simplex_volume(0.0) / (4 * pi) * pi / 10).epsilon(1e-3));
    CHECK(wide.verdict == Verdict::Survives);
    CHECK_THROWS_AS(order4_refinement(ledger, s245, 1e-300), DomainError);

    const RefinementResult half = order5_refinement(ledger, s245, 0.5);
    CHECK(half.verdict == (half.lower_bound > ledger.upper_bound_with_boundary ? Verdict::Excluded : Verdict::Survives));
    // Separation near zero: the octahedral limit.
    const RefinementResult near = order5_refinement(ledger, s245, 1e-6);
    CHECK(near.lower_bound == doctest::Approx(truncated_simplex_volume(0.0) / (4 * pi) * pi / 10).epsilon(1e-6));
    // Large separation: theta approaches pi/3 from below.
    const RefinementResult far = order5_refinement(ledger, s245, 12.0);
    CHECK(far.theta > pi / 3 - 1e-9);
    CHECK_THROWS_AS(order5_refinement(ledger, s245, 0.0), DomainError);

    const auto worked = worked_refinements(s245);
    REQUIRE(worked.size() == 2);
    CHECK(worked[0].value == doctest::Approx(std::acosh(std::sqrt(2.0) * std::cos(pi / 5))).epsilon(1e-14));
    CHECK(worked[1].value == doctest::Approx(sep).epsilon(1e-14));
    CHECK(worked_refinements(TurnoverSignature(2, 4, 6)).empty());
}

TEST_CASE("analyze (2,4,5)") {
    const AnalysisReport report = analyze(TurnoverSignature(2, 4, 5), 1);
    CHECK(report.conclusion == Conclusion::NoEmbeddedTurnovers);
    CHECK(sigs(report.candidates) ==
          std::vector<TurnoverSignature>{TurnoverSignature(2, 4, 5), TurnoverSignature(3, 3, 4)});
    CHECK(report.admissible_orders.orders == std::vector<int>{2, 3, 4, 5});
    for (const CaseResult& c : report.cases) {
        CHECK(c.verdict == Verdict::Excluded);
        CHECK(c.lower_bound > report.ledger.upper_bound_with_boundary);
    }
    CHECK(find_case(report.cases, TurnoverSignature(3, 3, 4), 4, true).refined_by == std::nullopt);
    CHECK(find_case(report.cases, TurnoverSignature(2, 4, 5), 4, true).refined_by == "order4_disk");
    CHECK(find_case(report.cases, TurnoverSignature(2, 4, 5), 5, true).refined_by == "order5_separation");
    CHECK(report.refinements.size() == 2);

    AnalysisOptions bare;
    bare.apply_worked_refinements = false;
    CHECK(analyze(TurnoverSignature(2, 4, 5), 1, bare).conclusion == Conclusion::CandidatesRemain);

    const Json j = to_json(report);
    for (const char* key : {"signature", "extension_index", "bounds", "orders", "candidates", "cases",
                            "refinements", "conclusion"})
        CHECK(j.contains(key));
    CHECK(j["conclusion"] == "NoEmbeddedTurnovers");
    CHECK(j["bounds"].contains("max_pieces"));
    CHECK(j["cases"][0].contains("verdict"));
}

TEST_CASE("analyze leaves candidates for (2,4,6) and (2,4,7) with the extension") {
    const AnalysisReport r246 = analyze(TurnoverSignature(2, 4, 6), 2);
    CHECK(r246.conclusion == Conclusion::CandidatesRemain);
    const AnalysisReport r247 = analyze(TurnoverSignature(2, 4, 7), 2);
    CHECK(r247.conclusion == Conclusion::CandidatesRemain);
    const auto list = sigs(r247.candidates);
    CHECK(std::find(list.begin(), list.end(), TurnoverSignature(2, 3, 7)) != list.end());
    for (const CaseResult& c : r247.cases)
        if (c.verdict == Verdict::Excluded) CHECK(c.lower_bound > r247.ledger.upper_bound_with_boundary);
}

TEST_CASE("volume exclusions") {
    CHECK(exclusion_by_volume(1.004261, TurnoverSignature(3, 3, 5), false) == Verdict::Excluded);
    CHECK(exclusion_by_volume(1.004261, TurnoverSignature(2, 5, 5), false) == Verdict::Excluded);
    CHECK(exclusion_by_volume(1.004261, TurnoverSignature(3, 5, 5), false) == Verdict::Survives);
    for (auto s : {TurnoverSignature(2, 4, 5), TurnoverSignature(2, 5, 5), TurnoverSignature(3, 3, 4)})
        CHECK(exclusion_by_volume(0.717306, s, false) == Verdict::Excluded);
    CHECK(exclusion_by_volume(0.717306, TurnoverSignature(3, 3, 5), false) == Verdict::Survives);
    CHECK(exclusion_by_volume(0.717306, TurnoverSignature(3, 5, 5), false) == Verdict::Survives);
    // With embedded turnovers the bound is H times the area.
    CHECK(exclusion_by_volume(1.004261, TurnoverSignature(3, 3, 5), true) == Verdict::Survives);
    CHECK_THROWS_AS(exclusion_by_volume(0.0, TurnoverSignature(3, 3, 5), false), DomainError);
}

TEST_CASE("registry") {
    const auto& reg = registry();
    auto find = [&](const std::string& name) -> const RegistryEntry& {
        auto it = std::find_if(reg.begin(), reg.end(), [&](const RegistryEntry& e) { return e.name == name; });
        REQUIRE(it != reg.end());
        return *it;
    };
    CHECK(find("Q3").volume == 0.071770);
    CHECK(find("Q3").known_immersed.front() == TurnoverSignature(2, 4, 5));
    CHECK(find("Q10").volume == 0.211446);
    CHECK(find("O8").volume == 0.717306);
    CHECK(find("O9").volume == 1.004261);
    CHECK(find("Q2,4,7").volume == 0.325947);
    CHECK(find("Q2,4,inf").volume == 0.501921);
    CHECK(find("O8").edge_orders == std::array<int, 6>{2, 3, 4, 2, 3, 5});
    CHECK(registry_volume_bound(find("Q3")) == doctest::Approx(pi / 20).epsilon(1e-15));
    CHECK(registry_volume_bound(find("Q2,4,7")) == doctest::Approx(0.403810).epsilon(1e-6));
    CHECK(registry_volume_bound(find("Q2,4,inf")) == doctest::Approx(0.942225).epsilon(1e-6));
    for (const RegistryEntry& e : reg) {
        const std::size_t count = std::max<std::size_t>(1, e.known_immersed.size());
        for (std::size_t i = 0; i < count; ++i) CHECK(e.volume < registry_volume_bound(e, i));
        if (!e.has_embedded_turnovers)
            for (const auto& s : e.known_immersed)
                CHECK(exclusion_by_volume(e.volume * e.extension_index, s, false) == Verdict::Survives);
    }
    CHECK(registry_json().size() == reg.size());
}
