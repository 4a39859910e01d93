#include "turnover/engine.hpp"

#include <algorithm>
#include <cmath>

#include "turnover/rooms.hpp"

namespace turnover {

std::string to_string(Verdict v) { return v == Verdict::Excluded ? "Excluded" : "Survives"; }

std::string to_string(Conclusion c) {
    return c == Conclusion::NoEmbeddedTurnovers ? "NoEmbeddedTurnovers" : "CandidatesRemain";
}

namespace {

// 1 - 1/p - 1/q - 1/r as an exact fraction a/b with a, b > 0.
struct Deficit {
    WideInt num;
    WideInt den;
};

Deficit deficit(const TurnoverSignature& sig) {
    const Rational chi = sig.euler_characteristic();
    return {-static_cast<WideInt>(chi.num), chi.den};
}

Verdict compare(double bound, double limit) {
    return bound > limit ? Verdict::Excluded : Verdict::Survives;
}

}  // namespace

BoundLedger make_ledger(const TurnoverSignature& sig, int extension_index) {
    if (extension_index != 1 && extension_index != 2)
        throw DomainError("extension index must be 1 or 2");
    const double area = turnover_area(sig);
    const Deficit d = deficit(sig);
    const double per_ext = area / extension_index;
    // budget / (pi/21) = 84 (1 - sum 1/n) / ext
    const auto pieces = static_cast<int>((84 * d.num) / (d.den * extension_index));
    return BoundLedger{sig,
                       extension_index,
                       area,
                       2.0 * per_ext,
                       constant_H() * per_ext,
                       per_ext,
                       pieces};
}

std::vector<Candidate> boundary_candidates(const BoundLedger& ledger, const ConeOrderSet& orders) {
    std::vector<int> usable;
    for (int n : orders.orders)
        if (n >= 2 && n <= TurnoverSignature::kMaxOrder) usable.push_back(n);

    // area(S) < 2 area(sig) / ext  <=>  deficit(S) * ext < 2 deficit(sig)
    const Deficit budget = deficit(ledger.sig);
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < usable.size(); ++i) {
        for (std::size_t j = i; j < usable.size(); ++j) {
            for (std::size_t k = j; k < usable.size(); ++k) {
                const TurnoverSignature s(usable[i], usable[j], usable[k]);
                if (classify(s) != GeometryClass::Hyperbolic) continue;
                const Deficit d = deficit(s);
                if (d.num * ledger.extension_index * budget.den < 2 * budget.num * d.den)
                    out.push_back({s, turnover_area(s)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        const Deficit da = deficit(a.sig);
        const Deficit db = deficit(b.sig);
        const WideInt lhs = da.num * db.den;
        const WideInt rhs = db.num * da.den;
        if (lhs != rhs) return lhs < rhs;
        return a.sig < b.sig;
    });
    return out;
}

std::vector<CaseResult> miyamoto_case_scan(const BoundLedger& ledger,
                                           const TurnoverSignature& boundary,
                                           const CaseScanOptions& options) {
    const double area = turnover_area(boundary);
    std::vector<int> ks{1};
    for (int n : boundary.orders())
        if (std::find(ks.begin(), ks.end(), n) == ks.end()) ks.push_back(n);

    std::vector<CaseResult> out;
    for (int k : ks) {
        for (bool closed : {true, false}) {
            if (!closed && options.skip_forced_closed && k > 1 && boundary.multiplicity(k) == 1)
                continue;
            ReturnPathCase path = make_return_path_case(boundary, k, closed);
            const double bound = miyamoto_lower_bound(area, path.min_length, options.tol);
            out.push_back({std::move(path), bound, bound,
                           compare(bound, ledger.upper_bound_with_boundary), std::nullopt});
        }
    }
    return out;
}

namespace {

RefinementResult finish_refinement(std::string name, const BoundLedger& ledger,
                                   const TurnoverSignature& boundary, int k, double input,
                                   double length, const Tolerance& tol) {
    const double theta = angle_from_edge(length);
    const double bound = miyamoto_lower_bound(turnover_area(boundary), length, tol);
    return RefinementResult{std::move(name), boundary, k, input, length, theta, bound,
                            compare(bound, ledger.upper_bound_with_boundary)};
}

}  // namespace

RefinementResult order4_refinement(const BoundLedger& ledger, const TurnoverSignature& boundary,
                                   double disk_radius, const Tolerance& tol) {
    return finish_refinement("order4_disk", ledger, boundary, 4, disk_radius,
                             length_from_disk_radius(disk_radius), tol);
}

RefinementResult order5_refinement(const BoundLedger& ledger, const TurnoverSignature& boundary,
                                   double separation, const Tolerance& tol) {
    if (!(separation > 0.0)) throw DomainError("order5_refinement: separation must be positive");
    return finish_refinement("order5_separation", ledger, boundary, 5, separation,
                             2.0 * separation, tol);
}

std::vector<RefinementInput> worked_refinements(const TurnoverSignature& sig) {
    const TurnoverSignature worked(2, 4, 5);
    if (sig != worked) return {};
    const TriangleGeometry geometry = triangle_geometry(worked);
    // sides[2] joins the order-2 and order-4 vertices; sides[0] is opposite
    // the right angle.
    return {
        {RefinementKind::DiskRadius, worked, geometry.sides[2]},
        {RefinementKind::Separation, worked, lambert_leg_bound(geometry.sides[0])},
    };
}

AnalysisReport analyze(const TurnoverSignature& sig, int extension_index,
                       const AnalysisOptions& options) {
    const BoundLedger ledger = make_ledger(sig, extension_index);
    OrderFilterReport filter = order_filter_report(sig);
    ConeOrderSet orders = options.use_refined_orders ? filter.refined : filter.universe;
    std::vector<Candidate> candidates = boundary_candidates(ledger, orders);

    std::vector<RefinementInput> inputs = options.extra_refinements;
    if (options.apply_worked_refinements) {
        const auto worked = worked_refinements(sig);
        inputs.insert(inputs.end(), worked.begin(), worked.end());
    }
    std::vector<RefinementResult> refinements;
    for (const RefinementInput& input : inputs) {
        const bool relevant = std::any_of(candidates.begin(), candidates.end(),
                                          [&](const Candidate& c) { return c.sig == input.boundary; });
        if (!relevant) continue;
        refinements.push_back(input.kind == RefinementKind::DiskRadius
                                  ? order4_refinement(ledger, input.boundary, input.value, options.tol)
                                  : order5_refinement(ledger, input.boundary, input.value, options.tol));
    }

    std::vector<CaseResult> cases;
    const CaseScanOptions scan{options.skip_forced_closed, options.tol};
    for (const Candidate& candidate : candidates) {
        for (CaseResult& c : miyamoto_case_scan(ledger, candidate.sig, scan)) {
            for (const RefinementResult& r : refinements) {
                if (r.boundary != c.path.boundary_sig || r.k != c.path.k) continue;
                if (r.lower_bound > c.lower_bound) {
                    c.lower_bound = r.lower_bound;
                    c.refined_by = r.name;
                }
            }
            c.verdict = compare(c.lower_bound, ledger.upper_bound_with_boundary);
            cases.push_back(std::move(c));
        }
    }

    const bool all_excluded = std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) {
        return c.verdict == Verdict::Excluded;
    });
    return AnalysisReport{ledger,
                          std::move(filter),
                          std::move(orders),
                          std::move(candidates),
                          std::move(cases),
                          std::move(refinements),
                          all_excluded ? Conclusion::NoEmbeddedTurnovers : Conclusion::CandidatesRemain};
}

Verdict exclusion_by_volume(double orbifold_volume, const TurnoverSignature& sig,
                            bool has_embedded_turnovers) {
    if (!(orbifold_volume > 0.0) || !std::isfinite(orbifold_volume))
        throw DomainError("exclusion_by_volume: volume must be positive");
    const double area = turnover_area(sig);
    const double bound = has_embedded_turnovers ? constant_H() * area : area;
    return bound < orbifold_volume ? Verdict::Excluded : Verdict::Survives;
}

const std::vector<RegistryEntry>& registry() {
    using S = TurnoverSignature;
    static const std::vector<RegistryEntry> entries = {
        {"Q3", OrbifoldKind::Tetrahedral, std::nullopt, 0.071770, true, {S(2, 4, 5)}, {}, 2, false,
         std::nullopt, "tetrahedral reflection orbifold; the (2,4,5) face group sits in a Z/2 extension"},
        {"Q10", OrbifoldKind::Tetrahedral, std::nullopt, 0.211446, true, {S(2, 4, 6)}, {}, 2, false,
         std::nullopt, "tetrahedral reflection orbifold with a (2,4,6) face"},
        {"O8", OrbifoldKind::Tetrahedral, std::array<int, 6>{2, 3, 4, 2, 3, 5}, 0.717306, true,
         {S(3, 4, 5), S(4, 5, 5)}, {}, 1, false, std::nullopt, "non-arithmetic tetrahedral group"},
        {"O9", OrbifoldKind::Tetrahedral, std::array<int, 6>{2, 3, 5, 2, 3, 5}, 1.004261, true,
         {S(3, 5, 5), S(5, 5, 5)}, {}, 1, false, std::nullopt, ""},
        {"Q2,4,7", OrbifoldKind::Prism, std::nullopt, 0.325947, true, {S(2, 4, 7)}, {S(2, 3, 7)}, 2,
         true, std::nullopt, "prism reflection orbifold: immersed roof turnover, embedded base turnover"},
        {"Q2,4,inf", OrbifoldKind::Prism, std::nullopt, 0.501921, true, {}, {}, 2, true,
         2.0 * kPi * (1.0 - 0.5 - 0.25),
         "limit of the prism family; the roof turnover (2,4,inf) has a cusp and area pi/2"},
    };
    return entries;
}

double registry_volume_bound(const RegistryEntry& entry, std::size_t immersed_index) {
    double area = 0.0;
    if (immersed_index < entry.known_immersed.size())
        area = turnover_area(entry.known_immersed[immersed_index]);
    else if (entry.limiting_area)
        area = *entry.limiting_area;
    else
        throw DomainError("registry entry " + entry.name + " has no immersed turnover at that index");
    const double factor = entry.has_embedded_turnovers ? constant_H() : 1.0;
    return factor * area / entry.extension_index;
}

}  // namespace turnover
