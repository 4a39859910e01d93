#pragma once

// Exclusion pipeline for embedded boundary turnovers of a turnover core:
// area and volume budgets, boundary candidates, return-path case scans,
// configuration-specific refinements, and cited orbifold volumes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turnover/collars.hpp"
#include "turnover/simplices.hpp"
#include "turnover/trig.hpp"

namespace turnover {

enum class Verdict { Excluded, Survives };
enum class Conclusion { NoEmbeddedTurnovers, CandidatesRemain };

std::string to_string(Verdict v);
std::string to_string(Conclusion c);

/// Area and volume budgets for an immersed turnover of signature `sig`
/// sitting in a group extension of the given index (1 or 2).
struct BoundLedger {
    TurnoverSignature sig;
    int extension_index;
    double area;
    double two_sided_budget;           ///< 2 area / ext: total boundary area allowed
    double upper_bound_with_boundary;  ///< H area / ext
    double upper_bound_no_boundary;    ///< area / ext
    int max_boundary_pieces;           ///< floor(budget / (pi/21))
};

/// Throws DomainError for non-hyperbolic sig or extension index outside {1, 2}.
BoundLedger make_ledger(const TurnoverSignature& sig, int extension_index);

struct Candidate {
    TurnoverSignature sig;
    double area;
};

/// Hyperbolic signatures with all orders in `orders` whose area is strictly
/// below the two-sided budget (compared exactly), ascending by area.
std::vector<Candidate> boundary_candidates(const BoundLedger& ledger, const ConeOrderSet& orders);

struct CaseResult {
    ReturnPathCase path;
    double miyamoto_bound;
    double lower_bound;  ///< max of miyamoto_bound and any refinement bound
    Verdict verdict;
    std::optional<std::string> refined_by;
};

struct CaseScanOptions {
    /// Drop the open case for k > 1 when k occurs once among the boundary's
    /// cone orders (such a return path must be closed).
    bool skip_forced_closed = false;
    Tolerance tol{};
};

/// All (k, closed) cases with k in {1} and the cone orders of `boundary`.
std::vector<CaseResult> miyamoto_case_scan(const BoundLedger& ledger,
                                           const TurnoverSignature& boundary,
                                           const CaseScanOptions& options = {});

struct RefinementResult {
    std::string name;
    TurnoverSignature boundary;
    int k;                ///< cone order whose cases the refinement speaks to
    double input;         ///< disk radius or separation
    double length;        ///< forced return-path length
    double theta;
    double lower_bound;
    Verdict verdict;
};

/// Return paths through the order-4 point leave an embedded disk of the given
/// radius about it: l = length_from_disk_radius(disk_radius).
RefinementResult order4_refinement(const BoundLedger& ledger, const TurnoverSignature& boundary,
                                   double disk_radius, const Tolerance& tol = {});

/// A closed return path through the order-5 point is at least twice the
/// separation from the boundary: l = 2 separation.
RefinementResult order5_refinement(const BoundLedger& ledger, const TurnoverSignature& boundary,
                                   double separation, const Tolerance& tol = {});

enum class RefinementKind { DiskRadius, Separation };

struct RefinementInput {
    RefinementKind kind;
    TurnoverSignature boundary;
    double value;
};

/// Geometric inputs worked out for specific signatures.  Only the (2,4,5)
/// turnover has them: the disk radius about its order-4 point is the side
/// joining the order-4 and order-2 vertices, and the order-5 separation is
/// lambert_leg_bound of the side opposite the right angle.
std::vector<RefinementInput> worked_refinements(const TurnoverSignature& sig);

struct AnalysisOptions {
    bool use_refined_orders = true;  ///< otherwise use cone_order_universe
    bool apply_worked_refinements = true;
    bool skip_forced_closed = false;
    std::vector<RefinementInput> extra_refinements;
    Tolerance tol{};
};

struct AnalysisReport {
    BoundLedger ledger;
    OrderFilterReport order_filter;
    ConeOrderSet admissible_orders;
    std::vector<Candidate> candidates;
    std::vector<CaseResult> cases;
    std::vector<RefinementResult> refinements;
    Conclusion conclusion;
};

/// Full pipeline.  The conclusion is NoEmbeddedTurnovers iff every case of
/// every candidate is excluded.
AnalysisReport analyze(const TurnoverSignature& sig, int extension_index,
                       const AnalysisOptions& options = {});

/// For an orbifold without embedded turnovers the volume must stay below the
/// area of any immersed turnover; otherwise below H times that area.
Verdict exclusion_by_volume(double orbifold_volume, const TurnoverSignature& sig,
                            bool has_embedded_turnovers);

enum class OrbifoldKind { Tetrahedral, Prism };

struct RegistryEntry {
    std::string name;
    OrbifoldKind kind;
    std::optional<std::array<int, 6>> edge_orders;  ///< [l1, l2, l3; m1, m2, m3]
    double volume;
    bool volume_cited;
    std::vector<TurnoverSignature> known_immersed;
    std::vector<TurnoverSignature> known_embedded;
    int extension_index;          ///< index of the extension containing the immersed turnover
    bool has_embedded_turnovers;
    std::optional<double> limiting_area;  ///< area of a degenerate (cusped) immersed turnover
    std::string notes;
};

const std::vector<RegistryEntry>& registry();

/// Volume bound the main inequality gives for a registry entry's immersed
/// turnover (or its limiting area).
double registry_volume_bound(const RegistryEntry& entry, std::size_t immersed_index = 0);

}  // namespace turnover
