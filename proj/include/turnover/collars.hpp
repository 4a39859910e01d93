#pragma once

// Axis-distance bounds for elliptic pairs, the injectivity-radius bound for
// turnovers, the turnover supergroup table and the cone-order candidate sets.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turnover/trig.hpp"

namespace turnover {

/// Unordered pair of elliptic orders, stored so that n >= max(3, m).
class EllipticPair {
public:
    /// Accepts the orders in either order.  Throws DomainError if an order is
    /// below 2 or the larger one is below 3.
    EllipticPair(int a, int b);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int m() const { return m_; }

private:
    int n_;
    int m_;
};

/// Piecewise constant c(n, m) of the Gehring-Martin axial distance bound.
double c_bound(const EllipticPair& pair);

/// asinh(c(n,m) / (sin(pi/n) sin(pi/m))): minimal distance between the axes
/// of order-n and order-m elliptics generating a discrete group, unless the
/// axes meet.
double delta(const EllipticPair& pair);

/// 2 acosh(1 / (2 sin(pi/n))) for n >= 7.
double delta_nn(int n);

/// ln((2 + sqrt 7) / sqrt 3): largest embedded disk radius in a thrice
/// punctured sphere, hence an upper bound for turnover injectivity radius.
double max_injectivity_radius();

/// Distance from (a, b) in the upper half-plane to its image under z -> z + 4,
/// 2 ln((2 + sqrt(b^2 + 4)) / b).  At b = sqrt 3 this is twice
/// max_injectivity_radius().  Throws DomainError unless b > 0.
double translate_distance(double height);

/// True iff delta_nn(n)/2 < max_injectivity_radius().  Requires n >= 7.
bool oblique_order_admissible(int n);

/// One cone order in a table pattern: constant + t_coeff * t + s_coeff * s.
struct OrderPattern {
    int constant = 0;
    int t_coeff = 0;
    int s_coeff = 0;

    [[nodiscard]] int evaluate(int t, int s) const { return constant + t_coeff * t + s_coeff * s; }
    [[nodiscard]] std::string to_string() const;
};

/// One row of the turnover supergroup table: T(super) >= T(sub).
struct SupergroupEntry {
    std::array<OrderPattern, 3> super;
    std::array<OrderPattern, 3> sub;
    int index;
    bool normal;

    [[nodiscard]] bool uses_t() const;
    [[nodiscard]] bool uses_s() const;
    [[nodiscard]] std::string super_string() const;
    [[nodiscard]] std::string sub_string() const;
};

/// The fourteen rows, in table order.
const std::vector<SupergroupEntry>& supergroup_table();

struct SupergroupMatch {
    TurnoverSignature super;
    int index;
    bool normal;
    std::size_t row;  ///< position in supergroup_table()

    friend bool operator==(const SupergroupMatch&, const SupergroupMatch&) = default;
};

/// Every instantiation of a table row whose subgroup pattern equals sig and
/// whose supergroup is hyperbolic.  An empty result means sig is maximal.
std::vector<SupergroupMatch> supergroups(const TurnoverSignature& sig);

/// Ascending, duplicate-free set of cone orders.
struct ConeOrderSet {
    std::vector<int> orders;

    static ConeOrderSet from(std::vector<int> values);
    [[nodiscard]] bool contains(int n) const;
    [[nodiscard]] bool empty() const { return orders.empty(); }
    [[nodiscard]] std::size_t size() const { return orders.size(); }

    friend bool operator==(const ConeOrderSet&, const ConeOrderSet&) = default;
};

/// {2,...,9} united with {p, q, r, 2p, 2q, 2r}.
ConeOrderSet cone_order_universe(const TurnoverSignature& sig);

/// How each order of the universe fared in the refinement filter.
struct OrderFilterEntry {
    int order;
    bool kept;
    std::optional<int> witness;  ///< vertex order m with delta(order, m) > diameter
    double witness_delta = 0.0;
    bool protected_by_table = false;  ///< order of sig or of one of its supergroups
};

struct OrderFilterReport {
    TurnoverSignature signature;
    double diameter;
    ConeOrderSet universe;
    ConeOrderSet refined;
    std::vector<OrderFilterEntry> entries;
};

/// Runs the distance-versus-diameter filter over cone_order_universe(sig).
///
/// An order n >= 6 is removed when delta(n, m) exceeds the triangle diameter
/// for some vertex order m of sig (every point of the turnover lies within
/// one diameter of each vertex) and n is not a cone order of sig or of any
/// of its table supergroups.
OrderFilterReport order_filter_report(const TurnoverSignature& sig);

ConeOrderSet refined_boundary_orders(const TurnoverSignature& sig);

}  // namespace turnover
