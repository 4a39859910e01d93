#include "turnover/collars.hpp"

#include <algorithm>
#include <cmath>

namespace turnover {

EllipticPair::EllipticPair(int a, int b) : n_(std::max(a, b)), m_(std::min(a, b)) {
    if (m_ < 2) throw DomainError("elliptic order must be at least 2");
    if (n_ < 3) throw DomainError("elliptic pair needs an order of at least 3");
    if (n_ > TurnoverSignature::kMaxOrder) throw DomainError("elliptic order too large");
}

double c_bound(const EllipticPair& pair) {
    const int n = pair.n();
    const int m = pair.m();
    if (n >= 7) return std::sqrt(2.0 * std::cos(2.0 * kPi / n) - 1.0) / 2.0;
    if (n == 6) return m >= 3 ? std::cos(kPi / m) / 2.0 : 1.0 / std::sqrt(8.0);
    if (n == 5) return std::sqrt((std::sqrt(5.0) - 1.0) / 16.0);
    if (n == 4) return std::sqrt((std::sqrt(3.0) - 1.0) / 8.0);
    return std::sqrt((std::sqrt(5.0) - 2.0) / 8.0);
}

double delta(const EllipticPair& pair) {
    return std::asinh(c_bound(pair) / (std::sin(kPi / pair.n()) * std::sin(kPi / pair.m())));
}

double delta_nn(int n) {
    if (n < 7) throw DomainError("delta_nn: requires n >= 7");
    return 2.0 * std::acosh(1.0 / (2.0 * std::sin(kPi / n)));
}

double max_injectivity_radius() { return std::log((2.0 + std::sqrt(7.0)) / std::sqrt(3.0)); }

double translate_distance(double height) {
    if (!(height > 0.0)) throw DomainError("translate_distance: height must be positive");
    return 2.0 * std::log((2.0 + std::sqrt(height * height + 4.0)) / height);
}

bool oblique_order_admissible(int n) {
    if (n < 7) throw DomainError("oblique_order_admissible: requires n >= 7");
    return delta_nn(n) / 2.0 < max_injectivity_radius();
}

std::string OrderPattern::to_string() const {
    std::string out;
    auto term = [&out](int coeff, const char* symbol) {
        if (coeff == 0) return;
        if (!out.empty()) out += "+";
        if (coeff != 1) out += std::to_string(coeff);
        out += symbol;
    };
    term(s_coeff, "s");
    term(t_coeff, "t");
    if (constant != 0 || out.empty()) {
        if (!out.empty()) out += "+";
        out += std::to_string(constant);
    }
    return out;
}

namespace {

constexpr OrderPattern k(int c) { return {c, 0, 0}; }
constexpr OrderPattern t(int coeff) { return {0, coeff, 0}; }
constexpr OrderPattern s(int coeff) { return {0, 0, coeff}; }

std::string triple_string(const std::array<OrderPattern, 3>& triple) {
    return "(" + triple[0].to_string() + "," + triple[1].to_string() + "," + triple[2].to_string() +
           ")";
}

}  // namespace

bool SupergroupEntry::uses_t() const {
    return std::any_of(sub.begin(), sub.end(), [](const OrderPattern& o) { return o.t_coeff != 0; });
}

bool SupergroupEntry::uses_s() const {
    return std::any_of(sub.begin(), sub.end(), [](const OrderPattern& o) { return o.s_coeff != 0; });
}

std::string SupergroupEntry::super_string() const { return triple_string(super); }
std::string SupergroupEntry::sub_string() const { return triple_string(sub); }

const std::vector<SupergroupEntry>& supergroup_table() {
    // Singerman's list of inclusions between turnover groups.
    static const std::vector<SupergroupEntry> table = {
        {{k(3), k(3), t(1)}, {t(1), t(1), t(1)}, 3, true},
        {{k(2), k(3), t(2)}, {t(1), t(1), t(1)}, 6, true},
        {{k(2), s(1), t(2)}, {s(1), s(1), t(1)}, 2, true},
        {{k(2), k(3), k(7)}, {k(7), k(7), k(7)}, 24, false},
        {{k(2), k(3), k(7)}, {k(2), k(7), k(7)}, 9, false},
        {{k(2), k(3), k(7)}, {k(3), k(3), k(7)}, 8, false},
        {{k(2), k(3), k(8)}, {k(4), k(8), k(8)}, 12, false},
        {{k(2), k(3), k(8)}, {k(3), k(8), k(8)}, 10, false},
        {{k(2), k(3), k(9)}, {k(9), k(9), k(9)}, 12, false},
        {{k(2), k(4), k(5)}, {k(4), k(4), k(5)}, 6, false},
        {{k(2), k(3), t(4)}, {t(1), t(4), t(4)}, 6, false},
        {{k(2), k(4), t(2)}, {t(1), t(2), t(2)}, 4, false},
        {{k(2), k(3), t(3)}, {k(3), t(1), t(3)}, 4, false},
        {{k(2), k(3), t(2)}, {k(2), t(1), t(2)}, 3, false},
    };
    return table;
}

namespace {

std::optional<TurnoverSignature> instantiate(const std::array<OrderPattern, 3>& triple, int t,
                                             int s) {
    std::array<int, 3> values{};
    for (int i = 0; i < 3; ++i) {
        values[i] = triple[i].evaluate(t, s);
        if (values[i] < 2 || values[i] > TurnoverSignature::kMaxOrder) return std::nullopt;
    }
    return TurnoverSignature(values[0], values[1], values[2]);
}

}  // namespace

std::vector<SupergroupMatch> supergroups(const TurnoverSignature& sig) {
    std::vector<SupergroupMatch> matches;
    const auto& table = supergroup_table();
    // Any parameter that appears in a subgroup pattern is bounded by the
    // largest order of sig.
    const int limit = sig.r();
    for (std::size_t row = 0; row < table.size(); ++row) {
        const SupergroupEntry& entry = table[row];
        const int t_max = entry.uses_t() ? limit : 1;
        const int s_max = entry.uses_s() ? limit : 1;
        for (int t = 1; t <= t_max; ++t) {
            for (int s = 1; s <= s_max; ++s) {
                const auto sub = instantiate(entry.sub, t, s);
                if (!sub || *sub != sig) continue;
                const auto super = instantiate(entry.super, t, s);
                if (!super || classify(*super) != GeometryClass::Hyperbolic) continue;
                if (classify(*sub) != GeometryClass::Hyperbolic) continue;
                SupergroupMatch match{*super, entry.index, entry.normal, row};
                if (std::find(matches.begin(), matches.end(), match) == matches.end())
                    matches.push_back(match);
            }
        }
    }
    return matches;
}

ConeOrderSet ConeOrderSet::from(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return ConeOrderSet{std::move(values)};
}

bool ConeOrderSet::contains(int n) const { return std::binary_search(orders.begin(), orders.end(), n); }

ConeOrderSet cone_order_universe(const TurnoverSignature& sig) {
    std::vector<int> values{2, 3, 4, 5, 6, 7, 8, 9};
    for (int n : sig.orders()) {
        values.push_back(n);
        values.push_back(2 * n);
    }
    return ConeOrderSet::from(std::move(values));
}

OrderFilterReport order_filter_report(const TurnoverSignature& sig) {
    const TriangleGeometry geometry = triangle_geometry(sig);
    ConeOrderSet universe = cone_order_universe(sig);

    std::vector<int> protected_orders(sig.orders().begin(), sig.orders().end());
    for (const SupergroupMatch& match : supergroups(sig))
        protected_orders.insert(protected_orders.end(), match.super.orders().begin(),
                                match.super.orders().end());
    const ConeOrderSet shielded = ConeOrderSet::from(std::move(protected_orders));

    std::vector<OrderFilterEntry> entries;
    std::vector<int> kept;
    for (int n : universe.orders) {
        OrderFilterEntry entry{n, true, std::nullopt, 0.0, shielded.contains(n)};
        if (n >= 6) {
            for (int m : sig.orders()) {
                const double d = delta(EllipticPair(n, m));
                if (d > geometry.diameter && (!entry.witness || d > entry.witness_delta)) {
                    entry.witness = m;
                    entry.witness_delta = d;
                }
            }
            entry.kept = !entry.witness || entry.protected_by_table;
        }
        if (entry.kept) kept.push_back(n);
        entries.push_back(entry);
    }
    return OrderFilterReport{sig, geometry.diameter, std::move(universe),
                             ConeOrderSet::from(std::move(kept)), std::move(entries)};
}

ConeOrderSet refined_boundary_orders(const TurnoverSignature& sig) {
    return order_filter_report(sig).refined;
}

}  // namespace turnover
