#include "turnover/report_json.hpp"

namespace turnover {

Json to_json(const TurnoverSignature& sig) { return sig.to_string(); }

Json to_json(const ConeOrderSet& orders) { return orders.orders; }

Json to_json(const TriangleGeometry& geometry) {
    Json j;
    j["signature"] = to_json(geometry.signature);
    j["angles"] = geometry.angles;
    j["sides"] = geometry.sides;
    j["area_triangle"] = geometry.area_triangle;
    j["area_turnover"] = geometry.area_turnover;
    j["euler_characteristic"] = geometry.euler_char;
    j["diameter"] = geometry.diameter;
    return j;
}

Json to_json(const BoundLedger& ledger) {
    Json j;
    j["with_boundary"] = ledger.upper_bound_with_boundary;
    j["no_boundary"] = ledger.upper_bound_no_boundary;
    j["budget"] = ledger.two_sided_budget;
    j["max_pieces"] = ledger.max_boundary_pieces;
    return j;
}

Json to_json(const OrderFilterReport& report) {
    Json j;
    j["signature"] = to_json(report.signature);
    j["diameter"] = report.diameter;
    j["universe"] = to_json(report.universe);
    j["refined"] = to_json(report.refined);
    Json entries = Json::array();
    for (const OrderFilterEntry& e : report.entries) {
        Json row;
        row["order"] = e.order;
        row["kept"] = e.kept;
        row["witness"] = e.witness ? Json(*e.witness) : Json(nullptr);
        row["witness_delta"] = e.witness ? Json(e.witness_delta) : Json(nullptr);
        row["protected"] = e.protected_by_table;
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const CaseResult& result) {
    Json j;
    j["boundary"] = to_json(result.path.boundary_sig);
    j["k"] = result.path.k;
    j["closed"] = result.path.closed;
    j["theta"] = result.path.theta;
    j["lower_bound"] = result.lower_bound;
    j["verdict"] = to_string(result.verdict);
    j["miyamoto_bound"] = result.miyamoto_bound;
    j["refined_by"] = result.refined_by ? Json(*result.refined_by) : Json(nullptr);
    return j;
}

Json to_json(const RefinementResult& result) {
    Json j;
    j["name"] = result.name;
    j["boundary"] = to_json(result.boundary);
    j["k"] = result.k;
    j["input"] = result.input;
    j["length"] = result.length;
    j["theta"] = result.theta;
    j["lower_bound"] = result.lower_bound;
    j["verdict"] = to_string(result.verdict);
    return j;
}

Json to_json(const AnalysisReport& report) {
    Json j;
    j["signature"] = to_json(report.ledger.sig);
    j["extension_index"] = report.ledger.extension_index;
    j["bounds"] = to_json(report.ledger);
    j["orders"] = to_json(report.admissible_orders);
    Json candidates = Json::array();
    for (const Candidate& c : report.candidates)
        candidates.push_back(Json{{"sig", c.sig.to_string()}, {"area", c.area}});
    j["candidates"] = candidates;
    Json cases = Json::array();
    for (const CaseResult& c : report.cases) cases.push_back(to_json(c));
    j["cases"] = cases;
    Json refinements = Json::array();
    for (const RefinementResult& r : report.refinements) refinements.push_back(to_json(r));
    j["refinements"] = refinements;
    j["conclusion"] = to_string(report.conclusion);
    return j;
}

Json to_json(const TruncatedSimplexSpec& simplex) {
    Json j;
    j["theta"] = simplex.theta;
    j["edge_length"] = simplex.edge_length;
    j["volume"] = simplex.volume;
    j["rho3"] = simplex.rho3;
    return j;
}

Json to_json(const RegistryEntry& entry) {
    Json j;
    j["name"] = entry.name;
    j["kind"] = entry.kind == OrbifoldKind::Tetrahedral ? "Tetrahedral" : "Prism";
    j["edge_orders"] = entry.edge_orders ? Json(*entry.edge_orders) : Json(nullptr);
    j["volume"] = entry.volume;
    j["volume_cited"] = entry.volume_cited;
    Json immersed = Json::array();
    for (const auto& s : entry.known_immersed) immersed.push_back(s.to_string());
    j["known_immersed"] = immersed;
    Json embedded = Json::array();
    for (const auto& s : entry.known_embedded) embedded.push_back(s.to_string());
    j["known_embedded"] = embedded;
    j["extension_index"] = entry.extension_index;
    j["has_embedded_turnovers"] = entry.has_embedded_turnovers;
    j["limiting_area"] = entry.limiting_area ? Json(*entry.limiting_area) : Json(nullptr);
    j["volume_bound"] = registry_volume_bound(entry);
    j["notes"] = entry.notes;
    return j;
}

Json room_record(const RoomSpec& room) {
    Json j;
    j["V"] = room.volume;
    j["A_C"] = room.ceiling_area;
    j["A_S"] = room.nice_area;
    j["H_equiv"] = room.equivalent_height;
    j["margin"] = room.margin;
    return j;
}

Json registry_json() {
    Json rows = Json::array();
    for (const RegistryEntry& e : registry()) rows.push_back(to_json(e));
    return rows;
}

Json table1_json() {
    Json rows = Json::array();
    for (const SupergroupEntry& e : supergroup_table()) {
        Json row;
        row["super"] = e.super_string();
        row["sub"] = e.sub_string();
        row["index"] = e.index;
        row["normal"] = e.normal;
        rows.push_back(row);
    }
    return rows;
}

Json supergroups_json(const TurnoverSignature& sig) {
    Json rows = Json::array();
    for (const SupergroupMatch& m : supergroups(sig)) {
        Json row;
        row["super"] = m.super.to_string();
        row["index"] = m.index;
        row["normal"] = m.normal;
        row["row"] = m.row + 1;
        rows.push_back(row);
    }
    Json j;
    j["signature"] = sig.to_string();
    j["maximal"] = rows.empty();
    j["supergroups"] = rows;
    return j;
}

}  // namespace turnover
