#include "turnover/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "turnover/report_json.hpp"

namespace turnover {

namespace {

std::string number(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

std::string scalar(const Json& j) {
    if (j.is_number_float()) return number(j.get<double>());
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const Json& e : j)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

std::string inline_value(const Json& j) {
    if (!j.is_array()) return scalar(j);
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
    return out + "]";
}

void render(const Json& j, std::ostream& out, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_flat(value)) {
                out << pad << key << ": " << inline_value(value) << '\n';
            } else {
                out << pad << key << ":\n";
                render(value, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const Json& e : j) {
            if (is_flat(e)) {
                out << pad << "- " << inline_value(e) << '\n';
            } else {
                out << pad << "-\n";
                render(e, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar(j) << '\n';
    }
}

void render_analysis(const Json& j, std::ostream& out) {
    out << "signature: " << scalar(j["signature"]) << "  extension index: " << j["extension_index"]
        << '\n';
    const Json& b = j["bounds"];
    out << "volume bound (with boundary): " << scalar(b["with_boundary"]) << '\n'
        << "volume bound (no boundary):   " << scalar(b["no_boundary"]) << '\n'
        << "boundary area budget:         " << scalar(b["budget"]) << '\n'
        << "max boundary pieces:          " << b["max_pieces"] << '\n'
        << "orders: " << inline_value(j["orders"]) << '\n'
        << "candidates:\n";
    for (const Json& c : j["candidates"])
        out << "  " << scalar(c["sig"]) << "  area " << scalar(c["area"]) << '\n';
    out << "cases:\n";
    out << "  " << std::left << std::setw(10) << "boundary" << std::setw(4) << "k" << std::setw(8)
        << "closed" << std::setw(14) << "theta" << std::setw(14) << "lower bound" << "verdict\n";
    for (const Json& c : j["cases"]) {
        out << "  " << std::left << std::setw(10) << scalar(c["boundary"]) << std::setw(4)
            << c["k"].dump() << std::setw(8) << (c["closed"].get<bool>() ? "yes" : "no")
            << std::setw(14) << scalar(c["theta"]) << std::setw(14) << scalar(c["lower_bound"])
            << scalar(c["verdict"]);
        if (!c["refined_by"].is_null()) out << " (" << scalar(c["refined_by"]) << ")";
        out << '\n';
    }
    if (!j["refinements"].empty()) {
        out << "refinements:\n";
        for (const Json& r : j["refinements"])
            out << "  " << scalar(r["name"]) << " on " << scalar(r["boundary"]) << ": theta "
                << scalar(r["theta"]) << ", bound " << scalar(r["lower_bound"]) << ", "
                << scalar(r["verdict"]) << '\n';
    }
    out << "conclusion: " << scalar(j["conclusion"]) << '\n';
}

struct Globals {
    bool json = false;
    std::optional<double> tol;
    std::uint64_t seed = 1;

    [[nodiscard]] Tolerance numeric_tolerance() const {
        return tol ? Tolerance{*tol, *tol, 200} : Tolerance{};
    }
    [[nodiscard]] Tolerance room_tolerance() const {
        return tol ? Tolerance{*tol, *tol, 8} : kRoomTolerance;
    }
};

struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;

    [[nodiscard]] TurnoverSignature sig() const { return TurnoverSignature(a, b, c); }
};

void add_triple(CLI::App* cmd, Triple& t) {
    cmd->add_option("p", t.a, "first cone order")->required();
    cmd->add_option("q", t.b, "second cone order")->required();
    cmd->add_option("r", t.c, "third cone order")->required();
}

std::string rational_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

double parse_tolerance(const std::string& text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value) || !(value > 0.0))
        throw DomainError("TURNOVER_TOL must be a positive number, got '" + text + "'");
    return value;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations for immersed hyperbolic turnovers", "turnover"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "emit one JSON document");
    app.add_option("--tol", g.tol, "absolute and relative tolerance override (env TURNOVER_TOL)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for random sweeps");

    // Each command fills `doc`; `text` optionally overrides the generic renderer.
    Json doc;
    std::function<void(std::ostream&)> text;
    int status = kExitOk;

    Triple triple;
    int ext = 1;

    auto* area = app.add_subcommand("area", "turnover classification and area");
    add_triple(area, triple);
    area->callback([&] {
        const TurnoverSignature sig = triple.sig();
        const GeometryClass cls = classify(sig);
        doc["signature"] = sig.to_string();
        doc["class"] = to_string(cls);
        doc["euler_characteristic"] = rational_string(sig.euler_characteristic());
        doc["area"] = cls == GeometryClass::Hyperbolic ? Json(turnover_area(sig)) : Json(nullptr);
        text = [&](std::ostream& o) {
            o << scalar(doc["class"]);
            if (!doc["area"].is_null()) o << ", area = " << scalar(doc["area"]);
            o << '\n';
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "classification and triangle geometry");
    add_triple(classify_cmd, triple);
    classify_cmd->callback([&] {
        const TurnoverSignature sig = triple.sig();
        const GeometryClass cls = classify(sig);
        doc["signature"] = sig.to_string();
        doc["class"] = to_string(cls);
        doc["euler_characteristic"] = rational_string(sig.euler_characteristic());
        doc["geometry"] = cls == GeometryClass::Hyperbolic ? to_json(triangle_geometry(sig)) : Json(nullptr);
    });

    int n = 0;
    int m = 0;
    auto* delta_cmd = app.add_subcommand("delta", "axis distance bound for an elliptic pair");
    delta_cmd->add_option("n", n, "first elliptic order")->required();
    delta_cmd->add_option("m", m, "second elliptic order")->required();
    delta_cmd->callback([&] {
        const EllipticPair pair(n, m);
        doc["n"] = pair.n();
        doc["m"] = pair.m();
        doc["c"] = c_bound(pair);
        doc["delta"] = delta(pair);
        doc["delta_nn"] = pair.n() == pair.m() && pair.n() >= 7 ? Json(delta_nn(pair.n())) : Json(nullptr);
    });

    auto* orders = app.add_subcommand("orders", "candidate cone orders for boundary turnovers");
    add_triple(orders, triple);
    orders->callback([&] { doc = to_json(order_filter_report(triple.sig())); });

    auto* super = app.add_subcommand("supergroups", "turnover supergroups from the inclusion table");
    add_triple(super, triple);
    super->callback([&] { doc = supergroups_json(triple.sig()); });

    auto* bounds = app.add_subcommand("bounds", "area and volume budgets");
    add_triple(bounds, triple);
    bounds->add_option("--ext", ext, "extension index (1 or 2)");
    bounds->callback([&] {
        const BoundLedger ledger = make_ledger(triple.sig(), ext);
        doc["signature"] = ledger.sig.to_string();
        doc["extension_index"] = ledger.extension_index;
        doc["area"] = ledger.area;
        doc["bounds"] = to_json(ledger);
    });

    bool universe = false;
    auto* candidates = app.add_subcommand("candidates", "boundary turnover candidates");
    add_triple(candidates, triple);
    candidates->add_option("--ext", ext, "extension index (1 or 2)");
    candidates->add_flag("--universe", universe, "use the unfiltered order set");
    candidates->callback([&] {
        const TurnoverSignature sig = triple.sig();
        const BoundLedger ledger = make_ledger(sig, ext);
        const ConeOrderSet set = universe ? cone_order_universe(sig) : refined_boundary_orders(sig);
        doc["signature"] = sig.to_string();
        doc["extension_index"] = ext;
        doc["budget"] = ledger.two_sided_budget;
        doc["orders"] = to_json(set);
        Json list = Json::array();
        for (const Candidate& c : boundary_candidates(ledger, set))
            list.push_back(Json{{"sig", c.sig.to_string()}, {"area", c.area}});
        doc["candidates"] = list;
    });

    bool no_refinements = false;
    bool skip_forced = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "run the exclusion pipeline");
    add_triple(analyze_cmd, triple);
    analyze_cmd->add_option("--ext", ext, "extension index (1 or 2)");
    analyze_cmd->add_flag("--no-refinements", no_refinements, "skip worked refinements");
    analyze_cmd->add_flag("--universe", universe, "use the unfiltered order set");
    analyze_cmd->add_flag("--skip-forced-closed", skip_forced,
                          "drop open cases whose order occurs once");
    analyze_cmd->callback([&] {
        AnalysisOptions options;
        options.use_refined_orders = !universe;
        options.apply_worked_refinements = !no_refinements;
        options.skip_forced_closed = skip_forced;
        options.tol = g.numeric_tolerance();
        doc = to_json(analyze(triple.sig(), ext, options));
        text = [&](std::ostream& o) { render_analysis(doc, o); };
    });

    std::optional<double> theta;
    std::optional<double> edge;
    auto* rho = app.add_subcommand("rho3", "regular truncated simplex data");
    auto* theta_opt = rho->add_option("--theta", theta, "dihedral angle in radians");
    auto* edge_opt = rho->add_option("--edge", edge, "edge length between truncation planes");
    theta_opt->excludes(edge_opt);
    rho->callback([&] {
        if (theta.has_value() == edge.has_value())
            throw DomainError("rho3: give exactly one of --theta and --edge");
        const double angle = theta ? *theta : angle_from_edge(*edge);
        doc = to_json(truncated_simplex(angle, g.numeric_tolerance()));
    });

    int count = 100;
    bool constant = false;
    bool records = false;
    auto* rooms = app.add_subcommand("room-check", "random isoperimetric sweep over disk floors");
    rooms->add_option("--count", count, "number of rooms");
    rooms->add_flag("--constant", constant, "use constant-height ceilings");
    rooms->add_flag("--records", records, "include one record per room");
    rooms->callback([&] {
        const RoomSweepResult sweep = room_sweep(g.seed, count, constant, g.room_tolerance());
        doc["seed"] = g.seed;
        doc["count"] = count;
        doc["violations"] = sweep.violations;
        doc["worst_margin"] = sweep.worst_margin;
        if (records) {
            Json list = Json::array();
            for (const RoomSpec& room : sweep.rooms) list.push_back(room_record(room));
            doc["records"] = list;
        }
        if (sweep.violations > 0) status = kExitNumeric;
    });

    auto* reg = app.add_subcommand("registry", "cited orbifold volumes");
    reg->callback([&] { doc = registry_json(); });

    auto* table = app.add_subcommand("table1", "turnover inclusion table");
    table->callback([&] { doc = table1_json(); });

    try {
        // Read by hand: CLI11 silently drops environment values that fail a check.
        if (const char* env = std::getenv("TURNOVER_TOL")) g.tol = parse_tolerance(env);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNumeric;
    }

    if (g.json) {
        out << doc.dump(2) << '\n';
    } else if (text) {
        text(out);
    } else {
        render(doc, out, 0);
    }
    return status;
}

}  // namespace turnover
