// Command-line front end: JSON requests in, deterministic JSON or text out.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rnfq/fixtures.hpp"
#include "rnfq/json_io.hpp"

using namespace rnfq;

namespace {

json read_request(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream ifs(path);
        if (!ifs) throw Error("BadInput", "cannot open input file " + path);
        std::stringstream ss;
        ss << ifs.rdbuf();
        text = ss.str();
    }
    if (text.empty()) return json::object();
    return json::parse(text);
}

json run_classgroup(const json& req) {
    auto S = surface_from_json(req.at("surface"));
    json out;
    out["surface"] = surface_to_json(S);
    auto gs = group_structure(S);
    out["rank"] = gs.rank;
    json fs = json::array();
    for (const auto& m : gs.invariant_factors) fs.push_back(int_to_json(m));
    out["factors"] = fs;
    if (req.contains("divisors")) {
        json divs = json::object();
        for (auto it = req["divisors"].begin(); it != req["divisors"].end(); ++it) {
            Divisor D = divisor_from_json(it.value());
            json d;
            d["canonical"] = canonical_class_to_json(canonical_form(S, D));
            d["lattice"] = lattice_point_to_json(lattice_point(S, D));
            auto ord = torsion_order(S, D);
            d["torsion_order"] = ord ? int_to_json(*ord) : json(nullptr);
            auto hm = horizontal_membership(S, D);
            d["horizontal"] = hm ? json{{"c", int_to_json(hm->c)},
                                        {"e", int_to_json(hm->e)},
                                        {"g", int_to_json(hm->g)}}
                                 : json(nullptr);
            divs[it.key()] = d;
        }
        out["divisors"] = divs;
    }
    return out;
}

json run_cohomology(const json& req) {
    auto S = surface_from_json(req.at("surface"));
    Divisor D = divisor_from_json(req.at("divisor"));
    auto t = betti(S, D);
    json out = betti_to_json(t);
    out["region"] = region_name(region(S, D));
    out["canonical"] = canonical_class_to_json(canonical_form(S, D));
    out["lattice"] = lattice_point_to_json(lattice_point(S, D));
    if (req.value("oracle", false)) out["h0_oracle"] = int_to_json(h0_oracle(S, D));
    return out;
}

json run_cover(const json& req) {
    auto spec = coverspec_from_json(req);
    validate(spec);
    json out;
    out["eigen"] = eigen_report_to_json(eigen_report(spec));
    out["split"] = split_report_to_json(split_general(spec));
    out["components"] = int_to_json(connected_components(spec));
    if (req.contains("restrict_to")) {
        json rs = json::object();
        for (const auto& c : req["restrict_to"]) {
            auto id = CurveId::parse(c.get<std::string>());
            rs[id.to_string()] = p1cover_to_json(restrict_to(spec, id));
        }
        out["restrictions"] = rs;
    }
    return out;
}

json run_p1cover(const json& req) {
    auto cov = p1cover_from_json(req);
    json out = p1cover_to_json(cov);
    // Appendix-style cross-check data
    std::vector<Int> mus;
    for (const auto& b : cov.branch()) mus.push_back(gcd_int(cov.d(), b.m));
    out["zeta_alexander"] = cycpoly_to_json(
        zeta_alexander(cov.components(), cov.d(),
                       Int(2) - Int(static_cast<long>(cov.branch().size())), mus));
    return out;
}

json run_leyomdin(const json& req) {
    auto in = lyinput_from_json(req);
    auto out = build_surface(in);
    json j = lyoutput_to_json(out);
    j["primitive_vertical"] = p1cover_to_json(primitive_vertical(in));
    return j;
}

json run_fixtures(const json& req, bool& all_pass) {
    std::string filter = req.value("anchor", std::string());
    auto checks = ::rnfq::run_fixtures(filter);
    json out;
    json list = json::array();
    int passed = 0;
    for (const auto& c : checks) {
        list.push_back({{"group", c.group},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"expected", c.expected},
                        {"actual", c.actual}});
        if (c.pass) ++passed;
    }
    out["checks"] = list;
    out["passed"] = passed;
    out["total"] = static_cast<int>(checks.size());
    all_pass = passed == static_cast<int>(checks.size());
    return out;
}

void print_text(const std::string& command, const json& result, std::ostream& os) {
    if (command == "fixtures") {
        for (const auto& c : result["checks"])
            os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
               << c["group"].get<std::string>() << "." << c["name"].get<std::string>()
               << (c["pass"].get<bool>()
                       ? ""
                       : "  (expected " + c["expected"].get<std::string>() + ", got " +
                             c["actual"].get<std::string>() + ")")
               << "\n";
        os << result["passed"] << "/" << result["total"] << " checks passed\n";
        return;
    }
    os << result.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of cyclic covers of reducible normal fake quadrics"};
    app.require_subcommand(1);
    std::string input_path;
    std::string format = "text";
    app.add_option("--input", input_path, "request file (default: stdin)")->capture_default_str();
    app.add_option("--format", format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string anchor_filter;
    for (const char* name : {"classgroup", "cohomology", "cover", "p1cover", "leyomdin"})
        app.add_subcommand(name)->fallthrough();
    auto* fx = app.add_subcommand("fixtures")->fallthrough();
    fx->add_option("--anchor", anchor_filter, "run a single fixture group");

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    json response;
    bool ok = true;
    bool fixtures_pass = true;
    try {
        json req = read_request(input_path);
        if (command == "fixtures" && !anchor_filter.empty()) req["anchor"] = anchor_filter;
        json result;
        if (command == "classgroup") result = run_classgroup(req);
        else if (command == "cohomology") result = run_cohomology(req);
        else if (command == "cover") result = run_cover(req);
        else if (command == "p1cover") result = run_p1cover(req);
        else if (command == "leyomdin") result = run_leyomdin(req);
        else result = run_fixtures(req, fixtures_pass);
        response["status"] = "ok";
        response["result"] = result;
        response["diagnostics"] = json::array();
    } catch (const Error& e) {
        ok = false;
        response["status"] = "error";
        response["error"] = {{"code", e.code()}, {"message", e.what()}};
    } catch (const std::exception& e) {
        ok = false;
        response["status"] = "error";
        response["error"] = {{"code", "Unhandled"}, {"message", e.what()}};
    }

    if (format == "json")
        std::cout << response.dump(2) << "\n";
    else if (ok)
        print_text(command, response["result"], std::cout);
    else
        std::cerr << response["error"]["code"].get<std::string>() << ": "
                  << response["error"]["message"].get<std::string>() << "\n";

    if (!ok) return 2;
    if (command == "fixtures" && !fixtures_pass) return 1;
    return 0;
}
