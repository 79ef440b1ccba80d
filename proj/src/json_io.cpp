#include "rnfq/json_io.hpp"

namespace rnfq {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("BadJson", "expected an integer");
}

json rat_to_json(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

json divisor_to_json(const Divisor& D) {
    json out = json::object();
    for (const auto& [c, m] : D.terms()) out[c.to_string()] = int_to_json(m);
    return out;
}

Divisor divisor_from_json(const json& j) {
    if (!j.is_object()) throw Error("BadJson", "divisor must be an object");
    Divisor D;
    for (auto it = j.begin(); it != j.end(); ++it)
        D.add(CurveId::parse(it.key()), int_from_json(it.value()));
    return D;
}

json cycpoly_to_json(const CycPoly& p) {
    json out;
    json fs = json::array();
    for (const auto& [n, e] : p.factors()) fs.push_back({{"n", n}, {"exp", e}});
    out["factors"] = fs;
    out["display"] = p.to_string();
    out["degree"] = int_to_json(p.degree());
    if (p.is_polynomial()) {
        json cs = json::array();
        for (const auto& c : p.coefficients()) cs.push_back(int_to_json(c));
        out["coefficients"] = cs;
    }
    return out;
}

FakeQuadric surface_from_json(const json& j) {
    if (!j.contains("pairs")) throw Error("BadJson", "surface needs a 'pairs' array");
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2)
            throw Error("BadJson", "each pair must be [d, q]");
        pairs.push_back({int_from_json(p[0]), int_from_json(p[1])});
    }
    return FakeQuadric::create(pairs);
}

json surface_to_json(const FakeQuadric& S) {
    json out;
    json pairs = json::array();
    for (const auto& [d, q] : S.pairs()) pairs.push_back({int_to_json(d), int_to_json(q)});
    out["pairs"] = pairs;
    out["alpha"] = int_to_json(S.alpha());
    out["kappa"] = int_to_json(S.kappa());
    out["chi_orb"] = rat_to_json(S.chi_orb());
    out["genus_G"] = int_to_json(S.genus_G());
    return out;
}

json canonical_class_to_json(const CanonicalClass& c) {
    json out;
    out["c"] = int_to_json(c.c_D);
    json as = json::array();
    for (const auto& a : c.a_hat) as.push_back(int_to_json(a));
    out["a_hat"] = as;
    out["f_hat"] = int_to_json(c.f_hat);
    return out;
}

json lattice_point_to_json(const LatticePoint& l) {
    return json{{"phi", rat_to_json(l.phi)}, {"c", int_to_json(l.c)}};
}

json betti_to_json(const BettiTriple& t) {
    return json{{"h0", int_to_json(t.h0)},
                {"h1", int_to_json(t.h1)},
                {"h2", int_to_json(t.h2)},
                {"chi", int_to_json(t.chi)}};
}

json p1cover_to_json(const P1Cover& c) {
    json out;
    out["d"] = int_to_json(c.d());
    json br = json::array();
    for (const auto& b : c.branch())
        br.push_back({{"label", b.label}, {"m", int_to_json(b.m)}});
    out["branch"] = br;
    out["components"] = int_to_json(c.components());
    json dims = json::array();
    for (const auto& v : c.dims()) dims.push_back(int_to_json(v));
    out["dims"] = dims;
    out["genus"] = int_to_json(c.genus());
    out["alexander"] = cycpoly_to_json(c.alexander());
    return out;
}

P1Cover p1cover_from_json(const json& j) {
    Int d = int_from_json(j.at("d"));
    std::vector<BranchPoint> branch;
    if (j.contains("mults")) {
        int idx = 0;
        for (const auto& m : j["mults"])
            branch.push_back({"p" + std::to_string(++idx), int_from_json(m)});
    } else if (j.contains("branch")) {
        for (const auto& b : j["branch"])
            branch.push_back({b.at("label").get<std::string>(), int_from_json(b.at("m"))});
    }
    return P1Cover::create(d, std::move(branch));
}

CoverSpec coverspec_from_json(const json& j) {
    CoverSpec spec{surface_from_json(j.at("surface")), int_from_json(j.at("d")),
                   divisor_from_json(j.at("D")), divisor_from_json(j.at("H")), true};
    if (j.contains("nc_asserted")) spec.nc_asserted = j["nc_asserted"].get<bool>();
    return spec;
}

json eigen_report_to_json(const EigenReport& rep) {
    json out;
    json dims = json::array();
    for (const auto& v : rep.dims) dims.push_back(int_to_json(v));
    out["dims"] = dims;
    out["h1_total"] = int_to_json(rep.h1_total);
    out["charpoly"] = cycpoly_to_json(rep.charpoly);
    if (rep.hypothesis_unverified) out["hypothesis_unverified"] = true;
    return out;
}

json split_report_to_json(const SplitReport& rep) {
    json out;
    out["nu_v"] = int_to_json(rep.nu_v);
    out["nu_h"] = int_to_json(rep.nu_h);
    out["nu_s"] = int_to_json(rep.nu_s);
    out["d_v"] = int_to_json(rep.d_v);
    out["d_h"] = int_to_json(rep.d_h);
    out["mu0"] = int_to_json(rep.mu0);
    out["vertical_cover"] = p1cover_to_json(rep.vertical_cover);
    if (rep.gcv) out["gcv_cover"] = p1cover_to_json(*rep.gcv);
    if (rep.reduction) {
        const auto& hr = *rep.reduction;
        out["reduction"] = {{"gamma", int_to_json(hr.gamma)},
                            {"eta", int_to_json(hr.eta)},
                            {"c_prime", int_to_json(hr.c_prime)},
                            {"e_prime", int_to_json(hr.e_prime)},
                            {"T_prime", canonical_class_to_json(hr.T_prime)},
                            {"d_tau", int_to_json(hr.d_tau)},
                            {"tau", int_to_json(hr.tau)},
                            {"n", int_to_json(hr.n)}};
    }
    out["delta1"] = cycpoly_to_json(rep.delta1);
    out["delta2h"] = cycpoly_to_json(rep.delta2h);
    out["delta2m"] = cycpoly_to_json(rep.delta2m);
    out["delta"] = cycpoly_to_json(rep.delta);
    return out;
}

LYInput lyinput_from_json(const json& j) {
    LYInput in;
    in.w_x = int_from_json(j.at("w_x"));
    in.w_y = int_from_json(j.at("w_y"));
    in.a_x = int_from_json(j.at("a_x"));
    in.a_y = int_from_json(j.at("a_y"));
    for (const auto& e : j.at("e")) in.e.push_back(int_from_json(e));
    in.kappa = int_from_json(j.at("kappa"));
    in.s = int_from_json(j.at("s"));
    in.m_x = int_from_json(j.at("m_x"));
    in.m_y = int_from_json(j.at("m_y"));
    in.m = int_from_json(j.at("m"));
    return in;
}

json lyoutput_to_json(const LYOutput& out) {
    const auto& dv = out.derived;
    json j;
    j["derived"] = {{"nu0", int_to_json(dv.nu0)},
                    {"w_z", int_to_json(dv.w_z)},
                    {"m_omega", int_to_json(dv.m_omega)},
                    {"u", int_to_json(dv.u)},
                    {"v", int_to_json(dv.v)},
                    {"c", int_to_json(dv.c)},
                    {"e0", int_to_json(dv.e0)},
                    {"e_inf", int_to_json(dv.e_inf)},
                    {"delta", int_to_json(dv.delta)},
                    {"delta_omega", int_to_json(dv.delta_omega)},
                    {"d", int_to_json(dv.d)},
                    {"beta1", int_to_json(dv.beta1)},
                    {"beta2", int_to_json(dv.beta2)},
                    {"m_hat", int_to_json(dv.m_hat)}};
    j["surface"] = surface_to_json(out.quadric);
    j["D_S"] = divisor_to_json(out.D_S);
    j["cover"] = {{"d", int_to_json(out.cover.d)},
                  {"D", divisor_to_json(out.cover.D)},
                  {"H", divisor_to_json(out.cover.H)}};
    j["charpoly"] = cycpoly_to_json(out.charpoly);
    return j;
}

}  // namespace rnfq
