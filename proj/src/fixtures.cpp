#include "rnfq/fixtures.hpp"

#include <functional>
#include <sstream>

#include "rnfq/leyomdin.hpp"

namespace rnfq {

namespace {

struct Recorder {
    std::string group;
    std::vector<FixtureCheck>* out;

    template <typename T, typename U>
    void eq(const std::string& name, const T& actual, const U& expected) {
        std::ostringstream ea, eb;
        ea << expected;
        eb << actual;
        out->push_back({group, name, ea.str() == eb.str(), ea.str(), eb.str()});
    }
    void ok(const std::string& name, bool pass, const std::string& detail = "") {
        out->push_back({group, name, pass, "true", pass ? "true" : (detail.empty() ? "false" : detail)});
    }
};


Divisor curve(const CurveId& c, long m = 1) { return Divisor::of(c, Int(m)); }

// Betti table of the threshold-strip divisors.
void torsion_table(Recorder rec) {
    auto S = FakeQuadric::create({{3, 1}, {3, 2}, {3, 1}, {3, 2}});
    rec.eq("alpha", S.alpha(), 2);
    rec.eq("kappa", S.kappa(), 3);
    rec.eq("chi_orb", S.chi_orb(), "-2/3");
    Divisor D1 = curve(CurveId::A(1));
    Divisor D2 = curve(CurveId::A(1), 2) - curve(CurveId::A(2));
    Divisor D3 = D2 + curve(CurveId::A(3)) - curve(CurveId::A(4));
    Divisor C3 = curve(CurveId::C(), 3);
    const char* names[6] = {"D1", "D2", "D3", "3C+D1", "3C+D2", "3C+D3"};
    Divisor divs[6] = {D1, D2, D3, C3 + D1, C3 + D2, C3 + D3};
    long expect[6][3] = {{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {2, 1, 0}, {0, 0, 0}, {1, 2, 0}};
    for (int k = 0; k < 6; ++k) {
        auto t = betti(S, divs[k]);
        rec.eq(std::string(names[k]) + ".h0", t.h0, expect[k][0]);
        rec.eq(std::string(names[k]) + ".h1", t.h1, expect[k][1]);
        rec.eq(std::string(names[k]) + ".h2", t.h2, expect[k][2]);
    }
}

void classgroup_small(Recorder rec) {
    auto join = [](const std::vector<Int>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
        return s;
    };
    auto S1 = FakeQuadric::create({{3, 1}, {3, 1}, {3, 1}});
    rec.eq("r3.factors", join(group_structure(S1).invariant_factors), "3,3");
    auto S2 = FakeQuadric::create({{3, 1}, {3, 2}, {3, 1}, {3, 2}});
    rec.eq("r4.factors", join(group_structure(S2).invariant_factors), "3,3,3");
    auto S3 = FakeQuadric::create({{6, 5}, {9, 1}, {18, 1}});
    rec.eq("mixed.factors", join(group_structure(S3).invariant_factors), "3,18");
    Divisor T = curve(CurveId::E()) - curve(CurveId::C());
    for (auto* S : {&S1, &S2, &S3}) {
        auto ord = torsion_order(*S, T);
        rec.ok("order(E-C)=kappa", ord && *ord == S->kappa(),
               ord ? ord->get_str() : "non-torsion");
    }
}

// Triple covers (3, G, C - a T): the torsion choice changes the cohomology.
void triple_cover_torsion_choice(Recorder rec) {
    auto S = FakeQuadric::create({{3, 1}, {3, 1}, {3, 1}});
    Divisor T = curve(CurveId::E()) - curve(CurveId::C());
    for (long a = 0; a <= 2; ++a) {
        Divisor H = curve(CurveId::C()) - Int(a) * T;
        CoverSpec cs{S, 3, curve(CurveId::G("1")), H, true};
        auto rep = eigen_report(cs);
        rec.eq("a=" + std::to_string(a) + ".h1", rep.h1_total, a == 1 ? 1 : 0);
        auto sp = split_general(cs);
        rec.ok("a=" + std::to_string(a) + ".split==eigen", sp.delta == rep.charpoly);
        rec.eq("a=" + std::to_string(a) + ".components", connected_components(cs), 1);
        // replacing H by H + A1 - A2 trivializes the common vertical cover
        CoverSpec cs2{S, 3, curve(CurveId::G("1")),
                      H + curve(CurveId::A(1)) - curve(CurveId::A(2)), true};
        auto sp2 = split_general(cs2);
        rec.eq("a=" + std::to_string(a) + ".tau'", sp2.reduction ? sp2.reduction->tau : Int(0), 1);
        rec.eq("a=" + std::to_string(a) + ".h1'", eigen_report(cs2).h1_total, 0);
    }
}

// Six-fold covers of the (3,1)^3 surface ramified along 3(C+G).
void six_cover_mixed(Recorder rec) {
    auto S = FakeQuadric::create({{3, 1}, {3, 1}, {3, 1}});
    Divisor D = curve(CurveId::C(), 3) + curve(CurveId::G("1"), 3);
    {
        CoverSpec cs{S, 6, D, curve(CurveId::E(), 2), true};
        auto rep = eigen_report(cs);
        CycPoly expect = CycPoly::factor(6, 1) / CycPoly::factor(2, 1);  // (t^2-t+1)(t^2+t+1)
        rec.ok("H=2E.charpoly", rep.charpoly == expect,
               rep.charpoly.to_string() + " vs " + expect.to_string());
        auto sp = split_general(cs);
        rec.ok("H=2E.split==eigen", sp.delta == rep.charpoly);
    }
    {
        CoverSpec cs{S, 6, D, curve(CurveId::C(), 2), true};
        rec.eq("H=2C.components", connected_components(cs), 3);
        rec.eq("H=2C.h1", eigen_report(cs).h1_total, 0);
    }
}

// Degree-180 cover of the (6,5),(9,1),(18,1) surface.
void deg180_split(Recorder rec) {
    auto S = FakeQuadric::create({{6, 5}, {9, 1}, {18, 1}});
    Divisor D = curve(CurveId::C(), 90) + curve(CurveId::E(), 90) +
                curve(CurveId::G("1"), 15) + curve(CurveId::G("2"), 165) +
                curve(CurveId::A(1), 36) + curve(CurveId::A(2), 18) + curve(CurveId::A(3), 36);
    Divisor H = curve(CurveId::E()) + curve(CurveId::G("2")) + curve(CurveId::A(1), 2) +
                curve(CurveId::A(2), -3) + curve(CurveId::A(3), 1);
    CoverSpec cs{S, 180, D, H, true};
    rec.ok("valid", canonical_form(S, D - Int(180) * Divisor(H)).is_zero());
    auto sp = split_general(cs);
    rec.eq("vertical.degree", sp.d_v, 15);
    {
        auto nm = sp.vertical_cover.normalized_mults();
        std::string s;
        for (const auto& m : nm) s += (s.empty() ? "" : ",") + m.get_str();
        rec.eq("vertical.mults", s, "2,6,7");  // {6,7,2} and a multiple of 15
    }
    CycPoly phi5_15 = CycPoly::factor(15, 1) / CycPoly::factor(3, 1);
    rec.ok("vertical.delta1", sp.delta1 == phi5_15,
           sp.delta1.to_string() + " vs " + phi5_15.to_string());
    {
        auto dims = sp.vertical_cover.dims();
        std::string got;
        for (size_t l = 0; l < dims.size(); ++l)
            if (dims[l] != 0) got += (got.empty() ? "" : ",") + std::to_string(l);
        rec.eq("vertical.eigen_support", got, "2,4,6,7,12,14");
    }
    rec.eq("horizontal.n", sp.reduction ? sp.reduction->n : Int(0), 3);
    // Printed source values for the torsion reduction; they contradict the
    // reduction requirement (3 T' = 6 T for the printed T') and the direct
    // eigenspace computation, which force d_tau = 3, tau = 6 and a genus-3
    // common vertical cover.  Kept as stated; see the acceptance notes.
    rec.eq("horizontal.d_tau[as-printed]", sp.reduction ? sp.reduction->d_tau : Int(0), 9);
    rec.eq("horizontal.tau[as-printed]", sp.reduction ? sp.reduction->tau : Int(0), 2);
    CycPoly t_plus_1 = CycPoly::factor(2, 1) / CycPoly::factor(1, 1);
    rec.ok("horizontal.delta2h[as-printed]", sp.delta2h == t_plus_1,
           sp.delta2h.to_string() + " vs " + t_plus_1.to_string());
    auto rep = eigen_report(cs);
    rec.ok("split==eigen", sp.delta == rep.charpoly);
}

// Semistable-reduction anchors for fixed desk instances: the constructed
// surface invariants, the exceptional-fiber coefficients, the pull-back
// structure of the special-fiber restrictions, and the three-way agreement of
// the monodromy polynomial.
void le_yomdin_anchors(Recorder rec) {
    std::vector<LYInput> instances = {
        {1, 2, 0, 1, {1}, 1, 1, 0, 0, 2},
        {1, 2, 0, 1, {1}, 1, 2, 1, 0, 3},
        {2, 3, 1, 2, {1, 2}, 2, 1, 1, 1, 4},
        {1, 1, 2, 1, {3}, 3, 2, 0, 1, 3},
    };
    int idx = 0;
    for (const auto& in : instances) {
        std::string tag = "i" + std::to_string(++idx) + ".";
        auto out = build_surface(in);
        const auto& dv = out.derived;
        rec.eq(tag + "alpha", out.quadric.alpha(), 0);
        rec.ok(tag + "lcm=kappa", out.quadric.kappa() == in.kappa,
               out.quadric.kappa().get_str());
        Int e_total = 0;
        for (const auto& ei : in.e) e_total += ei;
        rec.ok(tag + "e0+einf=-e", dv.e0 + dv.e_inf == -e_total);
        // exceptional-fiber coefficients of the ramification divisor
        bool coeffs_ok = true;
        for (int i = 1; i <= out.quadric.r(); ++i)
            coeffs_ok = coeffs_ok &&
                        out.D_S.coeff(CurveId::A(i)) == dv.delta * out.quadric.q(i - 1);
        rec.ok(tag + "A-coeffs=delta*q_i", coeffs_ok);
        // the reduced cover is well defined and purely horizontal of degree
        // delta*delta_omega
        CoverSpec full{out.quadric, dv.d, out.D_S, Divisor(), true};
        auto sp_full = split_general(full);
        rec.eq(tag + "d_h", sp_full.d_h, dv.delta * dv.delta_omega);
        rec.eq(tag + "d_v", sp_full.d_v, 1);
        // special-fiber restrictions are pull-backs of the primitive cover
        auto pv = primitive_vertical(in);
        bool pullback_ok = true;
        for (int i = 1; i <= out.quadric.r(); ++i) {
            Int ratio = in.kappa / out.quadric.d(i - 1);
            auto restr = restrict_to(out.cover, CurveId::A(i));
            Int mC = 0, mE = 0;
            bool gs_ok = true;
            for (const auto& b : restr.branch()) {
                if (b.label == "C") mC = b.m;
                else if (b.label == "E") mE = b.m;
                else gs_ok = gs_ok && b.m == 1;
            }
            pullback_ok = pullback_ok && gs_ok && mC == ratio * dv.m_hat &&
                          mE == ratio * (-(dv.m_hat + in.s));
        }
        rec.ok(tag + "A-restrictions=pullbacks", pullback_ok);
        // three-way agreement of the characteristic polynomial
        auto sp = split_general(out.cover);
        bool agree = out.charpoly == pv.alexander() && out.charpoly == sp.delta &&
                     out.charpoly == sp_full.delta;
        rec.ok(tag + "charpoly-3way", agree,
               out.charpoly.to_string() + " / " + pv.alexander().to_string() + " / " +
                   sp.delta.to_string());
    }
}

const std::vector<std::pair<std::string, std::function<void(Recorder)>>>& groups() {
    static const std::vector<std::pair<std::string, std::function<void(Recorder)>>> g = {
        {"torsion-table", torsion_table},
        {"classgroup-small", classgroup_small},
        {"triple-cover-torsion-choice", triple_cover_torsion_choice},
        {"six-cover-mixed", six_cover_mixed},
        {"deg180-split", deg180_split},
        {"le-yomdin-anchors", le_yomdin_anchors},
    };
    return g;
}

}  // namespace

std::vector<std::string> fixture_groups() {
    std::vector<std::string> names;
    for (const auto& [n, f] : groups()) names.push_back(n);
    return names;
}

std::vector<FixtureCheck> run_fixtures(const std::string& group_filter) {
    std::vector<FixtureCheck> out;
    bool found = false;
    for (const auto& [name, fn] : groups()) {
        if (!group_filter.empty() && name != group_filter) continue;
        found = true;
        fn(Recorder{name, &out});
    }
    if (!found) {
        std::string avail;
        for (const auto& n : fixture_groups()) avail += (avail.empty() ? "" : ", ") + n;
        throw Error("UnknownAnchor", "unknown fixture group '" + group_filter +
                                         "'; available: " + avail);
    }
    return out;
}

}  // namespace rnfq
