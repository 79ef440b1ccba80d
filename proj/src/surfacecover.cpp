#include "rnfq/surfacecover.hpp"

#include <algorithm>
#include <set>

namespace rnfq {

namespace {

bool is_horizontal_curve(const CurveId& c) {
    return c.tag == CurveId::Tag::C || c.tag == CurveId::Tag::E || c.tag == CurveId::Tag::G;
}

// Vertical divisor representative of T = E - C: sum q_i A_i - alpha F.
Divisor T_vertical_rep(const FakeQuadric& S) {
    Divisor t;
    for (int i = 1; i <= S.r(); ++i) t.add(CurveId::A(i), S.q(i - 1));
    t.add(CurveId::F("tors"), -S.alpha());
    return t;
}

}  // namespace

Divisor validate(const CoverSpec& spec) {
    if (spec.d < 1) throw Error("BadDegree", "cover degree must be >= 1");
    Divisor dt = spec.D - spec.d * Divisor(spec.H);
    if (!canonical_form(spec.S, dt).is_zero())
        throw Error("NotLinearlyEquivalent", "D - d*H is not linearly trivial");
    return dt;
}

Divisor L_divisor(const CoverSpec& spec, const Int& l) {
    Divisor dt = spec.D - spec.d * Divisor(spec.H);
    Divisor L;
    for (const auto& [c, m] : dt.terms()) L.add(c, floor_div(l * m, spec.d));
    return L;
}

CanonicalClass L_class(const CoverSpec& spec, const Int& l) {
    return canonical_form(spec.S, L_divisor(spec, l));
}

EigenReport eigen_report(const CoverSpec& spec) {
    validate(spec);
    EigenReport rep;
    rep.h1_total = 0;
    for (Int l = 0; l < spec.d; ++l) {
        auto t = betti(spec.S, L_divisor(spec, l));
        rep.dims.push_back(t.h1);
        rep.h1_total += t.h1;
    }
    std::vector<Int> mult(spec.d.get_ui(), 0);
    long d = spec.d.get_si();
    for (long l = 0; l < d; ++l)
        mult[l] = rep.dims[l] + rep.dims[(d - l) % d];
    rep.charpoly = CycPoly::from_root_multiplicities(d, mult);
    rep.hypothesis_unverified = !spec.nc_asserted;
    return rep;
}

namespace {

// Exceptional multiplicity of the special blow-up whose exceptional component
// stays adjacent to the curve that carries m_along; the transversal axis
// carries m_transversal and the quotient point has type 1/delta(1, w) written
// with weight 1 on the transversal-cutting coordinate.
Int adjacent_blowup_mult(const Int& delta, const Int& w, const Int& m_transversal,
                         const Int& m_along) {
    Int num = m_transversal + mod_floor(w, delta) * m_along;
    if (mod_floor(num, delta) != 0)
        throw Error("NotCartier", "divisor is not Cartier at a quotient point");
    return num / delta;
}

}  // namespace

P1Cover restrict_to(const CoverSpec& spec, const CurveId& curve) {
    const FakeQuadric& S = spec.S;
    if (!S.valid_curve(curve)) throw Error("UnknownCurve", curve.to_string());
    Divisor dt = validate(spec);
    if (mod_floor(dt.coeff(curve), spec.d) != 0)
        throw Error("CurveInSupport",
                    "restriction curve carries a nontrivial branch multiplicity");

    // collect multiplicities per tag
    Int mC = dt.coeff(CurveId::C()), mE = dt.coeff(CurveId::E());
    std::vector<BranchPoint> branch;
    auto add_point = [&](const std::string& lb, const Int& m) {
        branch.push_back({lb, m});
    };

    using T = CurveId::Tag;
    if (curve.tag == T::C || curve.tag == T::E) {
        bool onC = curve.tag == T::C;
        Int m_self = onC ? mC : mE;
        for (int i = 1; i <= S.r(); ++i) {
            const Int& d_i = S.d(i - 1);
            Int mA = dt.coeff(CurveId::A(i));
            // type 1/d_i(1, -q_i) at C, 1/d_i(1, q_i) at E, first weight on the
            // section-cutting coordinate; the section is the e1-axis, so the
            // adjacent special ray has weight inverse on the section side.
            Int q = mod_floor(onC ? -S.q(i - 1) : S.q(i - 1), d_i);
            Int winv = d_i == 1 ? Int(0) : inverse_mod(q, d_i);
            add_point("A" + std::to_string(i),
                      adjacent_blowup_mult(d_i, winv, mA, m_self));
        }
        for (const auto& [c, m] : dt.terms())
            if (c.tag == T::F) add_point(c.to_string(), m);
        // G-fibers do not meet the sections.
    } else if (curve.tag == T::F) {
        add_point("C", mC);
        add_point("E", mE);
        for (const auto& [c, m] : dt.terms())
            if (c.tag == T::G)
                for (Int k = 0; k < S.kappa(); ++k)
                    add_point(c.to_string() + "." + k.get_str(), m);
        // A-fibers and other F-fibers are disjoint from a generic fiber.
    } else {  // A(i)
        int i = curve.index;
        const Int& d_i = S.d(i - 1);
        Int mA = dt.coeff(curve);
        Int qE = mod_floor(S.q(i - 1), d_i);
        Int qC = mod_floor(-S.q(i - 1), d_i);
        add_point("E", adjacent_blowup_mult(d_i, qE, mE, mA));
        add_point("C", adjacent_blowup_mult(d_i, qC, mC, mA));
        Int pts = S.kappa() / d_i;
        for (const auto& [c, m] : dt.terms())
            if (c.tag == T::G)
                for (Int k = 0; k < pts; ++k)
                    add_point(c.to_string() + "." + k.get_str(), m);
    }
    // Each branch label must be unique; multiplicities congruent to zero are
    // kept (they are dropped by the eigenvalue formulas anyway).
    return P1Cover::create(spec.d, std::move(branch));
}

HorizontalReduction horizontal_reduce(const CoverSpec& spec) {
    const FakeQuadric& S = spec.S;
    validate(spec);
    Int c = 0, e = 0;
    std::vector<Int> g;
    for (const auto& [cu, m] : spec.D.terms()) {
        switch (cu.tag) {
            case CurveId::Tag::C: c += m; break;
            case CurveId::Tag::E: e += m; break;
            case CurveId::Tag::G: g.push_back(m); break;
            default:
                throw Error("NotHorizontal", "divisor has a vertical component " +
                                                 cu.to_string());
        }
    }
    const Int& kappa = S.kappa();
    Int gg = gcd_int(spec.d, kappa);
    Int kappa1 = kappa / gg;
    if (mod_floor(e, gg) != 0)
        throw Error("Internal", "gcd(d,kappa) must divide e for a valid cover");
    // eta_0 solves d*eta = e (mod kappa); solutions form eta_0 + kappa1*Z.
    Int eta0 = 0;
    {
        Int m2 = kappa / gg;
        Int rhs = mod_floor(e, kappa) / gg * inverse_mod(mod_floor(spec.d / gg, m2), m2);
        eta0 = m2 == 0 ? Int(0) : mod_floor(rhs, m2);
        if (mod_floor(spec.d * eta0 - e, kappa) != 0)
            throw Error("Internal", "eta_0 solve");
    }
    Int gsum = 0;
    for (const auto& x : g) gsum += x;
    Int cd = c + e + kappa * gsum;
    if (mod_floor(cd, spec.d) != 0) throw Error("Internal", "c_D not divisible by d");

    // Nonzero multiples of T, as canonical forms, for the intersection test.
    Divisor T = Divisor::of(CurveId::E()) - Divisor::of(CurveId::C());
    std::set<std::string> t_multiples;
    for (Int k = 1; k < kappa; ++k)
        t_multiples.insert(canonical_form(S, k * T).to_string());

    for (Int h = 0; h < kappa + 1; ++h) {
        Int eta = eta0 + h * kappa1;
        Int gamma = cd / spec.d - eta;
        Divisor Tp = Divisor(spec.H) - gamma * Divisor::of(CurveId::C()) -
                     eta * Divisor::of(CurveId::E());
        auto Tp_cls = canonical_form(S, Tp);
        auto ord = torsion_order(S, Tp);
        if (!ord) throw Error("Internal", "H - gamma C - eta E is not torsion");
        // smallest h >= 0 whose torsion class generates a subgroup meeting <T>
        // only in zero
        bool clean = true;
        CanonicalClass acc = Tp_cls;
        for (Int k = 1; k < *ord; ++k) {
            if (t_multiples.count(acc.to_string())) {
                clean = false;
                break;
            }
            acc = class_add(S, acc, Tp_cls);
        }
        if (!clean) continue;
        HorizontalReduction hr;
        hr.gamma = gamma;
        hr.eta = eta;
        hr.T_prime = Tp_cls;
        hr.d_tau = *ord;
        if (mod_floor(spec.d, *ord) != 0)
            throw Error("Internal", "torsion order does not divide d");
        hr.tau = spec.d / *ord;
        Int cp = c - spec.d * gamma;
        Int ep = e - spec.d * eta;
        if (mod_floor(cp, kappa) != 0 || mod_floor(ep, kappa) != 0)
            throw Error("Internal", "reduced coefficients not divisible by kappa");
        hr.c_prime = cp / kappa;
        hr.e_prime = ep / kappa;
        Int check = hr.c_prime + hr.e_prime + gsum;
        if (check != 0) throw Error("Internal", "c' + e' + sum g_j must vanish");
        hr.g = g;
        if (mod_floor(gcd_int(spec.d, kappa), hr.d_tau) != 0)
            throw Error("Internal", "torsion order does not divide gcd(d, kappa)");
        // gcd of d and the coefficients of D before the reduction
        hr.n = gcd_int(gcd_int(spec.d, c), gcd_int(e, gcd_many(g)));
        return hr;
    }
    throw Error("Internal", "no admissible torsion reduction found");
}

P1Cover gcv_cover(const HorizontalReduction& hr) {
    std::vector<BranchPoint> branch;
    branch.push_back({"0", hr.c_prime});
    branch.push_back({"inf", hr.e_prime});
    for (size_t j = 0; j < hr.g.size(); ++j)
        branch.push_back({"g" + std::to_string(j + 1), hr.g[j]});
    return P1Cover::create(hr.tau, std::move(branch));
}

P1Cover gcv_cover(const CoverSpec& spec) { return gcv_cover(horizontal_reduce(spec)); }

SplitReport split_general(const CoverSpec& spec) {
    const FakeQuadric& S = spec.S;
    validate(spec);
    Divisor Dv, Dh;
    for (const auto& [c, m] : spec.D.terms())
        (is_horizontal_curve(c) ? Dh : Dv).add(c, m);
    std::vector<Int> mv, mh;
    for (const auto& [c, m] : Dv.terms()) mv.push_back(m);
    for (const auto& [c, m] : Dh.terms()) mh.push_back(m);

    SplitReport rep;
    rep.nu_v = gcd_many(mv);
    rep.nu_h = gcd_many(mh);
    rep.nu_s = 0;
    rep.d_v = gcd_int(spec.d, rep.nu_h);
    rep.d_h = gcd_int(spec.d, rep.nu_v);
    rep.mu0 = gcd_int(rep.d_v, rep.d_h);

    // Vertical subcover (d_v, nu_v D_v, H_v), H_v = (d/d_v) H - (nu_h/d_v) D_h.
    {
        Divisor Hv = (spec.d / rep.d_v) * Divisor(spec.H);
        if (rep.nu_h != 0) {
            Divisor Dh_prim = Dh;
            for (const auto& [c, m] : Dh.terms()) Dh_prim.set(c, m / rep.nu_h);
            Hv -= (rep.nu_h / rep.d_v) * Dh_prim;
        }
        CoverSpec vert{S, rep.d_v, Dv, Hv, spec.nc_asserted};
        rep.vertical_cover = restrict_to(vert, CurveId::E());
        rep.delta1 = rep.vertical_cover.alexander();
    }

    // Horizontal subcover (d_h, nu_h D_h, H_h), H_h = (d/d_h) H - (nu_v/d_h) D_v.
    rep.delta2h = CycPoly::one();
    rep.delta2m = CycPoly::one();
    if (rep.d_h > 1 && !Dh.is_zero()) {
        Divisor Hh = (spec.d / rep.d_h) * Divisor(spec.H);
        if (rep.nu_v != 0) {
            Divisor Dv_prim = Dv;
            for (const auto& [c, m] : Dv.terms()) Dv_prim.set(c, m / rep.nu_v);
            Hh -= (rep.nu_v / rep.d_h) * Dv_prim;
        }
        CoverSpec hor{S, rep.d_h, Dh, Hh, spec.nc_asserted};
        auto hr = horizontal_reduce(hor);
        rep.reduction = hr;
        auto gcv = gcv_cover(hr);
        rep.gcv = gcv;
        rep.delta2h = gcv.alexander();
        // Mixed part: vertical cover (n, d_h T' - kappa e' T, 0) restricted to E.
        if (hr.n > 1) {
            Divisor Dm = rep.d_h * hr.T_prime.to_divisor() -
                         (S.kappa() * hr.e_prime) * T_vertical_rep(S);
            CoverSpec mixed{S, hr.n, Dm, Divisor(), spec.nc_asserted};
            rep.delta2m = restrict_to(mixed, CurveId::E()).alexander();
        }
    }
    // With no horizontal components the horizontal subcover is unramified and
    // its common vertical cover is a line, so delta2h stays 1.

    rep.delta = rep.delta1 * rep.delta2h;
    return rep;
}

Int connected_components(const CoverSpec& spec) {
    const FakeQuadric& S = spec.S;
    Divisor dt = validate(spec);
    std::vector<Int> coeffs;
    for (const auto& [c, m] : dt.terms()) coeffs.push_back(m);
    Int base = gcd_int(spec.d, gcd_many(coeffs));

    // exceptional coefficients at the 2r singular points, both special rays
    auto point_mults = [&](int i, bool onC) {
        const Int& d_i = S.d(i - 1);
        Int mA = dt.coeff(CurveId::A(i));
        Int mSec = onC ? dt.coeff(CurveId::C()) : dt.coeff(CurveId::E());
        Int q = mod_floor(onC ? -S.q(i - 1) : S.q(i - 1), d_i);
        Int qi = d_i == 1 ? Int(0) : inverse_mod(q, d_i);
        // ray adjacent to the fiber side and ray adjacent to the section side
        return std::pair<Int, Int>{adjacent_blowup_mult(d_i, q, mSec, mA),
                                   adjacent_blowup_mult(d_i, qi, mA, mSec)};
    };
    Int g1 = base, g2 = base, gboth = base;
    for (int i = 1; i <= S.r(); ++i) {
        if (S.d(i - 1) == 1) continue;  // no singular points on this fiber
        for (bool onC : {true, false}) {
            auto [e1, e2] = point_mults(i, onC);
            g1 = gcd_int(g1, e1);
            g2 = gcd_int(g2, e2);
            gboth = gcd_int(gboth, gcd_int(e1, e2));
        }
    }
    if (g1 != g2 || g1 != gboth)
        throw Error("BlowupChoiceDisagreement",
                    "the two special blow-up choices give different component counts");
    return g1;
}

}  // namespace rnfq
