#include "rnfq/leyomdin.hpp"

namespace rnfq {

LYDerived derive(const LYInput& in) {
    if (in.w_x < 1 || in.w_y < 1) throw Error("BadWeights", "weights must be positive");
    if (gcd_int(in.w_x, in.w_y) != 1) throw Error("BadWeights", "gcd(w_x, w_y) must be 1");
    if (in.a_x < 0 || in.a_y < 0) throw Error("BadExponents", "a_x, a_y must be >= 0");
    if (in.kappa < 1 || in.s < 1 || in.m < 1)
        throw Error("BadInput", "kappa, s, m must be positive");
    if (in.m_x < 0 || in.m_y < 0) throw Error("BadExponents", "m_x, m_y must be >= 0");
    Int e_total = 0;
    std::vector<Int> gcd_list{in.kappa, in.a_x, in.a_y};
    for (const auto& ei : in.e) {
        if (ei < 1) throw Error("BadExponents", "e_i must be positive");
        e_total += ei;
        gcd_list.push_back(ei);
    }
    if (gcd_many(gcd_list) != 1)
        throw Error("NotPrimitive", "gcd(kappa, a_x, a_y, e_i) must be 1");

    LYDerived out;
    out.nu0 = in.w_x * in.a_x + in.w_y * in.a_y + in.w_x * in.w_y * e_total;
    if (mod_floor(out.nu0, in.kappa) != 0)
        throw Error("NonIntegralWeight", "kappa must divide w_x a_x + w_y a_y + w_x w_y e");
    out.w_z = out.nu0 / in.kappa;
    out.m_omega = in.w_x * in.m_x + in.w_y * in.m_y + out.w_z;
    if (out.m_omega < 1) throw Error("BadInput", "m_omega must be positive");
    auto bz = bezout(in.w_x, in.w_y);
    out.u = bz.u;
    out.v = bz.v;
    out.c = out.v * in.m_x - out.u * in.m_y;
    out.e0 = in.kappa * out.c + out.v * in.a_x - out.u * in.a_y - out.u * in.w_x * e_total;
    out.e_inf = -in.kappa * out.c + out.u * in.a_y - out.v * in.a_x - out.v * in.w_y * e_total;
    if (out.e0 + out.e_inf != -e_total)
        throw Error("Internal", "e0 + e_inf must equal -e");
    out.delta = in.m + in.s * in.kappa;
    std::vector<Int> dw{out.m_omega, out.e0, out.e_inf};
    for (const auto& ei : in.e) dw.push_back(ei);
    out.delta_omega = gcd_many(dw);
    if (gcd_int(out.delta_omega, in.kappa) != 1)
        throw Error("Internal", "gcd(delta_omega, kappa) must be 1");
    auto bz2 = bezout(out.delta_omega, in.kappa);
    out.beta1 = bz2.u;
    out.beta2 = bz2.v;
    out.d = out.m_omega * out.delta;
    out.m_hat = out.beta2 * out.delta - in.s;
    return out;
}

LYOutput build_surface(const LYInput& in) {
    LYOutput out;
    out.derived = derive(in);
    const auto& dv = out.derived;

    // index set (0, 1..r, inf) with d_i = kappa/gcd(kappa,e_i), q_i = e_i/gcd.
    std::vector<Int> evals{dv.e0};
    for (const auto& ei : in.e) evals.push_back(ei);
    evals.push_back(dv.e_inf);
    std::vector<std::pair<Int, Int>> pairs;
    for (const auto& ei : evals) {
        Int g = gcd_int(in.kappa, ei);
        pairs.push_back({in.kappa / g, ei / g});
    }
    out.quadric = FakeQuadric::create(pairs);
    if (out.quadric.alpha() != 0) throw Error("AlphaNotZero", "alpha must vanish");
    if (out.quadric.kappa() != in.kappa)
        throw Error("LcmMismatch", "lcm of the d_i must equal kappa");

    // D_S = delta sum q_i A_i + m C - delta E + sum_j G_j; C plays the role
    // of the axis curve of the leading form.
    Divisor D;
    for (size_t i = 0; i < pairs.size(); ++i)
        D.add(CurveId::A(static_cast<int>(i) + 1), dv.delta * pairs[i].second);
    D.add(CurveId::C(), in.m);
    D.add(CurveId::E(), -dv.delta);
    for (Int j = 1; j <= in.s; ++j) D.add(CurveId::G(j.get_str()), 1);
    out.D_S = D;

    // Reduced horizontal cover (delta*delta_omega, D_h, H_h) carrying the
    // whole monodromy action; H_h = beta1 (C - E).
    Divisor Dh;
    Dh.add(CurveId::C(), in.m);
    Dh.add(CurveId::E(), -dv.delta);
    for (Int j = 1; j <= in.s; ++j) Dh.add(CurveId::G(j.get_str()), 1);
    Divisor Hh;
    Hh.add(CurveId::C(), dv.beta1);
    Hh.add(CurveId::E(), -dv.beta1);
    out.cover = CoverSpec{out.quadric, dv.delta * dv.delta_omega, Dh, Hh, true};
    validate(out.cover);

    out.charpoly = monodromy_charpoly(in);
    return out;
}

CycPoly monodromy_charpoly(const LYInput& in) {
    auto dv = derive(in);
    Int dd = dv.delta * dv.delta_omega;
    long s = static_cast<long>(in.s.get_si());
    CycPoly p = CycPoly::factor(1, 2 - s) * CycPoly::factor(dd.get_si(), s);
    p /= CycPoly::factor(dv.delta.get_si(), 1);
    p /= CycPoly::factor(gcd_int(in.m, in.s * dv.delta_omega).get_si(), 1);
    if (!p.is_polynomial())
        throw Error("Internal", "monodromy charpoly must be a polynomial");
    return p;
}

P1Cover primitive_vertical(const LYInput& in) {
    auto dv = derive(in);
    std::vector<BranchPoint> branch;
    branch.push_back({"0", dv.m_hat});
    for (Int j = 1; j <= in.s; ++j) branch.push_back({"p" + j.get_str(), 1});
    branch.push_back({"inf", -(in.s + dv.m_hat)});
    return P1Cover::create(dv.delta * dv.delta_omega, std::move(branch));
}

}  // namespace rnfq
