#include "rnfq/classgroup.hpp"

#include <sstream>

namespace rnfq {

bool CanonicalClass::is_zero() const {
    if (c_D != 0 || f_hat != 0) return false;
    for (const auto& a : a_hat)
        if (a != 0) return false;
    return true;
}

Rat CanonicalClass::phi(const FakeQuadric& S) const {
    Rat p(f_hat);
    for (int i = 0; i < S.r(); ++i) p += make_rat(a_hat[i], S.d(i));
    return p;
}

Divisor CanonicalClass::to_divisor() const {
    Divisor D;
    D.add(CurveId::C(), c_D);
    for (size_t i = 0; i < a_hat.size(); ++i) D.add(CurveId::A(static_cast<int>(i) + 1), a_hat[i]);
    D.add(CurveId::F(), f_hat);
    return D;
}

std::string CanonicalClass::to_string() const {
    std::ostringstream os;
    os << "(" << c_D.get_str() << "; ";
    for (size_t i = 0; i < a_hat.size(); ++i) os << (i ? "," : "") << a_hat[i].get_str();
    os << "; " << f_hat.get_str() << ")";
    return os.str();
}

CanonicalClass canonical_form(const FakeQuadric& S, const Divisor& D) {
    // Collapse the presentation to coordinates (c, e, a_i, f):
    //   G ~ kappa*C (exact), every F-label contributes to f.
    Int c = 0, e = 0, f = 0;
    std::vector<Int> a(S.r(), 0);
    for (const auto& [cu, m] : D.terms()) {
        if (!S.valid_curve(cu)) throw Error("UnknownCurve", "divisor uses " + cu.to_string());
        switch (cu.tag) {
            case CurveId::Tag::C: c += m; break;
            case CurveId::Tag::E: e += m; break;
            case CurveId::Tag::A: a[cu.index - 1] += m; break;
            case CurveId::Tag::F: f += m; break;
            case CurveId::Tag::G: c += S.kappa() * m; break;
        }
    }
    CanonicalClass out;
    out.c_D = c + e;
    out.a_hat.resize(S.r());
    Rat a_sum = 0, ahat_sum = 0;
    for (int i = 0; i < S.r(); ++i) {
        out.a_hat[i] = mod_floor(a[i] + e * S.q(i), S.d(i));
        a_sum += make_rat(a[i], S.d(i));
        ahat_sum += make_rat(out.a_hat[i], S.d(i));
    }
    Rat fh = Rat(f) + a_sum - ahat_sum;
    if (fh.get_den() != 1) throw Error("Internal", "f_hat not integral");
    out.f_hat = fh.get_num();
    return out;
}

LatticePoint lattice_point(const FakeQuadric& S, const Divisor& D) {
    auto cf = canonical_form(S, D);
    return LatticePoint{cf.phi(S), cf.c_D};
}

GroupStructure group_structure(const FakeQuadric& S) {
    // d_hat_i = gcd of all i-fold products of the d_j, by the incremental rule
    // g[i] over prefixes: g[i] <- gcd(g[i], g[i-1]*d_j).
    int r = S.r();
    std::vector<Int> g(r + 1, 0);
    g[0] = 1;
    for (int j = 0; j < r; ++j)
        for (int i = std::min(j + 1, r); i >= 1; --i)
            g[i] = gcd_int(g[i], g[i - 1] * S.d(j));
    GroupStructure st;
    st.rank = 2;
    for (int i = 1; i <= r - 1; ++i) st.invariant_factors.push_back(g[i] / g[i - 1]);
    return st;
}

bool linearly_equivalent(const FakeQuadric& S, const Divisor& D1, const Divisor& D2) {
    return canonical_form(S, D1) == canonical_form(S, D2);
}

CanonicalClass class_add(const FakeQuadric& S, const CanonicalClass& a, const CanonicalClass& b) {
    return canonical_form(S, a.to_divisor() + b.to_divisor());
}

CanonicalClass class_scale(const FakeQuadric& S, const Int& k, const CanonicalClass& a) {
    return canonical_form(S, k * a.to_divisor());
}

std::optional<Int> torsion_order(const FakeQuadric& S, const Divisor& D) {
    auto cf = canonical_form(S, D);
    if (cf.c_D != 0 || cf.phi(S) != 0) return std::nullopt;
    // Group-order bound prod d_i; the actual order divides the torsion order.
    Int bound = 1;
    for (int i = 0; i < S.r(); ++i) bound *= S.d(i);
    CanonicalClass acc = cf;
    for (Int k = 1; k <= bound; ++k) {
        if (acc.is_zero()) return k;
        acc = class_add(S, acc, cf);
    }
    throw Error("Internal", "torsion order exceeded the group bound");
}

std::optional<HorizontalDecomposition> horizontal_membership(const FakeQuadric& S,
                                                             const Divisor& D) {
    auto cf = canonical_form(S, D);
    if (cf.phi(S) != 0) return std::nullopt;
    // Solve q_i x = a_hat_i (mod d_i); D ~ (c_D - x) C + x E when solvable.
    std::vector<Congruence> sys;
    for (int i = 0; i < S.r(); ++i)
        sys.push_back({mod_floor(cf.a_hat[i] * inverse_mod(S.q(i), S.d(i)), S.d(i)), S.d(i)});
    auto sol = crt_solve(sys);
    if (!sol) return std::nullopt;
    // When the input is already supported on C, E, G, echo its coefficients.
    bool horizontal_support = true;
    Int c_in = 0, e_in = 0;
    for (const auto& [cu, m] : D.terms()) {
        if (cu.tag == CurveId::Tag::C) c_in += m;
        else if (cu.tag == CurveId::Tag::E) e_in += m;
        else if (cu.tag == CurveId::Tag::G) c_in += S.kappa() * m;
        else horizontal_support = false;
    }
    if (horizontal_support) return HorizontalDecomposition{c_in, e_in, 0};
    Int x = sol->residue;
    return HorizontalDecomposition{cf.c_D - x, x, 0};
}

}  // namespace rnfq
