#include "rnfq/cohomology.hpp"

#include <numeric>

namespace rnfq {

std::string region_name(Region r) {
    switch (r) {
        case Region::H0Only: return "H0only";
        case Region::H1Only: return "H1only";
        case Region::H2Only: return "H2only";
        case Region::AllZero: return "AllZero";
        case Region::Threshold: return "Threshold";
    }
    return "?";
}

Int b_term(const FakeQuadric& S, const CanonicalClass& cls, const Int& j) {
    Rat b = Rat(1) + cls.phi(S);
    for (int i = 0; i < S.r(); ++i)
        b -= frac_part(make_rat(cls.a_hat[i] + (j - cls.c_D) * S.q(i), S.d(i)));
    if (b.get_den() != 1) throw Error("Internal", "b_j not integral");
    return b.get_num();
}

namespace {

Int h0_of_class(const FakeQuadric& S, const CanonicalClass& cls) {
    if (cls.c_D < 0) return 0;
    Int total = 0;
    for (Int j = 0; j <= cls.c_D; ++j) {
        Int b = b_term(S, cls, j);
        if (b > 0) total += b;
    }
    return total;
}

CanonicalClass dual_class(const FakeQuadric& S, const Divisor& D) {
    return canonical_form(S, canonical_divisor(S) - D);
}

Int chi_of(const FakeQuadric& S, const CanonicalClass& cls, const CanonicalClass& dual) {
    if (cls.c_D >= 0) {
        Int t = 0;
        for (Int j = 0; j <= cls.c_D; ++j) t += b_term(S, cls, j);
        return t;
    }
    if (cls.c_D == -1) return 0;
    Int t = 0;
    for (Int j = 0; j <= -(cls.c_D + 2); ++j) t += b_term(S, dual, j);
    return t;
}

}  // namespace

Int h0(const FakeQuadric& S, const Divisor& D) { return h0_of_class(S, canonical_form(S, D)); }

Int h2(const FakeQuadric& S, const Divisor& D) { return h0_of_class(S, dual_class(S, D)); }

Int chi(const FakeQuadric& S, const Divisor& D) {
    return chi_of(S, canonical_form(S, D), dual_class(S, D));
}

BettiTriple betti(const FakeQuadric& S, const Divisor& D) {
    auto cls = canonical_form(S, D);
    auto dual = dual_class(S, D);
    BettiTriple t;
    t.h0 = h0_of_class(S, cls);
    t.h2 = h0_of_class(S, dual);
    t.chi = chi_of(S, cls, dual);
    t.h1 = t.h0 + t.h2 - t.chi;
    if (t.h1 < 0) throw Error("Internal", "negative h1");
    return t;
}

Region region(const FakeQuadric& S, const Divisor& D) {
    auto l = lattice_point(S, D);
    Rat chiorb = S.chi_orb();
    if (l.c == -1) return Region::AllZero;
    if (l.phi > -chiorb && l.c > -2) return Region::H0Only;
    if (l.phi < 0 && l.c < 0) return Region::H2Only;
    if ((l.phi < 0 && l.c >= 0) || (l.phi > -chiorb && l.c <= -2)) return Region::H1Only;
    return Region::Threshold;
}

Rat combined_correction(const Int& d, const Int& q, const Int& n, const Int& m) {
    if (m < -1) throw Error("BadInput", "combined_correction requires m >= -1");
    if (d < 1) throw Error("BadInput", "combined_correction requires d >= 1");
    Rat acc = 0;
    for (Int j = 0; j <= m; ++j) acc -= frac_part(make_rat(n + (j - m) * q, d));
    acc += Rat(m) * make_rat(d - 1, 2 * d);
    return acc;
}

namespace {

// Exact rank of a rational matrix by fraction-free elimination.
Int matrix_rank(std::vector<std::vector<Rat>>& M) {
    size_t rows = M.size();
    if (rows == 0) return 0;
    size_t cols = M[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        Rat inv = Rat(1) / M[rank][col];
        for (size_t c = col; c < cols; ++c) M[rank][c] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank || M[rr][col] == 0) continue;
            Rat f = M[rr][col];
            for (size_t c = col; c < cols; ++c) M[rr][c] -= f * M[rank][c];
        }
        ++rank;
    }
    return Int(static_cast<long>(rank));
}

}  // namespace

Int h0_oracle(const FakeQuadric& S, const Divisor& D, const Int& degree_cap) {
    if (S.alpha() < 1)
        throw Error("OracleDomain", "section model requires alpha >= 1");
    for (int i = 0; i < S.r(); ++i)
        if (S.q(i) < 1 || S.q(i) >= S.d(i))
            throw Error("OracleDomain", "section model requires 1 <= q_i < d_i");
    auto cls = canonical_form(S, D);
    Int alpha = S.alpha();
    Int deg = cls.c_D * alpha + cls.f_hat;
    if (deg > degree_cap) throw Error("OracleDegree", "degree bound exceeded");
    if (deg < 0 || cls.c_D < 0) return 0;

    // Monomials x^i y^j z^k of weighted degree deg with z-order k <= c_D
    // (the condition ord H(x,y,1) >= f_hat).  j is determined by (i,k).
    struct Mono { long i, k; };
    std::vector<Mono> monos;
    long cD = static_cast<long>(cls.c_D.get_si());
    long degl = static_cast<long>(deg.get_si());
    long alphal = static_cast<long>(alpha.get_si());
    for (long k = 0; k <= cD; ++k) {
        long rest = degl - alphal * k;
        if (rest < 0) break;
        for (long i = 0; i <= rest; ++i) monos.push_back({i, k});
    }

    // Vanishing orders at the r marked fibers, with generic centers
    // gamma_i = 1, 2, ..., r: substitute x -> x^{d_i} + gamma_i, y -> 1,
    // z -> z^{q_i}; every (x,z)-coefficient of total degree < B_i vanishes.
    std::vector<std::vector<Rat>> rows;
    for (int idx = 0; idx < S.r(); ++idx) {
        Int B = cls.c_D * S.q(idx) - cls.a_hat[idx];
        if (B <= 0) continue;
        long d_i = static_cast<long>(S.d(idx).get_si());
        long q_i = static_cast<long>(S.q(idx).get_si());
        Int gamma = idx + 1;
        for (long k = 0; k <= cD; ++k) {
            for (long t = 0;; ++t) {
                if (Int(d_i) * t + Int(q_i) * k >= B) break;
                std::vector<Rat> row(monos.size(), Rat(0));
                bool nonzero = false;
                for (size_t mi = 0; mi < monos.size(); ++mi) {
                    if (monos[mi].k != k || monos[mi].i < t) continue;
                    // coefficient of x^{d_i t} in (x^{d_i} + gamma)^i
                    Int binom;
                    mpz_bin_uiui(binom.get_mpz_t(), monos[mi].i, t);
                    Int pw;
                    mpz_pow_ui(pw.get_mpz_t(), gamma.get_mpz_t(), monos[mi].i - t);
                    row[mi] = Rat(binom * pw);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    Int rank = matrix_rank(rows);
    return Int(static_cast<long>(monos.size())) - rank;
}

}  // namespace rnfq
