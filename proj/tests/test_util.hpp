#pragma once

#include <random>

#include "rnfq/leyomdin.hpp"
#include "rnfq/surfacecover.hpp"

namespace rnfq::testutil {

using Rng = std::mt19937_64;

inline long rnd(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Surfaces with sum q_i/d_i integral: r-1 free pairs with denominators
// dividing L, closed up by the pair that cancels the fractional part.
inline FakeQuadric random_surface(Rng& rng, int r_max = 4, long d_max = 8,
                                  bool allow_negative_q = false) {
    static const long lcms[] = {2, 3, 4, 5, 6, 8};
    for (;;) {
        long L = lcms[rnd(rng, 0, 5)];
        std::vector<long> divs;
        for (long d = 2; d <= L && d <= d_max; ++d)
            if (L % d == 0) divs.push_back(d);
        int r = static_cast<int>(rnd(rng, 2, r_max));
        std::vector<std::pair<Int, Int>> pairs;
        Rat frac = 0;
        for (int i = 0; i < r - 1; ++i) {
            long d = divs[rnd(rng, 0, static_cast<long>(divs.size()) - 1)];
            long q;
            do q = rnd(rng, 1, d - 1);
            while (std::gcd(q, d) != 1);
            pairs.push_back({d, q});
            frac += make_rat(q, d);
        }
        Rat rem = frac_part(-frac);
        Int den = rem.get_den();
        if (den < 2 || den > d_max) continue;
        pairs.push_back({den, rem.get_num()});
        if (allow_negative_q)
            for (auto& [d, q] : pairs)
                if (rnd(rng, 0, 3) == 0) q -= d;  // same surface data, shifted q
        try {
            return FakeQuadric::create(pairs);
        } catch (const Error&) {
            continue;
        }
    }
}

inline Divisor random_divisor(Rng& rng, const FakeQuadric& S, long bound = 6,
                              bool with_fibers = true) {
    Divisor D;
    auto coef = [&] { return Int(rnd(rng, -bound, bound)); };
    D.add(CurveId::C(), coef());
    D.add(CurveId::E(), coef());
    for (int i = 1; i <= S.r(); ++i) D.add(CurveId::A(i), coef());
    if (with_fibers) {
        D.add(CurveId::F("1"), coef());
        if (rnd(rng, 0, 1)) D.add(CurveId::F("2"), coef());
        D.add(CurveId::G("1"), coef());
        if (rnd(rng, 0, 1)) D.add(CurveId::G("2"), coef());
    }
    return D;
}

// Divisors linearly equivalent to zero, as exact combinations of the
// presentation relations.
inline Divisor random_principal(Rng& rng, const FakeQuadric& S, long bound = 2) {
    Divisor R;
    Int a = rnd(rng, -bound, bound);
    R.add(CurveId::E(), a);
    R.add(CurveId::C(), -a);
    for (int i = 1; i <= S.r(); ++i) R.add(CurveId::A(i), -a * S.q(i - 1));
    R.add(CurveId::F("1"), a * S.alpha());
    for (int i = 1; i <= S.r(); ++i) {
        Int b = rnd(rng, -bound, bound);
        R.add(CurveId::F("1"), b);
        R.add(CurveId::A(i), -b * S.d(i - 1));
    }
    for (int j = 1; j <= 2; ++j) {
        Int c = rnd(rng, -bound, bound);
        R.add(CurveId::G(std::to_string(j)), c);
        R.add(CurveId::C(), -c * S.kappa());
    }
    return R;
}

// Torsion divisor class representative: sum (c_i d_i + delta q_i) A_i - f F,
// with one shared delta so the coefficient sum stays integral.
inline Divisor random_torsion(Rng& rng, const FakeQuadric& S, long bound = 2) {
    Divisor t;
    Rat total = 0;
    Int delta = rnd(rng, -bound, bound);
    for (int i = 1; i <= S.r(); ++i) {
        Int a = Int(rnd(rng, -bound, bound)) * S.d(i - 1) + delta * S.q(i - 1);
        t.add(CurveId::A(i), a);
        total += make_rat(a, S.d(i - 1));
    }
    if (total.get_den() != 1) throw Error("Internal", "torsion generator");
    t.add(CurveId::F("1"), -total.get_num());
    return t;
}

enum class SpecKind { Vertical, Horizontal, Mixed };

inline CoverSpec random_cover_spec(Rng& rng, SpecKind kind, long d_max = 60) {
    auto S = random_surface(rng);
    Int d = rnd(rng, 2, d_max);
    if (kind == SpecKind::Vertical) {
        Divisor H;
        for (int i = 1; i <= S.r(); ++i) H.add(CurveId::A(i), rnd(rng, -2, 2));
        H.add(CurveId::F("1"), rnd(rng, -2, 2));
        Divisor D = d * Divisor(H);
        for (int i = 1; i <= S.r(); ++i) {
            Int b = rnd(rng, -2, 2);
            D.add(CurveId::F("1"), b);
            D.add(CurveId::A(i), -b * S.d(i - 1));
        }
        return CoverSpec{S, d, D, H, true};
    }
    if (kind == SpecKind::Horizontal) {
        // D = kappa c' C + kappa e' E + sum g_j G_j + d (gamma C + eta E),
        // H = gamma C + eta E + torsion of order dividing d.
        long s = rnd(rng, 0, 2);
        std::vector<Int> g;
        Int gsum = 0;
        for (long j = 0; j < s; ++j) {
            g.push_back(rnd(rng, -3, 3));
            gsum += g.back();
        }
        Int cp = rnd(rng, -3, 3);
        Int ep = -cp - gsum;
        Int gamma = rnd(rng, -2, 2), eta = rnd(rng, -2, 2);
        Divisor D;
        D.add(CurveId::C(), S.kappa() * cp + d * gamma);
        D.add(CurveId::E(), S.kappa() * ep + d * eta);
        for (long j = 0; j < s; ++j) D.add(CurveId::G(std::to_string(j + 1)), g[j]);
        Divisor H;
        H.add(CurveId::C(), gamma);
        H.add(CurveId::E(), eta);
        if (rnd(rng, 0, 1)) {
            Divisor t = random_torsion(rng, S);
            auto ord = torsion_order(S, t);
            Int k = *ord / gcd_int(*ord, d);
            H += k * t;  // torsion of order dividing d
        }
        return CoverSpec{S, d, D, H, true};
    }
    Divisor H = random_divisor(rng, S, 2);
    Divisor D = d * Divisor(H) + random_principal(rng, S) + random_principal(rng, S);
    return CoverSpec{S, d, D, H, true};
}

inline LYInput random_ly_input(Rng& rng) {
    for (;;) {
        LYInput in;
        in.w_x = rnd(rng, 1, 3);
        in.w_y = rnd(rng, 1, 3);
        if (gcd_int(in.w_x, in.w_y) != 1) continue;
        in.kappa = rnd(rng, 1, 3);
        in.s = rnd(rng, 1, 2);
        long r = rnd(rng, 1, 2);
        for (long i = 0; i < r; ++i) in.e.push_back(rnd(rng, 1, 3));
        in.a_x = rnd(rng, 0, 3);
        in.a_y = rnd(rng, 0, 3);
        in.m_x = rnd(rng, 0, 2);
        in.m_y = rnd(rng, 0, 2);
        in.m = rnd(rng, 1, 4);
        try {
            derive(in);
            if (derive(in).d > 160) continue;  // keep the eigen loops quick
            return in;
        } catch (const Error&) {
            continue;
        }
    }
}

// Smith normal form diagonal of a small integer matrix (row/col reduction).
inline std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> M) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    std::vector<Int> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        size_t pr = t, pc = t;
        bool found = false;
        for (size_t i = t; i < rows && !found; ++i)
            for (size_t j = t; j < cols && !found; ++j)
                if (M[i][j] != 0) { pr = i; pc = j; found = true; }
        if (!found) break;
        std::swap(M[t], M[pr]);
        for (auto& row : M) std::swap(row[t], row[pc]);
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i)
                while (M[i][t] != 0) {
                    Int q = floor_div(M[i][t], M[t][t]);
                    for (size_t j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                    if (M[i][t] != 0) {
                        std::swap(M[t], M[i]);
                        clean = false;
                    }
                }
            for (size_t j = t + 1; j < cols; ++j)
                while (M[t][j] != 0) {
                    Int q = floor_div(M[t][j], M[t][t]);
                    for (size_t i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
                    if (M[t][j] != 0) {
                        for (auto& row : M) std::swap(row[t], row[j]);
                        clean = false;
                    }
                }
            if (!clean) continue;
            // divisibility fix-up
            bool divides_all = true;
            for (size_t i = t + 1; i < rows && divides_all; ++i)
                for (size_t j = t + 1; j < cols && divides_all; ++j)
                    if (mod_floor(M[i][j], M[t][t]) != 0) {
                        for (size_t jj = t; jj < cols; ++jj) M[t][jj] += M[i][jj];
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        diag.push_back(abs(M[t][t]));
        ++t;
    }
    return diag;
}

}  // namespace rnfq::testutil
