#include "rnfq/arith.hpp"

namespace rnfq {

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw Error("DivisionByZero", "floor_div by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    if (b == 0) throw Error("DivisionByZero", "mod_floor by zero");
    Int r;
    Int bb = abs(b);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), bb.get_mpz_t());
    return r;
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

std::pair<Int, Rat> floor_frac(const Rat& x) {
    Int fl = floor_rat(x);
    Rat fr = x - Rat(fl);
    return {fl, fr};
}

Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int gcd_many(const std::vector<Int>& xs) {
    Int g = 0;
    for (const auto& x : xs) g = gcd_int(g, x);
    return g;
}

Int lcm_many(const std::vector<Int>& xs) {
    if (xs.empty()) throw Error("EmptyLcm", "lcm of empty list");
    Int l = 1;
    for (const auto& x : xs) {
        if (x == 0) throw Error("ZeroInLcm", "lcm requires nonzero entries");
        l = lcm_int(l, x);
    }
    return l;
}

BezoutPair bezout(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw Error("BezoutZero", "bezout(0,0) undefined");
    // Iterative extended Euclid on |a|, |b|, signs restored at the end.
    Int ra = abs(a), rb = abs(b);
    Int old_r = ra, r = rb;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;  // both nonnegative here, truncation = floor
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    BezoutPair out;
    out.g = old_r;
    out.u = (a < 0) ? Int(-old_s) : old_s;
    out.v = (b < 0) ? Int(-old_t) : old_t;
    if (out.u * a + out.v * b != out.g) throw Error("Internal", "bezout identity");
    return out;
}

Int inverse_mod(const Int& a, const Int& m) {
    if (m < 1) throw Error("BadModulus", "inverse_mod requires m >= 1");
    if (m == 1) return 0;
    auto bz = bezout(mod_floor(a, m), m);
    if (bz.g != 1) throw Error("NotInvertible", "inverse_mod of non-unit");
    return mod_floor(bz.u, m);
}

std::optional<Congruence> crt_solve(const std::vector<Congruence>& congruences) {
    Int r = 0, m = 1;
    for (const auto& c : congruences) {
        if (c.modulus < 1) throw Error("BadModulus", "crt modulus must be >= 1");
        Int g = gcd_int(m, c.modulus);
        Int diff = c.residue - r;
        if (mod_floor(diff, g) != 0) return std::nullopt;
        Int m2 = c.modulus / g;
        Int step = (diff / g) * inverse_mod(m / g, m2);
        Int lcm = m * m2;
        r = mod_floor(r + m * mod_floor(step, m2), lcm);
        m = lcm;
    }
    return Congruence{r, m};
}

Int lcm_via_complements(const std::vector<Int>& ds, const std::vector<Int>& qs) {
    size_t r = ds.size();
    if (r == 0 || qs.size() != r)
        throw Error("BadInput", "lcm_via_complements needs matching nonempty lists");
    Rat sum = 0;
    Int prod = 1;
    for (size_t i = 0; i < r; ++i) {
        if (ds[i] == 0 || qs[i] == 0)
            throw Error("BadInput", "lcm_via_complements requires nonzero entries");
        if (gcd_int(ds[i], qs[i]) != 1)
            throw Error("NonCoprimePair", "lcm_via_complements requires gcd(q_i,d_i)=1");
        sum += make_rat(qs[i], ds[i]);
        prod *= ds[i];
    }
    if (sum.get_den() != 1)
        throw Error("NonIntegralSum", "lcm_via_complements requires integral sum q_i/d_i");
    Int num = 0, den = 0;
    for (size_t i = 0; i < r; ++i) {
        num = gcd_int(num, prod / ds[i]);
        for (size_t j = i + 1; j < r; ++j) den = gcd_int(den, prod / (ds[i] * ds[j]));
    }
    if (r == 1) return abs(ds[0]);
    if (den == 0 || mod_floor(num, den) != 0)
        throw Error("Internal", "lcm_via_complements divisibility");
    return num / den;
}

}  // namespace rnfq
