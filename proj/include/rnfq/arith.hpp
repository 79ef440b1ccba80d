#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rnfq {

using Int = mpz_class;
using Rat = mpq_class;

// Library-level error with a machine-readable code, surfaced verbatim by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("ZeroDenominator", "rational with denominator 0");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Floor division, valid for negative operands (gmp's / truncates).
Int floor_div(const Int& a, const Int& b);
// a mod b in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

Int floor_rat(const Rat& x);
// x = floor + frac with 0 <= frac < 1.
std::pair<Int, Rat> floor_frac(const Rat& x);
inline Rat frac_part(const Rat& x) { return floor_frac(x).second; }
Int ceil_rat(const Rat& x);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// gcd of a list; empty list gives 0.
Int gcd_many(const std::vector<Int>& xs);
// lcm of a nonempty list of nonzero integers.
Int lcm_many(const std::vector<Int>& xs);

struct BezoutPair {
    Int u;
    Int v;
    Int g;  // u*a + v*b = g = gcd(a,b) >= 0
};

// Classical extended Euclid; deterministic output, |u| <= |b|/(2g) when possible.
BezoutPair bezout(const Int& a, const Int& b);

// Inverse of a mod m (m >= 1); requires gcd(a,m)=1.
Int inverse_mod(const Int& a, const Int& m);

struct Congruence {
    Int residue;
    Int modulus;  // >= 1
};

// Solution class of x = r_i (mod m_i); nullopt when incompatible.
std::optional<Congruence> crt_solve(const std::vector<Congruence>& congruences);

// gcd({prod(d)/d_i}) / gcd({prod(d)/(d_i d_j)}).  Under the hypothesis
// gcd(q_i,d_i)=1, sum q_i/d_i integral, this equals lcm(d_1..d_r).
Int lcm_via_complements(const std::vector<Int>& ds, const std::vector<Int>& qs);

}  // namespace rnfq
