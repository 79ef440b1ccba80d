#pragma once

#include <map>
#include <string>
#include <vector>

#include "rnfq/arith.hpp"

namespace rnfq {

// Formal product prod_n (t^n - 1)^{e_n}, e_n in Z.  The representation with
// zero exponents removed is unique for a given rational function, but equality
// is checked through root multiplicities to stay robust against alternative
// construction paths.
class CycPoly {
public:
    CycPoly() = default;  // the constant 1

    static CycPoly one() { return CycPoly(); }
    // (t^n - 1)^e
    static CycPoly factor(long n, long e);

    // Builds the polynomial with multiplicity mult[l] at the d-th root of
    // unity zeta_d^l.  mult must be constant on the classes gcd(l,d)=const;
    // throws otherwise.
    static CycPoly from_root_multiplicities(long d, const std::vector<Int>& mult);

    CycPoly& operator*=(const CycPoly& o);
    CycPoly& operator/=(const CycPoly& o);
    friend CycPoly operator*(CycPoly a, const CycPoly& b) { return a *= b; }
    friend CycPoly operator/(CycPoly a, const CycPoly& b) { return a /= b; }
    CycPoly pow(long e) const;

    bool operator==(const CycPoly& o) const;
    bool operator!=(const CycPoly& o) const { return !(*this == o); }

    // Multiplicity of the primitive e-th roots of unity as roots/poles.
    Int root_multiplicity(long e) const;
    // Multiplicity of zeta_d^l for this polynomial viewed at level d.
    Int root_multiplicity_at(long d, long l) const;

    Int degree() const;  // sum n*e_n (may be negative if not a polynomial)
    bool is_one() const { return factors_.empty(); }
    // True iff all root multiplicities are >= 0, i.e. a genuine polynomial.
    bool is_polynomial() const;

    // Coefficient list c_0..c_deg; requires is_polynomial().
    std::vector<Int> coefficients() const;

    const std::map<long, long>& factors() const { return factors_; }

    std::string to_string() const;  // e.g. "(t^15-1)(t^3-1)^-1"

private:
    std::map<long, long> factors_;
    void trim();
};

}  // namespace rnfq
