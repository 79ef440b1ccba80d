#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "rnfq/arith.hpp"

namespace rnfq {

// Named irreducible curves on the surface S:
//   C, E   horizontal sections of the ruling,
//   A(i)   the special fiber through the i-th pair of singular points,
//   F(lb)  generic fibers of the ruling (distinct labels = distinct fibers),
//   G(lb)  generic fibers of the second fibration (class kappa*C).
struct CurveId {
    enum class Tag { C, E, A, F, G };
    Tag tag = Tag::C;
    int index = 0;       // for A
    std::string label;   // for F, G

    static CurveId C() { return {Tag::C, 0, {}}; }
    static CurveId E() { return {Tag::E, 0, {}}; }
    static CurveId A(int i) { return {Tag::A, i, {}}; }
    static CurveId F(std::string lb = "") { return {Tag::F, 0, std::move(lb)}; }
    static CurveId G(std::string lb = "") { return {Tag::G, 0, std::move(lb)}; }

    auto operator<=>(const CurveId&) const = default;

    std::string to_string() const;           // "C", "E", "A3", "F:lb", "G:lb"
    static CurveId parse(const std::string&);
};

// Formal Z-combination of named curves.  Zero multiplicities are not stored.
class Divisor {
public:
    Divisor() = default;
    static Divisor of(const CurveId& c, const Int& mult = 1);

    const std::map<CurveId, Int>& terms() const { return terms_; }
    Int coeff(const CurveId& c) const;
    void set(const CurveId& c, const Int& mult);
    void add(const CurveId& c, const Int& mult);
    bool is_zero() const { return terms_.empty(); }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    Divisor& operator*=(const Int& k);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Int& k, Divisor a) { return a *= k; }
    Divisor operator-() const;

    std::string to_string() const;

private:
    std::map<CurveId, Int> terms_;
};

// Normal rational surface determined by pairs (d_i, q_i), gcd(d_i,q_i)=1 and
// sum q_i/d_i integral.  d_i = 1 entries are allowed and describe plain fibers
// (no singular points on them); they arise in the semistable-reduction builds.
class FakeQuadric {
public:
    static FakeQuadric create(const std::vector<std::pair<Int, Int>>& pairs);

    int r() const { return static_cast<int>(pairs_.size()); }
    const Int& d(int i) const { return pairs_[i].first; }    // 0-based
    const Int& q(int i) const { return pairs_[i].second; }
    const std::vector<std::pair<Int, Int>>& pairs() const { return pairs_; }

    const Int& alpha() const { return alpha_; }
    const Int& kappa() const { return kappa_; }
    const Rat& chi_orb() const { return chi_orb_; }

    // genus of the kappa-fold orbifold cover curve: 1 - kappa*chi_orb/2
    Int genus_G() const;

    bool valid_curve(const CurveId& c) const;

private:
    std::vector<std::pair<Int, Int>> pairs_;
    Int alpha_;
    Int kappa_;
    Rat chi_orb_;
};

// Bilinear intersection pairing between generator curves.
Rat intersect(const FakeQuadric& S, const Divisor& D1, const Divisor& D2);

// K_S = -(C+E) + (r-2) F - sum A_i, with a reserved fiber label.
Divisor canonical_divisor(const FakeQuadric& S);

}  // namespace rnfq
