#include "rnfq/surface.hpp"

#include <sstream>

namespace rnfq {

std::string CurveId::to_string() const {
    switch (tag) {
        case Tag::C: return "C";
        case Tag::E: return "E";
        case Tag::A: return "A" + std::to_string(index);
        case Tag::F: return label.empty() ? "F" : "F:" + label;
        case Tag::G: return label.empty() ? "G" : "G:" + label;
    }
    return "?";
}

CurveId CurveId::parse(const std::string& s) {
    if (s == "C") return C();
    if (s == "E") return E();
    if (s.size() >= 2 && s[0] == 'A') {
        for (size_t i = 1; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw Error("BadCurveId", "cannot parse curve id '" + s + "'");
        return A(std::stoi(s.substr(1)));
    }
    if (s[0] == 'F') {
        if (s.size() == 1) return F();
        if (s[1] == ':') return F(s.substr(2));
    }
    if (s[0] == 'G') {
        if (s.size() == 1) return G();
        if (s[1] == ':') return G(s.substr(2));
    }
    throw Error("BadCurveId", "cannot parse curve id '" + s + "'");
}

Divisor Divisor::of(const CurveId& c, const Int& mult) {
    Divisor d;
    d.add(c, mult);
    return d;
}

Int Divisor::coeff(const CurveId& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Int(0) : it->second;
}

void Divisor::set(const CurveId& c, const Int& mult) {
    if (mult == 0)
        terms_.erase(c);
    else
        terms_[c] = mult;
}

void Divisor::add(const CurveId& c, const Int& mult) { set(c, coeff(c) + mult); }

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [c, m] : o.terms_) add(c, m);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [c, m] : o.terms_) add(c, -m);
    return *this;
}

Divisor& Divisor::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, m] : terms_) m *= k;
    return *this;
}

Divisor Divisor::operator-() const {
    Divisor d = *this;
    d *= -1;
    return d;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, m] : terms_) {
        if (!first) os << (m > 0 ? " + " : " - ");
        else if (m < 0) os << "-";
        Int a = abs(m);
        if (a != 1) os << a.get_str() << "*";
        os << c.to_string();
        first = false;
    }
    return os.str();
}

FakeQuadric FakeQuadric::create(const std::vector<std::pair<Int, Int>>& pairs) {
    if (pairs.empty()) throw Error("EmptySurface", "at least one (d,q) pair required");
    FakeQuadric S;
    Rat alpha = 0;
    std::vector<Int> ds;
    for (const auto& [d, q] : pairs) {
        if (d < 1) throw Error("InvalidOrder", "d_i must be >= 1");
        if (gcd_int(d, q) != 1)
            throw Error("NonCoprimePair", "gcd(d_i, q_i) must be 1");
        alpha += make_rat(q, d);
        ds.push_back(d);
    }
    if (alpha.get_den() != 1)
        throw Error("NonIntegralAlpha", "sum q_i/d_i must be an integer");
    S.pairs_ = pairs;
    S.alpha_ = alpha.get_num();
    S.kappa_ = lcm_many(ds);
    S.chi_orb_ = 2;
    for (const auto& [d, q] : pairs) S.chi_orb_ -= Rat(1) - make_rat(1, d);
    return S;
}

Int FakeQuadric::genus_G() const {
    Rat chi = Rat(kappa_) * chi_orb_;  // Euler characteristic of the cover curve
    if (chi.get_den() != 1 || mod_floor(chi.get_num(), 2) != 0)
        throw Error("Internal", "kappa*chi_orb must be an even integer");
    return 1 - chi.get_num() / 2;
}

bool FakeQuadric::valid_curve(const CurveId& c) const {
    if (c.tag == CurveId::Tag::A) return c.index >= 1 && c.index <= r();
    return true;
}

namespace {

// Pairing between single generator curves; labels only decide coincidence.
Rat pair_curves(const FakeQuadric& S, const CurveId& a, const CurveId& b) {
    using T = CurveId::Tag;
    auto tags = std::minmax(a.tag, b.tag);
    switch (tags.first) {
        case T::C:
            if (tags.second == T::C) return 0;                 // C.C
            if (tags.second == T::E) return 0;                 // C.E
            if (tags.second == T::A)
                return make_rat(1, S.d((a.tag == T::A ? a : b).index - 1));
            if (tags.second == T::F) return 1;                 // C.F
            return 0;                                          // C.G
        case T::E:
            if (tags.second == T::E) return 0;
            if (tags.second == T::A)
                return make_rat(1, S.d((a.tag == T::A ? a : b).index - 1));
            if (tags.second == T::F) return 1;
            return 0;                                          // E.G
        case T::A:
            if (tags.second == T::A) return 0;                 // fibers
            if (tags.second == T::F) return 0;
            return make_rat(S.kappa(), S.d((a.tag == T::A ? a : b).index - 1));  // A.G
        case T::F:
            if (tags.second == T::F) return 0;
            return Rat(S.kappa());                             // F.G
        case T::G:
            return 0;                                          // G.G
    }
    return 0;
}

}  // namespace

Rat intersect(const FakeQuadric& S, const Divisor& D1, const Divisor& D2) {
    Rat total = 0;
    for (const auto& [c1, m1] : D1.terms()) {
        if (!S.valid_curve(c1)) throw Error("UnknownCurve", "divisor uses " + c1.to_string());
        for (const auto& [c2, m2] : D2.terms()) {
            if (!S.valid_curve(c2)) throw Error("UnknownCurve", "divisor uses " + c2.to_string());
            total += Rat(m1) * Rat(m2) * pair_curves(S, c1, c2);
        }
    }
    return total;
}

Divisor canonical_divisor(const FakeQuadric& S) {
    Divisor K;
    K.add(CurveId::C(), -1);
    K.add(CurveId::E(), -1);
    K.add(CurveId::F("canonical"), Int(S.r()) - 2);
    for (int i = 1; i <= S.r(); ++i) K.add(CurveId::A(i), -1);
    return K;
}

}  // namespace rnfq
