#include "rnfq/cycpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rnfq {

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            if (i != n / i) ds.push_back(n / i);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long moebius(long n) {
    long mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

void CycPoly::trim() {
    for (auto it = factors_.begin(); it != factors_.end();)
        it = (it->second == 0) ? factors_.erase(it) : std::next(it);
}

CycPoly CycPoly::factor(long n, long e) {
    if (n < 1) throw Error("BadCycFactor", "factor index must be >= 1");
    CycPoly p;
    if (e != 0) p.factors_[n] = e;
    return p;
}

CycPoly& CycPoly::operator*=(const CycPoly& o) {
    for (const auto& [n, e] : o.factors_) factors_[n] += e;
    trim();
    return *this;
}

CycPoly& CycPoly::operator/=(const CycPoly& o) {
    for (const auto& [n, e] : o.factors_) factors_[n] -= e;
    trim();
    return *this;
}

CycPoly CycPoly::pow(long e) const {
    CycPoly p;
    for (const auto& [n, x] : factors_) p.factors_[n] = x * e;
    p.trim();
    return p;
}

Int CycPoly::root_multiplicity(long e) const {
    Int m = 0;
    for (const auto& [n, x] : factors_)
        if (n % e == 0) m += x;
    return m;
}

Int CycPoly::root_multiplicity_at(long d, long l) const {
    long lr = ((l % d) + d) % d;
    long g = std::gcd(lr, d);
    if (g == 0) g = d;
    return root_multiplicity(d / g);
}

bool CycPoly::operator==(const CycPoly& o) const {
    std::set<long> orders;
    for (const auto& [n, e] : factors_)
        for (long dv : divisors_of(n)) orders.insert(dv);
    for (const auto& [n, e] : o.factors_)
        for (long dv : divisors_of(n)) orders.insert(dv);
    for (long ord : orders)
        if (root_multiplicity(ord) != o.root_multiplicity(ord)) return false;
    return true;
}

Int CycPoly::degree() const {
    Int d = 0;
    for (const auto& [n, e] : factors_) d += Int(n) * e;
    return d;
}

bool CycPoly::is_polynomial() const {
    for (const auto& [n, e] : factors_)
        for (long dv : divisors_of(n))
            if (root_multiplicity(dv) < 0) return false;
    return true;
}

std::vector<Int> CycPoly::coefficients() const {
    if (!is_polynomial()) throw Error("NotPolynomial", "expansion of a non-polynomial");
    std::vector<Int> c{1};
    // numerator factors first
    for (const auto& [n, e] : factors_) {
        for (long k = 0; k < e; ++k) {
            std::vector<Int> nx(c.size() + n, 0);
            for (size_t i = 0; i < c.size(); ++i) {
                nx[i + n] += c[i];
                nx[i] -= c[i];
            }
            c = std::move(nx);
        }
    }
    for (const auto& [n, e] : factors_) {
        for (long k = 0; k < -e; ++k) {
            // exact division by (t^n - 1)
            if (c.size() < static_cast<size_t>(n) + 1)
                throw Error("NotPolynomial", "division underflow in expansion");
            std::vector<Int> q(c.size() - n, 0);
            std::vector<Int> r = c;
            for (size_t i = r.size(); i-- > static_cast<size_t>(n);) {
                Int coef = r[i];
                if (coef == 0) continue;
                q[i - n] = coef;
                r[i] -= coef;
                r[i - n] += coef;
            }
            for (size_t i = 0; i < static_cast<size_t>(n); ++i)
                if (r[i] != 0) throw Error("NotPolynomial", "inexact division in expansion");
            c = std::move(q);
        }
    }
    return c;
}

CycPoly CycPoly::from_root_multiplicities(long d, const std::vector<Int>& mult) {
    if (d < 1 || mult.size() != static_cast<size_t>(d))
        throw Error("BadInput", "multiplicity vector must have length d");
    auto divs = divisors_of(d);
    // M[e] = multiplicity at the primitive e-th roots, taken from the canonical
    // representative l = d/e and checked for Galois-constancy on the whole class.
    std::map<long, Int> M;
    for (long e : divs) M[e] = mult[(d / e) % d];
    for (long l = 0; l < d; ++l) {
        long g = std::gcd(l, d);
        if (g == 0) g = d;
        if (M[d / g] != mult[l])
            throw Error("NonGaloisMultiplicities",
                        "root multiplicities are not constant on conjugacy classes");
    }
    CycPoly p;
    for (long n : divs) {
        Int c = 0;
        for (long e : divs)
            if (e % n == 0) c += M[e] * moebius(e / n);
        if (c != 0) {
            if (!c.fits_slong_p()) throw Error("Overflow", "exponent too large");
            p.factors_[n] = c.get_si();
        }
    }
    // paranoia: the assembled product must reproduce the input multiplicities
    for (long l = 0; l < d; ++l)
        if (p.root_multiplicity_at(d, l) != mult[l])
            throw Error("Internal", "root multiplicity assembly");
    return p;
}

std::string CycPoly::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        os << "(t^" << it->first << "-1)";
        if (it->second != 1) os << "^" << it->second;
    }
    return os.str();
}

}  // namespace rnfq
