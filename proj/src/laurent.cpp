#include "qpascal/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qpascal {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    if (neg) {
        if (r == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        r = Rational(1) / r;
    }
    return r;
}

LaurentPoly::LaurentPoly(const Rational& c) { set(0, c); }
LaurentPoly::LaurentPoly(long c) { set(0, Rational(c)); }

LaurentPoly LaurentPoly::term(const Rational& c, long e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
}

LaurentPoly LaurentPoly::v_power(long e) { return term(Rational(1), e); }

void LaurentPoly::set(long e, const Rational& c) {
    if (c != 0) coeffs_[e] = c;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::min_exp() const { return coeffs_.begin()->first; }
long LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }

Rational LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::all_exponents_even() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            long e = ea + eb;
            auto it = out.coeffs_.find(e);
            if (it == out.coeffs_.end()) {
                Rational c = ca * cb;
                if (c != 0) out.coeffs_.emplace(e, c);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

void LaurentPoly::scale(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return;
    }
    for (auto& [e, v] : coeffs_) v *= c;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    if (k == 0) return *this;
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::conjugated() const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(-e, c);
    return out;
}

Rational LaurentPoly::evaluate(const Rational& v0) const {
    if (!is_zero() && min_exp() < 0 && v0 == 0)
        throw std::domain_error("LaurentPoly::evaluate: negative exponent at v = 0");
    Rational acc(0);
    for (const auto& [e, c] : coeffs_) acc += c * rational_pow(v0, e);
    return acc;
}

namespace {

// Dense integer polynomial helpers for the gcd kernel.  Index 0 is the
// constant term; the vectors are kept with a nonzero leading coefficient.

using ZVec = std::vector<Integer>;

void z_trim(ZVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer z_content(const ZVec& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void z_divide_scalar(ZVec& p, const Integer& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

void z_make_primitive(ZVec& p) {
    z_trim(p);
    if (p.empty()) return;
    Integer g = z_content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1) z_divide_scalar(p, g);
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b not required).
ZVec z_pseudo_rem(ZVec a, const ZVec& b) {
    long db = static_cast<long>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (long k = 0; k <= db; ++k) a[da - db + k] -= la * b[k];
        z_trim(a);
    }
    return a;
}

// Dense integer form of p with the Laurent offset cleared, denominators
// removed and content stripped.
ZVec to_primitive_zvec(const LaurentPoly& p) {
    ZVec out;
    if (p.is_zero()) return out;
    long off = p.min_exp();
    out.assign(static_cast<size_t>(p.max_exp() - off + 1), Integer(0));
    Integer den(1);
    for (const auto& [e, c] : p.coefficients())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.coefficients()) {
        Rational scaled = c * Rational(den);
        out[static_cast<size_t>(e - off)] = Integer(scaled.get_num());
    }
    z_make_primitive(out);
    return out;
}

LaurentPoly from_zvec(const ZVec& p) {
    LaurentPoly out;
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0) out += LaurentPoly::term(Rational(p[k]), static_cast<long>(k));
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    ZVec pa = to_primitive_zvec(a);
    ZVec pb = to_primitive_zvec(b);
    if (pa.empty()) return from_zvec(pb);
    if (pb.empty()) return from_zvec(pa);
    // primitive Euclidean remainder sequence
    while (!pb.empty()) {
        ZVec r = z_pseudo_rem(pa, pb);
        z_make_primitive(r);
        pa = std::move(pb);
        pb = std::move(r);
    }
    return from_zvec(pa);
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("LaurentPoly::exact_divide: division by zero");
    if (a.is_zero()) return LaurentPoly();
    long shift = a.min_exp() - b.min_exp();
    // dense rational long division on the offset-cleared polynomials
    long da = a.max_exp() - a.min_exp();
    long db = b.max_exp() - b.min_exp();
    if (da < db) throw std::domain_error("LaurentPoly::exact_divide: not divisible");
    std::vector<Rational> ra(static_cast<size_t>(da + 1)), rb(static_cast<size_t>(db + 1));
    for (const auto& [e, c] : a.coefficients()) ra[static_cast<size_t>(e - a.min_exp())] = c;
    for (const auto& [e, c] : b.coefficients()) rb[static_cast<size_t>(e - b.min_exp())] = c;
    std::vector<Rational> q(static_cast<size_t>(da - db + 1));
    for (long k = da - db; k >= 0; --k) {
        Rational f = ra[static_cast<size_t>(k + db)] / rb[static_cast<size_t>(db)];
        q[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (long j = 0; j <= db; ++j) ra[static_cast<size_t>(k + j)] -= f * rb[static_cast<size_t>(j)];
    }
    for (const auto& c : ra)
        if (c != 0) throw std::domain_error("LaurentPoly::exact_divide: not divisible");
    LaurentPoly out;
    for (size_t k = 0; k < q.size(); ++k)
        if (q[k] != 0) out += term(q[k], static_cast<long>(k) + shift);
    return out;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const long e = it->first;
        const Rational& c = it->second;
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string power;
        if (e != 0) {
            if (e == 2) {
                power = "q";
            } else if (e % 2 == 0) {
                power = "q^" + std::to_string(e / 2);
            } else {
                power = "q^(" + std::to_string(e) + "/2)";
            }
        }
        if (power.empty()) {
            os << rational_str(mag);
        } else if (mag == 1) {
            os << power;
        } else {
            os << rational_str(mag) << "*" << power;
        }
    }
    return os.str();
}

}  // namespace qpascal
