#include "fdr/ratfunc.hpp"

namespace fdr {

RatFuncQT::RatFuncQT(const mpq_class& c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {
    reduce();
}

RatFuncQT::RatFuncQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncQT: zero denominator");
    reduce();
}

void RatFuncQT::reduce() {
    if (num_.is_zero()) {
        den_ = PolyQT(1);
        return;
    }
    if (!den_.is_one()) {
        PolyQT g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFuncQT RatFuncQT::operator-() const {
    RatFuncQT r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

namespace {

// Knuth's reduced-fraction addition: with gcd(a,b) = gcd(c,d) = 1 and b, d
// positive-leading, the result lands already reduced, and the only gcds taken
// are gcd(b,d) and a gcd against that (small) factor — never against the full
// cross product.  Positive-leading is preserved because lex order is
// multiplicative, so leading coefficients of products and exact quotients of
// positive-leading polynomials stay positive.
void reduced_add(PolyQT& a, PolyQT& b, const PolyQT& c, const PolyQT& d, bool subtract) {
    if (b.is_one() && d.is_one()) {
        if (subtract) a -= c;
        else a += c;
        return;
    }
    PolyQT g1 = poly_gcd(b, d);
    PolyQT b1 = g1.is_one() ? b : exact_div(b, g1);
    PolyQT d1 = g1.is_one() ? d : exact_div(d, g1);
    PolyQT s = a * d1;
    PolyQT cross = c * b1;
    if (subtract) s -= cross;
    else s += cross;
    if (s.is_zero()) {
        a = PolyQT();
        b = PolyQT(1);
        return;
    }
    if (g1.is_one()) {
        a = std::move(s);
        b = b1 * d;
        return;
    }
    PolyQT g2 = poly_gcd(s, g1);
    if (g2.is_one()) {
        a = std::move(s);
        b = b1 * d;
    } else {
        a = exact_div(s, g2);
        b = b1 * exact_div(d, g2);
    }
}

}  // namespace

RatFuncQT& RatFuncQT::operator+=(const RatFuncQT& o) {
    reduced_add(num_, den_, o.num_, o.den_, false);
    return *this;
}

RatFuncQT& RatFuncQT::operator-=(const RatFuncQT& o) {
    reduced_add(num_, den_, o.num_, o.den_, true);
    return *this;
}

RatFuncQT RatFuncQT::operator*(const RatFuncQT& o) const {
    RatFuncQT r;
    if (num_.is_zero() || o.num_.is_zero()) return r;
    if (den_.is_one() && o.den_.is_one()) {
        r.num_ = num_ * o.num_;
        return r;
    }
    // Cross-cancel first; products of reduced pairs then need no further gcd.
    PolyQT g1 = poly_gcd(num_, o.den_);
    PolyQT g2 = poly_gcd(o.num_, den_);
    r.num_ = (g1.is_one() ? num_ : exact_div(num_, g1)) *
             (g2.is_one() ? o.num_ : exact_div(o.num_, g2));
    r.den_ = (g2.is_one() ? den_ : exact_div(den_, g2)) *
             (g1.is_one() ? o.den_ : exact_div(o.den_, g1));
    return r;
}

RatFuncQT RatFuncQT::operator/(const RatFuncQT& o) const {
    if (o.is_zero()) throw std::domain_error("RatFuncQT: division by zero");
    RatFuncQT inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.terms().rbegin()->second < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this * inv;
}

RatFuncQT RatFuncQT::pow(int e) const {
    if (e < 0) return RatFuncQT(1) / this->pow(-e);
    RatFuncQT r(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatFuncQT RatFuncQT::at_t0() const {
    PolyQT d0 = den_.at_t0();
    if (d0.is_zero())
        throw PoleError("RatFuncQT::at_t0: pole at t = 0", num_.to_string(), den_.to_string());
    return RatFuncQT(num_.at_t0(), std::move(d0));
}

RatFuncQT RatFuncQT::at_q0() const {
    PolyQT d0 = den_.at_q0();
    if (d0.is_zero())
        throw PoleError("RatFuncQT::at_q0: pole at q = 0", num_.to_string(), den_.to_string());
    return RatFuncQT(num_.at_q0(), std::move(d0));
}

RatFuncQT RatFuncQT::swap_qt() const {
    return RatFuncQT(num_.swap_qt(), den_.swap_qt());
}

mpq_class RatFuncQT::eval(const mpq_class& qv, const mpq_class& tv) const {
    mpq_class d = den_.eval(qv, tv);
    if (d == 0)
        throw PoleError("RatFuncQT::eval: zero denominator", num_.to_string(), den_.to_string());
    return num_.eval(qv, tv) / d;
}

std::string RatFuncQT::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace fdr
