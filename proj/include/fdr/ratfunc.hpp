#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace fdr {

/**
 * Sparse polynomial in Z[q,t].  Terms are keyed by (deg_q, deg_t) in ascending
 * lexicographic order; zero coefficients are never stored, so the map is a
 * canonical form and operator== is structural.  The lex-largest key is the
 * leading term; lex order is multiplicative, which exact_div relies on.
 */
class PolyQT {
public:
    using Key = std::pair<int, int>;  // (deg_q, deg_t)
    using TermMap = std::map<Key, mpz_class>;

    PolyQT() = default;
    PolyQT(long c) { if (c != 0) terms_[{0, 0}] = c; }
    PolyQT(const mpz_class& c) { if (c != 0) terms_[{0, 0}] = c; }

    static PolyQT monomial(mpz_class c, int dq, int dt);
    static PolyQT q() { return monomial(1, 1, 0); }
    static PolyQT t() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    int deg_q() const;  // -1 for the zero polynomial
    int deg_t() const;

    PolyQT operator-() const;
    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    PolyQT operator*(const PolyQT& o) const;
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    bool operator==(const PolyQT& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyQT& o) const { return terms_ != o.terms_; }

    PolyQT pow(int e) const;

    /// Coefficient of q^dq t^dt (zero if absent).
    mpz_class coeff(int dq, int dt) const;

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;

    /// Drop every term with deg_t > 0 (substitute t = 0); likewise for q.
    PolyQT at_t0() const;
    PolyQT at_q0() const;
    PolyQT swap_qt() const;

    mpq_class eval(const mpq_class& qv, const mpq_class& tv) const;

    /// Terms in ascending lex order, e.g. "1 - q*t + 2*t^2"; "0" when zero.
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Polynomial gcd in Z[q,t] via a primitive PRS in q over Z[t]; result has a
/// positive lex-leading coefficient.  gcd(0, 0) = 0.
PolyQT poly_gcd(const PolyQT& a, const PolyQT& b);

/// Quotient a/b when b divides a exactly; throws std::domain_error otherwise.
PolyQT exact_div(const PolyQT& a, const PolyQT& b);

/// Gaussian binomial [n k]_q as a polynomial in q.  Zero when k < 0, k > n, or
/// n < 0.  [0 0]_q = 1.
PolyQT q_binomial(int n, int k);

/// Thrown when a substitution lands on a zero denominator.
struct PoleError : std::runtime_error {
    PoleError(const std::string& what, std::string num, std::string den)
        : std::runtime_error(what), numerator(std::move(num)), denominator(std::move(den)) {}
    std::string numerator, denominator;
};

/**
 * Rational function in Q(q,t), kept fully reduced with the denominator's
 * lex-leading coefficient positive.  Equal values therefore compare equal
 * structurally.  The denominator of a polynomial value is the constant 1, and
 * arithmetic takes cheap paths in that case.
 */
class RatFuncQT {
public:
    RatFuncQT() : num_(), den_(1) {}
    RatFuncQT(long c) : num_(c), den_(1) {}
    RatFuncQT(const mpz_class& c) : num_(c), den_(1) {}
    RatFuncQT(const mpq_class& c);
    RatFuncQT(PolyQT num) : num_(std::move(num)), den_(1) {}
    RatFuncQT(PolyQT num, PolyQT den);  // reduces; throws std::domain_error on den == 0

    static RatFuncQT q() { return RatFuncQT(PolyQT::q()); }
    static RatFuncQT t() { return RatFuncQT(PolyQT::t()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    const PolyQT& numerator() const { return num_; }
    const PolyQT& denominator() const { return den_; }

    RatFuncQT operator-() const;
    RatFuncQT& operator+=(const RatFuncQT& o);
    RatFuncQT& operator-=(const RatFuncQT& o);
    RatFuncQT operator*(const RatFuncQT& o) const;
    RatFuncQT operator/(const RatFuncQT& o) const;  // throws std::domain_error on 0
    friend RatFuncQT operator+(RatFuncQT a, const RatFuncQT& b) { return a += b; }
    friend RatFuncQT operator-(RatFuncQT a, const RatFuncQT& b) { return a -= b; }
    RatFuncQT& operator*=(const RatFuncQT& o) { return *this = *this * o; }
    RatFuncQT& operator/=(const RatFuncQT& o) { return *this = *this / o; }
    bool operator==(const RatFuncQT& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncQT& o) const { return !(*this == o); }

    RatFuncQT pow(int e) const;  // e < 0 inverts; throws on 0^negative

    /// Substitute t = 0 (resp. q = 0).  Throws PoleError when the reduced
    /// denominator is divisible by t (resp. q), i.e. when no finite value exists.
    RatFuncQT at_t0() const;
    RatFuncQT at_q0() const;
    RatFuncQT swap_qt() const;

    mpq_class eval(const mpq_class& qv, const mpq_class& tv) const;

    /// "(1 - q*t)/(1 - q)"; bare numerator string when the denominator is 1.
    std::string to_string() const;

private:
    PolyQT num_, den_;
    void reduce();
};

/// Coefficient-field hooks used by the templated symmetric function and
/// linear algebra code.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<mpq_class> {
    static mpq_class from_mpq(const mpq_class& x) { return x; }
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static bool is_one(const mpq_class& x) { return x == 1; }
    static std::string str(const mpq_class& x) { return x.get_str(); }
};

template <>
struct CoeffOps<RatFuncQT> {
    static RatFuncQT from_mpq(const mpq_class& x) { return RatFuncQT(x); }
    static bool is_zero(const RatFuncQT& x) { return x.is_zero(); }
    static bool is_one(const RatFuncQT& x) {
        return x.is_polynomial() && x.numerator().is_one();
    }
    static std::string str(const RatFuncQT& x) { return x.to_string(); }
};

}  // namespace fdr
