#include "fdr/ratfunc.hpp"

#include <sstream>
#include <vector>

namespace fdr {

PolyQT PolyQT::monomial(mpz_class c, int dq, int dt) {
    PolyQT p;
    if (c != 0) p.terms_[{dq, dt}] = std::move(c);
    return p;
}

bool PolyQT::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

int PolyQT::deg_q() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int PolyQT::deg_t() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

PolyQT PolyQT::operator-() const {
    PolyQT r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PolyQT PolyQT::operator*(const PolyQT& o) const {
    PolyQT r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

PolyQT PolyQT::pow(int e) const {
    if (e < 0) throw std::domain_error("PolyQT::pow: negative exponent");
    PolyQT r(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

mpz_class PolyQT::coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class PolyQT::content() const {
    mpz_class g = 0;
    for (const auto& [k, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyQT PolyQT::at_t0() const {
    PolyQT r;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) r.terms_[k] = c;
    return r;
}

PolyQT PolyQT::at_q0() const {
    PolyQT r;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) r.terms_[k] = c;
    return r;
}

PolyQT PolyQT::swap_qt() const {
    PolyQT r;
    for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

mpq_class PolyQT::eval(const mpq_class& qv, const mpq_class& tv) const {
    // Horner in q; inner coefficients evaluated in t directly (degrees stay small).
    mpq_class acc = 0;
    int dq = deg_q();
    for (int a = dq; a >= 0; --a) {
        mpq_class row = 0;
        for (const auto& [k, c] : terms_) {
            if (k.first != a) continue;
            mpq_class tp = 1;
            for (int i = 0; i < k.second; ++i) tp *= tv;
            row += mpq_class(c) * tp;
        }
        acc = acc * qv + row;
    }
    return acc;
}

std::string PolyQT::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        if (k.first > 0) {
            mono += "q";
            if (k.first > 1) mono += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "t";
            if (k.second > 1) mono += "^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

// --- gcd machinery: dense recursive view, q as the outer variable over Z[t] ---

namespace {

using UPoly = std::vector<mpz_class>;  // poly in t, index = degree, trimmed

void u_trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int u_deg(const UPoly& a) { return int(a.size()) - 1; }
bool u_is_zero(const UPoly& a) { return a.empty(); }

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    u_trim(r);
    return r;
}

UPoly u_scale(const UPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly u_sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    u_trim(a);
    return a;
}

mpz_class u_content(const UPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly u_div_mpz(const UPoly& a, const mpz_class& g) {
    UPoly r = a;
    for (auto& x : r) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        if (rem != 0) throw std::domain_error("u_div_mpz: inexact");
        x = q;
    }
    return r;
}

UPoly u_pp(const UPoly& a) {
    if (a.empty()) return a;
    mpz_class g = u_content(a);
    return u_div_mpz(a, g);
}

// Pseudo-remainder of a by b (b nonzero): repeatedly kill the leading term.
UPoly u_prem(UPoly a, const UPoly& b) {
    int db = u_deg(b);
    const mpz_class& lcb = b[db];
    while (!u_is_zero(a) && u_deg(a) >= db) {
        int da = u_deg(a);
        mpz_class lca = a.back();
        UPoly shifted(size_t(da - db), mpz_class(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = u_sub(u_scale(a, lcb), u_scale(shifted, lca));
        if (!u_is_zero(a) && u_deg(a) >= da)
            throw std::logic_error("u_prem: degree did not drop");
    }
    return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
    u_trim(a);
    u_trim(b);
    if (u_is_zero(a)) std::swap(a, b);
    if (u_is_zero(b)) {
        if (!u_is_zero(a) && a.back() < 0)
            for (auto& x : a) x = -x;
        return a;
    }
    // gcd = gcd of contents times primitive gcd; the PRS below only tracks
    // the primitive part, so split the content off first.
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), u_content(a).get_mpz_t(), u_content(b).get_mpz_t());
    a = u_pp(a);
    b = u_pp(b);
    while (!u_is_zero(b)) {
        if (u_deg(a) < u_deg(b)) { std::swap(a, b); continue; }
        UPoly r = u_prem(a, b);
        a = std::move(b);
        b = u_pp(r);
    }
    a = u_pp(a);
    if (a.back() < 0)
        for (auto& x : a) x = -x;
    return u_scale(a, cg);
}

// Exact quotient a / b in Z[t]; throws if division is not exact.
UPoly u_exact_div(UPoly a, const UPoly& b) {
    if (u_is_zero(b)) throw std::domain_error("u_exact_div: zero divisor");
    if (u_is_zero(a)) return a;
    int db = u_deg(b);
    if (u_deg(a) < db) throw std::domain_error("u_exact_div: inexact");
    const mpz_class& lcb = b[db];
    UPoly quo(size_t(u_deg(a) - db + 1), mpz_class(0));
    while (!u_is_zero(a)) {
        int da = u_deg(a);
        if (da < db) throw std::domain_error("u_exact_div: inexact");
        mpz_class c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), lcb.get_mpz_t());
        if (rem != 0) throw std::domain_error("u_exact_div: inexact");
        quo[size_t(da - db)] = c;
        UPoly shifted(size_t(da - db), mpz_class(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = u_sub(std::move(a), u_scale(shifted, c));
    }
    u_trim(quo);
    return quo;
}

using BPoly = std::vector<UPoly>;  // poly in q over Z[t], index = q-degree, trimmed

void b_trim(BPoly& a) {
    while (!a.empty() && u_is_zero(a.back())) a.pop_back();
}

int b_deg(const BPoly& a) { return int(a.size()) - 1; }
bool b_is_zero(const BPoly& a) { return a.empty(); }

BPoly b_from_poly(const PolyQT& p) {
    BPoly r(size_t(p.deg_q() + 1));
    for (const auto& [k, c] : p.terms()) {
        UPoly& u = r[size_t(k.first)];
        if (int(u.size()) <= k.second) u.resize(size_t(k.second + 1), mpz_class(0));
        u[size_t(k.second)] = c;
    }
    b_trim(r);
    return r;
}

PolyQT b_to_poly(const BPoly& a) {
    PolyQT r;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0) r += PolyQT::monomial(a[i][j], int(i), int(j));
    return r;
}

BPoly b_scale(const BPoly& a, const UPoly& c) {
    BPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = u_mul(a[i], c);
    b_trim(r);
    return r;
}

BPoly b_sub(BPoly a, const BPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = u_sub(std::move(a[i]), b[i]);
    b_trim(a);
    return a;
}

UPoly b_content(const BPoly& a) {
    UPoly g;
    for (const auto& u : a) g = u_gcd(g, u);
    return g;
}

BPoly b_pp(const BPoly& a) {
    if (b_is_zero(a)) return a;
    UPoly g = b_content(a);
    BPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = u_is_zero(a[i]) ? UPoly{} : u_exact_div(a[i], g);
    return r;
}

BPoly b_prem(BPoly a, const BPoly& b) {
    int db = b_deg(b);
    const UPoly& lcb = b[size_t(db)];
    while (!b_is_zero(a) && b_deg(a) >= db) {
        int da = b_deg(a);
        UPoly lca = a.back();
        BPoly shifted(size_t(da - db));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = b_sub(b_scale(a, lcb), b_scale(shifted, lca));
        if (!b_is_zero(a) && b_deg(a) >= da)
            throw std::logic_error("b_prem: degree did not drop");
    }
    return a;
}

BPoly b_gcd(BPoly a, BPoly b) {
    b_trim(a);
    b_trim(b);
    // Pull out contents first: gcd = gcd(cont_a, cont_b) * gcd(pp_a, pp_b).
    if (b_is_zero(a)) std::swap(a, b);
    if (b_is_zero(b)) {
        if (b_is_zero(a)) return a;
        BPoly r = b_pp(a);
        return b_scale(r, b_content(a));
    }
    UPoly cg = u_gcd(b_content(a), b_content(b));
    a = b_pp(a);
    b = b_pp(b);
    while (!b_is_zero(b)) {
        if (b_deg(a) < b_deg(b)) { std::swap(a, b); continue; }
        BPoly r = b_prem(a, b);
        a = std::move(b);
        b = b_pp(r);
    }
    return b_scale(b_pp(a), cg);
}

}  // namespace

namespace {

PolyQT positive_leading(PolyQT p) {
    if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
    return p;
}

// gcd of c*q^i*t^j with p: content gcd times the largest monomial dividing p.
PolyQT monomial_gcd(const PolyQT::Key& key, const mpz_class& c, const PolyQT& p) {
    int dq = key.first, dt = key.second;
    for (const auto& [k, v] : p.terms()) {
        (void)v;
        dq = std::min(dq, k.first);
        dt = std::min(dt, k.second);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), p.content().get_mpz_t());
    return PolyQT::monomial(g, dq, dt);
}

}  // namespace

PolyQT poly_gcd(const PolyQT& a, const PolyQT& b) {
    if (a.is_zero()) return positive_leading(b);
    if (b.is_zero()) return positive_leading(a);
    if (a.is_one() || b.is_one()) return PolyQT(1);
    if (a == b) return positive_leading(a);
    if (a.terms().size() == 1) {
        const auto& [k, c] = *a.terms().begin();
        return monomial_gcd(k, c, b);
    }
    if (b.terms().size() == 1) {
        const auto& [k, c] = *b.terms().begin();
        return monomial_gcd(k, c, a);
    }
    return positive_leading(b_to_poly(b_gcd(b_from_poly(a), b_from_poly(b))));
}

PolyQT exact_div(const PolyQT& a, const PolyQT& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
    PolyQT rem = a, quo;
    const auto& [kb, cb] = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [ka, ca] = *rem.terms().rbegin();
        int dq = ka.first - kb.first, dt = ka.second - kb.second;
        if (dq < 0 || dt < 0) throw std::domain_error("exact_div: inexact");
        mpz_class c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        if (r != 0) throw std::domain_error("exact_div: inexact");
        PolyQT term = PolyQT::monomial(c, dq, dt);
        quo += term;
        rem -= term * b;
    }
    return quo;
}

PolyQT q_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return PolyQT();
    // [n k] = [n-1 k-1] + q^k [n-1 k]; row-by-row DP.
    std::vector<PolyQT> row{PolyQT(1)};  // [0 0]
    for (int m = 1; m <= n; ++m) {
        std::vector<PolyQT> next(size_t(m + 1));
        for (int j = 0; j <= m; ++j) {
            PolyQT v = (j > 0) ? row[size_t(j - 1)] : PolyQT();
            if (j < m) v += PolyQT::monomial(1, j, 0) * row[size_t(j)];
            next[size_t(j)] = std::move(v);
        }
        row = std::move(next);
    }
    return row[size_t(k)];
}

}  // namespace fdr
