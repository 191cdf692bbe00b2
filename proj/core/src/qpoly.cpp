#include "qjones/qpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qjones {

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
    canonicalize();
}

void LaurentPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second == 0) out.pop_back();
        } else if (t.second != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

LaurentPoly LaurentPoly::monomial(Exp e, Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(0, std::move(c)); }

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

LaurentPoly::Exp LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.front().first;
}

LaurentPoly::Exp LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.back().first;
}

Int LaurentPoly::coeff(Exp e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Exp x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

LaurentPoly LaurentPoly::shifted(Exp e) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) r.terms_.emplace_back(x + e, c);
    return r;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(-it->first, it->second);
    return r;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [x, c] : terms_) r.terms_.emplace_back(x, -c);
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

bool LaurentPoly::exponents_congruent(int r) const {
    for (const auto& [e, c] : terms_) {
        if (((e % 4) + 4) % 4 != ((r % 4) + 4) % 4) return false;
    }
    return true;
}

std::optional<int> LaurentPoly::exponent_class() const {
    if (terms_.empty()) return std::nullopt;
    int r = static_cast<int>(((terms_[0].first % 4) + 4) % 4);
    return exponents_congruent(r) ? std::optional<int>(r) : std::nullopt;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    *this = *this + o;
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this = *this - o;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Int c = ia->second + ib->second;
            if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
            ++ia, ++ib;
        }
    }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + b.negated(); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.shifted(a.min_exp()) * a.terms_[0].second;
    if (b.is_monomial()) return a.shifted(b.min_exp()) * b.terms_[0].second;
    const LaurentPoly::Exp lo = a.min_exp() + b.min_exp();
    const LaurentPoly::Exp hi = a.max_exp() + b.max_exp();
    const std::size_t span = static_cast<std::size_t>(hi - lo) + 1;
    LaurentPoly r;
    if (span <= 8u * (a.size() * b.size()) && span <= (1u << 22)) {
        std::vector<Int> dense(span);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        r.terms_.reserve(span);
        for (std::size_t i = 0; i < span; ++i)
            if (dense[i] != 0)
                r.terms_.emplace_back(lo + static_cast<LaurentPoly::Exp>(i), std::move(dense[i]));
    } else {
        std::map<LaurentPoly::Exp, Int> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, std::move(c));
    }
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    if (c == 0) return {};
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [e, x] : a.terms_) r.terms_.emplace_back(e, x * c);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly(const LaurentPoly& d) const {
    if (d.is_zero()) throw DivisionByZeroError("exact division by zero polynomial");
    if (is_zero()) return LaurentPoly{};
    // Quotient exponents are bounded by the span difference.
    const Exp qmax = max_exp() - d.max_exp();
    const Exp dlo = d.min_exp();
    const Int& dc = d.terms_.front().second;
    std::map<Exp, Int> rem(terms_.begin(), terms_.end());
    std::vector<Term> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        const Exp e = it->first - dlo;
        if (e > qmax) return std::nullopt;
        Int f = it->second / dc;
        if (f * dc != it->second) return std::nullopt;
        quot.emplace_back(e, f);
        for (const auto& [de, dcf] : d.terms_) {
            auto r = rem.find(e + de);
            Int v = (r == rem.end() ? Int(0) : r->second) - f * dcf;
            if (v == 0) {
                if (r != rem.end()) rem.erase(r);
            } else if (r == rem.end()) {
                rem.emplace(e + de, std::move(v));
            } else {
                r->second = std::move(v);
            }
        }
    }
    return LaurentPoly(std::move(quot));
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
    auto r = divided_exactly(d);
    if (!r) throw InexactDivisionError("inexact Laurent division");
    return *std::move(r);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

std::string LaurentPoly::pretty(const std::string& var, bool quarter_units) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = (a == 1);
        if (e == 0) {
            os << a;
            continue;
        }
        if (!unit) os << a << "*";
        os << var;
        if (!quarter_units) {
            if (e != 1) os << "^" << e;
        } else if (e != 4) {
            os << "^";
            if (e % 4 == 0) {
                os << (e / 4);
            } else if (e % 2 == 0) {
                os << "{" << (e / 2) << "/2}";
            } else {
                os << "{" << e << "/4}";
            }
        }
    }
    return os.str();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_monomial() || b.is_monomial()) {
        const Int g = boost::multiprecision::gcd(a.content(), b.content());
        return LaurentPoly::constant(g);
    }
    auto normalize = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        p = p.shifted(-p.min_exp());
        Int c = p.content();
        if (p.terms().back().second < 0) c = -c;
        LaurentPoly out;
        std::vector<LaurentPoly::Term> ts;
        ts.reserve(p.size());
        for (const auto& [e, x] : p.terms()) ts.emplace_back(e, x / c);
        return LaurentPoly(std::move(ts));
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    const Int cont = boost::multiprecision::gcd(a.content(), b.content());
    // primitive-PRS Euclid on the shifted ordinary polynomials
    LaurentPoly x = normalize(a), y = normalize(b);
    while (!y.is_zero()) {
        // pseudo-remainder of x by y
        LaurentPoly r = x;
        const auto dy = y.max_exp();
        const Int ly = y.terms().back().second;
        while (!r.is_zero() && r.max_exp() >= dy) {
            const auto dr = r.max_exp();
            const Int lr = r.terms().back().second;
            const Int g = boost::multiprecision::gcd(lr, ly);
            r = r * (ly / g) - y.shifted(dr - dy) * (lr / g);
        }
        x = y;
        y = normalize(r);
    }
    LaurentPoly g = normalize(x);
    return g * cont;
}

// ---------------------------------------------------------------------------

LaurentPoly brace(std::int64_t n) {
    if (n == 0) return {};
    return LaurentPoly({{2 * n, 1}, {-2 * n, -1}});
}

LaurentPoly bracket(std::int64_t n) {
    if (n < 1) throw InputError("bracket(n) requires n >= 1");
    // {n}/{1} = q^{(n-1)/2} + q^{(n-3)/2} + ... + q^{-(n-1)/2}
    std::vector<LaurentPoly::Term> ts;
    for (std::int64_t j = -(n - 1); j <= n - 1; j += 2) ts.emplace_back(2 * j, 1);
    return LaurentPoly(std::move(ts));
}

LaurentPoly brace_unbalanced(std::int64_t n) {
    return LaurentPoly::one() - LaurentPoly::q_power(n);
}

LaurentPoly factorial(FactorialKind kind, std::int64_t n) {
    if (n < 0) throw InputError("factorial requires n >= 0");
    LaurentPoly p = LaurentPoly::one();
    for (std::int64_t i = 1; i <= n; ++i) {
        switch (kind) {
            case FactorialKind::brace: p = p * brace(i); break;
            case FactorialKind::bracket: p = p * bracket(i); break;
            case FactorialKind::unbalanced: p = p * brace_unbalanced(i); break;
        }
    }
    return p;
}

LaurentPoly cnk(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0) throw InputError("cnk requires n >= 1, k >= 0");
    if (k >= n) return {};  // the range contains {0}
    LaurentPoly p = LaurentPoly::one();
    for (std::int64_t j = n - k; j <= n + k; ++j) p = p * brace(j);
    return p;
}

LaurentPoly brace_falling(std::int64_t n, std::int64_t k) {
    if (k < 0) return {};
    LaurentPoly p = LaurentPoly::one();
    for (std::int64_t i = 1; i <= k; ++i) p = p * brace(n - i + 1);
    return p;
}

LaurentPoly qbinom(std::int64_t n, std::int64_t k) {
    if (k < 0) return {};
    return brace_falling(n, k).div_exact(brace_falling(k, k));
}

LaurentPoly surgery_factor(std::int64_t k) {
    return factorial(FactorialKind::brace, 2 * k + 1)
        .div_exact(factorial(FactorialKind::brace, k) * brace(1));
}

LaurentPoly surgery_factor_unbalanced(std::int64_t k) {
    return factorial(FactorialKind::unbalanced, 2 * k + 1)
        .div_exact(factorial(FactorialKind::unbalanced, k) * brace_unbalanced(1));
}

LaurentPoly excess(std::int64_t n) { return factorial(FactorialKind::unbalanced, n); }

// ---------------------------------------------------------------------------

RationalPoly::RationalPoly(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("RationalPoly with zero denominator");
    normalize();
}

void RationalPoly::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // polynomial cancellation is skipped for very large operands; equality
    // is cross-multiplication, so reduced form is a size optimization only
    if (!den_.is_monomial() && num_.size() + den_.size() <= 600) {
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
    } else if (!den_.is_monomial()) {
        // cheap exact cancellation when the denominator divides outright
        if (auto q = num_.divided_exactly(den_)) {
            num_ = *std::move(q);
            den_ = LaurentPoly::one();
        }
    }
    // monomial part: pin the denominator's lowest exponent to 0
    const auto sh = den_.min_exp();
    den_ = den_.shifted(-sh);
    num_ = num_.shifted(-sh);
    // strip the remaining common integer content, pin the sign
    Int c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.terms().back().second < 0) c = -c;
    if (c != 1) {
        std::vector<LaurentPoly::Term> tn, td;
        for (const auto& [e, x] : num_.terms()) tn.emplace_back(e, x / c);
        for (const auto& [e, x] : den_.terms()) td.emplace_back(e, x / c);
        num_ = LaurentPoly(std::move(tn));
        den_ = LaurentPoly(std::move(td));
    }
}

bool RationalPoly::is_laurent() const {
    return num_.divided_exactly(den_).has_value();
}

LaurentPoly RationalPoly::as_laurent() const { return num_.div_exact(den_); }

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    *this = *this + o;
    return *this;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    return RationalPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    return RationalPoly(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    return RationalPoly(a.num_ * b.num_, a.den_ * b.den_);
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("RationalPoly division by zero");
    return RationalPoly(a.num_ * b.den_, a.den_ * b.num_);
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    r.num_ = r.num_.negated();
    return r;
}

std::string RationalPoly::pretty(const std::string& var) const {
    if (den_.is_one()) return num_.pretty(var);
    return "(" + num_.pretty(var) + ") / (" + den_.pretty(var) + ")";
}

}  // namespace qjones
