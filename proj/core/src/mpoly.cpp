#include "qjones/mpoly.hpp"

#include <sstream>

namespace qjones {

void MPoly::insert(Exp j, LaurentPoly c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(j);
    if (it == coeffs_.end()) {
        coeffs_.emplace(j, std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

MPoly MPoly::monomial(Exp j, LaurentPoly c) {
    MPoly p;
    p.insert(j, std::move(c));
    return p;
}

MPoly::Exp MPoly::min_m() const {
    if (coeffs_.empty()) throw Error("min_m of zero MPoly");
    return coeffs_.begin()->first;
}

MPoly::Exp MPoly::max_m() const {
    if (coeffs_.empty()) throw Error("max_m of zero MPoly");
    return coeffs_.rbegin()->first;
}

LaurentPoly MPoly::coeff(Exp j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

MPoly MPoly::shifted_m(Exp j) const {
    MPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + j, c);
    return r;
}

MPoly MPoly::shifted_q(LaurentPoly::Exp e) const {
    MPoly r;
    for (const auto& [j, c] : coeffs_) r.coeffs_.emplace(j, c.shifted(e));
    return r;
}

MPoly MPoly::twisted(std::int64_t k) const {
    // M^j picks up q^{jk/2} = quarter exponent 2jk
    MPoly r;
    for (const auto& [j, c] : coeffs_) r.coeffs_.emplace(j, c.shifted(2 * j * k));
    return r;
}

LaurentPoly MPoly::eval_m(std::int64_t n) const {
    LaurentPoly r;
    for (const auto& [j, c] : coeffs_) r += c.shifted(2 * j * n);
    return r;
}

LaurentPoly MPoly::content() const {
    LaurentPoly g;
    for (const auto& [j, c] : coeffs_) g = laurent_gcd(g, c);
    return g;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [j, c] : o.coeffs_) {
        auto it = coeffs_.find(j);
        if (it == coeffs_.end()) {
            coeffs_.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r += b;
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [j, c] : coeffs_) r.coeffs_.emplace(j, c.negated());
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ja, ca] : a.coeffs_)
        for (const auto& [jb, cb] : b.coeffs_) {
            auto it = r.coeffs_.find(ja + jb);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(ja + jb, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

MPoly operator*(const MPoly& a, const LaurentPoly& c) {
    if (c.is_zero()) return {};
    MPoly r;
    for (const auto& [j, x] : a.coeffs_) r.coeffs_.emplace(j, x * c);
    return r;
}

std::optional<MPoly> MPoly::divided_exactly(const MPoly& d) const {
    if (d.is_zero()) throw DivisionByZeroError("MPoly division by zero");
    MPoly rem = *this;
    MPoly quot;
    const Exp dj = d.max_m();
    const LaurentPoly& dl = d.coeffs().rbegin()->second;
    while (!rem.is_zero()) {
        const Exp rj = rem.max_m();
        if (rj - dj < rem.min_m() - d.min_m()) return std::nullopt;
        auto q = rem.coeffs().rbegin()->second.divided_exactly(dl);
        if (!q) return std::nullopt;
        MPoly t = MPoly::monomial(rj - dj, *q);
        quot += t;
        rem = rem - d * t;
    }
    return quot;
}

MPoly MPoly::div_exact(const MPoly& d) const {
    auto r = divided_exactly(d);
    if (!r) throw InexactDivisionError("inexact MPoly division");
    return *std::move(r);
}

std::string MPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.pretty() << ")";
        if (it->first != 0) {
            os << "*M";
            if (it->first != 1) os << "^" << it->first;
        }
    }
    return os.str();
}

namespace {

// strip the unit part (M-power and q-monomial) and make primitive
MPoly primitive_part(const MPoly& p, MPoly* content_out = nullptr) {
    if (p.is_zero()) return p;
    LaurentPoly c = p.content();
    MPoly r;
    for (const auto& [j, x] : p.coeffs()) r += MPoly::monomial(j - p.min_m(), x.div_exact(c));
    if (content_out) *content_out = MPoly::monomial(0, c);
    return r;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();
    const LaurentPoly cont = laurent_gcd(a.content(), b.content());
    MPoly x = primitive_part(a), y = primitive_part(b);
    if (x.max_m() < y.max_m()) std::swap(x, y);
    while (!y.is_zero()) {
        // pseudo-remainder of x by y in M
        MPoly r = x;
        const auto dy = y.max_m();
        const LaurentPoly ly = y.coeffs().rbegin()->second;
        while (!r.is_zero() && r.max_m() >= dy) {
            const auto dr = r.max_m();
            const LaurentPoly lr = r.coeffs().rbegin()->second;
            const LaurentPoly g = laurent_gcd(lr, ly);
            r = r * ly.div_exact(g) - (y.shifted_m(dr - dy) * lr.div_exact(g));
        }
        x = y;
        y = r.is_zero() ? MPoly{} : primitive_part(r);
    }
    return primitive_part(x) * cont;
}

// ---------------------------------------------------------------------------

MRational::MRational(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("MRational with zero denominator");
    normalize();
}

void MRational::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly::one();
        return;
    }
    MPoly g = mpoly_gcd(num_, den_);
    if (!(g == MPoly::one())) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    // unit: den min M-exponent -> 0
    const auto jm = den_.min_m();
    num_ = num_.shifted_m(-jm);
    den_ = den_.shifted_m(-jm);
    // den min q-exponent -> 0
    LaurentPoly::Exp qe = den_.coeffs().begin()->second.min_exp();
    for (const auto& [j, c] : den_.coeffs()) qe = std::min(qe, c.min_exp());
    num_ = num_.shifted_q(-qe);
    den_ = den_.shifted_q(-qe);
    // joint integer content, sign pinned by den's leading coefficient
    Int ic = 0;
    for (const auto& [j, c] : num_.coeffs()) ic = boost::multiprecision::gcd(ic, c.content());
    for (const auto& [j, c] : den_.coeffs()) ic = boost::multiprecision::gcd(ic, c.content());
    const auto& dl = den_.coeffs().rbegin()->second;
    if (dl.terms().back().second < 0) ic = -ic;
    if (ic != 1 && ic != 0) {
        auto scale = [&](const MPoly& p) {
            MPoly r;
            for (const auto& [j, c] : p.coeffs()) {
                std::vector<LaurentPoly::Term> ts;
                for (const auto& [e, x] : c.terms()) ts.emplace_back(e, x / ic);
                r += MPoly::monomial(j, LaurentPoly(std::move(ts)));
            }
            return r;
        };
        num_ = scale(num_);
        den_ = scale(den_);
    }
}

MRational MRational::twisted(std::int64_t k) const {
    MRational r;
    r.num_ = num_.twisted(k);
    r.den_ = den_.twisted(k);
    return r;
}

RationalPoly MRational::eval_m(std::int64_t n) const {
    LaurentPoly d = den_.eval_m(n);
    if (d.is_zero())
        throw DivisionByZeroError("operator coefficient denominator vanishes at M = q^{n/2}");
    return RationalPoly(num_.eval_m(n), std::move(d));
}

MRational operator+(const MRational& a, const MRational& b) {
    return MRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MRational operator-(const MRational& a, const MRational& b) {
    return MRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

MRational operator*(const MRational& a, const MRational& b) {
    return MRational(a.num_ * b.num_, a.den_ * b.den_);
}

MRational operator/(const MRational& a, const MRational& b) {
    if (b.is_zero()) throw DivisionByZeroError("MRational division by zero");
    return MRational(a.num_ * b.den_, a.den_ * b.num_);
}

MRational MRational::operator-() const {
    MRational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string MRational::pretty() const {
    if (is_polynomial()) return num_.pretty();
    return "(" + num_.pretty() + ") / (" + den_.pretty() + ")";
}

}  // namespace qjones
