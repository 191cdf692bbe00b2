#include "qjones/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace qjones {

std::int64_t q_order(const RootSpec& r) { return r.m / std::gcd<std::int64_t>(r.m, 4); }

namespace {

// dense division of integer polynomials, divisor monic; returns quotient,
// asserts zero remainder
std::vector<Int> divide_monic(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw Error("cyclotomic division underflow");
    std::vector<Int> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        Int f = num[i];
        if (f == 0) {
            quot[i - dd] = 0;
            continue;
        }
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("cyclotomic division not exact");
    return quot;
}

std::map<std::int64_t, std::vector<Int>>& phi_cache() {
    static std::map<std::int64_t, std::vector<Int>> cache;
    return cache;
}

std::shared_mutex& phi_mutex() {
    static std::shared_mutex mu;
    return mu;
}

std::vector<Int> compute_phi(std::int64_t m);

const std::vector<Int>& phi_locked(std::int64_t m) {
    {
        std::shared_lock lk(phi_mutex());
        auto it = phi_cache().find(m);
        if (it != phi_cache().end()) return it->second;
    }
    std::vector<Int> val = compute_phi(m);
    std::unique_lock lk(phi_mutex());
    return phi_cache().emplace(m, std::move(val)).first->second;
}

std::vector<Int> compute_phi(std::int64_t m) {
    // (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = divide_monic(std::move(num), phi_locked(d));
    }
    return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(std::int64_t m) {
    if (m < 1) throw InputError("cyclotomic_poly requires m >= 1");
    return phi_locked(m);
}

CycNumber::CycNumber(std::int64_t m, std::vector<Rat> coords) : m_(m) {
    if (m < 1) throw InputError("CycNumber order must be >= 1");
    reduce(std::move(coords));
}

void CycNumber::reduce(std::vector<Rat> raw) {
    const auto& phi = cyclotomic_poly(m_);
    const std::size_t deg = phi.size() - 1;
    if (raw.size() > deg) {
        for (std::size_t i = raw.size(); i-- > deg;) {
            Rat f = raw[i];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= f * Rat(phi[j]);
        }
    }
    if (raw.size() > deg) raw.resize(deg);
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    coords_ = std::move(raw);
}

CycNumber CycNumber::from_int(std::int64_t m, Int v) {
    return CycNumber(m, {Rat(std::move(v))});
}

CycNumber CycNumber::root_power(std::int64_t m, std::int64_t e) {
    e = ((e % m) + m) % m;
    std::vector<Rat> raw(static_cast<std::size_t>(e) + 1);
    raw[static_cast<std::size_t>(e)] = 1;
    return CycNumber(m, std::move(raw));
}

bool CycNumber::is_integral() const {
    for (const auto& c : coords_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.m_ != b.m_) throw InputError("CycNumber order mismatch");
    std::vector<Rat> r = a.coords_;
    if (r.size() < b.coords_.size()) r.resize(b.coords_.size());
    for (std::size_t i = 0; i < b.coords_.size(); ++i) r[i] += b.coords_[i];
    return CycNumber(a.m_, std::move(r));
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber CycNumber::operator-() const {
    std::vector<Rat> r = coords_;
    for (auto& c : r) c = -c;
    return CycNumber(m_, std::move(r));
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.m_ != b.m_) throw InputError("CycNumber order mismatch");
    if (a.is_zero() || b.is_zero()) return CycNumber::zero(a.m_);
    std::vector<Rat> r(a.coords_.size() + b.coords_.size() - 1);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j)
            if (b.coords_[j] != 0) r[i + j] += a.coords_[i] * b.coords_[j];
    }
    return CycNumber(a.m_, std::move(r));
}

CycNumber CycNumber::conjugated() const {
    CycNumber out = CycNumber::zero(m_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        CycNumber t = CycNumber::root_power(m_, -static_cast<std::int64_t>(i));
        std::vector<Rat> scaled = t.coords_;
        for (auto& c : scaled) c *= coords_[i];
        out = out + CycNumber(m_, std::move(scaled));
    }
    return out;
}

std::string CycNumber::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coords_[i];
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    os << "  (x = primitive " << m_ << "th root of 1)";
    return os.str();
}

CycNumber ev_root(const LaurentPoly& p, const RootSpec& r) {
    std::vector<Rat> raw(static_cast<std::size_t>(r.m));
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t k = ((e % r.m) + r.m) % r.m;
        raw[static_cast<std::size_t>(k)] += Rat(c);
    }
    return CycNumber(r.m, std::move(raw));
}

CycNumber cyc_div(const CycNumber& a, const CycNumber& b) {
    if (b.is_zero()) throw DivisionByZeroError("cyc_div by zero");
    if (a.order() != b.order()) throw InputError("CycNumber order mismatch");
    const std::int64_t m = a.order();
    const auto& phi = cyclotomic_poly(m);
    // invert b modulo Phi_m via the extended Euclidean algorithm over Q[x]
    using Poly = std::vector<Rat>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto divmod = [&](Poly num, const Poly& den) {
        Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
        trim(num);
        while (num.size() >= den.size()) {
            Rat f = num.back() / den.back();
            const std::size_t sh = num.size() - den.size();
            quot[sh] = f;
            for (std::size_t j = 0; j < den.size(); ++j) num[sh + j] -= f * den[j];
            trim(num);
        }
        return std::make_pair(quot, num);
    };
    Poly r0(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = Rat(phi[i]);
    Poly r1(b.coords().begin(), b.coords().end());
    Poly s0 = {}, s1 = {Rat(1)};
    while (true) {
        trim(r1);
        if (r1.empty()) throw DivisionByZeroError("cyc_div: divisor is a zero divisor");
        if (r1.size() == 1) break;  // unit reached
        auto [q, rem] = divmod(r0, r1);
        // s_new = s0 - q*s1
        Poly snew = s0;
        if (snew.size() < q.size() + s1.size()) snew.resize(q.size() + s1.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        trim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    // b^{-1} = s1 / r1[0]
    std::vector<Rat> inv = s1;
    for (auto& c : inv) c /= r1[0];
    return a * CycNumber(m, std::move(inv));
}

}  // namespace qjones
