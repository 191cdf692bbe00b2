#include "qjones/habiro.hpp"

#include <algorithm>

namespace qjones {

HabiroElement::HabiroElement(std::int64_t prefactor_e, std::vector<LaurentPoly> terms)
    : prefactor_e_(prefactor_e), terms_(std::move(terms)) {
    if (terms_.empty()) throw InputError("HabiroElement needs at least the order-0 term");
    for (const auto& f : terms_) {
        if (!f.is_zero() && !f.exponents_congruent(0))
            throw PrefactorError("HabiroElement terms must have integral q-exponents");
    }
}

HabiroElement HabiroElement::zero(std::int64_t trunc) {
    if (trunc < 0) throw InputError("truncation must be >= 0");
    return HabiroElement(0, std::vector<LaurentPoly>(static_cast<std::size_t>(trunc) + 1));
}

HabiroElement HabiroElement::one(std::int64_t trunc) {
    auto e = zero(trunc);
    e.terms_[0] = LaurentPoly::one();
    return e;
}

HabiroElement HabiroElement::from_laurent(const LaurentPoly& p, std::int64_t trunc) {
    auto e = zero(trunc);
    if (p.is_zero()) return e;
    auto cls = p.exponent_class();
    if (!cls)
        throw PrefactorError(
            "cannot embed: exponents span several residue classes mod q^{1/4}");
    e.prefactor_e_ = *cls;
    e.terms_[0] = p.shifted(-*cls);
    return e;
}

const LaurentPoly& HabiroElement::term(std::int64_t n) const {
    if (n < 0 || n > trunc()) throw InputError("HabiroElement term index out of range");
    return terms_[static_cast<std::size_t>(n)];
}

bool HabiroElement::terms_all_zero() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const LaurentPoly& f) { return f.is_zero(); });
}

LaurentPoly HabiroElement::to_laurent() const {
    LaurentPoly acc;
    LaurentPoly en = LaurentPoly::one();
    for (std::int64_t n = 0; n <= trunc(); ++n) {
        if (n > 0) en = en * brace_unbalanced(n);
        if (!terms_[static_cast<std::size_t>(n)].is_zero())
            acc += terms_[static_cast<std::size_t>(n)] * en;
    }
    return acc.shifted(prefactor_e_);
}

HabiroElement HabiroElement::truncated(std::int64_t new_trunc) const {
    if (new_trunc < 0) throw InputError("truncation must be >= 0");
    std::vector<LaurentPoly> t = terms_;
    t.resize(static_cast<std::size_t>(new_trunc) + 1);
    return HabiroElement(prefactor_e_, std::move(t));
}

HabiroElement h_add(const HabiroElement& a, const HabiroElement& b) {
    if (a.terms_all_zero()) return b.truncated(std::min(a.trunc(), b.trunc()));
    if (b.terms_all_zero()) return a.truncated(std::min(a.trunc(), b.trunc()));
    const std::int64_t d = a.prefactor() - b.prefactor();
    if (((d % 4) + 4) % 4 != 0)
        throw PrefactorError("h_add: prefactor exponents differ mod 4");
    const std::int64_t e = std::min(a.prefactor(), b.prefactor());
    const std::int64_t N = std::min(a.trunc(), b.trunc());
    std::vector<LaurentPoly> terms(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        terms[static_cast<std::size_t>(n)] =
            a.term(n).shifted(a.prefactor() - e) + b.term(n).shifted(b.prefactor() - e);
    }
    return HabiroElement(e, std::move(terms));
}

HabiroElement h_neg(const HabiroElement& a) {
    std::vector<LaurentPoly> terms;
    terms.reserve(a.terms().size());
    for (const auto& f : a.terms()) terms.push_back(f.negated());
    return HabiroElement(a.prefactor(), std::move(terms));
}

HabiroElement h_mul(const HabiroElement& a, const HabiroElement& b) {
    const std::int64_t N = std::min(a.trunc(), b.trunc());
    std::vector<LaurentPoly> terms(static_cast<std::size_t>(N) + 1);
    // E_i E_j = E_min(i,j) * E_max(i,j); group by the larger index
    std::vector<LaurentPoly> excess_cache(static_cast<std::size_t>(N) + 1);
    excess_cache[0] = LaurentPoly::one();
    for (std::int64_t n = 1; n <= N; ++n)
        excess_cache[static_cast<std::size_t>(n)] =
            excess_cache[static_cast<std::size_t>(n - 1)] * brace_unbalanced(n);
    for (std::int64_t i = 0; i <= a.trunc(); ++i) {
        if (a.term(i).is_zero()) continue;
        for (std::int64_t j = 0; j <= b.trunc(); ++j) {
            if (b.term(j).is_zero()) continue;
            const std::int64_t n = std::max(i, j);
            if (n > N) continue;
            terms[static_cast<std::size_t>(n)] +=
                a.term(i) * b.term(j) * excess_cache[static_cast<std::size_t>(std::min(i, j))];
        }
    }
    return HabiroElement(a.prefactor() + b.prefactor(), std::move(terms));
}

CycNumber h_eval(const HabiroElement& f, const RootSpec& r) {
    const std::int64_t d = q_order(r);
    if (f.trunc() < d)
        throw TruncationError("h_eval: truncation below the order of q at the root");
    LaurentPoly acc;
    LaurentPoly en = LaurentPoly::one();
    for (std::int64_t n = 0; n < d && n <= f.trunc(); ++n) {
        if (n > 0) en = en * brace_unbalanced(n);
        if (!f.term(n).is_zero()) acc += f.term(n) * en;
    }
    return ev_root(acc.shifted(f.prefactor()), r);
}

std::vector<Int> taylor_at_one(const LaurentPoly& p, std::int64_t order) {
    if (!p.is_zero() && !p.exponents_congruent(0))
        throw PrefactorError("taylor_at_one needs integral q-exponents");
    std::vector<Int> out(static_cast<std::size_t>(order) + 1);
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t k = e / 4;
        // q^k = (1+(q-1))^k: generalized binomials C(k, i)
        Int binom = 1;
        for (std::int64_t i = 0; i <= order; ++i) {
            out[static_cast<std::size_t>(i)] += c * binom;
            binom = binom * Int(k - i) / Int(i + 1);
        }
    }
    return out;
}

namespace {

// Cauchy product truncated at `order`.
std::vector<Int> series_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                            std::int64_t order) {
    std::vector<Int> out(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

std::vector<Int> h_taylor(const HabiroElement& f, std::int64_t order) {
    if (order < 0) throw InputError("taylor order must be >= 0");
    if (order > f.trunc())
        throw TruncationError("h_taylor: order exceeds the truncation");
    if (((f.prefactor() % 4) + 4) % 4 != 0)
        throw PrefactorError("h_taylor: fractional prefactor has no expansion in Z[[q-1]]");
    std::vector<Int> total(static_cast<std::size_t>(order) + 1);
    std::vector<Int> en = {1};  // expansion of E_n, valuation n
    for (std::int64_t n = 0; n <= std::min(order, f.trunc()); ++n) {
        if (n > 0) {
            // (1 - q^n) = -sum_{i>=1} C(n,i)(q-1)^i
            std::vector<Int> factor(static_cast<std::size_t>(order) + 1);
            Int binom = n;
            for (std::int64_t i = 1; i <= order; ++i) {
                factor[static_cast<std::size_t>(i)] = -binom;
                binom = binom * Int(n - i) / Int(i + 1);
            }
            en = series_mul(en, factor, order);
        }
        if (f.term(n).is_zero()) continue;
        auto ft = taylor_at_one(f.term(n).shifted(f.prefactor()), order);
        auto contrib = series_mul(ft, en, order);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += contrib[i];
    }
    return total;
}

HabiroElement kz_series(std::int64_t N) {
    if (N < 0) throw InputError("truncation must be >= 0");
    std::vector<LaurentPoly> terms(static_cast<std::size_t>(N) + 1, LaurentPoly::one());
    return HabiroElement(0, std::move(terms));
}

namespace {

bool is_zero_bounded(const HabiroElement& a, std::int64_t bound) {
    for (std::int64_t d = 1; d <= bound; ++d) {
        if (!h_eval(a, RootSpec(4 * d)).is_zero()) return false;
    }
    HabiroElement shifted(0, std::vector<LaurentPoly>(a.terms().begin(), a.terms().end()));
    for (const auto& c : h_taylor(shifted, bound))
        if (c != 0) return false;
    return true;
}

}  // namespace

bool h_equal(const HabiroElement& a, const HabiroElement& b, std::int64_t bound) {
    if (bound < 1) throw InputError("h_equal bound must be >= 1");
    if (a.trunc() < bound || b.trunc() < bound)
        throw TruncationError("h_equal: truncations below the test bound");
    const std::int64_t d = a.prefactor() - b.prefactor();
    if (((d % 4) + 4) % 4 != 0) {
        // different residue classes: equal only if both vanish under the test
        return is_zero_bounded(a, bound) && is_zero_bounded(b, bound);
    }
    for (std::int64_t k = 1; k <= bound; ++k) {
        const RootSpec r(4 * k);
        if (h_eval(a, r) != h_eval(b, r)) return false;
    }
    // align prefactors and compare Taylor expansions of the integral parts
    const std::int64_t e = std::min(a.prefactor(), b.prefactor());
    HabiroElement a0(a.prefactor() - e, a.terms());
    HabiroElement b0(b.prefactor() - e, b.terms());
    return h_taylor(a0, bound) == h_taylor(b0, bound);
}

}  // namespace qjones
