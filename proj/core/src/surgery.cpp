#include "qjones/surgery.hpp"

#include <algorithm>
#include <functional>

namespace qjones {

void validate(const SurgeryPresentation& p) {
    if (p.r < 0 || p.s < 0) throw InputError("presentation with negative component counts");
    if (static_cast<int>(p.framings.size()) != p.s)
        throw InputError("presentation framing list does not match s");
    for (int f : p.framings)
        if (f != 1 && f != -1) throw InputError("surgery framings must be +-1");
    for (const auto& [key, v] : p.pairing.entries)
        if (static_cast<int>(key.size()) != p.r + p.s)
            throw InputError("pairing table key length does not match r+s");
}

LaurentPoly omega_term(int f, std::int64_t l) {
    if (f != 1 && f != -1) throw InputError("omega_term framing must be +-1");
    if (l < 0) throw InputError("omega_term needs l >= 0");
    LaurentPoly u = surgery_factor_unbalanced(l);
    if (f == -1) {
        u = u.shifted(-2 * l * (l + 1));  // q^{-l(l+1)/2}
        if (l % 2 != 0) u = u.negated();
    } else {
        u = u.shifted(-4 * l * (l + 2));  // q^{-l(l+2)}
    }
    return u;
}

HabiroElement surgery_knot(const CyclotomicCoeffs& c, int f, std::int64_t N) {
    if (c.k_max() < N)
        throw CoverageError("surgery_knot: cyclotomic table shorter than the truncation");
    std::vector<LaurentPoly> terms(static_cast<std::size_t>(N) + 1);
    LaurentPoly en = LaurentPoly::one();
    for (std::int64_t k = 0; k <= N; ++k) {
        if (k > 0) en = en * brace_unbalanced(k);
        if (c.at(k).is_zero()) continue;
        terms[static_cast<std::size_t>(k)] = (c.at(k) * omega_term(f, k)).div_exact(en);
    }
    return HabiroElement(0, std::move(terms));
}

namespace {

void for_each_tuple(const std::vector<int>& bounds,
                    const std::function<void(const std::vector<int>&)>& fn) {
    for (int b : bounds)
        if (b <= 0) return;
    std::vector<int> t(bounds.size(), 0);
    while (true) {
        fn(t);
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            if (++t[i] < bounds[i]) break;
            t[i] = 0;
        }
        if (i == t.size()) return;
    }
}

}  // namespace

HabiroElement surgery_relative(const SurgeryPresentation& p,
                               const std::vector<std::int64_t>& colors, std::int64_t N) {
    validate(p);
    if (static_cast<int>(colors.size()) != p.r)
        throw InputError("surgery_relative: color count does not match r");
    for (auto n : colors)
        if (n < 1) throw InputError("colors must be >= 1");

    // Weights per surgery component.  The table stores the P'-values, which
    // already carry {2l+1}!/({l}!{1}); the sum weights each term by the bare
    // monomial (-f q)^{-f l(l+3)/4} only.
    std::vector<std::vector<LaurentPoly>> w(p.s);
    for (int j = 0; j < p.s; ++j)
        for (std::int64_t l = 0; l <= N; ++l) {
            LaurentPoly mono = LaurentPoly::monomial(-p.framings[j] * l * (l + 3));
            if (p.framings[j] == 1 && l % 2 != 0) mono = mono.negated();
            w[static_cast<std::size_t>(j)].push_back(std::move(mono));
        }

    // grouped sums: group m = max(l_1..l_s) (0 when s = 0)
    std::vector<RationalPoly> groups(static_cast<std::size_t>(N) + 1);

    std::vector<int> bounds;
    for (auto n : colors) bounds.push_back(static_cast<int>(n));
    for (int j = 0; j < p.s; ++j) bounds.push_back(static_cast<int>(N) + 1);

    const RationalPoly one_inv(LaurentPoly::one(), brace(1));
    for_each_tuple(bounds, [&](const std::vector<int>& t) {
        std::vector<int> key(t.begin(), t.end());
        const RationalPoly& tv = p.pairing.at(key);
        if (tv.is_zero()) return;
        RationalPoly term = tv;
        for (int i = 0; i < p.r; ++i)
            term = term * RationalPoly(cnk(colors[static_cast<std::size_t>(i)], t[i]), brace(1));
        int m = 0;
        for (int j = 0; j < p.s; ++j) {
            const int l = t[static_cast<std::size_t>(p.r + j)];
            term = term * RationalPoly(w[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
            m = std::max(m, l);
        }
        groups[static_cast<std::size_t>(m)] += term;
    });

    // each group is exactly divisible by (1-q)...(1-q^m); extract the common
    // monomial prefactor class
    std::vector<LaurentPoly> quot(static_cast<std::size_t>(N) + 1);
    LaurentPoly en = LaurentPoly::one();
    int cls = -1;
    for (std::int64_t m = 0; m <= N; ++m) {
        if (m > 0) en = en * brace_unbalanced(m);
        if (groups[static_cast<std::size_t>(m)].is_zero()) continue;
        LaurentPoly v = groups[static_cast<std::size_t>(m)].as_laurent();
        LaurentPoly g = v.div_exact(en);
        auto c = g.exponent_class();
        if (!c) throw PrefactorError("surgery_relative: term leaves the monomial-prefactor form");
        if (cls == -1) cls = *c;
        if (*c != cls)
            throw PrefactorError("surgery_relative: terms span several prefactor classes");
        quot[static_cast<std::size_t>(m)] = g;
    }
    if (cls == -1) cls = 0;
    for (auto& g : quot) g = g.shifted(-cls);
    return HabiroElement(cls, std::move(quot));
}

HabiroElement framing_shift(const HabiroElement& J, std::int64_t f, std::int64_t n) {
    return HabiroElement(J.prefactor() + f * (n * n - 1), J.terms());
}

CycNumber gauss_sum(int f, std::int64_t d) {
    if (f != 1 && f != -1) throw InputError("gauss_sum framing must be +-1");
    if (d < 1) throw InputError("gauss_sum needs d >= 1");
    const std::int64_t m = 4 * d;
    CycNumber acc = CycNumber::zero(m);
    for (std::int64_t k = 1; k <= m; ++k)
        acc = acc + CycNumber::root_power(m, f * (k * k - 1));
    if (acc.is_zero()) throw Error("gauss sum vanished; convention bug");
    return acc;
}

LaurentPoly laplace(int f, std::int64_t a, std::int64_t b) {
    if (f != 1 && f != -1) throw InputError("laplace framing must be +-1");
    return LaurentPoly::q_power(b - f * a * a);
}

LaurentPoly laplace_mpoly(const MPoly& p, int f) {
    LaurentPoly out;
    for (const auto& [j, c] : p.coeffs()) {
        if (j % 2 != 0)
            throw InputError("laplace_mpoly: odd M-power has no q^{na} reading");
        const std::int64_t a = j / 2;
        out += c * laplace(f, a, 0);
    }
    return out;
}

namespace {

// J_{L(0)} at the full color tuple, from the pairing table.  The table
// stores P'-values on the surgery axes, so each surgery index l contributes
// an extra division by {2l+1}!/({l}!{1}).  Each term is assembled as one
// exact division (numerator product over denominator product); rational
// arithmetic is the fallback for tables where that division fails.
RationalPoly jones_from_table(const SurgeryPresentation& p, const std::vector<std::int64_t>& nc) {
    std::vector<int> bounds;
    for (auto n : nc) bounds.push_back(static_cast<int>(n));
    LaurentPoly exact_acc;
    RationalPoly rational_acc;
    bool all_exact = true;
    const int total = p.r + p.s;
    for_each_tuple(bounds, [&](const std::vector<int>& t) {
        std::vector<int> key(t.begin(), t.end());
        const RationalPoly& tv = p.pairing.at(key);
        if (tv.is_zero()) return;
        LaurentPoly num = tv.num();
        LaurentPoly den = tv.den();
        for (int i = 0; i < total; ++i) {
            num = num * cnk(nc[static_cast<std::size_t>(i)], t[i]);
            den = den * brace(1);
            if (i >= p.r) den = den * surgery_factor(t[i]);
        }
        if (all_exact) {
            if (auto q = num.divided_exactly(den)) {
                exact_acc += *q;
                return;
            }
            all_exact = false;
            rational_acc = RationalPoly(exact_acc);
        }
        rational_acc += RationalPoly(std::move(num), std::move(den));
    });
    return all_exact ? RationalPoly(std::move(exact_acc)) : rational_acc;
}

}  // namespace

CycNumber wrt_state_sum(const SurgeryPresentation& p, const std::vector<std::int64_t>& colors,
                        std::int64_t d) {
    validate(p);
    if (d < 2) throw InputError("wrt_state_sum: root order 4d with d >= 2 required");
    if (static_cast<int>(colors.size()) != p.r)
        throw InputError("wrt_state_sum: color count does not match r");
    const std::int64_t m = 4 * d;
    const RootSpec root(m);

    // numerator: sum over surgery colors 1..4d
    CycNumber num = CycNumber::zero(m);
    std::vector<int> bounds(static_cast<std::size_t>(p.s), static_cast<int>(m));
    for_each_tuple(bounds, [&](const std::vector<int>& t) {
        std::vector<std::int64_t> nc(colors);
        for (int j = 0; j < p.s; ++j) nc.push_back(t[static_cast<std::size_t>(j)] + 1);
        RationalPoly jv = jones_from_table(p, nc);
        CycNumber term = cyc_div(ev_root(jv.num(), root), ev_root(jv.den(), root));
        for (int j = 0; j < p.s; ++j) {
            const std::int64_t n = t[static_cast<std::size_t>(j)] + 1;
            term = term * ev_root(bracket(n), root);
            term = term * CycNumber::root_power(m, p.framings[static_cast<std::size_t>(j)] *
                                                       (n * n - 1));
        }
        num = num + term;
    });

    // denominator: product over surgery components of sum_n [n]^2 q^{f(n^2-1)/4}
    CycNumber den = CycNumber::from_int(m, 1);
    for (int j = 0; j < p.s; ++j) {
        CycNumber comp = CycNumber::zero(m);
        for (std::int64_t n = 1; n <= m; ++n) {
            CycNumber t = ev_root(bracket(n) * bracket(n), root);
            comp = comp + t * CycNumber::root_power(
                                  m, p.framings[static_cast<std::size_t>(j)] * (n * n - 1));
        }
        if (comp.is_zero())
            throw DivisionByZeroError("wrt_state_sum: zero denominator (convention bug)");
        den = den * comp;
    }

    CycNumber z = cyc_div(num, den);
    if (!z.is_integral())
        throw Error("wrt_state_sum: quotient not integral; integrality violated");
    return z;
}

bool check_evaluation(const SurgeryPresentation& p, const std::vector<std::int64_t>& colors,
                      std::int64_t d) {
    const std::int64_t trunc = std::max<std::int64_t>(d, 2);
    HabiroElement series = surgery_relative(p, colors, trunc);
    return h_eval(series, RootSpec(4 * d)) == wrt_state_sum(p, colors, d);
}

SurgeryPresentation closed_presentation(const CyclotomicCoeffs& c, int framing,
                                        std::int64_t l_max) {
    if (l_max < 0 || l_max > c.k_max()) l_max = c.k_max();
    SurgeryPresentation p;
    p.name = c.knot_name + (framing > 0 ? "(+1)" : "(-1)");
    p.r = 0;
    p.s = 1;
    p.framings = {framing};
    for (std::int64_t l = 0; l <= l_max; ++l)
        p.pairing.entries.emplace(std::vector<int>{static_cast<int>(l)},
                                  RationalPoly(c.at(l) * surgery_factor(l)));
    p.pairing.r = 0;
    p.pairing.s = 1;
    return p;
}

SurgeryPresentation split_relative_presentation(const CyclotomicCoeffs& c, int framing,
                                                std::int64_t k_max, std::int64_t l_max) {
    if (k_max < 0 || k_max > c.k_max()) k_max = c.k_max();
    if (l_max < 0 || l_max > c.k_max()) l_max = c.k_max();
    SurgeryPresentation p;
    p.name = c.knot_name + " in surgered sphere";
    p.r = 1;
    p.s = 1;
    p.framings = {framing};
    for (std::int64_t k = 0; k <= k_max; ++k)
        for (std::int64_t l = 0; l <= l_max; ++l)
            p.pairing.entries.emplace(
                std::vector<int>{static_cast<int>(k), static_cast<int>(l)},
                RationalPoly(c.at(k) * c.at(l) * surgery_factor(l)));
    p.pairing.r = 1;
    p.pairing.s = 1;
    return p;
}

SurgeryPresentation with_split_unknot(const SurgeryPresentation& p, int f2, std::int64_t l_max) {
    SurgeryPresentation out;
    out.name = p.name + " + split unknot";
    out.r = p.r;
    out.s = p.s + 1;
    out.framings = p.framings;
    out.framings.push_back(f2);
    for (const auto& [key, v] : p.pairing.entries) {
        for (std::int64_t l = 0; l <= l_max; ++l) {
            std::vector<int> k2 = key;
            k2.push_back(static_cast<int>(l));
            out.pairing.entries.emplace(std::move(k2),
                                        l == 0 ? v : RationalPoly::zero());
        }
    }
    out.pairing.r = p.pairing.r;
    out.pairing.s = p.pairing.s + 1;
    return out;
}

std::vector<HabiroElement> relative_knot_values(const CyclotomicCoeffs& c, int f,
                                                std::int64_t trunc, std::int64_t n_max) {
    std::vector<HabiroElement> out;
    const HabiroElement series = surgery_knot(c, f, trunc);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        HabiroElement jn = HabiroElement::from_laurent(colored_jones(c, n), trunc);
        out.push_back(h_mul(jn, series));
    }
    return out;
}

}  // namespace qjones
