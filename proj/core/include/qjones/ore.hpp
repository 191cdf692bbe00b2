#pragma once

// Skew polynomials in the shift operator L over rational functions of M,
// acting on sequences by (L f)(n) = f(n+1) and (M f)(n) = q^{n/2} f(n);
// the twist is a(M) L^k * b(M) L^l = a(M) b(q^{k/2} M) L^{k+l}.
//
// Includes recurrence guessing from values, left division and left GCD,
// operator normalization, the q = 1 specialization and the comparison with
// externally supplied A-polynomials.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qjones/cyclojones.hpp"
#include "qjones/habiro.hpp"
#include "qjones/mpoly.hpp"

namespace qjones {

class OrePoly {
public:
    OrePoly() = default;
    static OrePoly from_term(int l_pow, MRational c);
    static OrePoly constant(MRational c) { return from_term(0, std::move(c)); }
    static OrePoly shift() { return from_term(1, MRational::one()); }          // L
    static OrePoly scale() { return from_term(0, MRational(MPoly::m_power(1))); }  // M

    bool is_zero() const { return coeffs_.empty(); }
    int l_degree() const;
    const std::map<int, MRational>& coeffs() const { return coeffs_; }
    MRational coeff(int k) const;
    const MRational& leading() const;

    friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
    friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
    OrePoly operator-() const;
    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    // True when all coefficients are polynomial in M with integral
    // coefficients in the q^{1/2} lattice.
    bool in_half_lattice() const;

    std::string pretty() const;

private:
    void insert(int k, MRational c);
    std::map<int, MRational> coeffs_;  // L-power -> coefficient, no zeros
    friend OrePoly ore_mul(const OrePoly&, const OrePoly&);
};

// Twisted product.
OrePoly ore_mul(const OrePoly& p, const OrePoly& q);

// P = quot * Q + rem with L-deg(rem) < L-deg(Q); DivisionByZeroError on Q=0.
std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& p, const OrePoly& q);

// Left GCD of the generators (iterated left_divmod), then normalization:
// denominators cleared, content over Z[q^{+-1/2}, M] removed (so every
// coefficient is polynomial in M and the coefficients are jointly
// primitive), unit +-q^{a/2} M^b pinned by min M-exponent 0, min q-exponent
// 0 and a positive leading integer coefficient of the leading L-coefficient.
OrePoly recurrence_polynomial(const std::vector<OrePoly>& gens);

// ---------------------------------------------------------------------------

// Bivariate integer polynomial in (L, M); the shape of A-polynomials.
struct APoly {
    std::map<std::pair<int, int>, Int> terms;  // (l_deg, m_deg) -> coefficient

    bool is_zero() const { return terms.empty(); }
    int l_degree() const;
    void add(int l, int m, Int c);
    std::string pretty() const;
};

// Substitute q^{1/2} = 1 coefficient-wise (the operator is normalized
// first).  The result may be zero; callers decide how loudly to warn.
APoly specialize_q1(const OrePoly& p);

struct AJResult {
    bool essentially_equal = false;
    std::string witness;  // the M-only ratio, or the first differing L-degree
};

// Both polynomials reduced to monic-in-L normal form over Q(M) and compared
// exactly (via cross-multiplication).
AJResult aj_compare(const APoly& a, const APoly& A);

// ---------------------------------------------------------------------------

class Sequence {
public:
    enum class Kind { laurent, habiro };

    // Builtins: "brace", "bracket", "brace_factorial", "bracket_factorial",
    // "qbinom_diag", "delta:<k>".
    static Sequence builtin(const std::string& name, std::int64_t n_max);
    static Sequence from_values(std::string name, std::vector<LaurentPoly> values);
    static Sequence from_cyclotomic(const CyclotomicCoeffs& c, std::int64_t n_max);
    static Sequence from_habiro(std::string name, std::vector<HabiroElement> values);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::int64_t n_max() const;
    const LaurentPoly& l_at(std::int64_t n) const;    // 1-based
    const HabiroElement& h_at(std::int64_t n) const;  // 1-based

    // Pointwise sum/product (laurent kind).
    friend Sequence seq_add(const Sequence& a, const Sequence& b);
    friend Sequence seq_mul(const Sequence& a, const Sequence& b);

private:
    Kind kind_ = Kind::laurent;
    std::string name_;
    std::vector<LaurentPoly> lvals_;
    std::vector<HabiroElement> hvals_;
};

// Pointwise application on n_lo..n_hi (laurent kind); the sequence must be
// defined up to n_hi + L-degree.  Exactness enforced.
Sequence ore_apply(const OrePoly& p, const Sequence& f, std::int64_t n_lo, std::int64_t n_hi);

// Exact annihilation check on a range.
bool annihilates(const OrePoly& p, const Sequence& f, std::int64_t n_lo, std::int64_t n_hi);

// Habiro-kind verification: applies the cleared-denominator operator with
// coefficients split by prefactor class and tests every class against zero
// with h_equal at the given bound.
bool annihilates_habiro(const OrePoly& p, const Sequence& f, std::int64_t n_lo,
                        std::int64_t n_hi, std::int64_t bound);

struct GuessOutcome {
    std::optional<OrePoly> op;
    bool in_half_lattice = true;
    std::string engine;  // "bareiss" or "modular"
};

// Nullspace of the (k, j)-ansatz sum c_{kj} q^{nj/2} f(n+k) = 0 over the
// training range n = 1..n_train; requires n_train >= (dL+1)(2dM+1) + 5.
// Small systems run fraction-free elimination over Z[q^{+-1/4}]; large
// systems are solved at sampled roots modulo a word-size prime, the
// coefficient functions reconstructed, and the candidate verified exactly
// against the training data before being returned.
GuessOutcome guess_recurrence(const Sequence& f, int dL, int dM, std::int64_t n_train);

struct SearchOutcome {
    OrePoly op;
    int dL = 0;
    int dM = 0;
};

// Increasing dL, then dM; first success.  Minimal only within the searched
// degrees.
std::optional<SearchOutcome> guess_search(const Sequence& f, int dL_max, int dM_max);

}  // namespace qjones
