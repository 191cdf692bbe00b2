#pragma once

// Sparse exact Laurent polynomials in q^{1/4} and the quantum scalars built
// from them.
//
// Exponents are stored in quarter units: the monomial q^{e/4} has exponent e.
// This lets Z[q^{+-1}], Z[q^{+-1/2}] and Z[q^{+-1/4}] share one type; the
// residue of the exponents mod 4 distinguishes the subrings.  Coefficients
// are arbitrary-precision integers and every operation is exact.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qjones/errors.hpp"

namespace qjones {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    using Exp = std::int64_t;
    using Term = std::pair<Exp, Int>;

    LaurentPoly() = default;

    // Canonicalizes: merges duplicate exponents, drops zero coefficients,
    // keeps terms sorted by ascending exponent.
    explicit LaurentPoly(std::vector<Term> terms);

    static LaurentPoly monomial(Exp quarter_exp, Int coeff = 1);
    static LaurentPoly constant(Int c);
    static LaurentPoly one() { return constant(1); }
    // q^k as a Laurent polynomial (integral power of q).
    static LaurentPoly q_power(Exp k) { return monomial(4 * k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    // Lowest/highest exponent; must not be called on zero.
    Exp min_exp() const;
    Exp max_exp() const;

    Int coeff(Exp e) const;

    // Multiplication by the monomial q^{e/4}.
    LaurentPoly shifted(Exp quarter_exp) const;
    // The substitution q -> q^{-1}.
    LaurentPoly mirrored() const;
    LaurentPoly negated() const;

    // gcd of all coefficients (non-negative; 0 for the zero polynomial).
    Int content() const;

    // True when every exponent is congruent to r mod 4.
    bool exponents_congruent(int r) const;
    // The common residue mod 4 of all exponents, if there is one.
    std::optional<int> exponent_class() const;

    // Exact division; nullopt when the quotient is not a Laurent polynomial.
    std::optional<LaurentPoly> divided_exactly(const LaurentPoly& d) const;
    // Throwing variant of divided_exactly.
    LaurentPoly div_exact(const LaurentPoly& d) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const Int& c);
    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) { return a * c; }
    LaurentPoly operator-() const { return negated(); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly pow(unsigned k) const;

    // Human-readable rendering, e.g. "q^{5/2} + q^{-5/2}".  With
    // quarter_units = false exponents are printed verbatim (bracket
    // polynomials in A).
    std::string pretty(const std::string& var = "q", bool quarter_units = true) const;

private:
    void canonicalize();
    std::vector<Term> terms_;  // ascending exponent, no zero coefficients
};

// gcd over Z[q^{+-1/4}], canonicalized: content-free up to the gcd of the
// inputs' contents, lowest exponent 0, positive leading coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// ---------------------------------------------------------------------------
// Quantum scalars.

// {n} = q^{n/2} - q^{-n/2}
LaurentPoly brace(std::int64_t n);
// [n] = {n}/{1}, n >= 1
LaurentPoly bracket(std::int64_t n);
// {n}_- = 1 - q^n
LaurentPoly brace_unbalanced(std::int64_t n);

enum class FactorialKind { brace, bracket, unbalanced };

// {n}!, [n]! or {n}-! ; the empty product is 1.
LaurentPoly factorial(FactorialKind kind, std::int64_t n);

// C(n,k) = prod_{j=n-k}^{n+k} {j}; zero as soon as the range contains j = 0.
LaurentPoly cnk(std::int64_t n, std::int64_t k);

// {n}_k = prod_{i=1}^{k} {n-i+1} for k >= 0, else 0.
LaurentPoly brace_falling(std::int64_t n, std::int64_t k);
// Gaussian binomial {n}_k / {k}_k (exact); 0 for k < 0.
LaurentPoly qbinom(std::int64_t n, std::int64_t k);

// {2k+1}!/({k}!{1}) and its unbalanced counterpart {2k+1}-!/({k}-!{1}-).
LaurentPoly surgery_factor(std::int64_t k);
LaurentPoly surgery_factor_unbalanced(std::int64_t k);

// (1-q)(1-q^2)...(1-q^n); the empty product is 1.
LaurentPoly excess(std::int64_t n);

// ---------------------------------------------------------------------------
// Fractions of Laurent polynomials.
//
// Normal form: denominator nonzero with lowest exponent 0, common integer
// content of numerator and denominator removed, and the sign pinned so the
// leading (highest-exponent) denominator coefficient is positive.  Common
// polynomial factors are cancelled with laurent_gcd to keep things small.
// Equality is cross-multiplication equality.

class RationalPoly {
public:
    RationalPoly() : num_(), den_(LaurentPoly::one()) {}
    RationalPoly(LaurentPoly num, LaurentPoly den);
    /*implicit*/ RationalPoly(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}

    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly one() { return RationalPoly(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value lies in Z[q^{+-1/4}] (denominator divides exactly).
    bool is_laurent() const;
    // The exact Laurent value; throws InexactDivisionError otherwise.
    LaurentPoly as_laurent() const;

    RationalPoly& operator+=(const RationalPoly& o);
    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator/(const RationalPoly& a, const RationalPoly& b);
    RationalPoly operator-() const;
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    std::string pretty(const std::string& var = "q") const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qjones
