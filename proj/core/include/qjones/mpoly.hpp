#pragma once

// Laurent polynomials in a second variable M with LaurentPoly coefficients,
// and their fractions.  M stands for the operator (M f)(n) = q^{n/2} f(n);
// substituting M = q^{n/2} turns an MPoly into an ordinary Laurent
// polynomial.  These are the coefficient rings of the recurrence operators.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qjones/qpoly.hpp"

namespace qjones {

class MPoly {
public:
    using Exp = std::int64_t;

    MPoly() = default;
    static MPoly monomial(Exp m_exp, LaurentPoly c);
    static MPoly constant(LaurentPoly c) { return monomial(0, std::move(c)); }
    static MPoly one() { return constant(LaurentPoly::one()); }
    static MPoly m_power(Exp j) { return monomial(j, LaurentPoly::one()); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exp, LaurentPoly>& coeffs() const { return coeffs_; }
    Exp min_m() const;
    Exp max_m() const;
    LaurentPoly coeff(Exp j) const;

    // * M^j
    MPoly shifted_m(Exp j) const;
    // * q^{e/4}
    MPoly shifted_q(LaurentPoly::Exp e) const;
    // The substitution M -> q^{k/2} M (the Ore twist by L^k).
    MPoly twisted(std::int64_t k) const;
    // The substitution M = q^{n/2}.
    LaurentPoly eval_m(std::int64_t n) const;

    // gcd of all coefficients (canonicalized as in laurent_gcd).
    LaurentPoly content() const;

    MPoly& operator+=(const MPoly& o);
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const LaurentPoly& c);
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::optional<MPoly> divided_exactly(const MPoly& d) const;
    MPoly div_exact(const MPoly& d) const;

    std::string pretty() const;

private:
    void insert(Exp j, LaurentPoly c);
    std::map<Exp, LaurentPoly> coeffs_;  // M-exponent -> coefficient, no zeros
};

// gcd in M over Z[q^{+-1/4}] via content extraction and a primitive
// pseudo-remainder sequence.  Canonical: primitive, min M-exponent 0,
// positive-leading content choice.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

// Fractions num/den of MPoly, gcd-reduced, with a deterministic unit choice
// (den has min M-exponent 0, min q-exponent 0 and positive leading
// coefficient).
class MRational {
public:
    MRational() : num_(), den_(MPoly::one()) {}
    /*implicit*/ MRational(MPoly p) : num_(std::move(p)), den_(MPoly::one()) {}
    MRational(MPoly num, MPoly den);

    static MRational zero() { return MRational(); }
    static MRational one() { return MRational(MPoly::one()); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MPoly::one(); }

    MRational twisted(std::int64_t k) const;
    // Evaluate at M = q^{n/2}; DivisionByZeroError when the denominator
    // vanishes there.
    RationalPoly eval_m(std::int64_t n) const;

    friend MRational operator+(const MRational& a, const MRational& b);
    friend MRational operator-(const MRational& a, const MRational& b);
    friend MRational operator*(const MRational& a, const MRational& b);
    friend MRational operator/(const MRational& a, const MRational& b);
    MRational operator-() const;
    friend bool operator==(const MRational& a, const MRational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const MRational& a, const MRational& b) { return !(a == b); }

    std::string pretty() const;

private:
    void normalize();
    MPoly num_, den_;
};

}  // namespace qjones
