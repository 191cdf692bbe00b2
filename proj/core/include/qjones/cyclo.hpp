#pragma once

// Exact arithmetic in the cyclotomic fields Q(xi_m) = Q[x]/(Phi_m(x)) and the
// evaluation maps q^{1/4} = xi_m.

#include <cstdint>
#include <string>
#include <vector>

#include "qjones/qpoly.hpp"

namespace qjones {

// The root assignment q^{1/4} = xi_m, a primitive m-th root of unity.
struct RootSpec {
    std::int64_t m = 1;
    explicit RootSpec(std::int64_t order) : m(order) {
        if (m < 1) throw InputError("RootSpec order must be >= 1");
    }
};

// The multiplicative order of q = xi_m^4.
std::int64_t q_order(const RootSpec& r);

// Phi_m as a dense monic integer polynomial (ascending degree).  Memoized
// per process behind a shared lock.
const std::vector<Int>& cyclotomic_poly(std::int64_t m);

// An element of Q[x]/(Phi_m(x)), x = xi_m, stored as rational coordinates of
// degree < deg(Phi_m) with trailing zeros trimmed.  Equality is coordinate
// equality.
class CycNumber {
public:
    CycNumber(std::int64_t m, std::vector<Rat> coords);
    static CycNumber zero(std::int64_t m) { return CycNumber(m, {}); }
    static CycNumber from_int(std::int64_t m, Int v);
    // x^e with e reduced mod m.
    static CycNumber root_power(std::int64_t m, std::int64_t e);

    std::int64_t order() const { return m_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    // True iff the element lies in Z[xi_m] (all coordinates integral).
    bool is_integral() const;

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    CycNumber operator-() const;
    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        return a.m_ == b.m_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // The Galois substitution x -> x^{-1} (complex conjugation on xi_m).
    CycNumber conjugated() const;

    std::string pretty() const;

private:
    void reduce(std::vector<Rat> raw);  // mod Phi_m, then trim
    std::int64_t m_;
    std::vector<Rat> coords_;
};

// Evaluation q^{1/4} = xi_m of a Laurent polynomial in quarter units.
CycNumber ev_root(const LaurentPoly& p, const RootSpec& r);

// Exact quotient in Q[x]/(Phi_m); DivisionByZeroError when b = 0.
CycNumber cyc_div(const CycNumber& a, const CycNumber& b);

}  // namespace qjones
