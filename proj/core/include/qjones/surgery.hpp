#pragma once

// Surgery series of +-1-surgeries on algebraically split links, Gauss sums,
// the Laplace transform, the root-of-unity state sum and the consistency
// check between the two.

#include <cstdint>
#include <string>
#include <vector>

#include "qjones/cyclojones.hpp"
#include "qjones/habiro.hpp"
#include "qjones/mpoly.hpp"

namespace qjones {

struct SurgeryPresentation {
    std::string name;
    int r = 0;  // colored 0-framed components
    int s = 0;  // +-1-framed surgery components
    std::vector<int> framings;  // size s, entries +-1
    LinkPairingTable pairing;   // J(P''_{k_1..k_r}, P'_{l_1..l_s})
};

void validate(const SurgeryPresentation& p);

// Weight of the l-th term of the surgery sum for framing f, in the
// unbalanced form (only integral q-powers):
//   f = -1:  (-1)^l q^{-l(l+1)/2} {2l+1}-!/({l}-!{1}-)
//   f = +1:  q^{-l(l+2)} {2l+1}-!/({l}-!{1}-)
LaurentPoly omega_term(int f, std::int64_t l);

// Series of the manifold obtained by f-surgery on the knot with table C:
// sum_{k<=N} C(k) omega_term(f,k), assembled with term k divided exactly by
// (1-q)...(1-q^k).
HabiroElement surgery_knot(const CyclotomicCoeffs& c, int f, std::int64_t N);

// Relative version: colored components keep colors n_1..n_r, surgery
// components are summed with the omega weights up to l <= N.
HabiroElement surgery_relative(const SurgeryPresentation& p,
                               const std::vector<std::int64_t>& colors, std::int64_t N);

// Framing change by f on a color-n component: prefactor shift f(n^2-1).
HabiroElement framing_shift(const HabiroElement& J, std::int64_t f, std::int64_t n);

// gamma_f = sum_{k=1}^{4d} q^{f(k^2-1)/4} at q^{1/4} = xi_{4d}; never zero.
CycNumber gauss_sum(int f, std::int64_t d);

// The monomial transform q^{na+b} -> q^{b-f a^2}.
LaurentPoly laplace(int f, std::int64_t a, std::int64_t b);
// Linear extension to polynomials in q^n (M-exponents must be even, M^{2a}
// standing for q^{na}).
LaurentPoly laplace_mpoly(const MPoly& p, int f);

// Root-of-unity state sum at q^{1/4} = xi_{4d}, d >= 2: the color sum over
// the surgery components divided by the per-component Gauss normalizations;
// asserts integrality of the quotient.
CycNumber wrt_state_sum(const SurgeryPresentation& p,
                        const std::vector<std::int64_t>& colors, std::int64_t d);

// h_eval of the surgery series == state sum, exactly in Q[x]/Phi_{4d}.
bool check_evaluation(const SurgeryPresentation& p, const std::vector<std::int64_t>& colors,
                      std::int64_t d);

// Common presentations.  Optional bounds cap the materialized table (the
// defaults cover the full cyclotomic table).
SurgeryPresentation closed_presentation(const CyclotomicCoeffs& c, int framing,
                                        std::int64_t l_max = -1);
SurgeryPresentation split_relative_presentation(const CyclotomicCoeffs& c, int framing,
                                                std::int64_t k_max = -1,
                                                std::int64_t l_max = -1);
// p with an extra split 0-framed unknot surgery component of framing f2.
SurgeryPresentation with_split_unknot(const SurgeryPresentation& p, int f2,
                                      std::int64_t l_max);

// J_{(N,K)}(n) for n = 1..n_max where N is f-surgery on a split copy of the
// knot; the split form h_mul(embedded colored Jones, surgery series).
std::vector<HabiroElement> relative_knot_values(const CyclotomicCoeffs& c, int f,
                                                std::int64_t trunc, std::int64_t n_max);

}  // namespace qjones
