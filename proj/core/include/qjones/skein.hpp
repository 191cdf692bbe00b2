#pragma once

// Kauffman bracket and Jones polynomial of planar-diagram codes.
//
// A crossing is a quadruple (a,b,c,d) of edge labels read counterclockwise
// from the incoming under-strand.  The A-smoothing joins a-b and c-d, the
// B-smoothing joins a-d and b-c; the circle evaluates to -(A^2 + A^{-2}).
// Exponents of the returned polynomials are powers of A = q^{1/4}, i.e. the
// usual quarter units.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qjones/qpoly.hpp"

namespace qjones {

struct Diagram {
    std::string name;
    std::vector<std::array<int, 4>> pd;
    std::vector<int> signs;  // +-1 per crossing; writhe = sum
    int components = 1;
};

// DiagramError unless every edge label occurs exactly twice and the sign
// list matches the crossing list.
void validate(const Diagram& d);

// State sum over smoothings, processed crossing by crossing with partial
// boundary pairings memoized.  Loop value -(A^2+A^{-2}); the 0-crossing
// m-circle diagram gives (-(A^2+A^{-2}))^m.
LaurentPoly kauffman_bracket(const Diagram& d);

// (-1)^m (-A^3)^{-w} <L> with A = q^{1/4}.
LaurentPoly jones_from_pd(const Diagram& d);

}  // namespace qjones
