#include "qjones/skein.hpp"

#include <map>
#include <unordered_map>

namespace qjones {

void validate(const Diagram& d) {
    if (d.signs.size() != d.pd.size())
        throw DiagramError("diagram: sign list and crossing list differ in length");
    for (int s : d.signs)
        if (s != 1 && s != -1) throw DiagramError("diagram: signs must be +1 or -1");
    if (d.components < 1) throw DiagramError("diagram: component count must be >= 1");
    std::map<int, int> count;
    for (const auto& x : d.pd)
        for (int e : x) ++count[e];
    for (const auto& [e, c] : count)
        if (c != 2) throw DiagramError("diagram: edge label must occur exactly twice");
    if (!d.pd.empty() && count.empty()) throw DiagramError("diagram: empty crossing");
}

namespace {

// Open chains over the active edges: ends[x] = the other end of the chain
// through x.  A bare, untouched edge is the trivial chain ends[x] = x,
// stored implicitly.
struct Chains {
    std::map<int, int> ends;

    int other_end(int x) const {
        auto it = ends.find(x);
        return it == ends.end() ? x : it->second;
    }

    // Connect the next slot of edge u to the next slot of edge v.
    // Returns the number of loops closed (0 or 1).
    int connect(int u, int v) {
        const int a = other_end(u);
        const int b = other_end(v);
        if (a == v) {  // u and v are the two ends of one chain (incl. u == v bare)
            ends.erase(u);
            ends.erase(v);
            return 1;
        }
        ends.erase(u);
        ends.erase(v);
        ends[a] = b;
        ends[b] = a;
        return 0;
    }

    // Canonical key of the current boundary pairing.
    std::vector<std::pair<int, int>> key() const {
        std::vector<std::pair<int, int>> k;
        for (const auto& [x, y] : ends)
            if (x < y) k.emplace_back(x, y);
        return k;
    }
};

const LaurentPoly& circle_value() {
    static const LaurentPoly delta({{2, -1}, {-2, -1}});  // -(A^2 + A^{-2})
    return delta;
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
    validate(d);
    if (d.pd.empty()) return circle_value().pow(static_cast<unsigned>(d.components));

    const LaurentPoly a_mono = LaurentPoly::monomial(1);
    const LaurentPoly b_mono = LaurentPoly::monomial(-1);

    std::map<std::vector<std::pair<int, int>>, std::pair<Chains, LaurentPoly>> states;
    states.emplace(Chains{}.key(), std::make_pair(Chains{}, LaurentPoly::one()));

    for (const auto& x : d.pd) {
        std::map<std::vector<std::pair<int, int>>, std::pair<Chains, LaurentPoly>> next;
        for (const auto& [key, sc] : states) {
            const auto& [chains, coeff] = sc;
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                Chains c2 = chains;
                int loops;
                if (smoothing == 0) {
                    loops = c2.connect(x[0], x[1]);
                    loops += c2.connect(x[2], x[3]);
                } else {
                    loops = c2.connect(x[0], x[3]);
                    loops += c2.connect(x[1], x[2]);
                }
                LaurentPoly w = coeff * (smoothing == 0 ? a_mono : b_mono);
                for (int l = 0; l < loops; ++l) w = w * circle_value();
                auto k = c2.key();
                auto it = next.find(k);
                if (it == next.end()) {
                    next.emplace(std::move(k), std::make_pair(std::move(c2), std::move(w)));
                } else {
                    it->second.second += w;
                }
            }
        }
        states = std::move(next);
    }

    LaurentPoly total;
    for (const auto& [key, sc] : states) {
        if (!key.empty()) throw DiagramError("diagram: open strands remain after all crossings");
        total += sc.second;
    }
    return total;
}

LaurentPoly jones_from_pd(const Diagram& d) {
    validate(d);
    int w = 0;
    for (int s : d.signs) w += s;
    const int sign = ((d.components + w) % 2 == 0) ? 1 : -1;
    return kauffman_bracket(d).shifted(-3 * w) * Int(sign);
}

}  // namespace qjones
