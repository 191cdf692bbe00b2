#include "qjones/ore.hpp"

#include <algorithm>
#include <sstream>

namespace qjones {

void OrePoly::insert(int k, MRational c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        coeffs_.emplace(k, std::move(c));
    } else {
        MRational s = it->second + c;
        if (s.is_zero()) {
            coeffs_.erase(it);
        } else {
            it->second = std::move(s);
        }
    }
}

OrePoly OrePoly::from_term(int k, MRational c) {
    if (k < 0) throw InputError("OrePoly powers of L must be >= 0");
    OrePoly p;
    p.insert(k, std::move(c));
    return p;
}

int OrePoly::l_degree() const {
    if (coeffs_.empty()) throw Error("l_degree of zero operator");
    return coeffs_.rbegin()->first;
}

MRational OrePoly::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? MRational::zero() : it->second;
}

const MRational& OrePoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero operator");
    return coeffs_.rbegin()->second;
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) {
    OrePoly r = a;
    for (const auto& [k, c] : b.coeffs()) r.insert(k, c);
    return r;
}

OrePoly operator-(const OrePoly& a, const OrePoly& b) { return a + (-b); }

OrePoly OrePoly::operator-() const {
    OrePoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

bool OrePoly::in_half_lattice() const {
    for (const auto& [k, c] : coeffs_) {
        if (!c.is_polynomial()) return false;
        for (const auto& [j, q] : c.num().coeffs()) {
            if (j < 0) return false;
            for (const auto& [e, x] : q.terms())
                if (((e % 2) + 2) % 2 != 0) return false;
        }
    }
    return true;
}

std::string OrePoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "[" << it->second.pretty() << "]";
        if (it->first >= 1) os << "*L";
        if (it->first > 1) os << "^" << it->first;
    }
    return os.str();
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
    OrePoly r;
    for (const auto& [k, a] : p.coeffs())
        for (const auto& [l, b] : q.coeffs()) r.insert(k + l, a * b.twisted(k));
    return r;
}

std::pair<OrePoly, OrePoly> left_divmod(const OrePoly& p, const OrePoly& q) {
    if (q.is_zero()) throw DivisionByZeroError("left division by the zero operator");
    OrePoly quot, rem = p;
    const int dq = q.l_degree();
    const MRational& lq = q.leading();
    while (!rem.is_zero() && rem.l_degree() >= dq) {
        const int t = rem.l_degree() - dq;
        MRational u = rem.leading() / lq.twisted(t);
        OrePoly mono = OrePoly::from_term(t, std::move(u));
        quot = quot + mono;
        rem = rem - ore_mul(mono, q);
    }
    return {quot, rem};
}

namespace {

// Clear denominators.  With full_content, remove the polynomial content
// over Z[q^{+-1/2}, M]; otherwise only the integer content.  Pin the unit
// so min M-exponent and min q-exponent are 0 and the leading integer
// coefficient of the leading L-coefficient is positive.
OrePoly normalize_operator(const OrePoly& p, bool full_content = true) {
    if (p.is_zero()) return p;
    // common denominator
    MPoly den = MPoly::one();
    for (const auto& [k, c] : p.coeffs()) {
        MPoly g = mpoly_gcd(den, c.den());
        den = den.div_exact(g) * c.den();
    }
    std::map<int, MPoly> cleared;
    for (const auto& [k, c] : p.coeffs())
        cleared.emplace(k, c.num() * den.div_exact(c.den()));
    // content across all coefficients
    MPoly cont;
    if (full_content) {
        for (const auto& [k, c] : cleared) cont = mpoly_gcd(cont, c);
    } else {
        Int ic = 0;
        for (const auto& [k, c] : cleared)
            for (const auto& [j, x] : c.coeffs()) ic = boost::multiprecision::gcd(ic, x.content());
        cont = MPoly::constant(LaurentPoly::constant(ic == 0 ? 1 : ic));
    }
    // also strip the M-monomial and q-monomial parts and pin orientation
    std::int64_t min_m = 0, min_q = 0;
    bool first = true;
    for (auto& [k, c] : cleared) {
        c = c.div_exact(cont);
        if (first) {
            min_m = c.min_m();
            min_q = c.coeffs().begin()->second.min_exp();
            first = false;
        }
        min_m = std::min(min_m, c.min_m());
        for (const auto& [j, x] : c.coeffs()) min_q = std::min(min_q, x.min_exp());
    }
    OrePoly out;
    for (auto& [k, c] : cleared) {
        c = c.shifted_m(-min_m).shifted_q(-min_q);
    }
    // sign: leading L-coefficient, leading M-degree, leading q-exponent
    const MPoly& lead = cleared.rbegin()->second;
    const Int& top = lead.coeffs().rbegin()->second.terms().back().second;
    const bool flip = top < 0;
    for (auto& [k, c] : cleared) {
        if (flip) c = -c;
        out = out + OrePoly::from_term(k, MRational(std::move(c)));
    }
    return out;
}

bool is_unit_operator(const OrePoly& p) {
    if (p.is_zero() || p.l_degree() != 0) return false;
    const MRational& c = p.coeff(0);
    return c.is_polynomial() && c.num().coeffs().size() == 1 &&
           c.num().coeffs().begin()->second.is_monomial();
}

}  // namespace

OrePoly recurrence_polynomial(const std::vector<OrePoly>& gens) {
    std::vector<OrePoly> gs;
    for (const auto& g : gens)
        if (!g.is_zero()) gs.push_back(g);
    if (gs.empty()) throw InputError("recurrence_polynomial needs a nonzero generator");
    OrePoly g = gs[0];
    for (std::size_t i = 1; i < gs.size(); ++i) {
        OrePoly a = g, b = gs[i];
        while (!b.is_zero()) {
            auto [q, r] = left_divmod(a, b);
            a = b;
            b = r;
        }
        g = a;
    }
    return normalize_operator(g);
}

// ---------------------------------------------------------------------------

int APoly::l_degree() const {
    int d = 0;
    for (const auto& [lm, c] : terms) d = std::max(d, lm.first);
    return d;
}

void APoly::add(int l, int m, Int c) {
    auto key = std::make_pair(l, m);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(key, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string APoly::pretty() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [lm, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        const bool unit = (a == 1) && (lm.first > 0 || lm.second > 0);
        if (!unit) os << a;
        if (lm.first > 0) {
            if (!unit) os << "*";
            os << "L";
            if (lm.first > 1) os << "^" << lm.first;
        }
        if (lm.second > 0) {
            if (lm.first > 0 || !unit) os << "*";
            os << "M";
            if (lm.second > 1) os << "^" << lm.second;
        }
    }
    return os.str();
}

APoly specialize_q1(const OrePoly& p) {
    if (p.is_zero()) throw InputError("specialize_q1 of the zero operator");
    // clear denominators without otherwise touching the unit
    MPoly den = MPoly::one();
    for (const auto& [k, c] : p.coeffs()) {
        MPoly g = mpoly_gcd(den, c.den());
        den = den.div_exact(g) * c.den();
    }
    std::map<int, MPoly> cleared;
    std::int64_t min_m = 0;
    for (const auto& [k, c] : p.coeffs()) {
        MPoly v = c.num() * den.div_exact(c.den());
        min_m = std::min(min_m, v.min_m());
        cleared.emplace(k, std::move(v));
    }
    APoly out;
    for (const auto& [k, c] : cleared) {
        for (const auto& [j, q] : c.coeffs()) {
            Int sum = 0;
            for (const auto& [e, x] : q.terms()) {
                if (((e % 2) + 2) % 2 != 0)
                    throw InputError("specialize_q1: operator not over Z[q^{+-1/2}]");
                sum += x;
            }
            out.add(k, static_cast<int>(j - min_m), std::move(sum));
        }
    }
    return out;
}

namespace {

// integer polynomials in M as sparse LaurentPoly with exponent = M-degree
LaurentPoly l_coeff_poly(const APoly& a, int l) {
    std::vector<LaurentPoly::Term> ts;
    for (const auto& [lm, c] : a.terms)
        if (lm.first == l) ts.emplace_back(lm.second, c);
    return LaurentPoly(std::move(ts));
}

}  // namespace

AJResult aj_compare(const APoly& a, const APoly& A) {
    if (a.is_zero() || A.is_zero()) throw InputError("aj_compare needs nonzero polynomials");
    AJResult res;
    const int da = a.l_degree(), dA = A.l_degree();
    if (da != dA) {
        res.essentially_equal = false;
        res.witness = "L-degrees differ: " + std::to_string(da) + " vs " + std::to_string(dA);
        return res;
    }
    const LaurentPoly la = l_coeff_poly(a, da);
    const LaurentPoly lA = l_coeff_poly(A, dA);
    for (int l = 0; l < da; ++l) {
        if (l_coeff_poly(a, l) * lA != l_coeff_poly(A, l) * la) {
            res.essentially_equal = false;
            res.witness = "normal forms differ at L^" + std::to_string(l);
            return res;
        }
    }
    res.essentially_equal = true;
    LaurentPoly g = laurent_gcd(la, lA);
    const LaurentPoly rn = la.div_exact(g), rd = lA.div_exact(g);
    res.witness = rd.is_one()
                      ? "ratio = " + rn.pretty("M", false)
                      : "ratio = (" + rn.pretty("M", false) + ")/(" + rd.pretty("M", false) + ")";
    return res;
}

// ---------------------------------------------------------------------------

Sequence Sequence::builtin(const std::string& name, std::int64_t n_max) {
    Sequence s;
    s.name_ = name;
    std::int64_t delta_k = -1;
    if (name.rfind("delta:", 0) == 0) delta_k = std::stoll(name.substr(6));
    LaurentPoly acc = LaurentPoly::one();
    for (std::int64_t n = 1; n <= n_max; ++n) {
        if (name == "brace") {
            s.lvals_.push_back(brace(n));
        } else if (name == "bracket") {
            s.lvals_.push_back(bracket(n));
        } else if (name == "brace_factorial") {
            acc = acc * brace(n);
            s.lvals_.push_back(acc);
        } else if (name == "bracket_factorial") {
            acc = acc * bracket(n);
            s.lvals_.push_back(acc);
        } else if (name == "qbinom_diag") {
            s.lvals_.push_back(qbinom(2 * n, n));
        } else if (delta_k >= 0) {
            s.lvals_.push_back(n == delta_k ? LaurentPoly::one() : LaurentPoly());
        } else {
            throw InputError("unknown builtin sequence: " + name);
        }
    }
    return s;
}

Sequence Sequence::from_values(std::string name, std::vector<LaurentPoly> values) {
    Sequence s;
    s.name_ = std::move(name);
    s.lvals_ = std::move(values);
    return s;
}

Sequence Sequence::from_cyclotomic(const CyclotomicCoeffs& c, std::int64_t n_max) {
    Sequence s;
    s.name_ = c.knot_name;
    for (std::int64_t n = 1; n <= n_max; ++n) s.lvals_.push_back(colored_jones(c, n));
    return s;
}

Sequence Sequence::from_habiro(std::string name, std::vector<HabiroElement> values) {
    Sequence s;
    s.kind_ = Kind::habiro;
    s.name_ = std::move(name);
    s.hvals_ = std::move(values);
    return s;
}

std::int64_t Sequence::n_max() const {
    return static_cast<std::int64_t>(kind_ == Kind::laurent ? lvals_.size() : hvals_.size());
}

const LaurentPoly& Sequence::l_at(std::int64_t n) const {
    if (kind_ != Kind::laurent) throw InputError("sequence is not laurent-kind");
    if (n < 1 || n > n_max())
        throw CoverageError("sequence " + name_ + " not defined at n = " + std::to_string(n));
    return lvals_[static_cast<std::size_t>(n - 1)];
}

const HabiroElement& Sequence::h_at(std::int64_t n) const {
    if (kind_ != Kind::habiro) throw InputError("sequence is not habiro-kind");
    if (n < 1 || n > n_max())
        throw CoverageError("sequence " + name_ + " not defined at n = " + std::to_string(n));
    return hvals_[static_cast<std::size_t>(n - 1)];
}

Sequence seq_add(const Sequence& a, const Sequence& b) {
    std::vector<LaurentPoly> v;
    const std::int64_t n = std::min(a.n_max(), b.n_max());
    for (std::int64_t i = 1; i <= n; ++i) v.push_back(a.l_at(i) + b.l_at(i));
    return Sequence::from_values(a.name() + "+" + b.name(), std::move(v));
}

Sequence seq_mul(const Sequence& a, const Sequence& b) {
    std::vector<LaurentPoly> v;
    const std::int64_t n = std::min(a.n_max(), b.n_max());
    for (std::int64_t i = 1; i <= n; ++i) v.push_back(a.l_at(i) * b.l_at(i));
    return Sequence::from_values(a.name() + "*" + b.name(), std::move(v));
}

Sequence ore_apply(const OrePoly& p, const Sequence& f, std::int64_t n_lo, std::int64_t n_hi) {
    if (f.kind() != Sequence::Kind::laurent)
        throw InputError("ore_apply on habiro-kind sequences is verification-only");
    if (p.is_zero()) {
        std::vector<LaurentPoly> zeros(static_cast<std::size_t>(n_hi - n_lo + 1));
        return Sequence::from_values("0", std::move(zeros));
    }
    if (n_lo < 1 || n_hi < n_lo) throw InputError("ore_apply: bad range");
    if (f.n_max() < n_hi + p.l_degree())
        throw CoverageError("ore_apply: sequence too short for the range");
    std::vector<LaurentPoly> out;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        RationalPoly acc;
        for (const auto& [k, c] : p.coeffs()) acc += c.eval_m(n) * RationalPoly(f.l_at(n + k));
        out.push_back(acc.as_laurent());
    }
    return Sequence::from_values("applied", std::move(out));
}

bool annihilates(const OrePoly& p, const Sequence& f, std::int64_t n_lo, std::int64_t n_hi) {
    if (p.is_zero()) return true;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        RationalPoly acc;
        for (const auto& [k, c] : p.coeffs()) acc += c.eval_m(n) * RationalPoly(f.l_at(n + k));
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool annihilates_habiro(const OrePoly& p, const Sequence& f, std::int64_t n_lo,
                        std::int64_t n_hi, std::int64_t bound) {
    if (p.is_zero()) return true;
    OrePoly cleared = recurrence_polynomial({p});
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        // accumulate by prefactor residue class
        std::map<int, HabiroElement> classes;
        for (const auto& [k, c] : cleared.coeffs()) {
            const LaurentPoly v = c.num().eval_m(n);
            const HabiroElement& h = f.h_at(n + k);
            // split v by exponent residue class mod 4
            std::map<int, std::vector<LaurentPoly::Term>> parts;
            for (const auto& [e, x] : v.terms())
                parts[static_cast<int>(((e % 4) + 4) % 4)].emplace_back(e, x);
            for (auto& [r, ts] : parts) {
                HabiroElement factor =
                    HabiroElement::from_laurent(LaurentPoly(std::move(ts)), h.trunc());
                HabiroElement prod = h_mul(factor, h);
                const int cls = static_cast<int>(((prod.prefactor() % 4) + 4) % 4);
                auto it = classes.find(cls);
                if (it == classes.end()) {
                    classes.emplace(cls, prod);
                } else {
                    it->second = h_add(it->second, prod);
                }
            }
        }
        for (const auto& [cls, h] : classes) {
            if (!h_equal(h, HabiroElement::zero(h.trunc()), bound)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Guessing.

namespace {

struct Column {
    int k;
    int j;
};

std::vector<Column> lattice_columns(int dL, int dM) {
    std::vector<Column> cols;
    for (int k = 0; k <= dL; ++k)
        for (int j = -dM; j <= dM; ++j) cols.push_back({k, j});
    return cols;
}

OrePoly operator_from_vector(const std::vector<Column>& cols,
                             const std::vector<LaurentPoly>& v) {
    std::map<int, MPoly> per_k;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (v[i].is_zero()) continue;
        per_k[cols[i].k] += MPoly::monomial(cols[i].j, v[i]);
    }
    OrePoly p;
    for (auto& [k, m] : per_k) p = p + OrePoly::from_term(k, MRational(std::move(m)));
    return p;
}

// --- exact fraction-free engine ---

std::optional<std::vector<LaurentPoly>> bareiss_nullvector(
    std::vector<std::vector<LaurentPoly>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    LaurentPoly prev = LaurentPoly::one();
    std::vector<std::size_t> piv_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[pr][c] * m[i][j] - m[i][c] * m[pr][j]).div_exact(prev);
            m[i][c] = LaurentPoly();
        }
        prev = m[pr][c];
        piv_cols.push_back(c);
        ++pr;
    }
    if (piv_cols.size() == cols) return std::nullopt;
    // first free column
    std::size_t free_c = 0;
    {
        std::size_t t = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (t < piv_cols.size() && piv_cols[t] == c) {
                ++t;
            } else {
                free_c = c;
                break;
            }
        }
    }
    // back substitution over rational functions
    std::vector<RationalPoly> v(cols);
    v[free_c] = RationalPoly::one();
    for (std::size_t t = piv_cols.size(); t-- > 0;) {
        const std::size_t row = t, pc = piv_cols[t];
        RationalPoly acc;
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (m[row][j].is_zero() || v[j].is_zero()) continue;
            acc += RationalPoly(m[row][j]) * v[j];
        }
        v[pc] = -acc / RationalPoly(m[row][pc]);
    }
    // clear denominators
    LaurentPoly den = LaurentPoly::one();
    for (const auto& r : v) {
        if (r.is_zero()) continue;
        LaurentPoly g = laurent_gcd(den, r.den());
        den = den.div_exact(g) * r.den();
    }
    std::vector<LaurentPoly> out;
    out.reserve(cols);
    for (const auto& r : v) out.push_back(r.num() * den.div_exact(r.den()));
    // strip common content
    LaurentPoly g;
    for (const auto& c : out) g = laurent_gcd(g, c);
    if (!g.is_zero() && !g.is_one())
        for (auto& c : out) c = c.div_exact(g);
    return out;
}

// --- modular evaluation engine ---

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= kPrime;
    while (e) {
        if (e & 1u) r = mod_mul(r, a);
        a = mod_mul(a, a);
        e >>= 1u;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t mod_of_int(const Int& v) {
    Int r = v % Int(kPrime);
    if (r < 0) r += Int(kPrime);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t eval_poly_mod(const LaurentPoly& p, std::uint64_t x) {
    const std::uint64_t xi = mod_inv(x);
    std::uint64_t r = 0;
    for (const auto& [e, c] : p.terms()) {
        const std::uint64_t pw =
            e >= 0 ? mod_pow(x, static_cast<std::uint64_t>(e))
                   : mod_pow(xi, static_cast<std::uint64_t>(-e));
        r = (r + static_cast<unsigned __int128>(mod_of_int(c)) * pw % kPrime) % kPrime;
    }
    return r;
}

// consecutive powers x^e for e in [lo, hi]
struct PowerTable {
    std::int64_t lo = 0;
    std::vector<std::uint64_t> pw;
    PowerTable(std::uint64_t x, std::int64_t lo_, std::int64_t hi_) : lo(lo_) {
        pw.resize(static_cast<std::size_t>(hi_ - lo_ + 1));
        std::uint64_t base = lo_ >= 0 ? mod_pow(x, static_cast<std::uint64_t>(lo_))
                                      : mod_pow(mod_inv(x), static_cast<std::uint64_t>(-lo_));
        for (auto& v : pw) {
            v = base;
            base = mod_mul(base, x);
        }
    }
    std::uint64_t at(std::int64_t e) const { return pw[static_cast<std::size_t>(e - lo)]; }
};

// reduced row echelon nullspace sample: returns pivot columns and the
// canonical nullvector with 1 at the first free column, or nullopt if the
// matrix has full column rank.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::uint64_t>>> rref_sample(
    std::vector<std::vector<std::uint64_t>> m) {
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> piv_cols;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = pr;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        const std::uint64_t inv = mod_inv(m[pr][c]);
        for (auto& x : m[pr]) x = mod_mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || m[i][c] == 0) continue;
            const std::uint64_t f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + kPrime - mod_mul(f, m[pr][j])) % kPrime;
        }
        piv_cols.push_back(c);
        ++pr;
    }
    if (piv_cols.size() == cols) return std::nullopt;
    std::size_t free_c = 0;
    {
        std::size_t t = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (t < piv_cols.size() && piv_cols[t] == c) {
                ++t;
            } else {
                free_c = c;
                break;
            }
        }
    }
    std::vector<std::uint64_t> v(cols, 0);
    v[free_c] = 1;
    for (std::size_t t = 0; t < piv_cols.size(); ++t)
        v[piv_cols[t]] = (kPrime - m[t][free_c]) % kPrime;
    return std::make_pair(std::move(piv_cols), std::move(v));
}

struct RationalFn {
    std::vector<std::uint64_t> num, den;  // ascending degree, mod p
};

std::uint64_t eval_dense(const std::vector<std::uint64_t>& c, std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = (mod_mul(r, x) + c[i]) % kPrime;
    return r;
}

// homogeneous Cauchy interpolation: num(x) - y den(x) = 0 at the samples
std::optional<RationalFn> cauchy_reconstruct(const std::vector<std::uint64_t>& xs,
                                             const std::vector<std::uint64_t>& ys,
                                             std::size_t bound) {
    const std::size_t n_unknowns = 2 * (bound + 1);
    const std::size_t need = n_unknowns + 16;
    if (xs.size() < need + 16) return std::nullopt;
    std::vector<std::vector<std::uint64_t>> m;
    for (std::size_t i = 0; i < need; ++i) {
        std::vector<std::uint64_t> row;
        row.reserve(n_unknowns);
        std::uint64_t xe = 1;
        for (std::size_t d = 0; d <= bound; ++d) {
            row.push_back(xe);
            xe = mod_mul(xe, xs[i]);
        }
        xe = 1;
        for (std::size_t d = 0; d <= bound; ++d) {
            row.push_back(kPrime - mod_mul(ys[i], xe) % kPrime);
            xe = mod_mul(xe, xs[i]);
        }
        m.push_back(std::move(row));
    }
    auto sol = rref_sample(std::move(m));
    if (!sol) return std::nullopt;
    RationalFn fn;
    fn.num.assign(sol->second.begin(), sol->second.begin() + static_cast<long>(bound) + 1);
    fn.den.assign(sol->second.begin() + static_cast<long>(bound) + 1, sol->second.end());
    // verify on held-back points
    for (std::size_t i = need; i < need + 16; ++i) {
        const std::uint64_t nv = eval_dense(fn.num, xs[i]);
        const std::uint64_t dv = eval_dense(fn.den, xs[i]);
        if ((nv + kPrime - mod_mul(ys[i], dv) % kPrime) % kPrime != 0) return std::nullopt;
    }
    return fn;
}

// rational reconstruction mod kPrime
std::optional<Rat> rat_reconstruct(std::uint64_t x) {
    using boost::multiprecision::cpp_int;
    cpp_int a = cpp_int(kPrime), b = cpp_int(x), pa = 0, pb = 1;
    const cpp_int bound = 1518500249;  // ~ sqrt(p/2)
    while (b > bound) {
        cpp_int q = a / b;
        cpp_int t = a - q * b;
        a = b;
        b = t;
        t = pa - q * pb;
        pa = pb;
        pb = t;
    }
    if (pb == 0) return std::nullopt;
    if (pb < 0) {
        pb = -pb;
        b = -b;
    }
    if (pb > bound) return std::nullopt;
    return Rat(b, pb);
}

struct ModularValues {
    std::vector<std::uint64_t> xs;
    // vecs[i][col]: normalized RREF nullvector at xs[i]
    std::vector<std::vector<std::uint64_t>> vecs;
};

std::optional<std::vector<LaurentPoly>> modular_nullvector(const Sequence& f,
                                                           const std::vector<Column>& cols,
                                                           std::int64_t n_train,
                                                           std::uint64_t seed) {
    const std::size_t U = cols.size();
    std::vector<const LaurentPoly*> vals;
    int dL = 0, dM = 0;
    for (const auto& c : cols) {
        dL = std::max(dL, c.k);
        dM = std::max(dM, std::abs(c.j));
    }
    for (std::int64_t n = 1; n <= n_train + dL; ++n) vals.push_back(&f.l_at(n));

    std::int64_t emin = 0, emax = 0;
    for (const auto* v : vals) {
        if (v->is_zero()) continue;
        emin = std::min(emin, v->min_exp());
        emax = std::max(emax, v->max_exp());
    }
    const std::int64_t shift_span = 2 * n_train * dM;
    emin -= shift_span + 1;
    emax += shift_span + 1;

    auto build_rows = [&](std::uint64_t x) {
        const PowerTable pt(x, emin, emax);
        std::vector<std::uint64_t> ev(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            std::uint64_t r = 0;
            for (const auto& [e, c] : vals[i]->terms())
                r = (r + static_cast<unsigned __int128>(mod_of_int(c)) * pt.at(e) % kPrime) %
                    kPrime;
            ev[i] = r;
        }
        std::vector<std::vector<std::uint64_t>> m;
        m.reserve(static_cast<std::size_t>(n_train));
        for (std::int64_t n = 1; n <= n_train; ++n) {
            std::vector<std::uint64_t> row(U);
            for (std::size_t ci = 0; ci < U; ++ci)
                row[ci] = mod_mul(pt.at(2 * n * cols[ci].j),
                                  ev[static_cast<std::size_t>(n - 1 + cols[ci].k)]);
            m.push_back(std::move(row));
        }
        return m;
    };

    // reference pivot structure
    auto ref = rref_sample(build_rows(seed));
    if (!ref) {
        // confirm full rank at two more points
        for (std::uint64_t x : {seed + 11, seed + 29}) {
            if (rref_sample(build_rows(x))) {
                ref = rref_sample(build_rows(x));
                break;
            }
        }
        if (!ref) return std::nullopt;
    }
    const auto ref_pivots = ref->first;

    ModularValues mv;
    std::uint64_t x = seed;
    auto ensure_points = [&](std::size_t want) {
        while (mv.xs.size() < want) {
            x += 7;
            auto s = rref_sample(build_rows(x));
            if (!s || s->first != ref_pivots) continue;
            mv.xs.push_back(x);
            mv.vecs.push_back(std::move(s->second));
        }
    };

    // reconstruct every coordinate as a rational function of x
    const std::size_t max_bound = 1024;
    std::vector<RationalFn> fns(cols.size());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        bool done = false;
        for (std::size_t bound = 16; bound <= max_bound; bound *= 2) {
            ensure_points(2 * (bound + 1) + 48);
            std::vector<std::uint64_t> ys;
            ys.reserve(mv.xs.size());
            for (const auto& v : mv.vecs) ys.push_back(v[ci]);
            auto fn = cauchy_reconstruct(mv.xs, ys, bound);
            if (fn) {
                fns[ci] = std::move(*fn);
                done = true;
                break;
            }
        }
        if (!done) return std::nullopt;
    }

    // common denominator over F_p[x]
    auto trim = [](std::vector<std::uint64_t> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    auto pmul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j] % kPrime) %
                           kPrime;
        }
        return r;
    };
    auto pdivmod = [&](std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den) {
        std::vector<std::uint64_t> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                                     0);
        const std::uint64_t di = mod_inv(den.back());
        while (num.size() >= den.size() && !num.empty()) {
            const std::uint64_t fcoef = mod_mul(num.back(), di);
            const std::size_t sh = num.size() - den.size();
            q[sh] = fcoef;
            for (std::size_t j = 0; j < den.size(); ++j)
                num[sh + j] = (num[sh + j] + kPrime - mod_mul(fcoef, den[j])) % kPrime;
            num = trim(std::move(num));
        }
        return std::make_pair(q, num);
    };
    auto pgcd = [&](std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
        a = trim(std::move(a));
        b = trim(std::move(b));
        while (!b.empty()) {
            auto [q, r] = pdivmod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            const std::uint64_t inv = mod_inv(a.back());
            for (auto& c : a) c = mod_mul(c, inv);
        }
        return a;
    };
    std::vector<std::uint64_t> common_den = {1};
    for (const auto& fn : fns) {
        auto d = trim(fn.den);
        if (d.empty()) return std::nullopt;
        auto g = pgcd(common_den, d);
        auto [q, r] = pdivmod(common_den, g);
        common_den = pmul(q, d);
    }
    // coordinates as polynomials mod p
    std::vector<std::vector<std::uint64_t>> coord(cols.size());
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        auto n = trim(fns[ci].num);
        if (n.empty()) {
            coord[ci] = {};
            continue;
        }
        auto [q, r] = pdivmod(common_den, trim(fns[ci].den));
        if (!r.empty()) return std::nullopt;
        coord[ci] = pmul(n, q);
    }
    // primitive part over F_p[x]
    std::vector<std::uint64_t> g = {};
    for (const auto& c : coord)
        if (!c.empty()) g = g.empty() ? trim(c) : pgcd(g, c);
    if (g.empty()) return std::nullopt;
    for (auto& c : coord) {
        if (c.empty()) continue;
        auto [q, r] = pdivmod(c, g);
        if (!r.empty()) return std::nullopt;
        c = q;
    }
    // normalize so the last nonzero coefficient of the last nonzero
    // coordinate equals 1, then rationally reconstruct every coefficient
    std::uint64_t scale_inv = 0;
    for (std::size_t ci = coord.size(); ci-- > 0;) {
        if (!coord[ci].empty()) {
            scale_inv = mod_inv(coord[ci].back());
            break;
        }
    }
    if (!scale_inv) return std::nullopt;
    std::vector<Rat> all;
    std::vector<std::vector<Rat>> rat(cols.size());
    for (std::size_t ci = 0; ci < coord.size(); ++ci) {
        rat[ci].resize(coord[ci].size());
        for (std::size_t d = 0; d < coord[ci].size(); ++d) {
            auto rr = rat_reconstruct(mod_mul(coord[ci][d], scale_inv));
            if (!rr) return std::nullopt;
            rat[ci][d] = *rr;
            all.push_back(*rr);
        }
    }
    // clear rational denominators
    Int lcm = 1;
    for (const auto& r : all) {
        const Int d = boost::multiprecision::denominator(r);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<LaurentPoly> out(cols.size());
    for (std::size_t ci = 0; ci < coord.size(); ++ci) {
        std::vector<LaurentPoly::Term> ts;
        for (std::size_t d = 0; d < rat[ci].size(); ++d) {
            if (rat[ci][d] == 0) continue;
            Int c = boost::multiprecision::numerator(rat[ci][d]) *
                    (lcm / boost::multiprecision::denominator(rat[ci][d]));
            ts.emplace_back(static_cast<LaurentPoly::Exp>(d), std::move(c));
        }
        out[ci] = LaurentPoly(std::move(ts));
    }
    // strip integer content
    Int ic = 0;
    for (const auto& c : out) ic = boost::multiprecision::gcd(ic, c.content());
    if (ic > 1) {
        for (auto& c : out) {
            std::vector<LaurentPoly::Term> ts;
            for (const auto& [e, x] : c.terms()) ts.emplace_back(e, x / ic);
            c = LaurentPoly(std::move(ts));
        }
    }
    return out;
}

}  // namespace

GuessOutcome guess_recurrence(const Sequence& f, int dL, int dM, std::int64_t n_train) {
    if (f.kind() != Sequence::Kind::laurent)
        throw InputError("guessing over habiro-kind sequences is excluded; verify instead");
    if (dL < 0 || dM < 0) throw InputError("guess_recurrence needs dL, dM >= 0");
    const auto cols = lattice_columns(dL, dM);
    const std::int64_t unknowns = static_cast<std::int64_t>(cols.size());
    if (n_train < unknowns + 5)
        throw CoverageError("guess_recurrence: insufficient data (need n_train >= " +
                            std::to_string(unknowns + 5) + ")");
    if (f.n_max() < n_train + dL)
        throw CoverageError("guess_recurrence: sequence shorter than n_train + dL");

    GuessOutcome out;
    std::size_t max_terms = 0;
    for (std::int64_t n = 1; n <= n_train + dL; ++n)
        max_terms = std::max(max_terms, f.l_at(n).size());

    std::optional<std::vector<LaurentPoly>> vec;
    if (cols.size() <= 30 && max_terms <= 900) {
        out.engine = "bareiss";
        std::vector<std::vector<LaurentPoly>> m;
        m.reserve(static_cast<std::size_t>(n_train));
        for (std::int64_t n = 1; n <= n_train; ++n) {
            std::vector<LaurentPoly> row;
            row.reserve(cols.size());
            for (const auto& c : cols)
                row.push_back(f.l_at(n + c.k).shifted(2 * n * c.j));
            m.push_back(std::move(row));
        }
        vec = bareiss_nullvector(std::move(m));
    } else {
        out.engine = "modular";
        vec = modular_nullvector(f, cols, n_train, 99991);
        if (!vec) vec = modular_nullvector(f, cols, n_train, 424243);
    }
    if (!vec) return out;

    // Polynomial-content removal can collapse the annihilator of a finitely
    // supported sequence to a unit; fall back to the integer-content
    // normalization in that case.
    auto finish = [&](const OrePoly& raw) -> OrePoly {
        OrePoly norm = normalize_operator(raw);
        if (is_unit_operator(norm) && !is_unit_operator(raw))
            norm = normalize_operator(raw, /*full_content=*/false);
        return norm;
    };

    OrePoly cand = operator_from_vector(cols, *vec);
    if (cand.is_zero()) return out;
    cand = finish(cand);
    if (!annihilates(cand, f, 1, n_train)) {
        // a reconstruction artifact; retry once with fresh sample points
        if (out.engine == "modular") {
            vec = modular_nullvector(f, cols, n_train, 777781);
            if (vec) {
                cand = finish(operator_from_vector(cols, *vec));
                if (annihilates(cand, f, 1, n_train)) {
                    out.in_half_lattice = cand.in_half_lattice();
                    out.op = std::move(cand);
                    return out;
                }
            }
        }
        throw Error("guess_recurrence: candidate failed exact verification");
    }
    out.in_half_lattice = cand.in_half_lattice();
    out.op = std::move(cand);
    return out;
}

std::optional<SearchOutcome> guess_search(const Sequence& f, int dL_max, int dM_max) {
    for (int dL = 1; dL <= dL_max; ++dL) {
        for (int dM = 0; dM <= dM_max; ++dM) {
            const std::int64_t unknowns = static_cast<std::int64_t>(dL + 1) * (2 * dM + 1);
            const std::int64_t n_train = unknowns + 5;
            if (f.n_max() < n_train + dL) break;
            auto g = guess_recurrence(f, dL, dM, n_train);
            if (g.op) return SearchOutcome{*std::move(g.op), dL, dM};
        }
    }
    return std::nullopt;
}

}  // namespace qjones
