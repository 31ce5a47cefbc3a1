#include "diocount/gdiv.hpp"

#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace diocount {

namespace {

// Rational long division f = q·g + s with deg s < deg g. Pre: g nonzero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& f, const RatPoly& g) {
    std::vector<Rat> r = f.coeffs();
    const long dg = g.degree();
    std::vector<Rat> q(static_cast<std::size_t>(std::max<long>(f.degree() - dg + 1, 0)), Rat(0));
    while (static_cast<long>(r.size()) - 1 >= dg) {
        const long dr = static_cast<long>(r.size()) - 1;
        Rat c = r.back() / g.leading();
        q[static_cast<std::size_t>(dr - dg)] = c;
        for (long k = 0; k <= dg; ++k)
            r[static_cast<std::size_t>(dr - dg + k)] -= c * g.coeff(static_cast<std::size_t>(k));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

const Int& max_int(const Int& a, const Int& b) { return a < b ? b : a; }

// A cheap sound settling point: beyond it every nonconstant constituent of q
// has the sign of its leading coefficient (constants keep their sign
// everywhere, so they impose nothing).
Int sound_threshold(const QuasiPoly& q) {
    Int C(0);
    const long T = q.period();
    for (long i = 0; i < T; ++i) {
        const IntPoly& c = q.constituent(i);
        if (c.degree() <= 0) continue;
        Int cand = c.root_bound() * T + i - 1;
        if (cand > C) C = cand;
    }
    return C;
}

// Shared preprocessing for both division paths.
struct DivSetup {
    bool negated = false; // g was negated to make the leading coefficient positive
    IntPoly h;            // |g|
    RatPoly q, s;         // f = q·h + s over Q, deg s < deg h
    long T = 1;           // lcm of denominators of q's coefficients
};

DivSetup divide_setup(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw division_by_zero("division by the zero polynomial");
    DivSetup st;
    st.negated = g.leading() < 0;
    st.h = st.negated ? -g : g;
    std::tie(st.q, st.s) = poly_divmod(RatPoly::from_int(f), RatPoly::from_int(st.h));
    Int L = st.q.denominator_lcm();
    if (!L.fits_slong_p()) throw internal_error("quotient denominator lcm too large");
    st.T = L.get_si();
    return st;
}

DivisionResult finish_division(const DivSetup& st, const QuasiPoly& fq, QuasiPoly P,
                               bool verify_only) {
    QuasiPoly hq = QuasiPoly::from_poly(st.h);
    QuasiPoly r = fq - P * hq;
    if (!is_nonneg(r) || !is_strict_pos(hq - r)) {
        if (verify_only) return {QuasiPoly(), QuasiPoly(), Int(-1)}; // caller retries
        throw internal_error("division candidate failed the remainder condition");
    }
    Int C = sound_threshold(hq);
    C = max_int(C, sound_threshold(r));
    C = max_int(C, sound_threshold(hq - r));
    return {st.negated ? -P : P, std::move(r), std::move(C)};
}

// Build a quotient candidate from exact floor samples at period T, sampling
// only at n >= B. Fails (returns false) if some class does not interpolate to
// integer coefficients.
bool sample_quotient(const IntPoly& f, const IntPoly& h, long T, const Int& B, long D,
                     QuasiPoly* out) {
    std::vector<IntPoly> cons;
    cons.reserve(static_cast<std::size_t>(T));
    const Int Tz(T);
    for (long i = 0; i < T; ++i) {
        Int m0(0);
        if (B > i) {
            Int num = B - i;
            mpz_cdiv_q(m0.get_mpz_t(), num.get_mpz_t(), Tz.get_mpz_t());
        }
        std::vector<std::pair<Rat, Rat>> pts;
        pts.reserve(static_cast<std::size_t>(D + 1));
        for (long d = 0; d <= D; ++d) {
            Int m = m0 + d;
            Int n = m * Tz + i;
            Int v = floor_div(f.eval(n), h.eval(n));
            pts.emplace_back(Rat(m), Rat(v));
        }
        RatPoly fit = RatPoly::interpolate(pts);
        if (!fit.is_integral()) return false;
        cons.push_back(fit.to_int());
    }
    *out = QuasiPoly(T, std::move(cons));
    return true;
}

} // namespace

namespace {

// sound_threshold of a single constituent at period 1.
Int sound_threshold_poly(const IntPoly& p) {
    return p.degree() <= 0 ? Int(0) : Int(p.root_bound() - 1);
}

// deg f <= deg g: the rational quotient is a constant, so the floor quotient
// settles to a single integer — the floor of the leading-term ratio, shifted
// down by one when that ratio is an exact integer and the residual is
// eventually negative. Integer-only: this short-circuit dominates the inner
// loop of the Euclidean algorithm, where degrees shrink immediately, so it
// must not pay for rational setup or ring arithmetic.
DivisionResult div_zx_constant_quotient(const IntPoly& f, const IntPoly& g) {
    const bool negated = g.leading() < 0;
    IntPoly h = negated ? -g : g;
    Int q0(0);
    if (f.degree() < h.degree()) {
        if (!f.is_zero() && f.leading() < 0) q0 = -1;
    } else if (mpz_divisible_p(f.leading().get_mpz_t(), h.leading().get_mpz_t())) {
        q0 = f.leading() / h.leading();
        IntPoly s = f - h * q0;
        if (!s.is_zero() && s.leading() < 0) q0 -= 1;
    } else {
        q0 = floor_div(f.leading(), h.leading());
    }
    IntPoly r = f - h * q0;
    IntPoly hr = h - r;
    if ((!r.is_zero() && r.leading() < 0) || hr.is_zero() || hr.leading() < 0)
        throw internal_error("division candidate failed the remainder condition");
    Int C = max_int(sound_threshold_poly(h),
                    max_int(sound_threshold_poly(r), sound_threshold_poly(hr)));
    return {QuasiPoly::constant(negated ? Int(-q0) : q0), QuasiPoly::from_poly(r),
            std::move(C)};
}

} // namespace

DivisionResult div_zx(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw division_by_zero("division by the zero polynomial");
    if (f.degree() <= g.degree()) return div_zx_constant_quotient(f, g);
    // Constant divisor: the direct constituent-by-constituent construction
    // needs no sampling pass.
    if (g.degree() == 0) return detail::div_zx_symbolic(f, g);

    DivSetup st = divide_setup(f, g);
    QuasiPoly fq = QuasiPoly::from_poly(f);

    // Sampling region where ⌊f(n)/h(n)⌋ provably agrees with the eventual
    // quotient: beyond every root of h and where |s(n)| < h(n)/T (the
    // fractional parts of q on each class clear the residual s/h there).
    Int B = st.h.root_bound();
    if (!st.s.is_zero()) {
        IntPoly Ls = (st.s * Rat(st.T)).to_int();
        B = max_int(B, (st.h - Ls).root_bound());
        B = max_int(B, (st.h + Ls).root_bound());
    }
    const long D = std::max<long>(f.degree() - st.h.degree(), 0);

    for (long tm = 1; tm <= 8; tm *= 2) {
        for (long bm = 1; bm <= 8; bm *= 2) {
            QuasiPoly P;
            if (!sample_quotient(f, st.h, st.T * tm, B * bm, D, &P)) continue;
            DivisionResult res = finish_division(st, fq, std::move(P), true);
            if (res.threshold >= 0) return res;
        }
    }
    // The sampled search is exhaustive in practice; fall back to the direct
    // construction rather than fail.
    return detail::div_zx_symbolic(f, g);
}

namespace detail {

DivisionResult div_zx_symbolic(const IntPoly& f, const IntPoly& g) {
    DivSetup st = divide_setup(f, g);
    const int ssign = st.s.is_zero() ? 0 : (st.s.leading() > 0 ? 1 : -1);
    std::vector<IntPoly> cons;
    cons.reserve(static_cast<std::size_t>(st.T));
    for (long i = 0; i < st.T; ++i) {
        // q(T·y + i) has integer coefficients except possibly the constant
        // term; the quotient constituent replaces that term with its floor
        // (minus 1 when it is an integer and the residual s is eventually
        // negative).
        RatPoly qi = st.q.compose_linear(Rat(st.T), Rat(i));
        std::vector<Int> c(std::max<std::size_t>(qi.coeffs().size(), 1));
        for (std::size_t k = 1; k < qi.coeffs().size(); ++k) {
            const Rat& ck = qi.coeffs()[k];
            if (!rat_is_integer(ck))
                throw internal_error("non-integer shift coefficient in quotient construction");
            c[k] = ck.get_num() / ck.get_den();
        }
        Rat gamma = qi.coeff(0);
        if (rat_is_integer(gamma))
            c[0] = gamma.get_num() / gamma.get_den() - (ssign < 0 ? 1 : 0);
        else
            c[0] = rat_floor(gamma);
        cons.emplace_back(std::move(c));
    }
    return finish_division(st, QuasiPoly::from_poly(f), QuasiPoly(st.T, std::move(cons)),
                           false);
}

} // namespace detail

DivisionResult div_r(const QuasiPoly& f, const QuasiPoly& g) {
    const long T0 = lcm_long(f.period(), g.period());
    auto fc = f.constituents_at(T0);
    auto gc = g.constituents_at(T0);
    std::vector<DivisionResult> inner(static_cast<std::size_t>(T0));
    long L = 1;
    for (long i = 0; i < T0; ++i) {
        if (gc[static_cast<std::size_t>(i)].is_zero()) continue;
        inner[static_cast<std::size_t>(i)] =
            div_zx(fc[static_cast<std::size_t>(i)], gc[static_cast<std::size_t>(i)]);
        L = lcm_long(L, lcm_long(inner[static_cast<std::size_t>(i)].quotient.period(),
                                 inner[static_cast<std::size_t>(i)].remainder.period()));
    }
    const long T = T0 * L;
    // Per-class expansions of the inner results to the common inner period.
    std::vector<std::vector<IntPoly>> Pex(static_cast<std::size_t>(T0)),
        rex(static_cast<std::size_t>(T0));
    for (long i = 0; i < T0; ++i) {
        if (gc[static_cast<std::size_t>(i)].is_zero()) continue;
        Pex[static_cast<std::size_t>(i)] =
            inner[static_cast<std::size_t>(i)].quotient.constituents_at(L);
        rex[static_cast<std::size_t>(i)] =
            inner[static_cast<std::size_t>(i)].remainder.constituents_at(L);
    }
    std::vector<IntPoly> Pc, rc;
    Pc.reserve(static_cast<std::size_t>(T));
    rc.reserve(static_cast<std::size_t>(T));
    for (long rho = 0; rho < T; ++rho) {
        const long i = rho % T0;
        const long j = rho / T0;
        if (gc[static_cast<std::size_t>(i)].is_zero()) {
            Pc.emplace_back();
            rc.push_back(fc[static_cast<std::size_t>(i)].compose_linear(Int(L), Int(j)));
        } else {
            Pc.push_back(Pex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            rc.push_back(rex[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    Int C(0);
    for (long i = 0; i < T0; ++i) {
        if (gc[static_cast<std::size_t>(i)].is_zero()) continue;
        C = max_int(C, inner[static_cast<std::size_t>(i)].threshold * T0 + i);
    }
    return {QuasiPoly(T, std::move(Pc)), QuasiPoly(T, std::move(rc)), std::move(C)};
}

QuasiPoly quo(const QuasiPoly& f, const QuasiPoly& g) { return div_r(f, g).quotient; }
QuasiPoly rem(const QuasiPoly& f, const QuasiPoly& g) { return div_r(f, g).remainder; }

bool divides(const QuasiPoly& g, const QuasiPoly& f) {
    const long T = g.period();
    for (long i = 0; i < T; ++i) {
        const IntPoly& c = g.constituent(i);
        if (c.is_zero())
            throw precondition_violation("divisor vanishes on a whole residue class");
        Int bound = c.root_bound();
        for (Int m(0); m <= bound; ++m)
            if (c.eval(m) == 0)
                throw precondition_violation("divisor vanishes at n = " +
                                             Int(m * T + i).get_str());
    }
    return div_r(f, g).remainder.is_zero();
}

namespace {

struct PairCert {
    QuasiPoly d, u, v; // d = u·a + v·b
};

// One leaf of the classwise extended Euclidean recursion: on the residue
// class n = period·y + residue the finished gcd and Bézout cofactors are
// plain polynomials in y, with d sign-normalized to a nonnegative leading
// coefficient.
struct EuclidLeaf {
    long period;
    long residue;
    IntPoly d, u, v;
};

// Extended Euclid on one residue class. (r0, r1) are the running remainders
// and (s0, t0), (s1, t1) the Bézout rows, all polynomials in the class
// variable. Whenever a division result is genuinely periodic in that
// variable, the class is refined into one subclass per inner residue and the
// recursion continues there; running the chain per class this way keeps every
// step a plain polynomial division, instead of paying for full-period ring
// arithmetic on classes that finished steps ago. A class where the divisor
// vanishes identically finishes in one extra step ((x, 0) after (0, x)), so
// no cross-class stopping rule is needed.
void euclid_class(long period, long residue, IntPoly r0, IntPoly r1, IntPoly s0, IntPoly t0,
                  IntPoly s1, IntPoly t1, int depth, std::vector<EuclidLeaf>& out) {
    for (int step = 0; step < 1000; ++step) {
        if (r1.is_zero()) {
            Int sg(r0.is_zero() ? 0 : (r0.leading() > 0 ? 1 : -1));
            out.push_back({period, residue, r0 * sg, s0 * sg, t0 * sg});
            return;
        }
        DivisionResult dv = div_zx(r0, r1);
        const long p = lcm_long(dv.quotient.period(), dv.remainder.period());
        if (p == 1) {
            const IntPoly& q = dv.quotient.constituent(0);
            IntPoly r2 = dv.remainder.constituent(0);
            IntPoly s2 = s0 - q * s1;
            IntPoly t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
            continue;
        }
        if (depth >= 64) throw internal_error("gcd class refinement too deep");
        Int big = Int(period) * Int(p);
        if (!big.fits_slong_p()) throw internal_error("gcd class period too large");
        const long nper = big.get_si();
        auto qs = dv.quotient.constituents_at(p);
        auto rs = dv.remainder.constituents_at(p);
        const Int P(p);
        for (long j = 0; j < p; ++j) {
            const Int J(j);
            IntPoly r1j = r1.compose_linear(P, J);
            IntPoly s1j = s1.compose_linear(P, J);
            IntPoly t1j = t1.compose_linear(P, J);
            IntPoly s2j = s0.compose_linear(P, J) - qs[static_cast<std::size_t>(j)] * s1j;
            IntPoly t2j = t0.compose_linear(P, J) - qs[static_cast<std::size_t>(j)] * t1j;
            euclid_class(nper, residue + period * j, std::move(r1j),
                         std::move(rs[static_cast<std::size_t>(j)]), std::move(s1j),
                         std::move(t1j), std::move(s2j), std::move(t2j), depth + 1, out);
        }
        return;
    }
    throw internal_error("gcd iteration exceeded the step bound");
}

PairCert ggcd_pair(const QuasiPoly& a, const QuasiPoly& b) {
    const long T0 = lcm_long(a.period(), b.period());
    auto ac = a.constituents_at(T0);
    auto bc = b.constituents_at(T0);
    std::vector<EuclidLeaf> leaves;
    for (long i = 0; i < T0; ++i)
        euclid_class(T0, i, std::move(ac[static_cast<std::size_t>(i)]),
                     std::move(bc[static_cast<std::size_t>(i)]), IntPoly::constant(Int(1)),
                     IntPoly(), IntPoly(), IntPoly::constant(Int(1)), 0, leaves);

    long P = 1;
    for (const auto& lf : leaves) P = lcm_long(P, lf.period);
    std::vector<IntPoly> dc(static_cast<std::size_t>(P)), uc(static_cast<std::size_t>(P)),
        vc(static_cast<std::size_t>(P));
    std::vector<bool> filled(static_cast<std::size_t>(P), false);
    for (const auto& lf : leaves) {
        const long S = P / lf.period;
        const Int Sz(S);
        for (long j = 0; j < S; ++j) {
            const auto rho = static_cast<std::size_t>(lf.residue + lf.period * j);
            if (filled[rho]) throw internal_error("gcd class cover is not a partition");
            filled[rho] = true;
            const Int J(j);
            dc[rho] = lf.d.compose_linear(Sz, J);
            uc[rho] = lf.u.compose_linear(Sz, J);
            vc[rho] = lf.v.compose_linear(Sz, J);
        }
    }
    for (bool okay : filled)
        if (!okay) throw internal_error("gcd class cover is not a partition");
    return {QuasiPoly(P, std::move(dc)), QuasiPoly(P, std::move(uc)),
            QuasiPoly(P, std::move(vc))};
}

} // namespace

GcdCertificate ggcd_bezout(const std::vector<QuasiPoly>& fs) {
    if (fs.empty()) throw undefined_gcd("gcd of an empty family");
    bool all_zero = true;
    for (const auto& f : fs)
        if (!f.is_zero()) { all_zero = false; break; }
    if (all_zero) throw undefined_gcd("gcd of an all-zero family");

    QuasiPoly d = abs_qp(fs[0]);
    std::vector<QuasiPoly> cof{sign_indicator(fs[0])};
    for (std::size_t k = 1; k < fs.size(); ++k) {
        PairCert c = ggcd_pair(d, fs[k]);
        for (auto& e : cof) e = e * c.u;
        cof.push_back(c.v);
        d = std::move(c.d);
    }
    return {std::move(d), std::move(cof)};
}

QuasiPoly ggcd(const QuasiPoly& a, const QuasiPoly& b) {
    return ggcd_bezout({a, b}).gcd;
}

QuasiPoly inverse_mod(const QuasiPoly& a1, const QuasiPoly& a2) {
    GcdCertificate c = ggcd_bezout({a1, a2});
    if (!(c.gcd == QuasiPoly::constant(Int(1))))
        throw no_inverse("inputs are not coprime; gcd is " + c.gcd.to_string());
    return c.cofactors[0];
}

namespace {

bool vector_constant(const ParamVector& v) {
    for (const auto& e : v)
        if (!e.is_constant()) return false;
    return true;
}

std::string vector_key(const ParamVector& v) {
    std::string k;
    for (const auto& e : v) {
        k += e.to_string();
        k += ';';
    }
    return k;
}

} // namespace

CoprimeTree strongly_coprime(const ParamVector& A) {
    if (A.empty()) throw precondition_violation("empty input vector");
    for (const auto& e : A)
        if (!is_strict_pos(e))
            throw precondition_violation(
                "every entry must have all-positive leading coefficients");

    CoprimeTree tree;
    std::set<std::string> seen;
    seen.insert(vector_key(A));
    tree.levels.push_back({A});

    constexpr long kMaxLevels = 64;
    while (true) {
        if (static_cast<long>(tree.levels.size()) > kMaxLevels)
            throw internal_error("remainder-tree construction did not stabilize");
        std::vector<ParamVector> next;
        for (const auto& V : tree.levels.back()) {
            for (std::size_t j = 0; j < V.size(); ++j) {
                ParamVector W(V.size());
                for (std::size_t i = 0; i < V.size(); ++i)
                    W[i] = (i == j) ? V[j] : div_r(V[i], V[j]).remainder;
                if (vector_constant(W)) continue;
                if (!seen.insert(vector_key(W)).second) continue;
                next.push_back(std::move(W));
            }
        }
        if (next.empty()) break;
        tree.levels.push_back(std::move(next));
    }
    tree.h = static_cast<long>(tree.levels.size());

    const QuasiPoly one = QuasiPoly::constant(Int(1));
    tree.strongly_coprime = true;
    for (const auto& level : tree.levels)
        for (const auto& V : level)
            for (std::size_t i = 0; i + 1 < V.size() && tree.strongly_coprime; ++i)
                for (std::size_t j = i + 1; j < V.size(); ++j)
                    if (!(ggcd(V[i], V[j]) == one)) {
                        tree.strongly_coprime = false;
                        break;
                    }
    return tree;
}

} // namespace diocount
