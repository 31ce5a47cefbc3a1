#include "diocount/quasipoly.hpp"

#include <sstream>

namespace diocount {

const char* to_string(SignClass s) {
    switch (s) {
        case SignClass::Zero: return "Zero";
        case SignClass::Nonnegative: return "Nonnegative";
        case SignClass::StrictlyPositive: return "StrictlyPositive";
        case SignClass::StrictlyNegative: return "StrictlyNegative";
        case SignClass::Mixed: return "Mixed";
    }
    return "?";
}

namespace {

std::vector<long> divisors_ascending(long t) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= t; ++d) {
        if (t % d == 0) {
            small.push_back(d);
            if (d != t / d) large.push_back(t / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace

QuasiPoly::QuasiPoly() : period_(1), cons_(1) {}

QuasiPoly::QuasiPoly(long period, std::vector<IntPoly> constituents)
    : period_(period), cons_(std::move(constituents)) {
    if (period_ < 1)
        throw invalid_representation("period must be a positive integer");
    if (static_cast<long>(cons_.size()) != period_)
        throw invalid_representation("expected exactly one constituent per residue class");
    canonicalize();
}

QuasiPoly QuasiPoly::constant(Int c) {
    QuasiPoly q;
    q.cons_[0] = IntPoly::constant(std::move(c));
    return q;
}

QuasiPoly QuasiPoly::variable() { return QuasiPoly(1, {IntPoly::variable()}); }

QuasiPoly QuasiPoly::from_poly(const IntPoly& p) { return QuasiPoly(1, {p}); }

void QuasiPoly::canonicalize() {
    if (period_ == 1) return;
    for (long t : divisors_ascending(period_)) {
        if (t == period_) break;
        const long L = period_ / t;
        const Int Lz(L);
        std::vector<IntPoly> reduced;
        reduced.reserve(static_cast<std::size_t>(t));
        bool ok = true;
        for (long j = 0; j < t && ok; ++j) {
            // Need g with g(L*y) = f_j(y): coefficient k of g is c_k / L^k.
            const IntPoly& fj = cons_[static_cast<std::size_t>(j)];
            std::vector<Int> g(fj.coeffs().size());
            Int pw(1);
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (fj.coeffs()[k] % pw != 0) { ok = false; break; }
                g[k] = fj.coeffs()[k] / pw;
                pw *= Lz;
            }
            if (ok) reduced.emplace_back(std::move(g));
        }
        if (!ok) continue;
        // Verify all other residue classes are consistent with the candidate.
        for (long i = 0; i < period_ && ok; ++i) {
            const long j = i % t;
            if (i == j) continue;
            const Int d((i - j) / t);
            if (reduced[static_cast<std::size_t>(j)].compose_linear(Lz, d) !=
                cons_[static_cast<std::size_t>(i)])
                ok = false;
        }
        if (ok) {
            period_ = t;
            cons_ = std::move(reduced);
            return;
        }
    }
}

bool QuasiPoly::is_zero() const {
    for (const auto& c : cons_)
        if (!c.is_zero()) return false;
    return true;
}

bool QuasiPoly::is_constant() const {
    for (const auto& c : cons_)
        if (c.degree() > 0) return false;
    return true;
}

long QuasiPoly::degree() const {
    long d = -1;
    for (const auto& c : cons_) d = std::max(d, c.degree());
    return d;
}

Int QuasiPoly::eval(const Int& n) const {
    if (n < 0) throw precondition_violation("quasi-polynomials are evaluated at n >= 0");
    Int T(period_);
    Int i = mod_floor(n, T);
    Int m = (n - i) / T;
    return cons_[static_cast<std::size_t>(i.get_si())].eval(m);
}

std::vector<IntPoly> QuasiPoly::constituents_at(long new_period) const {
    if (new_period % period_ != 0)
        throw internal_error("expansion period must be a multiple of the period");
    const long L = new_period / period_;
    const Int Lz(L);
    std::vector<IntPoly> out;
    out.reserve(static_cast<std::size_t>(new_period));
    for (long ip = 0; ip < new_period; ++ip) {
        const long j = ip % period_;
        const Int d(ip / period_);
        out.push_back(cons_[static_cast<std::size_t>(j)].compose_linear(Lz, d));
    }
    return out;
}

QuasiPoly QuasiPoly::operator-() const {
    std::vector<IntPoly> c;
    c.reserve(cons_.size());
    for (const auto& f : cons_) c.push_back(-f);
    return QuasiPoly(period_, std::move(c));
}

QuasiPoly QuasiPoly::operator+(const QuasiPoly& o) const {
    const long P = lcm_long(period_, o.period_);
    auto a = constituents_at(P);
    auto b = o.constituents_at(P);
    std::vector<IntPoly> c;
    c.reserve(static_cast<std::size_t>(P));
    for (long i = 0; i < P; ++i)
        c.push_back(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
    return QuasiPoly(P, std::move(c));
}

QuasiPoly QuasiPoly::operator-(const QuasiPoly& o) const { return *this + (-o); }

QuasiPoly QuasiPoly::operator*(const QuasiPoly& o) const {
    const long P = lcm_long(period_, o.period_);
    auto a = constituents_at(P);
    auto b = o.constituents_at(P);
    std::vector<IntPoly> c;
    c.reserve(static_cast<std::size_t>(P));
    for (long i = 0; i < P; ++i)
        c.push_back(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)]);
    return QuasiPoly(P, std::move(c));
}

QuasiPoly QuasiPoly::operator*(const Int& s) const {
    std::vector<IntPoly> c;
    c.reserve(cons_.size());
    for (const auto& f : cons_) c.push_back(f * s);
    return QuasiPoly(period_, std::move(c));
}

bool QuasiPoly::operator==(const QuasiPoly& o) const {
    return period_ == o.period_ && cons_ == o.cons_;
}

std::string QuasiPoly::to_string() const {
    std::ostringstream os;
    os << "(T=" << period_ << "; ";
    for (std::size_t i = 0; i < cons_.size(); ++i) {
        if (i) os << " | ";
        os << cons_[i].to_string("m");
    }
    os << ")";
    return os.str();
}

SignClass sign_class(const QuasiPoly& q) {
    bool any_zero = false, any_pos = false, any_neg = false;
    for (const auto& c : q.constituents()) {
        if (c.is_zero()) any_zero = true;
        else if (c.leading() > 0) any_pos = true;
        else any_neg = true;
    }
    if (!any_pos && !any_neg) return SignClass::Zero;
    if (!any_zero && !any_neg) return SignClass::StrictlyPositive;
    if (!any_zero && !any_pos) return SignClass::StrictlyNegative;
    if (!any_neg) return SignClass::Nonnegative;
    return SignClass::Mixed;
}

bool is_nonneg(const QuasiPoly& q) {
    SignClass s = sign_class(q);
    return s == SignClass::Zero || s == SignClass::Nonnegative ||
           s == SignClass::StrictlyPositive;
}

bool is_strict_pos(const QuasiPoly& q) {
    return sign_class(q) == SignClass::StrictlyPositive;
}

QuasiPoly abs_qp(const QuasiPoly& q) {
    std::vector<IntPoly> c;
    c.reserve(q.constituents().size());
    for (const auto& f : q.constituents())
        c.push_back(!f.is_zero() && f.leading() < 0 ? -f : f);
    return QuasiPoly(q.period(), std::move(c));
}

QuasiPoly sign_indicator(const QuasiPoly& q) {
    std::vector<IntPoly> c;
    c.reserve(q.constituents().size());
    for (const auto& f : q.constituents()) {
        int s = f.is_zero() ? 0 : (f.leading() > 0 ? 1 : -1);
        c.push_back(IntPoly::constant(Int(s)));
    }
    return QuasiPoly(q.period(), std::move(c));
}

namespace {

// Shared scan: smallest C >= 0 such that pred holds for all n > C, where pred
// is "q(n) >= 0" (strict=false) or "q(n) > 0" (strict=true). Pre: the
// eventual sign data guarantees pred for all large n.
Int threshold_scan(const QuasiPoly& q, bool strict) {
    const long T = q.period();
    Int scan_max(0);
    for (long i = 0; i < T; ++i) {
        const IntPoly& f = q.constituent(i);
        if (f.is_zero()) continue;
        Int bound = f.root_bound() * T + i;
        if (bound > scan_max) scan_max = bound;
    }
    Int last_bad(-1);
    for (Int n(0); n <= scan_max; ++n) {
        Int v = q.eval(n);
        if (strict ? (v <= 0) : (v < 0)) last_bad = n;
    }
    return last_bad < 0 ? Int(0) : last_bad;
}

} // namespace

Int positivity_threshold(const QuasiPoly& q) {
    if (!is_nonneg(q))
        throw no_threshold("quasi-polynomial is negative infinitely often; no nonnegativity threshold");
    return threshold_scan(q, false);
}

Int strict_positivity_threshold(const QuasiPoly& q) {
    if (!is_strict_pos(q))
        throw no_threshold("quasi-polynomial is not eventually strictly positive");
    return threshold_scan(q, true);
}

bool is_unit(const QuasiPoly& q) {
    for (const auto& f : q.constituents()) {
        if (f.degree() != 0) return false;
        if (abs(f.coeff(0)) != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

RatQuasi::RatQuasi() : period_(1), cons_(1) {}

RatQuasi::RatQuasi(long period, std::vector<RatPoly> constituents)
    : period_(period), cons_(std::move(constituents)) {
    if (period_ < 1)
        throw invalid_representation("period must be a positive integer");
    if (static_cast<long>(cons_.size()) != period_)
        throw invalid_representation("expected exactly one constituent per residue class");
    canonicalize();
}

RatQuasi RatQuasi::from_quasipoly(const QuasiPoly& q) {
    std::vector<RatPoly> c;
    c.reserve(q.constituents().size());
    for (const auto& f : q.constituents()) c.push_back(RatPoly::from_int(f));
    return RatQuasi(q.period(), std::move(c));
}

void RatQuasi::canonicalize() {
    if (period_ == 1) return;
    for (long t : divisors_ascending(period_)) {
        if (t == period_) break;
        const long L = period_ / t;
        const Rat Lq(L);
        std::vector<RatPoly> reduced;
        reduced.reserve(static_cast<std::size_t>(t));
        for (long j = 0; j < t; ++j) {
            const RatPoly& fj = cons_[static_cast<std::size_t>(j)];
            std::vector<Rat> g(fj.coeffs().size());
            Rat pw(1);
            for (std::size_t k = 0; k < g.size(); ++k) {
                g[k] = fj.coeffs()[k] / pw;
                pw *= Lq;
            }
            reduced.emplace_back(std::move(g));
        }
        bool ok = true;
        for (long i = 0; i < period_ && ok; ++i) {
            const long j = i % t;
            if (i == j) continue;
            const Rat d((i - j) / t);
            if (reduced[static_cast<std::size_t>(j)].compose_linear(Lq, d) !=
                cons_[static_cast<std::size_t>(i)])
                ok = false;
        }
        if (ok) {
            period_ = t;
            cons_ = std::move(reduced);
            return;
        }
    }
}

bool RatQuasi::is_zero() const {
    for (const auto& c : cons_)
        if (!c.is_zero()) return false;
    return true;
}

long RatQuasi::degree() const {
    long d = -1;
    for (const auto& c : cons_) d = std::max(d, c.degree());
    return d;
}

Rat RatQuasi::eval(const Int& n) const {
    if (n < 0) throw precondition_violation("quasi-polynomials are evaluated at n >= 0");
    Int T(period_);
    Int i = mod_floor(n, T);
    Int m = (n - i) / T;
    return cons_[static_cast<std::size_t>(i.get_si())].eval(Rat(m));
}

std::vector<RatPoly> RatQuasi::constituents_at(long new_period) const {
    if (new_period % period_ != 0)
        throw internal_error("expansion period must be a multiple of the period");
    const long L = new_period / period_;
    const Rat Lq(L);
    std::vector<RatPoly> out;
    out.reserve(static_cast<std::size_t>(new_period));
    for (long ip = 0; ip < new_period; ++ip) {
        const long j = ip % period_;
        const Rat d(ip / period_);
        out.push_back(cons_[static_cast<std::size_t>(j)].compose_linear(Lq, d));
    }
    return out;
}

RatQuasi RatQuasi::operator+(const RatQuasi& o) const {
    const long P = lcm_long(period_, o.period_);
    auto a = constituents_at(P);
    auto b = o.constituents_at(P);
    std::vector<RatPoly> c;
    c.reserve(static_cast<std::size_t>(P));
    for (long i = 0; i < P; ++i)
        c.push_back(a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
    return RatQuasi(P, std::move(c));
}

RatQuasi RatQuasi::operator-(const RatQuasi& o) const { return *this + (o * Rat(-1)); }

RatQuasi RatQuasi::operator*(const RatQuasi& o) const {
    const long P = lcm_long(period_, o.period_);
    auto a = constituents_at(P);
    auto b = o.constituents_at(P);
    std::vector<RatPoly> c;
    c.reserve(static_cast<std::size_t>(P));
    for (long i = 0; i < P; ++i)
        c.push_back(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)]);
    return RatQuasi(P, std::move(c));
}

RatQuasi RatQuasi::operator*(const Rat& s) const {
    std::vector<RatPoly> c;
    c.reserve(cons_.size());
    for (const auto& f : cons_) c.push_back(f * s);
    return RatQuasi(period_, std::move(c));
}

bool RatQuasi::operator==(const RatQuasi& o) const {
    return period_ == o.period_ && cons_ == o.cons_;
}

QuasiPoly RatQuasi::to_quasipoly() const {
    Int D(1);
    for (const auto& f : cons_) D = lcm(D, f.denominator_lcm());
    if (D == 1) {
        std::vector<IntPoly> c;
        c.reserve(cons_.size());
        for (const auto& f : cons_) c.push_back(f.to_int());
        return QuasiPoly(period_, std::move(c));
    }
    if (!D.fits_slong_p())
        throw internal_error("denominator lcm too large for period expansion");
    const long Dl = D.get_si();
    const long newP = lcm_long(period_, period_ * Dl);
    auto expanded = constituents_at(newP);
    std::vector<IntPoly> c;
    c.reserve(expanded.size());
    for (const auto& f : expanded) c.push_back(f.to_int()); // throws non-integral if not Z-valued
    return QuasiPoly(newP, std::move(c));
}

std::string RatQuasi::to_string() const {
    std::ostringstream os;
    os << "(T=" << period_ << "; ";
    for (std::size_t i = 0; i < cons_.size(); ++i) {
        if (i) os << " | ";
        os << cons_[i].to_string("m");
    }
    os << ")";
    return os.str();
}

} // namespace diocount
