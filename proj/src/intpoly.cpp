#include "diocount/intpoly.hpp"

#include <sstream>

namespace diocount {

const Int IntPoly::kZero = Int(0);
const Rat RatPoly::kZero = Rat(0);

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::variable() { return IntPoly({Int(0), Int(1)}); }

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    IntPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
}

IntPoly IntPoly::compose_linear(const Int& a, const Int& b) const {
    // Horner in the substituted variable: p(a·x+b).
    IntPoly acc;
    IntPoly lin({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + IntPoly::constant(*it);
    return acc;
}

Int IntPoly::root_bound() const {
    if (c_.empty() || c_.size() == 1) return Int(0);
    Rat maxratio(0);
    Int lead = abs(c_.back());
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        Rat ratio(abs(c_[i]), lead);
        ratio.canonicalize();
        if (ratio > maxratio) maxratio = ratio;
    }
    return rat_floor(maxratio) + 2; // strict: 1 + max|c_i|/|lead| < bound
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    normalize();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    c.canonicalize();
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    RatPoly r = *this;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
}

RatPoly RatPoly::compose_linear(const Rat& a, const Rat& b) const {
    RatPoly acc;
    RatPoly lin({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + RatPoly::constant(*it);
    return acc;
}

Int RatPoly::denominator_lcm() const {
    Int l(1);
    for (const auto& c : c_) l = lcm(l, c.get_den());
    return l;
}

bool RatPoly::is_integral() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const auto& c : c_) {
        if (c.get_den() != 1)
            throw non_integral("polynomial has non-integer coefficient " + rat_to_string(c));
        r.push_back(c.get_num());
    }
    return IntPoly(std::move(r));
}

std::string RatPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        if (k == 0 || a != 1) os << rat_to_string(a);
        if (k >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

RatPoly RatPoly::interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton's divided differences: exact and O(n^2).
    const std::size_t n = points.size();
    if (n == 0) return RatPoly();
    std::vector<Rat> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            Rat dx = points[i].first - points[i - j].first;
            if (dx == 0) throw precondition_violation("interpolation nodes must be distinct");
            coef[i] = (coef[i] - coef[i - 1]) / dx;
            if (i == j) break;
        }
    // Assemble Σ coef[i]·Π_{t<i}(x − x_t).
    RatPoly result = RatPoly::constant(coef[n - 1]);
    for (std::size_t i = n - 1; i > 0; --i) {
        RatPoly lin({-points[i - 1].first, Rat(1)});
        result = result * lin + RatPoly::constant(coef[i - 1]);
    }
    return result;
}

} // namespace diocount
