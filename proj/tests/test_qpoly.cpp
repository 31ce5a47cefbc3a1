#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "diocount/quasipoly.hpp"

using namespace diocount;

namespace {
IntPoly ip(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return IntPoly(std::move(v));
}
RatPoly rp(std::vector<Rat> cs) { return RatPoly(std::move(cs)); }
} // namespace

TEST_CASE("numeric helpers") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(mod_floor(Int(-7), Int(2)) == 1);
    CHECK(mod_floor(Int(-1), Int(5)) == 4);
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
    CHECK(rat_frac(Rat(-7, 2)) == Rat(1, 2));
    CHECK(rat_is_integer(Rat(6, 3)));
    CHECK(!rat_is_integer(Rat(1, 3)));
    CHECK(inverse_mod_int(Int(3), Int(7)) == 5);
    CHECK(inverse_mod_int(Int(5), Int(1)) == 0);
    CHECK_THROWS_AS((void)inverse_mod_int(Int(2), Int(4)), DomainError);
    CHECK(rat_to_string(Rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("-9/6") == Rat(-3, 2));
    CHECK(rat_from_string("12") == Rat(12));
    CHECK_THROWS_AS((void)rat_from_string("1/0"), DomainError);
    CHECK_THROWS_AS((void)rat_from_string("zebra"), DomainError);
}

TEST_CASE("integer polynomial arithmetic") {
    IntPoly p = ip({-1, 0, 1}); // x^2 - 1
    IntPoly q = ip({1, 1});     // x + 1
    CHECK(p.degree() == 2);
    CHECK((q * ip({-1, 1})) == p);
    CHECK(p.eval(Int(5)) == 24);
    CHECK((p + q).eval(Int(3)) == 12);
    CHECK((p - p).is_zero());
    CHECK((p * Int(0)).is_zero());
    CHECK(IntPoly().degree() == -1);

    // p(2x + 3) computed by hand: (2x+3)^2 - 1 = 4x^2 + 12x + 8.
    CHECK(p.compose_linear(Int(2), Int(3)) == ip({8, 12, 4}));
    CHECK(ip({7}).compose_linear(Int(5), Int(-2)) == ip({7}));

    // Beyond the root bound the sign is the leading sign.
    IntPoly w = ip({100, -37, 2});
    Int b = w.root_bound();
    CHECK(w.eval(b) > 0);
    CHECK(w.eval(b + 17) > 0);
}

TEST_CASE("rational polynomial interpolation and integrality") {
    // Fit x(x+1)/2 through 3 points.
    std::vector<std::pair<Rat, Rat>> pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(3)}};
    RatPoly f = RatPoly::interpolate(pts);
    CHECK(f == rp({Rat(0), Rat(1, 2), Rat(1, 2)}));
    CHECK(f.eval(Rat(10)) == Rat(55));
    CHECK(f.denominator_lcm() == 2);
    CHECK(!f.is_integral());
    CHECK_THROWS_AS((void)f.to_int(), DomainError);

    RatPoly g = rp({Rat(3), Rat(-2), Rat(1)});
    CHECK(g.is_integral());
    CHECK(g.to_int() == ip({3, -2, 1}));

    CHECK_THROWS_AS((void)RatPoly::interpolate({{Rat(1), Rat(0)}, {Rat(1), Rat(2)}}),
                    DomainError);
}

TEST_CASE("quasi-polynomial canonical form") {
    // Two half-lines that glue to the identity map reduce to period 1.
    QuasiPoly q(2, {ip({0, 2}), ip({1, 2})});
    CHECK(q.period() == 1);
    CHECK(q == QuasiPoly::variable());

    // floor(n/2) genuinely needs period 2.
    QuasiPoly h(2, {ip({0, 1}), ip({0, 1})});
    CHECK(h.period() == 2);
    CHECK(h.eval(Int(9)) == 4);
    CHECK(h.eval(Int(8)) == 4);

    // Constant constituents that agree reduce to period 1.
    CHECK(QuasiPoly(4, {ip({5}), ip({5}), ip({5}), ip({5})}).period() == 1);

    // Period 6 built from a period-2 pattern collapses back to 2.
    QuasiPoly base(2, {ip({0, 3}), ip({2, 3})});
    QuasiPoly blown(6, base.constituents_at(6));
    CHECK(blown == base);
    CHECK(blown.period() == 2);

    CHECK_THROWS_AS(QuasiPoly(0, {}), DomainError);
    CHECK_THROWS_AS(QuasiPoly(3, {ip({1})}), DomainError);
}

TEST_CASE("quasi-polynomial evaluation and ring operations") {
    QuasiPoly d(2, {ip({2, 4}), ip({2, 2})});
    CHECK(d.eval(Int(5)) == 6);
    CHECK(d.eval(Int(4)) == 10);

    QuasiPoly a(2, {ip({0, 1}), ip({3})});
    QuasiPoly b(3, {ip({1}), ip({0, 0, 1}), ip({-2, 1})});
    QuasiPoly sum = a + b, dif = a - b, prod = a * b;
    for (long n = 0; n <= 40; ++n) {
        Int nn(n);
        CHECK(sum.eval(nn) == a.eval(nn) + b.eval(nn));
        CHECK(dif.eval(nn) == a.eval(nn) - b.eval(nn));
        CHECK(prod.eval(nn) == a.eval(nn) * b.eval(nn));
    }
    CHECK((a * Int(3)).eval(Int(7)) == a.eval(Int(7)) * 3);
    CHECK((a - a).is_zero());
    CHECK(QuasiPoly::constant(Int(4)).is_constant());
    CHECK(!a.is_constant());
    CHECK(prod.degree() == 3);
}

TEST_CASE("sign classification") {
    CHECK(sign_class(QuasiPoly()) == SignClass::Zero);
    CHECK(sign_class(QuasiPoly::variable()) == SignClass::StrictlyPositive);
    CHECK(sign_class(QuasiPoly(2, {ip({}), ip({1, 1})})) == SignClass::Nonnegative);
    CHECK(sign_class(QuasiPoly(1, {ip({3, -1})})) == SignClass::StrictlyNegative);
    CHECK(sign_class(QuasiPoly(2, {ip({0, 1}), ip({0, -1})})) == SignClass::Mixed);
    CHECK(sign_class(QuasiPoly(2, {ip({}), ip({0, -1})})) == SignClass::Mixed);

    CHECK(is_nonneg(QuasiPoly()));
    CHECK(is_nonneg(QuasiPoly(2, {ip({}), ip({1, 1})})));
    CHECK(!is_strict_pos(QuasiPoly(2, {ip({}), ip({1, 1})})));
    CHECK(is_strict_pos(QuasiPoly(1, {ip({-3, 1})})));
    CHECK(!is_nonneg(QuasiPoly(1, {ip({3, -1})})));

    QuasiPoly mixed(2, {ip({0, 1}), ip({0, -1})});
    CHECK(abs_qp(mixed) == QuasiPoly(2, {ip({0, 1}), ip({0, 1})}));
    CHECK(sign_indicator(mixed) == QuasiPoly(2, {ip({1}), ip({-1})}));
    CHECK(sign_indicator(QuasiPoly()) == QuasiPoly());
}

TEST_CASE("positivity thresholds") {
    CHECK(positivity_threshold(QuasiPoly(1, {ip({-3, 1})})) == 2);
    CHECK(positivity_threshold(QuasiPoly::constant(Int(1))) == 0);
    CHECK(positivity_threshold(QuasiPoly(1, {ip({1, -10, 1})})) == 9);
    CHECK(positivity_threshold(QuasiPoly()) == 0);
    CHECK(strict_positivity_threshold(QuasiPoly(1, {ip({-3, 1})})) == 3);
    CHECK(strict_positivity_threshold(QuasiPoly::variable()) == 0);
    CHECK(strict_positivity_threshold(QuasiPoly::constant(Int(2))) == 0);

    // Periodic dip: value is n on even n, n-6 on odd n; last violation at n=5.
    QuasiPoly dip(2, {ip({0, 2}), ip({-5, 2})});
    CHECK(positivity_threshold(dip) == 5);

    CHECK_THROWS_AS((void)positivity_threshold(QuasiPoly(1, {ip({3, -1})})), DomainError);
    CHECK_THROWS_AS((void)strict_positivity_threshold(QuasiPoly()), DomainError);
}

TEST_CASE("units") {
    CHECK(is_unit(QuasiPoly::constant(Int(1))));
    CHECK(is_unit(QuasiPoly::constant(Int(-1))));
    CHECK(is_unit(QuasiPoly(2, {ip({1}), ip({-1})})));
    CHECK(!is_unit(QuasiPoly::constant(Int(2))));
    CHECK(!is_unit(QuasiPoly::variable()));
    CHECK(!is_unit(QuasiPoly()));
    CHECK(!is_unit(QuasiPoly(2, {ip({1}), ip({})})));

    QuasiPoly u(2, {ip({1}), ip({-1})});
    QuasiPoly a(3, {ip({1, 2}), ip({5}), ip({0, 0, 7})});
    CHECK((u * u) == QuasiPoly::constant(Int(1)));
    CHECK(((a * u) * u) == a); // multiplying by a unit is invertible
}

TEST_CASE("rational quasi-polynomials") {
    RatQuasi tri(1, {rp({Rat(0), Rat(1, 2), Rat(1, 2)})}); // n(n+1)/2
    CHECK(tri.eval(Int(10)) == Rat(55));

    QuasiPoly t2 = tri.to_quasipoly();
    CHECK(t2.period() == 2);
    for (long n = 0; n <= 20; ++n)
        CHECK(Rat(t2.eval(Int(n))) == tri.eval(Int(n)));

    // Round trip through the rational form.
    CHECK(RatQuasi::from_quasipoly(t2).to_quasipoly() == t2);

    // Not integer-valued: n/2.
    RatQuasi half(1, {rp({Rat(0), Rat(1, 2)})});
    CHECK_THROWS_AS((void)half.to_quasipoly(), DomainError);

    // Same algebra as the integer ring.
    RatQuasi s = tri + tri * Rat(3);
    CHECK(s.eval(Int(4)) == Rat(40));
    CHECK((tri - tri).is_zero());
    CHECK((tri * tri).eval(Int(3)) == Rat(36));

    // Rational canonical form also reduces periods.
    RatQuasi red(2, {rp({Rat(0), Rat(2)}), rp({Rat(1), Rat(2)})});
    CHECK(red.period() == 1);

    // A quartic with half-integer coefficients that is integer-valued on Z>=0
    // expands to an equivalent period-2 integer form.
    RatQuasi quart(1, {rp({Rat(1), Rat(4), Rat(-115, 2), Rat(9), Rat(3, 2)})});
    QuasiPoly qz = quart.to_quasipoly();
    CHECK(qz.period() == 2);
    for (long n = 0; n <= 16; ++n)
        CHECK(Rat(qz.eval(Int(n))) == quart.eval(Int(n)));
}
