#include <cstdint>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qforms/poly.hpp"
#include "test_support.hpp"

using namespace qforms;
using test::all_polys_up_to;
using test::make_rng;
using test::random_poly;

TEST_CASE("Fq accepts odd primes and rejects everything else") {
    CHECK_NOTHROW(Fq(3));
    CHECK_NOTHROW(Fq(5));
    CHECK_NOTHROW(Fq(7));
    CHECK_NOTHROW(Fq(104729));
    CHECK_NOTHROW(Fq(2147483647));  // 2^31 - 1, the largest allowed prime

    CHECK_THROWS_AS(Fq(2), std::invalid_argument);
    CHECK_THROWS_AS(Fq(1), std::invalid_argument);
    CHECK_THROWS_AS(Fq(0), std::invalid_argument);
    CHECK_THROWS_AS(Fq(-7), std::invalid_argument);
    CHECK_THROWS_AS(Fq(9), std::invalid_argument);
    CHECK_THROWS_AS(Fq(15), std::invalid_argument);
    CHECK_THROWS_AS(Fq(INT64_C(2147483649)), std::invalid_argument);
}

TEST_CASE("Fq arithmetic agrees with integer arithmetic mod q") {
    for (std::int64_t q : {3, 5, 11}) {
        Fq F(q);
        for (std::int64_t a = -q; a < 2 * q; ++a) {
            CHECK(F.reduce(a) == ((a % q) + q) % q);
            for (std::int64_t b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.reduce(a + b));
                CHECK(F.sub(a, b) == F.reduce(a - b));
                CHECK(F.mul(a, b) == F.reduce(F.reduce(a) * b));
            }
            CHECK(F.add(a, F.neg(a)) == 0);
        }
    }
}

TEST_CASE("Fq inverse and power") {
    for (std::int64_t q : {3, 5, 7, 13}) {
        Fq F(q);
        CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
        CHECK_THROWS_AS(F.inv(q), std::invalid_argument);  // reduces to zero
        for (std::int64_t a = 1; a < q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            // pow against repeated multiplication
            std::int64_t acc = 1;
            for (std::uint64_t e = 0; e < 8; ++e) {
                CHECK(F.pow(a, e) == acc);
                acc = F.mul(acc, a);
            }
            CHECK(F.pow(a, static_cast<std::uint64_t>(q - 1)) == 1);  // Fermat
        }
        CHECK(F.pow(0, 0) == 1);
        CHECK(F.pow(0, 5) == 0);
    }
}

TEST_CASE("Fq legendre and sqrt agree with exhaustive squaring") {
    for (std::int64_t q : {3, 5, 7, 11, 13}) {
        Fq F(q);
        std::set<std::int64_t> squares;
        for (std::int64_t a = 1; a < q; ++a) squares.insert(F.mul(a, a));

        CHECK(F.legendre(0) == 0);
        CHECK(F.sqrt(0) == 0);
        for (std::int64_t a = 1; a < q; ++a) {
            const bool sq = squares.count(a) > 0;
            CHECK(F.legendre(a) == (sq ? 1 : -1));
            CHECK(F.is_square(a) == sq);
            auto r = F.sqrt(a);
            if (sq) {
                REQUIRE(r.has_value());
                CHECK(F.mul(*r, *r) == a);
                CHECK(*r <= q - *r);  // canonical (smaller) root
            } else {
                CHECK(!r.has_value());
            }
        }
    }
}

TEST_CASE("Poly normalizes coefficients and trims") {
    Fq F(3);
    Poly f(F, {4, 7, 3});  // 3 t^2 vanishes mod 3
    CHECK(f.degree() == 1);
    CHECK(f.coeffs() == std::vector<std::int64_t>{1, 1});

    CHECK(Poly(F, {-1}).coeffs() == std::vector<std::int64_t>{2});
    CHECK(Poly(F, {0, 0, 0}).is_zero());
    CHECK(Poly(F, {}).degree() == -1);

    CHECK(Poly::monomial(F, 2, 3) == Poly(F, {0, 0, 0, 2}));
    CHECK(Poly::monomial(F, 3, 5).is_zero());
    CHECK(Poly::variable(F) == Poly(F, {0, 1}));
    CHECK(Poly::constant(F, -2) == Poly::one(F));

    CHECK_THROWS_AS(Poly::zero(F).lc(), std::invalid_argument);
    CHECK_THROWS_AS(Poly::zero(F).monic(), std::invalid_argument);
    CHECK(Poly(F, {1, 2}).monic() == Poly(F, {2, 1}));  // (2t+1)/2 = t+2
    CHECK(Poly(F, {0, 1}).is_monic());
    CHECK(!Poly(F, {0, 2}).is_monic());
}

TEST_CASE("Poly ring identities on random samples") {
    auto rng = make_rng(101);
    for (std::int64_t q : {3, 5, 7}) {
        Fq F(q);
        for (int i = 0; i < 200; ++i) {
            Poly f = random_poly(rng, F, 6);
            Poly g = random_poly(rng, F, 6);
            Poly h = random_poly(rng, F, 6);
            CHECK(f + g == g + f);
            CHECK((f + g) + h == f + (g + h));
            CHECK(f * g == g * f);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + (-f)).is_zero());
            CHECK(f - g == f + (-g));
            CHECK(f * 2 == f + f);
            CHECK(f * Poly::one(F) == f);
            CHECK((f * Poly::zero(F)).is_zero());
        }
    }
}

TEST_CASE("operations across different fields throw") {
    Fq F3(3), F5(5);
    Poly a = Poly::one(F3), b = Poly::one(F5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(divrem(a, b), std::invalid_argument);
    CHECK_THROWS_AS(gcd(a, b), std::invalid_argument);
    CHECK(a != b);
}

TEST_CASE("eval and derivative") {
    Fq F(5);
    Poly f(F, {1, 2, 0, 1});  // t^3 + 2t + 1
    CHECK(f.eval(0) == 1);
    CHECK(f.eval(2) == 3);  // 8 + 4 + 1 = 13
    CHECK(f.derivative() == Poly(F, {2, 0, 3}));

    Fq F3(3);
    CHECK(Poly(F3, {0, 0, 0, 1}).derivative().is_zero());  // d/dt t^3 = 3t^2
    CHECK(Poly::zero(F3).derivative().is_zero());
}

TEST_CASE("to_string uses canonical residues") {
    Fq F(3);
    CHECK(Poly::zero(F).to_string() == "0");
    CHECK(Poly::one(F).to_string() == "1");
    CHECK(Poly::variable(F).to_string() == "t");
    CHECK(Poly(F, {2, 0, 1, 2}).to_string() == "2*t^3+t^2+2");
    CHECK(Poly(F, {-1, 1}).to_string() == "t+2");
    CHECK(Poly(F, {0, 0, 1}).to_string() == "t^2");
    Fq F5(5);
    CHECK(Poly(F5, {0, 0, 4}).to_string() == "4*t^2");
    CHECK(Poly(F5, {0, 3}).to_string() == "3*t");
}

TEST_CASE("divrem reconstructs the dividend") {
    // quot * g + rem == f with deg rem < deg g, across many random draws
    auto rng = make_rng(202);
    for (std::int64_t q : {3, 5, 7}) {
        Fq F(q);
        for (int i = 0; i < 1000; ++i) {
            Poly f = random_poly(rng, F, 8);
            Poly g = random_poly(rng, F, 5, /*allow_zero=*/false);
            auto [quot, rem] = divrem(f, g);
            CHECK(quot * g + rem == f);
            CHECK(rem.degree() < g.degree());
        }
    }
    Fq F(3);
    CHECK_THROWS_AS(divrem(Poly::one(F), Poly::zero(F)), std::invalid_argument);
    CHECK_THROWS_AS(Poly::one(F) % Poly::zero(F), std::invalid_argument);
}

TEST_CASE("exact_div divides exactly or throws") {
    Fq F(3);
    Poly f(F, {2, 1});       // t + 2
    Poly g(F, {1, 1});       // t + 1
    CHECK(exact_div(f * g, g) == f);
    CHECK(exact_div(f * g, f) == g);
    CHECK_THROWS_AS(exact_div(f, g), std::invalid_argument);

    auto rng = make_rng(303);
    for (int i = 0; i < 200; ++i) {
        Poly u = random_poly(rng, F, 4);
        Poly v = random_poly(rng, F, 4, false);
        CHECK(exact_div(u * v, v) == u);
    }
}

TEST_CASE("gcd is monic and divides both arguments") {
    Fq F(3);
    CHECK(gcd(Poly(F, {2, 0, 1}), Poly(F, {2, 1})) == Poly(F, {2, 1}));
    CHECK(gcd(Poly::zero(F), Poly::zero(F)).is_zero());
    CHECK(gcd(Poly(F, {0, 2}), Poly::zero(F)) == Poly(F, {0, 1}));

    auto rng = make_rng(404);
    for (std::int64_t q : {3, 7}) {
        Fq K(q);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(rng, K, 6);
            Poly b = random_poly(rng, K, 6);
            Poly d = gcd(a, b);
            if (a.is_zero() && b.is_zero()) {
                CHECK(d.is_zero());
                continue;
            }
            CHECK(d.is_monic());
            CHECK((a % d).is_zero());
            CHECK((b % d).is_zero());
            if (!a.is_zero() && !b.is_zero())
                CHECK(gcd(exact_div(a, d), exact_div(b, d)).is_constant());
        }
    }
}

TEST_CASE("pow_mod and inv_mod") {
    Fq F(3);
    Poly m(F, {1, 0, 1});  // t^2 + 1
    Poly t = Poly::variable(F);
    CHECK(pow_mod(t, 9, m) == t);       // Frobenius fixes F_9 pointwise: t^9 = t
    CHECK(pow_mod(t, 0, m) == Poly::one(F));
    CHECK(pow_mod(Poly::zero(F), 4, m).is_zero());

    auto rng = make_rng(505);
    for (int i = 0; i < 100; ++i) {
        Poly mod = random_poly(rng, F, 4, false);
        if (mod.is_constant()) continue;
        Poly a = random_poly(rng, F, 5);
        if (gcd(a, mod).is_constant() && !a.is_zero()) {
            Poly ia = inv_mod(a, mod);
            CHECK((a * ia) % mod == Poly::one(F) % mod);
        }
        // pow_mod against naive repeated multiplication
        Poly acc = Poly::one(F) % mod;
        for (std::uint64_t e = 0; e <= 5; ++e) {
            CHECK(pow_mod(a, e, mod) == acc);
            acc = (acc * a) % mod;
        }
    }
    CHECK_THROWS_AS(inv_mod(t, Poly(F, {0, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(inv_mod(Poly::zero(F), m), std::invalid_argument);
}

TEST_CASE("poly_sqrt recovers squares and rejects non-squares") {
    Fq F(3);
    CHECK(poly_sqrt(Poly::zero(F)) == Poly::zero(F));
    CHECK(poly_sqrt(Poly(F, {1, 2, 1})) == Poly(F, {1, 1}));
    CHECK(!poly_sqrt(Poly::variable(F)).has_value());
    CHECK(!poly_sqrt(Poly(F, {0, 1, 1})).has_value());   // t^2 + t
    CHECK(!poly_sqrt(Poly(F, {0, 0, 2})).has_value());   // lc not a square
    Fq F5(5);
    CHECK(poly_sqrt(Poly::constant(F5, 4)) == Poly::constant(F5, 2));

    auto rng = make_rng(606);
    for (std::int64_t q : {3, 5, 7}) {
        Fq K(q);
        for (int i = 0; i < 1000; ++i) {
            Poly f = random_poly(rng, K, 5, false);
            auto root = poly_sqrt(f * f);
            REQUIRE(root.has_value());
            CHECK((*root == f || *root == -f));
            CHECK(2 * root->lc() < K.q());  // canonical leading coefficient
        }
    }
}

TEST_CASE("valuation and remove_factor") {
    Fq F(3);
    Poly p(F, {1, 1});   // t + 1
    Poly rest(F, {2, 1});
    Poly f = p * p * p * rest;
    CHECK(valuation(f, p) == 3);
    auto [v, cof] = remove_factor(f, p);
    CHECK(v == 3);
    CHECK(cof == rest);
    CHECK(valuation(rest, p) == 0);
    CHECK(remove_factor(rest, p) == std::pair(0, rest));
    CHECK_THROWS_AS(valuation(Poly::zero(F), p), std::invalid_argument);
}

TEST_CASE("cmp orders by degree then top-down coefficients") {
    Fq F(3);
    CHECK(Poly::cmp(Poly::zero(F), Poly::one(F)) < 0);
    CHECK(Poly::cmp(Poly(F, {0, 1}), Poly(F, {1, 1})) < 0);    // t < t+1
    CHECK(Poly::cmp(Poly(F, {2, 1}), Poly(F, {0, 0, 1})) < 0); // t+2 < t^2
    CHECK(Poly::cmp(Poly(F, {0, 1}), Poly(F, {0, 2})) < 0);    // t < 2t
    CHECK(Poly::cmp(Poly(F, {1, 1}), Poly(F, {1, 1})) == 0);

    // PolyLess gives a strict weak order usable by std::set
    std::set<Poly, PolyLess> s;
    for (const Poly& f : all_polys_up_to(F, 2)) s.insert(f);
    CHECK(s.size() == 27);
    CHECK(s.begin()->is_zero());
}
