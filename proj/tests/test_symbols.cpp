#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qforms/factorize.hpp"
#include "qforms/symbols.hpp"
#include "test_support.hpp"

using namespace qforms;
using test::all_polys_up_to;
using test::make_rng;
using test::monic_polys_of_degree;
using test::naive_hilbert_finite;
using test::naive_residue_symbol;
using test::random_monic_irreducible;
using test::random_poly;

TEST_CASE("residue symbol matches the exhaustive square table") {
    Fq F(3);
    const std::vector<Poly> primes = {
        Poly(F, {0, 1}),    Poly(F, {1, 1}),    Poly(F, {2, 1}),
        Poly(F, {1, 0, 1}), Poly(F, {2, 1, 1}), Poly(F, {2, 2, 1})};
    for (const Poly& p : primes)
        for (const Poly& f : all_polys_up_to(F, 3))
            CHECK(residue_symbol(f, p) == naive_residue_symbol(f, p));

    Fq F5(5);
    for (const Poly& p : monic_polys_of_degree(F5, 1))
        for (const Poly& f : all_polys_up_to(F5, 2))
            CHECK(residue_symbol(f, p) == naive_residue_symbol(f, p));
}

TEST_CASE("residue symbol at a linear place is a Legendre symbol of the value") {
    auto rng = make_rng(111);
    for (std::int64_t q : {3, 5, 7}) {
        Fq F(q);
        for (std::int64_t r = 0; r < q; ++r) {
            Poly p(F, {F.neg(r), 1});  // t - r
            for (int i = 0; i < 50; ++i) {
                Poly f = random_poly(rng, F, 5);
                CHECK(residue_symbol(f, p) == F.legendre(f.eval(r)));
            }
        }
    }
}

TEST_CASE("residue symbol is multiplicative") {
    auto rng = make_rng(222);
    for (std::int64_t q : {3, 5}) {
        Fq F(q);
        for (int i = 0; i < 150; ++i) {
            Poly p = random_monic_irreducible(rng, F, 3);
            Poly f = random_poly(rng, F, 4);
            Poly g = random_poly(rng, F, 4);
            CHECK(residue_symbol(f * g, p) ==
                  residue_symbol(f, p) * residue_symbol(g, p));
        }
    }
}

TEST_CASE("residue symbol validates its modulus") {
    Fq F(3);
    CHECK_THROWS_AS(residue_symbol(Poly::one(F), Poly(F, {2, 0, 1})),
                    std::invalid_argument);  // t^2+2 reducible
    CHECK_THROWS_AS(residue_symbol(Poly::one(F), Poly(F, {1, 2})),
                    std::invalid_argument);  // not monic
    CHECK_THROWS_AS(residue_symbol(Poly::one(F), Poly::one(F)),
                    std::invalid_argument);  // constant
}

TEST_CASE("pinned residue symbols over F_3") {
    Fq F(3);
    Poly p1(F, {2, 1});      // t + 2
    Poly p2(F, {2, 2, 1});   // t^2 + 2t + 2
    Poly s(F, {1, 0, 1});    // t^2 + 1
    CHECK(residue_symbol(Poly::variable(F), Poly::variable(F)) == 0);
    CHECK(residue_symbol(Poly(F, {2, 1}), p2) == -1);  // (t+2 / p2)
    CHECK(residue_symbol(p2, s) == -1);
    CHECK(residue_symbol(s, p1) == -1);                // s(-2) = s(1) = 2
    CHECK(residue_symbol(Poly::variable(F), p2) == -1);
}

TEST_CASE("jacobi symbol multiplies over the factorization of the modulus") {
    auto rng = make_rng(333);
    Fq F(3);
    for (int i = 0; i < 150; ++i) {
        Poly m = random_poly(rng, F, 5, false);
        if (m.is_constant()) continue;
        Poly f = random_poly(rng, F, 5);
        int expect = 1;
        auto fm = factorize(m);
        for (const auto& [p, e] : fm.factors) {
            int s = residue_symbol(f, p);
            for (int k = 0; k < e; ++k) expect *= s;
        }
        CHECK(jacobi_symbol(f, m) == expect);
        CHECK((jacobi_symbol(f, m) == 0) == !gcd(f, m).is_constant());
    }
    CHECK_THROWS_AS(jacobi_symbol(Poly::variable(F), Poly::one(F)),
                    std::invalid_argument);
}

TEST_CASE("quadratic reciprocity, exhaustively over F_3") {
    Fq F(3);
    std::vector<Poly> primes;
    for (int d = 1; d <= 3; ++d)
        for (const Poly& p : monic_polys_of_degree(F, d))
            if (is_irreducible(p)) primes.push_back(p);
    CHECK(primes.size() == 14);  // 3 linear + 3 quadratic + 8 cubic

    for (const Poly& P : primes)
        for (const Poly& Q : primes) {
            if (P == Q) continue;
            const int lhs = residue_symbol(P, Q) * residue_symbol(Q, P);
            const int sign =
                ((P.degree() * Q.degree()) % 2 == 0) ? 1 : -1;  // (q-1)/2 odd
            CHECK(lhs == sign);
        }
}

TEST_CASE("quadratic reciprocity on random prime pairs") {
    auto rng = make_rng(444);
    for (std::int64_t q : {5, 7}) {
        Fq F(q);
        const std::int64_t half = (q - 1) / 2;
        for (int i = 0; i < 250; ++i) {
            Poly P = random_monic_irreducible(rng, F, 3);
            Poly Q = random_monic_irreducible(rng, F, 3);
            if (P == Q) continue;
            const int lhs = residue_symbol(P, Q) * residue_symbol(Q, P);
            const bool odd = (half * P.degree() * Q.degree()) % 2 != 0;
            CHECK(lhs == (odd ? -1 : 1));
        }
    }
}

TEST_CASE("pinned Hilbert symbols over F_3") {
    Fq F(3);
    Poly t = Poly::variable(F);
    Poly m(F, {2, 2, 1});  // t^2 + 2t + 2 = t^2 - t - 1
    CHECK(hilbert_symbol(t, t, Place::finite(t)) == -1);
    CHECK(hilbert_symbol(t, m, Place::finite(t)) == -1);
    CHECK(hilbert_symbol(t, m, Place::finite(m)) == -1);
    CHECK(hilbert_symbol(t, m, Place::infinite(F)) == 1);
    // symbol is +1 at places where both arguments are units and stay units
    CHECK(hilbert_symbol(t, m, Place::finite(Poly(F, {1, 1}))) == 1);
    CHECK(hilbert_symbol(Poly::constant(F, 2), Poly::constant(F, 2),
                         Place::infinite(F)) == 1);
}

TEST_CASE("Hilbert symbol laws: symmetry, bilinearity, (a,-a) = 1") {
    auto rng = make_rng(555);
    for (std::int64_t q : {3, 5}) {
        Fq F(q);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(rng, F, 4, false);
            Poly b = random_poly(rng, F, 4, false);
            Poly c = random_poly(rng, F, 4, false);
            // collect a few places worth probing
            std::vector<Place> places = {Place::infinite(F)};
            auto fa = factorize(a * b * c);
            for (const auto& [p, e] : fa.factors) places.push_back(Place::finite(p));
            for (const Place& v : places) {
                CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
                CHECK(hilbert_symbol(a * b, c, v) ==
                      hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v));
                CHECK(hilbert_symbol(a, -a, v) == 1);
                CHECK(hilbert_symbol(a, a * b * b, v) == hilbert_symbol(a, a, v));
            }
        }
    }
}

TEST_CASE("Hilbert product formula over all places") {
    auto rng = make_rng(666);
    for (std::int64_t q : {3, 5}) {
        Fq F(q);
        for (int i = 0; i < 100; ++i) {
            Poly a = random_poly(rng, F, 4, false);
            Poly b = random_poly(rng, F, 4, false);
            int prod = hilbert_symbol(a, b, Place::infinite(F));
            auto fab = factorize(a * b);
            for (const auto& [p, e] : fab.factors)
                prod *= hilbert_symbol(a, b, Place::finite(p));
            CHECK(prod == 1);
            // at any place where both are units the symbol is trivial,
            // so the product above really ranges over all places
            Poly probe = random_monic_irreducible(rng, F, 2);
            if (!(a % probe).is_zero() && !(b % probe).is_zero())
                CHECK(hilbert_symbol(a, b, Place::finite(probe)) == 1);
        }
    }
}

TEST_CASE("Hilbert symbol agrees with a primitive-solution search") {
    auto rng = make_rng(777);
    Fq F3(3);
    for (int i = 0; i < 30; ++i) {
        Poly a = random_poly(rng, F3, 2, false);
        Poly b = random_poly(rng, F3, 2, false);
        for (const Poly& p : monic_polys_of_degree(F3, 1)) {
            const int sym = hilbert_symbol(a, b, Place::finite(p));
            CHECK(sym == (naive_hilbert_finite(a, b, p) ? 1 : -1));
        }
    }
    Fq F5(5);
    for (int i = 0; i < 8; ++i) {
        Poly a = random_poly(rng, F5, 2, false);
        Poly b = random_poly(rng, F5, 2, false);
        Poly p = random_monic_irreducible(rng, F5, 1);
        const int sym = hilbert_symbol(a, b, Place::finite(p));
        CHECK(sym == (naive_hilbert_finite(a, b, p) ? 1 : -1));
    }
}

TEST_CASE("Hilbert symbol rejects zero arguments") {
    Fq F(3);
    Poly t = Poly::variable(F);
    CHECK_THROWS_AS(hilbert_symbol(Poly::zero(F), t, Place::finite(t)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hilbert_symbol(t, Poly::zero(F), Place::infinite(F)),
                    std::invalid_argument);
}
