#include "qforms/factorize.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qforms {

namespace {

// f^((q^w - 1)/2) mod m without big-integer exponents, using
// (q^w - 1)/2 = ((q-1)/2) * (1 + q + ... + q^(w-1)).
Poly pow_half_qw(const Poly& f, int w, const Poly& m) {
    const Fq& F = f.field();
    std::uint64_t q = static_cast<std::uint64_t>(F.q());
    Poly g = pow_mod(f, (q - 1) / 2, m);
    Poly acc = Poly::one(F) % m;
    Poly cur = g;
    for (int i = 0; i < w; ++i) {
        acc = (acc * cur) % m;
        if (i + 1 < w) cur = pow_mod(cur, q, m);
    }
    return acc;
}

// x^(q^e) mod f via iterated q-th powers.
Poly frobenius_power(int e, const Poly& f) {
    const Fq& F = f.field();
    Poly h = Poly::variable(F) % f;
    std::uint64_t q = static_cast<std::uint64_t>(F.q());
    for (int i = 0; i < e; ++i) h = pow_mod(h, q, f);
    return h;
}

// f(t) = g(t^q) -> g.  Valid over the prime field where c^q = c.
Poly qth_root(const Poly& f) {
    const Fq& F = f.field();
    std::int64_t q = F.q();
    if (f.degree() % q != 0) throw std::logic_error("qth_root: degree not divisible by q");
    std::vector<std::int64_t> cs(static_cast<size_t>(f.degree() / q) + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        if (i % q == 0) {
            cs[static_cast<size_t>(i / q)] = f.coeff(i);
        } else if (f.coeff(i) != 0) {
            throw std::logic_error("qth_root: unexpected nonzero coefficient");
        }
    }
    return Poly(F, std::move(cs));
}

// Squarefree decomposition of a monic f: appends (component, multiplicity)
// pairs, components squarefree and pairwise coprime.
void squarefree_decompose(const Poly& f, std::int64_t mult, std::vector<std::pair<Poly, std::int64_t>>& out) {
    if (f.degree() < 1) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(qth_root(f), mult * f.field().q(), out);
        return;
    }
    Poly c = gcd(f, fp);
    Poly w = exact_div(f, c);
    std::int64_t j = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, j * mult);
        w = y;
        c = exact_div(c, y);
        ++j;
    }
    if (c.degree() > 0) squarefree_decompose(qth_root(c), mult * f.field().q(), out);
}

Poly random_poly_below(std::mt19937_64& rng, const Fq& F, int degree_bound) {
    std::uniform_int_distribution<std::int64_t> dist(0, F.q() - 1);
    std::vector<std::int64_t> cs(static_cast<size_t>(degree_bound), 0);
    for (auto& c : cs) c = dist(rng);
    return Poly(F, std::move(cs));
}

// Cantor-Zassenhaus equal-degree splitting: g is monic squarefree, a product
// of irreducibles all of degree w.
void equal_degree_split(const Poly& g, int w, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == w) {
        out.push_back(g);
        return;
    }
    const Fq& F = g.field();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Poly r = random_poly_below(rng, F, g.degree());
        if (r.is_zero()) continue;
        Poly share = gcd(r, g);
        if (share.degree() > 0 && share.degree() < g.degree()) {
            equal_degree_split(share, w, rng, out);
            equal_degree_split(exact_div(g, share), w, rng, out);
            return;
        }
        Poly s = pow_half_qw(r, w, g) - Poly::one(F);
        Poly split = gcd(s, g);
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree_split(split, w, rng, out);
            equal_degree_split(exact_div(g, split), w, rng, out);
            return;
        }
    }
    throw std::logic_error("equal-degree splitting failed to converge");
}

// Distinct-degree stage on a monic squarefree g.
void distinct_degree_split(Poly g, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Fq& F = g.field();
    std::uint64_t q = static_cast<std::uint64_t>(F.q());
    Poly x = Poly::variable(F);
    Poly h = x % g;
    int w = 0;
    while (2 * (w + 1) <= g.degree()) {
        ++w;
        h = pow_mod(h, q, g);
        Poly gd = gcd(h - (x % g), g);
        if (gd.degree() > 0) {
            equal_degree_split(gd, w, rng, out);
            g = exact_div(g, gd);
            if (g.degree() == 0) break;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.push_back(g);
}

}  // namespace

Poly FactoredPoly::reconstruct() const {
    Poly acc = Poly::constant(field, unit);
    for (const auto& [p, m] : factors) {
        for (int i = 0; i < m; ++i) acc = acc * p;
    }
    return acc;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("irreducibility is undefined for constants");
    Poly g = f.monic();
    int n = g.degree();
    if (n == 1) return true;

    const Fq& F = g.field();
    Poly x = Poly::variable(F) % g;

    // Rabin: x^(q^n) == x mod g, and gcd(x^(q^(n/r)) - x, g) == 1 for every
    // prime r dividing n.
    std::vector<int> prime_divisors;
    int rest = n;
    for (int r = 2; r * r <= rest; ++r) {
        if (rest % r == 0) {
            prime_divisors.push_back(r);
            while (rest % r == 0) rest /= r;
        }
    }
    if (rest > 1) prime_divisors.push_back(rest);

    for (int r : prime_divisors) {
        Poly h = frobenius_power(n / r, g);
        if (gcd(h - x, g).degree() != 0) return false;
    }
    Poly full = frobenius_power(n, g);
    return full == x;
}

FactoredPoly factorize(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factorize of the zero polynomial");
    const Fq& F = f.field();
    FactoredPoly result{F, f.lc(), {}};
    if (f.degree() == 0) return result;

    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, std::int64_t>> components;
    squarefree_decompose(f.monic(), 1, components);
    for (const auto& [comp, mult] : components) {
        std::vector<Poly> irreducibles;
        distinct_degree_split(comp, rng, irreducibles);
        for (const auto& p : irreducibles)
            result.factors.emplace_back(p, static_cast<int>(mult));
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return Poly::cmp(a.first, b.first) < 0; });
    return result;
}

}  // namespace qforms
