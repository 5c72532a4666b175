#include "qforms/localsolve.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "qforms/factorize.hpp"
#include "qforms/symbols.hpp"

namespace qforms {

namespace {

// v_p(f) with infinity (a large sentinel) for f == 0.
constexpr int kInfiniteValuation = std::numeric_limits<int>::max() / 4;

int val_or_inf(const Poly& f, const Poly& p) {
    return f.is_zero() ? kInfiniteValuation : valuation(f, p);
}

// Decides A*x^2 + B*y^2 = n over the valuation ring at p (A, B nonzero) by
// valuation descent.  Each round either settles the question from residue
// characters or strictly decreases v(A) + v(B) + v(n).
bool diagonal_descent(Poly A, Poly B, Poly n, const Poly& p) {
    for (;;) {
        if (n.is_zero()) return true;  // (0,0)
        int alpha = valuation(A, p);
        int beta = valuation(B, p);
        int nu = valuation(n, p);
        if (alpha > beta) {
            std::swap(A, B);
            std::swap(alpha, beta);
        }
        if (alpha >= 1) {
            // Both coefficients divisible by p: the form only takes values
            // of positive valuation.
            if (nu == 0) return false;
            A = exact_div(A, p);
            B = exact_div(B, p);
            n = exact_div(n, p);
            continue;
        }
        if (beta == 0) {
            // Unit form: isotropic iff -A*B is a square residue, and an
            // anisotropic unit form represents exactly the even-valuation
            // elements.
            if (nu % 2 == 0) return true;
            return detail::quadratic_character(-(A * B), p) == 1;
        }
        if (nu == 0) {
            // A*x^2 must hit the unit n modulo p; Hensel lifts from the
            // smooth residue root.
            return detail::quadratic_character(A * n, p) == 1;
        }
        // beta >= 1, nu >= 1 forces p | x; substitute x = p*x' and divide by p.
        Poly newA = exact_div(B, p);
        Poly newB = A * p;
        A = newA;
        B = newB;
        n = exact_div(n, p);
    }
}

}  // namespace

SplittingType splitting_type(const EquationInstance& inst, const Place& v) {
    if (v.is_finite()) {
        int s = residue_symbol(inst.minus_d(), v.prime());
        if (s == 0) return SplittingType::Ramified;
        return s == 1 ? SplittingType::Split : SplittingType::Inert;
    }
    const Poly& md = inst.minus_d();
    if (md.degree() % 2 != 0) return SplittingType::Ramified;
    return inst.field().legendre(md.lc()) == -1 ? SplittingType::Inert : SplittingType::Split;
}

bool is_imaginary(const EquationInstance& inst) {
    return splitting_type(inst, Place::infinite(inst.field())) != SplittingType::Split;
}

std::vector<Place> critical_places(const EquationInstance& inst) {
    if (inst.n().is_zero())
        throw std::invalid_argument("critical places undefined for n == 0");
    Poly prod = inst.a() * inst.d() * inst.n();
    std::set<Place, PlaceLess> places;
    for (const auto& [p, mult] : factorize(prod).factors) {
        (void)mult;
        places.insert(Place::finite(p));
    }
    std::vector<Place> out(places.begin(), places.end());
    out.push_back(Place::infinite(inst.field()));
    return out;
}

LocalVerdict local_solvable(const EquationInstance& inst, const Place& v) {
    if (inst.n().is_zero())
        throw std::invalid_argument("local solvability query requires n != 0");
    if (v.is_infinite()) {
        bool ok = hilbert_symbol(inst.minus_d(), inst.n(), v) == 1;
        return {v, ok, "hilbert-at-infinity", ""};
    }

    const Poly& p = v.prime();
    const Fq& F = inst.field();
    Poly one = Poly::one(F);
    Poly four = Poly::constant(F, 4);

    if (valuation(inst.a(), p) == 0) {
        // Unimodular change of variables to xt^2 + d*yt^2 = n.
        bool ok = diagonal_descent(one, inst.d(), inst.n(), p);
        return {v, ok, "diagonal-descent", ""};
    }
    if (val_or_inf(inst.c(), p) == 0) {
        // Swap the roles of x and y; the discriminant is unchanged and the
        // normalized target becomes -4cg.
        bool ok = diagonal_descent(one, inst.d(), -(four * inst.c() * inst.g()), p);
        return {v, ok, "diagonal-descent-swapped", ""};
    }
    if (val_or_inf(inst.b(), p) == 0) {
        // p | a, p | c, p coprime to b: with y = 1 the equation reduces mod p
        // to a linear equation with unit slope; its root is smooth and lifts.
        return {v, true, "unit-cross-term", ""};
    }
    // All of a, b, c divisible by p.
    if (valuation(inst.g(), p) == 0)
        return {v, false, "coefficients-vanish-g-unit", ""};
    EquationInstance divided(exact_div(inst.a(), p),
                             inst.b().is_zero() ? inst.b() : exact_div(inst.b(), p),
                             inst.c().is_zero() ? inst.c() : exact_div(inst.c(), p),
                             exact_div(inst.g(), p));
    LocalVerdict inner = local_solvable(divided, v);
    return {v, inner.solvable, "divide-by-p;" + inner.method, inner.note};
}

bool local_oracle(const EquationInstance& inst, const Poly& p, int precision) {
    if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
        throw std::invalid_argument("local oracle place must be monic irreducible");
    if (inst.n().is_zero())
        throw std::invalid_argument("local oracle requires n != 0");
    int min_precision =
        valuation(inst.a(), p) + valuation(inst.d(), p) + valuation(inst.n(), p) + 3;
    if (precision < min_precision)
        throw std::invalid_argument("local oracle precision too small");

    const Fq& F = inst.field();
    // All residue digits modulo p.
    std::vector<Poly> digits;
    {
        std::vector<std::int64_t> cs(static_cast<size_t>(p.degree()), 0);
        for (;;) {
            digits.push_back(Poly(F, cs));
            size_t i = 0;
            while (i < cs.size() && ++cs[i] == F.q()) cs[i++] = 0;
            if (i == cs.size()) break;
        }
    }
    std::vector<Poly> p_powers{Poly::one(F)};
    for (int k = 1; k <= precision; ++k) p_powers.push_back(p_powers.back() * p);

    Poly two_a = inst.a() * 2;
    Poly two_c = inst.c() * 2;
    long long budget = 50'000'000;

    // Depth-first refinement of residue pairs; a node at level k fixes
    // (x, y) modulo p^k and requires the equation value to vanish there.
    auto search = [&](auto&& self, const Poly& x, const Poly& y, int level) -> bool {
        if (--budget < 0) throw std::runtime_error("local oracle search budget exhausted");
        Poly value = inst.a() * x * x + inst.b() * x * y + inst.c() * y * y + inst.g();
        if (value.is_zero()) return true;  // exact global solution
        int vv = valuation(value, p);
        if (vv < level) return false;
        int mx = val_or_inf(two_a * x + inst.b() * y, p);
        int my = val_or_inf(inst.b() * x + two_c * y, p);
        int m = std::min(mx, my);
        if (m < kInfiniteValuation && vv >= 2 * m + 1) return true;  // Hensel lifts
        if (level == precision) return false;
        for (const Poly& dx : digits) {
            for (const Poly& dy : digits) {
                if (self(self, x + dx * p_powers[static_cast<size_t>(level)],
                         y + dy * p_powers[static_cast<size_t>(level)], level + 1))
                    return true;
            }
        }
        return false;
    };
    Poly z = Poly::zero(F);
    return search(search, z, z, 0);
}

std::pair<bool, std::vector<LocalVerdict>> everywhere_locally_solvable(const EquationInstance& inst) {
    if (inst.n().is_zero()) return {true, {}};
    std::vector<LocalVerdict> verdicts;
    bool all = true;
    for (const Place& v : critical_places(inst)) {
        verdicts.push_back(local_solvable(inst, v));
        all = all && verdicts.back().solvable;
    }
    return {all, verdicts};
}

}  // namespace qforms
