#include "qforms/symbols.hpp"

#include <stdexcept>

#include "qforms/factorize.hpp"

namespace qforms {

namespace detail {

int quadratic_character(const Poly& f, const Poly& p) {
    const Fq& F = p.field();
    Poly r = f % p;
    if (r.is_zero()) return 0;
    // Euler criterion r^((q^d - 1)/2) via ((q-1)/2) * (1 + q + ... + q^(d-1)).
    std::uint64_t q = static_cast<std::uint64_t>(F.q());
    int d = p.degree();
    Poly g = pow_mod(r, (q - 1) / 2, p);
    Poly acc = Poly::one(F);
    Poly cur = g;
    for (int i = 0; i < d; ++i) {
        acc = (acc * cur) % p;
        if (i + 1 < d) cur = pow_mod(cur, q, p);
    }
    if (acc == Poly::one(F)) return 1;
    if (acc == Poly::constant(F, -1)) return -1;
    throw std::logic_error("Euler criterion did not evaluate to +-1; modulus not irreducible?");
}

}  // namespace detail

int residue_symbol(const Poly& f, const Poly& p) {
    if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
        throw std::invalid_argument("residue symbol modulus must be monic irreducible");
    if (f.field() != p.field())
        throw std::invalid_argument("residue symbol arguments over different fields");
    return detail::quadratic_character(f, p);
}

int jacobi_symbol(const Poly& f, const Poly& m) {
    if (m.degree() < 1)
        throw std::invalid_argument("jacobi symbol modulus must be nonconstant");
    if (f.field() != m.field())
        throw std::invalid_argument("jacobi symbol arguments over different fields");
    int acc = 1;
    for (const auto& [p, mult] : factorize(m).factors) {
        int s = detail::quadratic_character(f, p);
        if (s == 0) return 0;
        if (mult % 2 != 0) acc *= s;
    }
    return acc;
}

int hilbert_symbol(const Poly& a, const Poly& b, const Place& v) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("hilbert symbol arguments must be nonzero");
    if (a.field() != b.field() || a.field() != v.field())
        throw std::invalid_argument("hilbert symbol arguments over different fields");
    const Fq& F = a.field();

    int alpha, beta;      // valuations at v
    int chi_u, chi_w;     // characters of the unit-part residues
    int chi_m1;           // character of -1
    if (v.is_finite()) {
        const Poly& p = v.prime();
        auto [va, ua] = remove_factor(a, p);
        auto [vb, ub] = remove_factor(b, p);
        alpha = va;
        beta = vb;
        chi_u = detail::quadratic_character(ua, p);
        chi_w = detail::quadratic_character(ub, p);
        chi_m1 = detail::quadratic_character(Poly::constant(F, -1), p);
    } else {
        // v(f) = -deg f; the unit-part residue is the leading coefficient.
        alpha = -a.degree();
        beta = -b.degree();
        chi_u = F.legendre(a.lc());
        chi_w = F.legendre(b.lc());
        chi_m1 = F.legendre(-1);
    }

    int sign = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0)) sign *= chi_m1;
    if (beta % 2 != 0) sign *= chi_u;
    if (alpha % 2 != 0) sign *= chi_w;
    return sign;
}

}  // namespace qforms
