#pragma once

#include "qforms/place.hpp"
#include "qforms/poly.hpp"

namespace qforms {

/// Quadratic residue symbol (f/p) for a monic irreducible p: 0 when p | f,
/// otherwise +1/-1 according to whether f is a square in F_q[t]/(p).
/// Computed by the Euler criterion f^((q^deg p - 1)/2) mod p.
int residue_symbol(const Poly& f, const Poly& p);

/// Multiplicative (Jacobi-style) extension over the factorization of a
/// nonconstant modulus m; 0 exactly when gcd(f, m) is nonconstant.
int jacobi_symbol(const Poly& f, const Poly& m);

/// Quadratic Hilbert symbol (a, b)_v at an odd place: +1 iff a*x^2 + b*y^2
/// represents a square nontrivially over the completion at v, evaluated by
/// the tame formula chi(-1)^(alpha*beta) * chi(u)^beta * chi(w)^alpha on
/// the unit parts u, w of a, b.
int hilbert_symbol(const Poly& a, const Poly& b, const Place& v);

namespace detail {
/// residue_symbol without revalidating irreducibility of p (hot paths).
int quadratic_character(const Poly& f, const Poly& p);
}  // namespace detail

}  // namespace qforms
