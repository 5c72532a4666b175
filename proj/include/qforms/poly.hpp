#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/fq.hpp"

namespace qforms {

/// Dense univariate polynomial over F_q[t].
///
/// Always kept in canonical form: every coefficient reduced into [0, q) and
/// the leading coefficient nonzero.  The zero polynomial stores no
/// coefficients and reports degree() == -1; every comparison treats it as
/// smaller than all nonzero polynomials.
///
/// Arithmetic between polynomials over different fields throws
/// std::invalid_argument.
class Poly {
public:
    /// Normalizing constructor: reduces coefficients mod q and trims
    /// trailing zeros.  coeffs[i] is the coefficient of t^i.
    Poly(const Fq& field, std::vector<std::int64_t> coeffs);

    static Poly zero(const Fq& field) { return Poly(field, {}); }
    static Poly one(const Fq& field) { return Poly(field, {1}); }
    static Poly constant(const Fq& field, std::int64_t c) { return Poly(field, {c}); }
    static Poly variable(const Fq& field) { return Poly(field, {0, 1}); }
    static Poly monomial(const Fq& field, std::int64_t c, int power);

    const Fq& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of t^i (0 beyond the degree).
    std::int64_t coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    /// Leading coefficient; throws on the zero polynomial.
    std::int64_t lc() const;
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// f / lc(f); throws on the zero polynomial.
    Poly monic() const;

    std::int64_t eval(std::int64_t x) const noexcept;
    Poly derivative() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(std::int64_t scalar) const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

    /// Total order: by degree, then coefficients compared from the highest
    /// term downward.  Returns <0, 0, >0.  Fields must match.
    static int cmp(const Poly& a, const Poly& b);

    /// Canonical textual form using nonnegative residues, e.g. "2*t^3+t+1".
    std::string to_string() const;

private:
    Fq field_;
    std::vector<std::int64_t> coeffs_;

    void normalize();
};

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return Poly::cmp(a, b) < 0; }
};

/// Quotient and remainder; throws on division by the zero polynomial.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
/// Remainder of f by g.
Poly operator%(const Poly& f, const Poly& g);
/// Exact quotient; throws std::invalid_argument if g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);

/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod m for deg m >= 1.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);

/// Inverse of a modulo m (deg m >= 1, gcd(a, m) constant); throws otherwise.
Poly inv_mod(const Poly& a, const Poly& m);

/// Exact square root.  Works coefficient-by-coefficient from the top; never
/// factors.  The root is normalized so its leading coefficient is the
/// canonical square root in F_q (smaller representative).  Returns nullopt
/// for non-squares; poly_sqrt(0) == 0.
std::optional<Poly> poly_sqrt(const Poly& f);

/// Multiplicity of the irreducible p in f (f nonzero).
int valuation(const Poly& f, const Poly& p);

/// (valuation, cofactor): f == p^v * cofactor with p not dividing cofactor.
std::pair<int, Poly> remove_factor(const Poly& f, const Poly& p);

}  // namespace qforms
