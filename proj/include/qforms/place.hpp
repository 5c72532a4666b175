#pragma once

#include <optional>

#include "qforms/poly.hpp"

namespace qforms {

/// A place of the rational function field F_q(t): either a finite place,
/// identified with a monic irreducible of F_q[t], or the place at infinity
/// (uniformizer 1/t, valuation v(f) = -deg f).
class Place {
public:
    /// Throws unless prime is monic irreducible.
    static Place finite(Poly prime);
    static Place infinite(const Fq& field);

    bool is_finite() const noexcept { return prime_.has_value(); }
    bool is_infinite() const noexcept { return !prime_.has_value(); }
    /// The defining monic irreducible; throws for the infinite place.
    const Poly& prime() const;
    const Fq& field() const noexcept { return field_; }

    int degree() const noexcept { return prime_ ? prime_->degree() : 1; }

    /// Finite places in canonical polynomial order, the infinite place last.
    static int cmp(const Place& a, const Place& b);

    friend bool operator==(const Place& a, const Place& b) {
        return a.field_ == b.field_ && a.prime_ == b.prime_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    std::string to_string() const;

private:
    Place(const Fq& field, std::optional<Poly> prime)
        : field_(field), prime_(std::move(prime)) {}

    Fq field_;
    std::optional<Poly> prime_;
};

struct PlaceLess {
    bool operator()(const Place& a, const Place& b) const { return Place::cmp(a, b) < 0; }
};

}  // namespace qforms
