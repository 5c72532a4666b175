#pragma once

#include <cstdint>
#include <optional>

namespace qforms {

/// Prime field F_q for an odd prime q with 3 <= q < 2^31.
///
/// Residues are plain int64_t values; canonical representatives live in
/// [0, q).  All operations reduce their arguments, so callers may pass any
/// int64_t.  Products of two reduced residues fit comfortably in int64_t.
class Fq {
public:
    /// Validates that q is an odd prime in range; throws std::invalid_argument.
    explicit Fq(std::int64_t q);

    std::int64_t q() const noexcept { return q_; }

    std::int64_t reduce(std::int64_t v) const noexcept {
        v %= q_;
        return v < 0 ? v + q_ : v;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) + reduce(b));
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) - reduce(b));
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return reduce(reduce(a) * reduce(b));
    }
    std::int64_t neg(std::int64_t a) const noexcept { return reduce(-reduce(a)); }

    std::int64_t pow(std::int64_t base, std::uint64_t e) const noexcept;

    /// Multiplicative inverse; throws std::invalid_argument on zero.
    std::int64_t inv(std::int64_t a) const;

    /// Quadratic character by the Euler criterion: +1 for nonzero squares,
    /// -1 for nonsquares, 0 for zero.
    int legendre(std::int64_t a) const noexcept;

    bool is_square(std::int64_t a) const noexcept { return legendre(a) >= 0; }

    /// Square root via Tonelli-Shanks.  Returns the canonical root (the
    /// smaller of the two representatives in [0, q)), or nullopt for
    /// nonsquares.  sqrt(0) = 0.
    std::optional<std::int64_t> sqrt(std::int64_t a) const;

    friend bool operator==(const Fq& x, const Fq& y) noexcept { return x.q_ == y.q_; }
    friend bool operator!=(const Fq& x, const Fq& y) noexcept { return x.q_ != y.q_; }

private:
    std::int64_t q_;
};

}  // namespace qforms
