#include "qforms/fq.hpp"

#include <stdexcept>
#include <string>

namespace qforms {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t i = 3; i * i <= n; i += 2) {
        if (n % i == 0) return false;
    }
    return true;
}

}  // namespace

Fq::Fq(std::int64_t q) : q_(q) {
    if (q < 3 || q >= (std::int64_t{1} << 31))
        throw std::invalid_argument("field order out of range: " + std::to_string(q));
    if (q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("field order must be an odd prime: " + std::to_string(q));
}

std::int64_t Fq::pow(std::int64_t base, std::uint64_t e) const noexcept {
    std::int64_t b = reduce(base);
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::int64_t Fq::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw std::invalid_argument("inverse of zero in F_q");
    return pow(a, static_cast<std::uint64_t>(q_ - 2));
}

int Fq::legendre(std::int64_t a) const noexcept {
    a = reduce(a);
    if (a == 0) return 0;
    std::int64_t e = pow(a, static_cast<std::uint64_t>((q_ - 1) / 2));
    return e == 1 ? 1 : -1;
}

std::optional<std::int64_t> Fq::sqrt(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) return 0;
    if (legendre(a) != 1) return std::nullopt;

    std::int64_t r;
    if (q_ % 4 == 3) {
        r = pow(a, static_cast<std::uint64_t>((q_ + 1) / 4));
    } else {
        // Tonelli-Shanks: q - 1 = Q * 2^S with Q odd.
        std::int64_t Q = q_ - 1;
        int S = 0;
        while (Q % 2 == 0) {
            Q /= 2;
            ++S;
        }
        std::int64_t z = 2;
        while (legendre(z) != -1) ++z;
        std::int64_t c = pow(z, static_cast<std::uint64_t>(Q));
        std::int64_t t = pow(a, static_cast<std::uint64_t>(Q));
        r = pow(a, static_cast<std::uint64_t>((Q + 1) / 2));
        int M = S;
        while (t != 1) {
            std::int64_t t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            std::int64_t b = c;
            for (int j = 0; j < M - i - 1; ++j) b = mul(b, b);
            M = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    return std::min(r, q_ - r);
}

}  // namespace qforms
