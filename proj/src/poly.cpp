#include "qforms/poly.hpp"

#include <stdexcept>

namespace qforms {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(const Fq& field, std::vector<std::int64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    for (auto& c : coeffs_) c = field_.reduce(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Fq& field, std::int64_t c, int power) {
    if (power < 0) throw std::invalid_argument("monomial with negative power");
    std::vector<std::int64_t> cs(static_cast<size_t>(power) + 1, 0);
    cs.back() = c;
    return Poly(field, std::move(cs));
}

std::int64_t Poly::lc() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::monic() const {
    std::int64_t u = field_.inv(lc());
    return *this * u;
}

std::int64_t Poly::eval(std::int64_t x) const noexcept {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Poly Poly::derivative() const {
    std::vector<std::int64_t> cs;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        cs.push_back(field_.mul(static_cast<std::int64_t>(i % static_cast<size_t>(field_.q())),
                                coeffs_[i]));
    return Poly(field_, std::move(cs));
}

Poly Poly::operator-() const {
    std::vector<std::int64_t> cs(coeffs_);
    for (auto& c : cs) c = field_.neg(c);
    return Poly(field_, std::move(cs));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<std::int64_t> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = a.field_.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<std::int64_t> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = a.field_.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(cs));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
    std::vector<std::int64_t> cs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    const Fq& F = a.field_;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] = F.add(cs[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(a.field_, std::move(cs));
}

Poly Poly::operator*(std::int64_t scalar) const {
    std::vector<std::int64_t> cs(coeffs_);
    for (auto& c : cs) c = field_.mul(c, scalar);
    return Poly(field_, std::move(cs));
}

int Poly::cmp(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        std::int64_t c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 't';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Fq& F = f.field();
    if (f.degree() < g.degree()) return {Poly::zero(F), f};
    std::int64_t ilc = F.inv(g.lc());
    std::vector<std::int64_t> rem(f.coeffs());
    std::vector<std::int64_t> quot(static_cast<size_t>(f.degree() - g.degree()) + 1, 0);
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        std::int64_t top = rem[static_cast<size_t>(k + g.degree())];
        if (top == 0) continue;
        std::int64_t qc = F.mul(top, ilc);
        quot[static_cast<size_t>(k)] = qc;
        for (int i = 0; i <= g.degree(); ++i) {
            size_t idx = static_cast<size_t>(k + i);
            rem[idx] = F.sub(rem[idx], F.mul(qc, g.coeff(i)));
        }
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("pow_mod modulus must be nonconstant");
    Poly b = base % m;
    Poly r = Poly::one(base.field());
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

Poly inv_mod(const Poly& a, const Poly& m) {
    if (m.degree() < 1) throw std::invalid_argument("inv_mod modulus must be nonconstant");
    // Extended Euclid tracking only the coefficient of a.
    const Fq& F = a.field();
    Poly r0 = m, r1 = a % m;
    Poly s0 = Poly::zero(F), s1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.is_constant() || r0.is_zero())
        throw std::invalid_argument("inv_mod: element not invertible");
    return (s0 * F.inv(r0.coeff(0))) % m;
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    const Fq& F = f.field();
    if (f.is_zero()) return Poly::zero(F);
    int n = f.degree();
    if (n % 2 != 0) return std::nullopt;
    auto lead = F.sqrt(f.lc());
    if (!lead) return std::nullopt;
    int m = n / 2;
    std::vector<std::int64_t> s(static_cast<size_t>(m) + 1, 0);
    s[static_cast<size_t>(m)] = *lead;
    std::int64_t half_top_inv = F.inv(F.mul(2, *lead));
    for (int k = m - 1; k >= 0; --k) {
        // Coefficient of t^(m+k) in s^2 is 2*s_m*s_k plus cross terms with
        // both indices strictly between k and m.
        std::int64_t acc = f.coeff(m + k);
        for (int i = k + 1; i <= m - 1; ++i) {
            int j = m + k - i;
            if (j < k + 1 || j > m - 1) continue;
            acc = F.sub(acc, F.mul(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]));
        }
        s[static_cast<size_t>(k)] = F.mul(acc, half_top_inv);
    }
    Poly root(F, std::move(s));
    if (root * root != f) return std::nullopt;
    return root;
}

int valuation(const Poly& f, const Poly& p) {
    return remove_factor(f, p).first;
}

std::pair<int, Poly> remove_factor(const Poly& f, const Poly& p) {
    if (f.is_zero()) throw std::invalid_argument("valuation of the zero polynomial");
    if (p.degree() < 1) throw std::invalid_argument("valuation at a constant");
    int v = 0;
    Poly cur = f;
    for (;;) {
        auto [q, r] = divrem(cur, p);
        if (!r.is_zero()) return {v, cur};
        cur = q;
        ++v;
    }
}

}  // namespace qforms
