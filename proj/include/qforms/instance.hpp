#pragma once

#include "qforms/poly.hpp"

namespace qforms {

/// The equation a*x^2 + b*x*y + c*y^2 + g = 0 over F_q[t], together with the
/// derived data of its normalized form  xt^2 + d*yt^2 = n  under
/// xt = 2a*x + b*y, yt = y, where d = 4ac - b^2 and n = -4ag.
///
/// Standing hypothesis (validated): a != 0 and b^2 - 4ac is not a square in
/// F_q[t], so the normalized form is nondegenerate and E = F(sqrt(b^2-4ac))
/// is a genuine quadratic extension.
class EquationInstance {
public:
    EquationInstance(Poly a, Poly b, Poly c, Poly g);

    const Fq& field() const noexcept { return a_.field(); }
    const Poly& a() const noexcept { return a_; }
    const Poly& b() const noexcept { return b_; }
    const Poly& c() const noexcept { return c_; }
    const Poly& g() const noexcept { return g_; }
    /// d = 4ac - b^2.
    const Poly& d() const noexcept { return d_; }
    /// -d = b^2 - 4ac (the discriminant defining E).
    const Poly& minus_d() const noexcept { return minus_d_; }
    /// n = -4ag.
    const Poly& n() const noexcept { return n_; }

private:
    Poly a_, b_, c_, g_, d_, minus_d_, n_;
};

}  // namespace qforms
