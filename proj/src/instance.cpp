#include "qforms/instance.hpp"

#include <stdexcept>

namespace qforms {

EquationInstance::EquationInstance(Poly a, Poly b, Poly c, Poly g)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      g_(std::move(g)),
      d_(Poly::zero(a_.field())),
      minus_d_(Poly::zero(a_.field())),
      n_(Poly::zero(a_.field())) {
    const Fq& F = a_.field();
    if (b_.field() != F || c_.field() != F || g_.field() != F)
        throw std::invalid_argument("equation coefficients over different fields");
    if (a_.is_zero()) throw std::invalid_argument("leading coefficient a must be nonzero");
    Poly four = Poly::constant(F, 4);
    minus_d_ = b_ * b_ - four * a_ * c_;
    d_ = -minus_d_;
    n_ = -(four * a_ * g_);
    if (poly_sqrt(minus_d_))
        throw std::invalid_argument("b^2 - 4ac must not be a square in F_q[t]");
}

}  // namespace qforms
