#include "qforms/place.hpp"

#include <stdexcept>

#include "qforms/factorize.hpp"

namespace qforms {

Place Place::finite(Poly prime) {
    if (prime.degree() < 1 || !prime.is_monic() || !is_irreducible(prime))
        throw std::invalid_argument("finite place requires a monic irreducible polynomial");
    Fq field = prime.field();
    return Place(field, std::move(prime));
}

Place Place::infinite(const Fq& field) { return Place(field, std::nullopt); }

const Poly& Place::prime() const {
    if (!prime_) throw std::invalid_argument("the infinite place has no defining polynomial");
    return *prime_;
}

int Place::cmp(const Place& a, const Place& b) {
    if (a.is_infinite() && b.is_infinite()) return 0;
    if (a.is_infinite()) return 1;
    if (b.is_infinite()) return -1;
    return Poly::cmp(*a.prime_, *b.prime_);
}

std::string Place::to_string() const {
    return prime_ ? prime_->to_string() : "inf";
}

}  // namespace qforms
