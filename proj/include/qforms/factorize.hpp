#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qforms/poly.hpp"

namespace qforms {

/// Default seed for the randomized equal-degree splitting step ("QFORMS" in
/// ASCII).  The factor list is sorted canonically, so the output does not
/// depend on the seed; it only fixes the internal random choices.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x51464F524D53ULL;

/// Complete factorization u * prod(p_k^{m_k}) with u the unit (leading
/// coefficient of the input) and the p_k distinct monic irreducibles sorted
/// by (degree, coefficients from the highest term).
struct FactoredPoly {
    Fq field;
    std::int64_t unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly reconstruct() const;
};

/// Deterministic Rabin irreducibility test.  Throws on constant input.
bool is_irreducible(const Poly& f);

/// Squarefree decomposition (with p-th-root descent for vanishing
/// derivatives), then distinct-degree and equal-degree splitting.
/// Throws on zero input; constants factor as a bare unit.
FactoredPoly factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

}  // namespace qforms
