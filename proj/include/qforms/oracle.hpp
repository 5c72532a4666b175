#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qforms/instance.hpp"
#include "qforms/place.hpp"

namespace qforms {

struct Witness {
    Poly x, y;        // solution of a*x^2 + b*x*y + c*y^2 + g = 0
    Poly xt, yt;      // image under the normalization xt = 2a*x + b*y, yt = y
};

enum class Verdict { Solvable, Unsolvable, UnknownWithinBound };

struct SolveReport {
    Verdict verdict = Verdict::UnknownWithinBound;
    std::vector<Witness> witnesses;
    std::optional<Place> failed_place;
    std::optional<int> artin_parity;
    bool complete = false;  // whether the verdict rests on an exhaustive search / proof
    std::string stage;
    std::string note;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Degree bounds (bound_xt, bound_yt) for solutions of the normalized form:
/// deg xt <= floor(deg n / 2) and deg yt <= floor((deg n - deg d)/2), the
/// latter possibly negative (forcing yt = 0).  Valid only under the
/// imaginary hypothesis; requires n != 0.
std::pair<int, int> degree_bounds(const EquationInstance& inst);

/// Exhaustive witness search: enumerate yt up to the degree bound, recover
/// xt as an exact square root of n - d*yt^2, and keep pairs where
/// (xt - b*yt) is divisible by 2a.  Complete (hence a decision procedure)
/// under the imaginary hypothesis; otherwise bound_override must be given
/// and a fruitless search reports UnknownWithinBound.  Witnesses come back
/// sorted by (y, x) in canonical polynomial order.
SolveReport enumerate_solutions(const EquationInstance& inst,
                                std::optional<int> bound_override = std::nullopt);

/// Convenience wrapper around enumerate_solutions.
bool is_solvable_bruteforce(const EquationInstance& inst);

}  // namespace qforms
