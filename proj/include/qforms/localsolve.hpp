#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qforms/instance.hpp"
#include "qforms/place.hpp"

namespace qforms {

/// Behaviour of a place of F in the quadratic extension E = F(sqrt(-d)).
enum class SplittingType { Split, Inert, Ramified };

struct LocalVerdict {
    Place place;
    bool solvable;
    std::string method;  // which decision branch settled the place
    std::string note;
};

/// Splitting of a place in E, from the residue character of -d (finite
/// places) or from the degree parity / leading coefficient of -d (infinity).
SplittingType splitting_type(const EquationInstance& inst, const Place& v);

/// True when the infinite place does not split in E (it is ramified or
/// inert), i.e. E has a unique place above infinity.  Exact-search degree
/// bounds are valid precisely under this hypothesis.
bool is_imaginary(const EquationInstance& inst);

/// The finite places dividing a*d*n plus the infinite place, sorted.  At
/// every place not listed the equation is automatically locally solvable.
/// Requires n != 0.
std::vector<Place> critical_places(const EquationInstance& inst);

/// Decides solvability over the completion at v by valuation descent on the
/// normalized diagonal form (finite places with unit a; with the roles of x
/// and y swapped when c is the unit coefficient; by direct smooth-point or
/// divide-through arguments otherwise) and by the Hilbert symbol at
/// infinity.  Requires n != 0.
LocalVerdict local_solvable(const EquationInstance& inst, const Place& v);

/// Independent validator: digit-by-digit exhaustive search of the original
/// equation modulo p^precision with the quantitative Hensel criterion (a
/// residue pair lifts iff the equation value has valuation >= 2m+1 while
/// some partial derivative has valuation <= m).  Exact for
/// precision >= v_p(4*a*d*n) + 3 (enforced; smaller precision throws).
bool local_oracle(const EquationInstance& inst, const Poly& p, int precision);

/// Evaluates local_solvable on every critical place.  Returns the overall
/// verdict plus all per-place verdicts (n == 0 short-circuits to true).
std::pair<bool, std::vector<LocalVerdict>> everywhere_locally_solvable(const EquationInstance& inst);

}  // namespace qforms
