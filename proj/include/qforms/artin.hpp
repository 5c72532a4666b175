#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qforms/instance.hpp"
#include "qforms/oracle.hpp"
#include "qforms/poly.hpp"

namespace qforms {

/// Description of an abelian extension K of E = F(sqrt(-d)) as *input data*
/// (the library never computes class fields itself).
///
/// QuadraticKummer: K = E(sqrt(m)) with m in F_q[t], together with the sign
/// of the Artin symbol at each finite place ramified in E/F (the places
/// dividing d).
struct QuadraticKummer {
    Poly m;
    std::vector<std::pair<Poly, int>> ramified_frob;  // (monic irreducible, +-1), sorted
};

/// PrimitiveElement: K = E(alpha), alpha given by its monic minimal
/// polynomial over E with coefficients in F_q[t] (minpoly[i] multiplies the
/// i-th power of the auxiliary variable), plus the cyclic orders of
/// Gal(K/E).
struct PrimitiveElement {
    std::vector<Poly> minpoly;
    std::vector<int> group_orders;
};

class ClassFieldSpec {
public:
    ClassFieldSpec(const Fq& field, Poly d, QuadraticKummer data, std::string label);
    ClassFieldSpec(const Fq& field, Poly d, PrimitiveElement data, std::string label);

    /// Built-in data for the worked F_3 equation family with
    /// d = (t-1)(t^2-t-1): K = E(sqrt(t^2-t-1)), both ramified Artin signs -1.
    static ClassFieldSpec f3_example();

    const Fq& field() const noexcept { return field_; }
    const Poly& d() const noexcept { return d_; }
    const std::string& label() const noexcept { return label_; }
    bool is_quadratic_kummer() const noexcept {
        return std::holds_alternative<QuadraticKummer>(data_);
    }
    const QuadraticKummer& kummer() const { return std::get<QuadraticKummer>(data_); }
    const PrimitiveElement& primitive() const { return std::get<PrimitiveElement>(data_); }

    /// Artin sign at a finite place dividing d (QuadraticKummer only).
    int ramified_frob_sign(const Poly& p) const;

private:
    Fq field_;
    Poly d_;
    std::variant<QuadraticKummer, PrimitiveElement> data_;
    std::string label_;
};

/// Raised by sign_data when deg l is not divisible by the residue degree of
/// the infinite place; the criterion treats it as unsolvability at infinity.
struct InfinitePlaceError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SignData {
    int d_infinity;        // residue degree of the infinite place of E (1 or 2)
    int deg_star;          // deg l / d_infinity
    std::int64_t sgn;      // lc(l) * lc(-D)^(-deg_star) in F_q
};

/// True iff l splits completely in K over F: l splits in E and the defining
/// data splits totally modulo l.
bool splits_completely(const ClassFieldSpec& spec, const Poly& l);

/// Common degree of the primes of E above l in K (l must split in E).
/// Throws when the defining data factors into pieces of unequal degree
/// modulo l (malformed data or hidden ramification).
int relative_degree(const ClassFieldSpec& spec, const Poly& l);

/// Sign bookkeeping at infinity for the family l = x^2 + D*y^2; requires
/// the infinite place of F(sqrt(-D)) to be non-split.
SignData sign_data(const Poly& D, const Poly& l);

/// Per-part evaluation of the solvability criterion for l = x^2 + D*y^2,
/// exposed so tests can probe individual conditions.
struct X2Dy2Breakdown {
    bool infinite_failure = false;          // deg_star not integral
    bool sign_square = false;               // sgn(l)*(-1)^deg_star a square in F_q
    bool split_in_E = false;
    bool symbols_ok = false;                // (l/r) = +1 for every monic irreducible r | D
    bool splits_plus = false;               // splits completely per spec_plus
    bool splits_hilbert = false;            // splits completely per spec_hilbert
    std::optional<int> relative_degree_plus;
    bool verdict = false;
};

X2Dy2Breakdown analyze_x2_Dy2(const Poly& D, const Poly& l, const ClassFieldSpec& spec_plus,
                              const ClassFieldSpec& spec_hilbert);

/// Solvability of l = x^2 + D*y^2 (D squarefree nonconstant, l a monic
/// irreducible not dividing D) from residue symbols at the divisors of D
/// and splitting data in the two supplied class fields.
bool criterion_x2_Dy2(const Poly& D, const Poly& l, const ClassFieldSpec& spec_plus,
                      const ClassFieldSpec& spec_hilbert);

/// The Artin condition for a general instance, for class field data of
/// QuadraticKummer shape describing an everywhere-unramified K = E(sqrt m)
/// in which the infinite place of E splits (validated from the data):
/// sums v_p(n) over ramified places with Artin sign -1 and split places
/// whose residue character of m is -1; the condition holds iff the sum is
/// even.  Inert places and the infinite place contribute nothing.
bool artin_condition_quadratic(const EquationInstance& inst, const ClassFieldSpec& spec);

/// Quiet applicability probe for decide(): true when
/// artin_condition_quadratic would accept this (instance, spec) pair.
bool artin_scope_ok(const EquationInstance& inst, const ClassFieldSpec& spec);

/// The instance -x^2 + t*x*y - (t^3 - t^2 + 1)*y^2 + g = 0 over F_3.
EquationInstance example_f3_instance(const Poly& g);

/// Closed-form solvability test for the F_3 example family, evaluated
/// directly on the factorization of g:
///   (1) at p in {t-1, t^2-t-1}: the residue character of the unit part of
///       g equals (-1)^(v_p(g));
///   (2) every other p with odd v_p(g) has residue character +1 for -d;
///   (3) v_{t-1}(g) + v_{t^2-t-1}(g) + sum of v_p(g) over split p with
///       residue character -1 for t^2-t-1 is even.
bool criterion_example_F3(const Poly& g);

/// True when deg D is odd or every irreducible factor of D has even degree;
/// under this condition (and trivial sign) the residue-symbol conditions of
/// criterion_x2_Dy2 are implied by the splitting conditions.  Requires D
/// squarefree nonconstant.
bool hilbert_redundancy(const Poly& D);

/// Full decision pipeline: trivial n = 0, bounded search for non-imaginary
/// instances, local conditions, the Artin condition when applicable class
/// field data is supplied, and exact search for witnesses.
SolveReport decide(const EquationInstance& inst,
                   const std::optional<ClassFieldSpec>& spec = std::nullopt,
                   std::optional<int> bound = std::nullopt);

}  // namespace qforms
