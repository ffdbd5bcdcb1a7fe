#ifndef LOGNC_LOGDER_HPP
#define LOGNC_LOGDER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lognc/coordmap.hpp"
#include "lognc/derivation.hpp"
#include "lognc/groebner.hpp"
#include "lognc/weights.hpp"

namespace lognc {

// Precondition violation with the failed condition named.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A derivation handed to the Saito test was not logarithmic; distinct from a
// negative criterion result.
struct NotLogarithmicError : std::runtime_error {
    explicit NotLogarithmicError(const std::string& what) : std::runtime_error(what) {}
};

// Minimal chi-homogeneous generators of Der(-log D) = {delta : delta(f) in (f)}
// together with their degrees and the cofactors delta(f)/f.
struct LogDerivations {
    RingPtr ring;
    WeightSystem W;
    std::vector<Derivation> basis;
    std::vector<Rat> degrees;
    std::vector<Poly> cofactors;

    int count() const { return static_cast<int>(basis.size()); }
};

// Computed from the syzygies of (df/dx_1, ..., df/dx_{n+1}, f); the last
// syzygy coordinate is retained as the cofactor so logarithmicity never needs
// re-division. Requires f reduced and chi-homogeneous of degree W.degree.
LogDerivations log_derivations(const Poly& f, const WeightSystem& W);

// Same basis, normalized so the Euler derivation chi itself is a member
// (swapped into the degree-zero part; always possible since chi is never in
// m * Der(-log D)).
LogDerivations log_derivations_with_euler(const Poly& f, const WeightSystem& W);

// Saito matrix A: columns are the coefficients of the basis derivations;
// Lambda = A^t. Entry degrees obey deg(lambda_{i,j}) = d_i + w_j.
struct SaitoMatrix {
    RingPtr ring;
    WeightSystem W;
    std::vector<Derivation> basis;  // delta_1..delta_{n+1}
    std::vector<Rat> degrees;       // d_1..d_{n+1}
    std::vector<Poly> cofactors;    // delta_i(f) = cofactor_i * f
    Poly determinant;
    Rat unit;  // det(A) = unit * f

    int size() const { return static_cast<int>(basis.size()); }
    // a(i, j): coefficient of d/dx_i in delta_j.
    const Poly& a(int i, int j) const { return basis[j].coeff(i); }
    // lambda(i, j) = a(j, i).
    const Poly& lambda(int i, int j) const { return basis[i].coeff(j); }
};

struct SaitoCheck {
    bool is_basis;  // det(A) = unit * f with unit a nonzero constant
    Rat unit;
    Poly determinant;
};

// Saito's criterion for an explicit candidate basis. Throws
// NotLogarithmicError when a candidate is not logarithmic along f.
SaitoCheck saito_criterion(const std::vector<Derivation>& candidate, const Poly& f,
                           const WeightSystem& W);

struct Freeness {
    bool free = false;
    int generator_count = 0;
    LogDerivations generators;
    std::optional<SaitoMatrix> saito;  // engaged iff free
};

// Graded Nakayama: the divisor is free exactly when the minimal generator
// count equals n+1, in which case the Saito criterion must confirm the basis.
Freeness freeness_test(const Poly& f, const WeightSystem& W);

// delta = a * chi + delta' with delta'(f) = 0 (exact for chi-homogeneous
// delta of degree zero; in general a is the degree-zero part coefficient).
std::pair<Rat, Derivation> split_euler(const Derivation& delta, const EulerDerivation& chi,
                                       const Poly& f);

// True when no Saito matrix entry has a constant term (the derivation module
// sits inside m * Der).
bool entries_in_maximal_ideal(const SaitoMatrix& S);

// All n x n minors M_{i,j} of Lambda (delete row i, column j).
std::vector<std::vector<Poly>> submaximal_minors(const SaitoMatrix& S);

struct MinorsReport {
    bool equal = false;
    std::vector<Poly> minor_gens;     // nonzero minors
    std::vector<Poly> jacobian_gens;  // nonzero partials and f
};

// Compares the ideal of submaximal minors of Lambda with the full Jacobian
// ideal (partials + f). Equality is a necessary condition for normal
// crossings in codimension one; failure refutes it.
MinorsReport minors_vs_jacobian(const SaitoMatrix& S, const Poly& f);

struct MinorDegreeCheck {
    int i, j;
    Rat expected;  // d - d_i - w_j
    bool nonzero;
    bool matches;  // vacuous (true) when the minor vanishes
};

struct DegreeAudit {
    std::vector<Rat> degrees;
    bool all_nonpositive = false;   // every d_i <= 0
    bool entries_in_m = false;      // no unit entries
    std::vector<MinorDegreeCheck> minor_checks;
    bool minor_degrees_ok = false;
    bool f_irreducible_rational = false;
    // engaged when f is Q-irreducible and entries_in_m holds: all minors
    // must be nonzero then.
    std::optional<bool> all_minors_nonzero;
};

DegreeAudit degree_audit(const SaitoMatrix& S, const Poly& f);

// One straightening step of a suspension split.
struct SuspensionStep {
    CoordinateMap forward;  // kept new variables as polynomials in the old
    int dropped_var;        // slot straightened to d/dx_i and removed
    std::string dropped_name;
};

struct SuspensionResult {
    bool suspended = false;
    RingPtr ring;  // final ring (== input ring when not suspended)
    Poly f;
    WeightSystem W;
    std::vector<SuspensionStep> steps;
};

// Iteratively straighten basis derivations with a unit coefficient (degree
// -w_i) to d/dx_i by weighted-homogeneous changes and drop x_i, until the
// derivation module sits inside m * Der. Throws PreconditionError when a
// straightening would need a non-homogeneous change.
SuspensionResult suspension_split(const Poly& f, const WeightSystem& W);

// Determinant of a square polynomial matrix (cofactor expansion, memoized
// over row masks).
Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingPtr& ring);

}  // namespace lognc

#endif
