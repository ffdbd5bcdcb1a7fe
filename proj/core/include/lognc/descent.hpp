#ifndef LOGNC_DESCENT_HPP
#define LOGNC_DESCENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lognc/coordmap.hpp"
#include "lognc/factor.hpp"
#include "lognc/lie.hpp"
#include "lognc/logder.hpp"

namespace lognc {

struct DescentOptions {
    int lie_cap = 0;  // 0: use default_lie_cap
    FieldExtPolicy field_ext = FieldExtPolicy::Allow;
};

// One iteration record for traces.
struct DescentIteration {
    Rat epsilon;
    std::vector<Rat> h_eigenvalues;      // per ambient variable
    std::vector<Rat> old_weights, new_weights;
    int mprime_before = 0, mprime_after = 0;
};

// State of the chi-modification loop. Weights stay strictly positive, the
// lowest-weight space shrinks strictly, and chi(f) = d*f holds at every step.
struct DescentState {
    RingPtr ring;
    Poly f;
    WeightSystem W;
    bool synthetic = false;  // annihilator supplied directly (unit fixtures)

    LieAlgebra ann;                 // annihilator algebra a (backed)
    std::vector<int> ann_degree0;   // indices of the degree-0 part a_0
    LinearRep rep;                  // action of a on m'
    std::vector<int> mprime;        // ambient variable indices of m'
    bool a_solvable = false;

    std::vector<CoordinateMap> history;  // per-step forward maps (new in old)
    std::vector<DescentIteration> trace;
    int iterations = 0;
};

// Build the state from a free divisor: minimal basis with chi, conditions
// "all degrees <= 0" and "entries in m" checked (PreconditionError names the
// failed one), then d, a = split_annihilator, and the m' representation.
DescentState make_descent_state(const Poly& f, const WeightSystem& W,
                                const DescentOptions& opts = {});

// Synthetic state for unit fixtures: the annihilator basis is supplied
// directly; every element must be chi-homogeneous and annihilate f.
DescentState make_synthetic_state(const Poly& f, const WeightSystem& W,
                                  std::vector<Derivation> annihilators,
                                  const DescentOptions& opts = {});

// epsilon = min(w_1, gap) / (2 (H + 1)) with H = max |h-eigenvalue| and gap
// the least positive w_i - w_1 (w_1 when all weights are equal). Guarantees
// positive new weights and a strict drop of the lowest-weight space.
Rat select_epsilon(const WeightSystem& W, const std::vector<Rat>& h_eigenvalues);

// One chi -> chi + epsilon h step: sl2-triple in a_0, equivariant
// linearization, simultaneous diagonalization, reweighting, recomputation.
DescentState chi_step(const DescentState& state, const DescentOptions& opts = {});

// Iterate chi_step until the m' action is solvable. At most dim m' - 1
// iterations by the strict dimension drop.
DescentState descend_to_solvable(const Poly& f, const WeightSystem& W,
                                 const DescentOptions& opts = {});

struct SmoothComponentCertificate {
    Poly linear_form;  // eigenform ell in the state's coordinates
    Poly cofactor;     // g with f = ell * g exactly (rational case)
    std::vector<Rat> eigenvalues;  // one per annihilator basis element
    // Conjugate-pair fallback: the eigenform needs a quadratic extension and
    // only the rational product of the two conjugate components is returned.
    std::optional<QuadMin> ext;
    std::optional<Poly> quadratic_factor;
};

// Lie's theorem applied to a': a common eigenform ell with ell | f, the
// smooth component of the divisor.
SmoothComponentCertificate smooth_component(const DescentState& state,
                                            const DescentOptions& opts = {});

// The equivariant section sigma_w behind the linearization step: new
// variable representatives x_i' = x_i + (correction in m^2) on which the
// given degree-zero derivations act linearly. Exposed for direct testing.
struct EquivariantSplitting {
    CoordinateMap forward;   // x' in terms of x
    CoordinateMap backward;  // x in terms of x'
};
EquivariantSplitting equivariant_splitting(const std::vector<Derivation>& action,
                                           const RingPtr& ring, const WeightSystem& W);

}  // namespace lognc

#endif
