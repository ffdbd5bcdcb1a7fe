#ifndef LOGNC_CERTIFY_HPP
#define LOGNC_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lognc/descent.hpp"

namespace lognc {

enum class Verdict { Certified, Refuted, Inconclusive };

std::string verdict_str(Verdict v);

struct StageNote {
    std::string stage;
    std::string message;
};

// Per-irreducible-component analysis (freeness and the normal-crossing
// necessary conditions descend to components).
struct FactorReport {
    Poly factor;
    int multiplicity = 1;
    ChiDegree chi_degree_fixed;               // under the ambient weights, if given
    std::optional<WeightSystem> own_weights;  // per-factor detection
    std::optional<bool> free;
    int generator_count = 0;
    std::vector<Rat> degrees;
    std::optional<bool> degrees_nonpositive;
    std::optional<bool> minors_match;
    std::string note;
};

struct ComponentDescentReport {
    bool reduced = true;
    std::optional<WeightSystem> weights;
    std::vector<FactorReport> components;
};

ComponentDescentReport component_descent(const Poly& f, std::optional<WeightSystem> W);

struct ExtractedFactor {
    Poly pulled_back;      // the factor in the original coordinates
    std::string variable;  // coordinate name it equals at extraction time
};

struct CertifyResult {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    std::string refuted_at;  // stage name for refutations
    bool absolutely_irreducible_certified = false;
    std::vector<StageNote> stages;

    std::optional<WeightSystem> weights;  // detected/supplied at the top level
    int suspension_dropped = 0;
    std::vector<DescentIteration> descent_trace;

    // Certificate: f = unit * prod(factors) in the original coordinates,
    // each factor a coordinate in its extraction chart.
    Rat unit = 0;
    std::vector<ExtractedFactor> factors;
    bool resubstitution_ok = false;
};

// The full pipeline: reduction and quasihomogeneity checks, suspension
// split, freeness, degree audit (refutation on a positive degree), minors
// comparison (refutation on mismatch), chi-descent, smooth component
// extraction, recursion on the cofactor with fresh weights.
CertifyResult certify_normal_crossing(const Poly& f, std::optional<WeightSystem> W,
                                      const DescentOptions& opts = {});

}  // namespace lognc

#endif
