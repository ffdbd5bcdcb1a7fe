#ifndef LOGNC_GROEBNER_HPP
#define LOGNC_GROEBNER_HPP

#include <vector>

#include "lognc/poly.hpp"
#include "lognc/weights.hpp"

namespace lognc {

// Element of a free module O^r over the polynomial ring.
struct ModElem {
    std::vector<Poly> comp;

    bool is_zero() const;
    ModElem operator+(const ModElem& o) const;
    ModElem operator-(const ModElem& o) const;
    ModElem scaled(const Rat& c) const;
    ModElem mono_mul(const Monomial& m, const Rat& c) const;
    bool operator==(const ModElem& o) const;

    static ModElem wrap(Poly p);  // r = 1
    static int compare(const ModElem& a, const ModElem& b);
};

struct ModTerm {
    int comp = -1;  // -1 encodes the zero element
    Monomial mono;
    Rat coeff;
};

// Position-over-term extension of the weighted base order: lower component
// index dominates, ties resolved by the base monomial order. Column shifts
// feed the grading (and the sugar strategy) but not the comparisons.
class ModuleOrder {
  public:
    ModuleOrder(MonomialOrder base, std::vector<Rat> shifts);

    const MonomialOrder& base() const { return base_; }
    const std::vector<Rat>& shifts() const { return shifts_; }
    int ncomp() const { return static_cast<int>(shifts_.size()); }

    bool term_less(const ModTerm& a, const ModTerm& b) const;
    Rat term_degree(const ModTerm& t) const;

    ModTerm leading_term(const ModElem& v) const;  // comp == -1 for zero
    // Max shifted degree over all terms (sugar seed); 0 for zero elements.
    Rat elem_degree(const ModElem& v) const;

  private:
    MonomialOrder base_;
    std::vector<Rat> shifts_;
};

// Full normal form: every reducible term is reduced, largest first, always by
// the first matching divisor. Deterministic.
ModElem normal_form(ModElem v, const std::vector<ModElem>& basis, const ModuleOrder& ord);

// Reduced Groebner basis of the submodule generated by gens: Buchberger with
// the sugar pair-selection strategy, then full inter-reduction; output is
// monic and sorted by leading term, hence canonical for the submodule.
std::vector<ModElem> groebner_module(std::vector<ModElem> gens, const ModuleOrder& ord);

bool module_member(const ModElem& v, const std::vector<ModElem>& reduced_basis,
                   const ModuleOrder& ord);

// ---- Ideals -------------------------------------------------------------

struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;
    WeightSystem W;

    Ideal(RingPtr ring, std::vector<Poly> gens, WeightSystem W);
};

std::vector<Poly> groebner_basis(const Ideal& I);
bool ideal_member(const Poly& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);

// ---- Syzygies -----------------------------------------------------------

struct SyzygyModule {
    RingPtr ring;
    std::vector<Poly> target;             // g_1..g_m
    std::vector<Rat> shifts;              // degree shift per column
    std::vector<std::vector<Poly>> gens;  // vectors v with sum v_k g_k = 0
};

// Generators of the full syzygy module of g, computed by a Groebner run over
// the augmented module O^(1+m) with the target component eliminated first.
// Every returned vector satisfies sum v_k g_k = 0 exactly.
SyzygyModule syzygy_module(const std::vector<Poly>& g, const WeightSystem& W,
                           std::vector<Rat> shifts);

// Minimal chi-homogeneous generators of the (graded) submodule spanned by the
// given vectors: generators are split into homogeneous components, sorted by
// degree, and kept exactly when not in the submodule generated by the
// previously kept ones (graded Nakayama). Output vectors are homogeneous,
// integer-primitive, and deterministic.
std::vector<std::vector<Poly>> minimal_graded_generators(
    const std::vector<std::vector<Poly>>& gens, const WeightSystem& W,
    const std::vector<Rat>& shifts);

}  // namespace lognc

#endif
