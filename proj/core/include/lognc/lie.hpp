#ifndef LOGNC_LIE_HPP
#define LOGNC_LIE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lognc/derivation.hpp"
#include "lognc/linalg.hpp"
#include "lognc/quadext.hpp"
#include "lognc/weights.hpp"

namespace lognc {

// Finite-dimensional Lie algebra over Q given by structure constants, with
// optional chi-degrees and an optional realization by vector fields.
class LieAlgebra {
  public:
    LieAlgebra() = default;
    // c[i][j] = coordinates of [b_i, b_j]; validated on construction
    // (antisymmetry, Jacobi, degree compatibility when degrees are present).
    LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<std::vector<Rat>>> c,
               std::vector<std::optional<Rat>> degrees = {},
               std::vector<Derivation> backing = {});

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::optional<Rat>>& degrees() const { return degrees_; }
    const std::vector<Derivation>& backing() const { return backing_; }
    bool has_backing() const { return !backing_.empty(); }

    const std::vector<Rat>& structure(int i, int j) const { return c_.at(i).at(j); }
    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
    Mat<Rat> ad(const std::vector<Rat>& x) const;
    Mat<Rat> killing_form() const;  // K_{ij} = tr(ad b_i ad b_j)

    Derivation realize(const std::vector<Rat>& coords) const;  // needs backing

  private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rat>>> c_;
    std::vector<std::optional<Rat>> degrees_;
    std::vector<Derivation> backing_;

    void validate() const;
};

struct CapExceeded : std::runtime_error {
    CapExceeded(int cap, int reached)
        : std::runtime_error("Lie closure exceeded the dimension cap " + std::to_string(cap)),
          cap(cap),
          reached(reached) {}
    int cap, reached;
};

// Dimension of the ambient truncation Der_{<=0} under the grading: the
// default closure cap.
int default_lie_cap(const RingPtr& ring, const WeightSystem& W);

// Bracket closure of chi-homogeneous generators as a Q-vector space. New
// basis elements are the brackets themselves, so all structure constants are
// reproducible. Throws CapExceeded when the dimension passes the cap.
LieAlgebra generate_lie_algebra(const std::vector<Derivation>& gens, const WeightSystem& W,
                                int cap);

// The annihilator subalgebra a = {delta in L : delta(f) = 0} of an algebra
// containing chi, split off basis-wise via the Euler decomposition. Elements
// must be logarithmic along f with constant cofactors.
struct AnnihilatorSplit {
    LieAlgebra algebra;                 // dim = dim L - 1
    std::vector<int> degree_zero;       // indices of the degree-0 part a_0
};
AnnihilatorSplit split_annihilator(const LieAlgebra& L, const EulerDerivation& chi,
                                   const Poly& f);

// Subspaces are lists of coordinate vectors in the basis of L.
using Subspace = std::vector<std::vector<Rat>>;

std::vector<Subspace> derived_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

// Maximal solvable ideal via the Killing-form characterization
// r(L) = [L,L]^perp; canonical echelonized basis.
Subspace solvable_radical(const LieAlgebra& L);

// Semisimple complement to the radical (a subalgebra s with L = s + r(L) and
// [s,s] = s), constructed by lifting through the derived series of the
// radical. Empty for solvable L.
Subspace levi_subalgebra(const LieAlgebra& L);

// Structure of a bracket-closed subspace as its own LieAlgebra.
LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& basis,
                      const std::string& label_prefix);

// Matrices of the action of a derivation-backed algebra on the lowest-weight
// variable space m' (one k x k matrix per basis element; representation
// property verified). delta(x_j) = sum_i M[i][j] x_i over the m' slots.
struct LinearRep {
    std::vector<int> carrier_vars;  // ambient variable indices spanning m'
    std::vector<std::string> labels;
    std::vector<Mat<Rat>> mats;

    int carrier_dim() const { return static_cast<int>(carrier_vars.size()); }
};
LinearRep restrict_to_mprime(const LieAlgebra& L, const RingPtr& ring, const WeightSystem& W);

// Lie algebra spanned by the matrices of a LinearRep (image of the action).
LieAlgebra rep_image_algebra(const LinearRep& R);

struct Sl2Triple {
    // Coordinates in the basis of the algebra searched.
    std::vector<Rat> h, e, f;
};

struct Sl2Obstruction : std::runtime_error {
    Sl2Obstruction(std::string msg, std::string minpoly)
        : std::runtime_error(std::move(msg)), minimal_polynomial(std::move(minpoly)) {}
    std::string minimal_polynomial;
};

// An sl2-triple inside the Levi part: [h,e] = 2e, [h,f] = -2f, [e,f] = h,
// all exact. Returns nullopt for solvable input; throws Sl2Obstruction when
// a triple exists only over a proper field extension.
std::optional<Sl2Triple> find_sl2_triple(const LieAlgebra& L);

enum class FieldExtPolicy { Allow, Deny };

struct CommonEigenvector {
    // Engaged alternative: rational data when ext is empty, extension data
    // otherwise.
    std::optional<QuadMin> ext;
    std::vector<Rat> vector_q;
    std::vector<Rat> eigenvalues_q;  // one per input matrix
    std::vector<QuadExt> vector_e;
    std::vector<QuadExt> eigenvalues_e;
};

struct ExtensionObstruction : std::runtime_error {
    ExtensionObstruction(std::string msg, std::string factor)
        : std::runtime_error(std::move(msg)), factor(std::move(factor)) {}
    std::string factor;  // irreducible factor witnessing the obstruction
};

// Constructive Lie's theorem: a common eigenvector of a solvable family of
// matrices, over Q or a single reported quadratic extension. Throws
// ExtensionObstruction when a larger extension would be needed (or any
// extension, under FieldExtPolicy::Deny).
CommonEigenvector common_eigenvector(const std::vector<Mat<Rat>>& mats, FieldExtPolicy policy);

}  // namespace lognc

#endif
