#ifndef LOGNC_COORDMAP_HPP
#define LOGNC_COORDMAP_HPP

#include <optional>
#include <vector>

#include "lognc/poly.hpp"
#include "lognc/weights.hpp"

namespace lognc {

// Substitution map between polynomial rings: variable i of the domain ring is
// replaced by values[i], a polynomial over the codomain ring. apply() is a
// ring homomorphism.
class CoordinateMap {
  public:
    CoordinateMap(RingPtr domain, RingPtr codomain, std::vector<Poly> values);

    static CoordinateMap identity(const RingPtr& ring);

    const RingPtr& domain() const { return domain_; }
    const RingPtr& codomain() const { return codomain_; }
    const std::vector<Poly>& values() const { return values_; }
    const Poly& value(int i) const { return values_.at(i); }

    Poly apply(const Poly& p) const;

    // Composite substitution: first this, then next (domain of next must be
    // the codomain of this). Maps domain() into next.codomain().
    CoordinateMap then(const CoordinateMap& next) const;

    // Checks: values[i] chi-homogeneous of degree W_dom.weights[i] under
    // W_cod; for square maps, invertible linear part.
    void validate(const WeightSystem& W_dom, const WeightSystem& W_cod) const;

    // Linear part as a matrix: value(i) = sum_j L[i][j] x_j + higher order.
    std::vector<std::vector<Rat>> linear_part() const;

    // Exact inverse of a square weighted-homogeneous change of coordinates
    // with invertible linear part. Throws when not invertible.
    CoordinateMap inverse(const WeightSystem& W_dom, const WeightSystem& W_cod) const;

  private:
    RingPtr domain_;
    RingPtr codomain_;
    std::vector<Poly> values_;
};

}  // namespace lognc

#endif
