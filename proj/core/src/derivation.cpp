#include "lognc/derivation.hpp"

#include <sstream>
#include <stdexcept>

namespace lognc {

std::string ChiDegree::str() const {
    switch (kind) {
        case Kind::Value: return rat_to_string(value);
        case Kind::MinusInfinity: return "-inf";
        default: return "inhomogeneous";
    }
}

ChiDegree poly_chi_degree(const Poly& p, std::span<const Rat> weights) {
    if (p.is_zero()) return ChiDegree::minus_infinity();
    if (static_cast<int>(weights.size()) != p.nvars())
        throw std::invalid_argument("weight vector arity mismatch");
    Rat d = p.terms().front().mono.weighted_degree(weights);
    for (const auto& t : p.terms())
        if (t.mono.weighted_degree(weights) != d) return ChiDegree::inhomogeneous();
    return ChiDegree::of(d);
}

Derivation::Derivation(RingPtr ring, std::vector<Poly> coefficients)
    : ring_(std::move(ring)), coeff_(std::move(coefficients)) {
    if (static_cast<int>(coeff_.size()) != ring_->nvars())
        throw std::invalid_argument("derivation needs one coefficient per variable");
    for (const auto& c : coeff_)
        if (!same_ring(c.ring(), ring_))
            throw std::invalid_argument("derivation coefficient in wrong ring");
}

Derivation Derivation::zero(const RingPtr& ring) {
    std::vector<Poly> cs(ring->nvars(), Poly::zero(ring));
    return Derivation(ring, std::move(cs));
}

Derivation Derivation::partial(const RingPtr& ring, int var) {
    Derivation d = zero(ring);
    d.coeff_[var] = Poly::constant(ring, Rat(1));
    return d;
}

bool Derivation::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

Poly Derivation::apply(const Poly& p) const {
    if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("derivation/polynomial ring mismatch");
    Poly acc = Poly::zero(ring_);
    for (int i = 0; i < nvars(); ++i) {
        if (coeff_[i].is_zero()) continue;
        acc = acc + coeff_[i] * p.derivative(i);
    }
    return acc;
}

Derivation Derivation::operator+(const Derivation& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("derivation ring mismatch");
    std::vector<Poly> cs;
    cs.reserve(coeff_.size());
    for (int i = 0; i < nvars(); ++i) cs.push_back(coeff_[i] + o.coeff_[i]);
    return Derivation(ring_, std::move(cs));
}

Derivation Derivation::operator-(const Derivation& o) const { return *this + (o * Rat(-1)); }

Derivation Derivation::operator*(const Rat& c) const {
    std::vector<Poly> cs;
    cs.reserve(coeff_.size());
    for (const auto& a : coeff_) cs.push_back(a * c);
    return Derivation(ring_, std::move(cs));
}

bool Derivation::operator==(const Derivation& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    for (int i = 0; i < nvars(); ++i)
        if (!(coeff_[i] == o.coeff_[i])) return false;
    return true;
}

ChiDegree Derivation::chi_degree(std::span<const Rat> weights) const {
    bool found = false;
    Rat e;
    for (int i = 0; i < nvars(); ++i) {
        if (coeff_[i].is_zero()) continue;
        ChiDegree d = poly_chi_degree(coeff_[i], weights);
        if (!d.is_value()) return ChiDegree::inhomogeneous();
        Rat ei = d.value - weights[i];
        if (!found) {
            e = ei;
            found = true;
        } else if (ei != e) {
            return ChiDegree::inhomogeneous();
        }
    }
    if (!found) return ChiDegree::minus_infinity();
    return ChiDegree::of(e);
}

std::pair<Rat, Derivation> Derivation::primitive_with_unit() const {
    std::vector<Rat> cs;
    for (const auto& a : coeff_)
        for (const auto& t : a.terms()) cs.push_back(t.coeff);
    Rat c = rational_content(cs);
    if (c == 0) return {Rat(1), *this};
    // Sign convention: first nonzero coefficient (by slot, then storage
    // leading term) positive.
    for (const auto& a : coeff_) {
        if (a.is_zero()) continue;
        if (a.storage_leading_term().coeff < 0) c = -c;
        break;
    }
    return {c, *this * (Rat(1) / c)};
}

std::string Derivation::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_[i].str() << ")*d/d" << ring_->var_name(i);
    }
    return os.str();
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("derivation ring mismatch");
    std::vector<Poly> cs;
    cs.reserve(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) cs.push_back(a.apply(b.coeff(i)) - b.apply(a.coeff(i)));
    return Derivation(a.ring(), std::move(cs));
}

}  // namespace lognc
