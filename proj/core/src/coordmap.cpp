#include "lognc/coordmap.hpp"

#include <stdexcept>

namespace lognc {

CoordinateMap::CoordinateMap(RingPtr domain, RingPtr codomain, std::vector<Poly> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != domain_->nvars())
        throw std::invalid_argument("coordinate map needs one value per domain variable");
    for (const auto& v : values_)
        if (!same_ring(v.ring(), codomain_))
            throw std::invalid_argument("coordinate map value in wrong ring");
}

CoordinateMap CoordinateMap::identity(const RingPtr& ring) {
    std::vector<Poly> vals;
    for (int i = 0; i < ring->nvars(); ++i) vals.push_back(Poly::variable(ring, i));
    return CoordinateMap(ring, ring, std::move(vals));
}

Poly CoordinateMap::apply(const Poly& p) const {
    if (!same_ring(p.ring(), domain_))
        throw std::invalid_argument("coordinate map applied to foreign polynomial");
    return p.substitute(values_);
}

CoordinateMap CoordinateMap::then(const CoordinateMap& next) const {
    if (!same_ring(codomain_, next.domain_))
        throw std::invalid_argument("coordinate maps not composable");
    std::vector<Poly> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(next.apply(v));
    return CoordinateMap(domain_, next.codomain_, std::move(vals));
}

std::vector<std::vector<Rat>> CoordinateMap::linear_part() const {
    int n = domain_->nvars(), m = codomain_->nvars();
    std::vector<std::vector<Rat>> L(n, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (const auto& t : values_[i].terms())
            if (t.mono.total_degree() == 1)
                for (int j = 0; j < m; ++j)
                    if (t.mono[j] == 1) L[i][j] = t.coeff;
    return L;
}

namespace {

// Invert a square rational matrix; nullopt when singular.
std::optional<std::vector<std::vector<Rat>>> invert_matrix(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && a[sel][c] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[c], a[sel]);
        std::swap(inv[c], inv[sel]);
        Rat p = Rat(1) / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= p;
            inv[c][j] *= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

void CoordinateMap::validate(const WeightSystem& W_dom, const WeightSystem& W_cod) const {
    if (W_dom.nvars() != domain_->nvars() || W_cod.nvars() != codomain_->nvars())
        throw std::invalid_argument("weight system arity mismatch in coordinate map");
    for (int i = 0; i < domain_->nvars(); ++i) {
        ChiDegree d = poly_chi_degree(values_[i], W_cod.weights);
        if (d.is_minus_infinity())
            throw std::invalid_argument("coordinate map sends a variable to zero");
        if (d.is_inhomogeneous() || d.value != W_dom.weights[i])
            throw std::invalid_argument("substitution for " + domain_->var_name(i) +
                                        " is not homogeneous of its weight");
    }
    if (domain_->nvars() == codomain_->nvars()) {
        if (!invert_matrix(linear_part()))
            throw std::invalid_argument("coordinate map has singular linear part");
    }
}

CoordinateMap CoordinateMap::inverse(const WeightSystem& W_dom, const WeightSystem& W_cod) const {
    if (domain_->nvars() != codomain_->nvars())
        throw std::invalid_argument("only square coordinate maps are invertible");
    validate(W_dom, W_cod);
    const int n = domain_->nvars();
    auto Linv = invert_matrix(linear_part());
    if (!Linv) throw std::invalid_argument("coordinate map has singular linear part");

    // x_i = V_i(y) with V = L + H, H of higher total degree. Iterate
    // y^(k+1) = Linv (x - H(y^k)); weighted homogeneity bounds all total
    // degrees, so the iteration stabilizes.
    std::vector<Poly> H(n, Poly::zero(codomain_));
    for (int i = 0; i < n; ++i)
        for (const auto& t : values_[i].terms())
            if (t.mono.total_degree() >= 2)
                H[i] = H[i] + Poly::monomial(codomain_, t.mono, t.coeff);

    auto linv_image = [&](const std::vector<Poly>& rhs) {
        std::vector<Poly> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) {
            Poly acc = Poly::zero(domain_);
            for (int j = 0; j < n; ++j)
                if ((*Linv)[i][j] != 0) acc = acc + rhs[j] * (*Linv)[i][j];
            out.push_back(acc);
        }
        return out;
    };

    std::vector<Poly> xs;
    for (int j = 0; j < n; ++j) xs.push_back(Poly::variable(domain_, j));
    std::vector<Poly> y = linv_image(xs);
    int max_iter = 2;
    for (const auto& v : values_) max_iter = std::max(max_iter, v.total_degree() + 2);
    for (int it = 0; it < max_iter; ++it) {
        std::vector<Poly> rhs;
        rhs.reserve(n);
        for (int j = 0; j < n; ++j) rhs.push_back(xs[j] - H[j].substitute(y));
        std::vector<Poly> y_next = linv_image(rhs);
        if (y_next == y) break;
        y = std::move(y_next);
    }
    CoordinateMap inv(codomain_, domain_, y);
    // Exactness check: V(inv) must reproduce the identity.
    for (int i = 0; i < n; ++i)
        if (!(inv.apply(values_[i]) == xs[i]))
            throw std::runtime_error("coordinate map inversion did not stabilize");
    return inv;
}

}  // namespace lognc
