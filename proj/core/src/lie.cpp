#include "lognc/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lognc/logder.hpp"

namespace lognc {

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       std::vector<std::vector<std::vector<Rat>>> c,
                       std::vector<std::optional<Rat>> degrees, std::vector<Derivation> backing)
    : labels_(std::move(labels)), c_(std::move(c)), degrees_(std::move(degrees)),
      backing_(std::move(backing)) {
    const size_t n = labels_.size();
    if (c_.size() != n) throw std::invalid_argument("structure constant table size mismatch");
    for (const auto& row : c_) {
        if (row.size() != n) throw std::invalid_argument("structure constant table size mismatch");
        for (const auto& v : row)
            if (v.size() != n) throw std::invalid_argument("structure constant vector size mismatch");
    }
    if (!degrees_.empty() && degrees_.size() != n)
        throw std::invalid_argument("degree list size mismatch");
    if (!backing_.empty() && backing_.size() != n)
        throw std::invalid_argument("backing derivation list size mismatch");
    validate();
}

void LieAlgebra::validate() const {
    const int n = dim();
    // Antisymmetry.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c_[i][j][k] != -c_[j][i][k])
                    throw std::invalid_argument("structure constants are not antisymmetric");
    // Jacobi identity, exact.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<Rat> acc(n, Rat(0));
                auto add = [&](int a, int b, int cidx) {
                    // [[a,b],c]
                    for (int m = 0; m < n; ++m) {
                        if (c_[a][b][m] == 0) continue;
                        for (int l = 0; l < n; ++l) acc[l] += c_[a][b][m] * c_[m][cidx][l];
                    }
                };
                add(i, j, k);
                add(j, k, i);
                add(k, i, j);
                for (const auto& x : acc)
                    if (x != 0) throw std::invalid_argument("Jacobi identity fails");
            }
    // Degree compatibility: c_{ij}^k = 0 unless deg_k = deg_i + deg_j.
    if (!degrees_.empty()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!degrees_[i] || !degrees_[j]) continue;
                Rat target = *degrees_[i] + *degrees_[j];
                for (int k = 0; k < n; ++k)
                    if (c_[i][j][k] != 0 && degrees_[k] && *degrees_[k] != target)
                        throw std::invalid_argument("structure constants violate the grading");
            }
    }
}

std::vector<Rat> LieAlgebra::bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    const int n = dim();
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (c_[i][j][k] != 0) out[k] += f * c_[i][j][k];
        }
    }
    return out;
}

Mat<Rat> LieAlgebra::ad(const std::vector<Rat>& x) const {
    const int n = dim();
    Mat<Rat> m(n, n);
    std::vector<Rat> e(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        e[j] = 1;
        std::vector<Rat> col = bracket(x, e);
        for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
        e[j] = 0;
    }
    return m;
}

Mat<Rat> LieAlgebra::killing_form() const {
    const int n = dim();
    std::vector<Mat<Rat>> ads;
    std::vector<Rat> e(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        e[i] = 1;
        ads.push_back(ad(e));
        e[i] = 0;
    }
    Mat<Rat> K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rat t = (ads[i] * ads[j]).trace();
            K.at(i, j) = t;
            K.at(j, i) = t;
        }
    return K;
}

Derivation LieAlgebra::realize(const std::vector<Rat>& coords) const {
    if (backing_.empty()) throw std::logic_error("abstract Lie algebra has no realization");
    Derivation acc = Derivation::zero(backing_[0].ring());
    for (int i = 0; i < dim(); ++i)
        if (coords[i] != 0) acc = acc + backing_[i] * coords[i];
    return acc;
}

int default_lie_cap(const RingPtr& ring, const WeightSystem& W) {
    int total = 0;
    for (int j = 0; j < ring->nvars(); ++j)
        total += static_cast<int>(
            monomials_of_weight_at_most(ring, W, W.weights[j], /*exclude_constant=*/false).size());
    return total;
}

namespace {

// Coordinates of derivations over (slot, monomial) pairs, indexed on first
// encounter.
class DerivCoords {
  public:
    std::vector<Rat> coords(const Derivation& d) {
        std::vector<Rat> v;
        for (int slot = 0; slot < d.nvars(); ++slot)
            for (const auto& t : d.coeff(slot).terms()) {
                int idx = index_of(slot, t.mono);
                if (static_cast<size_t>(idx) >= v.size()) v.resize(idx + 1, Rat(0));
                v[idx] = t.coeff;
            }
        return v;
    }

  private:
    int index_of(int slot, const Monomial& m) {
        auto key = std::make_pair(slot, m.exponents());
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        int idx = static_cast<int>(map_.size());
        map_.emplace(std::move(key), idx);
        return idx;
    }
    std::map<std::pair<int, std::vector<int>>, int> map_;
};

}  // namespace

LieAlgebra generate_lie_algebra(const std::vector<Derivation>& gens, const WeightSystem& W,
                                int cap) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    const RingPtr ring = gens[0].ring();
    DerivCoords coords;
    SpanTracker<Rat> span;
    std::vector<Derivation> basis;
    std::vector<std::optional<Rat>> degrees;

    auto try_add = [&](const Derivation& d) -> bool {
        if (d.is_zero()) return false;
        ChiDegree e = d.chi_degree(W.weights);
        if (!e.is_value())
            throw PreconditionError("Lie generator is not chi-homogeneous: " + d.str());
        if (!span.insert(coords.coords(d))) return false;
        basis.push_back(d);
        degrees.push_back(e.value);
        if (static_cast<int>(basis.size()) > cap)
            throw CapExceeded(cap, static_cast<int>(basis.size()));
        return true;
    };

    for (const auto& g : gens) try_add(g);
    if (basis.empty()) throw std::invalid_argument("all generators are zero");

    // Bracket closure, breadth-first over pairs.
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < i; ++j) try_add(bracket(basis[j], basis[i]));

    // Structure constants.
    const int n = static_cast<int>(basis.size());
    std::vector<std::vector<std::vector<Rat>>> c(
        n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto expr = span.express(coords.coords(bracket(basis[i], basis[j])));
            if (!expr) throw std::logic_error("closure is not bracket-closed");
            expr->resize(n, Rat(0));
            c[i][j] = *expr;
        }

    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i + 1));
    return LieAlgebra(std::move(labels), std::move(c), std::move(degrees), std::move(basis));
}

AnnihilatorSplit split_annihilator(const LieAlgebra& L, const EulerDerivation& chi,
                                   const Poly& f) {
    if (!L.has_backing()) throw PreconditionError("annihilator split needs a derivation-backed algebra");
    const int n = L.dim();

    // chi must lie in the span.
    DerivCoords coords;
    SpanTracker<Rat> span;
    for (int i = 0; i < n; ++i) span.insert(coords.coords(L.backing()[i]));
    auto chi_coords = span.express(coords.coords(chi.chi));
    if (!chi_coords) throw PreconditionError("Euler derivation is not in the algebra");

    // Euler split of every basis element; cofactors must be constants.
    std::vector<Rat> a(n);
    int chi_pos = -1;
    for (int i = 0; i < n; ++i) {
        auto q = L.backing()[i].apply(f).divide_exact(f);
        if (!q) throw PreconditionError("algebra element is not logarithmic along f");
        if (!q->is_constant())
            throw PreconditionError("element has a nonconstant cofactor; degrees not <= 0");
        a[i] = q->constant_term() / chi.W.degree;
        if (L.backing()[i] == chi.chi) chi_pos = i;
    }
    if (chi_pos < 0) {
        // chi is a combination; use the basis element with the largest
        // Euler coefficient position for removal determinism.
        for (int i = 0; i < n && chi_pos < 0; ++i)
            if ((*chi_coords)[i] != 0 && a[i] != 0) chi_pos = i;
    }
    if (chi_pos < 0) throw PreconditionError("no basis element carries the Euler part");

    std::vector<Derivation> new_basis;
    std::vector<std::optional<Rat>> new_degrees;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (i == chi_pos) continue;
        Derivation d = L.backing()[i] - chi.chi * a[i];
        if (d.is_zero()) throw std::logic_error("annihilator split produced a zero element");
        if (!d.apply(f).is_zero()) throw std::logic_error("annihilator element does not kill f");
        new_basis.push_back(d);
        ChiDegree e = d.chi_degree(chi.W.weights);
        new_degrees.push_back(e.is_value() ? std::optional<Rat>(e.value) : std::nullopt);
        labels.push_back("a" + std::to_string(labels.size() + 1));
    }

    // Structure constants of the subalgebra.
    const int m = static_cast<int>(new_basis.size());
    DerivCoords c2;
    SpanTracker<Rat> span2;
    for (const auto& b : new_basis)
        if (!span2.insert(c2.coords(b))) throw std::logic_error("annihilator basis is dependent");
    std::vector<std::vector<std::vector<Rat>>> c(
        m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m, Rat(0))));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto expr = span2.express(c2.coords(bracket(new_basis[i], new_basis[j])));
            if (!expr) throw std::logic_error("annihilator is not bracket-closed");
            expr->resize(m, Rat(0));
            c[i][j] = *expr;
        }

    AnnihilatorSplit out;
    out.algebra = LieAlgebra(std::move(labels), std::move(c), new_degrees, std::move(new_basis));
    for (int i = 0; i < m; ++i)
        if (new_degrees[i] && *new_degrees[i] == 0) out.degree_zero.push_back(i);
    return out;
}

namespace {

// Echelonized basis of the span of the given coordinate vectors.
Subspace echelon_span(const std::vector<std::vector<Rat>>& vecs, int n) {
    Mat<Rat> m(static_cast<int>(vecs.size()), n);
    for (size_t i = 0; i < vecs.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
    std::vector<int> pivots = rref(m);
    Subspace out;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Rat> v(n);
        for (int j = 0; j < n; ++j) v[j] = m.at(static_cast<int>(r), j);
        out.push_back(std::move(v));
    }
    return out;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
    std::vector<std::vector<Rat>> vecs;
    for (const auto& x : A)
        for (const auto& y : B) vecs.push_back(L.bracket(x, y));
    return echelon_span(vecs, L.dim());
}

Subspace full_space(int n) {
    Subspace s;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = 1;
        s.push_back(std::move(v));
    }
    return s;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& L) {
    std::vector<Subspace> chain;
    chain.push_back(full_space(L.dim()));
    for (;;) {
        const Subspace& cur = chain.back();
        Subspace next = bracket_span(L, cur, cur);
        if (next.size() == cur.size()) break;
        chain.push_back(next);
        if (next.empty()) break;
    }
    return chain;
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().empty(); }

Subspace solvable_radical(const LieAlgebra& L) {
    const int n = L.dim();
    if (n == 0) return {};
    Subspace derived = bracket_span(L, full_space(n), full_space(n));
    if (derived.empty()) return full_space(n);  // abelian
    Mat<Rat> K = L.killing_form();
    // x in radical iff K(x, y) = 0 for all y in [L,L].
    Mat<Rat> sys(static_cast<int>(derived.size()), n);
    for (size_t r = 0; r < derived.size(); ++r) {
        std::vector<Rat> row = K.apply(derived[r]);  // K symmetric
        for (int j = 0; j < n; ++j) sys.at(static_cast<int>(r), j) = row[j];
    }
    return echelon_span(kernel(sys), n);
}

LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& basis,
                      const std::string& label_prefix) {
    const int m = static_cast<int>(basis.size());
    SpanTracker<Rat> span;
    for (const auto& v : basis)
        if (!span.insert(v)) throw std::invalid_argument("subalgebra basis is dependent");
    std::vector<std::vector<std::vector<Rat>>> c(
        m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m, Rat(0))));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto expr = span.express(L.bracket(basis[i], basis[j]));
            if (!expr) throw std::invalid_argument("subspace is not bracket-closed");
            expr->resize(m, Rat(0));
            c[i][j] = *expr;
        }
    std::vector<std::string> labels;
    std::vector<std::optional<Rat>> degrees;
    std::vector<Derivation> backing;
    for (int i = 0; i < m; ++i) {
        labels.push_back(label_prefix + std::to_string(i + 1));
        if (L.has_backing()) backing.push_back(L.realize(basis[i]));
    }
    return LieAlgebra(std::move(labels), std::move(c), degrees, std::move(backing));
}

LinearRep restrict_to_mprime(const LieAlgebra& L, const RingPtr& ring, const WeightSystem& W) {
    if (L.dim() > 0 && !L.has_backing())
        throw PreconditionError("restriction needs a derivation-backed algebra");
    LinearRep rep;
    rep.carrier_vars = W.min_weight_vars();
    const int k = rep.carrier_dim();
    std::map<int, int> local;  // ambient var -> carrier row
    for (int r = 0; r < k; ++r) local[rep.carrier_vars[r]] = r;

    for (int b = 0; b < L.dim(); ++b) {
        const Derivation& d = L.backing()[b];
        Mat<Rat> M(k, k);
        for (int cj = 0; cj < k; ++cj) {
            const Poly& a = d.coeff(rep.carrier_vars[cj]);
            for (const auto& t : a.terms()) {
                if (t.mono.total_degree() != 1)
                    throw PreconditionError(
                        "nonlinear coefficient on a lowest-weight slot (grading bookkeeping broken)");
                int var = -1;
                for (int v = 0; v < ring->nvars(); ++v)
                    if (t.mono[v] == 1) var = v;
                auto it = local.find(var);
                if (it == local.end())
                    throw PreconditionError(
                        "lowest-weight slot coefficient uses a higher-weight variable");
                M.at(it->second, cj) = t.coeff;
            }
        }
        rep.labels.push_back(L.labels()[b]);
        rep.mats.push_back(std::move(M));
    }

    // Representation property against the structure constants.
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            Mat<Rat> lhs = commutator(rep.mats[i], rep.mats[j]);
            Mat<Rat> rhs(k, k);
            for (int m = 0; m < L.dim(); ++m) {
                const Rat& cm = L.structure(i, j)[m];
                if (cm != 0) rhs = rhs + rep.mats[m].scaled(cm);
            }
            if (!(lhs == rhs)) throw std::logic_error("restriction violates the representation law");
        }
    return rep;
}

LieAlgebra rep_image_algebra(const LinearRep& R) {
    const int k = R.carrier_dim();
    SpanTracker<Rat> span;
    std::vector<Mat<Rat>> basis;
    std::vector<std::string> labels;
    auto flatten = [&](const Mat<Rat>& m) {
        std::vector<Rat> v(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) v[static_cast<size_t>(i) * k + j] = m.at(i, j);
        return v;
    };
    for (size_t i = 0; i < R.mats.size(); ++i) {
        if (R.mats[i].is_zero()) continue;
        if (span.insert(flatten(R.mats[i]))) {
            basis.push_back(R.mats[i]);
            labels.push_back(R.labels[i] + "'");
        }
    }
    const int m = static_cast<int>(basis.size());
    std::vector<std::vector<std::vector<Rat>>> c(
        m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m, Rat(0))));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            auto expr = span.express(flatten(commutator(basis[i], basis[j])));
            if (!expr) throw std::logic_error("matrix image is not bracket-closed");
            expr->resize(m, Rat(0));
            c[i][j] = *expr;
        }
    return LieAlgebra(std::move(labels), std::move(c));
}

}  // namespace lognc
