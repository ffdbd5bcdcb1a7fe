#include "lognc/logder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lognc/factor.hpp"
#include "lognc/gcd.hpp"

namespace lognc {

namespace {

void check_inputs(const Poly& f, const WeightSystem& W, bool require_reduced) {
    if (f.is_zero() || f.is_constant())
        throw PreconditionError("defining polynomial must be nonzero and nonconstant");
    if (!W.valid()) throw PreconditionError("invalid weight system");
    if (W.nvars() != f.nvars()) throw PreconditionError("weight system arity mismatch");
    ChiDegree d = poly_chi_degree(f, W.weights);
    if (!d.is_value() || d.value != W.degree)
        throw PreconditionError("f is not chi-homogeneous of degree " + rat_to_string(W.degree));
    if (require_reduced && !is_squarefree(f))
        throw PreconditionError("f is not reduced (repeated factor found)");
}

std::vector<Rat> syzygy_shifts(const WeightSystem& W) {
    std::vector<Rat> shifts;
    for (const auto& w : W.weights) shifts.push_back(W.degree - w);
    shifts.push_back(W.degree);
    return shifts;
}

}  // namespace

LogDerivations log_derivations(const Poly& f, const WeightSystem& W) {
    check_inputs(f, W, /*require_reduced=*/true);
    const RingPtr ring = f.ring();
    const int n1 = ring->nvars();

    // Syzygies of (partials, f). Vanishing partials contribute free columns.
    std::vector<Poly> targets;
    std::vector<int> col_of_target;  // original column of each nonzero target
    std::vector<int> zero_cols;
    std::vector<Rat> shifts_all = syzygy_shifts(W);
    std::vector<Rat> shifts;
    for (int i = 0; i < n1; ++i) {
        Poly di = f.derivative(i);
        if (di.is_zero()) {
            zero_cols.push_back(i);
        } else {
            targets.push_back(di);
            col_of_target.push_back(i);
            shifts.push_back(shifts_all[i]);
        }
    }
    targets.push_back(f);
    col_of_target.push_back(n1);
    shifts.push_back(shifts_all[n1]);

    SyzygyModule syz = syzygy_module(targets, W, shifts);

    // Re-embed into n+2 columns and add the free unit vectors.
    std::vector<std::vector<Poly>> raw;
    for (const auto& v : syz.gens) {
        std::vector<Poly> full(n1 + 1, Poly::zero(ring));
        for (size_t k = 0; k < v.size(); ++k) full[col_of_target[k]] = v[k];
        raw.push_back(std::move(full));
    }
    for (int i : zero_cols) {
        std::vector<Poly> full(n1 + 1, Poly::zero(ring));
        full[i] = Poly::constant(ring, Rat(1));
        raw.push_back(std::move(full));
    }

    auto minimal = minimal_graded_generators(raw, W, shifts_all);

    LogDerivations out;
    out.ring = ring;
    out.W = W;
    for (const auto& v : minimal) {
        std::vector<Poly> coeffs(v.begin(), v.begin() + n1);
        Derivation delta(ring, std::move(coeffs));
        ChiDegree e = delta.chi_degree(W.weights);
        if (!e.is_value())
            throw std::logic_error("minimal generator is not a homogeneous derivation");
        out.basis.push_back(delta);
        out.degrees.push_back(e.value);
        out.cofactors.push_back(-v[n1]);
    }
    return out;
}

namespace {

// Syzygy vector of a derivation: (coefficients, -cofactor).
std::vector<Poly> as_vector(const Derivation& d, const Poly& cofactor) {
    std::vector<Poly> v = d.coefficients();
    v.push_back(-cofactor);
    return v;
}

}  // namespace

LogDerivations log_derivations_with_euler(const Poly& f, const WeightSystem& W) {
    LogDerivations gens = log_derivations(f, W);
    const RingPtr ring = gens.ring;
    EulerDerivation chi = euler_derivation(ring, W);
    Poly d_const = Poly::constant(ring, W.degree);

    for (int i = 0; i < gens.count(); ++i)
        if (gens.basis[i] == chi.chi) return gens;  // already present

    // Replace one degree-zero generator by chi, keeping a generating set.
    ModuleOrder ord(MonomialOrder(W.weights), syzygy_shifts(W));
    std::vector<Poly> chi_vec = as_vector(chi.chi, d_const);
    for (int i = 0; i < gens.count(); ++i) {
        if (gens.degrees[i] != 0) continue;
        std::vector<ModElem> others;
        for (int j = 0; j < gens.count(); ++j) {
            if (j == i)
                others.push_back(ModElem{chi_vec});
            else
                others.push_back(ModElem{as_vector(gens.basis[j], gens.cofactors[j])});
        }
        auto gb = groebner_module(others, ord);
        if (module_member(ModElem{as_vector(gens.basis[i], gens.cofactors[i])}, gb, ord)) {
            gens.basis[i] = chi.chi;
            gens.cofactors[i] = d_const;
            // Move chi to the front of its degree class for presentation.
            int first0 = 0;
            while (first0 < i && gens.degrees[first0] != 0) ++first0;
            if (first0 < i) {
                std::swap(gens.basis[first0], gens.basis[i]);
                std::swap(gens.cofactors[first0], gens.cofactors[i]);
                std::swap(gens.degrees[first0], gens.degrees[i]);
            }
            return gens;
        }
    }
    throw std::logic_error("Euler derivation could not be swapped into the minimal basis");
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, const RingPtr& ring) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly::constant(ring, Rat(1));
    std::map<unsigned, Poly> memo;
    // det of the submatrix with the given row mask and the last popcount(mask)
    // columns already consumed from the left.
    std::function<Poly(unsigned, int)> det = [&](unsigned rows, int col) -> Poly {
        if (col == n) return Poly::constant(ring, Rat(1));
        auto it = memo.find(rows);
        if (it != memo.end()) return it->second;
        Poly acc = Poly::zero(ring);
        int sign = 1;
        for (int r = 0; r < n; ++r) {
            if (!(rows & (1u << r))) continue;
            if (!m[r][col].is_zero()) {
                Poly sub = det(rows & ~(1u << r), col + 1);
                acc = acc + m[r][col] * sub * Rat(sign);
            }
            sign = -sign;
        }
        memo.emplace(rows, acc);
        return acc;
    };
    return det((1u << n) - 1, 0);
}

SaitoCheck saito_criterion(const std::vector<Derivation>& candidate, const Poly& f,
                           const WeightSystem& W) {
    check_inputs(f, W, /*require_reduced=*/false);
    const RingPtr ring = f.ring();
    const int n1 = ring->nvars();
    if (static_cast<int>(candidate.size()) != n1)
        throw PreconditionError("Saito criterion needs exactly n+1 derivations");
    for (const auto& d : candidate) {
        if (d.nvars() != n1) throw PreconditionError("derivation arity mismatch");
        if (!d.apply(f).divide_exact(f))
            throw NotLogarithmicError("derivation is not logarithmic along f: " + d.str());
    }
    std::vector<std::vector<Poly>> A(n1, std::vector<Poly>(n1, Poly::zero(ring)));
    for (int j = 0; j < n1; ++j)
        for (int i = 0; i < n1; ++i) A[i][j] = candidate[j].coeff(i);
    Poly det = poly_det(A, ring);
    auto q = det.divide_exact(f);
    if (q && q->is_constant() && !q->is_zero())
        return SaitoCheck{true, q->constant_term(), det};
    return SaitoCheck{false, Rat(0), det};
}

Freeness freeness_test(const Poly& f, const WeightSystem& W) {
    Freeness out;
    out.generators = log_derivations_with_euler(f, W);
    out.generator_count = out.generators.count();
    const int n1 = f.nvars();
    if (out.generator_count != n1) {
        out.free = false;
        return out;
    }
    // Sort basis by degree (stable), keeping chi first inside degree zero.
    std::vector<int> idx(n1);
    for (int i = 0; i < n1; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return out.generators.degrees[a] < out.generators.degrees[b];
    });
    SaitoMatrix S;
    S.ring = f.ring();
    S.W = W;
    for (int i : idx) {
        S.basis.push_back(out.generators.basis[i]);
        S.degrees.push_back(out.generators.degrees[i]);
        S.cofactors.push_back(out.generators.cofactors[i]);
    }
    SaitoCheck check = saito_criterion(S.basis, f, W);
    if (!check.is_basis)
        throw std::logic_error("minimal generators of rank n+1 failed the Saito criterion");
    S.determinant = check.determinant;
    S.unit = check.unit;

    // Entry degree invariant: nonzero lambda_{i,j} has degree d_i + w_j.
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            const Poly& lam = S.lambda(i, j);
            if (lam.is_zero()) continue;
            ChiDegree d = poly_chi_degree(lam, W.weights);
            if (!d.is_value() || d.value != S.degrees[i] + W.weights[j])
                throw std::logic_error("Saito matrix entry degree violation");
        }

    out.free = true;
    out.saito = std::move(S);
    return out;
}

std::pair<Rat, Derivation> split_euler(const Derivation& delta, const EulerDerivation& chi,
                                       const Poly& f) {
    auto q = delta.apply(f).divide_exact(f);
    if (!q) throw NotLogarithmicError("split_euler: derivation is not logarithmic");
    Rat a = q->constant_term() / chi.W.degree;
    Derivation rest = delta - chi.chi * a;
    ChiDegree e = delta.chi_degree(chi.W.weights);
    if (e.is_value() && e.value == 0) {
        if (!rest.apply(f).is_zero())
            throw std::logic_error("split_euler: degree-zero part does not annihilate f");
    }
    return {a, rest};
}

bool entries_in_maximal_ideal(const SaitoMatrix& S) {
    for (int i = 0; i < S.size(); ++i)
        for (int j = 0; j < S.size(); ++j)
            if (S.a(i, j).constant_term() != 0) return false;
    return true;
}

std::vector<std::vector<Poly>> submaximal_minors(const SaitoMatrix& S) {
    const int n1 = S.size();
    const RingPtr& ring = S.ring;
    std::vector<std::vector<Poly>> M(n1, std::vector<Poly>(n1, Poly::zero(ring)));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            std::vector<std::vector<Poly>> sub;
            for (int r = 0; r < n1; ++r) {
                if (r == i) continue;
                std::vector<Poly> row;
                for (int c = 0; c < n1; ++c) {
                    if (c == j) continue;
                    row.push_back(S.lambda(r, c));
                }
                sub.push_back(std::move(row));
            }
            M[i][j] = poly_det(sub, ring);
        }
    return M;
}

MinorsReport minors_vs_jacobian(const SaitoMatrix& S, const Poly& f) {
    MinorsReport rep;
    auto minors = submaximal_minors(S);
    for (auto& row : minors)
        for (auto& m : row)
            if (!m.is_zero()) rep.minor_gens.push_back(m);
    for (int i = 0; i < f.nvars(); ++i) {
        Poly d = f.derivative(i);
        if (!d.is_zero()) rep.jacobian_gens.push_back(d);
    }
    rep.jacobian_gens.push_back(f);
    if (rep.minor_gens.empty()) {
        rep.equal = false;  // zero ideal cannot match: f != 0 lies in J
        return rep;
    }
    rep.equal = ideal_equal(Ideal(S.ring, rep.minor_gens, S.W),
                            Ideal(S.ring, rep.jacobian_gens, S.W));
    return rep;
}

DegreeAudit degree_audit(const SaitoMatrix& S, const Poly& f) {
    DegreeAudit audit;
    audit.degrees = S.degrees;
    audit.all_nonpositive = std::all_of(S.degrees.begin(), S.degrees.end(),
                                        [](const Rat& d) { return d <= 0; });
    audit.entries_in_m = entries_in_maximal_ideal(S);

    auto minors = submaximal_minors(S);
    const Rat& d = S.W.degree;
    audit.minor_degrees_ok = true;
    bool any_zero = false;
    for (int i = 0; i < S.size(); ++i)
        for (int j = 0; j < S.size(); ++j) {
            MinorDegreeCheck c{i, j, d - S.degrees[i] - S.W.weights[j], false, true};
            if (minors[i][j].is_zero()) {
                any_zero = true;
            } else {
                c.nonzero = true;
                ChiDegree md = poly_chi_degree(minors[i][j], S.W.weights);
                c.matches = md.is_value() && md.value == c.expected;
                if (!c.matches) audit.minor_degrees_ok = false;
            }
            audit.minor_checks.push_back(std::move(c));
        }

    audit.f_irreducible_rational = is_irreducible(f);
    if (audit.f_irreducible_rational && audit.entries_in_m)
        audit.all_minors_nonzero = !any_zero;
    return audit;
}

SuspensionResult suspension_split(const Poly& f, const WeightSystem& W) {
    SuspensionResult res;
    res.ring = f.ring();
    res.f = f;
    res.W = W;

    for (;;) {
        LogDerivations gens = log_derivations(res.f, res.W);
        // A unit coefficient in slot i belongs to an element of degree -w_i;
        // homogeneity forces that coefficient to be a nonzero constant.
        int gen_idx = -1, slot = -1;
        for (int g = 0; g < gens.count() && gen_idx < 0; ++g)
            for (int i = 0; i < res.ring->nvars(); ++i)
                if (gens.basis[g].coeff(i).constant_term() != 0) {
                    gen_idx = g;
                    slot = i;
                    break;
                }
        if (gen_idx < 0) break;

        res.suspended = true;
        Derivation delta =
            gens.basis[gen_idx] * (Rat(1) / gens.basis[gen_idx].coeff(slot).constant_term());
        if (!delta.coeff(slot).is_constant())
            throw std::logic_error("unit slot coefficient is not constant");

        const RingPtr old_ring = res.ring;
        const int n1 = old_ring->nvars();

        // Flow-box coordinates: y_j with delta(y_j) = 0 and x_j-coefficient 1
        // (j != slot), y_slot = x_slot. Solved per weight level.
        std::vector<Poly> fwd_vals(n1, Poly::zero(old_ring));
        fwd_vals[slot] = Poly::variable(old_ring, slot);
        for (int j = 0; j < n1; ++j) {
            if (j == slot) continue;
            auto monos = monomials_of_weight(old_ring, res.W, res.W.weights[j]);
            // Unknown coefficients c_m for y = sum c_m m; rows: delta(y) = 0
            // over the monomials of weight w_j - w_slot, plus coeff_{x_j} = 1.
            std::vector<Poly> images;
            images.reserve(monos.size());
            for (const auto& m : monos)
                images.push_back(delta.apply(Poly::monomial(old_ring, m, Rat(1))));
            std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> row_of(
                mono_storage_less);
            for (const auto& p : images)
                for (const auto& t : p.terms())
                    row_of.emplace(t.mono, 0);
            int nrows = 0;
            for (auto& [m, r] : row_of) r = nrows++;
            std::vector<std::vector<Rat>> M(nrows + 1, std::vector<Rat>(monos.size() + 1, Rat(0)));
            for (size_t c = 0; c < monos.size(); ++c)
                for (const auto& t : images[c].terms()) M[row_of[t.mono]][c] = t.coeff;
            // Normalization row: coefficient of x_j equals 1.
            Monomial xj = Monomial::unit(n1, j);
            for (size_t c = 0; c < monos.size(); ++c)
                if (monos[c] == xj) M[nrows][c] = 1;
            M[nrows][monos.size()] = 1;

            // Solve M * c = rhs (last column) by elimination.
            size_t rows = M.size(), cols = monos.size();
            size_t r = 0;
            std::vector<int> pivot_col;
            for (size_t c = 0; c < cols && r < rows; ++c) {
                size_t sel = r;
                while (sel < rows && M[sel][c] == 0) ++sel;
                if (sel == rows) continue;
                std::swap(M[r], M[sel]);
                Rat inv = Rat(1) / M[r][c];
                for (size_t cc = c; cc <= cols; ++cc) M[r][cc] *= inv;
                for (size_t rr = 0; rr < rows; ++rr) {
                    if (rr == r || M[rr][c] == 0) continue;
                    Rat fct = M[rr][c];
                    for (size_t cc = c; cc <= cols; ++cc) M[rr][cc] -= fct * M[r][cc];
                }
                pivot_col.push_back(static_cast<int>(c));
                ++r;
            }
            for (size_t rr = r; rr < rows; ++rr)
                if (M[rr][cols] != 0)
                    throw PreconditionError(
                        "suspension straightening needs a non-homogeneous change");
            std::vector<Rat> sol(cols, Rat(0));
            for (size_t rr = 0; rr < pivot_col.size(); ++rr) sol[pivot_col[rr]] = M[rr][cols];
            Poly y = Poly::zero(old_ring);
            for (size_t c = 0; c < monos.size(); ++c)
                if (sol[c] != 0) y = y + Poly::monomial(old_ring, monos[c], sol[c]);
            if (!delta.apply(y).is_zero() || y.coeff_of(xj) != 1)
                throw std::logic_error("straightening solution verification failed");
            fwd_vals[j] = y;
        }

        CoordinateMap fwd(old_ring, old_ring, fwd_vals);  // y_j in terms of x
        CoordinateMap inv = fwd.inverse(res.W, res.W);    // x_j in terms of y
        Poly f_mid = inv.apply(res.f);
        if (f_mid.degree_in(slot) != 0)
            throw std::logic_error("straightened variable still occurs in f");

        // Drop the straightened variable.
        std::vector<std::string> names;
        std::vector<Rat> weights;
        for (int j = 0; j < n1; ++j) {
            if (j == slot) continue;
            names.push_back(old_ring->var_name(j));
            weights.push_back(res.W.weights[j]);
        }
        RingPtr small = make_ring(names);
        std::vector<Term> terms;
        for (const auto& t : f_mid.terms()) {
            std::vector<int> exps;
            for (int j = 0; j < n1; ++j)
                if (j != slot) exps.push_back(t.mono[j]);
            terms.push_back({Monomial(std::move(exps)), t.coeff});
        }
        Poly f_small = Poly::from_terms(small, std::move(terms));

        // Forward map restricted to the kept variables, for certificates.
        std::vector<Poly> kept_vals;
        for (int j = 0; j < n1; ++j)
            if (j != slot) kept_vals.push_back(fwd_vals[j]);
        res.steps.push_back(
            SuspensionStep{CoordinateMap(small, old_ring, kept_vals), slot,
                           old_ring->var_name(slot)});

        res.ring = small;
        res.f = f_small;
        WeightSystem W_small;
        W_small.weights = std::move(weights);
        W_small.degree = res.W.degree;
        res.W = W_small;

        if (small->nvars() == 0) break;
    }
    return res;
}

}  // namespace lognc
