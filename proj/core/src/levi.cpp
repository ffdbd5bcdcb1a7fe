#include <stdexcept>

#include "lognc/lie.hpp"

namespace lognc {

namespace {

Subspace echelon(const std::vector<std::vector<Rat>>& vecs, int n) {
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

}  // namespace

Subspace levi_subalgebra(const LieAlgebra& L) {
    const int n = L.dim();
    Subspace r = solvable_radical(L);
    if (static_cast<int>(r.size()) == n) return {};  // solvable: Levi part is 0
    if (r.empty()) {
        Subspace s;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> v(n, Rat(0));
            v[i] = 1;
            s.push_back(std::move(v));
        }
        return s;  // semisimple
    }

    // Derived chain of the radical: r = r_0 > r_1 > ... > r_m = 0.
    std::vector<Subspace> chain{r};
    for (;;) {
        const Subspace& cur = chain.back();
        std::vector<std::vector<Rat>> vecs;
        for (const auto& x : cur)
            for (const auto& y : cur) vecs.push_back(L.bracket(x, y));
        Subspace next = echelon(vecs, n);
        if (next.size() == cur.size()) throw std::logic_error("radical is not solvable");
        chain.push_back(next);
        if (chain.back().empty()) break;
    }

    // Complement basis x_1..x_s of r in L, from standard vectors.
    SpanTracker<Rat> picked;
    for (const auto& v : r) picked.insert(v);
    std::vector<std::vector<Rat>> x;
    for (int i = 0; i < n && static_cast<int>(r.size() + x.size()) < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        if (picked.insert(e)) x.push_back(std::move(e));
    }
    const int s = static_cast<int>(x.size());

    // Structure constants of L/r on the images of x.
    SpanTracker<Rat> mixed;  // r-basis then x's
    for (const auto& v : r) mixed.insert(v);
    for (const auto& v : x) mixed.insert(v);
    auto quotient_coords = [&](const std::vector<Rat>& v) {
        auto e = mixed.express(v);
        if (!e) throw std::logic_error("vector outside the algebra");
        return std::vector<Rat>(e->begin() + r.size(), e->end());
    };
    std::vector<std::vector<std::vector<Rat>>> cbar(
        s, std::vector<std::vector<Rat>>(s, std::vector<Rat>(s, Rat(0))));
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) cbar[a][b] = quotient_coords(L.bracket(x[a], x[b]));

    // Lift level by level: maintain [y_a, y_b] = sum cbar y_c (mod chain[t]).
    std::vector<std::vector<Rat>> y = x;
    for (size_t t = 0; t + 1 < chain.size(); ++t) {
        const Subspace& level = chain[t];
        const Subspace& next = chain[t + 1];
        const int q = static_cast<int>(level.size());
        if (q == 0) break;

        // Quotient projection chain[t] -> chain[t]/chain[t+1].
        SpanTracker<Rat> lower;
        for (const auto& v : next) lower.insert(v);
        std::vector<std::vector<Rat>> head;  // complement of next inside level
        for (const auto& v : level)
            if (lower.insert(v)) head.push_back(v);
        const int hq = static_cast<int>(head.size());
        SpanTracker<Rat> proj;  // next-basis then head
        for (const auto& v : next) proj.insert(v);
        for (const auto& v : head) proj.insert(v);
        auto head_coords = [&](const std::vector<Rat>& v) {
            auto e = proj.express(v);
            if (!e) throw std::logic_error("defect escapes the radical level");
            return std::vector<Rat>(e->begin() + next.size(), e->end());
        };

        // Unknowns: u_a = sum_beta z[a][beta] level[beta].
        const int unknowns = s * q;
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) {
                // defect d_ab = [y_a,y_b] - sum_c cbar y_c  (in chain[t])
                std::vector<Rat> d = L.bracket(y[a], y[b]);
                for (int c = 0; c < s; ++c)
                    if (cbar[a][b][c] != 0)
                        for (int i = 0; i < n; ++i) d[i] -= cbar[a][b][c] * y[c][i];
                std::vector<Rat> d_head = head_coords(d);
                // coefficient rows: pi([y_a, u_b] + [u_a, y_b] - sum_c cbar u_c)
                std::vector<std::vector<Rat>> coef(hq, std::vector<Rat>(unknowns, Rat(0)));
                for (int beta = 0; beta < q; ++beta) {
                    std::vector<Rat> term_b = L.bracket(y[a], level[beta]);  // z[b][beta]
                    std::vector<Rat> hb = head_coords(term_b);
                    for (int i = 0; i < hq; ++i) coef[i][b * q + beta] += hb[i];
                    std::vector<Rat> term_a = L.bracket(level[beta], y[b]);  // z[a][beta]
                    std::vector<Rat> ha = head_coords(term_a);
                    for (int i = 0; i < hq; ++i) coef[i][a * q + beta] += ha[i];
                    std::vector<Rat> hl = head_coords(level[beta]);
                    for (int c = 0; c < s; ++c) {
                        if (cbar[a][b][c] == 0) continue;
                        for (int i = 0; i < hq; ++i) coef[i][c * q + beta] -= cbar[a][b][c] * hl[i];
                    }
                }
                for (int i = 0; i < hq; ++i) {
                    rows.push_back(std::move(coef[i]));
                    rhs.push_back(-d_head[i]);
                }
            }

        Mat<Rat> A(static_cast<int>(rows.size()), unknowns);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < unknowns; ++j) A.at(static_cast<int>(i), j) = rows[i][j];
        auto z = solve(A, rhs);
        if (!z) throw std::logic_error("Levi lifting system is infeasible");
        for (int a = 0; a < s; ++a)
            for (int beta = 0; beta < q; ++beta) {
                const Rat& za = (*z)[a * q + beta];
                if (za == 0) continue;
                for (int i = 0; i < n; ++i) y[a][i] += za * level[beta][i];
            }
    }

    // Exactness: [y_a, y_b] = sum cbar y_c.
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            std::vector<Rat> d = L.bracket(y[a], y[b]);
            for (int c = 0; c < s; ++c)
                if (cbar[a][b][c] != 0)
                    for (int i = 0; i < n; ++i) d[i] -= cbar[a][b][c] * y[c][i];
            for (const auto& v : d)
                if (v != 0) throw std::logic_error("Levi complement is not a subalgebra");
        }
    return y;
}

}  // namespace lognc
