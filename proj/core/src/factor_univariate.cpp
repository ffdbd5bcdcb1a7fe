#include <algorithm>
#include <random>
#include <stdexcept>

#include "zpoly_internal.hpp"

namespace lognc::internal {

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zscale(const ZPoly& f, const Int& c) {
    if (c == 0) return {};
    ZPoly r = f;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zderiv(const ZPoly& f) {
    ZPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    ztrim(r);
    return r;
}

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZPoly zprimitive(const ZPoly& f) {
    if (f.empty()) return f;
    Int c = zcontent(f);
    if (f.back() < 0) c = -c;
    ZPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    if (b.empty()) throw std::invalid_argument("zdivide by zero");
    quot.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    ZPoly rem = a;
    quot.assign(a.size() - b.size() + 1, Int(0));
    for (int k = zdeg(a) - zdeg(b); k >= 0; --k) {
        if (static_cast<size_t>(k + zdeg(b)) >= rem.size() || rem[k + zdeg(b)] == 0) continue;
        Int q = rem[k + zdeg(b)] / b.back();
        if (q * b.back() != rem[k + zdeg(b)]) return false;
        quot[k] = q;
        for (size_t i = 0; i < b.size(); ++i) rem[i + k] -= q * b[i];
    }
    ztrim(rem);
    if (!rem.empty()) return false;
    ztrim(quot);
    return true;
}

namespace {

// Primitive pseudo-remainder Euclid.
ZPoly zgcd_impl(ZPoly a, ZPoly b) {
    a = zprimitive(a);
    b = zprimitive(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        // Pseudo remainder of a by b.
        ZPoly r = a;
        while (!r.empty() && r.size() >= b.size()) {
            // r := lc(b) r - lc(r) t^k b
            Int lead = r.back();
            int k = zdeg(r) - zdeg(b);
            r = zscale(r, b.back());
            ZPoly sub_(b.size() + k, Int(0));
            for (size_t i = 0; i < b.size(); ++i) sub_[i + k] = b[i] * lead;
            r = zsub(r, sub_);
        }
        a = b;
        b = zprimitive(r);
    }
    return zprimitive(a);
}

// ---- arithmetic mod m -----------------------------------------------------

Int mod_reduce(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int mod_balanced(const Int& x, const Int& m) {
    Int r = mod_reduce(x, m);
    if (2 * r >= m) r -= m;
    return r;
}

ZPoly pmod(const ZPoly& f, const Int& m) {
    ZPoly r = f;
    for (auto& c : r) c = mod_reduce(c, m);
    ztrim(r);
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int g, s;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw std::logic_error("non-invertible element mod m");
    return mod_reduce(s, m);
}

ZPoly pmul(const ZPoly& a, const ZPoly& b, const Int& m) { return pmod(zmul(a, b), m); }

ZPoly padd(const ZPoly& a, const ZPoly& b, const Int& m) { return pmod(zadd(a, b), m); }

ZPoly psub(const ZPoly& a, const ZPoly& b, const Int& m) { return pmod(zsub(a, b), m); }

// Division with remainder by a polynomial with invertible lead, mod m.
void pdivmod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    q.clear();
    r = pmod(a, m);
    if (b.empty()) throw std::invalid_argument("pdivmod by zero");
    Int binv = inv_mod(b.back(), m);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Int(0));
    while (!r.empty() && r.size() >= b.size()) {
        int k = zdeg(r) - zdeg(b);
        Int c = mod_reduce(r.back() * binv, m);
        q[k] = c;
        ZPoly s(b.size() + k, Int(0));
        for (size_t i = 0; i < b.size(); ++i) s[i + k] = b[i] * c;
        r = psub(r, s, m);
    }
    ztrim(q);
}

ZPoly pmulmod(const ZPoly& a, const ZPoly& b, const ZPoly& f, const Int& m) {
    ZPoly q, r;
    pdivmod(pmul(a, b, m), f, m, q, r);
    return r;
}

ZPoly ppowmod(ZPoly base, Int e, const ZPoly& f, const Int& m) {
    ZPoly acc{Int(1)};
    ZPoly q, r;
    pdivmod(base, f, m, q, base);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = pmulmod(acc, base, f, m);
        base = pmulmod(base, base, f, m);
        e >>= 1;
    }
    return acc;
}

ZPoly pmonic(const ZPoly& f, const Int& m) {
    if (f.empty()) return f;
    Int inv = inv_mod(f.back(), m);
    ZPoly r = f;
    for (auto& c : r) c = mod_reduce(c * inv, m);
    return r;
}

ZPoly pgcd(ZPoly a, ZPoly b, const Int& p) {
    a = pmod(a, p);
    b = pmod(b, p);
    while (!b.empty()) {
        ZPoly q, r;
        pdivmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : pmonic(a, p);
}

// Extended gcd mod p: returns (g, s, t) with s a + t b = g, g monic.
void pxgcd(ZPoly a, ZPoly b, const Int& p, ZPoly& g, ZPoly& s, ZPoly& t) {
    ZPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
    a = pmod(a, p);
    b = pmod(b, p);
    while (!b.empty()) {
        ZPoly q, r;
        pdivmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
        ZPoly s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        ZPoly t2 = psub(t0, pmul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) throw std::logic_error("xgcd of zero polynomials");
    Int inv = inv_mod(a.back(), p);
    g = pmonic(a, p);
    s = pmod(zscale(s0, inv), p);
    t = pmod(zscale(t0, inv), p);
}

// ---- factorization mod p ---------------------------------------------------

// Cantor-Zassenhaus equal-degree splitting; deterministic via seeded PRNG.
void equal_degree(const ZPoly& f, int d, const Int& p, std::mt19937_64& rng,
                  std::vector<ZPoly>& out) {
    if (zdeg(f) == d) {
        out.push_back(pmonic(f, p));
        return;
    }
    // p odd. Random a; a^((p^d-1)/2) - 1 splits.
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    Int e = (pd - 1) / 2;
    for (;;) {
        ZPoly a(zdeg(f), Int(0));
        for (auto& c : a) c = Int(static_cast<unsigned long>(rng())) % p;
        ztrim(a);
        if (zdeg(a) < 1) continue;
        ZPoly b = ppowmod(a, e, f, p);
        b = psub(b, ZPoly{Int(1)}, p);
        ZPoly g = pgcd(f, b, p);
        if (g.empty() || zdeg(g) == 0 || zdeg(g) == zdeg(f)) continue;
        ZPoly q, r;
        pdivmod(f, g, p, q, r);
        equal_degree(g, d, p, rng, out);
        equal_degree(pmonic(q, p), d, p, rng, out);
        return;
    }
}

// Monic squarefree factorization mod p via distinct-degree + equal-degree.
std::vector<ZPoly> factor_mod_p(ZPoly f, const Int& p) {
    f = pmonic(pmod(f, p), p);
    std::vector<ZPoly> out;
    std::mt19937_64 rng(0x109bc57e2a5fULL ^ static_cast<unsigned long>(f.size()));
    ZPoly x{Int(0), Int(1)};
    ZPoly h = x;
    int d = 0;
    while (zdeg(f) > 0) {
        ++d;
        if (2 * d > zdeg(f)) {
            out.push_back(f);
            break;
        }
        h = ppowmod(h, p, f, p);
        ZPoly g = pgcd(psub(h, x, p), f, p);
        if (!g.empty() && zdeg(g) > 0) {
            equal_degree(g, d, p, rng, out);
            ZPoly q, r;
            pdivmod(f, g, p, q, r);
            f = pmonic(q, p);
            pdivmod(h, f, p, q, h);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Hensel lifting ---------------------------------------------------------

// Lift f = lc prod(g_i) from mod p to mod p^k (linear steps). Factors monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> g, const Int& p, int k) {
    const size_t r = g.size();
    const Int lc = f.back();
    // sigma_i: inverse of prod_{j != i} g_j modulo (g_i, p).
    std::vector<ZPoly> sigma(r);
    for (size_t i = 0; i < r; ++i) {
        ZPoly prod{Int(1)};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = pmulmod(prod, g[j], g[i], p);
        ZPoly gg, s, t;
        pxgcd(prod, g[i], p, gg, s, t);
        if (zdeg(gg) != 0) throw std::logic_error("hensel: factors not coprime");
        sigma[i] = s;
    }
    Int lcinv = inv_mod(lc, p);
    Int m = p;
    for (int step = 1; step < k; ++step) {
        // e = (f - lc prod G_i) / m
        ZPoly prod{Int(1)};
        for (const auto& gi : g) prod = zmul(prod, gi);
        ZPoly e = zsub(f, zscale(prod, lc));
        for (auto& c : e) {
            if (c % m != 0) throw std::logic_error("hensel: drift");
            c /= m;
        }
        e = pmod(e, p);
        for (size_t i = 0; i < r; ++i) {
            ZPoly q, delta;
            pdivmod(pmul(pmul(e, sigma[i], p), ZPoly{lcinv}, p), g[i], p, q, delta);
            // G_i += m * delta, balanced mod m*p.
            ZPoly upd = zadd(g[i], zscale(delta, m));
            for (auto& c : upd) c = mod_reduce(c, m * p);
            g[i] = upd;
        }
        m *= p;
    }
    // Balance representatives.
    for (auto& gi : g)
        for (auto& c : gi) c = mod_balanced(c, m);
    return g;
}

// ---- Zassenhaus --------------------------------------------------------------

Int isqrt_ceil(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f0) {
    ZPoly f = zprimitive(f0);
    if (zdeg(f) <= 1) return {f};

    // Prime with invertible lead and squarefree image.
    Int p = 0;
    for (long cand : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L,
                      59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L, 101L, 103L, 107L, 109L}) {
        Int q(cand);
        if (f.back() % q == 0) continue;
        ZPoly fp = pmod(f, q);
        if (zdeg(fp) != zdeg(f)) continue;
        ZPoly gp = pgcd(fp, pmod(zderiv(f), q), q);
        if (zdeg(gp) == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) throw std::runtime_error("no small prime with squarefree image found");

    std::vector<ZPoly> mod_factors = factor_mod_p(f, p);
    if (mod_factors.size() == 1) return {f};

    // Coefficient bound for any factor times the lead, times 2 for balance.
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int bound = (Int(1) << zdeg(f)) * isqrt_ceil(norm2) * abs(f.back()) * 2 + 1;
    int k = 1;
    Int pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(f, mod_factors, p, k);

    // Subset recombination, smallest subsets first.
    std::vector<ZPoly> result;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) live[i] = static_cast<int>(i);
    ZPoly rem = f;

    bool found = true;
    while (found && !live.empty()) {
        found = false;
        size_t n = live.size();
        for (size_t size = 1; size <= n / 2 && !found; ++size) {
            // Enumerate index subsets of the given size in lexicographic order.
            std::vector<size_t> idx(size);
            for (size_t i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                ZPoly cand{rem.back()};
                for (size_t i : idx) cand = pmod(zmul(cand, lifted[live[i]]), pk);
                for (auto& c : cand) c = mod_balanced(c, pk);
                cand = zprimitive(cand);
                ZPoly quot;
                if (!cand.empty() && zdeg(cand) >= 1 && zdivide_exact(rem, cand, quot)) {
                    result.push_back(cand);
                    rem = zprimitive(quot);
                    std::vector<int> next;
                    for (size_t i = 0, j = 0; i < live.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        next.push_back(live[i]);
                    }
                    live = std::move(next);
                    found = true;
                    break;
                }
                // next subset
                int pos = static_cast<int>(size) - 1;
                while (pos >= 0 && idx[pos] == n - size + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (zdeg(rem) >= 1) result.push_back(zprimitive(rem));
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return result;
}

}  // namespace

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
    if (a.empty()) return zprimitive(b);
    if (b.empty()) return zprimitive(a);
    return zgcd_impl(a, b);
}

std::vector<std::pair<ZPoly, int>> zfactor(const ZPoly& f0) {
    if (f0.empty()) throw std::invalid_argument("factoring the zero polynomial");
    ZPoly f = zprimitive(f0);
    std::vector<std::pair<ZPoly, int>> out;
    if (zdeg(f) == 0) return out;

    // Squarefree decomposition (Yun).
    std::vector<std::pair<ZPoly, int>> sqf;
    {
        ZPoly a = f;
        ZPoly g = zgcd(a, zderiv(a));
        if (zdeg(g) == 0) {
            sqf.push_back({a, 1});
        } else {
            int mult = 1;
            ZPoly c;
            if (!zdivide_exact(a, g, c)) throw std::logic_error("yun division");
            ZPoly w = g;
            // c: product of distinct factors; peel multiplicities.
            while (zdeg(c) > 0) {
                ZPoly y = zgcd(c, w);
                ZPoly part;
                if (!zdivide_exact(c, y, part)) throw std::logic_error("yun division");
                if (zdeg(part) > 0) sqf.push_back({zprimitive(part), mult});
                ZPoly wnext;
                if (!zdivide_exact(w, y, wnext)) throw std::logic_error("yun division");
                w = wnext;
                c = y;
                ++mult;
            }
        }
    }

    for (auto& [part, mult] : sqf)
        for (auto& irr : zassenhaus(part)) out.push_back({zprimitive(irr), mult});

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        for (size_t i = x.first.size(); i-- > 0;)
            if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
        return x.second < y.second;
    });
    return out;
}

std::vector<Rat> zroots_rational(const ZPoly& f) {
    std::vector<Rat> roots;
    for (const auto& [g, mult] : zfactor(f)) {
        if (zdeg(g) != 1) continue;
        Rat r(-g[0], g[1]);
        r.canonicalize();
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace lognc::internal
