#include "lognc/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lognc {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j])
                throw std::invalid_argument("duplicate variable name: " + vars_[i]);
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<PolyRing>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->var_names() == b->var_names();
}

static void require_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("polynomials live in different rings");
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return mono_storage_less(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    // A cancellation in the middle can leave a zero before a different
    // monomial; sweep once more.
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
}

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
    Poly p;
    p.ring_ = std::move(ring);
    if (c != 0) p.terms_.push_back({Monomial(p.ring_->nvars()), c});
    return p;
}

Poly Poly::variable(RingPtr ring, int var) {
    Poly p;
    p.ring_ = std::move(ring);
    p.terms_.push_back({Monomial::unit(p.ring_->nvars(), var), Rat(1)});
    return p;
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rat& c) {
    Poly p;
    p.ring_ = std::move(ring);
    if (m.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p;
    p.ring_ = std::move(ring);
    for (const auto& t : terms)
        if (t.mono.nvars() != p.ring_->nvars())
            throw std::invalid_argument("monomial arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat Poly::constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
    return Rat(0);
}

Poly Poly::operator+(const Poly& o) const {
    require_ring(ring_, o.ring_);
    Poly r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rat c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].mono, c});
            ++i, ++j;
        } else if (mono_storage_less(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_ring(ring_, o.ring_);
    struct Cmp {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return mono_storage_less(a, b);
        }
    };
    std::map<Monomial, Rat, Cmp> acc;
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    Poly r;
    r.ring_ = ring_;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return Poly::zero(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::constant(ring_, Rat(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars()) throw std::out_of_range("variable index");
    Poly r;
    r.ring_ = ring_;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        std::vector<int> exps = t.mono.exponents();
        exps[var] -= 1;
        r.terms_.push_back({Monomial(std::move(exps)), t.coeff * e});
    }
    r.normalize();
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

int Poly::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

WDegree Poly::weighted_degree(std::span<const Rat> weights) const {
    if (static_cast<int>(weights.size()) != nvars())
        throw std::invalid_argument("weight vector arity mismatch");
    if (is_zero()) return std::nullopt;
    Rat best = terms_[0].mono.weighted_degree(weights);
    for (size_t i = 1; i < terms_.size(); ++i) {
        Rat d = terms_[i].mono.weighted_degree(weights);
        if (d > best) best = d;
    }
    return best;
}

const Term& Poly::leading_term(const MonomialOrder& ord) const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ord.less(terms_[best].mono, terms_[i].mono)) best = i;
    return terms_[best];
}

const Term& Poly::storage_leading_term() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return terms_.back();
}

Rat Poly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rat(0);
}

std::optional<Poly> Poly::divide_exact(const Poly& q) const {
    require_ring(ring_, q.ring_);
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly rem = *this;
    Poly quot = Poly::zero(ring_);
    const Term& qlt = q.storage_leading_term();
    // If q divides exactly, each leading term of the remainder is divisible
    // by lt(q); the first failure certifies non-divisibility.
    while (!rem.is_zero()) {
        const Term& rlt = rem.storage_leading_term();
        if (!qlt.mono.divides(rlt.mono)) return std::nullopt;
        Poly t = Poly::monomial(ring_, rlt.mono.divide_by(qlt.mono), rlt.coeff / qlt.coeff);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
    if (static_cast<int>(values.size()) != nvars())
        throw std::invalid_argument("substitution arity mismatch");
    if (values.empty()) throw std::invalid_argument("empty substitution");
    RingPtr target = values[0].ring();
    for (const auto& v : values) require_ring(target, v.ring());
    Poly acc = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly term = Poly::constant(target, t.coeff);
        for (int v = 0; v < nvars(); ++v) {
            int e = t.mono[v];
            if (e > 0) term = term * values[v].pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

Rat Poly::evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& t : terms_) {
        Rat v = t.coeff;
        for (int i = 0; i < nvars(); ++i) {
            int e = t.mono[i];
            for (int k = 0; k < e; ++k) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Rat Poly::content() const {
    std::vector<Rat> cs;
    cs.reserve(terms_.size());
    for (const auto& t : terms_) cs.push_back(t.coeff);
    Rat c = rational_content(cs);
    return c < 0 ? Rat(-c) : c;
}

std::pair<Rat, Poly> Poly::primitive_with_unit() const {
    if (is_zero()) return {Rat(1), *this};
    Rat c = content();
    if (storage_leading_term().coeff < 0) c = -c;
    return {c, *this * (Rat(1) / c)};
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool mono_one = it->mono.is_one();
        bool coeff_one = (c == 1);
        if (!coeff_one || mono_one) os << rat_to_string(c);
        if (!mono_one) {
            bool head = coeff_one;
            for (int v = 0; v < nvars(); ++v) {
                int e = it->mono[v];
                if (e == 0) continue;
                if (!head) os << "*";
                head = false;
                os << ring_->var_name(v);
                if (e > 1) os << "^" << e;
            }
        }
        first = false;
    }
    return os.str();
}

int Poly::compare(const Poly& a, const Poly& b) {
    // Compare term lists from the storage-leading end.
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (!(ia->mono == ib->mono))
            return mono_storage_less(ia->mono, ib->mono) ? -1 : 1;
        int c = cmp(ia->coeff, ib->coeff);
        if (c != 0) return c;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

}  // namespace lognc
