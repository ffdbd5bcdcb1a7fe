#include "lognc/quadext.hpp"

#include <sstream>
#include <stdexcept>

namespace lognc {

std::string QuadMin::str() const {
    std::ostringstream os;
    os << "t^2";
    if (s != 0) os << " - (" << rat_to_string(s) << ")*t";
    if (p != 0) os << " - (" << rat_to_string(p) << ")";
    os << " = 0";
    return os.str();
}

QuadMin QuadExt::merge(const QuadExt& x, const QuadExt& y) {
    if (x.tagged_ && y.tagged_) {
        if (!(x.min_ == y.min_)) throw std::invalid_argument("mixing distinct quadratic extensions");
        return x.min_;
    }
    return x.tagged_ ? x.min_ : y.min_;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    QuadMin m = merge(*this, o);
    QuadExt r(a_ + o.a_, b_ + o.b_, m);
    r.tagged_ = tagged_ || o.tagged_;
    return r;
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    QuadMin m = merge(*this, o);
    QuadExt r(a_ - o.a_, b_ - o.b_, m);
    r.tagged_ = tagged_ || o.tagged_;
    return r;
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    QuadMin m = merge(*this, o);
    // (a + b t)(c + d t) = ac + bd p + (ad + bc + bd s) t.
    Rat bd = b_ * o.b_;
    QuadExt r(a_ * o.a_ + bd * m.p, a_ * o.b_ + b_ * o.a_ + bd * m.s, m);
    r.tagged_ = tagged_ || o.tagged_;
    return r;
}

QuadExt QuadExt::conj() const {
    QuadExt r(a_ + b_ * min_.s, -b_, min_);
    r.tagged_ = tagged_;
    return r;
}

Rat QuadExt::norm() const {
    // (a + b t)(a + b (s - t)) = a^2 + a b s - b^2 p.
    return a_ * a_ + a_ * b_ * min_.s - b_ * b_ * min_.p;
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.a_ == 0 && o.b_ == 0) throw std::domain_error("division by zero in quadratic extension");
    if (o.b_ == 0) {
        QuadExt r(a_ / o.a_, b_ / o.a_, merge(*this, o));
        r.tagged_ = tagged_ || o.tagged_;
        return r;
    }
    QuadMin m = merge(*this, o);
    QuadExt oc = o.conj();
    oc.min_ = m;
    oc.tagged_ = true;
    QuadExt num = (*this) * oc;
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("zero norm: minimal polynomial is reducible");
    QuadExt r(num.a_ / n, num.b_ / n, m);
    r.tagged_ = true;
    return r;
}

bool QuadExt::operator==(const QuadExt& o) const {
    if (tagged_ && o.tagged_ && !(min_ == o.min_)) return false;
    return a_ == o.a_ && b_ == o.b_;
}

std::string QuadExt::str() const {
    if (b_ == 0) return rat_to_string(a_);
    std::ostringstream os;
    if (a_ != 0) os << rat_to_string(a_) << " + ";
    os << "(" << rat_to_string(b_) << ")t";
    return os.str();
}

}  // namespace lognc
