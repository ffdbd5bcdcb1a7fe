#ifndef LOGNC_QUADEXT_HPP
#define LOGNC_QUADEXT_HPP

#include <string>

#include "lognc/rational.hpp"

namespace lognc {

// Defining relation t^2 = s t + p of a quadratic extension Q(t); the minimal
// polynomial x^2 - s x - p must be irreducible over Q (caller's duty).
struct QuadMin {
    Rat s, p;

    bool operator==(const QuadMin& o) const { return s == o.s && p == o.p; }
    // Minimal polynomial coefficients (c0, c1, c2) of x^2 - s x - p.
    std::string str() const;
    Rat discriminant() const { return s * s + 4 * p; }
};

// Element a + b t of Q(t). Rational constants carry no field tag and adopt
// the partner's on first mixed operation; mixing two different extensions
// throws.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0) {}
    QuadExt(long v) : a_(v), b_(0) {}
    QuadExt(Rat v) : a_(std::move(v)), b_(0) {}
    QuadExt(Rat a, Rat b, const QuadMin& m) : a_(std::move(a)), b_(std::move(b)), min_(m), tagged_(true) {}

    static QuadExt generator(const QuadMin& m) { return QuadExt(Rat(0), Rat(1), m); }
    static QuadExt embed(const Rat& v, const QuadMin& m) { return QuadExt(v, Rat(0), m); }

    const Rat& re() const { return a_; }
    const Rat& im() const { return b_; }
    bool is_rational() const { return b_ == 0; }
    bool tagged() const { return tagged_; }
    const QuadMin& field() const { return min_; }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    QuadExt conj() const;  // t -> s - t
    Rat norm() const;      // x * conj(x), rational

    std::string str() const;

  private:
    Rat a_, b_;
    QuadMin min_{Rat(0), Rat(0)};
    bool tagged_ = false;

    static QuadMin merge(const QuadExt& x, const QuadExt& y);
};

}  // namespace lognc

#endif
