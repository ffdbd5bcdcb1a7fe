#include "lognc/rational.hpp"

namespace lognc {

Rat rat_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Int denominator_lcm(const std::vector<Rat>& qs) {
    Int l = 1;
    for (const auto& q : qs) {
        Int d = q.get_den();
        l = lcm(l, d);
    }
    return l;
}

Rat rational_content(const std::vector<Rat>& qs) {
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& q : qs) {
        if (q == 0) continue;
        Int n = q.get_num();
        num_gcd = gcd(num_gcd, n);
        Int d = q.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    if (num_gcd == 0) return Rat(0);
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::string wdegree_to_string(const WDegree& d) {
    return d ? rat_to_string(*d) : std::string("-inf");
}

}  // namespace lognc
