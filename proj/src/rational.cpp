#include "holreg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace holreg {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    try {
        q = mpq_class(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
    Rational n = norm();
    return GaussRational(re / n, -im / n);
}

std::string gauss_to_string(const GaussRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string s;
    if (z.re != 0) s = rational_to_string(z.re) + (z.im > 0 ? "+" : "");
    return s + rational_to_string(z.im) + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
    return os << gauss_to_string(z);
}

}  // namespace holreg
