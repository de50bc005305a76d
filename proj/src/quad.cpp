#include "hmv/quad.hpp"

namespace hmv {

void require_same_rad(const QuadElem& a, const QuadElem& b) {
    if (a.rad() != b.rad())
        throw discriminant_mismatch("radicands " + a.rad().get_str() + " vs " + b.rad().get_str());
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    require_same_rad(a, b);
    return QuadElem(a.rad(), a.u() + b.u(), a.v() + b.v());
}

QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    require_same_rad(a, b);
    return QuadElem(a.rad(), a.u() - b.u(), a.v() - b.v());
}

QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    require_same_rad(a, b);
    Rat m(a.rad());
    return QuadElem(a.rad(), a.u() * b.u() + a.v() * b.v() * m, a.u() * b.v() + a.v() * b.u());
}

QuadElem operator*(const Rat& c, const QuadElem& a) {
    return QuadElem(a.rad(), c * a.u(), c * a.v());
}

QuadElem inv(const QuadElem& a) {
    if (a.is_zero()) throw division_by_zero("quadratic element inverse of zero");
    Rat n = a.norm();
    if (n == 0) throw division_by_zero("norm-zero element has no inverse");
    return (1 / n) * a.conj();
}

QuadElem operator/(const QuadElem& a, const QuadElem& b) {
    require_same_rad(a, b);
    return a * inv(b);
}

std::string QuadElem::str() const {
    if (v_ == 0) return rat_str(u_);
    std::string root = "sqrt(" + m_.get_str() + ")";
    std::string vs;
    Rat av = abs(v_);
    if (av == 1)
        vs = root;
    else
        vs = rat_str(av) + "*" + root;
    if (u_ == 0) return (v_ < 0 ? "-" : "") + vs;
    return rat_str(u_) + (v_ < 0 ? " - " : " + ") + vs;
}

} // namespace hmv
