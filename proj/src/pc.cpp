#include "hmv/pc.hpp"

namespace hmv {

PCElem operator+(const PCElem& a, const PCElem& b) { return PCElem(a.x() + b.x(), a.q() + b.q()); }

PCElem operator-(const PCElem& a, const PCElem& b) { return PCElem(a.x() - b.x(), a.q() - b.q()); }

PCElem operator*(const PCElem& a, const PCElem& b) { return PCElem(a.x() * b.x(), a.q() * b.q()); }

PCElem operator*(const Rat& c, const PCElem& a) { return PCElem(c * a.x(), c * a.q()); }

Rat trp(const PCElem& a) { return a.x().trace() + a.q(); }

Rat trp_pairing(const PCElem& a, const PCElem& b) { return trp(a * b); }

std::array<Rat, 3> pc_coords(const PCElem& a) { return {a.x().u(), a.x().v(), a.q()}; }

PCElem pc_from_coords(const Int& rad, const std::array<Rat, 3>& c) {
    return PCElem(QuadElem(rad, c[0], c[1]), c[2]);
}

RatInterval embed_real(const QuadElem& a, bool positive_root, unsigned precision_bits) {
    if (a.rad() < 0) throw negative_discriminant("real embedding needs a positive radicand");
    if (a.v() == 0) return RatInterval::point(a.u());
    // enough sqrt bits that |v| * 2^-k meets the requested width
    unsigned extra = static_cast<unsigned>(mpz_sizeinbase(a.v().get_num().get_mpz_t(), 2));
    RatInterval root = sqrt_interval(a.rad(), precision_bits + extra + 2);
    Rat v = positive_root ? a.v() : -a.v();
    return RatInterval::point(a.u()) + scale(v, root);
}

RatInterval embed_real(const PCElem& a, RealEmbedding which, unsigned precision_bits) {
    switch (which) {
        case RealEmbedding::iota1:
            return embed_real(a.x(), true, precision_bits);
        case RealEmbedding::iota2:
            return embed_real(a.x(), false, precision_bits);
        case RealEmbedding::iota3:
        default:
            return RatInterval::point(a.q());
    }
}

} // namespace hmv
