#pragma once

#include <vector>

#include "hmv/boundary.hpp"
#include "hmv/rat.hpp"

// Independent brute-force oracles used only by the test suites.

namespace hmvtest {

using namespace hmv;

// linear inequality a.x >= c
struct FMIneq {
    std::vector<Rat> a;
    Rat c;
};

// Fourier-Motzkin feasibility over Q
inline bool fm_feasible(std::vector<FMIneq> sys, size_t nvars) {
    for (size_t var = 0; var < nvars; ++var) {
        size_t keep = nvars - var; // current variable count; eliminate index keep-1
        size_t el = keep - 1;
        std::vector<FMIneq> pos, neg, zero;
        for (auto& q : sys) {
            if (q.a[el] > 0)
                pos.push_back(q);
            else if (q.a[el] < 0)
                neg.push_back(q);
            else
                zero.push_back(q);
        }
        std::vector<FMIneq> next = zero;
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // p: a.x >= c with a[el] > 0  ->  x_el >= (c - rest)/a[el]
                // n: x_el <= ... ; combine to eliminate x_el
                FMIneq comb;
                comb.a.assign(el, Rat(0));
                for (size_t j = 0; j < el; ++j) comb.a[j] = n.a[j] * p.a[el] - p.a[j] * n.a[el];
                comb.c = n.c * p.a[el] - p.c * n.a[el];
                next.push_back(comb);
            }
        for (auto& q : next) q.a.resize(el);
        sys = std::move(next);
    }
    for (const auto& q : sys)
        if (q.c > 0) return false; // 0 >= c > 0 contradiction
    return true;
}

// admissibility by brute force: inadmissible iff for some k the system
// <Q_i, v> >= 0 (all i), <Q_k, v> >= 1 is feasible
inline bool fm_admissible(const std::vector<QVec3>& images) {
    for (size_t k = 0; k < images.size(); ++k) {
        std::vector<FMIneq> sys;
        for (size_t i = 0; i < images.size(); ++i) {
            FMIneq q;
            q.a = {images[i].v[0], images[i].v[1], images[i].v[2]};
            q.c = (i == k) ? Rat(1) : Rat(0);
            sys.push_back(q);
        }
        if (fm_feasible(sys, 3)) return false;
    }
    return true;
}

// |SL2(Z/dZ)| by enumeration
inline Int brute_sl2_count(long d) {
    long count = 0;
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            for (long c = 0; c < d; ++c)
                for (long e = 0; e < d; ++e)
                    if (((a * e - b * c) % d + d) % d == 1 % d) ++count;
    return Int(count);
}

// number of roots of x^2 + D x + (D^2-D)/4 modulo p: 0 inert, 1 ramified, 2 split
inline int root_count_oracle(const Int& D, const Int& p) {
    Int n0 = exact_div(D * D - D, 4);
    int roots = 0;
    for (Int c = 0; c < p; ++c)
        if (mod_floor(c * c + c * D + n0, p) == 0) ++roots;
    return roots;
}

} // namespace hmvtest
