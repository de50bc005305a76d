#pragma once

#include <random>

#include "hmv/pc.hpp"
#include "hmv/quad.hpp"
#include "hmv/zmat.hpp"

namespace hmvtest {

using namespace hmv;

inline int rnd(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

inline Rat rnd_rat(std::mt19937& rng, int height) {
    int num = rnd(rng, -height, height);
    int den = rnd(rng, 1, height);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline QuadElem rnd_quad(std::mt19937& rng, const Int& rad, int height) {
    return QuadElem(rad, rnd_rat(rng, height), rnd_rat(rng, height));
}

inline QuadElem rnd_quad_nonzero(std::mt19937& rng, const Int& rad, int height) {
    while (true) {
        QuadElem q = rnd_quad(rng, rad, height);
        if (!q.is_zero()) return q;
    }
}

inline PCElem rnd_pc(std::mt19937& rng, const Int& rad, int height) {
    return PCElem(rnd_quad(rng, rad, height), rnd_rat(rng, height));
}

inline ZMat rnd_zmat(std::mt19937& rng, long r, long c, int height) {
    ZMat m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = rnd(rng, -height, height);
    return m;
}

// random unimodular matrix as a short product of elementary matrices
inline ZMat rnd_unimodular(std::mt19937& rng, long n, int steps) {
    ZMat u = ZMat::identity(n);
    for (int s = 0; s < steps; ++s) {
        long i = rnd(rng, 0, static_cast<int>(n - 1));
        long j = rnd(rng, 0, static_cast<int>(n - 1));
        if (i == j) continue;
        Int c = rnd(rng, -2, 2);
        for (long k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
    return u;
}

// random nondegenerate alternating integer Gram matrix
inline ZMat rnd_alternating(std::mt19937& rng, long n, int height) {
    while (true) {
        ZMat g(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) {
                g(i, j) = rnd(rng, -height, height);
                g(j, i) = -g(i, j);
            }
        if (det(g) != 0) return g;
    }
}

} // namespace hmvtest
