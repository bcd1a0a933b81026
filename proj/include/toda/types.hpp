#pragma once

// Domain types shared by every module: spectral and position points,
// dominant cone vectors, signed permutations, and the two root data sets
// (the Toda perturbation set S and the BC-type positive system R+).

#include <cassert>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "toda/errors.hpp"
#include "toda/numerics.hpp"

namespace toda {

template <class R>
struct SpectralPoint {
    std::vector<Cplx<R>> entries;

    SpectralPoint() = default;
    explicit SpectralPoint(std::vector<Cplx<R>> e) : entries(std::move(e)) {
        if (entries.empty()) throw DomainError("SpectralPoint: dimension must be >= 1");
    }
    SpectralPoint(std::initializer_list<Cplx<R>> il) : entries(il) {
        if (entries.empty()) throw DomainError("SpectralPoint: dimension must be >= 1");
    }
    int dim() const { return int(entries.size()); }
    const Cplx<R>& operator[](int j) const { return entries[size_t(j)]; }
    Cplx<R>& operator[](int j) { return entries[size_t(j)]; }

    bool operator==(const SpectralPoint& o) const { return entries == o.entries; }
};

template <class R>
struct PositionPoint {
    std::vector<Cplx<R>> entries;

    PositionPoint() = default;
    explicit PositionPoint(std::vector<Cplx<R>> e) : entries(std::move(e)) {
        if (entries.empty()) throw DomainError("PositionPoint: dimension must be >= 1");
    }
    PositionPoint(std::initializer_list<Cplx<R>> il) : entries(il) {
        if (entries.empty()) throw DomainError("PositionPoint: dimension must be >= 1");
    }
    int dim() const { return int(entries.size()); }
    const Cplx<R>& operator[](int j) const { return entries[size_t(j)]; }

    // Open chamber x_1 > x_2 > ... > x_n > 0 with real entries.
    bool in_chamber(R margin = R(0)) const {
        for (const auto& e : entries)
            if (e.imag() != R(0)) return false;
        for (size_t j = 0; j + 1 < entries.size(); ++j)
            if (!(entries[j].real() - entries[j + 1].real() > margin)) return false;
        return entries.back().real() > margin;
    }
    void require_chamber(const char* who) const {
        if (!in_chamber())
            throw ChamberViolation(std::string(who) + ": x must satisfy x_1 > ... > x_n > 0 (real)");
    }
};

// rho = (n, n-1, ..., 1); level(nu) = <nu, rho>.
inline int cone_level(const std::vector<int>& nu) {
    const int n = int(nu.size());
    int lvl = 0;
    for (int i = 0; i < n; ++i) lvl += (n - i) * nu[size_t(i)];
    return lvl;
}

// nu >= 0  <=>  all leading partial sums are nonnegative.
inline bool is_dominant(const std::vector<int>& nu) {
    long s = 0;
    for (int v : nu) {
        s += v;
        if (s < 0) return false;
    }
    return true;
}

struct ConeVector {
    std::vector<int> entries;
    int level = 0;

    ConeVector() = default;
    explicit ConeVector(std::vector<int> e) : entries(std::move(e)) {
        if (!is_dominant(entries))
            throw DomainError("ConeVector: partial sums must be nonnegative");
        level = cone_level(entries);
    }
};

// <nu - 2 xi, nu> = <nu,nu> - 2 <xi,nu>
template <class R>
Cplx<R> recurrence_denominator(const std::vector<int>& nu, const SpectralPoint<R>& xi) {
    R nn = 0;
    Cplx<R> xn{};
    for (size_t i = 0; i < nu.size(); ++i) {
        nn += R(nu[i]) * R(nu[i]);
        xn += xi.entries[i] * R(nu[i]);
    }
    return Cplx<R>(nn, R(0)) - R(2) * xn;
}

template <class R>
Cplx<R> dot(const SpectralPoint<R>& xi, const std::vector<int>& nu) {
    Cplx<R> s{};
    for (size_t i = 0; i < nu.size(); ++i) s += xi.entries[i] * R(nu[i]);
    return s;
}

template <class R>
Cplx<R> dot(const PositionPoint<R>& x, const std::vector<int>& nu) {
    Cplx<R> s{};
    for (size_t i = 0; i < nu.size(); ++i) s += x.entries[i] * R(nu[i]);
    return s;
}

template <class R>
Cplx<R> dot(const SpectralPoint<R>& xi, const PositionPoint<R>& x) {
    Cplx<R> s{};
    for (size_t i = 0; i < xi.entries.size(); ++i) s += xi.entries[i] * x.entries[i];
    return s;
}

template <class R>
Cplx<R> dot(const SpectralPoint<R>& a, const SpectralPoint<R>& b) {
    Cplx<R> s{};
    for (size_t i = 0; i < a.entries.size(); ++i) s += a.entries[i] * b.entries[i];
    return s;
}

// w = (sigma, eps) acting by (w xi)_j = eps_j xi_{sigma(j)} (0-based).
struct SignedPermutation {
    std::vector<int> sigma;
    std::vector<int> eps;

    static SignedPermutation identity(int n) {
        SignedPermutation w;
        w.sigma.resize(size_t(n));
        std::iota(w.sigma.begin(), w.sigma.end(), 0);
        w.eps.assign(size_t(n), 1);
        return w;
    }
    bool is_identity() const {
        for (size_t j = 0; j < sigma.size(); ++j)
            if (sigma[j] != int(j) || eps[j] != 1) return false;
        return true;
    }
};

// J subset of {0..n-1} with signs; e_{eps J} = sum_{j in J} eps_j e_j.
struct SignedSubset {
    std::vector<int> indices;  // strictly increasing, 0-based
    std::vector<int> signs;    // +-1, parallel to indices

    std::vector<int> shift(int n) const {
        std::vector<int> s(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < indices.size(); ++i) s[size_t(indices[i])] = signs[i];
        return s;
    }
};

namespace detail {

template <class R>
void require_away_from_zero(const Cplx<R>& d, double eta, const char* what) {
    if (std::abs(d) <= R(eta))
        throw CoefficientPole(std::string(what) + " vanishes within eta");
}

inline std::vector<int> complement(const std::vector<int>& sub, int n) {
    std::vector<int> out;
    size_t p = 0;
    for (int j = 0; j < n; ++j) {
        if (p < sub.size() && sub[p] == j) {
            ++p;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

}  // namespace detail

template <class R>
SpectralPoint<R> apply(const SignedPermutation& w, const SpectralPoint<R>& xi) {
    SpectralPoint<R> out;
    out.entries.resize(xi.entries.size());
    for (size_t j = 0; j < xi.entries.size(); ++j)
        out.entries[j] = R(w.eps[j]) * xi.entries[size_t(w.sigma[j])];
    return out;
}

// compose(w, v) applies v first: apply(compose(w,v), xi) == apply(w, apply(v, xi)).
inline SignedPermutation compose(const SignedPermutation& w, const SignedPermutation& v) {
    const size_t n = w.sigma.size();
    SignedPermutation out;
    out.sigma.resize(n);
    out.eps.resize(n);
    for (size_t j = 0; j < n; ++j) {
        out.sigma[j] = v.sigma[size_t(w.sigma[j])];
        out.eps[j] = w.eps[j] * v.eps[size_t(w.sigma[j])];
    }
    return out;
}

// Perturbation vectors of the Toda Laplacian with Morse terms,
//   S = {e_1-e_2, ..., e_{n-1}-e_n, e_n, 2e_n},
// with weights a_{e_j-e_{j+1}} = 2, a_{e_n} = g, a_{2e_n} = 1/4,
// and the BC-type positive roots R+ = {e_j, 2e_j} u {e_j +- e_k, j<k}
// used by the hyperbolic side.
struct RootData {
    int n = 0;
    std::vector<std::vector<int>> S;
    std::vector<std::vector<int>> bc_positive;
    std::vector<int> bc_norm;  // <alpha,alpha> in {1,2,4}, parallel to bc_positive

    static RootData make(int n) {
        RootData rd;
        rd.n = n;
        for (int j = 0; j + 1 < n; ++j) {
            std::vector<int> a(size_t(n), 0);
            a[size_t(j)] = 1;
            a[size_t(j) + 1] = -1;
            rd.S.push_back(a);
        }
        std::vector<int> en(size_t(n), 0);
        en.back() = 1;
        rd.S.push_back(en);
        en.back() = 2;
        rd.S.push_back(en);

        for (int j = 0; j < n; ++j) {
            std::vector<int> a(size_t(n), 0);
            a[size_t(j)] = 1;
            rd.bc_positive.push_back(a);
            rd.bc_norm.push_back(1);
            a[size_t(j)] = 2;
            rd.bc_positive.push_back(a);
            rd.bc_norm.push_back(4);
        }
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                std::vector<int> a(size_t(n), 0);
                a[size_t(j)] = 1;
                a[size_t(k)] = -1;
                rd.bc_positive.push_back(a);
                rd.bc_norm.push_back(2);
                a[size_t(k)] = 1;
                rd.bc_positive.push_back(a);
                rd.bc_norm.push_back(2);
            }
        return rd;
    }

    template <class R>
    Cplx<R> toda_weight(size_t idx, const Cplx<R>& g) const {
        const size_t n_diff = size_t(n) - 1;
        if (idx < n_diff) return Cplx<R>(R(2), R(0));
        if (idx == n_diff) return g;
        return Cplx<R>(R(0.25), R(0));
    }

    // max_alpha |a_alpha|: the constant c of the growth estimates
    template <class R>
    R toda_weight_bound(const Cplx<R>& g) const {
        R c = R(0.25);
        if (n > 1) c = R(2);
        c = std::max(c, std::abs(g));
        return c;
    }
};

}  // namespace toda
