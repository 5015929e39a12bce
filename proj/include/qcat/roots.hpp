#pragma once

#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "qcat/numeric.hpp"

namespace qcat {

template <class T>
struct AberthResult {
    std::vector<Cx<T>> roots;
    int sweeps = 0;
    bool converged = false;
};

namespace detail {

template <class T>
void horner2(const std::vector<Cx<T>>& a, const Cx<T>& z, Cx<T>& p, Cx<T>& dp, T& bound) {
    p = a.back();
    dp = Cx<T>();
    T az = z.abs();
    bound = a.back().abs();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
        bound = bound * az + a[k].abs();
    }
}

// Coefficients of p(x + c), ascending.
template <class T>
std::vector<Cx<T>> taylor_shift(std::vector<Cx<T>> a, const Cx<T>& c) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k-- > i;) a[k] += c * a[k + 1];
    return a;
}

} // namespace detail

/// Simultaneous Aberth-Ehrlich iteration for all roots of
/// sum_k a[k] x^k (a.back() != 0), Gauss-Seidel updates. A root is frozen
/// once its backward error |p(z)| falls below ~n eps sum |a_k||z|^k.
template <class T>
AberthResult<T> aberth(const std::vector<Cx<T>>& a, int max_sweeps = 500,
                       const std::vector<Cx<T>>* start = nullptr) {
    using std::cos;
    using std::pow;
    using std::sin;
    AberthResult<T> out;
    const int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) {
        out.converged = true;
        return out;
    }
    if (n == 1) {
        out.roots.push_back(-a[0] / a[1]);
        out.converged = true;
        return out;
    }
    const T eps = std::numeric_limits<T>::epsilon();
    std::vector<Cx<T>>& z = out.roots;
    if (start && static_cast<int>(start->size()) == n) {
        z = *start;
    } else {
        Cx<T> center = -a[n - 1] / (a[n] * Cx<T>(T(n)));
        auto b = detail::taylor_shift(a, center);
        T r = 0;
        T lead = b[n].abs();
        for (int k = 0; k < n; ++k) {
            T m = b[k].abs() / lead;
            if (m > 0) r = std::max(r, T(pow(m, T(1) / T(n - k))));
        }
        if (r == 0) {
            z.assign(n, center);
            out.converged = true;
            return out;
        }
        const T two_pi = 2 * boost::math::constants::pi<T>();
        for (int k = 0; k < n; ++k) {
            T angle = two_pi * T(k) / T(n) + T(0.7);
            z.push_back(center + Cx<T>(r * cos(angle), r * sin(angle)));
        }
    }
    std::vector<bool> done(n, false);
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        out.sweeps = sweep;
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Cx<T> p, dp;
            T bound;
            detail::horner2(a, z[i], p, dp, bound);
            if (p.abs() <= T(4 * n) * eps * bound) {
                done[i] = true;
                continue;
            }
            all = false;
            Cx<T> sum;
            for (int j = 0; j < n; ++j)
                if (j != i) sum += Cx<T>(T(1)) / (z[i] - z[j]);
            Cx<T> ratio = p / dp;
            Cx<T> w = ratio / (Cx<T>(T(1)) - ratio * sum);
            z[i] -= w;
            if (w.abs() <= eps * z[i].abs()) done[i] = true;
        }
        if (all) {
            out.converged = true;
            return out;
        }
    }
    out.converged = std::all_of(done.begin(), done.end(), [](bool d) { return d; });
    return out;
}

} // namespace qcat
