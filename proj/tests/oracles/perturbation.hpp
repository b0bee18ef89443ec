#pragma once

// Second-order degenerate (Löwdin) perturbation theory for the cosine potential
// W(x) = 2c·cos(2πx/a): w_{±1} = c couple plane waves n and n±1. The pair
// {n = 0, n = −1} is degenerate at t = 1/2; the rest of the basis is folded in
// at second order. Returns the splitting of the 2×2 effective Hamiltonian.

#include <cmath>
#include <numbers>

namespace wtest {

inline double lowdin_cosine_gap(double c, double a, double mass, double t = 0.5, int far = 60) {
    auto kinetic = [&](int n) {
        double k = 2.0 * std::numbers::pi * (n + t) / a;
        return k * k / (2.0 * mass);
    };
    auto coupling = [&](int n, int m) { return std::abs(n - m) == 1 ? c : 0.0; };
    const int p[2] = {0, -1};
    const double e_ref = 0.5 * (kinetic(0) + kinetic(-1));
    double h[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double v = coupling(p[i], p[j]) + (i == j ? kinetic(p[i]) : 0.0);
            for (int k = -far; k <= far; ++k) {
                if (k == 0 || k == -1) continue;
                v += coupling(p[i], k) * coupling(k, p[j]) / (e_ref - kinetic(k));
            }
            h[i][j] = v;
        }
    double d = h[0][0] - h[1][1];
    return std::sqrt(d * d + 4.0 * h[0][1] * h[1][0]);
}

}  // namespace wtest
