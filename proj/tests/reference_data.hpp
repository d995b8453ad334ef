#pragma once

// Frozen oracle values shared by the unit and acceptance suites.
//
// Shapiro-Wilk references come from scipy.stats.shapiro (a wrapper of the
// AS R94 routine). S_U constants come from a 40-digit mpmath evaluation of
// the series and transform chain.

#include <vector>

namespace spms::reference {

struct ShapiroWilkCase {
    const char* name;
    std::vector<double> data;
    double w;
    double p;
};

inline const std::vector<ShapiroWilkCase> shapiro_wilk_cases = {
    {"n8", {2.1, 3.4, 1.9, 5.6, 4.4, 3.3, 2.8, 7.0}, 0.9222921224, 0.4487372227},
    {"n10", {148, 154, 158, 160, 161, 162, 166, 170, 182, 195}, 0.9080491141, 0.2678575575},
    {"n11", {0.5, 1.2, 1.9, 2.0, 2.4, 2.9, 3.1, 3.3, 4.8, 6.0, 9.5}, 0.8740062213, 0.08725831324},
    {"n20",
     {3.379, 3.629, 0.438, 3.044, 5.266, 2.637, 0.607, 1.731, 0.446, 0.494,
      3.125, 1.068, 0.985, 0.944, 1.396, 1.17, 1.741, 1.974, 0.948, 1.199},
     0.8785953184, 0.01669426919},
    {"n50",
     {1.211,  -0.44,  -0.388, -1.389, -2.098, 0.634,  -1.165, 0.778,  1.848,  -0.115,
      -1.127, 0.394,  0.762,  -0.262, 0.017,  1.335,  1.265,  0.71,   -0.866, -0.054,
      0.603,  -0.212, -0.61,  -0.765, -0.632, -0.672, -0.451, 1.146,  -0.801, 0.887,
      0.418,  0.14,   -0.827, -0.457, 1.974,  0.099,  0.538,  0.663,  1.056,  -0.238,
      -0.61,  -0.06,  -0.261, 0.791,  0.19,   0.239,  0.145,  1.228,  -0.543, -0.478},
     0.9878237655, 0.8827673283},
    {"n100",
     {1.557, 0.948, 1.198, 0.695, 1.012, 1.241, 0.515, 0.706, 1.236, 3.078, 1.26,  0.971, 0.655, 1.216, 0.286,
      0.976, 0.848, 0.771, 3.19,  0.29,  0.989, 1.035, 1.263, 0.449, 0.792, 0.473, 0.938, 1.103, 1.086, 0.906,
      1.097, 1.093, 1.225, 1.013, 0.41,  0.665, 1.189, 0.634, 0.671, 1.058, 0.977, 1.563, 1.292, 0.804, 1.059,
      0.239, 0.671, 0.929, 0.303, 0.851, 1.134, 1.678, 1.223, 2.565, 2.147, 0.442, 0.893, 0.925, 1.047, 0.751,
      1.357, 1.451, 0.467, 1.604, 0.723, 1.696, 1.326, 0.937, 2.703, 1.561, 1.016, 1.133, 3.345, 2.031, 1.608,
      1.114, 1.325, 1.077, 0.466, 1.557, 1.23,  0.509, 0.725, 0.883, 1.177, 2.374, 1.009, 0.379, 1.384, 0.919,
      0.418, 0.32,  0.587, 1.208, 0.684, 1.35,  0.869, 1.096, 1.421, 1.336},
     0.8624584430, 3.521318582e-08},
};

// su_params(200) with every series term and alpha = sqrt(1/(W^2 - 1)).
inline constexpr double as_printed_200_w2 = 1.30164858791;
inline constexpr double as_printed_200_delta = 2.75433182694;
inline constexpr double as_printed_200_alpha = 1.82074594619;

}  // namespace spms::reference
