#pragma once

#include <vector>

#include "qvol/quadric.hpp"

namespace qvol {

// Volume of the quadric domain by direct numerical integration of its
// integral representation: the zero-eigenvalue coordinates are integrated in
// closed form (they only contribute the pi^r / (n...(n-r+1)) factor), the
// innermost constrained coordinate is integrated analytically, and the
// remaining p+q-2 coordinates by iterated adaptive Gauss-Kronrod quadrature.
// Requires at least one positive eigenvalue and p+q-1+r <= 4 (dimension
// guard). `grid` is the initial subdivision of every quadrature axis.
// Relative accuracy target: 1e-6.
double volume_by_quadrature(const Spectrum& spectrum, unsigned grid = 8);

// Volume ratio collapsed to a single partial-fraction sum, evaluated in
// extended precision: sum over l of
//   x_l^{p+q-1} / [ prod_{k != l}(x_l - x_k) * prod_k (x_l + y_k) ].
// Equals the probability that sum x_j g_j > sum y_k h_k for independent
// unit-rate exponentials. Requires nonempty x with pairwise distinct entries.
double closed_form_fraction(const std::vector<double>& x, const std::vector<double>& y);
double closed_form_fraction(const Spectrum& spectrum);

}  // namespace qvol
