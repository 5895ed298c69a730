// perron_exact.hpp — exact comparison of Perron values of two components of
// T - v. The Perron value of a component is 1/lambda_min of its Dirichlet
// Laplacian submatrix, so the comparison reduces to ordering the smallest
// eigenvalues of two integer matrices, decided in exact arithmetic
// (integer characteristic polynomials, polynomial gcd, Bareiss inertia
// counts at rational thresholds).
#pragma once

#include <vector>

#include "treecenters/centers.hpp"
#include "treecenters/tree.hpp"

namespace treecenters {

enum class PerronCompare { Equal, FirstLarger, SecondLarger };

// rho1/rho2 are converged numeric Perron values used only to seed the
// isolating intervals; the verdict itself is exact.
PerronCompare compare_perron_exact(const Tree& t, int v, const std::vector<int>& comp1,
                                   double rho1, const std::vector<int>& comp2, double rho2);

// char poly of the principal Laplacian submatrix for `comp`, exact integer
// coefficients ascending (monic). Exposed for tests.
std::vector<BigCount> dirichlet_char_poly(const Tree& t, const std::vector<int>& comp);

}  // namespace treecenters
