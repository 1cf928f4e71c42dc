#pragma once

#include <vector>

namespace doublet {

/// Dense polynomial with ascending coefficients: p[i] is the X^i coefficient.
using Poly = std::vector<double>;

double poly_eval(const Poly& p, double x);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, double s);
Poly poly_derivative(const Poly& p);

/// Number of distinct real roots of p, from the sign-variation difference of
/// its Sturm chain at -inf and +inf.  Intended for low-degree polynomials
/// with simple roots; coefficients below a relative tolerance are treated as
/// zero when trimming remainders.
int sturm_real_root_count(const Poly& p);

}  // namespace doublet
