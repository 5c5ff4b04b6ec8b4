#pragma once

namespace hifse {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Standard normal quantile (Acklam rational approximation + one Newton
/// polish step).
double normal_quantile(double p);

/// Chi-squared quantile: the x with P(dof/2, x/2) = p. Wilson-Hilferty
/// starting point, Newton iterations, bisection safeguard.
double chi2_threshold(int dof, double p);

/// Kendall rank correlation between two equal-length sequences (tau-a).
double kendall_tau(const double* a, const double* b, int n);

}  // namespace hifse
