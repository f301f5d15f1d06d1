#pragma once

namespace g3m {

// Standard normal CDF via the complementary error function,
// Phi(x) = erfc(-x/sqrt(2))/2. Accurate to a few ulps over the full range.
double norm_cdf(double x);

// Standard normal density.
double norm_pdf(double x);

// Inverse standard normal CDF. Acklam's rational approximation polished
// with one Halley step against norm_cdf; accurate to ~1e-15 for
// p in (0,1). Throws std::domain_error outside (0,1).
double norm_inv(double p);

}  // namespace g3m
