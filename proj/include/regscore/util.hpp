#pragma once

#include <span>
#include <string>

namespace regscore {

// Shortest decimal form that round-trips the double ("6.5", "311.46", "1e-08").
std::string format_double(double v);

// Same, but whole numbers keep one decimal ("166.0"), matching condition displays.
std::string format_bound(double v);

// Empirical quantile by linear interpolation on the order statistics:
// h = (n-1)p, q = x_(floor(h)) + (h - floor(h)) * (x_(floor(h)+1) - x_(floor(h))).
// `sorted` must be ascending and non-empty.
double quantile_linear(std::span<const double> sorted, double p);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// Upper-tail probability P(F > f) for an F(1, df2) distributed statistic.
double f_tail_prob(double f_stat, int df2);

}  // namespace regscore
