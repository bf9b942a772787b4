#ifndef BUNDLEFAM_ARITH_HPP
#define BUNDLEFAM_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bundlefam {

// Exact integer/rational helpers shared by every module. All certified
// quantities are computed in mpz/mpq; doubles appear only in slope fits
// and display strings.

mpz_class pow_z(const mpz_class& base, unsigned long exp);

// base^exp for rational base, exp >= 0.
mpq_class pow_q(const mpq_class& base, unsigned long exp);

mpz_class floor_q(const mpq_class& v);
mpz_class ceil_q(const mpq_class& v);

// Round-half-up of m^(num/den) for m >= 1, num >= 0, den >= 1, decided in
// exact integer arithmetic: n = trunc(m^(num/den)) via an integer root,
// then m^num is compared against (n + 1/2)^den by cross-multiplication.
mpz_class round_half_up_pow(const mpz_class& m, unsigned long num, unsigned long den);

// Parses "7", "-3/4" or a plain decimal like "4.5" into an exact rational.
// Throws std::invalid_argument on anything else (including irrational-only
// notations; every exponent and tolerance in this tool is rational).
mpq_class parse_rational(std::string_view text);

// Lowest-terms numerator/denominator of |q| as unsigned longs; throws if
// either does not fit. Used to turn a rational exponent into root/power
// indices.
std::pair<unsigned long, unsigned long> exponent_pair(const mpq_class& q);

// Natural log of a positive bignum/rational, accurate to double precision
// regardless of magnitude.
double log_z(const mpz_class& v);
double log_q(const mpq_class& v);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares of y against x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

std::string format_decimal(double v, int digits);

}  // namespace bundlefam

#endif
