#include "bundlefam/arith.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bundlefam {

mpz_class pow_z(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

mpq_class pow_q(const mpq_class& base, unsigned long exp) {
  mpq_class out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  out.canonicalize();
  return out;
}

mpz_class floor_q(const mpq_class& v) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

mpz_class ceil_q(const mpq_class& v) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

mpz_class round_half_up_pow(const mpz_class& m, unsigned long num, unsigned long den) {
  if (m < 1) throw std::invalid_argument("round_half_up_pow: base must be >= 1");
  if (den == 0) throw std::invalid_argument("round_half_up_pow: zero denominator");
  const mpz_class mp = pow_z(m, num);
  mpz_class n;
  mpz_root(n.get_mpz_t(), mp.get_mpz_t(), den);  // trunc(m^(num/den))
  // half-up: m^(num/den) >= n + 1/2  <=>  2^den * m^num >= (2n+1)^den
  mpz_class lhs = mp << den;
  mpz_class rhs = pow_z(2 * n + 1, den);
  if (lhs >= rhs) n += 1;
  return n;
}

mpq_class parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const std::string num(text.substr(0, slash));
    const std::string den(text.substr(slash + 1));
    mpz_class n, d;
    if (num.empty() || den.empty() || mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0 || d == 0) {
      fail();
    }
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() && digits.empty()) fail();
    for (char ch : frac) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    }
    const bool negative = !digits.empty() && digits[0] == '-';
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") fail();
    mpz_class n;
    if (mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0) fail();
    mpz_class d = pow_z(10, static_cast<unsigned long>(frac.size()));
    (void)negative;
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  mpz_class n;
  if (mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), 10) != 0) fail();
  return {n};
}

std::pair<unsigned long, unsigned long> exponent_pair(const mpq_class& q) {
  mpq_class a = abs(q);
  if (!a.get_num().fits_ulong_p() || !a.get_den().fits_ulong_p()) {
    throw std::invalid_argument("exponent too large: " + a.get_str());
  }
  return {a.get_num().get_ui(), a.get_den().get_ui()};
}

double log_z(const mpz_class& v) {
  if (v <= 0) throw std::domain_error("log_z: nonpositive argument");
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

double log_q(const mpq_class& v) {
  if (v <= 0) throw std::domain_error("log_q: nonpositive argument");
  return log_z(v.get_num()) - log_z(v.get_den());
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need >= 2 paired points");
  }
  const double n = static_cast<double>(x.size());
  double xbar = 0.0, ybar = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    xbar += x[i];
    ybar += y[i];
  }
  xbar /= n;
  ybar /= n;
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xbar) * (x[i] - xbar);
    sxy += (x[i] - xbar) * (y[i] - ybar);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  return fit;
}

std::string format_decimal(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace bundlefam
