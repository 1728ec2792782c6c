#pragma once

#include <string>
#include <vector>

namespace dgakit {

// γ(L) <= 2C max{C'^{2n/(2n-1)} L ρ(L), C' ρ(L) γ(L/ρ(L))}, ρ(L) = exp(κ √log L),
// with the quadratic bound γ(L) = 2C C'^{2n/(2n-1)} L² on the base interval
// L <= exp(κ²), where ρ(L) >= L. Double precision throughout.
struct RecurrenceOptions {
  double C = 2;
  double Cprime = 2;
  int n = 2;
  double kappa = 0;  // <= 0 selects √(2 ln(2 C C'))
  double Lmin = 1e4;
  double Lmax = 1e12;
  int samples_per_decade = 8;
  double tolerance = 1e-9;  // relative slack for the monotonicity check
};

struct RecurrenceRow {
  double L;
  double rho;
  double gamma;
  double ratio;  // γ(L) / (L ρ(L))
};

struct RecurrenceReport {
  double kappa;
  double crossing;  // exp(κ²), where ρ(L) = L
  std::vector<RecurrenceRow> rows;
  bool ratio_nonincreasing;
  double max_ratio;
};

double default_kappa(double C, double Cprime);
double rho(double L, double kappa);
// Throws InvalidArgument for C, C' < 1, n < 1 or an empty range.
RecurrenceReport weird_recurrence(const RecurrenceOptions& options);
// Three significant digits, e.g. "7.20e10".
std::string format_scientific(double x);

}  // namespace dgakit
