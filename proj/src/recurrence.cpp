#include "dgakit/recurrence.hpp"

#include "dgakit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace dgakit {

double default_kappa(double C, double Cprime) { return std::sqrt(2 * std::log(2 * C * Cprime)); }

double rho(double L, double kappa) { return L <= 1 ? 1 : std::exp(kappa * std::sqrt(std::log(L))); }

namespace {

class Recurrence {
 public:
  Recurrence(double C, double Cprime, int n, double kappa)
      : C_(C), Cprime_(Cprime), kappa_(kappa), crossing_(std::exp(kappa * kappa)),
        power_(std::pow(Cprime, 2.0 * n / (2.0 * n - 1))) {}

  double gamma(double L) {
    if (L <= crossing_) return 2 * C_ * power_ * L * L;
    if (auto it = memo_.find(L); it != memo_.end()) return it->second;
    const double r = rho(L, kappa_);
    const double value = 2 * C_ * std::max(power_ * L * r, Cprime_ * r * gamma(L / r));
    memo_.emplace(L, value);
    return value;
  }

  double crossing() const { return crossing_; }

 private:
  double C_, Cprime_, kappa_, crossing_, power_;
  std::map<double, double> memo_;
};

}  // namespace

RecurrenceReport weird_recurrence(const RecurrenceOptions& o) {
  if (o.C < 1 || o.Cprime < 1) fail("InvalidArgument", "C and C' must be at least 1");
  if (o.n < 1) fail("InvalidArgument", "n must be positive");
  if (!(o.Lmin > 0) || !(o.Lmax >= o.Lmin)) fail("InvalidArgument", "empty range of L");
  if (o.samples_per_decade < 1) fail("InvalidArgument", "samples per decade must be positive");
  const double kappa = o.kappa > 0 ? o.kappa : default_kappa(o.C, o.Cprime);
  Recurrence rec(o.C, o.Cprime, o.n, kappa);
  RecurrenceReport report{kappa, rec.crossing(), {}, true, 0};
  const double lo = std::log10(o.Lmin);
  const double hi = std::log10(o.Lmax);
  const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) * o.samples_per_decade)));
  for (int i = 0; i <= steps; ++i) {
    const double L = std::pow(10.0, lo + (hi - lo) * i / steps);
    const double r = rho(L, kappa);
    const double g = rec.gamma(L);
    RecurrenceRow row{L, r, g, g / (L * r)};
    if (!report.rows.empty() && row.ratio > report.rows.back().ratio * (1 + o.tolerance))
      report.ratio_nonincreasing = false;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    report.rows.push_back(row);
  }
  return report;
}

std::string format_scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  std::string s(buf);
  auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mant = s.substr(0, e);
  int exp = std::stoi(s.substr(e + 1));
  return mant + "e" + std::to_string(exp);
}

}  // namespace dgakit
