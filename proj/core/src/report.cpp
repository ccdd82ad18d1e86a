#include "berezin/report.hpp"

#include <algorithm>
#include <cmath>

namespace berezin {

namespace {

// Floor on Monte-Carlo standard errors so that zero-variance estimates
// still produce a finite sigma distance (pure floating-point roundoff).
double effective_sigma(double std_error, double reference) {
  return std::max(std_error, 1e-12 * std::max(1.0, std::abs(reference)));
}

double rel_error_of(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

}  // namespace

CheckResult sigma_check(std::string name, double value, double reference, double std_error) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.sigma_distance = (value - reference) / effective_sigma(std_error, reference);
  c.rel_error = rel_error_of(value, reference);
  c.pass = std::abs(c.sigma_distance) <= 4.0;
  return c;
}

CheckResult bound_check(std::string name, double value, double reference, double std_error) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.sigma_distance = (value - reference) / effective_sigma(std_error, reference);
  c.rel_error = rel_error_of(value, reference);
  c.pass = c.sigma_distance <= 4.0;
  return c;
}

CheckResult threshold_check(std::string name, double value, double threshold) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.reference = threshold;
  c.sigma_distance = 0.0;
  c.rel_error = threshold != 0.0 ? value / threshold : value;
  c.pass = value <= threshold;
  return c;
}

}  // namespace berezin
