#include "dunkl/orthopoly.hpp"

#include <cmath>
#include <string>

namespace dunkl {

double log_gamma(double x) {
  if (!(x > 0.0))
    throw DomainError("log_gamma requires a positive argument (got " + std::to_string(x) + ")");
  return std::lgamma(x);
}

double log_factorial(int k) {
  if (k < 0)
    throw DomainError("factorial of a negative integer");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

} // namespace dunkl
