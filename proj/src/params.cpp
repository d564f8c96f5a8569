#include "dunkl/params.hpp"

#include "dunkl/error.hpp"

#include <cmath>
#include <string>

namespace dunkl {

Parameters validate_parameters(double mu1, double mu2) {
  if (!(mu1 > -0.5) || !std::isfinite(mu1))
    throw DomainError("mu1 must satisfy mu1 > -1/2 (got " + std::to_string(mu1) + ")");
  if (!(mu2 > -0.5) || !std::isfinite(mu2))
    throw DomainError("mu2 must satisfy mu2 > -1/2 (got " + std::to_string(mu2) + ")");
  return Parameters(mu1, mu2);
}

SectorLabel SectorLabel::make(int eps1, int eps2) {
  if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1))
    throw DomainError("sector parities must be 0 or 1");
  return SectorLabel{eps1, eps2};
}

std::string SectorLabel::str() const {
  return "(" + std::to_string(eps1) + "," + std::to_string(eps2) + ")";
}

HalfInt min_n(SectorLabel sector) {
  return HalfInt::from_twice(sector.eps1 + sector.eps2);
}

bool admissible_n(SectorLabel sector, HalfInt n) {
  const int parity = (sector.eps1 + sector.eps2) % 2;
  if (n.twice < 0 || (n.twice % 2) != parity)
    return false;
  return n.twice >= min_n(sector).twice;
}

QuantumNumbers QuantumNumbers::make(SectorLabel sector, HalfInt n, int k) {
  if (!admissible_n(sector, n))
    throw DomainError("n = " + std::to_string(n.value()) +
                      " is not allowed in sector " + sector.str());
  if (k < 0)
    throw DomainError("radial index k must be nonnegative");
  return QuantumNumbers{sector, n, k};
}

std::string_view to_string(ExtensionType t) {
  switch (t) {
  case ExtensionType::I: return "I";
  case ExtensionType::II: return "II";
  case ExtensionType::III: return "III";
  }
  return "?";
}

ExtensionSpec ExtensionSpec::make(ExtensionType tau, int m) {
  if (m < 1)
    throw AdmissibilityError("extension index m must be a positive integer");
  if (tau == ExtensionType::III && m % 2 != 0)
    throw AdmissibilityError("type III extension requires m even (got m = " +
                             std::to_string(m) + ")");
  return ExtensionSpec{tau, m};
}

ExtensionSpec ExtensionSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("extension spec must look like TYPE:m, e.g. I:1");
  const auto type = text.substr(0, colon);
  const auto digits = std::string(text.substr(colon + 1));
  ExtensionType tau;
  if (type == "I")
    tau = ExtensionType::I;
  else if (type == "II")
    tau = ExtensionType::II;
  else if (type == "III")
    tau = ExtensionType::III;
  else
    throw DomainError("unknown extension type '" + std::string(type) + "'");
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(digits, &used);
  } catch (const std::exception&) {
    throw DomainError("extension index must be an integer");
  }
  if (used != digits.size())
    throw DomainError("extension index must be an integer");
  return make(tau, m);
}

std::string ExtensionSpec::str() const {
  return std::string(to_string(tau)) + ":" + std::to_string(m);
}

double alpha(HalfInt n, const Parameters& p) {
  return static_cast<double>(n.twice) + p.mu1() + p.mu2();
}

double level_energy(int level, const Parameters& p) {
  return static_cast<double>(level) + (p.mu1() + p.mu2()) + 1.0;
}

std::vector<QuantumNumbers> enumerate_states(const Parameters& p, double e_cap) {
  std::vector<QuantumNumbers> out;
  for (int level = 0; level_energy(level, p) <= e_cap; ++level) {
    for (const auto sector : kAllSectors) {
      for (int n2 = min_n(sector).twice; n2 <= level; n2 += 2) {
        if ((level - n2) % 2 != 0)
          continue;
        out.push_back(QuantumNumbers{sector, HalfInt::from_twice(n2), (level - n2) / 2});
      }
    }
  }
  return out;
}

} // namespace dunkl
