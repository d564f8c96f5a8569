#ifndef DUNKL_PARAMS_HPP
#define DUNKL_PARAMS_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

/// Deformation pair (mu1, mu2) of the Dunkl derivatives, mu_i > -1/2.
/// Only obtainable through validate_parameters().
class Parameters {
public:
  double mu1() const noexcept { return mu1_; }
  double mu2() const noexcept { return mu2_; }
  double sum() const noexcept { return mu1_ + mu2_; }

  friend Parameters validate_parameters(double mu1, double mu2);
  friend bool operator==(const Parameters&, const Parameters&) = default;

private:
  Parameters(double mu1, double mu2) : mu1_(mu1), mu2_(mu2) {}
  double mu1_;
  double mu2_;
};

/// Throws DomainError naming the offending parameter unless mu_i > -1/2.
Parameters validate_parameters(double mu1, double mu2);

/// A half-integer stored as twice its value, so index arithmetic stays exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }
  static constexpr HalfInt integer(int v) { return HalfInt{2 * v}; }
  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

/// Reflection parities: eps_i = 0 for R_i = +1, eps_i = 1 for R_i = -1.
struct SectorLabel {
  int eps1 = 0;
  int eps2 = 0;

  /// Throws DomainError unless both entries are 0 or 1.
  static SectorLabel make(int eps1, int eps2);
  static SectorLabel from_code(int code) { return make(code >> 1, code & 1); }

  int code() const { return 2 * eps1 + eps2; }
  int s1() const { return 1 - 2 * eps1; }
  int s2() const { return 1 - 2 * eps2; }
  std::string str() const;

  friend constexpr auto operator<=>(const SectorLabel&, const SectorLabel&) = default;
};

inline constexpr SectorLabel kAllSectors[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

/// True when n is an allowed angular index for the sector.
bool admissible_n(SectorLabel sector, HalfInt n);

/// Smallest allowed n in the sector (0, 1/2, 1/2, 1).
HalfInt min_n(SectorLabel sector);

struct QuantumNumbers {
  SectorLabel sector;
  HalfInt n;
  int k = 0;

  /// Throws DomainError when n or k are outside the sector's ranges.
  static QuantumNumbers make(SectorLabel sector, HalfInt n, int k);

  /// Degree of the Jacobi polynomial in the angular factor.
  int jacobi_degree() const { return (n.twice - sector.eps1 - sector.eps2) / 2; }
  /// Integer level index 2k + 2n; the energy is level + mu1 + mu2 + 1.
  int level() const { return 2 * k + n.twice; }

  friend constexpr auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

enum class ExtensionType { I, II, III };

std::string_view to_string(ExtensionType t);

struct ExtensionSpec {
  ExtensionType tau = ExtensionType::I;
  int m = 1;

  /// Throws AdmissibilityError for m < 1 or odd m with type III.
  static ExtensionSpec make(ExtensionType tau, int m);
  /// Parses "I:1", "II:2", "III:2".
  static ExtensionSpec parse(std::string_view text);
  std::string str() const;

  friend constexpr bool operator==(const ExtensionSpec&, const ExtensionSpec&) = default;
};

/// alpha = 2n + mu1 + mu2.
double alpha(HalfInt n, const Parameters& p);
inline double alpha(const QuantumNumbers& qn, const Parameters& p) {
  return alpha(qn.n, p);
}

/// Energy of integer level L = 2k + 2n, i.e. L + mu1 + mu2 + 1.
double level_energy(int level, const Parameters& p);

/// All states with energy <= e_cap sorted by (energy, sector code, n).
std::vector<QuantumNumbers> enumerate_states(const Parameters& p, double e_cap);

} // namespace dunkl

#endif
