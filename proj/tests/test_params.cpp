#include <doctest.h>

#include "dunkl/error.hpp"
#include "dunkl/params.hpp"

#include <cmath>
#include <map>
#include <string>

using namespace dunkl;

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_parameters(0.3, 0.7));
  CHECK_NOTHROW(validate_parameters(0.0, 0.0));
  try {
    validate_parameters(-0.5, 0.1);
    FAIL("boundary value accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("mu1") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_parameters(0.1, -0.7), DomainError);
  CHECK_THROWS_AS(validate_parameters(0.1, std::nan("")), DomainError);
}

TEST_CASE("alpha") {
  CHECK(alpha(HalfInt::integer(0), validate_parameters(0.3, 0.7)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(alpha(HalfInt::from_twice(1), validate_parameters(0, 0)) == 1.0);
  CHECK(alpha(HalfInt::integer(2), validate_parameters(0.25, 0.25)) == 4.5);
}

TEST_CASE("sector and quantum number ranges") {
  CHECK_THROWS_AS(SectorLabel::make(2, 0), DomainError);
  CHECK(admissible_n(SectorLabel::make(0, 0), HalfInt::integer(0)));
  CHECK_FALSE(admissible_n(SectorLabel::make(0, 0), HalfInt::from_twice(1)));
  CHECK_FALSE(admissible_n(SectorLabel::make(1, 1), HalfInt::integer(0)));
  CHECK(admissible_n(SectorLabel::make(1, 1), HalfInt::integer(1)));
  CHECK(admissible_n(SectorLabel::make(1, 0), HalfInt::from_twice(1)));
  CHECK_FALSE(admissible_n(SectorLabel::make(0, 1), HalfInt::integer(1)));
  CHECK_THROWS_AS(QuantumNumbers::make(SectorLabel::make(1, 0), HalfInt::integer(0), 0), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::make(SectorLabel::make(0, 0), HalfInt::integer(0), -1), DomainError);
}

// brute force over sectors, n and k: level L = 2k + 2n
std::map<int, int> brute_force_levels(int max_level) {
  std::map<int, int> count;
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2)
      for (int twice_n = 0; twice_n <= max_level; ++twice_n) {
        const bool half_odd = twice_n % 2 == 1;
        // (0,0): n = 0, 1, ...; (1,1): n = 1, 2, ...; mixed: n = 1/2, 3/2, ...
        bool ok = (e1 == e2) ? !half_odd : half_odd;
        if (e1 == 1 && e2 == 1 && twice_n == 0)
          ok = false;
        if (!ok)
          continue;
        for (int k = 0; 2 * k + twice_n <= max_level; ++k)
          ++count[2 * k + twice_n];
      }
  return count;
}

TEST_CASE("enumeration against brute force") {
  const auto p = validate_parameters(0.3, 0.7);
  CHECK(enumerate_states(p, p.sum() + 1).size() == 1);
  const auto first = enumerate_states(p, p.sum() + 1).front();
  CHECK(first.sector.code() == 0);
  CHECK(first.n.twice == 0);
  CHECK(first.k == 0);

  const auto bf = brute_force_levels(8);
  // N = k + n = 2 and 3, i.e. L = 4 and 6
  CHECK(bf.at(4) == 5);
  CHECK(bf.at(6) == 7);
  std::map<int, int> lib;
  for (const auto& qn : enumerate_states(p, level_energy(8, p) + 1e-9))
    ++lib[qn.level()];
  CHECK(lib == bf);
  for (const auto& [level, n] : bf)
    CHECK(n == level + 1);

  // energy cap 6 at mu = (0.3, 0.7) keeps levels 0..4
  CHECK(enumerate_states(p, 6.0).size() == 15);

  // ordering: energy, then sector code, then n
  const auto all = enumerate_states(p, 7.0);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    const bool ordered = a.level() < b.level() ||
                         (a.level() == b.level() && (a.sector.code() < b.sector.code() ||
                                                     (a.sector.code() == b.sector.code() && a.n < b.n)));
    CHECK(ordered);
  }
}

TEST_CASE("extension spec grammar") {
  CHECK(ExtensionSpec::parse("I:1") == ExtensionSpec::make(ExtensionType::I, 1));
  CHECK(ExtensionSpec::parse("II:2").tau == ExtensionType::II);
  CHECK(ExtensionSpec::parse("III:2").str() == "III:2");
  CHECK_THROWS_AS(ExtensionSpec::parse("III:1"), AdmissibilityError);
  CHECK_THROWS_AS(ExtensionSpec::parse("I:0"), AdmissibilityError);
  CHECK_THROWS_AS(ExtensionSpec::parse("IV:1"), DomainError);
  CHECK_THROWS_AS(ExtensionSpec::parse("I"), DomainError);
  CHECK_THROWS_AS(ExtensionSpec::parse("I:x"), DomainError);
}
