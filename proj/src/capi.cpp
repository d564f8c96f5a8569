#include "dunkl/dunkl.h"

#include "dunkl/angular_ext.hpp"
#include "dunkl/basestates.hpp"
#include "dunkl/error.hpp"
#include "dunkl/radial_ext.hpp"
#include "dunkl/verify.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

struct dunkl_params {
  dunkl::Parameters p;
};

struct dunkl_spectrum {
  std::vector<dunkl_spectrum_row> rows;
  std::string tag;
  std::string note;
};

struct dunkl_state {
  dunkl::RadialForm radial;
  dunkl::AngularForm angular;
  double energy;
  double msq;
};

struct dunkl_reports {
  std::vector<dunkl::VerificationReport> reports;
  std::string json;
};

namespace {

thread_local std::string last_error;

dunkl_status fail(dunkl_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
dunkl_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return DUNKL_OK;
  } catch (const dunkl::Error& e) {
    return fail(static_cast<dunkl_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::exception& e) {
    return fail(DUNKL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DUNKL_ERR_INTERNAL, "unknown failure");
  }
}

std::optional<dunkl::ExtensionSpec> parse_ext(const char* ext) {
  if (ext == nullptr || *ext == '\0')
    return std::nullopt;
  return dunkl::ExtensionSpec::parse(ext);
}

void check_exclusive(const std::optional<dunkl::ExtensionSpec>& spec, int angular_ext) {
  if (spec && angular_ext)
    throw dunkl::DomainError("radial and angular extensions cannot be combined");
}

dunkl_spectrum_row to_row(dunkl::SectorLabel s, dunkl::HalfInt n, int k, double energy, const dunkl::Parameters& p) {
  return dunkl_spectrum_row{s.eps1, s.eps2, n.twice, k, dunkl::separation_constant(n, p), energy};
}

void extended_rows(dunkl_spectrum& out, const dunkl::ExtensionSpec& spec, const dunkl::Parameters& p, double emax) {
  using namespace dunkl;
  const int shift = spec.tau == ExtensionType::III ? 2 * spec.m : 0;
  // (level key, sector code, n, k) sorts like the base enumeration
  std::vector<std::tuple<int, int, int, int>> keys;
  std::vector<int> skipped;
  bool any = false;
  for (int t = 0; level_energy(t - shift, p) <= emax; ++t) {
    try {
      g_factor(spec, alpha(HalfInt::from_twice(t), p));
    } catch (const AdmissibilityError&) {
      skipped.push_back(t);
      continue;
    } catch (const SingularExtensionError&) {
      skipped.push_back(t);
      continue;
    }
    any = true;
    for (const SectorLabel s : kAllSectors) {
      if (!admissible_n(s, HalfInt::from_twice(t)))
        continue;
      for (int k = 0; level_energy(2 * k - 2 * spec.m + t, p) <= emax || k <= spec.m; ++k)
        if (admissible_k(spec, k) && level_energy(2 * k - 2 * spec.m + t, p) <= emax)
          keys.emplace_back(2 * k - 2 * spec.m + t, s.code(), t, k);
    }
  }
  if (!any && !skipped.empty())
    throw AdmissibilityError("no n with energy <= emax admits the seed " + spec.str() +
                             (spec.tau == ExtensionType::I ? "" : " (needs m < 2n + mu1 + mu2 + 1)"));
  std::sort(keys.begin(), keys.end());
  for (const auto& [key, code, t, k] : keys)
    out.rows.push_back(to_row(SectorLabel::from_code(code), HalfInt::from_twice(t), k, level_energy(key, p), p));
  if (!skipped.empty()) {
    out.note = "skipped n =";
    for (int t : skipped)
      out.note += " " + (t % 2 ? std::to_string(t / 2) + ".5" : std::to_string(t / 2));
    out.note += " (seed " + spec.str() + " inadmissible)";
  }
}

} // namespace

extern "C" {

DUNKL_API const char* dunkl_version(void) { return "0.1.0"; }

DUNKL_API const char* dunkl_last_error(void) { return last_error.c_str(); }

DUNKL_API const char* dunkl_status_name(dunkl_status s) {
  switch (s) {
  case DUNKL_OK: return "ok";
  case DUNKL_ERR_DOMAIN: return "domain error";
  case DUNKL_ERR_ADMISSIBILITY: return "admissibility error";
  case DUNKL_ERR_SINGULAR_EXTENSION: return "singular extension";
  case DUNKL_ERR_DEGENERATE_PARAMETERS: return "degenerate parameters";
  case DUNKL_ERR_NULLSPACE_DIMENSION: return "nullspace dimension error";
  case DUNKL_ERR_PARITY: return "parity error";
  case DUNKL_ERR_CONSTRUCTION: return "construction error";
  case DUNKL_ERR_STENCIL_DOMAIN: return "stencil domain error";
  case DUNKL_ERR_NULL_ARGUMENT: return "null argument";
  case DUNKL_ERR_OUT_OF_RANGE: return "index out of range";
  case DUNKL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

DUNKL_API dunkl_status dunkl_params_create(double mu1, double mu2, dunkl_params** out) {
  if (!out)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded([&] { *out = new dunkl_params{dunkl::validate_parameters(mu1, mu2)}; });
}

DUNKL_API dunkl_status dunkl_params_get(const dunkl_params* p, double* mu1, double* mu2) {
  if (!p || !mu1 || !mu2)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *mu1 = p->p.mu1();
  *mu2 = p->p.mu2();
  return DUNKL_OK;
}

DUNKL_API void dunkl_params_destroy(dunkl_params* p) { delete p; }

DUNKL_API dunkl_status dunkl_spectrum_create(const dunkl_params* p, double emax, const char* ext, int angular_ext,
                                             dunkl_spectrum** out) {
  if (!p || !out)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto spec = parse_ext(ext);
    check_exclusive(spec, angular_ext);
    auto s = std::make_unique<dunkl_spectrum>();
    if (spec) {
      s->tag = spec->str();
      extended_rows(*s, *spec, p->p, emax);
    } else {
      if (angular_ext)
        dunkl::check_angular_extension(p->p);
      s->tag = angular_ext ? "X1" : "base";
      for (const auto& qn : dunkl::enumerate_states(p->p, emax))
        s->rows.push_back(to_row(qn.sector, qn.n, qn.k, dunkl::level_energy(qn.level(), p->p), p->p));
    }
    *out = s.release();
  });
}

DUNKL_API size_t dunkl_spectrum_size(const dunkl_spectrum* s) { return s ? s->rows.size() : 0; }

DUNKL_API dunkl_status dunkl_spectrum_row_get(const dunkl_spectrum* s, size_t i, dunkl_spectrum_row* row) {
  if (!s || !row)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  if (i >= s->rows.size())
    return fail(DUNKL_ERR_OUT_OF_RANGE, "row index out of range");
  *row = s->rows[i];
  return DUNKL_OK;
}

DUNKL_API const char* dunkl_spectrum_tag(const dunkl_spectrum* s) { return s ? s->tag.c_str() : ""; }

DUNKL_API const char* dunkl_spectrum_note(const dunkl_spectrum* s) { return s ? s->note.c_str() : ""; }

DUNKL_API void dunkl_spectrum_destroy(dunkl_spectrum* s) { delete s; }

DUNKL_API dunkl_status dunkl_state_create(const dunkl_params* p, int eps1, int eps2, int n_twice, int k,
                                          const char* ext, int angular_ext, dunkl_state** out) {
  if (!p || !out)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    using namespace dunkl;
    const auto spec = parse_ext(ext);
    check_exclusive(spec, angular_ext);
    const SectorLabel sector = SectorLabel::make(eps1, eps2);
    const HalfInt n = HalfInt::from_twice(n_twice);
    if (spec) {
      if (!admissible_n(sector, n))
        throw DomainError("n = " + std::to_string(n.value()) + " is not allowed in sector " + sector.str());
      const auto rad = extended_radial_state(*spec, k, n, p->p);
      *out = new dunkl_state{rad.form, angular_state(sector, n, p->p), rad.energy, separation_constant(n, p->p)};
    } else if (angular_ext) {
      check_angular_extension(p->p);
      const auto qn = QuantumNumbers::make(sector, n, k);
      const auto ang = extended_angular_state(sector, n, p->p);
      *out = new dunkl_state{radial_state(k, n, p->p), ang.form, level_energy(qn.level(), p->p), ang.msq};
    } else {
      const BoundState st = assemble(QuantumNumbers::make(sector, n, k), p->p);
      *out = new dunkl_state{st.radial, st.angular, st.energy, st.msq};
    }
  });
}

DUNKL_API dunkl_status dunkl_state_energy(const dunkl_state* s, double* energy) {
  if (!s || !energy)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *energy = s->energy;
  return DUNKL_OK;
}

DUNKL_API dunkl_status dunkl_state_msq(const dunkl_state* s, double* msq) {
  if (!s || !msq)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *msq = s->msq;
  return DUNKL_OK;
}

DUNKL_API dunkl_status dunkl_state_eval(const dunkl_state* s, double x1, double x2, double* value) {
  if (!s || !value)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *value = dunkl::eval_product(s->radial, s->angular, x1, x2); });
}

DUNKL_API void dunkl_state_destroy(dunkl_state* s) { delete s; }

DUNKL_API dunkl_status dunkl_verify_run(const dunkl_params* p, const char* const* exts, size_t n_ext, int angular_ext,
                                        uint64_t seed, double tolerance, dunkl_reports** out) {
  if (!p || !out || (n_ext > 0 && !exts))
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    dunkl::SuiteConfig cfg;
    cfg.mu1 = p->p.mu1();
    cfg.mu2 = p->p.mu2();
    for (size_t i = 0; i < n_ext; ++i)
      cfg.extensions.push_back(dunkl::ExtensionSpec::parse(exts[i] ? exts[i] : ""));
    cfg.angular = angular_ext != 0;
    cfg.seed = seed;
    if (tolerance > 0.0)
      cfg.tolerance = tolerance;
    auto r = std::make_unique<dunkl_reports>();
    r->reports = dunkl::run_suite(cfg);
    r->json = dunkl::reports_to_json(r->reports);
    *out = r.release();
  });
}

DUNKL_API size_t dunkl_reports_size(const dunkl_reports* r) { return r ? r->reports.size() : 0; }

DUNKL_API dunkl_status dunkl_reports_get(const dunkl_reports* r, size_t i, const char** check, double* deviation,
                                         double* tolerance, int* pass) {
  if (!r)
    return fail(DUNKL_ERR_NULL_ARGUMENT, "null argument");
  if (i >= r->reports.size())
    return fail(DUNKL_ERR_OUT_OF_RANGE, "report index out of range");
  const auto& rep = r->reports[i];
  if (check)
    *check = rep.check.c_str();
  if (deviation)
    *deviation = rep.deviation;
  if (tolerance)
    *tolerance = rep.tolerance;
  if (pass)
    *pass = rep.pass ? 1 : 0;
  return DUNKL_OK;
}

DUNKL_API int dunkl_reports_all_pass(const dunkl_reports* r) {
  if (!r)
    return 0;
  return std::all_of(r->reports.begin(), r->reports.end(), [](const auto& x) { return x.pass; }) ? 1 : 0;
}

DUNKL_API const char* dunkl_reports_json(const dunkl_reports* r) { return r ? r->json.c_str() : ""; }

DUNKL_API void dunkl_reports_destroy(dunkl_reports* r) { delete r; }

} // extern "C"
