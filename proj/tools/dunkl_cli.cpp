// dunkl: spectra, wavefunction samples and verification reports for the
// (rationally extended) Dunkl oscillator in the plane. Talks to the library
// only through the C API.
#include "dunkl/dunkl.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(dunkl_status s) {
  switch (s) {
  case DUNKL_ERR_DOMAIN:
  case DUNKL_ERR_NULL_ARGUMENT:
  case DUNKL_ERR_OUT_OF_RANGE:
    return 2;
  case DUNKL_ERR_ADMISSIBILITY:
  case DUNKL_ERR_SINGULAR_EXTENSION:
  case DUNKL_ERR_DEGENERATE_PARAMETERS:
    return 3;
  default:
    return 4;
  }
}

void check(dunkl_status s) {
  if (s != DUNKL_OK)
    throw Failure{exit_code_for(s), std::string(dunkl_status_name(s)) + ": " + dunkl_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ParamsPtr = std::unique_ptr<dunkl_params, Deleter<dunkl_params, dunkl_params_destroy>>;
using SpectrumPtr = std::unique_ptr<dunkl_spectrum, Deleter<dunkl_spectrum, dunkl_spectrum_destroy>>;
using StatePtr = std::unique_ptr<dunkl_state, Deleter<dunkl_state, dunkl_state_destroy>>;
using ReportsPtr = std::unique_ptr<dunkl_reports, Deleter<dunkl_reports, dunkl_reports_destroy>>;

// shortest round-trip form, '.' decimal regardless of locale
std::string num(double v) {
  if (std::isnan(v))
    return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

std::string half(int twice) { return num(0.5 * twice); }

struct Common {
  double mu1 = 0.3;
  double mu2 = 0.7;
  std::string ext;
  bool angular = false;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c, bool with_ext = true) {
  cmd->add_option("--mu1", c.mu1, "deformation parameter mu1 (> -1/2)")->capture_default_str();
  cmd->add_option("--mu2", c.mu2, "deformation parameter mu2 (> -1/2)")->capture_default_str();
  if (with_ext) {
    cmd->add_option("--ext", c.ext, "radial extension TYPE:m, TYPE in {I, II, III}");
    cmd->add_flag("--angular-ext", c.angular, "X1-Jacobi extension of the angular equation");
  }
  cmd->add_option("--out", c.out, "output file (default: stdout)");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Failure{2, "cannot open " + path + " for writing"};
  f << text;
  if (!f)
    throw Failure{2, "write to " + path + " failed"};
}

ParamsPtr make_params(const Common& c) {
  dunkl_params* p = nullptr;
  check(dunkl_params_create(c.mu1, c.mu2, &p));
  return ParamsPtr(p);
}

int run_spectrum(const Common& c, double emax) {
  auto p = make_params(c);
  dunkl_spectrum* raw = nullptr;
  check(dunkl_spectrum_create(p.get(), emax, c.ext.c_str(), c.angular, &raw));
  SpectrumPtr s(raw);
  const std::string note = dunkl_spectrum_note(s.get());
  if (!note.empty())
    std::cerr << "note: " << note << "\n";
  const std::string tag = dunkl_spectrum_tag(s.get());
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (size_t i = 0; i < dunkl_spectrum_size(s.get()); ++i) {
      dunkl_spectrum_row r;
      check(dunkl_spectrum_row_get(s.get(), i, &r));
      arr.push_back({{"eps1", r.eps1}, {"eps2", r.eps2}, {"n", 0.5 * r.n_twice}, {"k", r.k},
                     {"msq", r.msq}, {"energy", r.energy}, {"extension", tag}});
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "eps1,eps2,n,k,msq,energy,extension\n";
    for (size_t i = 0; i < dunkl_spectrum_size(s.get()); ++i) {
      dunkl_spectrum_row r;
      check(dunkl_spectrum_row_get(s.get(), i, &r));
      os << r.eps1 << ',' << r.eps2 << ',' << half(r.n_twice) << ',' << r.k << ',' << num(r.msq) << ','
         << num(r.energy) << ',' << csv_field(tag) << "\n";
    }
  }
  emit(c.out, os.str());
  return 0;
}

struct Grid {
  double lo = -1.0, hi = 1.0;
  int count = 3;
};

Grid parse_grid(const std::string& text) {
  Grid g;
  const auto a = text.find(':'), b = text.rfind(':');
  if (a == std::string::npos || a == b)
    throw Failure{2, "grid must look like MIN:MAX:COUNT"};
  try {
    std::size_t used = 0;
    const std::string s1 = text.substr(0, a), s2 = text.substr(a + 1, b - a - 1), s3 = text.substr(b + 1);
    g.lo = std::stod(s1, &used);
    if (used != s1.size())
      throw std::invalid_argument("lo");
    g.hi = std::stod(s2, &used);
    if (used != s2.size())
      throw std::invalid_argument("hi");
    g.count = std::stoi(s3, &used);
    if (used != s3.size())
      throw std::invalid_argument("count");
  } catch (const std::exception&) {
    throw Failure{2, "grid must look like MIN:MAX:COUNT"};
  }
  if (g.count < 1 || g.count > 10000 || !(g.hi >= g.lo))
    throw Failure{2, "grid needs 1 <= COUNT <= 10000 and MIN <= MAX"};
  return g;
}

int run_states(const Common& c, int eps1, int eps2, double n, int k, const std::string& grid_text) {
  const Grid g = parse_grid(grid_text);
  const double twice = 2.0 * n;
  if (twice != std::round(twice) || twice < 0)
    throw Failure{2, "n must be a nonnegative multiple of 1/2"};
  auto p = make_params(c);
  dunkl_state* raw = nullptr;
  check(dunkl_state_create(p.get(), eps1, eps2, static_cast<int>(twice), k, c.ext.c_str(), c.angular, &raw));
  StatePtr st(raw);
  std::vector<double> xs(g.count);
  for (int i = 0; i < g.count; ++i)
    xs[i] = g.count == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.count - 1);
  int undefined = 0;
  std::ostringstream os;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (c.format != "json")
    os << "x1,x2,psi\n";
  for (double x1 : xs)
    for (double x2 : xs) {
      double v = 0.0;
      const dunkl_status s = dunkl_state_eval(st.get(), x1, x2, &v);
      if (s == DUNKL_ERR_DOMAIN) {
        v = std::nan("");
        ++undefined;
      } else {
        check(s);
      }
      if (c.format == "json") {
        nlohmann::ordered_json row{{"x1", x1}, {"x2", x2}};
        if (std::isnan(v))
          row["psi"] = nullptr;
        else
          row["psi"] = v;
        arr.push_back(std::move(row));
      } else {
        os << num(x1) << ',' << num(x2) << ',' << num(v) << "\n";
      }
    }
  if (c.format == "json")
    os << arr.dump(2) << "\n";
  if (undefined)
    std::cerr << "note: " << undefined << " grid point(s) have no direction-independent limit and are reported as nan\n";
  emit(c.out, os.str());
  return 0;
}

int run_verify(const Common& c, const std::vector<std::string>& exts, std::uint64_t seed, double tol) {
  auto p = make_params(c);
  std::vector<const char*> raw_exts;
  for (const auto& e : exts)
    raw_exts.push_back(e.c_str());
  dunkl_reports* raw = nullptr;
  check(dunkl_verify_run(p.get(), raw_exts.data(), raw_exts.size(), c.angular, seed, tol, &raw));
  ReportsPtr r(raw);
  std::ostringstream os;
  if (c.format == "csv") {
    os << "check,deviation,tolerance,pass\n";
    for (size_t i = 0; i < dunkl_reports_size(r.get()); ++i) {
      const char* name = nullptr;
      double dev = 0, t = 0;
      int pass = 0;
      check(dunkl_reports_get(r.get(), i, &name, &dev, &t, &pass));
      os << csv_field(name) << ',' << num(dev) << ',' << num(t) << ',' << (pass ? "true" : "false") << "\n";
    }
  } else {
    os << dunkl_reports_json(r.get()) << "\n";
  }
  emit(c.out, os.str());
  int failed = 0;
  for (size_t i = 0; i < dunkl_reports_size(r.get()); ++i) {
    const char* name = nullptr;
    int pass = 0;
    check(dunkl_reports_get(r.get(), i, &name, nullptr, nullptr, &pass));
    if (!pass) {
      ++failed;
      std::cerr << "FAILED: " << name << "\n";
    }
  }
  std::cerr << dunkl_reports_size(r.get()) << " checks, " << failed << " failed\n";
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, states and verification reports for the Dunkl oscillator in the plane"};
  app.require_subcommand(1);

  Common sc;
  double emax = 6.0;
  auto* spectrum = app.add_subcommand("spectrum", "list states with energy <= emax");
  add_common(spectrum, sc);
  spectrum->add_option("--emax", emax, "energy cap")->capture_default_str();
  spectrum->add_option("--format", sc.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  Common stc;
  int eps1 = 0, eps2 = 0, k = 0;
  double n = 0.0;
  std::string grid = "-1:1:3";
  auto* states = app.add_subcommand("states", "sample one wavefunction on a square grid");
  add_common(states, stc);
  states->add_option("--eps1", eps1, "R1 parity label (0 or 1)")->capture_default_str();
  states->add_option("--eps2", eps2, "R2 parity label (0 or 1)")->capture_default_str();
  states->add_option("--n", n, "angular index (multiple of 1/2)")->capture_default_str();
  states->add_option("--k", k, "radial index")->capture_default_str();
  states->add_option("--grid", grid, "MIN:MAX:COUNT for both axes")->capture_default_str();
  states->add_option("--format", stc.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  Common vc;
  vc.format = "json";
  std::vector<std::string> exts;
  std::uint64_t seed = 12345;
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "run the verification suite; exit 1 if any check fails");
  add_common(verify, vc, false);
  verify->add_option("--ext", exts, "radial extension TYPE:m (repeatable)");
  verify->add_flag("--angular-ext", vc.angular, "include the X1-Jacobi angular extension checks");
  verify->add_option("--seed", seed, "sample seed")->capture_default_str();
  verify->add_option("--tol", tol, "override every tolerance (> 0)");
  verify->add_option("--format", vc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*spectrum)
      return run_spectrum(sc, emax);
    if (*states)
      return run_states(stc, eps1, eps2, n, k, grid);
    if (vc.format.empty())
      vc.format = "json";
    return run_verify(vc, exts, seed, tol);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
