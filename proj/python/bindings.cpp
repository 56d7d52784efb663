#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli_support.hpp"
#include "relheight/error.hpp"
#include "relheight/heights.hpp"

namespace py = pybind11;
using namespace relheight;
using namespace relheight::cli;

namespace {

// Coefficients cross the boundary as decimal strings so Python ints of any size survive.
IntPolynomial from_strings(const std::vector<std::string>& c) {
  json j = json::array();
  for (const auto& s : c) j.push_back(s);
  return parse_coeffs(j);
}

std::vector<std::string> to_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

std::pair<std::string, std::string> interval_pair(const Interval& x) {
  json j = interval_json(x);
  return {j["lo"].get<std::string>(), j["hi"].get<std::string>()};
}

Options make_options(long precision, const std::string& eps, const std::string& cad, long bound,
                     const std::optional<std::string>& base, bool strict) {
  Options o;
  o.precision = precision;
  o.constants.eps = parse_rational(eps);
  o.constants.c_ad = parse_rational(cad);
  o.constants.precision_bits = precision;
  o.rank_bound = bound;
  o.strict_unconditional = strict;
  if (base) o.base = parse_base(*base);
  return o;
}

std::string stream(Command cmd, const std::string& corpus, const Options& o, unsigned jobs) {
  std::istringstream in(corpus);
  std::ostringstream out;
  const int code = run_stream(cmd, read_corpus(in), o, jobs, out);
  json j = {{"exit_code", code}, {"output", out.str()}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weil heights, relative invariants and explicit height lower bounds";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("mahler_measure", [](const std::vector<std::string>& c, long prec) {
    return interval_pair(mahler_measure(from_strings(c), prec));
  }, py::arg("coeffs"), py::arg("precision") = kDefaultPrecision);
  m.def("weil_height", [](const std::vector<std::string>& c, long prec) {
    return interval_pair(weil_height(normalize(from_strings(c)), prec));
  }, py::arg("coeffs"), py::arg("precision") = kDefaultPrecision);
  m.def("kronecker_test", [](const std::vector<std::string>& c) { return kronecker_test(from_strings(c)); });
  m.def("is_irreducible", [](const std::vector<std::string>& c) { return is_irreducible(from_strings(c)); });
  m.def("power_minpoly", [](const std::vector<std::string>& c, unsigned k) {
    return to_strings(power_minpoly(normalize(from_strings(c)), k));
  });

  m.def("run", [](const std::string& command, const std::string& corpus, long precision, const std::string& eps,
                  const std::string& cad, long bound, const std::optional<std::string>& base, bool strict,
                  unsigned jobs) {
    const Command cmd = command == "height" ? Command::Height
                        : command == "rank" ? Command::Rank
                        : command == "verify"
                            ? Command::Verify
                            : throw Error(ErrorKind::InvalidArgument, "invalid argument: unknown command " + command);
    const Options o = make_options(precision, eps, cad, bound, base, strict);
    py::gil_scoped_release release;
    return stream(cmd, corpus, o, jobs);
  });

  m.def("bound", [](const std::string& theorem, const std::map<std::string, std::string>& p, long precision,
                    const std::string& eps, const std::string& cad) {
    ConstantsConfig cfg;
    cfg.eps = parse_rational(eps);
    cfg.c_ad = parse_rational(cad);
    cfg.precision_bits = precision;
    auto get = [&](const char* k, const char* dflt) {
      auto it = p.find(k);
      return it == p.end() ? std::string(dflt) : it->second;
    };
    std::vector<BoundReport> reps;
    if (theorem == "1") {
      Theorem1Input in;
      in.delta = std::stol(get("delta", "1"));
      in.tau = std::stol(get("tau", "1"));
      in.d = std::stol(get("d", "2"));
      in.rho = std::stol(get("rho", "1"));
      in.e = std::stol(get("e", "2"));
      in.f = std::stol(get("f", "2"));
      in.disc_abs = mpz_class(get("disc", "1"));
      in.g = LogScalar::from_mpz(mpz_class(get("g", "1")), precision);
      reps = theorem1_bound(in, cfg);
    } else if (theorem == "2" || theorem == "corollary") {
      Theorem2Input in;
      in.eta = mpz_class(get("eta", "1"));
      in.tau = std::stol(get("tau", "1"));
      in.r = std::stol(get("r", "1"));
      in.rho = std::stol(get("rho", "1"));
      in.e = std::stol(get("e", "0"));
      in.d_alpha_e = std::stol(get("d_alpha_e", "0"));
      reps = theorem == "2" ? theorem2_bound(in, cfg) : corollary_bound(in, cfg);
    } else if (theorem == "voutier") {
      reps.push_back(voutier_bound(std::stol(get("d", "2")), precision));
    } else {
      throw Error(ErrorKind::InvalidArgument, "invalid argument: unknown theorem " + theorem);
    }
    json out = json::array();
    for (const auto& r : reps) out.push_back(report_json(r));
    return out.dump();
  }, py::arg("theorem"), py::arg("params"), py::arg("precision") = kDefaultPrecision, py::arg("eps") = "1/2",
     py::arg("cad") = "1");
}
