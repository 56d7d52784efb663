#pragma once

// Corpus ingestion, JSON records and the per-entry pipelines behind the
// relheight command-line tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relheight/boundeval.hpp"
#include "relheight/exactpoly.hpp"
#include "relheight/mpreal.hpp"

namespace relheight::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "relheight/1";

struct CorpusEntry {
  std::string name;
  IntPolynomial poly;  // ascending coefficients c0..cd
  std::optional<IntPolynomial> base;
  std::optional<bool> galois_tower;
};

struct CorpusLine {
  size_t line = 0;  // 1-based
  std::optional<CorpusEntry> entry;
  std::string error;  // set when entry is empty
};

struct Options {
  long precision = kDefaultPrecision;
  ConstantsConfig constants;
  long rank_bound = 4;
  std::optional<IntPolynomial> base;
  bool strict_unconditional = false;
  bool timings = false;
};

// "0.5", "1/2", "3", "-2.25e-1".
mpq_class parse_rational(const std::string& s);
// JSON array of integers (numbers or decimal strings), ascending.
IntPolynomial parse_coeffs(const json& j);
// Inline JSON (array, or object with "coeffs"), or a file holding either.
IntPolynomial parse_base(const std::string& spec);

CorpusEntry parse_entry(const std::string& text);
// Blank lines are skipped; each other line yields an entry or an error.
std::vector<CorpusLine> read_corpus(std::istream& in);

json coeffs_json(const IntPolynomial& p);
json interval_json(const Interval& x);
json logscalar_json(const LogScalar& v);
LogScalar logscalar_from_json(const json& j, mpfr_prec_t prec);
json report_json(const BoundReport& r);
BoundReport report_from_json(const json& j, mpfr_prec_t prec);

json height_record(const CorpusEntry& e, const Options& o);
json rank_record(const CorpusEntry& e, const Options& o);
json verify_record(const CorpusEntry& e, const Options& o);

enum class Command { Height, Rank, Verify };

// Processes every line, `jobs` entries at a time, and writes one JSON line
// per input line in input order, then a summary line. Returns the exit code:
// 0, 2 on an unconditional FAIL, 3 on an input error.
int run_stream(Command cmd, const std::vector<CorpusLine>& lines, const Options& o, unsigned jobs, std::ostream& out);

}  // namespace relheight::cli
