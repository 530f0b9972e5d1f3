#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "optdom/closed_form.hpp"
#include "optdom/operators.hpp"
#include "optdom/series.hpp"
#include "optdom/suite.hpp"

namespace optdom::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kCheckInconclusive = 2,
  kUsage = 64,
  kEvaluation = 65,
};

enum class Format { Json, Csv, Table };

struct RunConfig {
  SuiteConfig suite{};
  Format format = Format::Table;
  bool format_given = false;
  bool timing = false;
};

/// Parses a function spec:
///   catalog shorthand  g0 | pow_witness:1.5 | e1_witness:1,-1
///   series:[...]       coefficient array (numbers or [re, im] pairs)
///   expr:<json>        expression tree
///   raw JSON           array or {"re","im"} object is a series; an array
///                      starting with a node tag is an expression
/// Throws ParseError.
SymbolFunction parse_function(const std::string& spec);

/// volterra:<g> | averaged:<g> | mult:<h> | cesaro | cesaro_inverse | diff |
/// integrate | shift | backshift, or the JSON form {"op": ...}. The symbol
/// of volterra/averaged is g itself; it is differentiated here.
OperatorSpec parse_operator(const std::string& spec, std::size_t cap);

/// Angle in radians: a number, or [-][k]pi[/d].
double parse_angle(const std::string& text);

/// Point of the disc: "x" or "x,y".
cplx parse_point(const std::string& text);

/// Shortest round-trip decimal form; -0 prints as 0.
std::string format_number(double x);

/// Runs one invocation. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optdom::cli
