#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwl/betti.hpp"
#include "cwl/criteria.hpp"
#include "cwl/graded_ideal.hpp"
#include "cwl/homogeneous_matrix.hpp"
#include "cwl/simplicial_complex.hpp"

namespace cwl {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// One parsed top-level object from the text format. Ideals and matrices are
/// preceded by a `ring <p> <n>` header; complexes and plain degree data are
/// ring-free.
struct ParsedInput {
  enum class Kind { ideal, matrix, complex_, degree_matrix, symmetric_degrees };

  Kind kind;
  long characteristic = 0;  // 0 when the input carries no ring header
  int arity = 0;            // ring arity, or the vertex count of a complex

  std::optional<GradedIdeal> ideal;
  std::optional<HomogeneousMatrix> matrix;
  std::optional<SimplicialComplex> complex;
  std::optional<DegreeMatrix> degrees;
  std::vector<int> doubled_degrees;  // symmetric degree data, doubled
};

/// Parse one object:
///   ring <p> <n>
///   ideal <poly>, <poly>, ...
/// or
///   ring <p> <n>
///   matrix <R> <C> rowdeg g1 .. gR coldeg f1 .. fC entries: e e / e e / ...
/// or
///   complex <n> facets: 123 124 ...        (vertices > 9: comma form 1,2,10)
///   degmatrix <R> <C> entries: 1 0 / 2 1 / ...
///   symdegrees <m> <2d_1> ... <2d_m>
/// Polynomials use variables x1..xn, `^` for powers, optional `*` between
/// factors, integer coefficients with `+`/`-`.
ParsedInput parse_input(const std::string& text);

/// Canonical printers; print(parse(t)) reparses to the same value.
std::string print_polynomial(const Polynomial& p);
std::string print_ideal(const GradedIdeal& ideal);
std::string print_matrix(const HomogeneousMatrix& m, long characteristic);
std::string print_complex(const SimplicialComplex& delta);
std::string print_degree_matrix(const DegreeMatrix& d);
std::string print_symmetric_degrees(const std::vector<int>& doubled);
std::string print_input(const ParsedInput& in);

/// {"module": "S/I"|"I", "entries": [{"i":..,"j":..,"beta":..}, ...]},
/// entries sorted by (i, j).
nlohmann::json betti_json(const BettiTable& t);

/// {"method":.., "decision":.., "probabilistic":.., "witness":..}.
nlohmann::json verdict_json(const CwlVerdict& v);

}  // namespace cwl
