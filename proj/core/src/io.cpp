#include "cwl/io.hpp"

#include <cctype>
#include <cstdint>

namespace cwl {

namespace {

/// Character cursor over the input with 1-based line/column tracking.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  char take() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  int line() const { return line_; }
  int column() const { return col_; }

  /// Next whitespace-delimited word ('/' and ':' stand alone).
  std::string word() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    std::string w;
    if (peek() == '/' || peek() == ':') {
      w.push_back(take());
      return w;
    }
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '/' && peek() != ':') {
      w.push_back(take());
    }
    return w;
  }

  long integer(const std::string& what) {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      take();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected " + what);
    }
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1'000'000'000L) fail(what + " out of range");
    }
    return neg ? -v : v;
  }

  void expect_word(const std::string& w) {
    skip_ws();
    int line = line_, col = col_;
    if (word() != w) {
      throw ParseError("expected '" + w + "'", line, col);
    }
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// one polynomial; stops at ',' or end of input (or, inside matrix entries,
// at whitespace because the entry was pre-tokenized)
Polynomial parse_polynomial(Cursor& c, const PrimeField& field, int arity) {
  std::vector<Term> terms;
  bool first = true;
  c.skip_ws();
  while (true) {
    c.skip_ws();
    if (c.eof() || c.peek() == ',') break;
    long sign = 1;
    if (c.peek() == '+') {
      c.take();
    } else if (c.peek() == '-') {
      sign = -1;
      c.take();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    std::int64_t coef = 1;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = c.integer("coefficient");
      saw_factor = true;
    }
    ExponentVector mono(arity);
    while (true) {
      // factors are juxtaposed without spaces; an explicit '*' may carry
      // whitespace around it
      if (c.peek() == '*') {
        c.take();
        c.skip_ws();
      } else if (std::isspace(static_cast<unsigned char>(c.peek()))) {
        // lookahead: whitespace then '*' still continues this term
        Cursor probe = c;
        probe.skip_ws();
        if (probe.peek() != '*') break;
        c.skip_ws();
        c.take();  // '*'
        c.skip_ws();
      }
      if (c.peek() != 'x') break;
      int line = c.line(), col = c.column();
      c.take();
      long idx = c.integer("variable index");
      if (idx < 1 || idx > arity) {
        throw ParseError("variable index out of range", line, col);
      }
      long exp = 1;
      if (c.peek() == '^') {
        c.take();
        exp = c.integer("exponent");
        if (exp < 1 || exp > 1000) c.fail("exponent out of range");
      }
      mono.set(static_cast<int>(idx - 1),
               mono[static_cast<int>(idx - 1)] + static_cast<int>(exp));
      saw_factor = true;
    }
    if (!saw_factor) c.fail("expected a term");
    terms.push_back(Term{field.reduce(sign * coef), mono});
    first = false;
  }
  if (terms.empty()) c.fail("expected a polynomial");
  return Polynomial(field, arity, std::move(terms));
}

std::pair<PrimeField, int> parse_ring(Cursor& c) {
  c.skip_ws();
  int line = c.line(), col = c.column();
  long p = c.integer("characteristic");
  long n = c.integer("arity");
  if (n < 1 || n > ExponentVector::kMaxArity) {
    throw ParseError("arity out of range", line, col);
  }
  try {
    return {PrimeField(p), static_cast<int>(n)};
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line, col);
  }
}

ParsedInput parse_ideal(Cursor& c, const PrimeField& field, int arity) {
  ParsedInput out;
  out.kind = ParsedInput::Kind::ideal;
  out.characteristic = field.characteristic();
  out.arity = arity;
  std::vector<Polynomial> gens;
  while (true) {
    c.skip_ws();
    int line = c.line(), col = c.column();
    auto g = parse_polynomial(c, field, arity);
    if (g.is_zero()) throw ParseError("zero generator", line, col);
    if (!g.is_homogeneous()) {
      throw ParseError("inhomogeneous generator", line, col);
    }
    gens.push_back(std::move(g));
    c.skip_ws();
    if (c.eof()) break;
    if (c.peek() != ',') c.fail("expected ',' between generators");
    c.take();
  }
  out.ideal = GradedIdeal(field, arity, std::move(gens));
  return out;
}

ParsedInput parse_matrix(Cursor& c, const PrimeField& field, int arity) {
  ParsedInput out;
  out.kind = ParsedInput::Kind::matrix;
  out.characteristic = field.characteristic();
  out.arity = arity;
  long rows = c.integer("row count");
  long cols = c.integer("column count");
  if (rows < 1 || cols < 1 || rows > 64 || cols > 64) {
    c.fail("matrix shape out of range");
  }
  c.expect_word("rowdeg");
  std::vector<int> g, f;
  for (long i = 0; i < rows; ++i) {
    g.push_back(static_cast<int>(c.integer("row degree")));
  }
  c.expect_word("coldeg");
  for (long j = 0; j < cols; ++j) {
    f.push_back(static_cast<int>(c.integer("column degree")));
  }
  c.expect_word("entries");
  c.expect_word(":");
  std::vector<std::vector<Polynomial>> entries;
  for (long i = 0; i < rows; ++i) {
    if (i > 0) {
      c.skip_ws();
      int line = c.line(), col = c.column();
      if (c.word() != "/") throw ParseError("expected '/'", line, col);
    }
    std::vector<Polynomial> row;
    for (long j = 0; j < cols; ++j) {
      c.skip_ws();
      int line = c.line(), col = c.column();
      std::string token = c.word();
      if (token.empty() || token == "/") {
        throw ParseError("expected a matrix entry", line, col);
      }
      Cursor sub(token);
      try {
        auto e = parse_polynomial(sub, field, arity);
        if (!e.is_zero() && !e.is_homogeneous()) {
          throw ParseError("inhomogeneous entry", line, col);
        }
        row.push_back(std::move(e));
      } catch (const ParseError& pe) {
        throw ParseError(pe.what() + std::string(" in matrix entry"), line,
                         col);
      }
    }
    entries.push_back(std::move(row));
  }
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after matrix");
  try {
    out.matrix = HomogeneousMatrix(std::move(g), std::move(f),
                                   std::move(entries));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return out;
}

ParsedInput parse_complex(Cursor& c) {
  ParsedInput out;
  out.kind = ParsedInput::Kind::complex_;
  c.skip_ws();
  int hline = c.line(), hcol = c.column();
  long n = c.integer("vertex count");
  if (n < 1 || n > ExponentVector::kMaxArity) {
    throw ParseError("vertex count out of range", hline, hcol);
  }
  out.arity = static_cast<int>(n);
  c.expect_word("facets");
  c.expect_word(":");
  std::vector<std::uint32_t> facets;
  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    int line = c.line(), col = c.column();
    std::string w = c.word();
    std::uint32_t mask = 0;
    auto add_vertex = [&](long v) {
      if (v < 1 || v > n) {
        throw ParseError("facet vertex out of range", line, col);
      }
      mask |= 1u << (v - 1);
    };
    if (w.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= w.size()) {
        std::size_t comma = w.find(',', start);
        std::string part = w.substr(start, comma - start);
        if (part.empty()) throw ParseError("malformed facet", line, col);
        add_vertex(std::stol(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      for (char ch : w) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ParseError("malformed facet", line, col);
        }
        add_vertex(ch - '0');
      }
    }
    facets.push_back(mask);
  }
  if (facets.empty()) c.fail("expected at least one facet");
  out.complex = SimplicialComplex(out.arity, std::move(facets));
  return out;
}

ParsedInput parse_degree_matrix(Cursor& c) {
  ParsedInput out;
  out.kind = ParsedInput::Kind::degree_matrix;
  long rows = c.integer("row count");
  long cols = c.integer("column count");
  if (rows < 1 || cols < 1 || rows > 64 || cols > 64) {
    c.fail("matrix shape out of range");
  }
  c.expect_word("entries");
  c.expect_word(":");
  std::vector<int> u;
  for (long i = 0; i < rows; ++i) {
    if (i > 0) {
      c.skip_ws();
      int line = c.line(), col = c.column();
      if (c.word() != "/") throw ParseError("expected '/'", line, col);
    }
    for (long j = 0; j < cols; ++j) {
      u.push_back(static_cast<int>(c.integer("degree entry")));
    }
  }
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after degree matrix");
  try {
    out.degrees = DegreeMatrix(static_cast<int>(rows), static_cast<int>(cols),
                               std::move(u));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return out;
}

ParsedInput parse_symmetric_degrees(Cursor& c) {
  ParsedInput out;
  out.kind = ParsedInput::Kind::symmetric_degrees;
  c.skip_ws();
  int line = c.line(), col = c.column();
  long m = c.integer("size");
  if (m < 2 || m > 64) throw ParseError("size out of range", line, col);
  out.arity = static_cast<int>(m);
  for (long i = 0; i < m; ++i) {
    out.doubled_degrees.push_back(
        static_cast<int>(c.integer("doubled degree")));
  }
  c.skip_ws();
  if (!c.eof()) c.fail("trailing input after degree data");
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

ParsedInput parse_input(const std::string& text) {
  Cursor c(text);
  c.skip_ws();
  int line = c.line(), col = c.column();
  std::string head = c.word();
  if (head == "ring") {
    auto [field, arity] = parse_ring(c);
    c.skip_ws();
    int sline = c.line(), scol = c.column();
    std::string stmt = c.word();
    if (stmt == "ideal") return parse_ideal(c, field, arity);
    if (stmt == "matrix") return parse_matrix(c, field, arity);
    throw ParseError("expected 'ideal' or 'matrix' after the ring header",
                     sline, scol);
  }
  if (head == "complex") return parse_complex(c);
  if (head == "degmatrix") return parse_degree_matrix(c);
  if (head == "symdegrees") return parse_symmetric_degrees(c);
  throw ParseError(
      "expected 'ring', 'complex', 'degmatrix' or 'symdegrees'", line, col);
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += "+";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else if (t.coef == 1) {
      s += t.mono.str();
    } else {
      s += std::to_string(t.coef) + "*" + t.mono.str();
    }
  }
  return s;
}

std::string print_ideal(const GradedIdeal& ideal) {
  std::string s = "ring " + std::to_string(ideal.field().characteristic()) +
                  " " + std::to_string(ideal.arity()) + "\nideal ";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) s += ", ";
    s += print_polynomial(g);
    first = false;
  }
  return s + "\n";
}

std::string print_matrix(const HomogeneousMatrix& m, long characteristic) {
  std::string s = "ring " + std::to_string(characteristic) + " " +
                  std::to_string(m.arity()) + "\nmatrix " +
                  std::to_string(m.rows()) + " " + std::to_string(m.cols()) +
                  "\nrowdeg";
  for (int d : m.row_degrees()) s += " " + std::to_string(d);
  s += "\ncoldeg";
  for (int d : m.col_degrees()) s += " " + std::to_string(d);
  s += "\nentries:";
  for (int i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "\n" : " /\n";
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) s += " ";
      s += print_polynomial(m.at(i, j));
    }
  }
  return s + "\n";
}

std::string print_complex(const SimplicialComplex& delta) {
  std::string s = "complex " + std::to_string(delta.vertex_count()) +
                  " facets:";
  const bool compact = delta.vertex_count() <= 9;
  for (std::uint32_t f : delta.facets()) {
    s += " ";
    bool first = true;
    for (int v = 1; v <= delta.vertex_count(); ++v) {
      if ((f >> (v - 1)) & 1u) {
        if (!compact && !first) s += ",";
        s += std::to_string(v);
        first = false;
      }
    }
  }
  return s + "\n";
}

std::string print_degree_matrix(const DegreeMatrix& d) {
  std::string s = "degmatrix " + std::to_string(d.rows()) + " " +
                  std::to_string(d.cols()) + " entries:";
  for (int i = 0; i < d.rows(); ++i) {
    if (i > 0) s += " /";
    for (int j = 0; j < d.cols(); ++j) {
      s += " " + std::to_string(d.at(i, j));
    }
  }
  return s + "\n";
}

std::string print_symmetric_degrees(const std::vector<int>& doubled) {
  std::string s = "symdegrees " + std::to_string(doubled.size());
  for (int d : doubled) s += " " + std::to_string(d);
  return s + "\n";
}

std::string print_input(const ParsedInput& in) {
  switch (in.kind) {
    case ParsedInput::Kind::ideal:
      return print_ideal(*in.ideal);
    case ParsedInput::Kind::matrix:
      return print_matrix(*in.matrix, in.characteristic);
    case ParsedInput::Kind::complex_:
      return print_complex(*in.complex);
    case ParsedInput::Kind::degree_matrix:
      return print_degree_matrix(*in.degrees);
    default:
      return print_symmetric_degrees(in.doubled_degrees);
  }
}

nlohmann::json betti_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, beta] : t.entries()) {
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
  }
  return {{"module",
           t.subject() == BettiTable::Subject::ideal ? "I" : "S/I"},
          {"entries", entries}};
}

nlohmann::json verdict_json(const CwlVerdict& v) {
  return {{"method", v.method},
          {"decision", to_string(v.decision)},
          {"probabilistic", v.probabilistic},
          {"witness", v.witness}};
}

}  // namespace cwl
