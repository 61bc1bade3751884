// cwl: command-line front end for the componentwise-linearity toolkit.
//
// Reads one object (ideal, matrix, simplicial complex, or degree data) in
// the line-oriented text format from a file or stdin, runs the requested
// operation, and prints text or JSON. Exit codes: 0 on a definite result,
// 2 on an inconclusive verdict, 1 on any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cwl/classifiers.hpp"
#include "cwl/criteria.hpp"
#include "cwl/graded_ideal.hpp"
#include "cwl/io.hpp"
#include "cwl/resolution.hpp"
#include "cwl/simplicial_complex.hpp"

#include "paper_examples.hpp"

namespace {

using namespace cwl;

constexpr long kDefaultComplexCharacteristic = 31013;

struct Session {
  std::string input_path = "-";
  bool json = false;
  std::string order_name = "degrevlex";
  std::uint64_t seed = 1;
  int trials = 3;
  long budget_steps = 0;  // 0: unlimited
  long characteristic = 0;  // 0: take the ring header / complex default

  MonomialOrder order() const {
    return order_name == "lex" ? MonomialOrder::lex : MonomialOrder::degrevlex;
  }
  std::optional<Budget> make_budget() const {
    if (budget_steps <= 0) return std::nullopt;
    return Budget(budget_steps);
  }
};

void add_common_options(CLI::App* cmd, Session& s, bool input = true) {
  if (input)
    cmd->add_option("input", s.input_path,
                    "input file in the text format ('-' for stdin)");
  cmd->add_flag("--json", s.json, "emit JSON instead of text");
  cmd->add_option("--char", s.characteristic,
                  "field characteristic (required to match the ring header; "
                  "selects the field for complex inputs)");
}

void add_order_option(CLI::App* cmd, Session& s) {
  cmd->add_option("--order", s.order_name, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
}

void add_random_options(CLI::App* cmd, Session& s) {
  cmd->add_option("--seed", s.seed, "random seed for coordinate changes");
  cmd->add_option("--trials", s.trials, "independent coordinate changes")
      ->check(CLI::PositiveNumber);
}

void add_budget_option(CLI::App* cmd, Session& s) {
  cmd->add_option("--budget", s.budget_steps,
                  "computation step budget (0 = unlimited); exhaustion is "
                  "reported as inconclusive");
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

ParsedInput load(const Session& s) {
  auto in = parse_input(read_input(s.input_path));
  if (s.characteristic != 0 && in.characteristic != 0 &&
      s.characteristic != in.characteristic)
    throw std::runtime_error(
        "--char " + std::to_string(s.characteristic) +
        " conflicts with the ring header (characteristic " +
        std::to_string(in.characteristic) + ")");
  return in;
}

/// The ideal a command operates on: either given directly, or the
/// Stanley-Reisner ideal of a complex over --char (default 31013).
GradedIdeal require_ideal(const ParsedInput& in, const Session& s) {
  if (in.kind == ParsedInput::Kind::ideal) return *in.ideal;
  if (in.kind == ParsedInput::Kind::complex_) {
    long p = s.characteristic != 0 ? s.characteristic
                                   : kDefaultComplexCharacteristic;
    return GradedIdeal::from_monomials(PrimeField(p),
                                       stanley_reisner(*in.complex));
  }
  throw std::runtime_error("this command needs an ideal or a complex");
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

void print_generators(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) std::cout << print_polynomial(g) << "\n";
}

nlohmann::json generator_list(const MonomialIdeal& ideal) {
  auto j = nlohmann::json::array();
  for (const auto& g : ideal.generators()) j.push_back(g.str());
  return j;
}

int report_verdict(const CwlVerdict& v, const Session& s) {
  if (s.json) {
    emit_json(verdict_json(v));
  } else {
    std::cout << "decision: " << to_string(v.decision) << "\n"
              << "method: " << v.method << "\n"
              << "probabilistic: " << (v.probabilistic ? "true" : "false")
              << "\n";
    if (!v.witness.empty())
      std::cout << "witness: " << v.witness.dump(2) << "\n";
  }
  return v.decision == CwlDecision::inconclusive ? 2 : 0;
}

int run_gb(const Session& s) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  const auto& basis =
      ideal.groebner_basis(s.order(), budget ? &*budget : nullptr);
  if (s.json) {
    auto j = nlohmann::json::array();
    for (const auto& g : basis) j.push_back(print_polynomial(g));
    emit_json({{"basis", j}, {"order", s.order_name}});
  } else {
    print_generators(basis);
  }
  return 0;
}

int run_initial(const Session& s) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  auto initial = ideal.initial_ideal(s.order(), budget ? &*budget : nullptr);
  if (s.json) {
    emit_json({{"generators", generator_list(initial)},
               {"order", s.order_name}});
  } else {
    for (const auto& g : initial.generators()) std::cout << g.str() << "\n";
  }
  return 0;
}

int run_gin(const Session& s) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  auto sample = gin_sample(ideal, s.order(), s.seed, s.trials,
                           budget ? &*budget : nullptr);
  if (s.json) {
    emit_json({{"generators", generator_list(sample.ideal)},
               {"agreed", sample.agreed},
               {"order", s.order_name},
               {"seed", s.seed},
               {"trials", s.trials}});
  } else {
    std::cout << "agreed: " << (sample.agreed ? "true" : "false") << "\n";
    for (const auto& g : sample.ideal.generators())
      std::cout << g.str() << "\n";
  }
  return sample.agreed ? 0 : 2;
}

int run_betti(const Session& s, const std::string& module) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  auto table = betti_table(
      minimal_resolution(ideal, s.order(), budget ? &*budget : nullptr));
  if (module == "I") table = table.for_ideal();
  if (s.json) {
    emit_json(betti_json(table));
  } else {
    auto text = table.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
    std::cout << text;
  }
  return 0;
}

int run_hilbert(const Session& s, int max_degree) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto values = hilbert_function(ideal, max_degree);
  if (s.json) {
    emit_json({{"values", values}});
  } else {
    for (std::size_t d = 0; d < values.size(); ++d)
      std::cout << d << " " << values[d] << "\n";
  }
  return 0;
}

int run_dim(const Session& s) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  int dim = quotient_dimension(ideal, budget ? &*budget : nullptr);
  int ht = ideal.arity() - dim;
  if (s.json) {
    emit_json({{"dim", dim}, {"height", ht}});
  } else {
    std::cout << "dim: " << dim << "\n" << "height: " << ht << "\n";
  }
  return 0;
}

int run_alexander_dual(const Session& s) {
  auto in = load(s);
  if (in.kind != ParsedInput::Kind::complex_)
    throw std::runtime_error("alexander-dual needs a complex input");
  auto dual = alexander_dual(*in.complex);
  bool self_dual = stanley_reisner(*in.complex) == stanley_reisner(dual);
  if (s.json) {
    auto j = nlohmann::json::array();
    for (const auto& g : stanley_reisner(dual).generators())
      j.push_back(g.str());
    emit_json({{"dual", print_complex(dual)},
               {"stanley_reisner", j},
               {"self_dual_ideal", self_dual}});
  } else {
    std::cout << print_complex(dual);
    std::cout << "self-dual ideal: " << (self_dual ? "true" : "false") << "\n";
  }
  return 0;
}

int run_cwl_test(const Session& s, const std::string& method) {
  auto in = load(s);
  auto ideal = require_ideal(in, s);
  auto budget = s.make_budget();
  Budget* b = budget ? &*budget : nullptr;
  CwlVerdict v;
  if (method == "initial") {
    v = test_cwl_initial(ideal, s.order(), b);
  } else if (method == "gin") {
    v = test_cwl_gin(ideal, s.seed, s.trials, b);
  } else if (method == "direct") {
    v = test_cwl_direct(ideal, b);
  } else {
    v = test_cwl_linear_part(ideal, b);
  }
  return report_verdict(v, s);
}

int run_classify(const Session& s, const std::string& kind) {
  auto in = load(s);
  auto budget = s.make_budget();
  Budget* b = budget ? &*budget : nullptr;
  CwlVerdict v;
  if (kind == "gorenstein") {
    v = classify_gorenstein(require_ideal(in, s), b);
  } else if (kind == "determinantal") {
    if (in.kind == ParsedInput::Kind::matrix) {
      const auto& m = *in.matrix;
      v = test_cwl_determinantal(m, m.rows() - m.cols() + 1, b);
    } else if (in.kind == ParsedInput::Kind::degree_matrix) {
      DeterminantalInput d{normalize_degree_matrix(*in.degrees).matrix,
                           std::nullopt};
      v = classify_determinantal(d);
    } else {
      throw std::runtime_error(
          "classify determinantal needs a matrix or degree matrix");
    }
  } else {  // symmetric
    if (in.kind == ParsedInput::Kind::matrix) {
      v = test_cwl_symmetric(*in.matrix, b);
    } else if (in.kind == ParsedInput::Kind::symmetric_degrees) {
      SymmetricInput d{in.arity, in.doubled_degrees, std::nullopt};
      v = classify_symmetric(d);
    } else {
      throw std::runtime_error(
          "classify symmetric needs a matrix or symmetric degree data");
    }
  }
  return report_verdict(v, s);
}

int report_companion(const MonomialIdeal& ideal, const Session& s) {
  if (s.json) {
    emit_json({{"generators", generator_list(ideal)}});
  } else {
    for (const auto& g : ideal.generators()) std::cout << g.str() << "\n";
  }
  return 0;
}

int run_companion(const Session& s, const std::string& kind, int height_c,
                  int size_m, int degree_e) {
  if (kind == "gorenstein") {
    return report_companion(gorenstein_companion(height_c, degree_e), s);
  }
  if (kind == "determinantal") {
    auto in = load(s);
    if (in.kind != ParsedInput::Kind::degree_matrix)
      throw std::runtime_error("companion determinantal needs a degree matrix");
    DeterminantalInput d{normalize_degree_matrix(*in.degrees).matrix,
                         std::nullopt};
    return report_companion(determinantal_companion(d), s);
  }
  // symmetric: the construction self-validates; a mismatch is inconclusive.
  auto result = symmetric_companion(size_m, degree_e);
  if (s.json) {
    nlohmann::json j{{"matches", result.matches}, {"note", result.note}};
    j["generators"] = result.ideal ? generator_list(*result.ideal)
                                   : nlohmann::json::array();
    emit_json(j);
  } else {
    std::cout << "matches: " << (result.matches ? "true" : "false") << "\n";
    if (!result.note.empty()) std::cout << "note: " << result.note << "\n";
    if (result.ideal)
      for (const auto& g : result.ideal->generators())
        std::cout << g.str() << "\n";
  }
  return result.matches ? 0 : 2;
}

int run_paper_examples(const Session& s) {
  auto results = cwl::tools::run_paper_examples();
  bool all_pass = true;
  if (s.json) {
    auto j = nlohmann::json::array();
    for (const auto& r : results) {
      j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    emit_json({{"scenarios", j}});
  } else {
    for (const auto& r : results) {
      if (r.pass) {
        std::cout << "PASS " << r.name << "\n";
      } else {
        std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        all_pass = false;
      }
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"componentwise-linearity toolkit for graded ideals over "
               "prime fields"};
  app.require_subcommand(1);
  Session s;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common_options(gb, s);
  add_order_option(gb, s);
  add_budget_option(gb, s);

  auto* initial = app.add_subcommand("initial", "initial ideal");
  add_common_options(initial, s);
  add_order_option(initial, s);
  add_budget_option(initial, s);

  auto* gin = app.add_subcommand("gin", "sampled generic initial ideal");
  add_common_options(gin, s);
  add_order_option(gin, s);
  add_random_options(gin, s);
  add_budget_option(gin, s);

  std::string betti_module = "I";
  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  add_common_options(betti, s);
  add_order_option(betti, s);
  add_budget_option(betti, s);
  betti->add_option("--module", betti_module, "report the table of I or S/I")
      ->check(CLI::IsMember({"I", "S/I"}));

  int max_degree = 10;
  auto* hilbert =
      app.add_subcommand("hilbert", "Hilbert function of the quotient");
  add_common_options(hilbert, s);
  hilbert->add_option("--max-degree", max_degree, "largest degree reported")
      ->check(CLI::NonNegativeNumber);

  auto* dim =
      app.add_subcommand("dim", "Krull dimension of the quotient and height");
  add_common_options(dim, s);
  add_budget_option(dim, s);

  auto* dual = app.add_subcommand("alexander-dual",
                                  "Alexander dual of a simplicial complex");
  add_common_options(dual, s);

  std::string method = "linear-part";
  auto* cwl_test =
      app.add_subcommand("cwl-test", "componentwise-linearity test");
  add_common_options(cwl_test, s);
  add_order_option(cwl_test, s);
  add_random_options(cwl_test, s);
  add_budget_option(cwl_test, s);
  cwl_test->add_option("--method", method, "decision method")
      ->check(CLI::IsMember({"initial", "gin", "linear-part", "direct"}));

  std::string classify_kind;
  auto* classify = app.add_subcommand(
      "classify", "structural componentwise-linearity classifier");
  classify
      ->add_option("kind", classify_kind,
                   "gorenstein | determinantal | symmetric")
      ->required()
      ->check(CLI::IsMember({"gorenstein", "determinantal", "symmetric"}));
  add_common_options(classify, s);
  add_budget_option(classify, s);

  std::string companion_kind;
  int height_c = 0, size_m = 0, degree_e = 1;
  auto* companion = app.add_subcommand(
      "companion", "stable monomial model with the same Betti numbers");
  companion
      ->add_option("kind", companion_kind,
                   "gorenstein | determinantal | symmetric")
      ->required()
      ->check(CLI::IsMember({"gorenstein", "determinantal", "symmetric"}));
  add_common_options(companion, s);
  companion->add_option("--height", height_c, "height c (gorenstein)");
  companion->add_option("--size", size_m, "matrix size m (symmetric)");
  companion->add_option("--degree", degree_e,
                        "top degree e (gorenstein, symmetric)");

  auto* examples = app.add_subcommand(
      "paper-examples", "run the built-in worked-example scenario suite");
  add_common_options(examples, s, /*input=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gb->parsed()) return run_gb(s);
    if (initial->parsed()) return run_initial(s);
    if (gin->parsed()) return run_gin(s);
    if (betti->parsed()) return run_betti(s, betti_module);
    if (hilbert->parsed()) return run_hilbert(s, max_degree);
    if (dim->parsed()) return run_dim(s);
    if (dual->parsed()) return run_alexander_dual(s);
    if (cwl_test->parsed()) return run_cwl_test(s, method);
    if (classify->parsed()) return run_classify(s, classify_kind);
    if (companion->parsed())
      return run_companion(s, companion_kind, height_c, size_m, degree_e);
    if (examples->parsed()) return run_paper_examples(s);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded&) {
    std::cerr << "inconclusive: computation budget exceeded\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
