#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "brd/algebra.hpp"
#include "brd/connector.hpp"
#include "brd/error.hpp"
#include "brd/laurent.hpp"
#include "brd/normal_form.hpp"
#include "brd/text.hpp"
#include "brd/verify.hpp"

namespace {

const std::map<std::string, brd::Mode> kModes{
    {"strict", brd::Mode::Strict}, {"extended", brd::Mode::Extended}};

const std::map<std::string, brd::EnumFilter> kFilters{
    {"all", brd::EnumFilter::All},
    {"undecorated", brd::EnumFilter::Undecorated},
    {"horizontal", brd::EnumFilter::Horizontal},
    {"horizontal-undecorated", brd::EnumFilter::HorizontalUndecorated}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact diagram calculus for the decorated Brauer algebra of "
               "type D"};
  app.require_subcommand(1);

  int n = 1;
  brd::Mode mode = brd::Mode::Strict;
  brd::EnumFilter filter = brd::EnumFilter::All;
  std::uint64_t seed = brd::kDefaultSeed;
  std::int64_t budget = 0;
  int jobs = 1;
  std::string out_path, format = "csv";
  std::string arg_a, arg_b, word_s, elem_s, suite_s;
  int rc = 0;

  auto add_n = [&n](CLI::App* sub) {
    sub->add_option("-n", n, "diagram size")->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_mode = [&mode](CLI::App* sub) {
    sub->add_option("--mode", mode, "basis mode")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
        ->default_str("strict");
  };

  auto* product = app.add_subcommand("product", "multiply two elements");
  add_n(product);
  add_mode(product);
  product->add_option("a", arg_a, "left element")->required();
  product->add_option("b", arg_b, "right element")->required();
  product->callback([&]() {
    brd::AlgebraElement a = brd::parse_element(arg_a, mode, n);
    brd::AlgebraElement b = brd::parse_element(arg_b, mode, n);
    std::cout << brd::to_string(brd::multiply(a, b)) << "\n";
  });

  auto* eval = app.add_subcommand("eval", "evaluate a generator word");
  add_n(eval);
  add_mode(eval);
  eval->add_option("word", word_s, "generator word")->required();
  eval->callback([&]() {
    std::cout << brd::to_string(
                     brd::eval_word(n, brd::parse_word(word_s), mode))
              << "\n";
  });

  auto* nf = app.add_subcommand("nf", "normal form of a basis diagram");
  add_n(nf);
  nf->add_option("elem", elem_s, "d^k times a basis diagram")->required();
  nf->callback([&]() {
    brd::AlgebraElement el =
        brd::parse_element(elem_s, brd::Mode::Strict, n);
    brd::BasisDiagram d;
    brd::LaurentPoly coeff;
    if (!el.single_term(d, coeff))
      brd::fail("NotBasis", "nf takes a single scalar multiple of a basis "
                            "diagram");
    std::int64_t shift = 0;
    if (!coeff.is_unit_delta_power(shift))
      brd::fail("NotBasis", "coefficient must be a power of d");
    brd::Monomial m = brd::nu_inverse(d);
    m.delta_exp = brd::checked_exp_add(m.delta_exp, shift);
    std::cout << brd::to_string(m) << "\n"
              << brd::word_to_string(brd::monomial_word(m)) << "\n";
  });

  auto* enum_cmd = app.add_subcommand("enum", "list connectors");
  add_n(enum_cmd);
  enum_cmd->add_option("--filter", filter, "connector filter")
      ->transform(CLI::CheckedTransformer(kFilters, CLI::ignore_case))
      ->default_str("all");
  enum_cmd->callback([&]() {
    for (const brd::Connector& c : brd::enumerate_connectors(n, filter))
      std::cout << brd::to_string(c) << "\n";
  });

  auto* count = app.add_subcommand("count", "closed-form connector counts");
  add_n(count);
  count->callback([&]() {
    brd::Counts c = brd::count_connectors(n);
    std::cout << "T=" << c.T.str() << " T0=" << c.T0.str()
              << " Teq=" << c.Teq.str() << " T0eq=" << c.T0eq.str()
              << " d=" << c.d.str() << " ext=" << c.ext.str() << "\n";
  });

  auto* check = app.add_subcommand("check", "run a conformance suite");
  check->add_option("suite", suite_s, "suite name")->required();
  add_n(check);
  check->add_option("--budget", budget, "max case count (0 = default)");
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  check->callback([&]() {
    brd::SuiteReport rep = brd::run_suite(suite_s, n, budget, seed, jobs);
    std::cout << brd::dump_failures(rep);
    std::cerr << "wall " << rep.wall_seconds << "s\n";
    if (!rep.failures.empty()) rc = 3;
  });

  auto* dump = app.add_subcommand("dump-sc", "dump structure constants");
  add_n(dump);
  add_mode(dump);
  dump->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  dump->add_option("--out", out_path, "output file (default stdout)");
  dump->add_option("--format", format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->default_str("csv");
  dump->callback([&]() {
    std::vector<brd::StructureRow> rows =
        brd::structure_constants(n, mode, jobs);
    std::string text;
    if (format == "csv") {
      text = brd::sc_to_csv(rows);
    } else {
      std::ostringstream os;
      for (const brd::StructureRow& r : rows)
        os << r.i << ' ' << r.j << ' ' << r.k << ' ' << r.delta_exp << ' '
           << brd::class_token(r.cls) << "\n";
      text = os.str();
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        rc = 1;
        return;
      }
      f << text;
    }
  });

  auto add_unary = [&](const char* name, const char* help,
                       brd::AlgebraElement (*op)(const brd::AlgebraElement&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_n(sub);
    add_mode(sub);
    sub->add_option("elem", elem_s, "element")->required();
    sub->callback([&, op]() {
      std::cout << brd::to_string(op(brd::parse_element(elem_s, mode, n)))
                << "\n";
    });
    return sub;
  };
  add_unary("op", "opposition (reverse products)", brd::opposition_el);
  add_unary("pi", "forget decorations", brd::pi_el);
  add_unary("flip", "pole flip", brd::pole_flip_el);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const brd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
