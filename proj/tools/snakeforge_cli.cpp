// snakeforge: realize separable snakes as Morse polynomials, read snakes off
// polynomials, and run the supporting reports.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snakeforge/census.hpp"
#include "snakeforge/error.hpp"
#include "snakeforge/io.hpp"
#include "snakeforge/realization.hpp"
#include "snakeforge/snake_extract.hpp"
#include "snakeforge/valuation_calculus.hpp"

using namespace snakeforge;

namespace {

enum class Format { Json, Text, Dot, Csv };

struct Config {
  Format format = Format::Text;
  bool verify = false;
  bool serial = false;
  int jobs = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  int precision = 12;
  std::size_t max_n = 8;
  std::size_t random_leaves = 0;
  std::string kind = "separating";
  std::optional<std::string> lo, hi;
  std::optional<std::string> bundle;
  std::vector<std::string> inputs;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"text", Format::Text}, {"dot", Format::Dot}, {"csv", Format::Csv}};

void require_format(const Config& c, std::initializer_list<Format> allowed, const std::string& command) {
  if (std::find(allowed.begin(), allowed.end(), c.format) == allowed.end())
    fail(ErrorKind::UsageError, "format not supported by " + command);
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

WitnessOptions witness_options() {
  WitnessOptions w;
  if (const char* env = std::getenv("SNAKEFORGE_MAX_HALVINGS")) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(env, &used);
      if (used != std::string(env).size() || v > 100000) throw std::invalid_argument(env);
      w.max_halvings = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      fail(ErrorKind::UsageError, std::string("SNAKEFORGE_MAX_HALVINGS must be a natural number, got '") + env + "'");
    }
  }
  return w;
}

// Univariate input in x or y.
UniPoly parse_input_poly(const std::string& text) {
  const bool has_x = text.find('x') != std::string::npos;
  const bool has_y = text.find('y') != std::string::npos;
  if (has_x && has_y) fail(ErrorKind::ParseError, "expected a polynomial in one variable, got '" + text + "'");
  return parse_unipoly(text, has_y ? 'y' : 'x');
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

int cmd_check(const Config& c) {
  require_format(c, {Format::Text, Format::Json, Format::Dot}, "check");
  Permutation p = parse_permutation(joined(c.inputs));
  const bool snake = is_snake(p);
  auto tree = try_build_separating_tree(p);
  std::string orientation = p.size() < 2 ? "none" : (ends_descending(p) ? "descending" : "ascending");
  if (c.format == Format::Dot) {
    if (!tree) fail(ErrorKind::NotSeparable, to_string(p) + " has no separating tree");
    std::cout << to_dot(*tree);
    return 0;
  }
  if (c.format == Format::Json) {
    Json j{{"permutation", to_string(p)}, {"snake", snake}, {"separable", tree.has_value()},
           {"orientation", orientation}};
    if (tree) j["tree"] = to_json(*tree);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "snake=" << yes_no(snake) << " separable=" << yes_no(tree.has_value()) << " orientation=" << orientation
            << "\n";
  if (tree) std::cout << "tree " << to_text(*tree) << "\n";
  return 0;
}

void print_realization_text(const RealizationResult& r) {
  std::cout << "sigma           " << to_string(r.sigma) << "\n";
  std::cout << "tree            " << to_text(r.tree) << "\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    std::cout << "a" << i + 1 << std::string(i + 1 < 10 ? 14 : 13, ' ') << to_string(r.roots[i]) << "\n";
  std::cout << "P               " << to_string(r.p) << "\n";
  std::cout << "Q               " << to_string(r.q) << "\n";
  std::cout << "x*              " << to_string(r.witness_x) << " (" << r.witness_halvings << " halvings)\n";
  std::cout << "critical values";
  for (const auto& v : r.critical_values) std::cout << " " << to_string(v);
  std::cout << "\nverified snake  " << to_string(r.verified_snake) << "\n";
}

int cmd_realize(const Config& c) {
  require_format(c, {Format::Text, Format::Json}, "realize");
  RealizationResult r = realize_snake(parse_permutation(joined(c.inputs)), witness_options());
  if (c.format == Format::Json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_realization_text(r);
  return 0;
}

// Q at the witness from a realize JSON bundle; "-" reads stdin.
UniPoly polynomial_of_bundle(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) fail(ErrorKind::UsageError, "cannot open " + path);
      j = Json::parse(in);
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  RealizationResult r = realization_from_json(j);
  return r.q.at_x(r.witness_x);
}

int cmd_snake_of(const Config& c) {
  require_format(c, {Format::Text, Format::Json}, "snake-of");
  if (c.bundle.has_value() == !c.inputs.empty())
    fail(ErrorKind::UsageError, "give either a polynomial or --bundle");
  UniPoly p = c.bundle ? polynomial_of_bundle(*c.bundle) : parse_input_poly(joined(c.inputs));
  MorseCertificate cert = arnold_snake_of(p);
  if (c.format == Format::Json) {
    std::cout << to_json(cert).dump(2) << "\n";
    return 0;
  }
  std::cout << to_string(cert.critical_value_order) << "\n";
  return 0;
}

int cmd_valuation(const Config& c) {
  require_format(c, {Format::Text, Format::Json}, "valuation");
  std::vector<UniPoly> roots;
  if (c.random_leaves > 0) {
    if (!c.inputs.empty()) fail(ErrorKind::UsageError, "give roots or --random, not both");
    std::mt19937_64 rng(c.seed);
    // Random complete binary shape, realized with depth valuations.
    ContactTree shape;
    auto grow = [&](auto&& self, ContactTree::VertexId parent, std::size_t n, std::size_t depth) -> void {
      if (n == 1) {
        shape.add_leaf(parent);
        return;
      }
      auto v = shape.add_internal(parent, depth);
      std::size_t left = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
      self(self, v, left, depth + 1);
      self(self, v, n - left, depth + 1);
    };
    grow(grow, shape.root(), c.random_leaves, 1);
    shape.number_leaves();
    roots = realize_tree(shape);
  } else {
    if (c.inputs.size() < 2) fail(ErrorKind::UsageError, "valuation needs at least two roots");
    for (const auto& s : c.inputs) roots.push_back(parse_unipoly(s));
  }
  ContactTree t = contact_tree_of(roots);
  std::vector<AreaReportRow> rows;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    AreaReportRow row{area_valuation(t, i), area_valuation_oracle(roots, i)};
    if (row.profile.valuation != row.oracle_valuation)
      fail(ErrorKind::ContractViolation, "formula gives " + std::to_string(row.profile.valuation) +
                                             " but integration gives " + std::to_string(row.oracle_valuation) +
                                             " for S_" + std::to_string(i));
    rows.push_back(std::move(row));
  }
  if (c.format == Format::Json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    Json doc{{"roots", Json::array()}, {"areas", out}};
    for (const auto& a : roots) doc["roots"].push_back(to_string(a));
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) std::cout << "a" << i + 1 << " = " << to_string(roots[i]) << "\n";
  std::cout << std::left << std::setw(4) << "i" << std::setw(4) << "e" << std::setw(28) << "c (valuation:leaves)"
            << std::setw(9) << "formula" << std::setw(8) << "oracle"
            << "side\n";
  for (const auto& r : rows) {
    std::string cmap;
    for (const auto& term : r.profile.terms)
      cmap += (cmap.empty() ? "" : " ") + std::to_string(term.vertex_valuation) + ":" + std::to_string(term.leaf_count);
    std::cout << std::setw(4) << r.profile.index << std::setw(4) << r.profile.gap_valuation << std::setw(28) << cmap
              << std::setw(9) << r.profile.valuation << std::setw(8) << r.oracle_valuation
              << (r.profile.side == Side::Above ? "above" : "below") << "\n";
  }
  return 0;
}

int cmd_enumerate(const Config& c) {
  require_format(c, {Format::Text, Format::Json, Format::Csv}, "enumerate");
  if (c.max_n < 1 || c.max_n > kMaxCensusN)
    fail(ErrorKind::UsageError, "--max-n must be in 1.." + std::to_string(kMaxCensusN));
  CensusOptions options{c.verify, c.jobs};
  std::vector<CensusRow> rows;
  for (std::size_t n = 1; n <= c.max_n; ++n)
    rows.push_back(c.serial ? census_serial(n, options) : census_parallel(n, options));
  for (const auto& r : rows) {
    if (r.separability_disagreements != 0)
      fail(ErrorKind::ContractViolation, "separability tests disagree at n=" + std::to_string(r.n));
  }
  if (c.format == Format::Json) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
  } else if (c.format == Format::Csv) {
    std::cout << "n,permutations,snakes,separable,descending_separable_snakes";
    if (c.verify) std::cout << ",verified,failures";
    std::cout << "\n";
    for (const auto& r : rows) {
      std::cout << r.n << "," << r.permutations << "," << r.snakes << "," << r.separable_by_tree << ","
                << r.descending_separable_snakes;
      if (c.verify) std::cout << "," << r.realizations_verified << "," << r.realization_failures;
      std::cout << "\n";
    }
  } else {
    std::cout << std::right << std::setw(3) << "n" << std::setw(10) << "perms" << std::setw(8) << "snakes"
              << std::setw(11) << "separable" << std::setw(12) << "realizable";
    if (c.verify) std::cout << std::setw(10) << "verified" << std::setw(10) << "failures";
    std::cout << "\n";
    for (const auto& r : rows) {
      std::cout << std::setw(3) << r.n << std::setw(10) << r.permutations << std::setw(8) << r.snakes << std::setw(11)
                << r.separable_by_tree << std::setw(12) << r.descending_separable_snakes;
      if (c.verify) std::cout << std::setw(10) << r.realizations_verified << std::setw(10) << r.realization_failures;
      std::cout << "\n";
    }
  }
  for (const auto& r : rows)
    if (r.realization_failures != 0) return 4;
  return 0;
}

int cmd_plot_data(const Config& c) {
  require_format(c, {Format::Csv, Format::Text}, "plot-data");
  if (c.samples == 0) fail(ErrorKind::UsageError, "--samples must be positive");
  if (c.precision < 1 || c.precision > 100) fail(ErrorKind::UsageError, "--precision must be in 1..100");
  const std::string input = joined(c.inputs);
  UniPoly q;
  std::vector<Rational> marks;
  if (c.kind == "realize") {
    RealizationResult r = realize_snake(parse_permutation(input), witness_options());
    q = r.q.at_x(r.witness_x);
    for (const auto& a : r.roots) marks.push_back(a(r.witness_x));
  } else {
    q = parse_input_poly(input);
    if (q.degree() >= 2)
      for (const auto& root : isolate_critical_points(q)) marks.push_back(root.hi);
  }
  Rational lo = -1, hi = 1;
  if (!marks.empty()) {
    auto [mn, mx] = std::minmax_element(marks.begin(), marks.end());
    Rational span = *mx - *mn;
    Rational margin = span == 0 ? Rational(1) : Rational(span / 10);
    lo = *mn - margin;
    hi = *mx + margin;
  }
  if (c.lo) lo = parse_rational(*c.lo);
  if (c.hi) hi = parse_rational(*c.hi);
  if (hi < lo) fail(ErrorKind::UsageError, "empty plot range");
  std::cout << "y,value\n";
  for (std::size_t k = 0; k < c.samples; ++k) {
    Rational t = c.samples == 1 ? lo : Rational(lo + (hi - lo) * Rational(static_cast<long>(k)) /
                                                     Rational(static_cast<long>(c.samples - 1)));
    std::cout << to_decimal(t, c.precision) << "," << to_decimal(q(t), c.precision) << "\n";
  }
  return 0;
}

int cmd_export_tree(const Config& c) {
  require_format(c, {Format::Json, Format::Dot, Format::Text}, "export-tree");
  if (c.kind == "roots") {
    std::vector<UniPoly> roots;
    for (const auto& s : c.inputs) roots.push_back(parse_unipoly(s));
    ContactTree t = contact_tree_of(roots);
    std::cout << (c.format == Format::Dot ? to_dot(t) : to_json(t).dump(2) + "\n");
    return 0;
  }
  Permutation p = parse_permutation(joined(c.inputs));
  SignedTree tree = build_separating_tree(p);
  if (c.kind == "contact") {
    ContactTree t = contact_tree_of(realize_tree(contact_shape_of(tree)));
    std::cout << (c.format == Format::Dot ? to_dot(t) : to_json(t).dump(2) + "\n");
    return 0;
  }
  if (c.kind != "separating") fail(ErrorKind::UsageError, "--kind must be separating, contact or roots");
  if (c.format == Format::Dot)
    std::cout << to_dot(tree);
  else if (c.format == Format::Text)
    std::cout << to_text(tree) << "\n";
  else
    std::cout << to_json(tree).dump(2) << "\n";
  return 0;
}

int exit_code(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Usage: return 2;
    case ErrorCategory::Domain: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable snakes and the Morse polynomials that realize them"};
  app.require_subcommand(1);
  Config cfg;

  auto* check = app.add_subcommand("check", "Snake, separability and orientation of a permutation");
  check->add_option("permutation", cfg.inputs, "One-line notation")->required();

  auto* realize = app.add_subcommand("realize", "Build the Morse polynomial of a separable snake");
  realize->add_option("permutation", cfg.inputs, "One-line notation")->required();

  auto* snake_of = app.add_subcommand("snake-of", "Arnold snake of a Morse polynomial");
  snake_of->add_option("polynomial", cfg.inputs, "Polynomial in y (or x)");
  snake_of->add_option("--bundle", cfg.bundle, "JSON from realize --format json; - for stdin");

  auto* valuation = app.add_subcommand("valuation", "Area valuations of a root family");
  valuation->add_option("roots", cfg.inputs, "Roots a_1(x) < ... in increasing order");
  valuation->add_option("--random", cfg.random_leaves, "Use a random binary shape with this many leaves")
      ->check(CLI::Range(2, 64));
  valuation->add_option("--seed", cfg.seed, "Seed for --random");

  auto* enumerate = app.add_subcommand("enumerate", "Census of snakes and separable permutations");
  enumerate->add_option("--max-n", cfg.max_n, "Largest size");
  enumerate->add_flag("--verify", cfg.verify, "Realize every descending separable snake");
  enumerate->add_option("--jobs", cfg.jobs, "Threads")->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--serial", cfg.serial, "Use the single-threaded reference kernel");

  auto* plot = app.add_subcommand("plot-data", "Sampled (y, Q(y)) pairs as CSV");
  plot->add_option("input", cfg.inputs, "Polynomial, or permutation with --from realize")->required();
  plot->add_option("--from", cfg.kind, "poly or realize")->check(CLI::IsMember({"poly", "realize"}));
  plot->add_option("--samples", cfg.samples, "Number of rows");
  plot->add_option("--precision", cfg.precision, "Significant digits");
  plot->add_option("--lo", cfg.lo, "Left end of the range");
  plot->add_option("--hi", cfg.hi, "Right end of the range");

  auto* export_tree = app.add_subcommand("export-tree", "Separating or contact tree as JSON or DOT");
  export_tree->add_option("input", cfg.inputs, "Permutation, or roots with --kind roots")->required();
  export_tree->add_option("--kind", cfg.kind, "separating, contact or roots")
      ->check(CLI::IsMember({"separating", "contact", "roots"}));

  for (auto* sub : {check, realize, snake_of, valuation, enumerate, plot, export_tree})
    sub->add_option("--format", cfg.format, "json, text, dot or csv")->transform(CLI::CheckedTransformer(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*plot) {
      if (cfg.kind == "separating") cfg.kind = "poly";
      if (!plot->count("--format")) cfg.format = Format::Csv;
      return cmd_plot_data(cfg);
    }
    if (*check) return cmd_check(cfg);
    if (*realize) return cmd_realize(cfg);
    if (*snake_of) return cmd_snake_of(cfg);
    if (*valuation) return cmd_valuation(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*export_tree) {
      if (!export_tree->count("--format")) cfg.format = Format::Json;
      return cmd_export_tree(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
