// expdist: exp-edit distances between exponent-strings from the command line.
//
// Exit status: 0 success, 1 bad input or invalid cost model, 2 unreadable
// file, 3 incomplete cost model, 4 size guard exceeded, 5 oracle mismatch.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "expstr/cost_file.hpp"
#include "expstr/distance.hpp"
#include "expstr/matching.hpp"
#include "expstr/notation.hpp"
#include "json.hpp"

namespace {

using namespace expstr;

enum Exit { kOk = 0, kBadInput = 1, kUnreadable = 2, kIncomplete = 3, kGuard = 4, kMismatch = 5 };

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUnreadable, "cannot read '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct CommonOptions {
  std::string costs;
  std::string symbol_map;
  std::string backend = "expanded";
  std::size_t guard = kDefaultCellGuard;
  bool exact = false;
};

SymbolMap load_symbol_map(const CommonOptions& o) {
  if (o.symbol_map.empty()) return {};
  try {
    return parse_symbol_map(read_file(o.symbol_map));
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, o.symbol_map + ": " + e.what()};
  }
}

ExpString parse_input(const std::string& text, const SymbolMap& map) {
  try {
    return parse_notation(map.apply(text));
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, "'" + text + "': " + e.what()};
  }
}

NotationStyle parse_style(const std::string& name) {
  if (name == "fraction") return NotationStyle::fraction;
  if (name == "decimal") return NotationStyle::decimal_if_exact;
  throw Failure{kBadInput, "unknown style '" + name + "' (expected fraction or decimal)"};
}

void add_symbols(std::vector<Symbol>& alphabet, const ExpString& p) {
  for (Symbol s : symbols_of(p))
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) alphabet.push_back(s);
}

/// The model from --costs, checked over its alphabet plus the input symbols;
/// the unit model over the input symbols otherwise.
CostModel load_costs(const CommonOptions& o, std::vector<Symbol> alphabet) {
  if (o.costs.empty()) {
    if (alphabet.empty()) alphabet.push_back(Symbol('a'));  // any symbol; λ-only inputs need no costs
    return unit_cost_model(alphabet);
  }
  LoadedCostModel loaded;
  try {
    loaded = parse_cost_document(read_file(o.costs));
  } catch (const CostFileError& e) {
    throw Failure{kUnreadable, o.costs + ": " + e.what()};
  }
  for (Symbol s : loaded.alphabet)
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) alphabet.push_back(s);
  loaded.model.complete_substitutions(alphabet);
  auto check = validate(loaded.model, alphabet);
  if (check.status == CostValidation::Status::incomplete) throw Failure{kIncomplete, o.costs + ": " + check.message};
  if (!check.ok()) throw Failure{kBadInput, o.costs + ": " + check.message};
  return loaded.model;
}

Backend backend_of(const CommonOptions& o) {
  try {
    return parse_backend(o.backend);
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, e.what()};
  }
}

DistanceReport run_distance(const ExpString& p, const ExpString& q, const CostModel& m, const DistanceOptions& options) {
  try {
    return exp_edit_distance(p, q, m, options);
  } catch (const GuardExceeded& e) {
    throw Failure{kGuard, e.what()};
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, e.what()};
  } catch (const MissingCost& e) {
    throw Failure{kBadInput, e.what()};
  }
}

// -- dist ---------------------------------------------------------------------

struct DistOptions : CommonOptions {
  std::string first, second;
  bool script = false;
  bool oracle = false;
  std::size_t oracle_flen = kDefaultOracleFlen;
};

int cmd_dist(const DistOptions& o) {
  auto map = load_symbol_map(o);
  ExpString p = parse_input(o.first, map);
  ExpString q = parse_input(o.second, map);
  std::vector<Symbol> alphabet;
  add_symbols(alphabet, p);
  add_symbols(alphabet, q);
  CostModel m = load_costs(o, alphabet);

  DistanceOptions options{backend_of(o), o.script, o.guard};
  auto report = run_distance(p, q, m, options);
  std::cout << to_string(report.distance) << '\n';
  if (!o.exact) std::cout << "decimal " << to_approx_decimal(report.distance) << '\n';
  if (report.script) std::cout << format_script(*report.script);

  if (o.oracle) {
    Rational check;
    try {
      check = oracle_distance(p, q, m, o.oracle_flen);
    } catch (const GuardExceeded& e) {
      throw Failure{kGuard, std::string("oracle: ") + e.what()};
    }
    if (check != report.distance)
      throw Failure{kMismatch, "oracle disagrees: " + to_string(check) + " vs " + to_string(report.distance)};
    std::cout << "oracle agrees\n";
  }
  return kOk;
}

// -- pairwise -----------------------------------------------------------------

struct PairwiseOptions : CommonOptions {
  std::string document;
  std::string format = "tsv";
  unsigned threads = 0;
};

int cmd_pairwise(const PairwiseOptions& o) {
  if (o.format != "tsv" && o.format != "structured")
    throw Failure{kBadInput, "unknown format '" + o.format + "' (expected tsv or structured)"};
  auto map = load_symbol_map(o);
  NotationDocument doc;
  try {
    doc = parse_document(read_file(o.document), map);
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, o.document + ": " + e.what()};
  }
  const auto& entries = doc.entries;
  const std::size_t n = entries.size();

  std::vector<Symbol> alphabet;
  for (const auto& e : entries) add_symbols(alphabet, e.value);
  CostModel m = load_costs(o, alphabet);
  DistanceOptions options{backend_of(o), false, o.guard};

  // Workers claim cells by index; the matrix is printed only after all of
  // them finish, so output order never depends on scheduling.
  std::vector<Rational> matrix(n * n);
  std::atomic<std::size_t> next{0};
  std::optional<std::pair<std::size_t, Failure>> first_failure;  // earliest cell wins
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t cell; (cell = next.fetch_add(1)) < n * n;) {
      std::size_t i = cell / n, j = cell % n;
      if (i == j) continue;
      try {
        matrix[cell] = run_distance(entries[i].value, entries[j].value, m, options).distance;
      } catch (const Failure& f) {
        std::lock_guard lock(failure_lock);
        if (!first_failure || cell < first_failure->first)
          first_failure.emplace(cell, Failure{f.code, entries[i].id + " vs " + entries[j].id + ": " + f.message});
      }
    }
  };
  unsigned count = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_failure) throw first_failure->second;

  if (o.format == "tsv") {
    std::cout << "id";
    for (const auto& e : entries) std::cout << '\t' << e.id;
    std::cout << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << entries[i].id;
      for (std::size_t j = 0; j < n; ++j) std::cout << '\t' << to_string(matrix[i * n + j]);
      std::cout << '\n';
    }
    return kOk;
  }

  nlohmann::json out;
  out["ids"] = nlohmann::json::array();
  out["exact"] = nlohmann::json::array();
  if (!o.exact) out["decimal"] = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    out["ids"].push_back(entries[i].id);
    nlohmann::json exact_row = nlohmann::json::array(), decimal_row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      exact_row.push_back(to_string(matrix[i * n + j]));
      decimal_row.push_back(matrix[i * n + j].get_d());
    }
    out["exact"].push_back(exact_row);
    if (!o.exact) out["decimal"].push_back(decimal_row);
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// -- validate-costs -----------------------------------------------------------

struct ValidateOptions {
  std::string file;
  std::string alphabet;
};

int cmd_validate(const ValidateOptions& o) {
  LoadedCostModel loaded;
  try {
    loaded = parse_cost_document(read_file(o.file));
  } catch (const CostFileError& e) {
    throw Failure{kUnreadable, o.file + ": " + e.what()};
  }
  std::vector<Symbol> alphabet = loaded.alphabet;
  try {
    for (char32_t c : decode_utf8(o.alphabet))
      if (std::find(alphabet.begin(), alphabet.end(), Symbol(c)) == alphabet.end()) alphabet.emplace_back(c);
  } catch (const std::invalid_argument& e) {
    throw Failure{kBadInput, std::string("--alphabet: ") + e.what()};
  }
  loaded.model.complete_substitutions(alphabet);
  auto v = validate(loaded.model, alphabet);
  switch (v.status) {
    case CostValidation::Status::valid:
      std::cout << "valid\n";
      return kOk;
    case CostValidation::Status::incomplete:
      std::cout << "incomplete: " << v.message << '\n';
      return kIncomplete;
    case CostValidation::Status::invalid:
      std::cout << "invalid: " << v.message << '\n';
      if (v.witness) {
        const auto& [x, y, z] = *v.witness;
        std::cout << "witness " << to_string(x) << " -> " << to_string(y) << " -> " << to_string(z) << '\n';
      }
      return kBadInput;
  }
  return kBadInput;
}

// -- canon --------------------------------------------------------------------

struct CanonOptions {
  std::vector<std::string> inputs;
  std::string style = "fraction";
  std::string symbol_map;
};

int cmd_canon(const CanonOptions& o) {
  CommonOptions c;
  c.symbol_map = o.symbol_map;
  auto map = load_symbol_map(c);
  NotationStyle style = parse_style(o.style);
  for (const auto& text : o.inputs) std::cout << format_notation(parse_input(text, map), style) << '\n';
  return kOk;
}

// -- oracle -------------------------------------------------------------------

struct OracleOptions : CommonOptions {
  std::string first, second;
  std::size_t max_flen = kDefaultOracleFlen;
  bool dump = false;
};

int cmd_oracle(const OracleOptions& o) {
  auto map = load_symbol_map(o);
  ExpString p = parse_input(o.first, map);
  ExpString q = parse_input(o.second, map);
  std::vector<Symbol> alphabet;
  add_symbols(alphabet, p);
  add_symbols(alphabet, q);
  CostModel m = load_costs(o, alphabet);
  OracleResult result;
  try {
    result = oracle_solve(p, q, m, o.max_flen);
  } catch (const GuardExceeded& e) {
    throw Failure{kGuard, e.what()};
  }
  std::cout << to_string(result.distance) << '\n';
  if (!o.exact) std::cout << "decimal " << to_approx_decimal(result.distance) << '\n';
  std::cout << "chains " << result.chains_examined << '\n';
  if (o.dump) std::cout << dump_matching(result.matching);
  return kOk;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_backend) {
  cmd->add_option("--costs", o.costs, "JSON cost model (default: unit costs over the input symbols)");
  cmd->add_option("--symbol-map", o.symbol_map, "token<TAB>symbol rewrites applied before parsing");
  cmd->add_flag("--exact", o.exact, "print only exact rationals");
  if (with_backend) {
    cmd->add_option("--backend", o.backend, "expanded | run-block");
    cmd->add_option("--guard", o.guard, "cell limit for the expanded backend");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exp-edit distance between exponent-strings"};
  app.require_subcommand(1);

  DistOptions dist;
  auto* dist_cmd = app.add_subcommand("dist", "distance between two notations");
  dist_cmd->add_option("first", dist.first)->required();
  dist_cmd->add_option("second", dist.second)->required();
  add_common(dist_cmd, dist, true);
  dist_cmd->add_flag("--script", dist.script, "print an optimal edit script");
  dist_cmd->add_flag("--oracle", dist.oracle, "cross-check against the matching oracle");
  dist_cmd->add_option("--oracle-flen", dist.oracle_flen, "factor limit per string for --oracle");

  PairwiseOptions pairwise;
  auto* pairwise_cmd = app.add_subcommand("pairwise", "distance matrix over an id<TAB>notation file");
  pairwise_cmd->add_option("document", pairwise.document)->required();
  add_common(pairwise_cmd, pairwise, true);
  pairwise_cmd->add_option("--format", pairwise.format, "tsv | structured");
  pairwise_cmd->add_option("--threads", pairwise.threads, "worker threads (default: hardware)");

  ValidateOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate-costs", "check a cost model file");
  validate_cmd->add_option("file", validate_opts.file)->required();
  validate_cmd->add_option("--alphabet", validate_opts.alphabet, "extra symbols the model must cover");

  CanonOptions canon;
  auto* canon_cmd = app.add_subcommand("canon", "print notations in canonical form");
  canon_cmd->add_option("notation", canon.inputs)->required();
  canon_cmd->add_option("--style", canon.style, "fraction | decimal");
  canon_cmd->add_option("--symbol-map", canon.symbol_map);

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "distance by exhaustive matching search (small inputs)");
  oracle_cmd->add_option("first", oracle.first)->required();
  oracle_cmd->add_option("second", oracle.second)->required();
  add_common(oracle_cmd, oracle, false);
  oracle_cmd->add_option("--max-flen", oracle.max_flen, "factor limit per string");
  oracle_cmd->add_flag("--dump", oracle.dump, "print the optimal matching as x0 y0 h lines");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dist_cmd) return cmd_dist(dist);
    if (*pairwise_cmd) return cmd_pairwise(pairwise);
    if (*validate_cmd) return cmd_validate(validate_opts);
    if (*canon_cmd) return cmd_canon(canon);
    if (*oracle_cmd) return cmd_oracle(oracle);
  } catch (const Failure& f) {
    std::cerr << "expdist: " << f.message << '\n';
    return f.code;
  }
  return kBadInput;
}
