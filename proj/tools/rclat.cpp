// Command-line front end for the counting, enumeration and verification code.
//
//   rclat count --n 6
//   rclat enumerate --n 6 --k 2 --format dot
//   rclat basic-blocks --k 2 --r 3
//   rclat decompose --in lattice.json --chain 0,1,4
//   rclat verify --max-n 7
//   rclat export --in lattice.json --format dot

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rclat/enumeration.hpp"
#include "rclat/io.hpp"
#include "rclat/oracle.hpp"
#include "rclat/parallel.hpp"
#include "rclat/structure.hpp"

using namespace rclat;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_config = 2;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> r;
  std::string format;
  std::string in;
  std::string chain;
  std::string archive;
  std::string out;
  int threads = 0;
  int oracle_limit = oracle::default_limit;
  int max_size = 0;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ConfigError("cannot open output file " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::vector<int> parse_chain(const std::string& text) {
  std::vector<int> chain;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      chain.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--chain expects comma-separated ids, got '" + item + "'");
    }
  }
  return chain;
}

std::string csv_field(std::optional<int> v, const char* fallback) { return v ? std::to_string(*v) : fallback; }

void csv_row(std::ostream& out, int n, std::optional<int> k, const char* k_fallback, std::optional<int> r,
             const char* r_fallback, const BigCount& count) {
  out << n << ',' << csv_field(k, k_fallback) << ',' << csv_field(r, r_fallback) << ',' << count << '\n';
}

// Strata rows n,k,r; r-rollup n,k,*; lattices of nullity k n,k,; total n,,.
void rows_for_nullity(std::ostream& out, int n, int k) {
  for (int r = 2; r <= 2 * k && k + r <= n; ++r) csv_row(out, n, k, "", r, "", count_blocks(n, k, r));
  csv_row(out, n, k, "", std::nullopt, "*", count_blocks_nullity(n, k));
  csv_row(out, n, k, "", std::nullopt, "", count_rc_lattices(n, k));
}

int run_count(const RunConfig& cfg, std::ostream& sink) {
  const int n = *cfg.n;
  if (cfg.r && !cfg.k) throw ConfigError("--r requires --k");
  std::ostringstream out;
  out << "n,k,r,count\n";
  if (cfg.k && cfg.r) {
    csv_row(out, n, cfg.k, "", cfg.r, "", count_blocks(n, *cfg.k, *cfg.r));
  } else if (cfg.k) {
    rows_for_nullity(out, n, *cfg.k);
  } else {
    for (int k = 1; k <= n - 3; ++k) rows_for_nullity(out, n, k);
    csv_row(out, n, std::nullopt, "", std::nullopt, "", count_rc_total(n));
  }
  sink << out.str();
  return exit_ok;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "json" && cfg.format != "dot") throw ConfigError("enumerate supports --format json|dot");
  const auto lattices = enumerate_rc_lattices(*cfg.n, *cfg.k, cfg.r.value_or(0));
  std::size_t index = 0;
  for (const auto& e : lattices) {
    if (cfg.format == "json")
      out << enumerated_to_json(e).dump() << '\n';
    else
      out << to_dot(e.lattice.poset(), "L" + std::to_string(index));
    ++index;
  }
  return exit_ok;
}

int run_basic_blocks(const RunConfig& cfg, std::ostream& out) {
  const int max_size = cfg.max_size > 0 ? cfg.max_size : std::numeric_limits<int>::max();
  const auto family = gen_basic_blocks(*cfg.r, *cfg.k, Exec::parallel, max_size);
  for (const auto& b : family.blocks) {
    json j = poset_to_json(b.lattice.poset());
    json pairs = json::array();
    for (const auto& [pair, multiplicity] : b.code.pairs)
      pairs.push_back({pair.first, pair.second, multiplicity});
    j["code"] = {{"r", b.code.r}, {"pairs", std::move(pairs)}};
    j["key"] = b.key.hex();
    out << j.dump() << '\n';
  }
  return exit_ok;
}

int run_decompose(const RunConfig& cfg, std::ostream& out) {
  const Lattice l = as_lattice(poset_from_json(read_json_file(cfg.in)));
  const std::vector<int> chain = cfg.chain.empty() ? maximal_chains(l).front() : parse_chain(cfg.chain);
  out << decomposition_to_json(adjunct_decompose(l, chain)).dump() << '\n';
  return exit_ok;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  oracle::VerifyOptions options;
  options.n_max = *cfg.n;
  options.limit = cfg.oracle_limit;
  const auto report = oracle::verify_all(options);
  oracle::print_report(out, report);
  if (!cfg.archive.empty()) {
    std::ofstream archive(cfg.archive);
    if (!archive) throw ConfigError("cannot open archive file " + cfg.archive);
    for (const auto& level : oracle::enumerate_posets_upto(options.n_max, Exec::parallel, options.limit))
      oracle::write_census_archive(archive, level);
  }
  return report.ok() ? exit_ok : exit_verification;
}

int run_export(const RunConfig& cfg, std::ostream& out) {
  const Poset p = poset_from_json(read_json_file(cfg.in));
  if (cfg.format == "dot")
    out << to_dot(p);
  else if (cfg.format == "json")
    out << poset_to_json(p).dump() << '\n';
  else
    throw ConfigError("export supports --format dot|json");
  return exit_ok;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting and enumeration of lattices with comparable reducible elements"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out, "Output file (default: standard output)");
  app.add_option("--oracle-limit", cfg.oracle_limit, "Largest census size the oracle may build")
      ->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Print block and lattice counts as CSV");
  count->add_option("--n", cfg.n, "Number of elements")->required()->check(CLI::PositiveNumber);
  count->add_option("--k", cfg.k, "Nullity");
  count->add_option("--r", cfg.r, "Number of reducible elements");

  auto* enumerate = app.add_subcommand("enumerate", "Stream RC lattices with n elements and nullity k");
  enumerate->add_option("--n", cfg.n, "Number of elements")->required();
  enumerate->add_option("--k", cfg.k, "Nullity")->required();
  enumerate->add_option("--r", cfg.r, "Number of reducible elements");
  cfg.format = "json";
  enumerate->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* blocks = app.add_subcommand("basic-blocks", "Stream the basic blocks with r reducibles and nullity k");
  blocks->add_option("--k", cfg.k, "Nullity")->required();
  blocks->add_option("--r", cfg.r, "Number of reducible elements")->required();
  blocks->add_option("--max-size", cfg.max_size, "Skip blocks with more elements");

  auto* decompose = app.add_subcommand("decompose", "Write a lattice as an adjunct sum of chains");
  decompose->add_option("--in", cfg.in, "Poset JSON file")->required();
  decompose->add_option("--chain", cfg.chain, "Base maximal chain, comma-separated ids");

  auto* verify = app.add_subcommand("verify", "Recheck every structural statement and count on the census");
  verify->add_option("--max-n", cfg.n, "Largest lattice size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--archive", cfg.archive, "Also write the poset census as JSON lines");

  auto* exporter = app.add_subcommand("export", "Convert a poset JSON file");
  exporter->add_option("--in", cfg.in, "Poset JSON file")->required();
  cfg.format = "json";
  exporter->add_option("--format", cfg.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("config", e.what());
    return exit_config;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  set_thread_count(cfg.threads);

  try {
    Output output(cfg.out);
    std::ostream& out = output.stream();
    if (cfg.command == "count") return run_count(cfg, out);
    if (cfg.command == "enumerate") return run_enumerate(cfg, out);
    if (cfg.command == "basic-blocks") return run_basic_blocks(cfg, out);
    if (cfg.command == "decompose") return run_decompose(cfg, out);
    if (cfg.command == "verify") return run_verify(cfg, out);
    return run_export(cfg, out);
  } catch (const oracle::LimitExceeded& e) {
    report_error("limit", e.what());
  } catch (const EnumerationError& e) {
    report_error("range", e.what());
  } catch (const StructureError& e) {
    report_error("structure", e.what());
  } catch (const PosetError& e) {
    report_error("poset", e.what());
  } catch (const NotALattice& e) {
    report_error("not-a-lattice", e.what());
  } catch (const json::exception& e) {
    report_error("input", e.what());
  } catch (const std::invalid_argument& e) {
    report_error("config", e.what());
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return exit_verification;
  }
  return exit_config;
}
