#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "maxord/output.hpp"
#include "maxord/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // a mathematical claim failed to check out
constexpr int kExitUsage = 2;

// stdout unless --out was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("--out", "cannot open " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void line(const std::string& s) { stream() << s << "\n"; }

 private:
  std::ofstream file_;
};

std::vector<maxord::FieldSize> parse_q_list(const std::string& arg) {
  std::vector<maxord::FieldSize> qs;
  size_t pos = 0;
  while (pos <= arg.size()) {
    const size_t comma = arg.find(',', pos);
    const std::string item =
        arg.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty entry in q list");
    qs.push_back(maxord::FieldSize::of(std::stoul(item)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (qs.empty()) throw std::invalid_argument("q list is empty");
  return qs;
}

unsigned resolve_threads(unsigned flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("MAXORD_THREADS")) {
    const long n = std::atol(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

maxord::SearchMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return maxord::SearchMode::exhaustive;
  if (mode == "pruned") return maxord::SearchMode::distinct_pruned;
  throw std::invalid_argument("mode must be exhaustive or pruned");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum element orders of even-characteristic symplectic groups"};
  app.require_subcommand(1);

  unsigned long m = 1, m_max = 8;
  std::string q_arg = "2";
  std::string mode_name = "exhaustive";
  std::string format = "json";
  std::string suite_name;
  std::string out_path;
  bool aut = false, witness = false;
  unsigned threads = 0;
  uint64_t samples = 10000, seed = 0, tuples = 1000;

  auto* cmd_formula = app.add_subcommand("formula", "Evaluate the closed formula");
  cmd_formula->add_option("--m", m, "Rank m >= 1")->required();
  cmd_formula->add_option("--q", q_arg, "Field size, a power of 2")->required();
  cmd_formula->add_flag("--aut", aut, "Maximum over the full automorphism group");
  cmd_formula->add_option("--out", out_path, "Write output to a file");

  auto* cmd_table = app.add_subcommand("table", "Emit rows m = 1..m-max");
  cmd_table->add_option("--m-max", m_max, "Last row")->required();
  cmd_table->add_option("--q", q_arg, "Field size, a power of 2")->required();
  cmd_table->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_table->add_option("--out", out_path, "Write output to a file");

  auto* cmd_search = app.add_subcommand("search", "Maximize over signed partitions");
  cmd_search->add_option("--m", m, "Rank m >= 1")->required();
  cmd_search->add_option("--q", q_arg, "Field size, a power of 2")->required();
  cmd_search->add_option("--mode", mode_name, "exhaustive or pruned")
      ->check(CLI::IsMember({"exhaustive", "pruned"}));
  cmd_search->add_flag("--witness", witness, "Include the maximizing pair");
  cmd_search->add_option("--threads", threads, "Worker threads (0 = auto)");
  cmd_search->add_option("--out", out_path, "Write output to a file");

  auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  cmd_verify
      ->add_option("--suite", suite_name,
                   "theorem2, bounds, gcd, babylonians, cyclotomic or table")
      ->required();
  cmd_verify->add_option("--m-max", m_max, "Range bound (suite-specific)");
  cmd_verify->add_option("--q", q_arg, "Field size or comma list");
  cmd_verify->add_option("--mode", mode_name, "theorem2 search mode")
      ->check(CLI::IsMember({"exhaustive", "pruned"}));
  cmd_verify->add_option("--seed", seed, "Tuple generation seed (babylonians)");
  cmd_verify->add_option("--tuples", tuples, "Tuple count (babylonians)");
  cmd_verify->add_option("--threads", threads, "Worker threads (0 = auto)");
  cmd_verify->add_option("--out", out_path, "Write the report to a file");

  auto* cmd_sample = app.add_subcommand("sample", "Sample element orders in the group");
  cmd_sample->add_option("--m", m, "Rank; (m, q) must be a supported pair")->required();
  cmd_sample->add_option("--q", q_arg, "Field size, a power of 2")->required();
  cmd_sample->add_option("--samples", samples, "Number of sampled elements");
  cmd_sample->add_option("--seed", seed, "Base RNG seed");
  cmd_sample->add_option("--out", out_path, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Sink sink(out_path);
    if (cmd_formula->parsed()) {
      const auto qs = parse_q_list(q_arg);
      if (qs.size() != 1) throw std::invalid_argument("formula takes a single q");
      sink.line(maxord::formula_record(m, qs[0], aut).dump());
      return kExitOk;
    }
    if (cmd_table->parsed()) {
      const auto qs = parse_q_list(q_arg);
      if (qs.size() != 1) throw std::invalid_argument("table takes a single q");
      if (m_max == 0) throw std::invalid_argument("m-max must be >= 1");
      if (format == "csv") sink.line(maxord::table_csv_header());
      for (unsigned long row = 1; row <= m_max; ++row) {
        if (format == "csv")
          sink.line(maxord::table_csv_row(row, qs[0]));
        else
          sink.line(maxord::table_record(row, qs[0]).dump());
      }
      return kExitOk;
    }
    if (cmd_search->parsed()) {
      const auto qs = parse_q_list(q_arg);
      if (qs.size() != 1) throw std::invalid_argument("search takes a single q");
      const maxord::SearchReport report =
          maxord::maximize(m, qs[0], parse_mode(mode_name), resolve_threads(threads));
      sink.line(maxord::search_record(report, witness).dump());
      return report.agrees_with_formula ? kExitOk : kExitViolation;
    }
    if (cmd_verify->parsed()) {
      const auto suite = maxord::parse_suite(suite_name);
      if (!suite) throw std::invalid_argument("unknown suite: " + suite_name);
      maxord::VerifyOptions options;
      options.m_max = m_max;
      options.qs = parse_q_list(q_arg);
      options.mode = parse_mode(mode_name);
      options.threads = resolve_threads(threads);
      options.seed = seed;
      options.tuples = tuples;
      if (options.m_max == 0) throw std::invalid_argument("m-max must be >= 1");
      const bool ok = maxord::run_verify_suite(
          *suite, options, [&](const maxord::Json& rec) { sink.line(rec.dump()); });
      return ok ? kExitOk : kExitViolation;
    }
    if (cmd_sample->parsed()) {
      const auto qs = parse_q_list(q_arg);
      if (qs.size() != 1) throw std::invalid_argument("sample takes a single q");
      const maxord::SampleReport report =
          maxord::sample_max_order(m, qs[0], samples, seed);
      sink.line(maxord::sample_record(report).dump());
      return report.violated ? kExitViolation : kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
