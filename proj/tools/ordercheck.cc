#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordercheck/ehrhart.hpp"
#include "ordercheck/errors.hpp"
#include "ordercheck/formats.hpp"
#include "ordercheck/generate.hpp"
#include "ordercheck/sturm.hpp"
#include "ordercheck/sweep.hpp"
#include "ordercheck/verify.hpp"

namespace {

using namespace ordercheck;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

OmegaAlgorithm parse_algorithm(const std::string& name) {
  if (name == "linear") return OmegaAlgorithm::kLinear;
  if (name == "ideals") return OmegaAlgorithm::kIdeals;
  if (name == "auto") return OmegaAlgorithm::kAuto;
  throw CLI::ValidationError("--algorithm must be linear|ideals|auto");
}

// First non-empty record line from --input or stdin.
std::string read_record(const std::string& input_path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!input_path.empty()) {
    file.open(input_path);
    if (!file) throw IoError("cannot open " + input_path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>digraph6<<") continue;
    return line;
  }
  throw IoError("no record found on input");
}

std::vector<mpq_class> coefficients(const RatPolynomial& poly) {
  std::vector<mpq_class> out(poly.degree() + 1, mpq_class(0));
  for (int k = 0; k <= poly.degree(); ++k) out[k] = poly.coeff(k);
  if (out.empty()) out.emplace_back(0);
  return out;
}

void print_tokens(const std::vector<mpq_class>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << rational_token(coeffs[i]);
  }
  std::cout << '\n';
}

IntPolynomial parse_coeff_list(const std::string& list) {
  IntPolynomial out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty coefficient");
    out.emplace_back(item);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive order-polytope verification toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate all posets on p elements");
  int gen_p = 0;
  std::uint32_t gen_shards = 1, gen_shard = 0;
  std::string gen_format = "digraph6";
  std::string gen_output;
  gen->add_option("-p", gen_p, "element count")->required();
  gen->add_option("--shards", gen_shards, "number of shards");
  gen->add_option("--shard", gen_shard, "shard index to generate");
  gen->add_option("--format", gen_format, "digraph6|canon")
      ->check(CLI::IsMember({"digraph6", "canon"}));
  gen->add_option("--output", gen_output, "output file (default stdout)");

  // omega / ehr / hstar
  std::string record_input, record_algorithm = "auto";
  auto add_record_cmd = [&](const char* name, const char* desc) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--input", record_input,
                    "file holding one digraph6 or canonical record");
    cmd->add_option("--algorithm", record_algorithm, "linear|ideals|auto")
        ->check(CLI::IsMember({"linear", "ideals", "auto"}));
    return cmd;
  };
  auto* omega_cmd =
      add_record_cmd("omega", "order polynomial of one poset record");
  auto* ehr_cmd =
      add_record_cmd("ehr", "Ehrhart polynomial of one poset record");
  auto* hstar_cmd = add_record_cmd("hstar", "h* vector of one poset record");

  // sturm
  auto* sturm_cmd =
      app.add_subcommand("sturm", "distinct real roots of an integer polynomial");
  std::string sturm_coeffs;
  sturm_cmd->add_option("--coeffs", sturm_coeffs, "a0,a1,...,am")->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "sweep a poset source and certify it");
  SweepConfig cfg;
  std::string verify_algorithm = "auto";
  verify_cmd->add_option("-p", cfg.p, "element count (generate source)");
  verify_cmd->add_option("--input", cfg.input_path, "digraph6 file source");
  verify_cmd->add_option("--algorithm", verify_algorithm, "linear|ideals|auto")
      ->check(CLI::IsMember({"linear", "ideals", "auto"}));
  verify_cmd->add_option("--jobs", cfg.jobs, "worker threads");
  verify_cmd->add_option("--shards", cfg.shard_count, "number of shards");
  verify_cmd->add_option("--shard", cfg.shard_index, "shard index");
  verify_cmd->add_option("--checkpoint", cfg.checkpoint_path,
                         "checkpoint file for interrupt/resume");
  verify_cmd->add_option("--output", cfg.output_path,
                         "JSONL record output (default stdout)");
  verify_cmd->add_flag("--summary-only", cfg.summary_only,
                       "suppress per-poset records (counterexamples still "
                       "written)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!gen_output.empty()) {
        file.open(gen_output);
        if (!file) throw IoError("cannot open output " + gen_output);
        out = &file;
      }
      const bool canon = gen_format == "canon";
      generate_all(GenerationShard{gen_p, gen_shard, gen_shards},
                   [&](const Poset& P) {
                     (*out) << (canon ? format_canonical(P)
                                      : encode_digraph6(P))
                            << '\n';
                   });
      return kExitPass;
    }

    if (omega_cmd->parsed() || ehr_cmd->parsed() || hstar_cmd->parsed()) {
      const Poset P = parse_poset_line(read_record(record_input));
      const OmegaAlgorithm alg = parse_algorithm(record_algorithm);
      if (omega_cmd->parsed()) {
        print_tokens(coefficients(order_polynomial(P, alg)));
      } else if (ehr_cmd->parsed()) {
        print_tokens(coefficients(ehrhart_polynomial(P, alg)));
      } else {
        const HStarVector h = hstar_from_ehrhart(ehrhart_polynomial(P, alg),
                                                 P.size());
        for (std::size_t i = 0; i < h.h.size(); ++i) {
          if (i) std::cout << ' ';
          std::cout << h.h[i].get_str();
        }
        std::cout << '\n';
      }
      return kExitPass;
    }

    if (sturm_cmd->parsed()) {
      const IntPolynomial f = parse_coeff_list(sturm_coeffs);
      const int roots = count_distinct_real_roots(f);
      std::cout << "distinct_real_roots: " << roots << '\n'
                << "real_rooted: " << (is_real_rooted(f) ? "true" : "false")
                << '\n';
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      cfg.algorithm = parse_algorithm(verify_algorithm);
      if (cfg.input_path.empty() && cfg.p == 0)
        throw IoError("verify needs -p or --input");
      const SweepSummary summary = sweep(cfg);
      std::cerr << summary.to_json() << '\n';
      return summary.counterexamples() == 0 ? kExitPass : kExitCounterexample;
    }
  } catch (const HStarMismatch& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InternalInvariant& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
