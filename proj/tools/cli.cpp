#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmss/certify.hpp"
#include "lmss/embedding.hpp"
#include "lmss/error.hpp"
#include "lmss/families.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/io.hpp"
#include "lmss/matching.hpp"
#include "lmss/stable.hpp"

namespace lmss::cli {
namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Input {
  std::string path;
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double probability = -1.0;
  CLI::Option* seed_option = nullptr;
};

struct Settings {
  std::string format = "text";
  std::size_t cap = Limits{}.enumeration_cap;
  std::size_t bf_cap = Limits{}.brute_force_cap;
  Limits limits() const { return Limits{bf_cap, cap}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FamilySpec family_spec(const Input& input) {
  FamilySpec spec;
  spec.family = parse_family(input.family);
  spec.n = input.n;
  if (input.seed_option != nullptr && input.seed_option->count() > 0) spec.seed = input.seed;
  if (input.probability >= 0.0) {
    spec.deletion_probability = input.probability;
    spec.edge_probability = input.probability;
  }
  return spec;
}

GraphDocument load(const Input& input, std::istream& in) {
  if (!input.family.empty()) {
    if (!input.path.empty()) throw UsageError("give either a graph file or --family, not both");
    return family_document(family_spec(input));
  }
  if (input.path.empty()) throw UsageError("no graph given (file, '-' for stdin, or --family)");
  if (input.path == "-") return parse_graph(in, Source::file);
  std::ifstream file(input.path);
  if (!file) throw UsageError("cannot open " + input.path);
  return parse_graph(file, Source::file);
}

void add_input(CLI::App* sub, Input& input) {
  sub->add_option("graph", input.path, "Graph file, or - for stdin");
  sub->add_option("--family", input.family, "Generate the input instead of reading it");
  sub->add_option("-n", input.n, "Family size parameter");
  input.seed_option = sub->add_option("--seed", input.seed, "Seed for the random families");
  sub->add_option("--probability", input.probability,
                  "Edge deletion (random_forest) or edge (random_graph) probability");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::accessibility_failure:
    case ErrorKind::internal_error:
      return kViolation;
    default:
      return kUsage;
  }
}

std::string selftest_json(const std::vector<certify::CriterionResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["title"] = r.title;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Local maximum stable sets of forests: enumeration, chains and greedoid checks",
               "lmss"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Settings settings;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--cap", settings.cap, "Largest graph order for exhaustive enumeration");
  app.add_option("--bf-cap", settings.bf_cap,
                 "Largest closed neighborhood searched by brute force");

  Input input;
  std::string set, s1, s2, strategy = "greedy";
  bool internal_cover = false, pendant_only = false, quick = false;

  auto* alpha_cmd = app.add_subcommand("alpha", "Stability number with a witness");
  auto* omega_cmd = app.add_subcommand("omega", "All maximum stable sets");
  auto* psi_cmd = app.add_subcommand("psi", "All local maximum stable sets, or test one");
  auto* matching_cmd = app.add_subcommand("matching", "Maximum matching of a forest");
  auto* ke_cmd = app.add_subcommand("ke-check", "Check alpha + mu = |V| on a forest");
  auto* embed_cmd = app.add_subcommand("embed", "Embed a forest into a perfect forest");
  auto* chain_cmd = app.add_subcommand("chain", "Accessibility chain ending at a set");
  auto* nt_cmd = app.add_subcommand("nt-extend", "Extend S1 in Psi to a maximum stable set");
  auto* exchange_cmd = app.add_subcommand("exchange", "Exchange witness for S1, S2 in Psi");
  auto* verify_cmd = app.add_subcommand("verify-greedoid", "Check both greedoid axioms");
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the certification corpus");

  for (CLI::App* sub : {alpha_cmd, omega_cmd, psi_cmd, matching_cmd, ke_cmd, embed_cmd,
                        chain_cmd, nt_cmd, exchange_cmd, verify_cmd}) {
    add_input(sub, input);
  }
  psi_cmd->add_option("--set", set, "Comma-separated labels to test");
  matching_cmd->add_flag("--internal-cover", internal_cover,
                         "Cover every vertex of degree at least two");
  embed_cmd->add_flag("--pendant-only", pendant_only, "Attach partners to pendant vertices only");
  chain_cmd->add_option("--set", set, "Target set")->required();
  chain_cmd->add_option("--strategy", strategy, "Chain construction")
      ->check(CLI::IsMember({"greedy", "constructive"}));
  for (CLI::App* sub : {nt_cmd, exchange_cmd}) {
    sub->add_option("--s1", s1, "Smaller set")->required();
    sub->add_option("--s2", s2, "Larger set")->required();
  }
  gen_cmd->add_option("--family", input.family, "Family name")->required();
  gen_cmd->add_option("-n", input.n, "Size parameter");
  auto* gen_seed = gen_cmd->add_option("--seed", input.seed, "Seed for the random families");
  gen_cmd->add_option("--probability", input.probability,
                      "Edge deletion (random_forest) or edge (random_graph) probability");
  selftest_cmd->add_flag("--quick", quick, "Smaller corpora");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // every input-taking subcommand registered its own --seed; keep the one used
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub == gen_cmd) {
      input.seed_option = gen_seed;
    } else if (auto* opt = sub->get_option_no_throw("--seed")) {
      input.seed_option = opt;
    }
  }

  try {
    const Format format = parse_format(settings.format);
    const Limits limits = settings.limits();

    if (selftest_cmd->parsed()) {
      const certify::Options options = quick ? certify::quick_options() : certify::Options{};
      const auto results = certify::run_all(options, [&](std::string_view line) {
        if (format == Format::text) err << "  " << line << '\n';
      });
      const bool all = std::all_of(results.begin(), results.end(),
                                   [](const auto& r) { return r.passed; });
      if (format == Format::json) {
        out << selftest_json(results);
      } else if (format == Format::text) {
        for (const auto& r : results) {
          out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " ("
              << std::fixed << std::setprecision(1) << r.seconds << " s): " << r.detail << '\n';
        }
      } else {
        throw Error(ErrorKind::unsupported_format, "selftest cannot be rendered as dot");
      }
      return all ? kOk : kViolation;
    }

    if (gen_cmd->parsed()) {
      out << emit(family_document(family_spec(input)), format);
      return kOk;
    }

    const GraphDocument doc = load(input, in);
    for (const std::string& w : doc.warnings) err << "warning: " << w << '\n';
    const Graph& g = doc.graph;

    if (alpha_cmd->parsed()) {
      out << emit(g, alpha(g, limits), format);
    } else if (omega_cmd->parsed()) {
      const std::size_t a = alpha(g, limits).size;
      out << emit(g, OmegaResult{a, enumerate_omega(g, limits)}, format);
    } else if (psi_cmd->parsed()) {
      if (psi_cmd->get_option("--set")->count() > 0) {
        const VertexSet s = parse_set(g, set);
        const bool stable = is_stable(g, s);
        out << emit(g, PsiQuery{s, stable, stable && is_local_max_stable(g, s, limits)}, format);
      } else {
        out << emit(enumerate_psi(g, limits), format);
      }
    } else if (matching_cmd->parsed()) {
      out << emit(g, internal_cover ? internal_cover_matching(g) : maximum_matching(g), format);
    } else if (ke_cmd->parsed()) {
      const KonigEgervaryReport report = verify_konig_egervary(g);
      out << emit(g, report, format);
      return report.identity_holds ? kOk : kViolation;
    } else if (embed_cmd->parsed()) {
      out << emit(embed_perfect(g, pendant_only ? EmbedMode::pendant_only : EmbedMode::any),
                  format);
    } else if (chain_cmd->parsed()) {
      const ChainStrategy which =
          strategy == "constructive" ? ChainStrategy::constructive : ChainStrategy::greedy_peel;
      out << emit(chain_decompose(g, parse_set(g, set), which, limits), format);
    } else if (nt_cmd->parsed()) {
      const VertexSet a = parse_set(g, s1);
      const VertexSet b = parse_set(g, s2);
      const VertexSet result = nt_extend(g, a, b, limits);
      out << emit(g, NtExtension{a, b, set_difference(result, a), result}, format);
    } else if (exchange_cmd->parsed()) {
      const ExchangeWitness w = exchange_witness(g, parse_set(g, s1), parse_set(g, s2), limits);
      out << emit(g, w, format);
      return w.witness ? kOk : kViolation;
    } else if (verify_cmd->parsed()) {
      const GreedoidReport report = verify_greedoid(g, limits);
      out << emit(g, report, format);
      return report.accessibility_ok && report.exchange_ok ? kOk : kViolation;
    }
    return kOk;
  } catch (const AccessibilityFailure& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lmss::cli
