#include "lmss/certify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <utility>

#include "lmss/embedding.hpp"
#include "lmss/families.hpp"
#include "lmss/graph.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/io.hpp"
#include "lmss/matching.hpp"
#include "lmss/oracle.hpp"
#include "lmss/stable.hpp"

namespace lmss::certify {
namespace {

using Clock = std::chrono::steady_clock;

// Per-criterion failure counter that keeps the first few explanations.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void fail(std::string note) {
    ++checks;
    ++failures;
    if (notes.size() < 3) notes.push_back(std::move(note));
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (ok) {
      ++checks;
      return;
    }
    fail(describe());
  }

  bool passed() const { return failures == 0 && checks > 0; }

  std::string tail() const {
    std::string out = "; " + std::to_string(checks) + " checks, " +
                      std::to_string(failures) + " failures";
    for (const std::string& note : notes) out += "\n    " + note;
    return out;
  }
};

// Wall-clock accumulator for a criterion whose work is interleaved with others.
struct Stopwatch {
  double seconds = 0.0;
  template <class Fn>
  void time(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    seconds += std::chrono::duration<double>(Clock::now() - start).count();
  }
};

std::string describe(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ' ';
    first = false;
    out += g.label(e.u) + "-" + g.label(e.v);
  }
  return out + "]";
}

std::string describe(const Graph& g, const VertexSet& s) {
  return describe(g) + " S=" + g.format(s);
}

// Runs `body`, turning any exception into a recorded failure.
template <class Fn>
void guarded(Tally& tally, const std::function<std::string()>& where, Fn&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.fail(where() + ": " + e.what());
  }
}

std::vector<VertexSet> as_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

// Certificate check for a perfect matching: edges of `g`, pairwise disjoint,
// covering every vertex.
bool is_perfect_matching(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<char> seen(g.order(), 0);
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
    if (seen[e.u] || seen[e.v]) return false;
    seen[e.u] = seen[e.v] = 1;
  }
  return 2 * edges.size() == g.order();
}

// König–Egerváry, internal cover matching and both embedding modes on one
// forest. `alpha_ref` comes from an oracle.
void check_structure(const Graph& g, std::size_t alpha_ref, Tally& tally) {
  const std::size_t n = g.order();
  const std::size_t mu_ref = oracle::naive_matching_number(g);

  const KonigEgervaryReport ke = verify_konig_egervary(g);
  tally.expect(ke.alpha == alpha_ref && ke.mu == mu_ref && ke.alpha + ke.mu == n &&
                   ke.identity_holds && ke.has_perfect_matching == (2 * mu_ref == n),
               [&] {
                 return "ke-check " + describe(g) + ": alpha " + std::to_string(ke.alpha) +
                        " mu " + std::to_string(ke.mu) + ", oracle " +
                        std::to_string(alpha_ref) + "/" + std::to_string(mu_ref);
               });

  const Matching internal = internal_cover_matching(g);
  bool internal_ok = internal.size() == mu_ref;
  std::vector<char> seen(n, 0);
  for (const Edge& e : internal.edges) {
    internal_ok = internal_ok && g.adjacent(e.u, e.v) && !seen[e.u] && !seen[e.v];
    seen[e.u] = seen[e.v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v] && g.degree(v) >= 2) internal_ok = false;
  }
  tally.expect(internal_ok, [&] { return "internal cover matching " + describe(g); });

  for (EmbedMode mode : {EmbedMode::any, EmbedMode::pendant_only}) {
    const Embedding emb = embed_perfect(g, mode);
    const Graph& host = emb.host;
    std::vector<Edge> perfect =
        mode == EmbedMode::any ? maximum_matching(g).edges : internal.edges;
    bool ok = emb.added_edges.size() == n - 2 * mu_ref && host.order() == n + emb.added_edges.size() &&
              emb.original_vertices == g.vertices() && is_forest(host) &&
              induced_subgraph(host, emb.original_vertices) == g;
    for (const Edge& e : emb.added_edges) {
      ok = ok && e.u < n && e.v >= n && host.degree(e.v) == 1;
      if (mode == EmbedMode::pendant_only) ok = ok && g.degree(e.u) <= 1;
      perfect.push_back(make_edge(e.u, e.v));
    }
    ok = ok && is_perfect_matching(host, perfect) &&
         forest_alpha(host).size == alpha_ref;
    tally.expect(ok, [&] {
      return "embed (" + std::string(to_string(mode)) + ") " + describe(g);
    });
  }
}

// Forest-DP and brute-force α against the oracle table.
void check_alpha(const Graph& g, const oracle::SubsetTable& table, Tally& tally) {
  const StableSetResult dp = forest_alpha(g);
  const StableSetResult bf = brute_force_alpha(g);
  const auto ref = static_cast<std::size_t>(table.alpha());
  tally.expect(dp.size == ref && bf.size == ref && dp.set.size() == ref &&
                   table.is_maximum(dp.set.to_mask()) && table.is_maximum(bf.set.to_mask()),
               [&] {
                 return "alpha " + describe(g) + ": dp " + std::to_string(dp.size) + " bf " +
                        std::to_string(bf.size) + " oracle " + std::to_string(ref);
               });
}

void check_psi_against_oracle(const PsiFamily& psi, const oracle::SubsetTable& table,
                              Tally& tally) {
  tally.expect(psi.members == as_sets(table.psi()),
               [&] { return "psi enumeration differs from oracle " + describe(psi.graph); });
}

struct Sweep {
  Tally greedoid, chains, exchange, structure, oracle_eq;
  Stopwatch t_greedoid, t_chains, t_exchange, t_structure, t_oracle;
  std::size_t trees = 0, psi_sets = 0, exchange_pairs = 0, omega_pairs = 0;
};

void sweep_tree(const Graph& t, Sweep& sw) {
  const auto where = [&] { return describe(t); };
  const oracle::SubsetTable table(t);
  PsiFamily psi;
  guarded(sw.greedoid, where, [&] {
    sw.t_greedoid.time([&] {
      psi = enumerate_psi(t);
      const GreedoidReport report = verify_greedoid(psi);
      sw.greedoid.expect(report.accessibility_ok && report.exchange_ok,
                         [&] { return "greedoid violation on " + describe(t); });
    });
  });
  sw.psi_sets += psi.members.size();

  sw.t_chains.time([&] {
    for (const VertexSet& s : psi.members) {
      for (ChainStrategy strategy : {ChainStrategy::greedy_peel, ChainStrategy::constructive}) {
        guarded(sw.chains, [&] { return describe(t, s); }, [&] {
          const ChainCertificate cert = chain_decompose(t, s, strategy);
          bool ok = validate_chain(cert, s) && cert.chain.size() == s.size();
          std::uint64_t prev = 0;
          for (std::size_t i = 0; ok && i < cert.chain.size(); ++i) {
            const std::uint64_t m = cert.chain[i].to_mask();
            ok = (m & prev) == prev && std::popcount(m) == static_cast<int>(i + 1) &&
                 table.is_local_max(m);
            prev = m;
          }
          ok = ok && prev == s.to_mask();
          sw.chains.expect(ok, [&] {
            return std::string(to_string(strategy)) + " chain invalid for " + describe(t, s);
          });
        });
      }
    }
  });

  sw.t_exchange.time([&] {
    const auto& members = psi.members;
    // members are ordered by size; walk adjacent size levels
    std::size_t lo = 0;
    while (lo < members.size()) {
      std::size_t mid = lo;
      while (mid < members.size() && members[mid].size() == members[lo].size()) ++mid;
      std::size_t hi = mid;
      while (hi < members.size() && members[hi].size() == members[lo].size() + 1) ++hi;
      for (std::size_t i = lo; i < mid; ++i) {
        for (std::size_t j = mid; j < hi; ++j) {
          const VertexSet& s1 = members[i];
          const VertexSet& s2 = members[j];
          ++sw.exchange_pairs;
          guarded(sw.exchange, [&] { return describe(t, s1) + " S2=" + t.format(s2); }, [&] {
            const ExchangeWitness w = exchange_witness(t, s1, s2);
            bool ok = w.witness.has_value() && s2.contains(*w.witness) &&
                      !s1.contains(*w.witness);
            if (ok) {
              const std::uint64_t grown = s1.to_mask() | (std::uint64_t{1} << *w.witness);
              ok = table.is_local_max(grown);
              if (table.is_maximum(s2.to_mask())) {
                ++sw.omega_pairs;
                ok = ok && table.is_maximum(grown);
              }
            }
            sw.exchange.expect(ok, [&] {
              return "no valid exchange for " + describe(t, s1) + " S2=" + t.format(s2);
            });
          });
        }
      }
      lo = mid;
    }
  });

  guarded(sw.structure, where, [&] {
    sw.t_structure.time([&] {
      check_structure(t, static_cast<std::size_t>(table.alpha()), sw.structure);
    });
  });
  guarded(sw.oracle_eq, where, [&] {
    sw.t_oracle.time([&] {
      check_alpha(t, table, sw.oracle_eq);
      check_psi_against_oracle(psi, table, sw.oracle_eq);
    });
  });
}

CriterionResult finish(int id, std::string title, const Tally& tally, std::string detail,
                       double seconds) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.passed = tally.passed();
  r.detail = std::move(detail) + tally.tail();
  r.seconds = seconds;
  return r;
}

FamilySpec fixed_spec(Family family, std::size_t n) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  return spec;
}

FamilySpec random_spec(Family family, std::size_t n, std::uint64_t seed) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  return spec;
}

// Nonempty members of Ψ with no single-vertex deletion in Ψ, straight from
// the oracle table.
std::vector<VertexSet> oracle_accessibility_violations(const oracle::SubsetTable& table) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : table.psi()) {
    if (m == 0) continue;
    bool reachable = false;
    for (std::uint64_t rest = m; rest != 0 && !reachable; rest &= rest - 1) {
      reachable = table.is_local_max(m & ~(rest & -rest));
    }
    if (!reachable) out.push_back(m);
  }
  return as_sets(out);
}

CriterionResult accessibility_counterexamples() {
  Tally tally;
  Stopwatch watch;
  watch.time([&] {
    for (std::size_t n = 4; n <= 8; ++n) {
      const Graph c = generate(fixed_spec(Family::cycle, n));
      guarded(tally, [&] { return describe(c); }, [&] {
        const oracle::SubsetTable table(c);
        std::vector<std::uint64_t> maxima;
        for (std::uint64_t m = 0; m <= table.full(); ++m) {
          if (table.is_maximum(m)) maxima.push_back(m);
        }
        const GreedoidReport report = verify_greedoid(c);
        tally.expect(!report.accessibility_ok && report.accessibility_violations == as_sets(maxima) &&
                         report.accessibility_violations == oracle_accessibility_violations(table),
                     [&] { return "C" + std::to_string(n) + " violations differ from Omega"; });
      });
    }
    // {d,e} is a local maximum stable set whose singletons are not, so it is
    // reported too; among maximum stable sets the violation is {a,c,f} alone.
    const Graph fig1 = generate(fixed_spec(Family::fig1, 0));
    guarded(tally, [&] { return describe(fig1); }, [&] {
      const oracle::SubsetTable table(fig1);
      const GreedoidReport report = verify_greedoid(fig1);
      std::vector<VertexSet> maximum_violations;
      for (const VertexSet& s : report.accessibility_violations) {
        if (table.is_maximum(s.to_mask())) maximum_violations.push_back(s);
      }
      const std::vector<VertexSet> expected{fig1.set_of({"a", "c", "f"})};
      tally.expect(!report.accessibility_ok && maximum_violations == expected &&
                       report.accessibility_violations == oracle_accessibility_violations(table),
                   [&] {
                     std::string got;
                     for (const VertexSet& s : report.accessibility_violations) got += fig1.format(s);
                     return "fig1 violations " + got;
                   });
    });
  });
  return finish(2, "accessibility counterexamples", tally,
                "C4..C8 violations equal Omega; fig1 violations match the oracle and the only "
                "maximum one is {a,c,f}",
                watch.seconds);
}

CriterionResult exchange_counterexamples() {
  Tally tally;
  Stopwatch watch;
  const auto check = [&](std::size_t n, PairClass cls) {
    const Graph g = generate(fixed_spec(Family::fig7, n));
    guarded(tally, [&] { return describe(g); }, [&] {
      const auto [s1, s2] = fig7_exchange_pair(n, cls);
      const oracle::SubsetTable table(g);
      bool ok = table.is_local_max(s1.to_mask()) && table.is_local_max(s2.to_mask()) &&
                is_local_max_stable(g, s1) && is_local_max_stable(g, s2) &&
                s2.size() == s1.size() + 1 && !exchange_witness(g, s1, s2).witness;
      for (Vertex v : set_difference(s2, s1)) {
        ok = ok && !table.is_local_max(s1.to_mask() | (std::uint64_t{1} << v));
      }
      if (cls == PairClass::large) {
        const auto a = static_cast<std::size_t>(table.alpha());
        ok = ok && 2 * a == n && s1.size() + 2 == a && s2.size() + 1 == a;
      }
      tally.expect(ok, [&] {
        return std::string(cls == PairClass::small ? "small" : "large") + " pair n=" +
               std::to_string(n) + " S1=" + g.format(s1) + " S2=" + g.format(s2);
      });
    });
  };
  watch.time([&] {
    for (std::size_t n : {6, 8, 10}) check(n, PairClass::small);
    for (std::size_t n : {8, 10, 12}) check(n, PairClass::large);
  });
  return finish(3, "exchange counterexamples", tally,
                "fig7 small pairs n=6,8,10 and large pairs n=8,10,12", watch.seconds);
}

CriterionResult nt_extension(const Options& options, const Progress& progress) {
  Tally tally;
  Stopwatch watch;
  std::size_t pairs = 0, cyclic = 0, big_psi = 0;
  static constexpr double kDensity[] = {0.15, 0.3, 0.45, 0.6};
  watch.time([&] {
    for (std::size_t i = 0; i < options.random_graphs; ++i) {
      FamilySpec spec = random_spec(Family::random_graph, 4 + i % 9, options.seed + 40000 + i);
      spec.edge_probability = kDensity[i % 4];
      const Graph g = generate(spec);
      if (!is_forest(g)) ++cyclic;
      guarded(tally, [&] { return describe(g); }, [&] {
        const oracle::SubsetTable table(g);
        const PsiFamily psi = enumerate_psi(g);
        const std::vector<VertexSet> omega = enumerate_omega(g);
        if (psi.members.size() > 200) ++big_psi;
        for (const VertexSet& s1 : psi.members) {
          for (const VertexSet& s2 : omega) {
            ++pairs;
            const VertexSet r = nt_extend(g, s1, s2);
            tally.expect(table.is_maximum(r.to_mask()) && s1.is_subset_of(r) &&
                             set_difference(r, s1).is_subset_of(s2),
                         [&] {
                           return "nt_extend " + describe(g, s1) + " S2=" + g.format(s2) +
                                  " gave " + g.format(r);
                         });
          }
        }
      });
    }
  });
  if (progress) progress("random graphs: " + std::to_string(pairs) + " (psi, omega) pairs");
  return finish(4, "nt extension", tally,
                std::to_string(options.random_graphs) + " random graphs on 4..12 vertices (" +
                    std::to_string(cyclic) + " with cycles, " + std::to_string(big_psi) +
                    " with |Psi| > 200, all included), " + std::to_string(pairs) + " pairs",
                watch.seconds);
}

CriterionResult determinism(const Options& options) {
  Tally tally;
  Stopwatch watch;
  using Job = std::pair<std::string, std::function<std::string()>>;
  const std::uint64_t seed = options.seed;
  const std::vector<Job> jobs{
      {"gen random_tree",
       [=] { return emit(family_document(random_spec(Family::random_tree, 12, seed)), Format::json); }},
      {"gen random_forest",
       [=] { return emit(family_document(random_spec(Family::random_forest, 14, seed + 1)), Format::json); }},
      {"gen random_graph",
       [=] { return emit(family_document(random_spec(Family::random_graph, 10, seed + 2)), Format::json); }},
      {"verify-greedoid",
       [=] {
         const Graph g = generate(random_spec(Family::random_forest, 12, seed + 3));
         return emit(g, verify_greedoid(g), Format::json);
       }},
      {"omega",
       [=] {
         const Graph g = generate(random_spec(Family::random_graph, 10, seed + 4));
         const std::vector<VertexSet> sets = enumerate_omega(g);
         return emit(g, OmegaResult{alpha(g).size, sets}, Format::json);
       }},
      {"psi", [] { return emit(enumerate_psi(generate(fixed_spec(Family::fig2, 0))), Format::json); }},
      {"chain",
       [] {
         const Graph g = generate(fixed_spec(Family::fig4_tree, 0));
         const PsiFamily psi = enumerate_psi(g);
         return emit(chain_decompose(g, psi.members.back(), ChainStrategy::constructive), Format::json);
       }},
      {"embed",
       [=] {
         return emit(embed_perfect(generate(random_spec(Family::random_forest, 16, seed + 5)),
                                   EmbedMode::pendant_only),
                     Format::json);
       }},
      {"exchange",
       [] {
         const Graph g = generate(fixed_spec(Family::fig7, 8));
         const auto [s1, s2] = fig7_exchange_pair(8, PairClass::large);
         return emit(g, exchange_witness(g, s1, s2), Format::json);
       }},
  };
  watch.time([&] {
    for (const auto& [name, job] : jobs) {
      guarded(tally, [&] { return name; }, [&] {
        const std::string first = job();
        const std::string second = job();
        tally.expect(!first.empty() && first == second,
                     [&] { return name + " output differs between runs"; });
      });
    }
  });
  return finish(9, "determinism", tally,
                std::to_string(jobs.size()) + " seeded JSON documents rebuilt and compared",
                watch.seconds);
}

}  // namespace

Options quick_options() {
  Options o;
  o.max_tree_order = 6;
  o.random_forests = 100;
  o.random_graphs = 100;
  o.matching_forests = 100;
  return o;
}

std::vector<CriterionResult> run_all(const Options& options, const Progress& progress) {
  const auto say = [&](const std::string& text) {
    if (progress) progress(text);
  };

  Sweep sw;
  for (std::size_t n = 2; n <= std::min<std::size_t>(options.max_tree_order, 8); ++n) {
    LabeledTreeStream stream(n);
    std::size_t count = 0;
    while (const std::optional<Graph> t = stream.next()) {
      sweep_tree(*t, sw);
      ++count;
    }
    sw.trees += count;
    say("labeled trees on " + std::to_string(n) + " vertices: " + std::to_string(count));
  }

  // Random forests on 9..14 vertices, greedoid axioms plus oracle agreement.
  for (std::size_t i = 0; i < options.random_forests; ++i) {
    const Graph f = generate(random_spec(Family::random_forest, 9 + i % 6, options.seed + 10000 + i));
    guarded(sw.greedoid, [&] { return describe(f); }, [&] {
      const oracle::SubsetTable table(f);
      sw.t_greedoid.time([&] {
        const PsiFamily psi = enumerate_psi(f);
        const GreedoidReport report = verify_greedoid(psi);
        sw.greedoid.expect(report.accessibility_ok && report.exchange_ok,
                           [&] { return "greedoid violation on " + describe(f); });
        sw.t_oracle.time([&] {
          check_psi_against_oracle(psi, table, sw.oracle_eq);
          check_alpha(f, table, sw.oracle_eq);
        });
      });
    });
  }
  say("random forests on 9..14 vertices: " + std::to_string(options.random_forests));

  // Random forests on 2..20 vertices for matching and embedding structure.
  for (std::size_t i = 0; i < options.matching_forests; ++i) {
    const Graph f = generate(random_spec(Family::random_forest, 2 + i % 19, options.seed + 20000 + i));
    guarded(sw.structure, [&] { return describe(f); }, [&] {
      sw.t_structure.time([&] { check_structure(f, brute_force_alpha(f).size, sw.structure); });
      if (f.order() <= 16) {
        sw.t_oracle.time([&] { check_alpha(f, oracle::SubsetTable(f), sw.oracle_eq); });
      }
    });
  }
  say("random forests on 2..20 vertices: " + std::to_string(options.matching_forests));

  // Documented small families.
  sw.t_oracle.time([&] {
    const Graph c4 = generate(fixed_spec(Family::cycle, 4));
    const Graph p4 = generate(fixed_spec(Family::path, 4));
    const std::vector<VertexSet> c4_expected{{}, c4.set_of({"1", "3"}), c4.set_of({"2", "4"})};
    const std::vector<VertexSet> p4_expected{{},
                                             p4.set_of({"a"}),
                                             p4.set_of({"d"}),
                                             p4.set_of({"a", "c"}),
                                             p4.set_of({"a", "d"}),
                                             p4.set_of({"b", "d"})};
    sw.oracle_eq.expect(enumerate_psi(c4).members == c4_expected,
                        [] { return std::string("psi(C4) differs from documented family"); });
    sw.oracle_eq.expect(enumerate_psi(p4).members == p4_expected,
                        [] { return std::string("psi(P4) differs from documented family"); });
  });

  const std::string trees = std::to_string(sw.trees) + " labeled trees on 2.." +
                            std::to_string(std::min<std::size_t>(options.max_tree_order, 8)) +
                            " vertices";
  std::vector<CriterionResult> out;
  out.push_back(finish(1, "greedoid on forests", sw.greedoid,
                       trees + ", " + std::to_string(options.random_forests) +
                           " random forests on 9..14 vertices",
                       sw.t_greedoid.seconds));
  out.push_back(accessibility_counterexamples());
  out.push_back(exchange_counterexamples());
  out.push_back(nt_extension(options, progress));
  out.push_back(finish(5, "chain totality", sw.chains,
                       trees + ", " + std::to_string(sw.psi_sets) + " local maximum stable sets",
                       sw.t_chains.seconds));
  out.push_back(finish(6, "exchange totality on forests", sw.exchange,
                       trees + ", " + std::to_string(sw.exchange_pairs) + " size-adjacent pairs (" +
                           std::to_string(sw.omega_pairs) + " ending in Omega)",
                       sw.t_exchange.seconds));
  out.push_back(finish(7, "matching and embedding structure", sw.structure,
                       trees + ", " + std::to_string(options.matching_forests) +
                           " random forests on 2..20 vertices",
                       sw.t_structure.seconds));
  out.push_back(finish(8, "oracle equivalence", sw.oracle_eq,
                       "forest DP, brute force and subset-table alpha on every corpus graph up to "
                       "16 vertices; psi(C4), psi(P4) exact",
                       sw.t_oracle.seconds));
  out.push_back(determinism(options));
  return out;
}

}  // namespace lmss::certify
