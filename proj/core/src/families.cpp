#include "lmss/families.hpp"

#include <array>
#include <functional>
#include <queue>
#include <random>
#include <string>

#include "lmss/error.hpp"

namespace lmss {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::star, "star"},
    {Family::fig1, "fig1"},
    {Family::fig2, "fig2"},
    {Family::fig4_tree, "fig4_tree"},
    {Family::fig7, "fig7"},
    {Family::random_tree, "random_tree"},
    {Family::random_forest, "random_forest"},
    {Family::random_graph, "random_graph"},
}};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::invalid_family_parameter, message);
}

void require_at_least(Family family, std::size_t n, std::size_t minimum) {
  if (n < minimum) {
    invalid(std::string(to_string(family)) + " needs n >= " + std::to_string(minimum) +
            ", got " + std::to_string(n));
  }
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) invalid("probability must lie in [0, 1]");
}

// Uniform on [0, bound) without modulo bias; independent of the standard
// library's distribution implementations so streams match across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::string(prefix) + std::to_string(i + 1);
  return labels;
}

Graph labeled(std::vector<std::string> labels,
              std::initializer_list<std::pair<std::string_view, std::string_view>> edges) {
  std::vector<Edge> list;
  auto index = [&](std::string_view l) {
    return static_cast<Vertex>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (const auto& [a, b] : edges) list.push_back({index(a), index(b)});
  return Graph::from_edges(std::move(labels), list);
}

std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(draw_below(rng, n));
  return prufer_decode(code, n);
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  invalid("unknown family '" + std::string(name) + "'");
}

Graph generate(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  std::mt19937_64 rng(spec.seed.value_or(0));
  switch (spec.family) {
    case Family::path: {
      require_at_least(spec.family, n, 1);
      std::vector<std::string> labels;
      if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
      } else {
        labels = numbered(n, "v");
      }
      std::vector<Edge> edges;
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph::from_edges(std::move(labels), edges);
    }
    case Family::cycle: {
      require_at_least(spec.family, n, 4);
      std::vector<Edge> edges;
      for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % n)));
      return Graph::from_edges(n, edges);
    }
    case Family::complete: {
      require_at_least(spec.family, n, 1);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
      }
      return Graph::from_edges(n, edges);
    }
    case Family::star: {
      require_at_least(spec.family, n, 2);
      std::vector<std::string> labels{"c"};
      for (auto& l : numbered(n - 1, "x")) labels.push_back(std::move(l));
      std::vector<Edge> edges;
      for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
      return Graph::from_edges(std::move(labels), edges);
    }
    case Family::fig1:
      return labeled({"a", "b", "c", "d", "e", "f"},
                     {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "f"}, {"e", "f"}});
    case Family::fig2:
      // Bottom row left to right, then top row; unnamed vertices are p1..p4.
      return labeled({"u", "p1", "v", "p2", "y", "z", "p3", "x", "p4"},
                     {{"u", "p1"}, {"p1", "v"}, {"v", "p2"}, {"p2", "y"}, {"y", "z"},
                      {"u", "p3"}, {"p1", "p3"}, {"v", "p3"},
                      {"p2", "x"}, {"x", "p4"}, {"y", "p4"}, {"z", "p4"}});
    case Family::fig4_tree:
      // Same scan order; the six-vertex bottom path is b p1 c p2 p3 p4.
      return labeled({"b", "p1", "c", "p2", "p3", "p4", "p5", "a", "d", "p6", "e"},
                     {{"b", "p1"}, {"p1", "c"}, {"c", "p2"}, {"p2", "p3"}, {"p3", "p4"},
                      {"b", "p5"}, {"p1", "a"}, {"p2", "d"}, {"d", "p6"}, {"p4", "e"}});
    case Family::fig7: {
      require_at_least(spec.family, n, 6);
      // a1..a(n-2) is a path; a(n-3) a(n-1) a(n) a(n-2) closes a 4-cycle.
      std::vector<Edge> edges;
      for (Vertex i = 0; i + 1 < n - 2; ++i) edges.push_back({i, i + 1});
      const auto a = [](std::size_t k) { return static_cast<Vertex>(k - 1); };
      edges.push_back({a(n - 3), a(n - 1)});
      edges.push_back({a(n - 2), a(n)});
      edges.push_back({a(n - 1), a(n)});
      return Graph::from_edges(numbered(n, "a"), edges);
    }
    case Family::random_tree:
      require_at_least(spec.family, n, 2);
      return Graph::from_edges(n, random_tree_edges(n, rng));
    case Family::random_forest: {
      require_at_least(spec.family, n, 2);
      require_probability(spec.deletion_probability);
      std::vector<Edge> tree = random_tree_edges(n, rng);
      std::sort(tree.begin(), tree.end());
      std::vector<Edge> kept;
      for (const Edge& e : tree) {
        if (draw_unit(rng) >= spec.deletion_probability) kept.push_back(e);
      }
      return Graph::from_edges(n, kept);
    }
    case Family::random_graph: {
      require_at_least(spec.family, n, 1);
      require_probability(spec.edge_probability);
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (draw_unit(rng) < spec.edge_probability) edges.push_back({u, v});
        }
      }
      return Graph::from_edges(n, edges);
    }
  }
  invalid("unhandled family");
}

std::pair<VertexSet, VertexSet> fig7_exchange_pair(std::size_t n, PairClass size_class) {
  const auto a = [](std::size_t k) { return static_cast<Vertex>(k - 1); };
  if (size_class == PairClass::small) {
    if (n < 6) invalid("small fig7 pair needs n >= 6");
    return {VertexSet{a(1)}, VertexSet{a(n - 2), a(n - 1)}};
  }
  if (n < 8 || n % 2 != 0) invalid("large fig7 pair needs even n >= 8");
  std::vector<Vertex> s1;
  for (std::size_t k = 1; k <= n - 5; k += 2) s1.push_back(a(k));
  std::vector<Vertex> s2;
  for (std::size_t k = 1; k <= n - 7; k += 2) s2.push_back(a(k));
  s2.push_back(a(n - 2));
  s2.push_back(a(n - 1));
  return {VertexSet(std::move(s1)), VertexSet(std::move(s2))};
}

std::vector<Edge> prufer_decode(const std::vector<Vertex>& code, std::size_t n) {
  if (n < 2 || code.size() != n - 2) invalid("Prufer code must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) {
    if (c >= n) invalid("Prufer entry out of range");
    ++degree[c];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex u = leaves.top();
  leaves.pop();
  Vertex v = leaves.top();
  edges.push_back(make_edge(u, v));
  return edges;
}

std::vector<Vertex> prufer_encode(const Graph& tree) {
  if (!decompose(tree).is_tree) invalid("Prufer encoding needs a tree");
  const std::size_t n = tree.order();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Vertex> code;
  code.reserve(n - 2);
  while (code.size() + 2 < n) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = 1;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return code;
}

LabeledTreeStream::LabeledTreeStream(std::size_t n) : n_(n), total_(1) {
  if (n < 2 || n > 8) invalid("labeled tree enumeration needs 2 <= n <= 8");
  for (std::size_t i = 0; i + 2 < n; ++i) total_ *= n;
  code_.assign(n - 2, 0);
}

std::optional<Graph> LabeledTreeStream::next() {
  if (done_) return std::nullopt;
  Graph tree = Graph::from_edges(n_, prufer_decode(code_, n_));
  std::size_t pos = code_.size();
  for (;;) {
    if (pos == 0) {
      done_ = true;
      break;
    }
    --pos;
    if (++code_[pos] < n_) break;
    code_[pos] = 0;
  }
  return tree;
}

void LabeledTreeStream::restart() {
  code_.assign(n_ - 2, 0);
  done_ = false;
}

LabeledTreeStream enumerate_labeled_trees(std::size_t n) {
  return LabeledTreeStream(n);
}

}  // namespace lmss
