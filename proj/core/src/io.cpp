#include "lmss/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "lmss/error.hpp"

namespace lmss {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kFormatVersion = "1";

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ErrorKind::syntax_error, line,
                     "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

[[noreturn]] void unsupported(std::string_view what, Format format) {
  const char* name = format == Format::text ? "text" : format == Format::json ? "json" : "dot";
  throw Error(ErrorKind::unsupported_format,
              std::string(what) + " cannot be rendered as " + name);
}

Json set_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

Json sets_json(const Graph& g, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(set_json(g, s));
  return out;
}

Json graph_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& l : g.labels()) vertices.push_back(l);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({g.label(e.u), g.label(e.v)}));
  Json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

struct DotStyle {
  std::map<Vertex, std::string> vertices;
  std::map<Edge, std::string> edges;
};

std::string render_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << quoted(g.label(v));
    if (auto it = style.vertices.find(v); it != style.vertices.end()) {
      out << " [" << it->second << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v));
    if (auto it = style.edges.find(e); it != style.edges.end()) {
      out << " [" << it->second << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

constexpr std::string_view kMarked = "style=filled, fillcolor=lightgray";

DotStyle marking(const VertexSet& s) {
  DotStyle style;
  for (Vertex v : s) style.vertices[v] = std::string(kMarked);
  return style;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

GraphDocument parse_graph(std::istream& in, Source source) {
  GraphDocument doc;
  doc.source = source;

  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::size_t declared_vertices = 0;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;
  bool have_header = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line(raw);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == '#') {
      if (line.starts_with("# @")) {
        std::string_view rest = line.substr(3);
        const auto key_end = std::min(rest.find_first_of(" \t"), rest.size());
        std::string_view value = rest.substr(key_end);
        const auto value_start = value.find_first_not_of(" \t");
        value = value_start == std::string_view::npos ? std::string_view{}
                                                      : value.substr(value_start);
        if (key_end > 0) doc.metadata.emplace_back(rest.substr(0, key_end), value);
      }
      continue;
    }

    const auto tokens = tokenize(line);
    const std::string_view kind = tokens[0];
    if (!have_header) {
      if (kind != "p" || tokens.size() != 3) {
        throw ParseError(ErrorKind::syntax_error, line_no, "expected header 'p <n> <m>'");
      }
      declared_vertices = parse_count(tokens[1], line_no);
      declared_edges = parse_count(tokens[2], line_no);
      have_header = true;
      continue;
    }
    if (kind == "v") {
      if (tokens.size() != 2) {
        throw ParseError(ErrorKind::syntax_error, line_no, "expected 'v <label>'");
      }
      if (edge_lines > 0) {
        throw ParseError(ErrorKind::syntax_error, line_no, "vertex declared after edges");
      }
      std::string label(tokens[1]);
      if (label.find(',') != std::string::npos) {
        throw ParseError(ErrorKind::syntax_error, line_no, "labels may not contain ','");
      }
      if (labels.size() == declared_vertices) {
        throw ParseError(ErrorKind::syntax_error, line_no,
                         "more than " + std::to_string(declared_vertices) + " vertices");
      }
      if (!index.emplace(label, static_cast<Vertex>(labels.size())).second) {
        throw ParseError(ErrorKind::syntax_error, line_no, "duplicate vertex '" + label + "'");
      }
      labels.push_back(std::move(label));
    } else if (kind == "e") {
      if (tokens.size() != 3) {
        throw ParseError(ErrorKind::syntax_error, line_no, "expected 'e <label> <label>'");
      }
      ++edge_lines;
      if (edge_lines > declared_edges) {
        throw ParseError(ErrorKind::syntax_error, line_no,
                         "more than " + std::to_string(declared_edges) + " edges");
      }
      Vertex ends[2];
      for (int i = 0; i < 2; ++i) {
        auto it = index.find(std::string(tokens[1 + i]));
        if (it == index.end()) {
          throw ParseError(ErrorKind::unknown_vertex, line_no,
                           "undeclared vertex '" + std::string(tokens[1 + i]) + "'");
        }
        ends[i] = it->second;
      }
      if (ends[0] == ends[1]) {
        throw ParseError(ErrorKind::self_loop, line_no,
                         "self-loop at '" + std::string(tokens[1]) + "'");
      }
      const Edge e = make_edge(ends[0], ends[1]);
      if (!seen_edges.insert(e).second) {
        doc.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                               std::string(tokens[1]) + " " + std::string(tokens[2]) +
                               " collapsed");
        continue;
      }
      edges.push_back(e);
    } else {
      throw ParseError(ErrorKind::syntax_error, line_no,
                       "unknown line type '" + std::string(kind) + "'");
    }
  }

  if (!have_header) throw ParseError(ErrorKind::syntax_error, line_no, "missing header");
  if (labels.size() != declared_vertices) {
    throw ParseError(ErrorKind::syntax_error, line_no,
                     "header declares " + std::to_string(declared_vertices) +
                         " vertices, found " + std::to_string(labels.size()));
  }
  if (edge_lines != declared_edges) {
    throw ParseError(ErrorKind::syntax_error, line_no,
                     "header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(edge_lines));
  }
  doc.graph = Graph::from_edges(std::move(labels), edges);
  return doc;
}

GraphDocument parse_graph(std::string_view text, Source source) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, source);
}

GraphDocument family_document(const FamilySpec& spec) {
  GraphDocument doc;
  doc.graph = generate(spec);
  doc.source = Source::family;
  doc.metadata.emplace_back("format_version", std::string(kFormatVersion));
  doc.metadata.emplace_back("family", std::string(to_string(spec.family)));
  doc.metadata.emplace_back("n", std::to_string(spec.n));
  if (spec.family == Family::random_tree || spec.family == Family::random_forest ||
      spec.family == Family::random_graph) {
    doc.metadata.emplace_back("seed", std::to_string(spec.seed.value_or(0)));
    doc.metadata.emplace_back("rng", std::string(kRngAlgorithm));
    if (spec.family == Family::random_forest) {
      std::ostringstream p;
      p << spec.deletion_probability;
      doc.metadata.emplace_back("deletion_probability", p.str());
    }
    if (spec.family == Family::random_graph) {
      std::ostringstream p;
      p << spec.edge_probability;
      doc.metadata.emplace_back("edge_probability", p.str());
    }
  }
  return doc;
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "dot") return Format::dot;
  throw Error(ErrorKind::unsupported_format, "unknown format '" + std::string(name) + "'");
}

VertexSet parse_set(const Graph& g, std::string_view labels) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= labels.size() && !labels.empty()) {
    auto comma = labels.find(',', start);
    auto piece = labels.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - start);
    auto b = piece.find_first_not_of(" \t");
    auto e = piece.find_last_not_of(" \t");
    if (b != std::string_view::npos) parts.emplace_back(piece.substr(b, e - b + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return g.set_of(parts);
}

std::string emit(const GraphDocument& doc, Format format) {
  const Graph& g = doc.graph;
  switch (format) {
    case Format::text: {
      std::ostringstream out;
      for (const auto& [key, value] : doc.metadata) out << "# @" << key << ' ' << value << '\n';
      out << "p " << g.order() << ' ' << g.edge_count() << '\n';
      for (const auto& l : g.labels()) out << "v " << l << '\n';
      for (const Edge& e : g.edges()) out << "e " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
      return out.str();
    }
    case Format::json: {
      Json out;
      out["format_version"] = std::stoi(std::string(kFormatVersion));
      Json meta = Json::object();
      for (const auto& [key, value] : doc.metadata) meta[key] = value;
      out["metadata"] = std::move(meta);
      Json body = graph_json(g);
      out["vertices"] = std::move(body["vertices"]);
      out["edges"] = std::move(body["edges"]);
      return dump(out);
    }
    case Format::dot:
      return render_dot(g, {});
  }
  unsupported("graph", format);
}

std::string emit(const Graph& g, const StableSetResult& result, Format format) {
  switch (format) {
    case Format::text:
      return "alpha: " + std::to_string(result.size) + "\nmethod: " +
             std::string(to_string(result.method)) + "\nwitness: " + g.format(result.set) + "\n";
    case Format::json: {
      Json out;
      out["alpha"] = result.size;
      out["method"] = to_string(result.method);
      out["witness"] = set_json(g, result.set);
      return dump(out);
    }
    case Format::dot:
      return render_dot(g, marking(result.set));
  }
  unsupported("alpha", format);
}

std::string emit(const Graph& g, const OmegaResult& result, Format format) {
  switch (format) {
    case Format::text: {
      std::string out = "alpha: " + std::to_string(result.alpha) +
                        "\ncount: " + std::to_string(result.sets.size()) + "\n";
      for (const auto& s : result.sets) out += g.format(s) + "\n";
      return out;
    }
    case Format::json: {
      Json out;
      out["alpha"] = result.alpha;
      out["count"] = result.sets.size();
      out["sets"] = sets_json(g, result.sets);
      return dump(out);
    }
    case Format::dot:
      break;
  }
  unsupported("omega", format);
}

std::string emit(const PsiFamily& family, Format format) {
  const Graph& g = family.graph;
  switch (format) {
    case Format::text: {
      std::string out = "count: " + std::to_string(family.members.size()) + "\n";
      for (const auto& s : family.members) out += g.format(s) + "\n";
      return out;
    }
    case Format::json: {
      Json out;
      out["count"] = family.members.size();
      out["members"] = sets_json(g, family.members);
      return dump(out);
    }
    case Format::dot:
      break;
  }
  unsupported("psi family", format);
}

std::string emit(const Graph& g, const PsiQuery& query, Format format) {
  switch (format) {
    case Format::text:
      return "set: " + g.format(query.set) + "\nstable: " + yes_no(query.stable) +
             "\nlocal_max: " + yes_no(query.local_max) + "\n";
    case Format::json: {
      Json out;
      out["set"] = set_json(g, query.set);
      out["stable"] = query.stable;
      out["local_max"] = query.local_max;
      return dump(out);
    }
    case Format::dot:
      return render_dot(g, marking(query.set));
  }
  unsupported("psi query", format);
}

std::string emit(const Graph& g, const Matching& matching, Format format) {
  const VertexSet exposed = set_difference(g.vertices(), matching.covered);
  switch (format) {
    case Format::text: {
      std::string out = "mu: " + std::to_string(matching.size()) + "\nedges:";
      for (const Edge& e : matching.edges) out += " " + g.label(e.u) + "-" + g.label(e.v);
      out += "\nexposed: " + g.format(exposed) + "\n";
      return out;
    }
    case Format::json: {
      Json edges = Json::array();
      for (const Edge& e : matching.edges) {
        edges.push_back(Json::array({g.label(e.u), g.label(e.v)}));
      }
      Json out;
      out["mu"] = matching.size();
      out["edges"] = std::move(edges);
      out["exposed"] = set_json(g, exposed);
      return dump(out);
    }
    case Format::dot: {
      DotStyle style;
      for (const Edge& e : matching.edges) style.edges[e] = "penwidth=3";
      return render_dot(g, style);
    }
  }
  unsupported("matching", format);
}

std::string emit(const Graph&, const KonigEgervaryReport& report, Format format) {
  switch (format) {
    case Format::text:
      return "alpha: " + std::to_string(report.alpha) + "\nmu: " + std::to_string(report.mu) +
             "\norder: " + std::to_string(report.order) +
             "\nidentity_holds: " + yes_no(report.identity_holds) +
             "\nhas_perfect_matching: " + yes_no(report.has_perfect_matching) + "\n";
    case Format::json: {
      Json out;
      out["alpha"] = report.alpha;
      out["mu"] = report.mu;
      out["order"] = report.order;
      out["identity_holds"] = report.identity_holds;
      out["has_perfect_matching"] = report.has_perfect_matching;
      return dump(out);
    }
    case Format::dot:
      break;
  }
  unsupported("Konig-Egervary report", format);
}

std::string emit(const Embedding& embedding, Format format) {
  const Graph& host = embedding.host;
  switch (format) {
    case Format::text: {
      std::string out = "added_edges:";
      for (const Edge& e : embedding.added_edges) {
        out += " " + host.label(e.u) + "-" + host.label(e.v);
      }
      out += "\n";
      GraphDocument doc;
      doc.graph = host;
      return out + emit(doc, Format::text);
    }
    case Format::json: {
      Json added = Json::array();
      for (const Edge& e : embedding.added_edges) {
        added.push_back(Json::array({host.label(e.u), host.label(e.v)}));
      }
      Json out;
      out["original_order"] = embedding.original_vertices.size();
      out["added_edges"] = std::move(added);
      out["host"] = graph_json(host);
      return dump(out);
    }
    case Format::dot: {
      DotStyle style;
      for (const Edge& e : embedding.added_edges) {
        style.vertices[e.v] = "shape=box";
        style.edges[make_edge(e.u, e.v)] = "style=dashed";
      }
      return render_dot(host, style);
    }
  }
  unsupported("embedding", format);
}

std::string emit(const ChainCertificate& certificate, Format format) {
  const Graph& g = certificate.graph;
  switch (format) {
    case Format::text: {
      std::string out = "strategy: " + std::string(to_string(certificate.strategy)) + "\n";
      for (std::size_t i = 0; i < certificate.chain.size(); ++i) {
        out += std::to_string(i + 1) + ": " + g.format(certificate.chain[i]) + "\n";
      }
      return out;
    }
    case Format::json: {
      Json out;
      out["strategy"] = to_string(certificate.strategy);
      out["chain"] = sets_json(g, certificate.chain);
      return dump(out);
    }
    case Format::dot: {
      // Members are annotated with the step at which they join the chain.
      DotStyle style;
      VertexSet previous;
      for (std::size_t i = 0; i < certificate.chain.size(); ++i) {
        for (Vertex v : set_difference(certificate.chain[i], previous)) {
          style.vertices[v] = std::string(kMarked) + ", xlabel=\"" + std::to_string(i + 1) + "\"";
        }
        previous = certificate.chain[i];
      }
      return render_dot(g, style);
    }
  }
  unsupported("chain", format);
}

std::string emit(const Graph& g, const NtExtension& extension, Format format) {
  switch (format) {
    case Format::text:
      return "s1: " + g.format(extension.s1) + "\ns2: " + g.format(extension.s2) +
             "\nadded: " + g.format(extension.added) + "\nresult: " + g.format(extension.result) +
             "\n";
    case Format::json: {
      Json out;
      out["s1"] = set_json(g, extension.s1);
      out["s2"] = set_json(g, extension.s2);
      out["added"] = set_json(g, extension.added);
      out["result"] = set_json(g, extension.result);
      out["alpha"] = extension.result.size();
      return dump(out);
    }
    case Format::dot:
      return render_dot(g, marking(extension.result));
  }
  unsupported("extension", format);
}

std::string emit(const Graph& g, const ExchangeWitness& witness, Format format) {
  switch (format) {
    case Format::text:
      return "s1: " + g.format(witness.s1) + "\ns2: " + g.format(witness.s2) +
             "\nwitness: " + (witness.witness ? g.label(*witness.witness) : "none") + "\n";
    case Format::json: {
      Json out;
      out["s1"] = set_json(g, witness.s1);
      out["s2"] = set_json(g, witness.s2);
      out["witness"] = witness.witness ? Json(g.label(*witness.witness)) : Json(nullptr);
      return dump(out);
    }
    case Format::dot: {
      DotStyle style = marking(witness.s1);
      if (witness.witness) style.vertices[*witness.witness] = "style=filled, fillcolor=gold";
      return render_dot(g, style);
    }
  }
  unsupported("exchange witness", format);
}

std::string emit(const Graph& g, const GreedoidReport& report, Format format) {
  switch (format) {
    case Format::text: {
      std::string out = "family_size: " + std::to_string(report.family_size) + "\n";
      out += "accessibility: ";
      out += report.accessibility_ok
                 ? "ok\n"
                 : "violated (" + std::to_string(report.accessibility_violations.size()) + ")\n";
      for (const auto& s : report.accessibility_violations) out += "  " + g.format(s) + "\n";
      out += "exchange: ";
      out += report.exchange_ok
                 ? "ok\n"
                 : "violated (" + std::to_string(report.exchange_violations.size()) + ")\n";
      for (const auto& [y, x] : report.exchange_violations) {
        out += "  " + g.format(y) + " " + g.format(x) + "\n";
      }
      return out;
    }
    case Format::json: {
      Json exchange = Json::array();
      for (const auto& [y, x] : report.exchange_violations) {
        exchange.push_back(Json::array({set_json(g, y), set_json(g, x)}));
      }
      Json out;
      out["family_size"] = report.family_size;
      out["accessibility_ok"] = report.accessibility_ok;
      out["exchange_ok"] = report.exchange_ok;
      out["accessibility_violations"] = sets_json(g, report.accessibility_violations);
      out["exchange_violations"] = std::move(exchange);
      return dump(out);
    }
    case Format::dot:
      break;
  }
  unsupported("greedoid report", format);
}

}  // namespace lmss
