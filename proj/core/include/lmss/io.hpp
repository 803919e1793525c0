#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmss/embedding.hpp"
#include "lmss/families.hpp"
#include "lmss/graph.hpp"
#include "lmss/greedoid.hpp"
#include "lmss/matching.hpp"
#include "lmss/stable.hpp"

namespace lmss {

// Graph files are line oriented; '#' starts a comment.
//
//   p <n> <m>
//   v <label>            (n lines)
//   e <label> <label>    (m lines)
//
// Comment lines of the form "# @<key> <value>" carry document metadata.
// Labels are whitespace-free tokens without commas.

enum class Source { file, family, inline_text };

struct GraphDocument {
  Graph graph;
  Source source = Source::inline_text;
  /// Insertion-ordered key/value pairs.
  std::vector<std::pair<std::string, std::string>> metadata;
  /// Non-fatal parse notes (collapsed duplicate edges).
  std::vector<std::string> warnings;
};

GraphDocument parse_graph(std::istream& in, Source source = Source::inline_text);
GraphDocument parse_graph(std::string_view text, Source source = Source::inline_text);

/// Generates the family graph and records family, n, seed and generator
/// metadata.
GraphDocument family_document(const FamilySpec& spec);

enum class Format { text, json, dot };

/// Throws UnsupportedFormat.
Format parse_format(std::string_view name);

/// Comma-separated labels ("a,c,f"; empty string for ∅).
VertexSet parse_set(const Graph& g, std::string_view labels);

struct OmegaResult {
  std::size_t alpha = 0;
  std::vector<VertexSet> sets;
};

struct PsiQuery {
  VertexSet set;
  bool stable = false;
  bool local_max = false;
};

struct NtExtension {
  VertexSet s1;
  VertexSet s2;
  VertexSet added;
  VertexSet result;
};

// Every emitter returns the full document, newline terminated. JSON keys
// appear in the documented order and sets list labels by vertex index, so
// equal inputs give byte-identical output. Formats that make no sense for a
// record throw UnsupportedFormat.
std::string emit(const GraphDocument& doc, Format format);
std::string emit(const Graph& g, const StableSetResult& result, Format format);
std::string emit(const Graph& g, const OmegaResult& result, Format format);
std::string emit(const PsiFamily& family, Format format);
std::string emit(const Graph& g, const PsiQuery& query, Format format);
std::string emit(const Graph& g, const Matching& matching, Format format);
std::string emit(const Graph& g, const KonigEgervaryReport& report, Format format);
std::string emit(const Embedding& embedding, Format format);
std::string emit(const ChainCertificate& certificate, Format format);
std::string emit(const Graph& g, const NtExtension& extension, Format format);
std::string emit(const Graph& g, const ExchangeWitness& witness, Format format);
std::string emit(const Graph& g, const GreedoidReport& report, Format format);

}  // namespace lmss
