#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperlap/generators.hpp"
#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

inline constexpr int kDocumentVersion = 1;

struct DocumentEdge {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  bool operator==(const DocumentEdge&) const = default;
};

/// On-disk hypergraph: named vertices, hyperedges referring to names, and
/// optionally the generator spec that produced it. A document holding only a
/// generator spec describes the generated hypergraph.
struct HypergraphDocument {
  int version = kDocumentVersion;
  std::vector<std::string> vertices;
  std::vector<DocumentEdge> hyperedges;
  std::optional<GeneratorSpec> generator;

  bool operator==(const HypergraphDocument&) const = default;
};

/// Throws Error(parse_error) with a line/column or JSON-path diagnostic.
HypergraphDocument parse_document(std::string_view text);
std::string write_document(const HypergraphDocument& doc);

/// Resolves names to dense ids (document order). Unknown or duplicate names
/// throw parse_error.
Hypergraph to_hypergraph(const HypergraphDocument& doc);

/// Names default to "v0", "v1", ...
HypergraphDocument to_document(const Hypergraph& g,
                               const std::vector<std::string>& names = {});

nlohmann::json spec_to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const nlohmann::json& j);

}  // namespace hyperlap
