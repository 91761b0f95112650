#include "hyperlap/document.hpp"

#include <unordered_map>

#include "hyperlap/error.hpp"

namespace hyperlap {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<std::string> names_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path + ": expected an array of vertex names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

template <class T>
T field(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    fail(std::string("generator.") + key + ": wrong type");
  }
}

}  // namespace

json spec_to_json(const GeneratorSpec& s) {
  return json{{"family", std::string(to_string(s.family))},
              {"n", s.n},
              {"m", s.m},
              {"c", s.c},
              {"part1", s.part1},
              {"part2", s.part2},
              {"p_member", s.p_member},
              {"p_input", s.p_input},
              {"p_catalyst", s.p_catalyst},
              {"seed", s.seed}};
}

GeneratorSpec spec_from_json(const json& j) {
  if (!j.is_object()) fail("generator: expected an object");
  GeneratorSpec s;
  try {
    s.family = parse_family(field<std::string>(j, "family", ""));
  } catch (const Error& e) {
    fail(std::string("generator.family: ") + e.what());
  }
  s.n = field<std::size_t>(j, "n", 0);
  s.m = field<std::size_t>(j, "m", 0);
  s.c = field<std::size_t>(j, "c", 0);
  s.part1 = field<std::size_t>(j, "part1", 0);
  s.part2 = field<std::size_t>(j, "part2", 0);
  s.p_member = field<double>(j, "p_member", s.p_member);
  s.p_input = field<double>(j, "p_input", s.p_input);
  s.p_catalyst = field<double>(j, "p_catalyst", s.p_catalyst);
  s.seed = field<std::uint64_t>(j, "seed", 0);
  return s;
}

HypergraphDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("malformed JSON at " + location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
         e.what());
  }
  if (!j.is_object()) fail("top level: expected an object");

  HypergraphDocument doc;
  const auto version = j.find("version");
  if (version == j.end() || !version->is_number_integer())
    fail("version: missing or not an integer");
  doc.version = version->get<int>();
  if (doc.version != kDocumentVersion)
    fail("version: unsupported value " + std::to_string(doc.version));

  if (const auto gen = j.find("generator"); gen != j.end())
    doc.generator = spec_from_json(*gen);

  const auto vertices = j.find("vertices");
  const auto edges = j.find("hyperedges");
  if (vertices == j.end() && edges == j.end()) {
    if (!doc.generator) fail("document needs vertices and hyperedges, or a generator");
    return doc;
  }
  if (vertices == j.end()) fail("vertices: missing");
  if (edges == j.end()) fail("hyperedges: missing");
  doc.vertices = names_at(*vertices, "vertices");
  if (!edges->is_array()) fail("hyperedges: expected an array");
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const std::string path = "hyperedges[" + std::to_string(i) + "]";
    const json& e = (*edges)[i];
    if (!e.is_object()) fail(path + ": expected an object");
    DocumentEdge de;
    de.inputs = names_at(e.value("inputs", json::array()), path + ".inputs");
    de.outputs = names_at(e.value("outputs", json::array()), path + ".outputs");
    doc.hyperedges.push_back(std::move(de));
  }
  return doc;
}

std::string write_document(const HypergraphDocument& doc) {
  json j;
  j["version"] = doc.version;
  if (doc.generator) j["generator"] = spec_to_json(*doc.generator);
  j["vertices"] = doc.vertices;
  json edges = json::array();
  for (const DocumentEdge& e : doc.hyperedges)
    edges.push_back(json{{"inputs", e.inputs}, {"outputs", e.outputs}});
  j["hyperedges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Hypergraph to_hypergraph(const HypergraphDocument& doc) {
  if (doc.vertices.empty() && doc.hyperedges.empty() && doc.generator)
    return generate(*doc.generator);

  std::unordered_map<std::string, VertexId> ids;
  for (VertexId v = 0; v < doc.vertices.size(); ++v)
    if (!ids.emplace(doc.vertices[v], v).second)
      fail("vertices[" + std::to_string(v) + "]: duplicate name '" + doc.vertices[v] + "'");

  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < doc.hyperedges.size(); ++i) {
    Hyperedge h;
    auto resolve = [&](const std::vector<std::string>& names, std::vector<VertexId>& out,
                       const char* side) {
      for (const std::string& name : names) {
        const auto it = ids.find(name);
        if (it == ids.end())
          fail("hyperedges[" + std::to_string(i) + "]." + side + ": unknown vertex '" +
               name + "'");
        out.push_back(it->second);
      }
    };
    resolve(doc.hyperedges[i].inputs, h.inputs, "inputs");
    resolve(doc.hyperedges[i].outputs, h.outputs, "outputs");
    edges.push_back(std::move(h));
  }
  return Hypergraph(doc.vertices.size(), std::move(edges));
}

HypergraphDocument to_document(const Hypergraph& g, const std::vector<std::string>& names) {
  HypergraphDocument doc;
  doc.vertices.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    doc.vertices[v] = v < names.size() ? names[v] : "v" + std::to_string(v);
  for (const Hyperedge& h : g.edges()) {
    DocumentEdge e;
    for (VertexId v : h.inputs) e.inputs.push_back(doc.vertices.at(v));
    for (VertexId v : h.outputs) e.outputs.push_back(doc.vertices.at(v));
    doc.hyperedges.push_back(std::move(e));
  }
  return doc;
}

}  // namespace hyperlap
