#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chainlog/errors.hpp"
#include "chainlog/status.hpp"

namespace chainlog {

enum class VertexKind { SoftwareArtifact, Transformer, Host, BuildEnvironment };

enum class EdgeKind {
  Hosted,          // host -> build environment
  Executed,        // build environment -> transformer
  WasInputTo,      // software artifact -> transformer
  WasBuildToolTo,  // software artifact -> transformer
  WasPresent,      // software artifact -> build environment | host
  Generated,       // transformer -> software artifact
  WasPublishedTo,  // software artifact -> host
  Transferred,     // host -> software artifact
};

const char* vertexKindName(VertexKind kind);
const char* edgeKindName(EdgeKind kind);
std::optional<VertexKind> vertexKindFromName(std::string_view name);
std::optional<EdgeKind> edgeKindFromName(std::string_view name);

// True when an edge of this kind may connect the given endpoint kinds.
bool endpointKindsAllowed(EdgeKind kind, VertexKind source, VertexKind target);

// User-facing status label. Hosts and build environments report the top
// lattice value as "compromised"; other elements use the plain status name.
std::string renderStatus(VertexKind kind, SecurityStatus q);

// Logical identity of a software artifact. Distinct vertices carrying an
// equal identity are copies of the same artifact, e.g. the copy published to
// a distribution host and the copy a later build fetched from it.
struct ArtifactIdentity {
  std::string name;
  std::string version;
  std::optional<std::string> digest;
  auto operator<=>(const ArtifactIdentity&) const = default;
};

struct Vertex {
  std::string id;  // unique within a model, otherwise opaque
  VertexKind kind = VertexKind::SoftwareArtifact;
  std::set<std::string> labels;
  std::map<std::string, std::string> properties;
  // present exactly when kind is SoftwareArtifact
  std::optional<ArtifactIdentity> identity;

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  std::string id;
  EdgeKind kind = EdgeKind::WasInputTo;
  std::string source;
  std::string target;

  bool operator==(const Edge&) const = default;
};

struct Violation {
  Errc code;
  std::string message;
  std::vector<std::string> elements;  // offending vertex/edge ids
};

class ValidationReport {
 public:
  void add(Errc code, std::string message, std::vector<std::string> elements);
  void merge(const ValidationReport& other);
  bool empty() const { return items_.empty(); }
  const std::vector<Violation>& items() const { return items_; }
  bool contains(Errc code) const;
  std::string text() const;

 private:
  std::vector<Violation> items_;
};

// Typed property graph of one supply chain's recorded build activity.
// The graph is append-only while it is being assembled and is treated as
// immutable once validated; any number of evaluations may then read it
// concurrently.
class LogModel {
 public:
  // Throws DuplicateVertexId, MissingIdentity or ForbiddenIdentity.
  void addVertex(Vertex v);
  // Requires both endpoints to exist and the endpoint kinds to be legal for
  // the edge kind. Throws DuplicateEdgeId, DanglingEndpoint or
  // IllegalEndpointKinds. Cycles are not checked here; validate() finds them.
  void addEdge(Edge e);

  // Checks every model invariant and reports all findings. Side-effect free;
  // an empty report means the model is valid.
  ValidationReport validate() const;

  const Vertex* findVertex(const std::string& id) const;
  // Throws UnknownVertex.
  const Vertex& vertexAt(const std::string& id) const;

  // Sources of all incoming edges of v, deduplicated, sorted by id.
  // Edges whose source vertex is missing are skipped. Throws UnknownVertex.
  std::vector<const Vertex*> parentsOf(const std::string& id) const;
  // Subset of parentsOf connected through edges of the given kind.
  std::vector<const Vertex*> parentsVia(const std::string& id, EdgeKind kind) const;

  std::vector<const Edge*> incomingEdges(const std::string& id) const;

  const std::map<std::string, Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<const Edge*> edgesSortedById() const;
  std::size_t vertexCount() const { return vertices_.size(); }

  // Dependency order over the vertices, or nullopt when the graph is cyclic.
  std::optional<std::vector<std::string>> topologicalOrder() const;

  // Assembles a model from raw parts without the addVertex/addEdge checks so
  // that every problem can be reported at once. Duplicate ids are dropped
  // and recorded in the report; everything else is kept for validate().
  static LogModel fromParts(std::vector<Vertex> vertices, std::vector<Edge> edges,
                            ValidationReport* report);

  bool operator==(const LogModel& other) const;

 private:
  std::vector<std::string> kahnLeftover() const;

  std::map<std::string, Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> edgeIndexById_;
  std::map<std::string, std::vector<std::size_t>> incomingByTarget_;
};

}  // namespace chainlog
