#include "chainlog/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace chainlog {

const char* vertexKindName(VertexKind kind) {
  switch (kind) {
    case VertexKind::SoftwareArtifact: return "softwareArtifact";
    case VertexKind::Transformer: return "transformer";
    case VertexKind::Host: return "host";
    case VertexKind::BuildEnvironment: return "buildEnvironment";
  }
  return "unknown";
}

const char* edgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Hosted: return "hosted";
    case EdgeKind::Executed: return "executed";
    case EdgeKind::WasInputTo: return "wasInputTo";
    case EdgeKind::WasBuildToolTo: return "wasBuildToolTo";
    case EdgeKind::WasPresent: return "wasPresent";
    case EdgeKind::Generated: return "generated";
    case EdgeKind::WasPublishedTo: return "wasPublishedTo";
    case EdgeKind::Transferred: return "transferred";
  }
  return "unknown";
}

std::optional<VertexKind> vertexKindFromName(std::string_view name) {
  if (name == "softwareArtifact") return VertexKind::SoftwareArtifact;
  if (name == "transformer") return VertexKind::Transformer;
  if (name == "host") return VertexKind::Host;
  if (name == "buildEnvironment") return VertexKind::BuildEnvironment;
  return std::nullopt;
}

std::optional<EdgeKind> edgeKindFromName(std::string_view name) {
  if (name == "hosted") return EdgeKind::Hosted;
  if (name == "executed") return EdgeKind::Executed;
  if (name == "wasInputTo") return EdgeKind::WasInputTo;
  if (name == "wasBuildToolTo") return EdgeKind::WasBuildToolTo;
  if (name == "wasPresent") return EdgeKind::WasPresent;
  if (name == "generated") return EdgeKind::Generated;
  if (name == "wasPublishedTo") return EdgeKind::WasPublishedTo;
  if (name == "transferred") return EdgeKind::Transferred;
  return std::nullopt;
}

bool endpointKindsAllowed(EdgeKind kind, VertexKind source, VertexKind target) {
  using V = VertexKind;
  switch (kind) {
    case EdgeKind::Hosted:
      return source == V::Host && target == V::BuildEnvironment;
    case EdgeKind::Executed:
      return source == V::BuildEnvironment && target == V::Transformer;
    case EdgeKind::WasInputTo:
    case EdgeKind::WasBuildToolTo:
      return source == V::SoftwareArtifact && target == V::Transformer;
    case EdgeKind::WasPresent:
      return source == V::SoftwareArtifact &&
             (target == V::BuildEnvironment || target == V::Host);
    case EdgeKind::Generated:
      return source == V::Transformer && target == V::SoftwareArtifact;
    case EdgeKind::WasPublishedTo:
      return source == V::SoftwareArtifact && target == V::Host;
    case EdgeKind::Transferred:
      return source == V::Host && target == V::SoftwareArtifact;
  }
  return false;
}

std::string renderStatus(VertexKind kind, SecurityStatus q) {
  if (q == SecurityStatus::Malicious &&
      (kind == VertexKind::Host || kind == VertexKind::BuildEnvironment)) {
    return "compromised";
  }
  return std::string(statusName(q));
}

void ValidationReport::add(Errc code, std::string message,
                           std::vector<std::string> elements) {
  items_.push_back({code, std::move(message), std::move(elements)});
}

void ValidationReport::merge(const ValidationReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool ValidationReport::contains(Errc code) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::text() const {
  std::ostringstream out;
  for (const Violation& v : items_) {
    out << errcName(v.code) << ": " << v.message;
    if (!v.elements.empty()) {
      out << " [";
      for (std::size_t i = 0; i < v.elements.size(); ++i) {
        if (i) out << ", ";
        out << v.elements[i];
      }
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

void LogModel::addVertex(Vertex v) {
  if (vertices_.count(v.id)) {
    throw Error(Errc::DuplicateVertexId, "vertex id already present: " + v.id);
  }
  const bool isArtifact = v.kind == VertexKind::SoftwareArtifact;
  if (isArtifact && !v.identity) {
    throw Error(Errc::MissingIdentity, "software artifact without identity: " + v.id);
  }
  if (!isArtifact && v.identity) {
    throw Error(Errc::ForbiddenIdentity,
                std::string(vertexKindName(v.kind)) + " with identity: " + v.id);
  }
  vertices_.emplace(v.id, std::move(v));
}

void LogModel::addEdge(Edge e) {
  if (edgeIndexById_.count(e.id)) {
    throw Error(Errc::DuplicateEdgeId, "edge id already present: " + e.id);
  }
  const Vertex* src = findVertex(e.source);
  const Vertex* dst = findVertex(e.target);
  if (!src || !dst) {
    throw Error(Errc::DanglingEndpoint,
                "edge " + e.id + " references a missing vertex");
  }
  if (!endpointKindsAllowed(e.kind, src->kind, dst->kind)) {
    throw Error(Errc::IllegalEndpointKinds,
                "edge " + e.id + " (" + edgeKindName(e.kind) + ") may not connect " +
                    vertexKindName(src->kind) + " to " + vertexKindName(dst->kind));
  }
  edgeIndexById_.emplace(e.id, edges_.size());
  incomingByTarget_[e.target].push_back(edges_.size());
  edges_.push_back(std::move(e));
}

ValidationReport LogModel::validate() const {
  ValidationReport report;
  for (const auto& [id, v] : vertices_) {
    const bool isArtifact = v.kind == VertexKind::SoftwareArtifact;
    if (isArtifact && !v.identity) {
      report.add(Errc::MissingIdentity, "software artifact without identity", {id});
    }
    if (!isArtifact && v.identity) {
      report.add(Errc::ForbiddenIdentity,
                 std::string(vertexKindName(v.kind)) + " carries an artifact identity",
                 {id});
    }
  }
  for (const Edge* e : edgesSortedById()) {
    const Vertex* src = findVertex(e->source);
    const Vertex* dst = findVertex(e->target);
    if (!src || !dst) {
      report.add(Errc::DanglingEndpoint, "edge references a missing vertex", {e->id});
      continue;
    }
    if (!endpointKindsAllowed(e->kind, src->kind, dst->kind)) {
      report.add(Errc::IllegalEndpointKinds,
                 std::string(edgeKindName(e->kind)) + " from " +
                     vertexKindName(src->kind) + " to " + vertexKindName(dst->kind),
                 {e->id});
    }
  }
  std::map<std::string, int> executedInto;
  for (const Edge& e : edges_) {
    if (e.kind == EdgeKind::Executed) executedInto[e.target] += 1;
  }
  for (const auto& [target, count] : executedInto) {
    if (count > 1) {
      report.add(Errc::MultipleBuildEnvironments,
                 "transformer has more than one incoming executed edge", {target});
    }
  }
  std::vector<std::string> leftover = kahnLeftover();
  if (!leftover.empty()) {
    report.add(Errc::CycleDetected, "graph contains a cycle", std::move(leftover));
  }
  return report;
}

const Vertex* LogModel::findVertex(const std::string& id) const {
  auto it = vertices_.find(id);
  return it == vertices_.end() ? nullptr : &it->second;
}

const Vertex& LogModel::vertexAt(const std::string& id) const {
  const Vertex* v = findVertex(id);
  if (!v) throw Error(Errc::UnknownVertex, "no vertex with id: " + id);
  return *v;
}

std::vector<const Vertex*> LogModel::parentsOf(const std::string& id) const {
  vertexAt(id);
  std::vector<const Vertex*> out;
  auto it = incomingByTarget_.find(id);
  if (it != incomingByTarget_.end()) {
    for (std::size_t index : it->second) {
      if (const Vertex* src = findVertex(edges_[index].source)) out.push_back(src);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Vertex* a, const Vertex* b) { return a->id < b->id; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<const Vertex*> LogModel::parentsVia(const std::string& id,
                                                EdgeKind kind) const {
  vertexAt(id);
  std::vector<const Vertex*> out;
  auto it = incomingByTarget_.find(id);
  if (it != incomingByTarget_.end()) {
    for (std::size_t index : it->second) {
      const Edge& e = edges_[index];
      if (e.kind != kind) continue;
      if (const Vertex* src = findVertex(e.source)) out.push_back(src);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Vertex* a, const Vertex* b) { return a->id < b->id; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<const Edge*> LogModel::incomingEdges(const std::string& id) const {
  std::vector<const Edge*> out;
  auto it = incomingByTarget_.find(id);
  if (it != incomingByTarget_.end()) {
    for (std::size_t index : it->second) out.push_back(&edges_[index]);
  }
  std::sort(out.begin(), out.end(),
            [](const Edge* a, const Edge* b) { return a->id < b->id; });
  return out;
}

std::vector<const Edge*> LogModel::edgesSortedById() const {
  std::vector<const Edge*> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(&e);
  std::sort(out.begin(), out.end(),
            [](const Edge* a, const Edge* b) { return a->id < b->id; });
  return out;
}

std::vector<std::string> LogModel::kahnLeftover() const {
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> outgoing;
  for (const auto& [id, v] : vertices_) indegree[id] = 0;
  for (const Edge& e : edges_) {
    if (vertices_.count(e.source) && vertices_.count(e.target)) {
      indegree[e.target] += 1;
      outgoing[e.source].push_back(e.target);
    }
  }
  std::deque<std::string> ready;
  for (const auto& [id, degree] : indegree) {
    if (degree == 0) ready.push_back(id);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    std::string id = ready.front();
    ready.pop_front();
    ++emitted;
    for (const std::string& next : outgoing[id]) {
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  std::vector<std::string> leftover;
  if (emitted < vertices_.size()) {
    for (const auto& [id, degree] : indegree) {
      if (degree > 0) leftover.push_back(id);
    }
  }
  return leftover;
}

std::optional<std::vector<std::string>> LogModel::topologicalOrder() const {
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> outgoing;
  for (const auto& [id, v] : vertices_) indegree[id] = 0;
  for (const Edge& e : edges_) {
    if (vertices_.count(e.source) && vertices_.count(e.target)) {
      indegree[e.target] += 1;
      outgoing[e.source].push_back(e.target);
    }
  }
  std::deque<std::string> ready;
  for (const auto& [id, degree] : indegree) {
    if (degree == 0) ready.push_back(id);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string id = ready.front();
    ready.pop_front();
    order.push_back(id);
    for (const std::string& next : outgoing[id]) {
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  if (order.size() != vertices_.size()) return std::nullopt;
  return order;
}

LogModel LogModel::fromParts(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             ValidationReport* report) {
  LogModel model;
  for (Vertex& v : vertices) {
    if (model.vertices_.count(v.id)) {
      if (report) report->add(Errc::DuplicateVertexId, "duplicate vertex id", {v.id});
      continue;
    }
    std::string id = v.id;
    model.vertices_.emplace(std::move(id), std::move(v));
  }
  for (Edge& e : edges) {
    if (model.edgeIndexById_.count(e.id)) {
      if (report) report->add(Errc::DuplicateEdgeId, "duplicate edge id", {e.id});
      continue;
    }
    model.edgeIndexById_.emplace(e.id, model.edges_.size());
    model.incomingByTarget_[e.target].push_back(model.edges_.size());
    model.edges_.push_back(std::move(e));
  }
  return model;
}

bool LogModel::operator==(const LogModel& other) const {
  if (vertices_ != other.vertices_) return false;
  auto mine = edgesSortedById();
  auto theirs = other.edgesSortedById();
  if (mine.size() != theirs.size()) return false;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (!(*mine[i] == *theirs[i])) return false;
  }
  return true;
}

}  // namespace chainlog
