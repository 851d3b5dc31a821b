#include "relpoly/netmodel.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace relpoly {

namespace {

constexpr int kMaxComponents = 30;

std::vector<int> sorted_ids(ComponentSet s) {
  std::vector<int> ids;
  for (ComponentSet bits = s; bits; bits &= bits - 1)
    ids.push_back(std::countr_zero(bits) + 1);
  return ids;
}

// Element-list lexicographic order, the order the cut/path listings print in.
bool set_lex_less(ComponentSet a, ComponentSet b) {
  const auto la = sorted_ids(a), lb = sorted_ids(b);
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

void keep_minimal(std::vector<ComponentSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ComponentSet> minimal;
  for (ComponentSet s : sets) {
    bool dominated = false;
    for (ComponentSet t : sets) {
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), set_lex_less);
  sets = std::move(minimal);
}

}  // namespace

ComponentSet component_set(const std::vector<int>& ids) {
  ComponentSet s = 0;
  for (int id : ids) {
    if (id < 1 || id > kMaxComponents) throw std::out_of_range("component id out of range");
    s |= ComponentSet{1} << (id - 1);
  }
  return s;
}

std::vector<int> component_list(ComponentSet s) { return sorted_ids(s); }

std::string component_set_str(ComponentSet s) {
  std::string out = "{";
  bool first = true;
  for (int id : sorted_ids(s)) {
    if (!first) out += ",";
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

Network::Network(std::vector<std::string> nodes, std::vector<Arc> arcs, std::string source,
                 std::string sink)
    : nodes_(std::move(nodes)),
      arcs_(std::move(arcs)),
      source_(std::move(source)),
      sink_(std::move(sink)) {
  validate();
  for (const Arc& a : arcs_) num_components_ = std::max(num_components_, a.component);
}

void Network::validate() const {
  std::set<std::string> node_set(nodes_.begin(), nodes_.end());
  if (node_set.size() != nodes_.size()) throw NetworkError("duplicate node label");
  if (source_.empty() || !node_set.count(source_))
    throw NetworkError("source is not a declared node: '" + source_ + "'");
  if (sink_.empty() || !node_set.count(sink_))
    throw NetworkError("sink is not a declared node: '" + sink_ + "'");

  std::set<int> arc_ids;
  std::set<int> components;
  for (const Arc& a : arcs_) {
    if (!arc_ids.insert(a.id).second)
      throw NetworkError("duplicate arc id: " + std::to_string(a.id));
    if (!node_set.count(a.tail))
      throw NetworkError("arc " + std::to_string(a.id) + " references unknown node '" + a.tail +
                         "'");
    if (!node_set.count(a.head))
      throw NetworkError("arc " + std::to_string(a.id) + " references unknown node '" + a.head +
                         "'");
    if (a.tail == a.head)
      throw NetworkError("arc " + std::to_string(a.id) + " is a self-loop");
    if (a.component < 1)
      throw NetworkError("arc " + std::to_string(a.id) + " has non-positive component id");
    if (a.component > kMaxComponents)
      throw NetworkError("component id exceeds supported maximum of " +
                         std::to_string(kMaxComponents));
    components.insert(a.component);
  }
  // Component ids must be exactly 1..n.
  int expected = 1;
  for (int c : components) {
    if (c != expected)
      throw NetworkError("component ids are not contiguous from 1: missing " +
                         std::to_string(expected));
    ++expected;
  }
}

Network Network::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw NetworkError("network document must be a JSON object");
  if (!doc.contains("nodes") || !doc.at("nodes").is_array())
    throw NetworkError("missing or malformed 'nodes' array");
  if (!doc.contains("source")) throw NetworkError("missing 'source'");
  if (!doc.contains("sink")) throw NetworkError("missing 'sink'");
  if (!doc.contains("arcs") || !doc.at("arcs").is_array())
    throw NetworkError("missing or malformed 'arcs' array");

  std::vector<std::string> nodes;
  for (const auto& n : doc.at("nodes")) {
    if (!n.is_string()) throw NetworkError("node labels must be strings");
    nodes.push_back(n.get<std::string>());
  }

  std::vector<Arc> arcs;
  for (const auto& a : doc.at("arcs")) {
    if (!a.is_object() || !a.contains("id") || !a.contains("from") || !a.contains("to"))
      throw NetworkError("each arc needs 'id', 'from' and 'to'");
    Arc arc;
    arc.id = a.at("id").get<int>();
    arc.tail = a.at("from").get<std::string>();
    arc.head = a.at("to").get<std::string>();
    arc.component = a.contains("component") ? a.at("component").get<int>() : arc.id;
    arcs.push_back(std::move(arc));
  }

  return Network(std::move(nodes), std::move(arcs), doc.at("source").get<std::string>(),
                 doc.at("sink").get<std::string>());
}

Network Network::parse(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw NetworkError("network document is not well-formed JSON");
  return from_json(doc);
}

Network Network::fixture(const std::string& name) {
  const std::vector<std::string> nodes{"A", "B", "C", "D"};
  if (name == "fig1") {
    return Network(nodes,
                   {{1, "A", "B", 1},
                    {2, "A", "C", 2},
                    {3, "B", "C", 3},
                    {4, "B", "D", 4},
                    {5, "C", "D", 5}},
                   "A", "D");
  }
  if (name == "fig2") {
    return Network(nodes,
                   {{1, "A", "B", 1},
                    {2, "A", "C", 2},
                    {3, "C", "B", 3},
                    {4, "B", "D", 4},
                    {5, "C", "D", 5}},
                   "A", "D");
  }
  throw NetworkError("unknown fixture: '" + name + "' (have fig1, fig2)");
}

Network Network::load(const std::string& source_spec) {
  if (source_spec.rfind("fixture:", 0) == 0) return fixture(source_spec.substr(8));
  std::ifstream in(source_spec);
  if (!in) throw NetworkError("cannot open network file: " + source_spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

nlohmann::json Network::to_json() const {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : arcs_)
    arcs.push_back({{"id", a.id}, {"from", a.tail}, {"to", a.head}, {"component", a.component}});
  return {{"nodes", nodes_}, {"source", source_}, {"sink", sink_}, {"arcs", arcs}};
}

bool is_working(const Network& net, ComponentSet up) {
  if (net.source() == net.sink()) return true;
  std::map<std::string, std::vector<const Arc*>> out;
  for (const Arc& a : net.arcs())
    if (up & (ComponentSet{1} << (a.component - 1))) out[a.tail].push_back(&a);

  std::set<std::string> seen{net.source()};
  std::vector<std::string> stack{net.source()};
  while (!stack.empty()) {
    std::string u = std::move(stack.back());
    stack.pop_back();
    if (u == net.sink()) return true;
    for (const Arc* a : out[u])
      if (seen.insert(a->head).second) stack.push_back(a->head);
  }
  return false;
}

bool is_working(const Network& net, const StateMask& state) {
  if (state.n != net.num_components())
    throw std::invalid_argument("state mask component count does not match network");
  return is_working(net, state.up);
}

StructureFunction::StructureFunction(const Network& net) {
  std::map<std::string, int> index;
  for (const auto& n : net.nodes()) index.emplace(n, static_cast<int>(index.size()));
  out_.resize(net.nodes().size());
  for (const Arc& a : net.arcs())
    out_[index.at(a.tail)].push_back(
        {index.at(a.tail), index.at(a.head), ComponentSet{1} << (a.component - 1)});
  source_ = index.at(net.source());
  sink_ = index.at(net.sink());
  seen_.resize(net.nodes().size());
  stack_.reserve(net.nodes().size());
}

bool StructureFunction::operator()(ComponentSet up) const {
  if (source_ == sink_) return true;
  std::fill(seen_.begin(), seen_.end(), 0);
  stack_.clear();
  seen_[source_] = 1;
  stack_.push_back(source_);
  while (!stack_.empty()) {
    const int u = stack_.back();
    stack_.pop_back();
    for (const CompiledArc& a : out_[u]) {
      if (!(up & a.bit) || seen_[a.head]) continue;
      if (a.head == sink_) return true;
      seen_[a.head] = 1;
      stack_.push_back(a.head);
    }
  }
  return false;
}

std::vector<ComponentSet> minimal_paths(const Network& net) {
  if (net.source() == net.sink()) return {ComponentSet{0}};

  // Depth-first enumeration of simple node paths, collecting component sets.
  std::vector<ComponentSet> found;
  std::map<std::string, std::vector<const Arc*>> out;
  for (const Arc& a : net.arcs()) out[a.tail].push_back(&a);

  std::set<std::string> visited{net.source()};
  auto dfs = [&](auto&& self, const std::string& u, ComponentSet comps) -> void {
    if (u == net.sink()) {
      found.push_back(comps);
      return;
    }
    for (const Arc* a : out[u]) {
      if (visited.count(a->head)) continue;
      visited.insert(a->head);
      self(self, a->head, comps | (ComponentSet{1} << (a->component - 1)));
      visited.erase(a->head);
    }
  };
  dfs(dfs, net.source(), 0);

  keep_minimal(found);
  return found;
}

std::vector<ComponentSet> minimal_cuts(const Network& net) {
  if (net.source() == net.sink()) return {};
  const auto paths = minimal_paths(net);
  if (paths.empty()) return {ComponentSet{0}};  // already failed: the empty cut

  // Berge-style incremental minimal transversals of the path family.
  std::vector<ComponentSet> trans{0};
  for (ComponentSet path : paths) {
    std::vector<ComponentSet> next;
    for (ComponentSet t : trans) {
      if (t & path) {
        next.push_back(t);
      } else {
        for (ComponentSet bits = path; bits; bits &= bits - 1)
          next.push_back(t | (bits & -bits));
      }
    }
    keep_minimal(next);
    trans = std::move(next);
  }
  std::sort(trans.begin(), trans.end(), set_lex_less);
  return trans;
}

}  // namespace relpoly
