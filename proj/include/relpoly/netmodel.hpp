#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace relpoly {

/// Subset of component ids 1..n as a bitmask (bit i-1 stands for component i).
using ComponentSet = std::uint32_t;

ComponentSet component_set(const std::vector<int>& ids);
std::vector<int> component_list(ComponentSet s);
std::string component_set_str(ComponentSet s);

/// Up/down state of the component vector.
struct StateMask {
  ComponentSet up = 0;
  int n = 0;
};

struct Arc {
  int id = 0;
  std::string tail;
  std::string head;
  int component = 0;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-terminal directed network. Arcs carry component ids; several arcs may
/// share one component id (that is how undirected edges are modeled: two
/// antiparallel arcs with a common component). Component ids must form the
/// contiguous range 1..n. Immutable after construction.
class Network {
 public:
  Network(std::vector<std::string> nodes, std::vector<Arc> arcs, std::string source,
          std::string sink);

  /// Parses the JSON document format:
  ///   {"nodes":[...], "source":"A", "sink":"D",
  ///    "arcs":[{"id":1,"from":"A","to":"B","component":1}, ...]}
  /// "component" defaults to "id". Each malformed input yields a distinct
  /// NetworkError diagnostic.
  static Network parse(const std::string& json_text);
  static Network from_json(const nlohmann::json& doc);

  /// Built-in bridge fixtures "fig1" and "fig2". Both share the arc set
  /// 1:A->B, 2:A->C, 4:B->D, 5:C->D and differ in the bridge arc:
  /// fig1 has 3:B->C, fig2 has 3:C->B. The fig2 orientation is not stated
  /// explicitly anywhere upstream; it is the one consistent with that
  /// fixture's known minimal-cut list, which is why it is pinned here.
  static Network fixture(const std::string& name);

  /// Loads "fixture:NAME" or a JSON file path.
  static Network load(const std::string& source_spec);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::string& source() const { return source_; }
  const std::string& sink() const { return sink_; }
  int num_components() const { return num_components_; }

  nlohmann::json to_json() const;

 private:
  void validate() const;

  std::vector<std::string> nodes_;
  std::vector<Arc> arcs_;
  std::string source_;
  std::string sink_;
  int num_components_ = 0;
};

/// True iff the sink is reachable from the source using only arcs whose
/// component id is in the up-set. Total on valid inputs; source == sink is
/// always working.
bool is_working(const Network& net, ComponentSet up);
bool is_working(const Network& net, const StateMask& state);

/// Reachability evaluator compiled to integer node ids for tight loops
/// (state sweeps, Monte Carlo). Not safe for concurrent calls on one
/// instance; make one per thread.
class StructureFunction {
 public:
  explicit StructureFunction(const Network& net);
  bool operator()(ComponentSet up) const;

 private:
  struct CompiledArc {
    int tail;
    int head;
    ComponentSet bit;
  };
  std::vector<std::vector<CompiledArc>> out_;
  int source_ = 0;
  int sink_ = 0;
  mutable std::vector<char> seen_;
  mutable std::vector<int> stack_;
};

/// All inclusion-minimal component sets whose joint operation connects source
/// to sink. Empty when the sink is unreachable outright; the single empty set
/// when source == sink. Sorted by element list.
std::vector<ComponentSet> minimal_paths(const Network& net);

/// All inclusion-minimal component sets whose joint failure disconnects
/// source from sink; computed as the minimal transversals of the minimal
/// paths. Sorted by element list.
std::vector<ComponentSet> minimal_cuts(const Network& net);

}  // namespace relpoly
