#include "treeconn/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "flow_network.hpp"
#include "tree_enum.hpp"
#include "treeconn/errors.hpp"

namespace treeconn {

namespace {

using detail::FlowNetwork;

void require_distinct(const Digraph& d, Vertex x, Vertex y) {
  if (!d.contains(x) || !d.contains(y)) throw InputError("vertex out of range");
  if (x == y) throw InputError("local connectivity needs distinct endpoints");
}

// Splits the flowed arcs into x->y paths, discarding any cycles met on the way.
void decompose(const Digraph& d, Vertex x, Vertex y, const std::vector<bool>& flowed, int count,
               FlowResult& out) {
  std::vector<std::vector<ArcId>> pending(static_cast<std::size_t>(d.order()));
  for (std::size_t id = 0; id < flowed.size(); ++id) {
    if (flowed[id]) pending[static_cast<std::size_t>(d.arcs()[id].tail)].push_back(static_cast<ArcId>(id));
  }
  for (int p = 0; p < count; ++p) {
    std::vector<Vertex> verts{x};
    std::vector<ArcId> arcs;
    std::vector<int> position(static_cast<std::size_t>(d.order()), -1);
    position[static_cast<std::size_t>(x)] = 0;
    Vertex v = x;
    while (v != y) {
      auto& bucket = pending[static_cast<std::size_t>(v)];
      if (bucket.empty()) throw std::logic_error("flow decomposition stalled");
      const ArcId id = bucket.back();
      bucket.pop_back();
      const Vertex w = d.arc(id).head;
      const int seen_at = position[static_cast<std::size_t>(w)];
      if (seen_at >= 0) {
        for (std::size_t i = static_cast<std::size_t>(seen_at) + 1; i < verts.size(); ++i) {
          position[static_cast<std::size_t>(verts[i])] = -1;
        }
        verts.resize(static_cast<std::size_t>(seen_at) + 1);
        arcs.resize(static_cast<std::size_t>(seen_at));
      } else {
        position[static_cast<std::size_t>(w)] = static_cast<int>(verts.size());
        verts.push_back(w);
        arcs.push_back(id);
      }
      v = w;
    }
    out.paths.push_back(std::move(verts));
    out.arc_paths.push_back(std::move(arcs));
  }
}

// Vertex v becomes 2v (in) -> 2v+1 (out); direct x->y arcs are excluded.
FlowNetwork split_network(const Digraph& d, Vertex x, Vertex y) {
  FlowNetwork net(2 * d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    const int cap = (v == x || v == y) ? FlowNetwork::kInfinite : 1;
    net.add_edge(2 * v, 2 * v + 1, cap, -2);
  }
  for (std::size_t id = 0; id < d.size(); ++id) {
    const Arc& a = d.arcs()[id];
    if (a.tail == x && a.head == y) continue;
    net.add_edge(2 * a.tail + 1, 2 * a.head, 1, static_cast<int>(id));
  }
  return net;
}

int direct_arc_count(const Digraph& d, Vertex x, Vertex y) {
  int direct = 0;
  for (ArcId id : d.out_arcs(x)) {
    if (d.arc(id).head == y) ++direct;
  }
  return direct;
}

int kappa_value(const Digraph& d, Vertex x, Vertex y) {
  FlowNetwork net = split_network(d, x, y);
  return direct_arc_count(d, x, y) + net.max_flow(2 * x + 1, 2 * y);
}

}  // namespace

namespace detail {

int lambda_value(const Digraph& d, Vertex x, Vertex y) {
  FlowNetwork net(d.order());
  for (std::size_t id = 0; id < d.size(); ++id) {
    net.add_edge(d.arcs()[id].tail, d.arcs()[id].head, 1, static_cast<int>(id));
  }
  return net.max_flow(x, y);
}

}  // namespace detail

FlowResult lambda_local(const Digraph& d, Vertex x, Vertex y) {
  require_distinct(d, x, y);
  FlowNetwork net(d.order());
  std::vector<int> edge_of(d.size());
  for (std::size_t id = 0; id < d.size(); ++id) {
    edge_of[id] = net.add_edge(d.arcs()[id].tail, d.arcs()[id].head, 1, static_cast<int>(id));
  }
  FlowResult result;
  result.value = net.max_flow(x, y);
  std::vector<bool> flowed(d.size(), false);
  for (std::size_t id = 0; id < d.size(); ++id) flowed[id] = net.flow_on(edge_of[id]) > 0;
  decompose(d, x, y, flowed, result.value, result);
  return result;
}

FlowResult kappa_local(const Digraph& d, Vertex x, Vertex y) {
  require_distinct(d, x, y);
  FlowNetwork net = split_network(d, x, y);
  FlowResult result;
  for (ArcId id : d.out_arcs(x)) {
    if (d.arc(id).head == y) {
      result.paths.push_back({x, y});
      result.arc_paths.push_back({id});
    }
  }
  const int through = net.max_flow(2 * x + 1, 2 * y);
  std::vector<bool> flowed(d.size(), false);
  for (int v = 0; v < net.node_count(); ++v) {
    for (int e : net.out(v)) {
      const auto& edge = net.edge(e);
      if (edge.tag >= 0 && net.flow_on(e) > 0) flowed[static_cast<std::size_t>(edge.tag)] = true;
    }
  }
  decompose(d, x, y, flowed, through, result);
  result.value = static_cast<int>(result.paths.size());
  return result;
}

int global_lambda(const Digraph& d) {
  if (d.order() < 2) throw InputError("global arc-strong connectivity needs n >= 2");
  int best = FlowNetwork::kInfinite;
  for (Vertex v = 1; v < d.order() && best > 0; ++v) {
    best = std::min({best, detail::lambda_value(d, 0, v), detail::lambda_value(d, v, 0)});
  }
  return best;
}

int global_kappa(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw InputError("global vertex-strong connectivity needs n >= 2");
  int best = n - 1;
  for (Vertex x = 0; x < n && best > 0; ++x) {
    for (Vertex y = 0; y < n && best > 0; ++y) {
      if (x == y || d.has_arc(x, y)) continue;
      best = std::min(best, kappa_value(d, x, y));
    }
  }
  return best;
}

bool is_strong(const Digraph& d) {
  if (d.order() <= 1) return true;
  return find_out_branching(d, 0).has_value() && find_out_branching(reverse(d), 0).has_value();
}

std::optional<OutTree> find_out_branching(const Digraph& d, Vertex r) {
  if (!d.contains(r)) throw InputError("root out of range");
  OutTree tree{r, {}};
  std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
  std::queue<Vertex> queue;
  seen[static_cast<std::size_t>(r)] = true;
  queue.push(r);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (ArcId id : d.out_arcs(v)) {
      const Vertex w = d.arc(id).head;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      tree.arcs.push_back(id);
      queue.push(w);
    }
  }
  if (static_cast<int>(tree.arcs.size()) != d.order() - 1) return std::nullopt;
  std::sort(tree.arcs.begin(), tree.arcs.end());
  return tree;
}

bool verify_flow_paths(const Digraph& d, Vertex x, Vertex y, const FlowResult& flow, bool vertex_mode) {
  if (static_cast<int>(flow.arc_paths.size()) != flow.value ||
      flow.paths.size() != flow.arc_paths.size()) {
    return false;
  }
  std::set<ArcId> used_arcs;
  std::set<Vertex> used_internal;
  for (std::size_t p = 0; p < flow.arc_paths.size(); ++p) {
    const auto& verts = flow.paths[p];
    const auto& arcs = flow.arc_paths[p];
    if (verts.size() != arcs.size() + 1 || verts.front() != x || verts.back() != y) return false;
    std::set<Vertex> on_path(verts.begin(), verts.end());
    if (on_path.size() != verts.size()) return false;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i] < 0 || static_cast<std::size_t>(arcs[i]) >= d.size()) return false;
      const Arc& a = d.arc(arcs[i]);
      if (a.tail != verts[i] || a.head != verts[i + 1]) return false;
      if (!used_arcs.insert(arcs[i]).second) return false;
    }
    if (vertex_mode) {
      for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
        if (!used_internal.insert(verts[i]).second) return false;
      }
    }
  }
  return true;
}

}  // namespace treeconn
