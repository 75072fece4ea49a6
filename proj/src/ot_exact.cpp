#include "torusmix/ot_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace torusmix {

namespace {

// Spanning-tree basis over nodes 0..ns-1 (sources) and ns..ns+nt-1 (sinks),
// rooted at node 0. Every tree arc joins a source and a sink; its physical
// orientation (source -> sink) is therefore determined by the child node's
// side, and flows are stored on the child.
struct Basis {
  int ns = 0, nt = 0;
  std::vector<int> parent, depth, first_child, next_sib, prev_sib;
  std::vector<double> pred_flow;  // flow on the arc (v, parent[v])
  std::vector<double> pi;         // potentials: rc_ij = C_ij + pi[i] - pi[ns+j]

  int num_nodes() const { return ns + nt; }
  bool is_source(int v) const { return v < ns; }

  void attach(int v, int p) {
    parent[v] = p;
    prev_sib[v] = -1;
    next_sib[v] = first_child[p];
    if (first_child[p] != -1) prev_sib[first_child[p]] = v;
    first_child[p] = v;
  }

  void detach(int v) {
    int pr = prev_sib[v], nx = next_sib[v];
    if (pr != -1)
      next_sib[pr] = nx;
    else
      first_child[parent[v]] = nx;
    if (nx != -1) prev_sib[nx] = pr;
  }
};

}  // namespace

TransportSolution solve_transportation(const std::vector<double>& a, const std::vector<double>& b,
                                       const std::vector<double>& C,
                                       const TransportOptions& options) {
  const int ns = static_cast<int>(a.size());
  const int nt = static_cast<int>(b.size());
  if (ns == 0 || nt == 0) throw std::invalid_argument("solve_transportation: empty marginal");
  if (C.size() != static_cast<std::size_t>(ns) * nt)
    throw std::invalid_argument("solve_transportation: cost matrix size mismatch");
  for (double v : a)
    if (!(v >= 0.0)) throw std::invalid_argument("solve_transportation: negative source mass");
  for (double v : b)
    if (!(v >= 0.0)) throw std::invalid_argument("solve_transportation: negative sink mass");

  double max_abs_c = 0.0;
  for (double c : C) {
    if (!std::isfinite(c)) throw std::invalid_argument("solve_transportation: non-finite cost");
    max_abs_c = std::max(max_abs_c, std::abs(c));
  }
  const double rc_eps = options.rc_eps_scale * (1.0 + max_abs_c);

  const int N = ns + nt;
  Basis t;
  t.ns = ns;
  t.nt = nt;
  t.parent.assign(N, -1);
  t.depth.assign(N, 0);
  t.first_child.assign(N, -1);
  t.next_sib.assign(N, -1);
  t.prev_sib.assign(N, -1);
  t.pred_flow.assign(N, 0.0);
  t.pi.assign(N, 0.0);

  // Northwest-corner initial basis: a staircase path through the cost
  // matrix, which is a spanning tree with ns+nt-1 arcs.
  {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(N - 1);
    std::vector<double> flows;
    flows.reserve(N - 1);
    int i = 0, j = 0;
    double ra = a[0], rb = b[0];
    for (int step = 0; step < N - 1; ++step) {
      double f = std::min(ra, rb);
      cells.emplace_back(i, j);
      flows.push_back(f);
      bool adv_i = ra <= rb;
      if (i == ns - 1) adv_i = false;
      if (j == nt - 1) adv_i = true;
      if (adv_i) {
        rb -= ra;
        ++i;
        ra = a[i];
      } else {
        ra -= rb;
        ++j;
        rb = b[j];
      }
    }
    // The staircase is a path starting at source 0: walk it, hanging each
    // newly seen node off the previously seen one.
    std::vector<char> seen(N, 0);
    seen[0] = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      int u = cells[k].first;           // source node
      int w = ns + cells[k].second;     // sink node
      int child = seen[u] ? w : u;
      int par = seen[u] ? u : w;
      if (seen[child])
        throw std::logic_error("solve_transportation: degenerate staircase");
      t.attach(child, par);
      t.depth[child] = t.depth[par] + 1;
      t.pred_flow[child] = flows[k];
      seen[child] = 1;
      // rc = 0 on tree arcs: pi[sink] = C + pi[source].
      double c = C[static_cast<std::size_t>(cells[k].first) * nt + cells[k].second];
      if (child == w)
        t.pi[w] = c + t.pi[u];
      else
        t.pi[u] = t.pi[w] - c;
    }
  }

  const std::int64_t num_arcs = static_cast<std::int64_t>(ns) * nt;
  const std::int64_t block =
      std::max<std::int64_t>(64, static_cast<std::int64_t>(std::sqrt(static_cast<double>(num_arcs))));
  std::int64_t max_pivots = options.max_pivots > 0
                                ? options.max_pivots
                                : std::max<std::int64_t>(1000000, 500LL * N);

  std::int64_t next_arc = 0;
  std::int64_t pivots = 0;
  std::vector<int> stack;
  stack.reserve(N);

  for (;;) {
    // Pricing: wrap-around block search for the most negative reduced cost.
    std::int64_t best_id = -1;
    double best_rc = -rc_eps;
    {
      std::int64_t id = next_arc;
      int i = static_cast<int>(id / nt);
      int j = static_cast<int>(id % nt);
      double pii = t.pi[i];
      std::int64_t scanned = 0;
      while (scanned < num_arcs) {
        std::int64_t stop = std::min<std::int64_t>(block, num_arcs - scanned);
        for (std::int64_t k = 0; k < stop; ++k) {
          double rc = C[id] + pii - t.pi[ns + j];
          if (rc < best_rc) {
            best_rc = rc;
            best_id = id;
          }
          ++id;
          if (++j == nt) {
            j = 0;
            if (++i == ns) {
              i = 0;
              id = 0;
            }
            pii = t.pi[i];
          }
        }
        scanned += stop;
        if (best_id >= 0) break;
      }
      next_arc = id;
    }
    if (best_id < 0) break;  // optimal

    if (++pivots > max_pivots)
      throw std::runtime_error("solve_transportation: pivot limit exceeded (" +
                               std::to_string(max_pivots) + ")");

    const int p = static_cast<int>(best_id / nt);        // entering source node
    const int q = ns + static_cast<int>(best_id % nt);   // entering sink node
    const double rc_enter = best_rc;

    // Apex of the cycle formed by the entering arc and the tree path.
    int apex;
    {
      int u = p, w = q;
      while (u != w) {
        if (t.depth[u] >= t.depth[w])
          u = t.parent[u];
        else
          w = t.parent[w];
      }
      apex = u;
    }

    // Pushing delta along p -> q: on the p-side path source-children's arcs
    // lose flow; on the q-side path sink-children's arcs lose flow.
    double delta = std::numeric_limits<double>::infinity();
    for (int v = p; v != apex; v = t.parent[v])
      if (t.is_source(v)) delta = std::min(delta, t.pred_flow[v]);
    for (int v = q; v != apex; v = t.parent[v])
      if (!t.is_source(v)) delta = std::min(delta, t.pred_flow[v]);

    // Leaving arc: last blocking arc when traversing the cycle in flow
    // direction starting from the apex (Cunningham's anti-cycling rule).
    // Traversal order is [apex..p] then [q..apex], so the preferred
    // candidate is the q-side blocker closest to the apex, else the
    // p-side blocker closest to p.
    int leave = -1;
    bool leave_on_p_side = false;
    for (int v = q; v != apex; v = t.parent[v])
      if (!t.is_source(v) && t.pred_flow[v] == delta) leave = v;  // keep last found
    if (leave < 0) {
      for (int v = p; v != apex; v = t.parent[v])
        if (t.is_source(v) && t.pred_flow[v] == delta) {
          leave = v;
          leave_on_p_side = true;
          break;  // first found = closest to p
        }
    }
    if (leave < 0) throw std::logic_error("solve_transportation: unbounded cycle");

    // Apply the flow change around the cycle.
    for (int v = p; v != apex; v = t.parent[v]) t.pred_flow[v] += t.is_source(v) ? -delta : delta;
    for (int v = q; v != apex; v = t.parent[v]) t.pred_flow[v] += t.is_source(v) ? delta : -delta;

    // Re-root the detached subtree at the entering arc's endpoint inside it,
    // then hang it off the other endpoint.
    const int in_node = leave_on_p_side ? p : q;
    const int out_node = leave_on_p_side ? q : p;
    {
      int v = in_node;
      int old_parent = t.parent[v];
      double old_flow = t.pred_flow[v];
      t.detach(v);
      t.attach(v, out_node);
      t.pred_flow[v] = delta;
      int prev = v;
      while (prev != leave) {
        int nxt = old_parent;
        int nxt_parent = t.parent[nxt];
        double nxt_flow = t.pred_flow[nxt];
        t.detach(nxt);
        t.attach(nxt, prev);
        t.pred_flow[nxt] = old_flow;
        old_parent = nxt_parent;
        old_flow = nxt_flow;
        prev = nxt;
      }
    }

    // Update potentials and depths across the re-rooted subtree.
    const double shift = leave_on_p_side ? -rc_enter : rc_enter;
    stack.clear();
    stack.push_back(in_node);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      t.pi[v] += shift;
      t.depth[v] = t.depth[t.parent[v]] + 1;
      for (int c = t.first_child[v]; c != -1; c = t.next_sib[c]) stack.push_back(c);
    }
  }

  TransportSolution sol;
  sol.pivots = pivots;
  sol.alpha.resize(ns);
  sol.beta.resize(nt);
  for (int i = 0; i < ns; ++i) sol.alpha[i] = -t.pi[i];

  double primal = 0.0;
  for (int v = 0; v < N; ++v) {
    if (t.parent[v] < 0) continue;
    int i = t.is_source(v) ? v : t.parent[v];
    int j = (t.is_source(v) ? t.parent[v] : v) - ns;
    double f = t.pred_flow[v];
    primal += f * C[static_cast<std::size_t>(i) * nt + j];
    if (f > 0.0)
      sol.plan.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), f});
  }
  sol.cost = primal;

  // Project sink potentials into exact dual feasibility so the reported gap
  // is a certificate no matter how pricing terminated.
  for (int j = 0; j < nt; ++j) {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ns; ++i)
      m = std::min(m, C[static_cast<std::size_t>(i) * nt + j] - sol.alpha[i]);
    sol.beta[j] = m;
  }
  double dual = 0.0;
  for (int i = 0; i < ns; ++i) dual += a[i] * sol.alpha[i];
  for (int j = 0; j < nt; ++j) dual += b[j] * sol.beta[j];
  sol.dual_gap = primal - dual;
  return sol;
}

}  // namespace torusmix
