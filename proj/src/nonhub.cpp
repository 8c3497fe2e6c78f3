#include "ehftw/nonhub.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "ehftw/errors.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"
#include "ehftw/separators.hpp"

namespace ehftw {

namespace {

int covered(const VertexSet& nd, const VertexSet& y) { return static_cast<int>(set_intersection(nd, y).size()); }

// Index maximising |N(D) ∩ target| among components passing `ok`; -1 if none.
int best_component(const std::vector<VertexSet>& nbr, const VertexSet& target,
                   const std::function<bool(const VertexSet&)>& ok) {
  int best = -1, score = -1;
  for (int i = 0; i < static_cast<int>(nbr.size()); ++i)
    if (ok(nbr[i]) && covered(nbr[i], target) > score) {
      best = i;
      score = covered(nbr[i], target);
    }
  return best;
}

bool covers(const std::vector<VertexSet>& nbr, const std::vector<int>& pick, const VertexSet& y) {
  VertexSet all;
  for (int i : pick) all = set_union(all, nbr[i]);
  return is_subset(y, all);
}

}  // namespace

ComponentCover cover_by_components(const Graph& g, const TreeDecomposition& td, int node, const VertexSet& y) {
  const VertexSet& bag = td.bag(node);
  if (!is_subset(y, bag)) throw InputError("cover_by_components: y must lie in the bag");
  if (!is_stable(g, y)) throw InputError("cover_by_components: y must be stable");
  if (!is_pmc(g, bag).is_pmc) throw InputError("cover_by_components: the bag is not a PMC (td not structured)");
  const auto comps = components(g, bag);
  std::vector<VertexSet> nbr;
  for (const auto& d : comps) nbr.push_back(open_neighborhood(g, d));
  ComponentCover out;
  VertexSet seen;
  for (const auto& nd : nbr) seen = set_union(seen, nd);
  out.enclosed = set_difference(y, seen);
  const VertexSet target = set_intersection(y, seen);
  if (target.empty()) return out;
  auto finish = [&](std::vector<int> pick) {
    std::sort(pick.begin(), pick.end());
    pick.erase(std::unique(pick.begin(), pick.end()), pick.end());
    for (int i : pick) out.components.push_back(comps[i]);
    return out;
  };
  auto any = [](const VertexSet&) { return true; };
  const int d1 = best_component(nbr, target, any);
  if (covers(nbr, {d1}, target)) return finish({d1});
  const Vertex x1 = set_difference(target, nbr[d1]).front();
  const VertexSet y1 = set_intersection(target, nbr[d1]);
  const int d2 = best_component(nbr, y1, [&](const VertexSet& nd) { return contains(nd, x1); });
  if (covers(nbr, {d1, d2}, target)) return finish({d1, d2});
  const VertexSet y1_minus_2 = set_difference(y1, nbr[d2]);
  if (!y1_minus_2.empty()) {
    const Vertex x2 = y1_minus_2.front();
    const int d3 = best_component(nbr, target, [&](const VertexSet& nd) { return contains(nd, x1) && contains(nd, x2); });
    if (d3 >= 0) {
      if (covers(nbr, {d1, d2, d3}, target)) return finish({d1, d2, d3});
      const VertexSet x3s = set_difference(set_intersection(y1, nbr[d2]), nbr[d3]);
      if (!x3s.empty()) {
        const VertexSet xs{x1, x2, x3s.front()};
        std::vector<int> family;
        for (int i = 0; i < static_cast<int>(nbr.size()); ++i)
          if (covered(nbr[i], xs) > 1) family.push_back(i);
        if (family.size() <= 4 && covers(nbr, family, target)) return finish(family);
      }
    }
  }
  // Fallback: any cover by at most four components.
  const int c = static_cast<int>(nbr.size());
  std::vector<int> pick;
  std::function<bool(int, int)> search = [&](int from, int left) {
    if (covers(nbr, pick, target)) return true;
    if (left == 0) return false;
    for (int i = from; i < c; ++i) {
      pick.push_back(i);
      if (search(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (search(0, 4)) return finish(pick);
  std::optional<PatternWitness> witness;
  try {
    witness = find_class_C_obstruction(g);
  } catch (const CapabilityError&) {
  }
  throw ClassViolation("stable bag subset needs more than four components to cover",
                       witness ? std::make_shared<const PatternWitness>(*witness) : nullptr);
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  // Bron–Kerbosch with pivoting on the complement of g[within].
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    const VertexSet px = set_union(p, x);
    Vertex pivot = px.front();
    std::size_t best = 0;
    for (Vertex u : px) {
      const auto nn = set_difference(p, closed_neighborhood(g, u));
      if (nn.size() >= best) {
        best = nn.size();
        pivot = u;
      }
    }
    const VertexSet candidates = set_intersection(p, closed_neighborhood(g, pivot));
    for (Vertex v : candidates) {
      const VertexSet non_nbrs = set_difference(within, closed_neighborhood(g, v));
      bk(with(r, v), set_intersection(p, non_nbrs), set_intersection(x, non_nbrs));
      p = without(p, v);
      x = with(x, v);
    }
  };
  bk({}, within, {});
  std::sort(out.begin(), out.end());
  return out;
}

int stable_number_within(const Graph& g, const VertexSet& within) {
  int best = 0;
  for (const auto& s : maximal_stable_sets(g, within)) best = std::max(best, static_cast<int>(s.size()));
  return best;
}

NonhubReport check_nonhub_bounds(const Graph& g, const TreeDecomposition& td, int tau) {
  require_valid(g, td);
  NonhubReport r;
  r.tau = tau;
  r.hubs = hubs(g);
  for (int t = 0; t < td.node_count(); ++t) {
    BagBound b;
    b.node = t;
    b.non_hubs = set_difference(td.bag(t), r.hubs);
    b.max_stable = stable_number_within(g, b.non_hubs);
    r.max_bag_stable = std::max(r.max_bag_stable, b.max_stable);
    r.bags.push_back(std::move(b));
  }
  for (const auto& s : minimal_separators(g)) {
    ++r.separators_checked;
    r.max_separator_stable = std::max(r.max_separator_stable, stable_number_within(g, set_difference(s, r.hubs)));
  }
  r.bag_bound_ok = r.max_bag_stable <= 4 * tau;
  r.separator_bound_ok = r.max_separator_stable <= tau;
  return r;
}

}  // namespace ehftw
