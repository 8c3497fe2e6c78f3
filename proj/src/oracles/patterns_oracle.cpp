#include <bit>
#include <functional>

#include "ehftw/testing/oracles.hpp"

namespace ehftw::oracle {

namespace {

struct Sub {
  int n = 0;
  std::vector<Vertex> host;            // local -> host
  std::vector<std::uint32_t> nbr;      // local adjacency masks
  int deg(int v) const { return std::popcount(nbr[v]); }
};

Sub make_sub(const Graph& g, std::uint64_t s) {
  Sub out;
  out.host = from_mask(s);
  out.n = static_cast<int>(out.host.size());
  out.nbr.assign(out.n, 0);
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j)
      if (i != j && g.adjacent(out.host[i], out.host[j])) out.nbr[i] |= 1U << j;
  return out;
}

int comps_of(const Sub& s, std::uint32_t allowed, std::vector<std::uint32_t>* parts = nullptr) {
  int count = 0;
  std::uint32_t left = allowed;
  while (left) {
    std::uint32_t comp = left & (~left + 1);
    for (std::uint32_t grown = comp;;) {
      std::uint32_t next = grown;
      for (std::uint32_t b = grown; b; b &= b - 1) next |= s.nbr[std::countr_zero(b)] & allowed;
      if (next == grown) break;
      grown = next;
      comp = next;
    }
    left &= ~comp;
    if (parts) parts->push_back(comp);
    ++count;
  }
  return count;
}

std::uint32_t full(const Sub& s) { return s.n == 32 ? ~0U : (1U << s.n) - 1; }

int edge_count(const Sub& s, std::uint32_t within) {
  int e = 0;
  for (std::uint32_t b = within; b; b &= b - 1) e += std::popcount(s.nbr[std::countr_zero(b)] & within);
  return e / 2;
}

bool hole(const Sub& s) {
  if (s.n < 4) return false;
  for (int v = 0; v < s.n; ++v)
    if (s.deg(v) != 2) return false;
  return comps_of(s, full(s)) == 1;
}

// Cyclic order of a hole subgraph.
std::vector<int> cycle_order(const Sub& s, std::uint32_t within) {
  std::vector<int> order;
  int start = std::countr_zero(within);
  int prev = -1, cur = start;
  do {
    order.push_back(cur);
    std::uint32_t nb = s.nbr[cur] & within;
    int a = std::countr_zero(nb);
    nb &= nb - 1;
    int b = std::countr_zero(nb);
    int next = a != prev ? a : b;
    prev = cur;
    cur = next;
  } while (cur != start);
  return order;
}

bool theta(const Sub& s) {
  std::vector<int> big;
  for (int v = 0; v < s.n; ++v) {
    if (s.deg(v) == 3) big.push_back(v);
    else if (s.deg(v) != 2) return false;
  }
  if (big.size() != 2 || (s.nbr[big[0]] >> big[1] & 1U)) return false;
  if (comps_of(s, full(s)) != 1) return false;
  std::vector<std::uint32_t> parts;
  if (comps_of(s, full(s) & ~(1U << big[0]) & ~(1U << big[1]), &parts) != 3) return false;
  for (auto p : parts)
    if (!(s.nbr[big[0]] & p) || !(s.nbr[big[1]] & p)) return false;
  return true;
}

bool is_triangle(const Sub& s, int a, int b, int c) {
  return (s.nbr[a] >> b & 1U) && (s.nbr[a] >> c & 1U) && (s.nbr[b] >> c & 1U);
}

// After deleting the given triangle edges, is the rest a disjoint union of
// `paths` paths (components that are trees with max degree 2)?
bool linear_forest_without(const Sub& s, const std::vector<std::pair<int, int>>& removed, int paths,
                           std::vector<std::uint32_t>& nbr) {
  nbr = s.nbr;
  for (auto [a, b] : removed) {
    nbr[a] &= ~(1U << b);
    nbr[b] &= ~(1U << a);
  }
  int edges = 0;
  for (int v = 0; v < s.n; ++v) {
    if (std::popcount(nbr[v]) > 2) return false;
    edges += std::popcount(nbr[v]);
  }
  edges /= 2;
  Sub t = s;
  t.nbr = nbr;
  return comps_of(t, full(s)) == paths && edges == s.n - paths;
}

bool prism(const Sub& s) {
  std::vector<int> big;
  for (int v = 0; v < s.n; ++v) {
    if (s.deg(v) == 3) big.push_back(v);
    else if (s.deg(v) != 2) return false;
  }
  if (big.size() != 6 || comps_of(s, full(s)) != 1) return false;
  // Choose the triangle containing big[0]; the other three must be a triangle too.
  for (int i = 1; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      std::vector<int> t1{big[0], big[i], big[j]}, t2;
      for (int v : big)
        if (v != big[0] && v != big[i] && v != big[j]) t2.push_back(v);
      if (!is_triangle(s, t1[0], t1[1], t1[2]) || !is_triangle(s, t2[0], t2[1], t2[2])) continue;
      std::vector<std::pair<int, int>> rm{{t1[0], t1[1]}, {t1[0], t1[2]}, {t1[1], t1[2]},
                                          {t2[0], t2[1]}, {t2[0], t2[2]}, {t2[1], t2[2]}};
      std::vector<std::uint32_t> nbr;
      if (!linear_forest_without(s, rm, 3, nbr)) continue;
      // Each path joins t1 to t2.
      Sub t = s;
      t.nbr = nbr;
      std::vector<std::uint32_t> parts;
      comps_of(t, full(s), &parts);
      std::uint32_t m1 = (1U << t1[0]) | (1U << t1[1]) | (1U << t1[2]);
      std::uint32_t m2 = (1U << t2[0]) | (1U << t2[1]) | (1U << t2[2]);
      bool ok = true;
      for (auto p : parts) ok = ok && std::popcount(p & m1) == 1 && std::popcount(p & m2) == 1;
      if (ok) return true;
    }
  return false;
}

bool pyramid(const Sub& s) {
  std::vector<int> big;
  for (int v = 0; v < s.n; ++v) {
    if (s.deg(v) == 3) big.push_back(v);
    else if (s.deg(v) != 2) return false;
  }
  if (big.size() != 4 || comps_of(s, full(s)) != 1) return false;
  for (int zi = 0; zi < 4; ++zi) {
    std::vector<int> t;
    for (int i = 0; i < 4; ++i)
      if (i != zi) t.push_back(big[i]);
    int z = big[zi];
    if (!is_triangle(s, t[0], t[1], t[2])) continue;
    int direct = 0;
    for (int v : t) direct += (s.nbr[z] >> v) & 1U;
    if (direct > 1) continue;
    // Without the triangle edges the rest is a subdivided claw centred at z.
    std::vector<std::uint32_t> nbr = s.nbr;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
      nbr[a] &= ~(1U << b);
      nbr[b] &= ~(1U << a);
    }
    Sub c = s;
    c.nbr = nbr;
    int edges = 0;
    for (int v = 0; v < s.n; ++v) edges += std::popcount(nbr[v]);
    if (edges / 2 == s.n - 1 && comps_of(c, full(s)) == 1 && std::popcount(nbr[z]) == 3) return true;
  }
  return false;
}

// Wheel test with x the only vertex outside the hole.
bool wheel_with(const Sub& s, bool want_even_only) {
  for (int x = 0; x < s.n; ++x) {
    std::uint32_t rest = full(s) & ~(1U << x);
    bool is_hole = s.n - 1 >= 4 && comps_of(s, rest) == 1;
    for (std::uint32_t b = rest; b && is_hole; b &= b - 1)
      is_hole = std::popcount(s.nbr[std::countr_zero(b)] & rest) == 2;
    if (!is_hole) continue;
    std::uint32_t nx = s.nbr[x];
    int cnt = std::popcount(nx);
    if (cnt < 3) continue;
    if (want_even_only) {
      if (cnt % 2 == 0) return true;
      continue;
    }
    if (cnt > 3) return true;
    int inner = edge_count(s, nx);
    if (inner == 0) return true;  // 3 pairwise nonadjacent neighbours: proper
  }
  return false;
}

bool kpyramid(const Graph& g, const Sub& s, int k) {
  // Split into a hole H and k path components.
  const std::uint32_t all = full(s);
  for (std::uint32_t h = all;; h = (h - 1) & all) {
    if (std::popcount(h) >= 2 * k + 3) {
      bool is_hole = comps_of(s, h) == 1;
      for (std::uint32_t b = h; b && is_hole; b &= b - 1)
        is_hole = std::popcount(s.nbr[std::countr_zero(b)] & h) == 2;
      std::vector<std::uint32_t> parts;
      if (is_hole && comps_of(s, all & ~h, &parts) == k) {
        bool paths_ok = true;
        std::vector<std::pair<int, int>> ends;  // per component
        for (auto p : parts) {
          int e = edge_count(s, p);
          std::vector<int> leaves;
          for (std::uint32_t b = p; b; b &= b - 1) {
            int v = std::countr_zero(b);
            int d = std::popcount(s.nbr[v] & p);
            if (d > 2) paths_ok = false;
            if (d <= 1) leaves.push_back(v);
          }
          if (e != std::popcount(p) - 1) paths_ok = false;
          if (!paths_ok) break;
          ends.emplace_back(leaves.front(), leaves.back());
        }
        if (paths_ok) {
          auto cyc = cycle_order(s, h);
          const int len = static_cast<int>(cyc.size());
          for (int plen = 2 * k + 2; plen < len; ++plen)
            for (int start = 0; start < len; ++start) {
              std::vector<int> ppos(s.n, -1), qpos(s.n, -1);
              std::uint32_t pm = 0, qm = 0;
              for (int i = 0; i < len; ++i) {
                int v = cyc[(start + i) % len];
                if (i < plen) { ppos[v] = i; pm |= 1U << v; }
                else { qpos[v] = i - plen; qm |= 1U << v; }
              }
              // For each component pick the orientation that satisfies the attachment rules.
              std::vector<std::pair<int, int>> info;  // (pair position, z position)
              bool ok = true;
              for (std::size_t c = 0; c < parts.size() && ok; ++c) {
                bool found = false;
                for (int flip = 0; flip < 2 && !found; ++flip) {
                  int a = flip ? ends[c].second : ends[c].first;
                  int b = flip ? ends[c].first : ends[c].second;
                  std::uint32_t ap = s.nbr[a] & pm, bq = s.nbr[b] & qm;
                  if (std::popcount(ap) != 2 || std::popcount(bq) != 1) continue;
                  int x = std::countr_zero(ap), y = 31 - std::countl_zero(ap);
                  int px = std::min(ppos[x], ppos[y]), py = std::max(ppos[x], ppos[y]);
                  if (py != px + 1 || px < 1 || py > plen - 2) continue;
                  if (a != b && ((s.nbr[a] & qm) || (s.nbr[b] & pm))) continue;
                  std::uint32_t inner = parts[c] & ~(1U << a) & ~(1U << b);
                  bool anti = true;
                  for (std::uint32_t t = inner; t; t &= t - 1) anti = anti && !(s.nbr[std::countr_zero(t)] & h);
                  if (!anti) continue;
                  info.emplace_back(px, qpos[std::countr_zero(bq)]);
                  found = true;
                }
                ok = found;
              }
              if (!ok) continue;
              std::sort(info.begin(), info.end());
              bool gaps = true, inc = true, dec = true;
              for (std::size_t i = 0; i + 1 < info.size(); ++i) {
                gaps = gaps && info[i + 1].first >= info[i].first + 2;
                inc = inc && info[i].second <= info[i + 1].second;
                dec = dec && info[i].second >= info[i + 1].second;
              }
              if (gaps && (inc || dec)) return true;
            }
        }
      }
    }
    if (h == 0) break;
  }
  (void)g;
  return false;
}

}  // namespace

bool subset_is(const Graph& g, std::uint64_t mask, Shape shape, int k) {
  Sub s = make_sub(g, mask);
  switch (shape) {
    case Shape::Hole: return hole(s);
    case Shape::EvenHole: return hole(s) && s.n % 2 == 0;
    case Shape::OddHole: return hole(s) && s.n % 2 == 1;
    case Shape::C4: return hole(s) && s.n == 4;
    case Shape::Theta: return theta(s);
    case Shape::Prism: return prism(s);
    case Shape::Pyramid: return pyramid(s);
    case Shape::EvenWheel: return s.n >= 5 && wheel_with(s, true);
    case Shape::ProperWheel: return s.n >= 5 && wheel_with(s, false);
    case Shape::KPyramid: return kpyramid(g, s, k);
  }
  return false;
}

std::optional<VertexSet> brute_find(const Graph& g, Shape shape, int k) {
  const int n = g.order();
  for (int size = 0; size <= n; ++size) {
    if (size == 0) continue;
    // Gosper's hack over subsets of the given size.
    std::uint64_t m = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
      if (subset_is(g, m, shape, k)) return from_mask(m);
      std::uint64_t c = m & (~m + 1);
      std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

VertexSet brute_hubs(const Graph& g) {
  const int n = g.order();
  std::uint64_t hubs = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) < 5) continue;
    Sub s = make_sub(g, m);
    for (int x = 0; x < s.n; ++x) {
      std::uint32_t rest = full(s) & ~(1U << x);
      bool is_hole = comps_of(s, rest) == 1;
      for (std::uint32_t b = rest; b && is_hole; b &= b - 1)
        is_hole = std::popcount(s.nbr[std::countr_zero(b)] & rest) == 2;
      if (!is_hole) continue;
      int cnt = std::popcount(s.nbr[x]);
      if (cnt < 3) continue;
      if (cnt > 3 || edge_count(s, s.nbr[x]) == 0) hubs |= std::uint64_t{1} << s.host[x];
    }
  }
  return from_mask(hubs);
}

}  // namespace ehftw::oracle
