#include <bit>
#include <functional>

#include "ehftw/testing/oracles.hpp"

namespace ehftw::oracle {

namespace {

std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> nbr(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    nbr[v] = 1U << v;
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  }
  return nbr;
}

}  // namespace

int brute_stable_number(const Graph& g) {
  const int n = g.order();
  auto nbr = closed_masks(g);
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if ((s >> v & 1U) && (nbr[v] & s) != (1U << v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

int brute_domination_number(const Graph& g) {
  const int n = g.order();
  auto nbr = closed_masks(g);
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  int best = n;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) >= best) continue;
    std::uint32_t dom = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1U) dom |= nbr[v];
    if (dom == all) best = std::popcount(s);
  }
  return best;
}

bool brute_r_colorable(const Graph& g, int r) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int c = 0; c < r; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (w < v && color[w] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (place(v + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  return place(0);
}

int brute_chromatic_number(const Graph& g) {
  int r = 0;
  while (!brute_r_colorable(g, r)) ++r;
  return r;
}

}  // namespace ehftw::oracle
