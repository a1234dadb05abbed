#include "enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace fuzzytopo {

namespace {

void require_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + " supports n in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) +
                                "], got " + std::to_string(n));
  }
}

// Parent array of a canonical level sequence: the parent of position i is the
// most recent position at the previous level.
std::vector<int> parents_of_level_sequence(const std::vector<int>& seq) {
  std::vector<int> parent(seq.size(), -1);
  std::vector<int> last_at_level(seq.size() + 2, -1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int level = seq[i];
    if (i > 0) parent[i] = last_at_level[static_cast<std::size_t>(level - 1)];
    last_at_level[static_cast<std::size_t>(level)] = static_cast<int>(i);
  }
  return parent;
}

std::vector<std::vector<int>> adjacency_from_parents(
    const std::vector<int>& parent) {
  std::vector<std::vector<int>> adj(parent.size());
  for (std::size_t i = 1; i < parent.size(); ++i) {
    adj[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));
    adj[i].push_back(parent[i]);
  }
  return adj;
}

// Lexicographically largest level sequence of the tree rooted at `root`,
// written with absolute depths starting at `depth`.
std::vector<int> canonical_rooted_sequence(
    const std::vector<std::vector<int>>& adj, int root, int from, int depth) {
  std::vector<std::vector<int>> kids;
  for (int w : adj[static_cast<std::size_t>(root)]) {
    if (w != from) {
      kids.push_back(canonical_rooted_sequence(adj, w, root, depth + 1));
    }
  }
  std::sort(kids.begin(), kids.end(), std::greater<>());
  std::vector<int> out{depth};
  for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
  return out;
}

// Centroids of a free tree: vertices minimizing the largest component left by
// their removal. One or two of them.
std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> best;
  int best_weight = n + 1;
  for (int v = 0; v < n; ++v) {
    int weight = 0;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      // size of the component containing w once v is removed
      int size = 0;
      std::vector<int> stack{w};
      seen[static_cast<std::size_t>(w)] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y : adj[static_cast<std::size_t>(x)]) {
          if (!seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            stack.push_back(y);
          }
        }
      }
      weight = std::max(weight, size);
    }
    if (weight < best_weight) {
      best_weight = weight;
      best = {v};
    } else if (weight == best_weight) {
      best.push_back(v);
    }
  }
  return best;
}

std::vector<std::pair<int, int>> edges_from_parents(
    const std::vector<int>& parent) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < parent.size(); ++i) {
    int a = parent[i];
    int b = static_cast<int>(i);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// ---- canonical-mask enumeration over small graphs ----

struct MaskSpace {
  int n;
  std::vector<std::pair<int, int>> pairs;  // lexicographic (u,v), u < v

  explicit MaskSpace(int n_) : n(n_) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }

  int index(int u, int v) const {
    if (u > v) std::swap(u, v);
    // offset of row u plus column within the row
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  }
};

bool mask_connected(std::uint32_t mask, const MaskSpace& space) {
  int n = space.n;
  if (n <= 1) return true;
  std::uint32_t reached = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < space.pairs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      auto [u, v] = space.pairs[i];
      std::uint32_t bu = 1u << u, bv = 1u << v;
      if ((frontier & bu) && !(reached & bv)) next |= bv;
      if ((frontier & bv) && !(reached & bu)) next |= bu;
    }
    reached |= next;
    frontier = next;
  }
  return reached == (1u << n) - 1u;
}

// True when `mask` is the lexicographically smallest mask in its isomorphism
// class, the minimum running over vertex orders sorted by decreasing degree.
// Every candidate image has a non-increasing degree sequence by position, so
// the mask can only be the minimum if its own degrees are already sorted.
bool mask_is_canonical(std::uint32_t mask, const MaskSpace& space) {
  int n = space.n;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < space.pairs.size(); ++i) {
    if (mask >> i & 1u) {
      ++degree[static_cast<std::size_t>(space.pairs[i].first)];
      ++degree[static_cast<std::size_t>(space.pairs[i].second)];
    }
  }
  for (int v = 0; v + 1 < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] <
        degree[static_cast<std::size_t>(v) + 1]) {
      return false;
    }
  }
  // vertices grouped by decreasing degree
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = degree[static_cast<std::size_t>(a)];
    int db = degree[static_cast<std::size_t>(b)];
    return da != db ? da > db : a < b;
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end) into `order`
  for (int b = 0; b < n;) {
    int e = b + 1;
    while (e < n && degree[static_cast<std::size_t>(order[static_cast<std::size_t>(e)])] ==
                        degree[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])]) {
      ++e;
    }
    groups.emplace_back(b, e);
    b = e;
  }

  // Walk every within-group permutation with a nested odometer; compare the
  // relabeled mask against `mask` with early exit.
  std::vector<int> perm = order;  // perm[new position] = old vertex
  auto compare_image = [&]() {
    // -1: image < mask (mask not canonical), 0: equal, 1: image > mask
    for (std::size_t i = 0; i < space.pairs.size(); ++i) {
      auto [a, b] = space.pairs[i];
      int iu = perm[static_cast<std::size_t>(a)];
      int iv = perm[static_cast<std::size_t>(b)];
      std::uint32_t image_bit =
          mask >> space.index(iu, iv) & 1u;
      std::uint32_t mask_bit = mask >> i & 1u;
      if (image_bit != mask_bit) return image_bit < mask_bit ? -1 : 1;
    }
    return 0;
  };

  std::function<bool(std::size_t)> walk = [&](std::size_t gi) -> bool {
    if (gi == groups.size()) return compare_image() >= 0;
    auto [b, e] = groups[gi];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      if (!walk(gi + 1)) return false;
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
    return true;
  };
  return walk(0);
}

Support support_from_mask(std::uint32_t mask, const MaskSpace& space,
                          std::string id) {
  Support s;
  s.n = space.n;
  s.id = std::move(id);
  for (std::size_t i = 0; i < space.pairs.size(); ++i) {
    if (mask >> i & 1u) s.edges.push_back(space.pairs[i]);
  }
  return s;
}

}  // namespace

std::vector<std::vector<int>> rooted_tree_level_sequences(int n) {
  require_range(n, 1, 16, "rooted tree enumeration");
  std::vector<std::vector<int>> out;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(s);
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (s[static_cast<std::size_t>(i)] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(p)] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < n; ++i) {
      s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - (p - q))];
    }
  }
  return out;
}

std::vector<Support> enumerate_trees(int n) {
  require_range(n, 1, 12, "free tree enumeration");
  std::vector<Support> out;
  if (n == 1) {
    out.push_back({1, "t1-1", {}});
    return out;
  }
  int count = 0;
  for (const auto& seq : rooted_tree_level_sequences(n)) {
    auto parent = parents_of_level_sequence(seq);
    auto adj = adjacency_from_parents(parent);
    auto centroids = tree_centroids(adj);
    std::vector<int> canonical;
    for (int c : centroids) {
      auto cand = canonical_rooted_sequence(adj, c, -1, 1);
      if (canonical.empty() || cand > canonical) canonical = std::move(cand);
    }
    if (canonical != seq) continue;
    ++count;
    Support s;
    s.n = n;
    s.id = "t" + std::to_string(n) + "-" + std::to_string(count);
    s.edges = edges_from_parents(parent);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Support> enumerate_unicyclic(int n) {
  require_range(n, 3, 9, "unicyclic enumeration");

  // Rooted trees by size; the pair (size, index) identifies an attachment.
  std::vector<std::vector<std::vector<int>>> rooted(
      static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n - 2; ++s) {
    rooted[static_cast<std::size_t>(s)] = rooted_tree_level_sequences(s);
  }
  rooted[1] = {{1}};

  std::vector<Support> out;
  int count = 0;

  for (int k = 3; k <= n; ++k) {
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    std::vector<int> trees(static_cast<std::size_t>(k), 0);

    auto emit_if_canonical = [&]() {
      using Slot = std::pair<int, int>;
      std::vector<Slot> tuple(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        tuple[static_cast<std::size_t>(i)] = {sizes[static_cast<std::size_t>(i)],
                                              trees[static_cast<std::size_t>(i)]};
      }
      // canonical iff minimal under the dihedral action on cycle positions
      std::vector<Slot> image(static_cast<std::size_t>(k));
      for (int rot = 0; rot < k; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
          for (int i = 0; i < k; ++i) {
            int j = refl ? (rot - i % k + 2 * k) % k : (rot + i) % k;
            image[static_cast<std::size_t>(i)] =
                tuple[static_cast<std::size_t>(j)];
          }
          if (image < tuple) return;
        }
      }

      ++count;
      Support s;
      s.n = n;
      s.id = "u" + std::to_string(n) + "-" + std::to_string(count);
      for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        s.edges.emplace_back(std::min(i, j), std::max(i, j));
      }
      int next_id = k;
      for (int i = 0; i < k; ++i) {
        const auto& seq =
            rooted[static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)])]
                  [static_cast<std::size_t>(trees[static_cast<std::size_t>(i)])];
        auto parent = parents_of_level_sequence(seq);
        std::vector<int> vertex_of(seq.size());
        vertex_of[0] = i;  // tree root sits on the cycle
        for (std::size_t p = 1; p < seq.size(); ++p) {
          vertex_of[p] = next_id++;
          int a = vertex_of[static_cast<std::size_t>(parent[p])];
          int b = vertex_of[p];
          s.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
      std::sort(s.edges.begin(), s.edges.end());
      out.push_back(std::move(s));
    };

    // Odometer over compositions of n into k parts and tree indices.
    std::function<void(int, int)> place = [&](int pos, int remaining) {
      if (pos == k) {
        if (remaining == 0) emit_if_canonical();
        return;
      }
      int max_size = remaining - (k - pos - 1);
      for (int sz = 1; sz <= max_size; ++sz) {
        sizes[static_cast<std::size_t>(pos)] = sz;
        int choices =
            static_cast<int>(rooted[static_cast<std::size_t>(sz)].size());
        for (int t = 0; t < choices; ++t) {
          trees[static_cast<std::size_t>(pos)] = t;
          place(pos + 1, remaining - sz);
        }
      }
    };
    place(0, n);
  }
  return out;
}

std::vector<Support> enumerate_connected(int n) {
  require_range(n, 1, 7, "connected graph enumeration");
  std::vector<Support> out;
  if (n == 1) {
    out.push_back({1, "c1-1", {}});
    return out;
  }
  MaskSpace space(n);
  int count = 0;
  std::uint32_t top = 1u << space.pairs.size();
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    if (!mask_connected(mask, space)) continue;
    if (!mask_is_canonical(mask, space)) continue;
    ++count;
    out.push_back(support_from_mask(
        mask, space, "c" + std::to_string(n) + "-" + std::to_string(count)));
  }
  return out;
}

std::vector<Support> enumerate_with_edge_count(int n, int k) {
  require_range(n, 1, 6, "fixed-edge-count enumeration");
  MaskSpace space(n);
  if (k < 0 || k > static_cast<int>(space.pairs.size())) {
    throw std::invalid_argument("edge count out of range");
  }
  std::vector<Support> out;
  int count = 0;
  std::uint32_t top = 1u << space.pairs.size();
  for (std::uint32_t mask = 0; mask < top; ++mask) {
    if (std::popcount(mask) != k) continue;
    if (!mask_is_canonical(mask, space)) continue;
    ++count;
    out.push_back(support_from_mask(
        mask, space,
        "g" + std::to_string(n) + "k" + std::to_string(k) + "-" +
            std::to_string(count)));
  }
  return out;
}

}  // namespace fuzzytopo
