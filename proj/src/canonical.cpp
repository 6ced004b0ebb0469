#include "turan/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace turan {

namespace {

constexpr int kMax = SmallGraph::kMaxVertices;

struct Partition {
  std::array<Bits, kMax> cells{};
  int count = 0;
};

// Splits cells by neighbour counts into every other cell until the ordered
// partition is equitable. Depends only on the cell order, never on labels.
void refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count; ++s) {
      const Bits splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const Bits cell = p.cells[c];
        if (popcount(cell) == 1) continue;
        std::array<Bits, kMax + 1> bucket{};
        Bits used_counts = 0;  // counts fit in 0..64; track up to 63 in a mask
        bool high = false;
        for_each_bit(cell, [&](int v) {
          int k = popcount(g.neighbors(v) & splitter);
          bucket[k] |= bit(v);
          if (k < 64) {
            used_counts |= bit(k);
          } else {
            high = true;
          }
        });
        int groups = popcount(used_counts) + (high ? 1 : 0);
        if (groups == 1) continue;
        std::array<Bits, kMax + 1> parts{};
        int np = 0;
        for_each_bit(used_counts, [&](int k) { parts[np++] = bucket[k]; });
        if (high) parts[np++] = bucket[64];
        // shift the tail right and splice the parts in at position c
        for (int i = p.count - 1; i > c; --i) p.cells[i + np - 1] = p.cells[i];
        for (int i = 0; i < np; ++i) p.cells[c + i] = parts[i];
        p.count += np - 1;
        changed = true;
      }
    }
  }
}

class BitWriter {
 public:
  explicit BitWriter(int nbits) : bytes_((nbits + 7) / 8, 0) {}
  void push(bool b) {
    if (b) bytes_[pos_ / 8] |= static_cast<std::uint8_t>(0x80U >> (pos_ % 8));
    ++pos_;
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  int pos_ = 0;
};

std::vector<std::uint8_t> encode_with_order(const SmallGraph& g, const int* lab) {
  const int n = g.order();
  BitWriter w(n * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) w.push(g.adjacent(lab[i], lab[j]));
  }
  std::vector<std::uint8_t> out = w.take();
  out.insert(out.begin(), static_cast<std::uint8_t>(n));
  return out;
}

class UnionFind {
 public:
  UnionFind() { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::array<int, kMax> parent_{};
};

class CanonSearch {
 public:
  explicit CanonSearch(const SmallGraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root;
    if (n_ > 0) {
      root.cells[0] = g_.vertices();
      root.count = 1;
    }
    refine(g_, root);
    search(root, 0, true);
    CanonicalForm out;
    out.bytes = best_enc_;
    out.perm.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.perm[best_lab_[i]] = i;
    return out;
  }

 private:
  void search(const Partition& p, int depth, bool first_path) {
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = -1;
    int target_size = kMax + 1;
    for (int c = 0; c < p.count; ++c) {
      int s = popcount(p.cells[c]);
      if (s > 1 && s < target_size) {
        target = c;
        target_size = s;
      }
    }
    const Bits cell = p.cells[target];
    if (first_path) explored_[depth].clear();
    bool first_child = true;
    for (int v : bits_to_vector(cell)) {
      const bool child_first = first_path && first_child;
      if (first_path && !child_first) {
        UnionFind& uf = orbits_[depth];
        bool equivalent = false;
        for (int u : explored_[depth]) equivalent = equivalent || uf.find(u) == uf.find(v);
        if (equivalent) continue;
      }
      if (child_first) {
        first_path_[depth] = v;
        first_len_ = depth + 1;
      }
      if (first_path) explored_[depth].push_back(v);
      current_[depth] = v;
      Partition child = p;
      // individualize v: {v} goes in front of the rest of its cell
      for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      ++child.count;
      refine(g_, child);
      search(child, depth + 1, child_first);
      first_child = false;
      if (unwind_to_ >= 0) {
        if (unwind_to_ < depth) return;
        unwind_to_ = -1;
      }
    }
  }

  void leaf(const Partition& p) {
    std::array<int, kMax> lab{};
    for (int i = 0; i < n_; ++i) lab[i] = lowest(p.cells[i]);
    std::vector<std::uint8_t> enc = encode_with_order(g_, lab.data());
    if (!have_first_) {
      have_first_ = true;
      first_enc_ = best_enc_ = enc;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (enc == first_enc_) {
      automorphism(first_lab_, lab);
    } else if (enc == best_enc_) {
      automorphism(best_lab_, lab);
    } else if (enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_lab_ = lab;
    }
  }

  // gamma maps ref[i] -> cur[i].
  void automorphism(const std::array<int, kMax>& ref, const std::array<int, kMax>& cur) {
    std::array<int, kMax> gamma{};
    for (int i = 0; i < n_; ++i) gamma[ref[i]] = cur[i];
    for (int d = 0; d < first_len_; ++d) {
      if (d > 0 && gamma[first_path_[d - 1]] != first_path_[d - 1]) break;
      for (int v = 0; v < n_; ++v) orbits_[d].unite(v, gamma[v]);
    }
    // Abort the current subtree if it branched off the first path at a child
    // now known to be equivalent to one already explored there.
    int diverge = 0;
    while (diverge < first_len_ && current_[diverge] == first_path_[diverge]) ++diverge;
    if (diverge >= first_len_) return;
    UnionFind& uf = orbits_[diverge];
    const int w = current_[diverge];
    for (int u : explored_[diverge]) {
      if (u != w && uf.find(u) == uf.find(w)) {
        unwind_to_ = diverge;
        return;
      }
    }
  }

  const SmallGraph& g_;
  const int n_;
  bool have_first_ = false;
  std::vector<std::uint8_t> first_enc_, best_enc_;
  std::array<int, kMax> first_lab_{}, best_lab_{};
  std::array<int, kMax> first_path_{};
  std::array<int, kMax> current_{};
  int first_len_ = 0;
  std::array<UnionFind, kMax> orbits_{};
  std::array<std::vector<int>, kMax> explored_{};
  int unwind_to_ = -1;
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
  if (g.order() == 0) return CanonicalForm{{0}, {}};
  return CanonSearch(g).run();
}

SmallGraph canonical_graph(const SmallGraph& g) { return g.relabeled(canonical_form(g).perm); }

bool is_isomorphic(const SmallGraph& g, const SmallGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g).bytes == canonical_form(h).bytes;
}

std::vector<std::uint8_t> labeled_encoding(const SmallGraph& g) {
  std::array<int, kMax> lab{};
  std::iota(lab.begin(), lab.end(), 0);
  return encode_with_order(g, lab.data());
}

}  // namespace turan
