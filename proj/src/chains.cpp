#include "pathlab/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <atomic>
#include <thread>

#include "pathlab/error.hpp"

namespace pathlab {

// --- types -------------------------------------------------------------------------

int ChainType::length() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> ChainType::vertices() const {
  std::vector<int> out{0};
  for (int p : parts) out.push_back(out.back() + p);
  return out;
}

std::vector<int> ChainType::free() const {
  const auto v = vertices();
  std::vector<int> out;
  for (int k = 1; k < length(); ++k)
    if (!std::binary_search(v.begin(), v.end(), k)) out.push_back(k);
  return out;
}

ChainType CubeChain::type(const PrecubicalSet& set) const {
  ChainType t;
  for (CubeId c : cubes) t.parts.push_back(set.dim(c));
  return t;
}

std::string chain_label(const PrecubicalSet& set, const CubeChain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.cubes.size(); ++i)
    out += (i ? " ; " : "") + set.id(chain.cubes[i]);
  return out + ")";
}

bool is_cube_chain(const PrecubicalSet& set, const CubeChain& chain) {
  CubeId v = set.start();
  for (CubeId c : chain.cubes) {
    if (set.dim(c) < 1 || extreme_vertex(set, c, Side::Lower) != v) return false;
    v = extreme_vertex(set, c, Side::Upper);
  }
  return v == set.end();
}

// --- enumeration ---------------------------------------------------------------------

std::vector<CubeChain> enumerate_chains(const PrecubicalSet& set, int n) {
  set.require_valid();
  std::vector<CubeChain> out;
  if (n < 0) return out;
  CubeChain current;
  auto dfs = [&](auto&& self, CubeId v, int remaining) -> void {
    if (remaining == 0) {
      if (v == set.end()) out.push_back(current);
      return;
    }
    for (CubeId c : set.cubes_starting_at(v)) {
      const int d = set.dim(c);
      if (d > remaining) continue;
      current.cubes.push_back(c);
      self(self, extreme_vertex(set, c, Side::Upper), remaining - d);
      current.cubes.pop_back();
    }
  };
  dfs(dfs, set.start(), n);
  return out;
}

Integer count_chains(const PrecubicalSet& set, int n) {
  set.require_valid();
  if (n < 0) return 0;
  std::map<std::pair<std::uint32_t, int>, Integer> memo;
  auto count = [&](auto&& self, CubeId v, int remaining) -> Integer {
    if (remaining == 0) return v == set.end() ? 1 : 0;
    auto key = std::make_pair(v.value, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (CubeId c : set.cubes_starting_at(v))
      if (set.dim(c) <= remaining)
        total += self(self, extreme_vertex(set, c, Side::Upper), remaining - set.dim(c));
    memo.emplace(key, total);
    return total;
  };
  return count(count, set.start(), n);
}

CubeChain chain_face(const PrecubicalSet& set, const CubeChain& chain, int i, const IndexSet& A,
                     const IndexSet& B) {
  if (i < 0 || i >= static_cast<int>(chain.cubes.size()))
    throw Error(ErrorKind::IndexOutOfRange, "chain stage " + std::to_string(i + 1) + " out of range");
  const CubeId c = chain.cubes[i];
  const int d = set.dim(c);
  std::vector<int> seen(d, 0);
  for (int x : A)
    if (x >= 0 && x < d) ++seen[x];
    else throw Error(ErrorKind::InvalidPartition, "index out of range");
  for (int x : B)
    if (x >= 0 && x < d) ++seen[x];
    else throw Error(ErrorKind::InvalidPartition, "index out of range");
  if (A.empty() || B.empty() ||
      std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw Error(ErrorKind::InvalidPartition, "A and B must be nonempty and partition the coordinates");
  CubeChain out;
  out.cubes.assign(chain.cubes.begin(), chain.cubes.begin() + i);
  out.cubes.push_back(iterated_face(set, c, B, Side::Lower));
  out.cubes.push_back(iterated_face(set, c, A, Side::Upper));
  out.cubes.insert(out.cubes.end(), chain.cubes.begin() + i + 1, chain.cubes.end());
  return out;
}

// --- morphisms -------------------------------------------------------------------------

namespace {

// Groups the parts of `a` into consecutive runs summing to the parts of `b`.
bool group_parts(const std::vector<int>& a, const std::vector<int>& b,
                 std::vector<std::vector<int>>& groups) {
  groups.assign(b.size(), {});
  std::size_t idx = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    int sum = 0;
    while (sum < b[j] && idx < a.size()) {
      sum += a[idx];
      groups[j].push_back(static_cast<int>(idx++));
    }
    if (sum != b[j]) return false;
  }
  return idx == a.size();
}

FaceWord block_word(int m, const OrderedPartition& blocks, std::size_t s,
                    const std::vector<int>& owner) {
  FaceWord w(m, '0');
  for (int x = 0; x < m; ++x) {
    const int o = owner[x];
    if (o < 0) continue;  // unassigned coordinates belong to later blocks
    w[x] = static_cast<std::size_t>(o) < s ? '1' : (static_cast<std::size_t>(o) == s ? '*' : '0');
  }
  (void)blocks;
  return w;
}

// Ordered partitions of {0..m-1} with the given block sizes such that the
// block face of `target` matches `sources[s]` for every block s.
void partitions_over(const PrecubicalSet& set, CubeId target, const std::vector<int>& sizes,
                     const std::vector<CubeId>& sources, std::vector<OrderedPartition>& out) {
  const int m = set.dim(target);
  OrderedPartition blocks;
  std::vector<int> owner(m, -1);
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == sizes.size()) {
      out.push_back(blocks);
      return;
    }
    std::vector<int> free;
    for (int x = 0; x < m; ++x)
      if (owner[x] < 0) free.push_back(x);
    const int k = sizes[s];
    if (k > static_cast<int>(free.size())) return;
    // Combinations of `free` of size k in lexicographic order.
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      IndexSet block;
      for (int p : pick) block.push_back(free[p]);
      for (int x : block) owner[x] = static_cast<int>(s);
      blocks.push_back(block);
      if (face_at(set, target, block_word(m, blocks, s, owner)) == sources[s]) self(self, s + 1);
      blocks.pop_back();
      for (int x : block) owner[x] = -1;
      int i = k - 1;
      while (i >= 0 && pick[i] == static_cast<int>(free.size()) - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  };
  rec(rec, 0);
}

std::vector<OrderedPartition> compose_partitions(const std::vector<OrderedPartition>& g,
                                                 const std::vector<OrderedPartition>& f) {
  std::vector<OrderedPartition> out;
  std::size_t offset = 0;
  for (const auto& outer : g) {
    if (offset + outer.size() > f.size())
      throw Error(ErrorKind::SourceTargetMismatch, "partitions do not compose");
    std::vector<OrderedPartition> inner(f.begin() + static_cast<std::ptrdiff_t>(offset),
                                        f.begin() + static_cast<std::ptrdiff_t>(offset + outer.size()));
    out.push_back(refine(outer, inner));
    offset += outer.size();
  }
  if (offset != f.size()) throw Error(ErrorKind::SourceTargetMismatch, "partitions do not compose");
  return out;
}

std::vector<std::vector<OrderedPartition>> all_morphism_partitions(const PrecubicalSet& set,
                                                                   const CubeChain& a,
                                                                   const CubeChain& b) {
  const auto ta = a.type(set).parts;
  const auto tb = b.type(set).parts;
  std::vector<std::vector<int>> groups;
  if (!group_parts(ta, tb, groups)) return {};
  std::vector<std::vector<OrderedPartition>> options(tb.size());
  for (std::size_t j = 0; j < tb.size(); ++j) {
    std::vector<int> sizes;
    std::vector<CubeId> sources;
    for (int g : groups[j]) {
      sizes.push_back(ta[g]);
      sources.push_back(a.cubes[g]);
    }
    partitions_over(set, b.cubes[j], sizes, sources, options[j]);
    if (options[j].empty()) return {};
  }
  std::vector<std::vector<OrderedPartition>> out;
  std::vector<OrderedPartition> current;
  auto product = [&](auto&& self, std::size_t j) -> void {
    if (j == options.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& p : options[j]) {
      current.push_back(p);
      self(self, j + 1);
      current.pop_back();
    }
  };
  product(product, 0);
  return out;
}

}  // namespace

OrderedPartition refine(const OrderedPartition& outer, const std::vector<OrderedPartition>& inner) {
  if (outer.size() != inner.size())
    throw Error(ErrorKind::SourceTargetMismatch, "refinement needs one partition per block");
  OrderedPartition out;
  for (std::size_t s = 0; s < outer.size(); ++s) {
    const auto& block = outer[s];
    for (const auto& sub : inner[s]) {
      IndexSet mapped;
      for (int x : sub) {
        if (x < 0 || x >= static_cast<int>(block.size()))
          throw Error(ErrorKind::SourceTargetMismatch, "inner partition exceeds its block");
        mapped.push_back(block[x]);
      }
      std::sort(mapped.begin(), mapped.end());
      out.push_back(std::move(mapped));
    }
  }
  return out;
}

ChainMorphism identity_morphism(const PrecubicalSet& set, const CubeChain& chain) {
  ChainMorphism f{chain, chain, {}};
  for (CubeId c : chain.cubes) {
    IndexSet all(set.dim(c));
    std::iota(all.begin(), all.end(), 0);
    f.partitions.push_back({all});
  }
  return f;
}

bool is_identity(const ChainMorphism& f) {
  if (f.source != f.target) return false;
  for (const auto& p : f.partitions)
    if (p.size() != 1) return false;
  return true;
}

bool is_chain_morphism(const PrecubicalSet& set, const ChainMorphism& f) {
  const auto ta = f.source.type(set).parts;
  const auto tb = f.target.type(set).parts;
  if (f.partitions.size() != tb.size()) return false;
  std::size_t idx = 0;
  for (std::size_t j = 0; j < tb.size(); ++j) {
    const auto& blocks = f.partitions[j];
    const int m = tb[j];
    std::vector<int> owner(m, -1);
    for (std::size_t s = 0; s < blocks.size(); ++s) {
      if (idx >= ta.size() || static_cast<int>(blocks[s].size()) != ta[idx]) return false;
      for (int x : blocks[s]) {
        if (x < 0 || x >= m || owner[x] >= 0) return false;
        owner[x] = static_cast<int>(s);
      }
      ++idx;
    }
    if (std::count(owner.begin(), owner.end(), -1) != 0) return false;
    for (std::size_t s = 0; s < blocks.size(); ++s) {
      const std::size_t src = idx - blocks.size() + s;
      if (face_at(set, f.target.cubes[j], block_word(m, blocks, s, owner)) != f.source.cubes[src])
        return false;
    }
  }
  return idx == ta.size();
}

std::vector<ChainMorphism> morphisms_between(const PrecubicalSet& set, const CubeChain& a,
                                             const CubeChain& b) {
  std::vector<ChainMorphism> out;
  for (auto& parts : all_morphism_partitions(set, a, b)) out.push_back({a, b, std::move(parts)});
  return out;
}

ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f) {
  if (f.target != g.source)
    throw Error(ErrorKind::SourceTargetMismatch, "target of f differs from source of g");
  return {f.source, g.target, compose_partitions(g.partitions, f.partitions)};
}

// --- category ---------------------------------------------------------------------------

bool Category::is_identity(int m) const {
  const auto& a = morphisms.at(m);
  if (a.src != a.dst) return false;
  for (const auto& p : a.partitions)
    if (p.size() != 1) return false;
  return true;
}

int Category::find(const Arrow& a) const {
  auto it = std::lower_bound(morphisms.begin(), morphisms.end(), a);
  if (it == morphisms.end() || *it != a) return -1;
  return static_cast<int>(it - morphisms.begin());
}

int Category::compose(int g, int f) const {
  const auto& fa = morphisms.at(f);
  const auto& ga = morphisms.at(g);
  if (fa.dst != ga.src)
    throw Error(ErrorKind::SourceTargetMismatch, "target of f differs from source of g");
  const int idx = find({fa.src, ga.dst, compose_partitions(ga.partitions, fa.partitions)});
  if (idx < 0) throw Error(ErrorKind::SourceTargetMismatch, "composite is not a morphism");
  return idx;
}

ChainMorphism Category::morphism(int m) const {
  const auto& a = morphisms.at(m);
  return {objects.at(a.src), objects.at(a.dst), a.partitions};
}

std::size_t Category::non_identity_count() const {
  std::size_t k = 0;
  for (std::size_t m = 0; m < morphisms.size(); ++m)
    if (!is_identity(static_cast<int>(m))) ++k;
  return k;
}

Category category(const PrecubicalSet& set, int n, int threads) {
  Category cat;
  cat.n = n;
  cat.objects = enumerate_chains(set, n);
  const int count = static_cast<int>(cat.objects.size());
  std::vector<std::vector<Category::Arrow>> per_source(count);

  auto work = [&](int a) {
    auto& out = per_source[a];
    const auto& ca = cat.objects[a];
    for (int b = 0; b < count; ++b) {
      const auto& cb = cat.objects[b];
      if (a == b) {
        out.push_back({a, a, identity_morphism(set, ca).partitions});
        continue;
      }
      if (ca.cubes.size() <= cb.cubes.size()) continue;
      for (auto& parts : all_morphism_partitions(set, ca, cb)) out.push_back({a, b, std::move(parts)});
    }
  };

  const int workers = std::min(threads, count);
  if (workers > 1) {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int a; (a = next.fetch_add(1)) < count;) work(a);
      });
    for (auto& t : pool) t.join();
  } else {
    for (int a = 0; a < count; ++a) work(a);
  }

  for (auto& arrows : per_source)
    for (auto& arrow : arrows) cat.morphisms.push_back(std::move(arrow));
  std::sort(cat.morphisms.begin(), cat.morphisms.end());
  return cat;
}

// --- assembly and export ------------------------------------------------------------------

PathPresentation assemble_path(const PrecubicalSet& set, const CubeChain& chain,
                               const std::vector<PLMap>& beta) {
  if (!is_cube_chain(set, chain)) throw Error(ErrorKind::StageMismatch, "not a cube chain");
  if (beta.size() != chain.cubes.size())
    throw Error(ErrorKind::StageMismatch, "one map per chain cube is required");
  const auto t = chain.type(set).vertices();
  PathPresentation out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const auto& m = beta[i];
    const int d = set.dim(chain.cubes[i]);
    const std::string where = "stage " + std::to_string(i + 1) + ": ";
    try {
      check_plmap(m, d);
    } catch (const Error& e) {
      throw Error(ErrorKind::StageMismatch, where + e.what());
    }
    if (m.start_time() != t[i] || m.end_time() != t[i + 1])
      throw Error(ErrorKind::StageMismatch, where + "wrong time interval");
    for (const auto& bp : m.points)
      if (coordinate_sum(bp.value) != bp.time - t[i])
        throw Error(ErrorKind::StageMismatch, where + "map is not natural from 0 to 1");
    out.segments.push_back({chain.cubes[i], m});
  }
  return out;
}

std::string partition_signature(const std::vector<OrderedPartition>& partitions) {
  std::string out;
  for (std::size_t j = 0; j < partitions.size(); ++j) {
    if (j) out += "|";
    for (const auto& block : partitions[j]) {
      out += "{";
      for (std::size_t k = 0; k < block.size(); ++k)
        out += (k ? "," : "") + std::to_string(block[k] + 1);
      out += "}";
    }
  }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string category_dot(const PrecubicalSet& set, const Category& cat) {
  std::ostringstream os;
  os << "digraph Ch {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    os << "  o" << i << " [label=\"" << dot_escape(chain_label(set, cat.objects[i])) << "\"];\n";
  for (std::size_t m = 0; m < cat.morphisms.size(); ++m) {
    if (cat.is_identity(static_cast<int>(m))) continue;
    const auto& a = cat.morphisms[m];
    os << "  o" << a.src << " -> o" << a.dst << " [label=\""
       << dot_escape(partition_signature(a.partitions)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pathlab
