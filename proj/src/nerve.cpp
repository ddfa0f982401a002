#include "pathlab/nerve.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "pathlab/error.hpp"

namespace pathlab {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

std::vector<std::size_t> NerveComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& s : simplices) out.push_back(s.size());
  return out;
}

std::int64_t NerveComplex::euler() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < simplices.size(); ++k)
    chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(simplices[k].size());
  return chi;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<int, int>& p) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(p.first) << 32) ^
                                      static_cast<std::uint32_t>(p.second));
  }
};

std::size_t index_of(const std::vector<std::vector<int>>& sorted, const std::vector<int>& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s)
    throw Error(ErrorKind::BoundaryCheckFailed, "face of a simplex is missing from the nerve");
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

NerveComplex build_nerve(const Category& cat) {
  const int objects = static_cast<int>(cat.objects.size());
  std::vector<int> arrows;  // non-identity morphisms, in index order
  std::vector<std::vector<int>> out_of(objects);
  for (int m = 0; m < static_cast<int>(cat.morphisms.size()); ++m) {
    if (cat.is_identity(m)) continue;
    const auto& a = cat.morphisms[m];
    if (a.src == a.dst)
      throw Error(ErrorKind::EndomorphismDetected,
                  "non-identity endomorphism of object " + std::to_string(a.src));
    arrows.push_back(m);
    out_of[a.src].push_back(m);
  }

  NerveComplex nc;
  nc.simplices.emplace_back();
  for (int o = 0; o < objects; ++o) nc.simplices[0].push_back({o});
  if (objects == 0) {
    nc.boundary.push_back({0, 0, {}});
    return nc;
  }
  if (!arrows.empty()) {
    nc.simplices.emplace_back();
    for (int m : arrows) nc.simplices[1].push_back({m});
  }
  while (true) {
    const auto& last = nc.simplices.back();
    if (nc.simplices.size() < 2) break;
    std::vector<std::vector<int>> next;
    for (const auto& s : last)
      for (int m : out_of[cat.morphisms[s.back()].dst]) {
        auto t = s;
        t.push_back(m);
        next.push_back(std::move(t));
      }
    if (next.empty()) break;
    nc.simplices.push_back(std::move(next));
  }

  std::unordered_map<std::pair<int, int>, int, PairHash> composite;
  auto compose = [&](int g, int f) {
    auto key = std::make_pair(g, f);
    if (auto it = composite.find(key); it != composite.end()) return it->second;
    const int h = cat.compose(g, f);
    if (cat.is_identity(h))
      throw Error(ErrorKind::EndomorphismDetected, "composite of non-identities is an identity");
    composite.emplace(key, h);
    return h;
  };

  nc.boundary.push_back({0, nc.simplices[0].size(), {}});
  nc.boundary[0].columns.resize(nc.simplices[0].size());
  for (std::size_t k = 1; k < nc.simplices.size(); ++k) {
    const auto& faces = nc.simplices[k - 1];
    SparseMatrix d{faces.size(), nc.simplices[k].size(), {}};
    d.columns.resize(d.cols);
    for (std::size_t j = 0; j < d.cols; ++j) {
      const auto& s = nc.simplices[k][j];
      std::map<std::size_t, std::int64_t> col;
      if (k == 1) {
        const auto& a = cat.morphisms[s[0]];
        col[static_cast<std::size_t>(a.dst)] += 1;
        col[static_cast<std::size_t>(a.src)] -= 1;
      } else {
        for (std::size_t i = 0; i <= k; ++i) {
          std::vector<int> f;
          if (i == 0) {
            f.assign(s.begin() + 1, s.end());
          } else if (i == k) {
            f.assign(s.begin(), s.end() - 1);
          } else {
            f.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i - 1));
            f.push_back(compose(s[i], s[i - 1]));
            f.insert(f.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1), s.end());
          }
          col[index_of(faces, f)] += (i % 2 ? -1 : 1);
        }
      }
      for (auto [r, v] : col)
        if (v != 0) d.columns[j].push_back({r, v});
    }
    nc.boundary.push_back(std::move(d));
  }
  if (!boundary_squares_to_zero(nc))
    throw Error(ErrorKind::BoundaryCheckFailed, "boundary does not square to zero");
  return nc;
}

bool boundary_squares_to_zero(const NerveComplex& nc) {
  for (std::size_t k = 2; k < nc.boundary.size(); ++k) {
    const auto& outer = nc.boundary[k - 1];
    for (const auto& col : nc.boundary[k].columns) {
      std::map<std::size_t, std::int64_t> acc;
      for (auto [r, v] : col)
        for (auto [r2, v2] : outer.columns[r]) acc[r2] += v * v2;
      for (auto [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

std::string boundary_triplets(const NerveComplex& nc) {
  std::ostringstream os;
  for (std::size_t k = 1; k < nc.boundary.size(); ++k) {
    const auto& d = nc.boundary[k];
    os << "% d_" << k << "\n" << d.rows << " " << d.cols << " " << d.nonzeros() << "\n";
    for (std::size_t j = 0; j < d.cols; ++j)
      for (auto [r, v] : d.columns[j]) os << r + 1 << " " << j + 1 << " " << v << "\n";
  }
  return os.str();
}

}  // namespace pathlab
