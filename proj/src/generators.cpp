#include "pathlab/generators.hpp"

#include <algorithm>
#include <string>

#include "pathlab/error.hpp"

namespace pathlab {

namespace {

void all_words(int n, std::string& word, int pos, std::vector<std::string>& out) {
  if (pos == n) {
    out.push_back(word);
    return;
  }
  for (char ch : {'*', '0', '1'}) {
    word[pos] = ch;
    all_words(n, word, pos + 1, out);
  }
}

std::string word_id(const std::string& w) { return w.empty() ? "()" : w; }

// Adds the faces of the cube `w` of the standard cube, with identifiers
// produced by `name`.
template <class Name>
void add_word_cube(PrecubicalSet::Builder& b, const std::string& w, Name name) {
  std::vector<std::string> lower, upper;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] != '*') continue;
    std::string f = w;
    f[pos] = '0';
    lower.push_back(name(f));
    f[pos] = '1';
    upper.push_back(name(f));
  }
  const int dim = static_cast<int>(lower.size());
  b.add(name(w), dim, std::move(lower), std::move(upper));
}

std::vector<std::string> cube_words(int n) {
  std::vector<std::string> words;
  std::string w(n, '*');
  all_words(n, w, 0, words);
  return words;
}

}  // namespace

PrecubicalSet standard_cube(int n) {
  if (n < 0) throw Error(ErrorKind::MalformedInput, "standard_cube: negative dimension");
  PrecubicalSet::Builder b;
  b.name("cube" + std::to_string(n));
  for (const auto& w : cube_words(n)) add_word_cube(b, w, word_id);
  b.start(word_id(std::string(n, '0'))).end(word_id(std::string(n, '1')));
  return b.build();
}

PrecubicalSet boundary_cube(int n) {
  if (n < 1) throw Error(ErrorKind::MalformedInput, "boundary_cube: dimension must be >= 1");
  PrecubicalSet::Builder b;
  b.name("boundary" + std::to_string(n));
  const std::string top(n, '*');
  for (const auto& w : cube_words(n))
    if (w != top) add_word_cube(b, w, word_id);
  b.start(std::string(n, '0')).end(std::string(n, '1'));
  return b.build();
}

PrecubicalSet wedge(const std::vector<int>& dims) {
  if (dims.empty()) throw Error(ErrorKind::MalformedInput, "wedge: empty dimension list");
  for (int d : dims)
    if (d < 1) throw Error(ErrorKind::MalformedInput, "wedge: dimensions must be positive");
  PrecubicalSet::Builder b;
  std::string label = "wedge";
  for (int d : dims) label += "_" + std::to_string(d);
  b.name(label);
  const int m = static_cast<int>(dims.size());
  for (int k = 0; k < m; ++k) {
    const int n = dims[k];
    const std::string zeros(n, '0');
    auto name = [&, k](const std::string& w) {
      if (k > 0 && w == zeros)
        return std::to_string(k) + ":" + std::string(dims[k - 1], '1');
      return std::to_string(k + 1) + ":" + w;
    };
    for (const auto& w : cube_words(n))
      if (k == 0 || w != zeros) add_word_cube(b, w, name);
  }
  b.start("1:" + std::string(dims.front(), '0'));
  b.end(std::to_string(m) + ":" + std::string(dims.back(), '1'));
  return b.build();
}

PrecubicalSet grid_complex(const std::vector<int>& extents, const std::vector<Box>& forbidden) {
  const int d = static_cast<int>(extents.size());
  if (d == 0) throw Error(ErrorKind::MalformedInput, "grid_complex: no axes");
  for (int e : extents)
    if (e < 1) throw Error(ErrorKind::MalformedInput, "grid_complex: extents must be positive");
  for (const auto& box : forbidden)
    if (static_cast<int>(box.lo.size()) != d || static_cast<int>(box.hi.size()) != d)
      throw Error(ErrorKind::SizeMismatch, "grid_complex: box dimension differs from grid");

  auto removed = [&](const std::vector<int>& x, const std::vector<int>& s) {
    for (const auto& box : forbidden) {
      bool meets = true;
      for (int i = 0; i < d && meets; ++i)
        meets = x[i] < box.hi[i] && x[i] + s[i] > box.lo[i];
      if (meets) return true;
    }
    return false;
  };
  auto name = [&](const std::vector<int>& x, const std::vector<int>& s) {
    std::string id;
    for (int i = 0; i < d; ++i) {
      if (i) id += ',';
      id += std::to_string(x[i]);
      if (s[i]) id += "-" + std::to_string(x[i] + 1);
    }
    return id;
  };

  PrecubicalSet::Builder b;
  b.name("grid");
  std::vector<int> x(d, 0), s(d, 0);
  // Odometer over base points and free-axis masks.
  auto visit = [&](auto&& self, int axis) -> void {
    if (axis == d) {
      if (removed(x, s)) return;
      std::vector<std::string> lower, upper;
      for (int i = 0; i < d; ++i) {
        if (!s[i]) continue;
        s[i] = 0;
        lower.push_back(name(x, s));
        ++x[i];
        upper.push_back(name(x, s));
        --x[i];
        s[i] = 1;
      }
      const int dim = static_cast<int>(lower.size());
      b.add(name(x, s), dim, std::move(lower), std::move(upper));
      return;
    }
    for (int v = 0; v <= extents[axis]; ++v) {
      x[axis] = v;
      s[axis] = 0;
      self(self, axis + 1);
      if (v < extents[axis]) {
        s[axis] = 1;
        self(self, axis + 1);
        s[axis] = 0;
      }
    }
  };
  visit(visit, 0);

  const std::vector<int> zero(d, 0), flat(d, 0);
  if (removed(zero, flat) || removed(extents, flat))
    throw Error(ErrorKind::MalformedInput, "grid_complex: a forbidden box removes a base point");
  b.start(name(zero, flat)).end(name(extents, flat));
  return b.build();
}

PrecubicalSet double_cube() {
  PrecubicalSet::Builder b;
  b.name("double_cube");
  for (const auto& w : cube_words(3)) {
    if (w == "***") continue;
    add_word_cube(b, w, word_id);
  }
  for (const std::string top : {"c", "c'"}) {
    std::vector<std::string> lower, upper;
    for (int pos = 0; pos < 3; ++pos) {
      std::string f = "***";
      f[pos] = '0';
      lower.push_back(f);
      f[pos] = '1';
      upper.push_back(f);
    }
    b.add(top, 3, lower, upper);
  }
  b.start("000").end("111");
  return b.build();
}

PrecubicalSet swiss_flag() {
  auto set = grid_complex({5, 5}, {Box{{1, 2}, {4, 3}}, Box{{2, 1}, {3, 4}}});
  return set;
}

}  // namespace pathlab
