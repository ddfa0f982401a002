#include "pathlab/homology.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "pathlab/error.hpp"

namespace pathlab {

// --- dense ---------------------------------------------------------------------

namespace {

bool find_pivot(const DenseMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < m.size(); ++i)
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      Integer a = abs(m[i][j]);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(DenseMatrix m) {
  SmithForm out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (!dirty) {
        // Divisibility: fold a row whose entries the pivot does not divide.
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
        continue;
      }
      // Move the smallest nonzero entry of row t / column t to the pivot.
      std::size_t br = t, bc = t;
      Integer best = abs(m[t][t]);
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0 && abs(m[i][t]) < best) best = abs(m[i][t]), br = i, bc = t;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0 && abs(m[t][j]) < best) best = abs(m[t][j]), br = t, bc = j;
      std::swap(m[t], m[br]);
      for (auto& row : m) std::swap(row[t], row[bc]);
    }
    out.factors.push_back(abs(m[t][t]));
  }
  return out;
}

DenseMatrix to_dense(const SparseMatrix& s) {
  DenseMatrix m(s.rows, std::vector<Integer>(s.cols));
  for (std::size_t j = 0; j < s.cols; ++j)
    for (auto [r, v] : s.columns[j]) m[r][j] = static_cast<long>(v);
  return m;
}

// --- sparse ---------------------------------------------------------------------

namespace {

struct Overflow {};

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}

inline Integer checked_sub_mul(const Integer& a, const Integer& q, const Integer& b) {
  return a - q * b;
}

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

template <class T>
Integer to_integer(const T& v) {
  if constexpr (std::is_same_v<T, Integer>) return v;
  else return Integer(static_cast<long>(v));
}

// Eliminates unit pivots; returns the rank found and leaves the remainder.
template <class T>
std::size_t eliminate_units(std::vector<std::map<std::size_t, T>>& rows,
                            std::vector<std::map<std::size_t, char>>& colrows, DenseMatrix& rest) {
  std::size_t rank = 0;
  const std::size_t ncols = colrows.size();
  std::vector<bool> row_alive(rows.size(), true), col_alive(ncols, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!col_alive[j] || colrows[j].empty()) continue;
      std::size_t pivot = rows.size();
      for (auto [r, _] : colrows[j])
        if (is_unit(rows[r].at(j)) && (pivot == rows.size() || rows[r].size() < rows[pivot].size()))
          pivot = r;
      if (pivot == rows.size()) continue;
      const T p = rows[pivot].at(j);
      std::vector<std::size_t> targets;
      for (auto [r, _] : colrows[j])
        if (r != pivot) targets.push_back(r);
      for (std::size_t r : targets) {
        const T q = rows[r].at(j) * p;  // p = +-1, so a / p = a * p
        for (const auto& [c, v] : rows[pivot]) {
          auto it = rows[r].find(c);
          T cur = it == rows[r].end() ? T(0) : it->second;
          T nv = checked_sub_mul(cur, q, v);
          if (nv == 0) {
            if (it != rows[r].end()) rows[r].erase(it);
            colrows[c].erase(r);
          } else {
            rows[r][c] = nv;
            colrows[c][r] = 1;
          }
        }
      }
      for (const auto& [c, v] : rows[pivot]) colrows[c].erase(pivot);
      rows[pivot].clear();
      row_alive[pivot] = false;
      col_alive[j] = false;
      ++rank;
      progress = true;
    }
  }
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < ncols; ++c)
    if (!colrows[c].empty()) live_cols.push_back(c);
  rest.assign(live_rows.size(), std::vector<Integer>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (std::size_t j = 0; j < live_cols.size(); ++j) {
      auto it = rows[live_rows[i]].find(live_cols[j]);
      if (it != rows[live_rows[i]].end()) rest[i][j] = to_integer(it->second);
    }
  return rank;
}

template <class T>
std::size_t reduce(const SparseMatrix& s, DenseMatrix& rest) {
  std::vector<std::map<std::size_t, T>> rows(s.rows);
  std::vector<std::map<std::size_t, char>> colrows(s.cols);
  for (std::size_t j = 0; j < s.cols; ++j)
    for (auto [r, v] : s.columns[j]) {
      rows[r][j] = T(static_cast<long>(v));
      colrows[j][r] = 1;
    }
  return eliminate_units(rows, colrows, rest);
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& s) {
  DenseMatrix rest;
  std::size_t units;
  try {
    units = reduce<std::int64_t>(s, rest);
  } catch (const Overflow&) {
    units = reduce<Integer>(s, rest);
  }
  SmithForm tail = smith_normal_form(std::move(rest));
  SmithForm out;
  out.factors.assign(units, Integer(1));
  out.factors.insert(out.factors.end(), tail.factors.begin(), tail.factors.end());
  return out;
}

// --- homology ----------------------------------------------------------------------

HomologyReport homology(const NerveComplex& nc, int threads) {
  if (!boundary_squares_to_zero(nc))
    throw Error(ErrorKind::BoundaryCheckFailed, "boundary does not square to zero");
  const std::size_t top = nc.simplices.size();
  std::vector<SmithForm> forms(top + 1);  // forms[k] for d_k, k = 1..top-1
  auto work = [&](std::size_t k) { forms[k] = smith_normal_form(nc.boundary[k]); };

  const int workers = std::min<int>(threads, static_cast<int>(top));
  if (workers > 1) {
    std::atomic<std::size_t> next{1};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < top;) work(k);
      });
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t k = 1; k < top; ++k) work(k);
  }

  HomologyReport rep;
  for (std::size_t k = 0; k < top; ++k) {
    const auto dim = static_cast<std::int64_t>(nc.simplices[k].size());
    const auto in = static_cast<std::int64_t>(k >= 1 ? forms[k].rank() : 0);
    const auto out = static_cast<std::int64_t>(k + 1 < top ? forms[k + 1].rank() : 0);
    rep.betti.push_back(dim - in - out);
    std::vector<Integer> tors;
    if (k + 1 < top)
      for (const auto& f : forms[k + 1].factors)
        if (f > 1) tors.push_back(f);
    rep.torsion.push_back(std::move(tors));
  }
  // Empty complexes report nothing; trailing zero dimensions carry no data.
  for (std::size_t k = 0; k < rep.betti.size(); ++k) rep.euler += (k % 2 ? -1 : 1) * rep.betti[k];
  if (nc.simplices.size() == 1 && nc.simplices[0].empty()) {
    rep.betti.clear();
    rep.torsion.clear();
  }
  return rep;
}

}  // namespace pathlab
