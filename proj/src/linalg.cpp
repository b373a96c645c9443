#include "lascar/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lascar {

namespace {

int max_support(const Vec& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) return i;
  return -1;
}

}  // namespace

// Canonical order: by max support index, then lexicographic on coefficients.
bool vec_less(const Vec& a, const Vec& b) {
  int ma = max_support(a), mb = max_support(b);
  if (ma != mb) return ma < mb;
  return a < b;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Gf& f, const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = static_cast<uint8_t>(f.add(r.at(i, j), f.mul(xv, y.at(k, j))));
    }
  return r;
}

Vec mat_apply(const Gf& f, const Mat& m, const Vec& v) {
  assert(static_cast<int>(v.size()) == m.cols);
  Vec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    int acc = 0;
    for (int j = 0; j < m.cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
    r[i] = static_cast<uint8_t>(acc);
  }
  return r;
}

int rref(const Gf& f, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int scale = f.inv(rows[rank][c]);
    for (int j = 0; j < cols; ++j)
      rows[rank][j] = static_cast<uint8_t>(f.mul(rows[rank][j], scale));
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      int factor = rows[r][c];
      for (int j = 0; j < cols; ++j)
        rows[r][j] = static_cast<uint8_t>(
            f.sub(rows[r][j], f.mul(factor, rows[rank][j])));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

int rank_of(const Gf& f, std::vector<Vec> rows) { return rref(f, rows); }

bool in_span(const Gf& f, const std::vector<Vec>& rows, const Vec& v) {
  std::vector<Vec> with = rows;
  with.push_back(v);
  return rank_of(f, rows) == rank_of(f, std::move(with));
}

std::vector<Vec> basis_of(const Gf& f, const std::vector<Vec>& vectors) {
  std::vector<Vec> basis;
  for (const Vec& v : vectors) {
    if (max_support(v) < 0) continue;
    if (!in_span(f, basis, v)) basis.push_back(v);
  }
  return basis;
}

std::vector<Vec> span_elements(const Gf& f, const std::vector<Vec>& generators, int ambient_dim) {
  std::vector<Vec> basis = basis_of(f, generators);
  if (basis.size() > 12) throw std::length_error("span_elements: dimension above cap");
  std::vector<Vec> out;
  out.push_back(Vec(ambient_dim, 0));
  for (const Vec& b : basis) {
    std::vector<Vec> next;
    next.reserve(out.size() * f.q());
    for (int c = 0; c < f.q(); ++c) {
      for (const Vec& u : out) {
        Vec w(u.size());
        for (size_t i = 0; i < u.size(); ++i)
          w[i] = static_cast<uint8_t>(f.add(u[i], f.mul(c, b[i])));
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

std::vector<Vec> complete_basis(const Gf& f, std::vector<Vec> basis, int n) {
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (!in_span(f, basis, e)) basis.push_back(e);
  }
  return basis;
}

Vec line_representative(const Gf& f, const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      int scale = f.inv(v[i]);
      Vec r(v.size());
      for (size_t j = 0; j < v.size(); ++j)
        r[j] = static_cast<uint8_t>(f.mul(v[j], scale));
      return r;
    }
  }
  return v;  // zero vector
}

long long gl_order(int q, int n) {
  long long o = 1;
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long qi = 1;
  for (int i = 0; i < n; ++i) {
    o *= (qn - qi);
    qi *= q;
  }
  return o;
}

std::vector<Mat> enumerate_gl(const Gf& f, int n, size_t cap) {
  long long total = gl_order(f.q(), n);
  if (total > static_cast<long long>(cap))
    throw std::length_error("enumerate_gl: group order above cap");
  std::vector<Mat> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<Vec> cols;
  std::vector<Vec> pool = all_vectors(f, n);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cols.size()) == n) {
      Mat m(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
      out.push_back(std::move(m));
      return;
    }
    for (const Vec& v : pool) {
      if (in_span(f, cols, v)) continue;
      cols.push_back(v);
      rec();
      cols.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<std::vector<Vec>> enumerate_subspaces(const Gf& f, int n) {
  // BFS: extend each subspace by every outside vector; dedupe by element list.
  std::vector<Vec> pool = all_vectors(f, n);
  std::vector<std::vector<Vec>> found;
  std::vector<std::vector<Vec>> bases;  // parallel to found
  found.push_back({Vec(n, 0)});
  bases.push_back({});
  for (size_t i = 0; i < found.size(); ++i) {
    std::vector<Vec> base = bases[i];
    for (const Vec& v : pool) {
      if (in_span(f, base, v)) continue;
      std::vector<Vec> nb = base;
      nb.push_back(v);
      std::vector<Vec> elems = span_elements(f, nb, n);
      bool seen = false;
      for (const auto& fs : found)
        if (fs == elems) {
          seen = true;
          break;
        }
      if (!seen) {
        found.push_back(std::move(elems));
        bases.push_back(std::move(nb));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return found;
}

Mat random_invertible(const Gf& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, f.q() - 1);
  for (;;) {
    Mat m(n, n);
    for (auto& x : m.a) x = static_cast<uint8_t>(dist(rng));
    std::vector<Vec> rows(n, Vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    if (rank_of(f, rows) == n) return m;
  }
}

std::optional<Mat> mat_inverse(const Gf& f, const Mat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  std::vector<Vec> aug(n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m.at(i, j);
    aug[i][n + i] = 1;
  }
  // Gauss-Jordan on the left block.
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (aug[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(aug[rank], aug[pivot]);
    int scale = f.inv(aug[rank][c]);
    for (int j = 0; j < 2 * n; ++j)
      aug[rank][j] = static_cast<uint8_t>(f.mul(aug[rank][j], scale));
    for (int r = 0; r < n; ++r) {
      if (r == rank || aug[r][c] == 0) continue;
      int factor = aug[r][c];
      for (int j = 0; j < 2 * n; ++j)
        aug[r][j] = static_cast<uint8_t>(f.sub(aug[r][j], f.mul(factor, aug[rank][j])));
    }
    ++rank;
  }
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
  return inv;
}

std::vector<Vec> all_vectors(const Gf& f, int n) {
  std::vector<Vec> out;
  out.push_back(Vec(n, 0));
  // Block m: vectors whose max support index is m, lexicographic by tuple.
  for (int m = 0; m < n; ++m) {
    std::vector<int> tuple(m + 1, 0);
    tuple[m] = 1;
    for (;;) {
      Vec v(n, 0);
      for (int i = 0; i <= m; ++i) v[i] = static_cast<uint8_t>(tuple[i]);
      out.push_back(std::move(v));
      // next tuple, most-significant at index 0, keeping tuple[m] != 0
      int i = m;
      for (;;) {
        ++tuple[i];
        int lo = (i == m) ? 1 : 0;
        if (tuple[i] < f.q()) break;
        tuple[i] = lo;
        --i;
        if (i < 0) break;
      }
      if (i < 0) break;
    }
  }
  return out;
}

}  // namespace lascar
