#ifndef LASCAR_LINALG_HPP_
#define LASCAR_LINALG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "lascar/gf.hpp"

namespace lascar {

/// Dense coordinate vector over GF(q); entries are field codes 0..q-1.
using Vec = std::vector<uint8_t>;

/// Row-major square or rectangular matrix over GF(q).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator<(const Mat& o) const { return a < o.a; }
};

Mat mat_mul(const Gf& f, const Mat& x, const Mat& y);
Vec mat_apply(const Gf& f, const Mat& m, const Vec& v);
std::optional<Mat> mat_inverse(const Gf& f, const Mat& m);

/// Rank of the row space.
int rank_of(const Gf& f, std::vector<Vec> rows);

/// Reduced row echelon form (in place); returns rank.
int rref(const Gf& f, std::vector<Vec>& rows);

/// Is v in the span of the given rows?
bool in_span(const Gf& f, const std::vector<Vec>& rows, const Vec& v);

/// A subset of `vectors` forming a basis of their span, in input order.
std::vector<Vec> basis_of(const Gf& f, const std::vector<Vec>& vectors);

/// Full enumeration of span(generators) inside GF(q)^ambient_dim; includes the
/// zero vector. Sorted in canonical vector order.
std::vector<Vec> span_elements(const Gf& f, const std::vector<Vec>& generators, int ambient_dim);

/// Canonical vector order: by max support index, then lexicographic.
bool vec_less(const Vec& a, const Vec& b);

/// Extends `basis` (assumed independent) to a basis of GF(q)^n using unit
/// vectors, deterministically.
std::vector<Vec> complete_basis(const Gf& f, std::vector<Vec> basis, int n);

/// Canonical representative of the line through v: scaled so the lowest-index
/// nonzero coordinate is 1.
Vec line_representative(const Gf& f, const Vec& v);

/// All n x n invertible matrices, in a deterministic order. `cap` guards
/// against accidental blowups.
std::vector<Mat> enumerate_gl(const Gf& f, int n, size_t cap = 30000000);

/// Number of invertible n x n matrices.
long long gl_order(int q, int n);

/// All subspaces of GF(q)^n, each as a sorted list of member vectors
/// (including 0). Ordered by (dimension, member list).
std::vector<std::vector<Vec>> enumerate_subspaces(const Gf& f, int n);

Mat random_invertible(const Gf& f, int n, std::mt19937_64& rng);

/// All vectors of GF(q)^n in canonical order (zero first, then by
/// (max support index, coefficient tuple)).
std::vector<Vec> all_vectors(const Gf& f, int n);

}  // namespace lascar

#endif  // LASCAR_LINALG_HPP_
