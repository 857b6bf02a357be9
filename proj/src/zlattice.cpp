#include "mackey/zlattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace mackey {

bool mat_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool mat_is_zero(const IntMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool mat_is_identity(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

struct Reduction {
  IntMatrix A, U, Uinv, V;

  // row_i -= f * row_j on A and U; Uinv absorbs the inverse column op.
  void row_sub(Index i, Index j, const Int& f) {
    A.row(i) -= f * A.row(j);
    U.row(i) -= f * U.row(j);
    Uinv.col(j) += f * Uinv.col(i);
  }
  void row_swap(Index i, Index j) {
    A.row(i).swap(A.row(j));
    U.row(i).swap(U.row(j));
    Uinv.col(i).swap(Uinv.col(j));
  }
  void row_negate(Index i) {
    A.row(i) = -A.row(i);
    U.row(i) = -U.row(i);
    Uinv.col(i) = -Uinv.col(i);
  }
  // col_j -= f * col_i on A and V.
  void col_sub(Index j, Index i, const Int& f) {
    A.col(j) -= f * A.col(i);
    V.col(j) -= f * V.col(i);
  }
  void col_swap(Index i, Index j) {
    A.col(i).swap(A.col(j));
    V.col(i).swap(V.col(j));
  }
};

}  // namespace

SNFResult snf(const IntMatrix& M) {
  const Index r = M.rows(), c = M.cols();
  Reduction w{M, IntMatrix::Identity(r, r), IntMatrix::Identity(r, r),
              IntMatrix::Identity(c, c)};
  const Index mn = r < c ? r : c;
  for (Index k = 0; k < mn; ++k) {
    // Pivot: least nonzero absolute value, ties to lowest (row, col).
    Index pi = -1, pj = -1;
    Int pv;
    for (Index i = k; i < r; ++i)
      for (Index j = k; j < c; ++j) {
        if (w.A(i, j) == 0) continue;
        Int a = abs(w.A(i, j));
        if (pi < 0 || a < pv) {
          pv = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    if (pi != k) w.row_swap(k, pi);
    if (pj != k) w.col_swap(k, pj);

    for (;;) {
      bool clean = true;
      for (Index i = k + 1; i < r; ++i) {
        if (w.A(i, k) == 0) continue;
        Int q = w.A(i, k) / w.A(k, k);
        if (q != 0) w.row_sub(i, k, q);
        if (w.A(i, k) != 0) {  // remainder is a strictly smaller pivot
          w.row_swap(k, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (Index j = k + 1; j < c; ++j) {
        if (w.A(k, j) == 0) continue;
        Int q = w.A(k, j) / w.A(k, k);
        if (q != 0) w.col_sub(j, k, q);
        if (w.A(k, j) != 0) {
          w.col_swap(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry before we move on.
      bool fixed = false;
      for (Index i = k + 1; i < r && !fixed; ++i)
        for (Index j = k + 1; j < c && !fixed; ++j)
          if (w.A(i, j) % w.A(k, k) != 0) {
            w.row_sub(k, i, Int(-1));  // row_k += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.A(k, k) < 0) w.row_negate(k);
  }
  return {std::move(w.A), std::move(w.U), std::move(w.V), std::move(w.Uinv)};
}

QuotientPresentation quotient_by_columns(Index ambient_rank, const IntMatrix& gens) {
  if (gens.rows() != ambient_rank)
    throw std::invalid_argument("quotient_by_columns: generator rows != ambient rank");
  SNFResult s = snf(gens);
  const Index mn = ambient_rank < gens.cols() ? ambient_rank : gens.cols();
  Index rank = 0;
  while (rank < mn && s.D(rank, rank) != 0) ++rank;

  QuotientPresentation q;
  q.ambient_rank = ambient_rank;
  q.free_rank = ambient_rank - rank;
  std::vector<Index> torsion_rows;
  for (Index i = 0; i < rank; ++i)
    if (s.D(i, i) >= 2) {
      q.torsion.push_back(s.D(i, i));
      torsion_rows.push_back(i);
    }
  const Index t = static_cast<Index>(torsion_rows.size());
  q.projection.resize(t + q.free_rank, ambient_rank);
  for (Index i = 0; i < t; ++i) q.projection.row(i) = s.U.row(torsion_rows[i]);
  for (Index i = 0; i < q.free_rank; ++i)
    q.projection.row(t + i) = s.U.row(rank + i);
  q.free_projection = q.projection.bottomRows(q.free_rank);
  q.section.resize(ambient_rank, q.free_rank);
  for (Index i = 0; i < q.free_rank; ++i) q.section.col(i) = s.Uinv.col(rank + i);
  return q;
}

Int det_bareiss(IntMatrix M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  const Index n = M.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      M.row(k).swap(M.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        Int num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        M(i, j) = num / prev;  // exact in Bareiss elimination
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) return false;
  Int d = det_bareiss(M);
  return d == 1 || d == -1;
}

LatticeMembership::LatticeMembership(Index ambient, const IntMatrix& gens)
    : ambient_(ambient), s_(snf(gens)) {
  if (gens.rows() != ambient)
    throw std::invalid_argument("LatticeMembership: generator rows != ambient rank");
  const Index mn = ambient < gens.cols() ? ambient : gens.cols();
  while (rank_ < mn && s_.D(rank_, rank_) != 0) ++rank_;
}

bool LatticeMembership::contains(const IntVector& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("LatticeMembership: vector size mismatch");
  IntVector w = s_.U * v;
  for (Index i = 0; i < rank_; ++i)
    if (w(i) % s_.D(i, i) != 0) return false;
  for (Index i = rank_; i < ambient_; ++i)
    if (w(i) != 0) return false;
  return true;
}

}  // namespace mackey
