#pragma once
// Exact integer linear algebra on Eigen dense matrices with GMP entries:
// Smith normal form, quotient presentations of Z^n by a column lattice,
// lattice membership, and fraction-free determinants. No floating point.

#include <gmpxx.h>

#include <Eigen/Core>

#include <vector>

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40,
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace mackey {

using Int = mpz_class;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

bool mat_equal(const IntMatrix& a, const IntMatrix& b);
bool mat_is_zero(const IntMatrix& a);
bool mat_is_identity(const IntMatrix& a);

/// U * M * V = D with U, V unimodular and D diagonal, entries nonnegative,
/// each dividing the next. Uinv = U^{-1}, tracked during the reduction.
/// Pivoting rule: least nonzero absolute value, ties to lowest (row, col).
struct SNFResult {
  IntMatrix D, U, V, Uinv;
};

SNFResult snf(const IntMatrix& M);

/// Presentation of Z^ambient / column-lattice(gens).
///
/// projection stacks the torsion coordinates (rows of U whose invariant
/// factor is >= 2) over the free coordinates; free_projection is the free
/// block alone, and section is a right inverse of free_projection whose
/// columns avoid the lattice directions.
struct QuotientPresentation {
  Index ambient_rank = 0;
  Index free_rank = 0;
  std::vector<Int> torsion;  // invariant factors d1 | d2 | ..., each >= 2
  IntMatrix projection;
  IntMatrix free_projection;
  IntMatrix section;
};

QuotientPresentation quotient_by_columns(Index ambient_rank, const IntMatrix& gens);

/// Exact determinant by Bareiss fraction-free elimination.
Int det_bareiss(IntMatrix M);
bool is_unimodular(const IntMatrix& M);

/// Membership queries against the column lattice of a fixed generator matrix.
class LatticeMembership {
 public:
  LatticeMembership(Index ambient, const IntMatrix& gens);
  bool contains(const IntVector& v) const;
  Index lattice_rank() const { return rank_; }

 private:
  Index ambient_;
  Index rank_ = 0;
  SNFResult s_;
};

}  // namespace mackey
