#pragma once

#include <optional>
#include <vector>

#include "fanohs/rational.hpp"

namespace fanohs {

// Dense matrix over Q.  Rank and basis come from fraction-free (Bareiss)
// elimination on an integer-scaled copy, so every intermediate is exact.
class MatrixQ {
public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, QVec(cols, rat(0))) {}
  explicit MatrixQ(std::vector<QVec> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const QVec& row(std::size_t i) const { return data_[i]; }

  struct RankBasis {
    int rank = 0;
    std::vector<QVec> basis;  // pivot rows of the reduced matrix
  };
  RankBasis rank_basis() const;
  int rank() const { return rank_basis().rank; }

  // Exact solution of A x = b for square nonsingular A.
  QVec solve(const QVec& b) const;
  // Solves for several right-hand sides with one elimination.
  std::vector<QVec> solve_many(const std::vector<QVec>& bs) const;

  Rational determinant() const;

  // Basis of the kernel {x : A x = 0}.
  std::vector<QVec> kernel_basis() const;

private:
  std::size_t rows_, cols_;
  std::vector<QVec> data_;
};

// Coefficients expressing v in the row space spanned by basis, or nullopt if
// v lies outside it.
std::optional<QVec> express_in_rowspace(const std::vector<QVec>& basis,
                                        const QVec& v);

bool same_rowspace(const std::vector<QVec>& a, const std::vector<QVec>& b);

// Scales a nonzero rational vector to a primitive integer vector.  By
// default the direction is preserved; positive_leading additionally flips
// the sign so the first nonzero entry is positive (canonical basis display).
IntVec primitive_integer_vector(const QVec& v, bool positive_leading = false);

std::int64_t gcd_int(std::int64_t a, std::int64_t b);
IntVec primitive_integer_vector(const IntVec& v);

}  // namespace fanohs
