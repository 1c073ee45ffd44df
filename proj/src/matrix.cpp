#include "fanohs/matrix.hpp"

#include <algorithm>

namespace fanohs {

MatrixQ::MatrixQ(std::vector<QVec> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()),
      data_(std::move(rows)) {
  for (const auto& r : data_) {
    if (r.size() != cols_) throw DomainError("ragged matrix rows");
  }
}

namespace {

// Clears denominators row by row, then runs Bareiss elimination in place.
// Returns pivot (row, col) pairs; zmat holds the reduced integer matrix.
std::vector<std::pair<std::size_t, std::size_t>> bareiss(
    const std::vector<QVec>& data, std::size_t rows, std::size_t cols,
    std::vector<std::vector<mpz_class>>& zmat) {
  zmat.assign(rows, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              data[i][j].get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_class scaled = data[i][j].get_num() * (lcm / data[i][j].get_den());
      zmat[i][j] = scaled;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  mpz_class prev = 1;
  std::size_t prow = 0;
  for (std::size_t pcol = 0; pcol < cols && prow < rows; ++pcol) {
    std::size_t sel = prow;
    while (sel < rows && zmat[sel][pcol] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(zmat[sel], zmat[prow]);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      for (std::size_t j = pcol + 1; j < cols; ++j) {
        zmat[i][j] = (zmat[i][j] * zmat[prow][pcol] -
                      zmat[i][pcol] * zmat[prow][j]) /
                     prev;
      }
      zmat[i][pcol] = 0;
    }
    prev = zmat[prow][pcol];
    pivots.emplace_back(prow, pcol);
    ++prow;
  }
  return pivots;
}

}  // namespace

MatrixQ::RankBasis MatrixQ::rank_basis() const {
  std::vector<std::vector<mpz_class>> zmat;
  auto pivots = bareiss(data_, rows_, cols_, zmat);
  RankBasis out;
  out.rank = static_cast<int>(pivots.size());
  for (const auto& [r, c] : pivots) {
    (void)c;
    QVec row;
    row.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) row.emplace_back(Rational(zmat[r][j]));
    out.basis.push_back(std::move(row));
  }
  return out;
}

QVec MatrixQ::solve(const QVec& b) const {
  return solve_many({b}).front();
}

std::vector<QVec> MatrixQ::solve_many(const std::vector<QVec>& bs) const {
  if (rows_ != cols_) throw DomainError("solve requires a square matrix");
  std::size_t n = rows_;
  std::vector<QVec> aug = data_;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : bs) {
      if (b.size() != n) throw DomainError("right-hand side size mismatch");
      aug[i].push_back(b[i]);
    }
  }
  std::size_t width = n + bs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && aug[sel][col] == 0) ++sel;
    if (sel == n) throw DomainError("singular matrix in exact solve");
    std::swap(aug[sel], aug[col]);
    Rational inv = Rational(1 / aug[col][col]);
    for (std::size_t j = col; j < width; ++j) aug[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (std::size_t j = col; j < width; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<QVec> out(bs.size(), QVec(n, rat(0)));
  for (std::size_t k = 0; k < bs.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) out[k][i] = aug[i][n + k];
  }
  return out;
}

Rational MatrixQ::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
  std::vector<QVec> a = data_;
  Rational det = rat(1);
  std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return rat(0);
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = Rational(1 / a[col][col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::vector<QVec> MatrixQ::kernel_basis() const {
  // Plain Gauss-Jordan over Q; the kernel needs the RREF pivot structure.
  std::vector<QVec> a = data_;
  std::size_t n = cols_;
  std::vector<std::size_t> pivot_col;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < n && prow < rows_; ++col) {
    std::size_t sel = prow;
    while (sel < rows_ && a[sel][col] == 0) ++sel;
    if (sel == rows_) continue;
    std::swap(a[sel], a[prow]);
    Rational inv = Rational(1 / a[prow][col]);
    for (std::size_t j = 0; j < n; ++j) a[prow][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == prow || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_col.push_back(col);
    ++prow;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<QVec> kernel;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(n, rat(0));
    v[free_col] = rat(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      v[pivot_col[k]] = -a[k][free_col];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<QVec> express_in_rowspace(const std::vector<QVec>& basis,
                                        const QVec& v) {
  if (basis.empty()) {
    for (const auto& x : v) {
      if (x != 0) return std::nullopt;
    }
    return QVec{};
  }
  // Solve c^T basis = v by elimination on the transposed system.
  std::size_t n = v.size();
  std::size_t k = basis.size();
  std::vector<QVec> aug(n, QVec(k + 1, rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = v[i];
  }
  std::size_t prow = 0;
  std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
  for (std::size_t col = 0; col < k && prow < n; ++col) {
    std::size_t sel = prow;
    while (sel < n && aug[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(aug[sel], aug[prow]);
    Rational inv = Rational(1 / aug[prow][col]);
    for (std::size_t j = 0; j <= k; ++j) aug[prow][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == prow || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (std::size_t j = 0; j <= k; ++j) aug[i][j] -= f * aug[prow][j];
    }
    pivot_of_col[col] = prow;
    ++prow;
  }
  QVec coeffs(k, rat(0));
  for (std::size_t col = 0; col < k; ++col) {
    if (pivot_of_col[col] != SIZE_MAX) coeffs[col] = aug[pivot_of_col[col]][k];
  }
  // Consistency: rows without a pivot must have zero in the rhs column.
  for (std::size_t i = prow; i < n; ++i) {
    if (aug[i][k] != 0) return std::nullopt;
  }
  return coeffs;
}

bool same_rowspace(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  if (a.empty() && b.empty()) return true;
  std::vector<QVec> all;
  for (const auto& r : a) all.push_back(r);
  for (const auto& r : b) all.push_back(r);
  int ra = a.empty() ? 0 : MatrixQ(a).rank();
  int rb = b.empty() ? 0 : MatrixQ(b).rank();
  int rall = MatrixQ(all).rank();
  return ra == rb && rb == rall;
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntVec primitive_integer_vector(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd_int(g, x);
  if (g == 0) throw DomainError("primitive direction of the zero vector");
  IntVec out = v;
  for (auto& x : out) x /= g;
  return out;
}

IntVec primitive_integer_vector(const QVec& v, bool positive_leading) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  mpz_class gcd = 0;
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    mpz_class z = x.get_num() * (lcm / x.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (gcd == 0) throw DomainError("primitive direction of the zero vector");
  if (positive_leading) {
    for (const auto& z : ints) {
      if (z == 0) continue;
      if (z < 0) gcd = -gcd;
      break;
    }
  }
  IntVec out;
  for (const auto& z : ints) {
    mpz_class q = z / gcd;
    if (!q.fits_slong_p()) throw DomainError("primitive vector entry overflow");
    out.push_back(q.get_si());
  }
  return out;
}

}  // namespace fanohs
