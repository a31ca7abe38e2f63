#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chromhom {

using IntVector = std::vector<mpz_class>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& values);
  IntMatrix transpose() const;
  bool is_zero() const;
  std::size_t nonzero_count() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const mpz_class& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntVector scaled(const IntVector& v, const mpz_class& factor);
bool is_zero(const IntVector& v);

/// Exact determinant (fraction-free elimination).
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix S;
  IntMatrix U;  ///< unimodular, rows x rows
  IntMatrix V;  ///< unimodular, cols x cols
  /// Nonzero diagonal entries of S, each dividing the next.
  std::vector<mpz_class> diagonal() const;
};

/// U * m * V = S with S diagonal, nonnegative, divisibility chain. Pivots on
/// the entry of least absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors of m without transformation matrices: unit
/// pivots are eliminated sparsely first, the remainder goes through the dense
/// Smith form. Suited to large 0/±1 matrices.
std::vector<mpz_class> invariant_factors(const IntMatrix& m);

struct ColumnEchelonForm {
  IntMatrix H;         ///< m * V, column echelon with pivot rows increasing
  IntMatrix V;         ///< unimodular
  IntMatrix V_inverse;
  std::vector<std::size_t> pivot_rows;  ///< pivot row of each of the first `rank` columns
  std::size_t rank() const { return pivot_rows.size(); }
};

/// Column-style Hermite normal form: pivots positive, entries left of a pivot
/// reduced modulo it.
ColumnEchelonForm column_hermite_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Columns form a lattice basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// x with m x = b when b lies in the integer column span of m.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

struct HomologyResult {
  std::size_t betti = 0;
  /// Invariant factors > 1 of the torsion subgroup, each dividing the next.
  std::vector<mpz_class> invariant_factors;

  bool has_torsion() const { return !invariant_factors.empty(); }
  /// Some invariant factor is even, i.e. a Z_2 quotient of a cyclic summand.
  bool has_z2() const;
  std::string to_string() const;
};

/// H = ker d1 / im d2. Throws ComplexNotExact when d1 * d2 != 0.
HomologyResult homology_group(const IntMatrix& d1, const IntMatrix& d2);

}  // namespace chromhom
