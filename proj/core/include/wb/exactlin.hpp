#pragma once

// Exact dense linear algebra over the rationals. Every structural morphism in
// the workbench (comultiplications, coactions, oplax components, ...) is a
// LinMap, so this file is the computational substrate for everything else.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

// Arbitrary-precision rational, always normalized to lowest terms with a
// positive denominator. No rounding ever happens anywhere in the library.
using Scalar = boost::multiprecision::cpp_rational;

// A finite-dimensional vector space is just its dimension. Basis vector (i, j)
// of V (x) W sits at flat index i*dim(W) + j; this flattening makes the tensor
// strictly associative on objects, so associators and unitors are identity
// matrices and never appear in formulas.
struct Space {
  int dim = 0;
};

inline int flat_index(int i, int j, int dim_second) { return i * dim_second + j; }

struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a construction that is mathematically guaranteed to succeed
// fails on concrete data (e.g. an induced coaction does not factor). Seeing
// one of these means an input structure was invalid.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Rational matrix with explicit dimensions; rows = dim of target, cols = dim
// of source, entries stored row-major. Matrices act on column vectors, so
// compose(g, f) is "first f, then g".
class LinMap {
 public:
  LinMap() = default;
  LinMap(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
  LinMap(std::initializer_list<std::initializer_list<Scalar>> rows);

  static LinMap identity(int n);
  static LinMap zero(int rows, int cols) { return LinMap(rows, cols); }
  // 1x1 matrix, handy for maps in and out of the ground field.
  static LinMap scalar(const Scalar& value);
  static LinMap column(const std::vector<Scalar>& entries);
  static LinMap row(const std::vector<Scalar>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const LinMap& other) const = default;

  LinMap operator+(const LinMap& other) const;
  LinMap operator-(const LinMap& other) const;
  LinMap operator*(const Scalar& s) const;

  bool is_zero() const;
  bool is_identity() const;
  LinMap transpose() const;
  // Sum of absolute values of all entries; zero iff the matrix is zero. Used
  // by validators to report a residual magnitude as an exact rational.
  Scalar abs_sum() const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> entries_;
};

// Exact matrix product g*f ("first f, then g"). Throws ShapeError on mismatch.
LinMap compose(const LinMap& g, const LinMap& f);
LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c);
LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c, const LinMap& d);

// Kronecker product in the flat-index convention: kron(f, g) maps the (i, j)
// basis vector of the source pair to f(e_i) (x) g(e_j). Functorial:
// kron(f1∘f2, g1∘g2) = kron(f1, g1)∘kron(f2, g2).
LinMap kron(const LinMap& f, const LinMap& g);
LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c);
LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c, const LinMap& d);

// The tensor-swap permutation matrix sigma: V(x)W -> W(x)V, e_i(x)e_j -> e_j(x)e_i.
LinMap symmetry(int m, int n);

struct SubObject {
  Space space;          // dimension of the subspace
  LinMap inclusion;     // columns are the canonical (reduced column echelon) basis
};

struct QuotientObject {
  Space space;          // dimension of the quotient
  LinMap projection;    // canonical surjection
};

// Equalizer of a parallel pair: the kernel of f - g with its canonical
// echelon basis as inclusion. Any h with f∘h = g∘h factors uniquely through
// the inclusion; recover the factor with solve_factor(inclusion, h).
SubObject equalizer(const LinMap& f, const LinMap& g);

// Coequalizer of a parallel pair: the quotient of the shared target by
// im(f - g), with deterministic coset representatives (the non-pivot
// coordinates of the canonical image basis).
QuotientObject coequalizer(const LinMap& f, const LinMap& g);

// Least-structure solver: a u with through∘u = h, or nullopt when h is not in
// the image. When the solution is not unique the canonical one (free
// variables zero) is returned, so results are deterministic.
std::optional<LinMap> solve_factor(const LinMap& through, const LinMap& h);

// Dual solver for factoring through surjections: a u with u∘through = h.
std::optional<LinMap> solve_cofactor(const LinMap& through, const LinMap& h);

// Canonical basis (reduced column echelon, columns) of the kernel / image.
LinMap kernel_basis(const LinMap& f);
LinMap image_basis(const LinMap& f);

// Reduced column echelon normalization of the column span (RREF of the
// transpose, transposed). Unique per subspace, which is what makes subobject
// results comparable by plain equality.
LinMap column_echelon(const LinMap& m);

int rank(const LinMap& f);
std::optional<LinMap> inverse(const LinMap& f);

// Block-diagonal direct sum of maps.
LinMap direct_sum(const LinMap& f, const LinMap& g);

// Matrix of a linear operator on a space of t_rows x t_cols matrices,
// evaluated entrywise on basis matrices; matrices are flattened row-major.
// This turns intertwining conditions ("T is a comodule morphism") into
// ordinary kernel computations.
LinMap matrix_of(const std::function<LinMap(const LinMap&)>& op, int t_rows, int t_cols);

// Inverse of the matrix_of flattening: reshape a column vector (or the k-th
// column of a matrix) into a t_rows x t_cols matrix.
LinMap unflatten(const LinMap& flat, int column, int t_rows, int t_cols);
LinMap flatten(const LinMap& m);  // single-column row-major flattening

}  // namespace wb
