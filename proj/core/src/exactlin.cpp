#include "wb/exactlin.hpp"

#include <sstream>

namespace wb {

namespace {

std::string shape(const LinMap& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Reduced row echelon form in place; returns the pivot column of each pivot
// row in order. Pivot choice is "first nonzero", so the result is canonical.
std::vector<int> rref_in_place(LinMap& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot_row = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot_row, j));
    }
    const Scalar inv_pivot = Scalar(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv_pivot;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Scalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinMap::LinMap(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged row list in LinMap literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

LinMap LinMap::identity(int n) {
  LinMap m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

LinMap LinMap::scalar(const Scalar& value) {
  LinMap m(1, 1);
  m.at(0, 0) = value;
  return m;
}

LinMap LinMap::column(const std::vector<Scalar>& entries) {
  LinMap m(static_cast<int>(entries.size()), 1);
  for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
  return m;
}

LinMap LinMap::row(const std::vector<Scalar>& entries) {
  LinMap m(1, static_cast<int>(entries.size()));
  for (size_t j = 0; j < entries.size(); ++j) m.at(0, static_cast<int>(j)) = entries[j];
  return m;
}

LinMap LinMap::operator+(const LinMap& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("matrix sum needs equal shapes, got " + shape(*this) + " and " + shape(other));
  LinMap result(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] + other.entries_[k];
  return result;
}

LinMap LinMap::operator-(const LinMap& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ShapeError("matrix difference needs equal shapes, got " + shape(*this) + " and " + shape(other));
  LinMap result(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] - other.entries_[k];
  return result;
}

LinMap LinMap::operator*(const Scalar& s) const {
  LinMap result(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] * s;
  return result;
}

bool LinMap::is_zero() const {
  for (const Scalar& e : entries_)
    if (e != 0) return false;
  return true;
}

bool LinMap::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

LinMap LinMap::transpose() const {
  LinMap result(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) result.at(j, i) = at(i, j);
  return result;
}

Scalar LinMap::abs_sum() const {
  Scalar total = 0;
  for (const Scalar& e : entries_) total += (e < 0 ? Scalar(-e) : e);
  return total;
}

std::string LinMap::str() const {
  std::ostringstream out;
  out << rows_ << "x" << cols_ << " [";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j);
  }
  out << "]";
  return out.str();
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.cols() != f.rows())
    throw ShapeError("compose: source of " + shape(g) + " does not match target of " + shape(f));
  LinMap result(g.rows(), f.cols());
  for (int i = 0; i < g.rows(); ++i) {
    for (int k = 0; k < g.cols(); ++k) {
      const Scalar& gik = g.at(i, k);
      if (gik == 0) continue;
      for (int j = 0; j < f.cols(); ++j) {
        if (f.at(k, j) == 0) continue;
        result.at(i, j) += gik * f.at(k, j);
      }
    }
  }
  return result;
}

LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c) { return compose(compose(a, b), c); }
LinMap compose(const LinMap& a, const LinMap& b, const LinMap& c, const LinMap& d) {
  return compose(compose(a, b), compose(c, d));
}

LinMap kron(const LinMap& f, const LinMap& g) {
  LinMap result(f.rows() * g.rows(), f.cols() * g.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      const Scalar& fij = f.at(i, j);
      if (fij == 0) continue;
      for (int k = 0; k < g.rows(); ++k)
        for (int l = 0; l < g.cols(); ++l) {
          if (g.at(k, l) == 0) continue;
          result.at(flat_index(i, k, g.rows()), flat_index(j, l, g.cols())) = fij * g.at(k, l);
        }
    }
  return result;
}

LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c) { return kron(kron(a, b), c); }
LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c, const LinMap& d) {
  return kron(kron(a, b), kron(c, d));
}

LinMap symmetry(int m, int n) {
  LinMap result(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) result.at(flat_index(j, i, m), flat_index(i, j, n)) = 1;
  return result;
}

LinMap column_echelon(const LinMap& m) {
  LinMap t = m.transpose();
  std::vector<int> pivots = rref_in_place(t);
  LinMap result(m.rows(), static_cast<int>(pivots.size()));
  for (int j = 0; j < result.cols(); ++j)
    for (int i = 0; i < result.rows(); ++i) result.at(i, j) = t.at(j, i);
  return result;
}

LinMap kernel_basis(const LinMap& f) {
  LinMap reduced = f;
  std::vector<int> pivots = rref_in_place(reduced);
  std::vector<bool> is_pivot(static_cast<size_t>(f.cols()), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  // One basis vector per free column: that free variable 1, other free
  // variables 0, pivot variables read off the reduced rows.
  std::vector<int> free_cols;
  for (int c = 0; c < f.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

  LinMap basis(f.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    basis.at(free_cols[k], static_cast<int>(k)) = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(k)) = -reduced.at(static_cast<int>(r), free_cols[k]);
  }
  // Normalize to the unique reduced column echelon basis of the kernel.
  return column_echelon(basis);
}

LinMap image_basis(const LinMap& f) { return column_echelon(f); }

int rank(const LinMap& f) {
  LinMap reduced = f;
  return static_cast<int>(rref_in_place(reduced).size());
}

SubObject equalizer(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw ShapeError("equalizer: parallel pair has shapes " + shape(f) + " and " + shape(g));
  LinMap inclusion = kernel_basis(f - g);
  return SubObject{Space{inclusion.cols()}, inclusion};
}

QuotientObject coequalizer(const LinMap& f, const LinMap& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw ShapeError("coequalizer: parallel pair has shapes " + shape(f) + " and " + shape(g));
  const int target_dim = f.rows();
  LinMap image = image_basis(f - g);

  // Pivot rows of the echelon image basis are eliminated; the remaining
  // coordinates are the canonical coset representatives.
  std::vector<int> pivot_row_of_col(static_cast<size_t>(image.cols()), -1);
  std::vector<bool> is_pivot_row(static_cast<size_t>(target_dim), false);
  for (int j = 0; j < image.cols(); ++j)
    for (int i = 0; i < target_dim; ++i)
      if (image.at(i, j) != 0) {
        pivot_row_of_col[static_cast<size_t>(j)] = i;
        is_pivot_row[static_cast<size_t>(i)] = true;
        break;
      }

  std::vector<int> kept_rows;
  for (int i = 0; i < target_dim; ++i)
    if (!is_pivot_row[static_cast<size_t>(i)]) kept_rows.push_back(i);

  LinMap projection(static_cast<int>(kept_rows.size()), target_dim);
  for (size_t q = 0; q < kept_rows.size(); ++q) projection.at(static_cast<int>(q), kept_rows[q]) = 1;
  // e_{pivot row of column j} = (column j) minus its non-pivot part, so in the
  // quotient it maps to minus the non-pivot coordinates of that column.
  for (int j = 0; j < image.cols(); ++j) {
    const int p = pivot_row_of_col[static_cast<size_t>(j)];
    for (size_t q = 0; q < kept_rows.size(); ++q)
      projection.at(static_cast<int>(q), p) = -image.at(kept_rows[q], j);
  }
  return QuotientObject{Space{static_cast<int>(kept_rows.size())}, projection};
}

std::optional<LinMap> solve_factor(const LinMap& through, const LinMap& h) {
  if (through.rows() != h.rows())
    throw ShapeError("solve_factor: targets differ, " + shape(through) + " vs " + shape(h));
  // Row reduce the augmented matrix [through | h] once for all columns of h.
  LinMap aug(through.rows(), through.cols() + h.cols());
  for (int i = 0; i < through.rows(); ++i) {
    for (int j = 0; j < through.cols(); ++j) aug.at(i, j) = through.at(i, j);
    for (int j = 0; j < h.cols(); ++j) aug.at(i, through.cols() + j) = h.at(i, j);
  }
  std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots)
    if (p >= through.cols()) return std::nullopt;  // inconsistent system

  LinMap u(through.cols(), h.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < h.cols(); ++j) u.at(pivots[r], j) = aug.at(static_cast<int>(r), through.cols() + j);
  return u;
}

std::optional<LinMap> solve_cofactor(const LinMap& through, const LinMap& h) {
  if (through.cols() != h.cols())
    throw ShapeError("solve_cofactor: sources differ, " + shape(through) + " vs " + shape(h));
  std::optional<LinMap> ut = solve_factor(through.transpose(), h.transpose());
  if (!ut) return std::nullopt;
  return ut->transpose();
}

std::optional<LinMap> inverse(const LinMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  std::optional<LinMap> inv = solve_factor(f, LinMap::identity(f.rows()));
  if (!inv || !compose(*inv, f).is_identity()) return std::nullopt;
  return inv;
}

LinMap direct_sum(const LinMap& f, const LinMap& g) {
  LinMap result(f.rows() + g.rows(), f.cols() + g.cols());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) result.at(i, j) = f.at(i, j);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) result.at(f.rows() + i, f.cols() + j) = g.at(i, j);
  return result;
}

LinMap matrix_of(const std::function<LinMap(const LinMap&)>& op, int t_rows, int t_cols) {
  LinMap probe(t_rows, t_cols);
  LinMap sample = op(probe);
  LinMap result(sample.rows() * sample.cols(), t_rows * t_cols);
  for (int i = 0; i < t_rows; ++i)
    for (int j = 0; j < t_cols; ++j) {
      LinMap unit(t_rows, t_cols);
      unit.at(i, j) = 1;
      LinMap image = op(unit);
      const int col = flat_index(i, j, t_cols);
      for (int r = 0; r < image.rows(); ++r)
        for (int c = 0; c < image.cols(); ++c)
          result.at(flat_index(r, c, image.cols()), col) = image.at(r, c);
    }
  return result;
}

LinMap unflatten(const LinMap& flat, int column, int t_rows, int t_cols) {
  if (flat.rows() != t_rows * t_cols)
    throw ShapeError("unflatten: " + std::to_string(flat.rows()) + " entries cannot fill " +
                     std::to_string(t_rows) + "x" + std::to_string(t_cols));
  LinMap m(t_rows, t_cols);
  for (int i = 0; i < t_rows; ++i)
    for (int j = 0; j < t_cols; ++j) m.at(i, j) = flat.at(flat_index(i, j, t_cols), column);
  return m;
}

LinMap flatten(const LinMap& m) {
  LinMap flat(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) flat.at(flat_index(i, j, m.cols()), 0) = m.at(i, j);
  return flat;
}

}  // namespace wb
