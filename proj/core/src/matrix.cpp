#include "moca/matrix.hpp"

#include <string>
#include <utility>

namespace moca::gf {

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                         std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ValidationError("matrix entry count does not match dimensions");
  }
  for (Elem& e : entries_) e %= field_.q();
}

FieldMatrix FieldMatrix::identity(FieldSpec field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& other) const {
  if (!(field_ == other.field_)) throw ValidationError("matrix field mismatch");
  if (cols_ != other.rows_) throw ValidationError("matrix dimension mismatch in product");
  FieldMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, other.at(k, j)));
      }
    }
  }
  return out;
}

std::vector<Elem> FieldMatrix::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) throw ValidationError("matrix-vector dimension mismatch");
  std::vector<Elem> y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = field_.add(acc, field_.mul(at(i, j), x[j] % field_.q()));
    }
    y[i] = acc;
  }
  return y;
}

FieldMatrix FieldMatrix::pow(std::uint64_t e) const {
  if (!square()) throw ValidationError("matrix power requires a square matrix");
  FieldMatrix result = identity(field_, rows_);
  FieldMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return result;
}

bool FieldMatrix::is_identity() const noexcept {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

FieldMatrix sylvester_matrix(FieldSpec field, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw ValidationError("sylvester_matrix: coefficient length mismatch");
  if (a.size() < 2) throw ValidationError("sylvester_matrix: need at least two coefficients");
  const std::size_t d = a.size();
  const std::size_t n = d - 1;
  FieldMatrix m(field, 2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      m.at(r, r + j) = a[j] % field.q();
      m.at(n + r, r + j) = b[j] % field.q();
    }
  }
  return m;
}

namespace {

// Gauss-Jordan over [m | aug]; returns the reduced augmented part, or nullopt
// when m is singular.
std::optional<FieldMatrix> eliminate(const FieldMatrix& m, FieldMatrix aug) {
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  FieldMatrix a = m;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(pivot, j), aug.at(col, j));
    }
    const Elem inv = f.inv(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) a.at(col, j) = f.mul(a.at(col, j), inv);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(col, j) = f.mul(aug.at(col, j), inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Elem factor = a.at(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
      }
      for (std::size_t j = 0; j < aug.cols(); ++j) {
        aug.at(r, j) = f.sub(aug.at(r, j), f.mul(factor, aug.at(col, j)));
      }
    }
  }
  return aug;
}

}  // namespace

std::optional<FieldMatrix> matrix_invert(const FieldMatrix& m) {
  if (!m.square()) throw ValidationError("matrix_invert requires a square matrix");
  return eliminate(m, FieldMatrix::identity(m.field(), m.rows()));
}

std::optional<std::vector<Elem>> matrix_solve(const FieldMatrix& m, std::span<const Elem> rhs) {
  if (!m.square()) throw ValidationError("matrix_solve requires a square matrix");
  if (rhs.size() != m.rows()) throw ValidationError("matrix_solve: rhs dimension mismatch");
  FieldMatrix aug(m.field(), m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) aug.at(i, 0) = rhs[i] % m.field().q();
  auto reduced = eliminate(m, std::move(aug));
  if (!reduced) return std::nullopt;
  std::vector<Elem> x(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) x[i] = reduced->at(i, 0);
  return x;
}

Polynomial minimal_polynomial(const FieldMatrix& m) {
  if (!m.square()) throw ValidationError("minimal_polynomial requires a square matrix");
  if (m.rows() == 0) throw ValidationError("minimal_polynomial of an empty matrix");
  const FieldSpec& f = m.field();
  const std::size_t dim = m.rows() * m.cols();

  // Vectorize I, M, M^2, ... and row-reduce with bookkeeping of the power
  // combination each basis row stands for. The first power that reduces to
  // zero yields the annihilator coefficients.
  struct Row {
    std::vector<Elem> vec;    // reduced matrix entries
    std::vector<Elem> combo;  // coefficients over powers 0..k
    std::size_t pivot;
  };
  std::vector<Row> basis;
  FieldMatrix p = FieldMatrix::identity(f, m.rows());
  for (std::size_t k = 0;; ++k) {
    std::vector<Elem> vec(p.entries());
    std::vector<Elem> combo(k + 1, 0);
    combo[k] = 1;
    for (const Row& row : basis) {
      const Elem factor = vec[row.pivot];
      if (factor == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        vec[i] = f.sub(vec[i], f.mul(factor, row.vec[i]));
      }
      for (std::size_t i = 0; i < row.combo.size(); ++i) {
        combo[i] = f.sub(combo[i], f.mul(factor, row.combo[i]));
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim && vec[pivot] == 0) ++pivot;
    if (pivot == dim) {
      // combo encodes sum_i combo[i] M^i = 0 with combo[k] = 1.
      return Polynomial(f, std::move(combo));
    }
    const Elem inv = f.inv(vec[pivot]);
    for (Elem& v : vec) v = f.mul(v, inv);
    for (Elem& v : combo) v = f.mul(v, inv);
    basis.push_back(Row{std::move(vec), std::move(combo), pivot});
    p = p.mul(m);
  }
}

std::optional<std::uint64_t> matrix_order(const FieldMatrix& m, std::uint64_t cap) {
  if (!m.square()) throw ValidationError("matrix_order requires a square matrix");
  if (!matrix_invert(m)) return std::nullopt;
  // m^e = I iff minpoly divides X^e - 1, so the order is the multiplicative
  // order of X modulo the minimal polynomial.
  const Polynomial mp = minimal_polynomial(m);
  const Polynomial one = Polynomial::one(m.field());
  Polynomial r = poly_divmod(Polynomial::x(m.field()), mp).second;
  Polynomial acc = r;
  std::uint64_t e = 1;
  while (!(acc == one)) {
    if (++e > cap) throw ValidationError("matrix_order exceeded iteration cap");
    acc = poly_divmod(acc * r, mp).second;
  }
  return e;
}

FieldMatrix companion_matrix(const Polynomial& p) {
  if (!p.is_monic() || p.degree() < 1) {
    throw ValidationError("companion matrix requires a monic polynomial of degree >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(p.degree());
  FieldMatrix m(p.field(), n, n);
  for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = p.field().neg(p.coeff(i));
  return m;
}

std::vector<std::vector<Elem>> kernel_basis(const FieldMatrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  FieldMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    }
    const Elem inv = f.inv(a.at(rank, col));
    for (std::size_t j = 0; j < cols; ++j) a.at(rank, j) = f.mul(a.at(rank, j), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem factor = a.at(r, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(rank, j)));
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::vector<Elem>> out;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<Elem> v(cols, 0);
    v[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = f.neg(a.at(r, col));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t matrix_rank(const FieldMatrix& m) {
  return m.cols() - kernel_basis(m).size();
}

}  // namespace moca::gf
