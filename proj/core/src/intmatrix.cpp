#include "hcg/intmatrix.hpp"

#include <sstream>
#include <utility>

namespace hcg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw error("ragged initializer for IntMatrix");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw error("row length mismatch in IntMatrix::from_rows");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(size_t i) const {
  std::vector<Int> r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw error("row length mismatch in append_row");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw error("dimension mismatch in matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw error("det of non-square matrix");
  size_t n = m.rows();
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
  Rat d(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) return Int(0);
    if (p != k) {
      std::swap(w[p], w[k]);
      d = -d;
    }
    d *= w[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (w[i][k] == 0) continue;
      Rat f = w[i][k] / w[k][k];
      for (size_t j = k; j < n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) throw error("internal: non-integer determinant");
  return d.get_num();
}

namespace {

// Row/column operations applied in lockstep to the working matrix and the
// accumulating unimodular factors, preserving u*m*v = d throughout.
struct SmithWork {
  IntMatrix d, u, v;

  void row_swap(size_t i, size_t j) {
    for (size_t c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(size_t i, size_t j) {
    for (size_t r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_addmul(size_t dst, size_t src, const Int& f) {  // row dst += f * row src
    for (size_t c = 0; c < d.cols(); ++c) d.at(dst, c) += f * d.at(src, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void col_addmul(size_t dst, size_t src, const Int& f) {
    for (size_t r = 0; r < d.rows(); ++r) d.at(r, dst) += f * d.at(r, src);
    for (size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void row_negate(size_t i) {
    for (size_t c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest |entry| != 0 in the submatrix with corner (k,k); row-major on
  // ties.  Returns false when the submatrix is zero.
  bool find_pivot(size_t k, size_t& pi, size_t& pj) const {
    bool found = false;
    Int best;
    for (size_t i = k; i < d.rows(); ++i)
      for (size_t j = k; j < d.cols(); ++j) {
        const Int& e = d.at(i, j);
        if (e == 0) continue;
        Int a = abs(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  size_t steps = std::min(m.rows(), m.cols());
  for (size_t k = 0; k < steps; ++k) {
    size_t pi, pj;
    if (!w.find_pivot(k, pi, pj)) break;
    w.row_swap(k, pi);
    w.col_swap(k, pj);
    for (;;) {
      // Clear column k below the pivot, then row k to its right.  Truncated
      // quotients leave remainders strictly smaller than |pivot|, so
      // re-selecting the minimal pivot makes this terminate.
      bool dirty = false;
      for (size_t i = k + 1; i < w.d.rows(); ++i) {
        if (w.d.at(i, k) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), w.d.at(i, k).get_mpz_t(), w.d.at(k, k).get_mpz_t());
        if (q != 0) w.row_addmul(i, k, -q);
        if (w.d.at(i, k) != 0) dirty = true;
      }
      for (size_t j = k + 1; j < w.d.cols(); ++j) {
        if (w.d.at(k, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), w.d.at(k, j).get_mpz_t(), w.d.at(k, k).get_mpz_t());
        if (q != 0) w.col_addmul(j, k, -q);
        if (w.d.at(k, j) != 0) dirty = true;
      }
      if (dirty) {
        size_t qi = k, qj = k;
        w.find_pivot(k, qi, qj);
        w.row_swap(k, qi);
        w.col_swap(k, qj);
        continue;
      }
      // Row and column are clear; enforce divisibility into the rest.
      bool fixed = false;
      for (size_t i = k + 1; i < w.d.rows() && !fixed; ++i)
        for (size_t j = k + 1; j < w.d.cols() && !fixed; ++j)
          if (w.d.at(i, j) % w.d.at(k, k) != 0) {
            w.row_addmul(k, i, Int(1));
            fixed = true;
          }
      if (!fixed) break;
      size_t qi = k, qj = k;
      w.find_pivot(k, qi, qj);
      w.row_swap(k, qi);
      w.col_swap(k, qj);
    }
    if (w.d.at(k, k) < 0) w.row_negate(k);
  }
  return SmithForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<Int> SmithForm::diagonal(size_t n) const {
  std::vector<Int> out(n, Int(0));
  size_t lim = std::min({n, d.rows(), d.cols()});
  for (size_t i = 0; i < lim; ++i) out[i] = d.at(i, i);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  size_t r = 0;
  for (size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    // Euclid on column j among rows >= r until one nonzero entry remains.
    for (;;) {
      size_t best = h.rows();
      for (size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, j) == 0) continue;
        if (best == h.rows() || abs(h.at(i, j)) < abs(h.at(best, j))) best = i;
      }
      if (best == h.rows()) break;  // column clear below r
      if (best != r)
        for (size_t c = 0; c < h.cols(); ++c) std::swap(h.at(best, c), h.at(r, c));
      bool any = false;
      for (size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
        for (size_t c = 0; c < h.cols(); ++c) h.at(i, c) -= q * h.at(r, c);
        if (h.at(i, j) != 0) any = true;
      }
      if (!any) {
        if (h.at(r, j) != 0) {
          if (h.at(r, j) < 0)
            for (size_t c = 0; c < h.cols(); ++c) h.at(r, c) = -h.at(r, c);
          for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
            if (q != 0)
              for (size_t c = 0; c < h.cols(); ++c) h.at(i, c) -= q * h.at(r, c);
          }
          ++r;
        }
        break;
      }
    }
  }
  IntMatrix out(r, h.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < h.cols(); ++j) out.at(i, j) = h.at(i, j);
  return out;
}

}  // namespace hcg
