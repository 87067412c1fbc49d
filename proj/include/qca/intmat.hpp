#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qca {

using IntVec = std::vector<long long>;

/// Dense row-major integer matrix, sized for seed-level data (r <= a few dozen).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  long long& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  long long operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        long long a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  IntMatrix operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] - rhs.data_[i];
    return out;
  }

  IntVec mul(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    IntVec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  bool operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }
  bool operator<(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
    return data_ < rhs.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long long> data_;
};

/// (t ^ u)_{ij} = t_i u_j - t_j u_i
inline IntMatrix wedge(const IntVec& t, const IntVec& u) {
  if (t.size() != u.size()) throw std::invalid_argument("wedge: length mismatch");
  IntMatrix w(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) w(i, j) = t[i] * u[j] - t[j] * u[i];
  return w;
}

}  // namespace qca
