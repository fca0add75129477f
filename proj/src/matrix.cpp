#include "critgroup/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace critgroup {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long x : r) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    IntMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.entries_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
        if (r.size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (auto& x : r) m.entries_.push_back(std::move(x));
    }
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] + other.entries_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] - other.entries_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in *");
    IntMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in matvec");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix operator*(const Int& c, const IntMatrix& m) {
    IntMatrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.entries_.size(); ++i) r.entries_[i] = c * m.entries_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::deleted(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::invalid_argument("IntMatrix: deleted out of range");
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r(ri, rj) = (*this)(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x >= 0; });
}

bool IntMatrix::has_nonpositive_offdiagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) > 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::vector<std::size_t> widths(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            widths[j] = std::max(widths[j], (*this)(i, j).get_str().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            std::string s = (*this)(i, j).get_str();
            out << ' ' << std::string(widths[j] - s.size(), ' ') << s;
        }
        out << " ]";
        if (i + 1 < rows_) out << '\n';
    }
    return out.str();
}

std::vector<Int> row_times(const std::vector<Int>& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("row_times: shape mismatch");
    std::vector<Int> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r[j] += v[i] * m(i, j);
    return r;
}

IntMatrix outer_product(const std::vector<Int>& col, const std::vector<Int>& row) {
    IntMatrix r(col.size(), row.size());
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) r(i, j) = col[i] * row[j];
    return r;
}

bool entrywise_leq(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("entrywise_leq: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) > b(i, j)) return false;
    return true;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    entries_.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) entries_.emplace_back(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
    RatMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
        }
    return r;
}

std::vector<Rat> RatMatrix::operator*(const std::vector<Rat>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("RatMatrix: shape mismatch in matvec");
    std::vector<Rat> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

bool RatMatrix::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& x) { return x >= 0; });
}

std::string RatMatrix::to_string() const {
    std::vector<std::size_t> widths(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            widths[j] = std::max(widths[j], (*this)(i, j).get_str().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            std::string s = (*this)(i, j).get_str();
            out << ' ' << std::string(widths[j] - s.size(), ' ') << s;
        }
        out << " ]";
        if (i + 1 < rows_) out << '\n';
    }
    return out.str();
}

}  // namespace critgroup
