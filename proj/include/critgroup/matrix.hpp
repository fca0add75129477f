#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "critgroup/arith.hpp"

namespace critgroup {

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const Int& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix operator*(const IntMatrix& other) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    friend IntMatrix operator*(const Int& c, const IntMatrix& m);

    IntMatrix transpose() const;

    /// Copy with one row and one column struck out.
    IntMatrix deleted(std::size_t row, std::size_t col) const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> column(std::size_t j) const;

    bool is_nonnegative() const;
    bool has_nonpositive_offdiagonal() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// v^T * M as a row vector.
std::vector<Int> row_times(const std::vector<Int>& v, const IntMatrix& m);

/// col * row^T.
IntMatrix outer_product(const std::vector<Int>& col, const std::vector<Int>& row);

bool entrywise_leq(const IntMatrix& a, const IntMatrix& b);

/// Dense matrix over Q; entries are canonical (reduced, positive denominator).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    bool operator==(const RatMatrix&) const = default;

    RatMatrix operator*(const RatMatrix& other) const;
    std::vector<Rat> operator*(const std::vector<Rat>& v) const;

    bool is_nonnegative() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

}  // namespace critgroup
