#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "strangedual/numeric.hpp"

namespace strangedual {

// Dense integer matrix with arbitrary-precision entries, row major.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    IntMat transposed() const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator-() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    Int trace() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// One matrix row per line, comma-separated decimal integers, no header.
std::string matrix_csv(const IntMat& m);

}  // namespace strangedual
