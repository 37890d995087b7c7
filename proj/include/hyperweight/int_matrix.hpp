#pragma once

#include "arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hyperweight {

/// Dense row-major matrix of arbitrary-precision integers. The 0x0 matrix is a
/// regular value (its permanent is 1).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0))
    {
    }
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long long x : row)
                data_.emplace_back(x);
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> column(std::size_t c) const
    {
        std::vector<BigInt> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back((*this)(r, c));
        return out;
    }

    void set_column(std::size_t c, const std::vector<BigInt>& values)
    {
        if (values.size() != rows_)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, c) = values[r];
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? "," : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

} // namespace hyperweight
