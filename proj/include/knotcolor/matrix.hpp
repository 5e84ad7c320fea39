#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotcolor/errors.hpp"

namespace knotcolor {

// Dense matrix of arbitrary-precision integers, row major. All invariant
// computations in this library go through exact arithmetic; there is no
// floating point anywhere.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Convenience for literals in tests and examples.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpz_class& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix without_row_col(std::size_t i, std::size_t j) const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;

    // Aligned, human-readable rendering; one matrix row per line.
    std::string to_string() const;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range for " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

// Vector of residues modulo n, every entry reduced into 0..n-1.
struct ModVector {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> entries;

    bool operator==(const ModVector& o) const {
        return modulus == o.modulus && entries == o.entries;
    }
    bool is_zero() const {
        for (auto e : entries)
            if (e != 0) return false;
        return true;
    }
};

}  // namespace knotcolor
