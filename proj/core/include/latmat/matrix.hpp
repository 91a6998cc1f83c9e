#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latmat/ring.hpp"

namespace latmat {

// Dense matrix over the fraction field K of the chosen ring. Values are
// cheap to copy for the sizes this library targets; every algebraic
// operation returns a fresh matrix and never mutates its operands.
class Mat {
public:
    Mat() : Mat(RingKind::Integers, 1, 1) {}   // placeholder for aggregate members
    Mat(RingKind kind, std::size_t rows, std::size_t cols);   // zero-filled

    static Mat identity(RingKind kind, std::size_t n);
    // matrix unit E_ij (single 1 at 0-based position (i, j))
    static Mat unit_matrix(RingKind kind, std::size_t n, std::size_t i, std::size_t j);
    static Mat from_rows(RingKind kind, const std::vector<std::vector<FieldElem>>& rows);

    RingKind kind() const noexcept { return kind_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const FieldElem& operator()(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, FieldElem value);

    Mat operator-() const;
    friend Mat operator+(const Mat& x, const Mat& y);
    friend Mat operator-(const Mat& x, const Mat& y);
    friend Mat operator*(const Mat& x, const Mat& y);
    friend bool operator==(const Mat& x, const Mat& y);
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat scaled(const FieldElem& c) const;
    Mat hadamard(const Mat& other) const;      // entrywise product
    Mat transpose() const;
    Mat entrywise_max(const Mat& other) const;
    Mat entrywise_min(const Mat& other) const;

    bool entrywise_nonneg() const;
    bool is_zero() const;
    bool over_ring() const;                    // every entry lies in R

    FieldElem det() const;                     // exact; cofactors for n <= 3,
                                               // fraction-free elimination beyond
    Mat adjugate() const;                      // adj(M) with M * adj(M) = det(M) * I
    Mat inverse() const;                       // over K; NotInvertible when singular
    Mat inverse_unit() const;                  // over R; NotAUnit unless det is a ring unit

    std::string to_string() const;

private:
    const FieldElem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    FieldElem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    FieldElem minor_det(std::size_t skip_row, std::size_t skip_col) const;
    FieldElem det_bareiss() const;

    RingKind kind_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> e_;
};

// Least k in R (up to units, sign-normalized) with k * m over the ring;
// returns (k, k * m).
std::pair<RingElem, Mat> clear_denominators(const Mat& m);

// Solves A X = B exactly by Gauss-Jordan elimination over K.
// A must be square and nonsingular (NotInvertible otherwise).
Mat solve_linear(const Mat& a, const Mat& b);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace latmat
