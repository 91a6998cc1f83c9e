#include "latmat/matrix.hpp"

#include <ostream>
#include <sstream>

namespace latmat {
namespace {

void require_same_shape(const Mat& x, const Mat& y) {
    if (x.kind() != y.kind()) fail(Errc::UsageError, "matrix ring kind mismatch");
    if (x.rows() != y.rows() || x.cols() != y.cols())
        fail(Errc::UsageError, "matrix shape mismatch");
}

}  // namespace

Mat::Mat(RingKind kind, std::size_t rows, std::size_t cols)
    : kind_(kind), rows_(rows), cols_(cols),
      e_(rows * cols, FieldElem::zero(kind)) {
    if (rows == 0 || cols == 0) fail(Errc::UsageError, "matrix dimensions must be positive");
}

Mat Mat::identity(RingKind kind, std::size_t n) {
    Mat m(kind, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(kind);
    return m;
}

Mat Mat::unit_matrix(RingKind kind, std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) fail(Errc::UsageError, "matrix unit index out of range");
    Mat m(kind, n, n);
    m.at(i, j) = FieldElem::one(kind);
    return m;
}

Mat Mat::from_rows(RingKind kind, const std::vector<std::vector<FieldElem>>& rows) {
    if (rows.empty() || rows[0].empty())
        fail(Errc::UsageError, "matrix dimensions must be positive");
    Mat m(kind, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            fail(Errc::UsageError, "ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

const FieldElem& Mat::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(Errc::UsageError, "matrix index out of range");
    return at(i, j);
}

void Mat::set(std::size_t i, std::size_t j, FieldElem value) {
    if (i >= rows_ || j >= cols_) fail(Errc::UsageError, "matrix index out of range");
    if (value.kind() != kind_) fail(Errc::UsageError, "matrix entry ring kind mismatch");
    at(i, j) = std::move(value);
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Mat operator+(const Mat& x, const Mat& y) {
    require_same_shape(x, y);
    Mat r = x;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + y.e_[k];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    return x + (-y);
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.kind() != y.kind()) fail(Errc::UsageError, "matrix ring kind mismatch");
    if (x.cols() != y.rows()) fail(Errc::UsageError, "matrix product shape mismatch");
    Mat r(x.kind(), x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

bool operator==(const Mat& x, const Mat& y) {
    if (x.kind() != y.kind() || x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (std::size_t k = 0; k < x.e_.size(); ++k)
        if (x.e_[k] != y.e_[k]) return false;
    return true;
}

Mat Mat::scaled(const FieldElem& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

Mat Mat::hadamard(const Mat& other) const {
    require_same_shape(*this, other);
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * other.e_[k];
    return r;
}

Mat Mat::transpose() const {
    Mat r(kind_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::entrywise_max(const Mat& other) const {
    require_same_shape(*this, other);
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (r.e_[k] < other.e_[k]) r.e_[k] = other.e_[k];
    return r;
}

Mat Mat::entrywise_min(const Mat& other) const {
    require_same_shape(*this, other);
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (other.e_[k] < r.e_[k]) r.e_[k] = other.e_[k];
    return r;
}

bool Mat::entrywise_nonneg() const {
    for (const auto& x : e_)
        if (x.sign() < 0) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::over_ring() const {
    for (const auto& x : e_)
        if (!x.is_in_ring()) return false;
    return true;
}

FieldElem Mat::minor_det(std::size_t skip_row, std::size_t skip_col) const {
    Mat m(kind_, rows_ - 1, cols_ - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == skip_col) continue;
            m.at(r, c) = at(i, j);
            ++c;
        }
        ++r;
    }
    return m.det();
}

FieldElem Mat::det() const {
    if (!is_square()) fail(Errc::UsageError, "determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 1) return at(0, 0);
    if (n == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n == 3) {
        FieldElem d = FieldElem::zero(kind_);
        d = d + at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
        d = d - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
        d = d + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        return d;
    }
    return det_bareiss();
}

// Bareiss fraction-free elimination on the denominator-cleared matrix;
// every division below is exact in the ring.
FieldElem Mat::det_bareiss() const {
    auto [scale, cleared] = clear_denominators(*this);
    const std::size_t n = rows_;
    Mat w = cleared;
    FieldElem prev = FieldElem::one(kind_);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k).is_zero()) ++p;
            if (p == n) return FieldElem::zero(kind_);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    FieldElem d = w.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    FieldElem s(scale);
    for (std::size_t i = 0; i < n; ++i) d = d / s;
    return d;
}

Mat Mat::adjugate() const {
    if (!is_square()) fail(Errc::UsageError, "adjugate of a non-square matrix");
    const std::size_t n = rows_;
    Mat adj(kind_, n, n);
    if (n == 1) {
        adj.at(0, 0) = FieldElem::one(kind_);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElem c = minor_det(i, j);
            if ((i + j) % 2 == 1) c = -c;
            adj.at(j, i) = c;   // transposed cofactor
        }
    return adj;
}

Mat Mat::inverse() const {
    FieldElem d = det();
    if (d.is_zero()) fail(Errc::NotInvertible, "matrix is singular over the fraction field");
    return adjugate().scaled(d.inverse());
}

Mat Mat::inverse_unit() const {
    if (!over_ring()) fail(Errc::UsageError, "inverse_unit requires a matrix over the ring");
    FieldElem d = det();
    if (!d.is_ring_unit())
        fail(Errc::NotAUnit, "determinant " + d.str() + " is not a unit of " + ring_name(kind_));
    return adjugate().scaled(FieldElem(d.as_ring().inverse_unit()));
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::pair<RingElem, Mat> clear_denominators(const Mat& m) {
    RingElem k = RingElem::one(m.kind());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            k = lcm(k, m(i, j).den());
    Mat scaled = m.scaled(FieldElem(k));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!scaled(i, j).is_in_ring())
                fail(Errc::InternalCheckFailed, "denominator clearing left a fraction");
    return {k, scaled};
}

Mat solve_linear(const Mat& a, const Mat& b) {
    if (!a.is_square()) fail(Errc::UsageError, "solve_linear requires a square system");
    if (a.kind() != b.kind()) fail(Errc::UsageError, "matrix ring kind mismatch");
    if (a.rows() != b.rows()) fail(Errc::UsageError, "system shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t w = b.cols();
    // augmented [A | B], Gauss-Jordan with first-nonzero pivoting
    Mat aug(a.kind(), n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a(i, j));
        for (std::size_t j = 0; j < w; ++j) aug.set(i, n + j, b(i, j));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug(piv, col).is_zero()) ++piv;
        if (piv == n) fail(Errc::NotInvertible, "matrix is singular over the fraction field");
        if (piv != col)
            for (std::size_t j = 0; j < n + w; ++j) {
                FieldElem t = aug(col, j);
                aug.set(col, j, aug(piv, j));
                aug.set(piv, j, t);
            }
        FieldElem inv = aug(col, col).inverse();
        for (std::size_t j = 0; j < n + w; ++j) aug.set(col, j, aug(col, j) * inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug(i, col).is_zero()) continue;
            FieldElem f = aug(i, col);
            for (std::size_t j = 0; j < n + w; ++j)
                aug.set(i, j, aug(i, j) - f * aug(col, j));
        }
    }
    Mat x(a.kind(), n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) x.set(i, j, aug(i, n + j));
    return x;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.to_string(); }

}  // namespace latmat
