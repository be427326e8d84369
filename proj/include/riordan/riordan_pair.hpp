#ifndef RIORDAN_RIORDAN_PAIR_HPP
#define RIORDAN_RIORDAN_PAIR_HPP

#include <string>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// Element (g, F) of the Riordan group: g0 != 0, F = f1 x + ... with f1 != 0.
/// The group law is (g, F)(h, K) = (g * h(F), K(F)).
class RiordanPair {
public:
    RiordanPair(Series g, Series F);
    static RiordanPair identity(const FieldRef& field, int precision);

    const Series& g() const noexcept { return g_; }
    const Series& F() const noexcept { return F_; }
    const Scalar& g0() const { return g_.coeff(0); }
    const Scalar& f1() const { return F_.coeff(1); }
    int precision() const noexcept { return g_.precision(); }
    const FieldRef& field() const noexcept { return g_.field(); }

    friend bool operator==(const RiordanPair& a, const RiordanPair& b) {
        return a.g_ == b.g_ && a.F_ == b.F_;
    }
    friend bool operator!=(const RiordanPair& a, const RiordanPair& b) { return !(a == b); }

private:
    Series g_;
    Series F_;
};

/// Lower-triangular matrix snapshot d[n][j] = [x^n] g * F^j, 0 <= j <= n < rows.
class RiordanMatrix {
public:
    RiordanMatrix(int rows, std::vector<std::vector<Scalar>> entries);

    int rows() const noexcept { return rows_; }
    /// d_{n,j}; entries with j > n are zero by triangularity.
    const Scalar& at(int n, int j) const;

    friend bool operator==(const RiordanMatrix& a, const RiordanMatrix& b) {
        return a.entries_ == b.entries_;
    }

private:
    int rows_;
    Scalar zero_;
    std::vector<std::vector<Scalar>> entries_; // row n has n+1 entries
};

RiordanPair rmul(const RiordanPair& p, const RiordanPair& q);
RiordanPair rinv(const RiordanPair& p);
RiordanPair rpow(const RiordanPair& p, long n);

/// First `rows` rows of the matrix of p; rows <= precision+1.
RiordanMatrix expand_matrix(const RiordanPair& p, int rows);

/// Fundamental theorem action: the image of the column vector with
/// generating function h is g * h(F).
Series apply(const RiordanPair& p, const Series& h);

std::string to_string(const RiordanMatrix& m); // aligned plain text

} // namespace riordan

#endif
