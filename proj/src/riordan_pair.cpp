#include "riordan/riordan_pair.hpp"

#include <algorithm>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

RiordanPair::RiordanPair(Series g, Series F) : g_(std::move(g)), F_(std::move(F)) {
    if (!same_field(*g_.field(), *F_.field()) || g_.precision() != F_.precision())
        throw Error(errc::context_mismatch, "pair parts with different precision or context");
    if (g_.coeff(0).is_zero())
        throw Error(errc::invalid_pair, "g must have a nonzero constant term");
    if (!F_.coeff(0).is_zero())
        throw Error(errc::invalid_pair, "F must have a zero constant term");
    if (F_.coeff(1).is_zero())
        throw Error(errc::invalid_pair, "F must have a nonzero linear term");
}

RiordanPair RiordanPair::identity(const FieldRef& field, int precision) {
    return {Series::one(field, precision), Series::identity(field, precision)};
}

RiordanPair rmul(const RiordanPair& p, const RiordanPair& q) {
    return {mul(p.g(), compose(q.g(), p.F())), compose(q.F(), p.F())};
}

RiordanPair rinv(const RiordanPair& p) {
    Series fbar = comp_inverse(p.F());
    return {inv(compose(p.g(), fbar)), fbar};
}

RiordanPair rpow(const RiordanPair& p, long n) {
    RiordanPair base = n < 0 ? rinv(p) : p;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1ul
                            : static_cast<unsigned long>(n);
    RiordanPair acc = RiordanPair::identity(p.field(), p.precision());
    while (e) {
        if (e & 1ul) acc = rmul(acc, base);
        if (e >>= 1) base = rmul(base, base);
    }
    return acc;
}

RiordanMatrix::RiordanMatrix(int rows, std::vector<std::vector<Scalar>> entries)
    : rows_(rows), zero_(Scalar::zero(entries.at(0).at(0).field())), entries_(std::move(entries)) {}

const Scalar& RiordanMatrix::at(int n, int j) const {
    const auto& row = entries_.at(static_cast<size_t>(n));
    if (j < 0 || j >= rows_)
        throw Error(errc::rows_exceed_precision, "matrix column index out of range");
    if (j > n) return zero_; // structurally zero above the diagonal
    return row.at(static_cast<size_t>(j));
}

RiordanMatrix expand_matrix(const RiordanPair& p, int rows) {
    if (rows < 1 || rows > p.precision() + 1)
        throw Error(errc::rows_exceed_precision, "row count exceeds working precision");
    std::vector<std::vector<Scalar>> entries;
    entries.reserve(static_cast<size_t>(rows));
    for (int n = 0; n < rows; ++n)
        entries.emplace_back(static_cast<size_t>(n) + 1, Scalar::zero(p.field()));
    Series column = p.g(); // generator of column j, g * F^j
    for (int j = 0; j < rows; ++j) {
        for (int n = j; n < rows; ++n)
            entries[static_cast<size_t>(n)][static_cast<size_t>(j)] = column.coeff(n);
        if (j + 1 < rows) column = mul(column, p.F());
    }
    return {rows, std::move(entries)};
}

Series apply(const RiordanPair& p, const Series& h) {
    return mul(p.g(), compose(h, p.F()));
}

std::string to_string(const RiordanMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width(static_cast<size_t>(m.rows()), 0);
    for (int n = 0; n < m.rows(); ++n) {
        std::vector<std::string> row;
        for (int j = 0; j <= n; ++j) {
            row.push_back(to_string(m.at(n, j)));
            width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], row.back().size());
        }
        cells.push_back(std::move(row));
    }
    std::string out;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            std::string cell = row[j];
            out += std::string(width[j] - cell.size(), ' ') + cell;
            if (j + 1 < row.size()) out += "  ";
        }
        out += '\n';
    }
    return out;
}

} // namespace riordan
