#ifndef RIORDAN_EIGEN_HPP
#define RIORDAN_EIGEN_HPP

#include <string>
#include <vector>

#include "riordan/finite_order.hpp"

namespace riordan {

/// Free data of an eigenvector of a finite-order pair: residue k, period
/// b = ord(F), and the coefficients theta_{k+jb} of
/// theta(x) = sum_j theta_{k+jb} x^(k+jb), with theta_k != 0.
/// The implied eigenvalue is g0 * f1^k.
struct EigenSpec {
    int k = 0;
    long b = 0;
    std::vector<Scalar> theta; // entry j is theta_{k+jb}

    /// theta as a series at the given precision; entries must fit below it.
    Series theta_series(const FieldRef& field, int precision) const;
};

/// The eigenvector v = h * theta(S) of p, where h is the unit cofactor and
/// S the averaging conjugator, together with its eigenvalue g0 * f1^k.
/// Requires spec.b = ord(F) >= 2.
std::pair<Series, Scalar> eigenvector(const RiordanPair& p, const EigenSpec& spec);

/// True iff the pair maps v to lambda * v (product form; no division).
bool is_eigenvector(const RiordanPair& p, const Series& v, const Scalar& lambda);

/// Row-n dot product of the matrix of p against one of its eigenvectors:
/// sum_k d_{n,k} v_k = lambda * v_n.
struct IdentityRecord {
    int n;
    Scalar lhs;
    Scalar rhs;
    bool equal;
};

IdentityRecord row_identity(const RiordanPair& p, const EigenSpec& spec, int n);

/// Human-readable rendering, e.g. "sum_k d(7,k)*v_k = 429/2048 = lambda*v_7".
std::string to_string(const IdentityRecord& record);

} // namespace riordan

#endif
