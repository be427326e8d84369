#include "riordan/eigen.hpp"

#include "riordan/errors.hpp"

namespace riordan {

Series EigenSpec::theta_series(const FieldRef& field, int precision) const {
    if (theta.empty() || theta.front().is_zero())
        throw Error(errc::theta_leading_zero, "theta must start with a nonzero coefficient");
    if (b < 1)
        throw Error(errc::spec_period_mismatch, "period must be positive");
    if (k < 0)
        throw Error(errc::domain_error, "residue k must be non-negative");
    long top = k + static_cast<long>(theta.size() - 1) * b;
    if (top > precision)
        throw Error(errc::rows_exceed_precision,
                    "theta entries extend beyond the working precision");
    Series t(field, precision);
    for (size_t j = 0; j < theta.size(); ++j)
        t.set_coeff(static_cast<int>(k + static_cast<long>(j) * b), theta[j]);
    return t;
}

std::pair<Series, Scalar> eigenvector(const RiordanPair& p, const EigenSpec& spec) {
    OrderReport report = pair_order(p);
    if (!report.finite())
        throw Error(errc::not_finite_order, "eigenvectors require a finite-order pair");
    const long b = report.lcm_witness->second;
    if (b < 2 || spec.b != b)
        throw Error(errc::spec_period_mismatch,
                    "spec period must equal ord(F) = " + std::to_string(b) +
                        " and be at least 2");
    Series theta = spec.theta_series(p.field(), p.precision());
    Series h = unit_cofactor(p);
    Series sigma = averaging_conjugator(p.F());
    Series v = mul(h, compose(theta, sigma));
    Scalar lambda = p.g0() * pow(p.f1(), spec.k);
    return {v, lambda};
}

bool is_eigenvector(const RiordanPair& p, const Series& v, const Scalar& lambda) {
    return apply(p, v) == lambda * v;
}

IdentityRecord row_identity(const RiordanPair& p, const EigenSpec& spec, int n) {
    if (n < 0 || n > p.precision())
        throw Error(errc::rows_exceed_precision, "row index exceeds working precision");
    auto [v, lambda] = eigenvector(p, spec);
    RiordanMatrix m = expand_matrix(p, n + 1);
    Scalar lhs = Scalar::zero(p.field());
    for (int j = 0; j <= n; ++j) lhs += m.at(n, j) * v.coeff(j);
    Scalar rhs = lambda * v.coeff(n);
    return {n, lhs, rhs, lhs == rhs};
}

std::string to_string(const IdentityRecord& record) {
    return "row " + std::to_string(record.n) + ": sum_k d(" + std::to_string(record.n) +
           ",k)*v_k = " + to_string(record.lhs) + (record.equal ? " = " : " != ") +
           to_string(record.rhs) + " = lambda*v_" + std::to_string(record.n);
}

} // namespace riordan
