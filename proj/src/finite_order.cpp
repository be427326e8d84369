#include "riordan/finite_order.hpp"

#include <numeric>
#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

OrderReport series_order(const Series& F) {
    if (!F.coeff(0).is_zero() || F.coeff(1).is_zero())
        throw Error(errc::not_composable,
                    "order is defined for F with zero constant term and nonzero linear term");
    OrderReport report;
    report.verified_to = F.precision();
    auto b = scalar_order(F.coeff(1));
    if (!b) return report;
    if (compose_pow(F, *b) == Series::identity(F.field(), F.precision())) report.order = b;
    return report;
}

OrderReport pair_order(const RiordanPair& p) {
    OrderReport report;
    report.verified_to = p.precision();
    auto a = scalar_order(p.g0());
    if (!a) return report;
    OrderReport frep = series_order(p.F());
    if (!frep.finite()) return report;
    const long b = *frep.order;

    // finite order iff g * g(F) * ... * g(F^(b-1)) collapses to the constant g0^b
    Series product = p.g();
    Series iterate = p.F();
    for (long i = 1; i < b; ++i) {
        product = mul(product, compose(p.g(), iterate));
        if (i + 1 < b) iterate = compose(p.F(), iterate);
    }
    if (product != Series::constant(pow(p.g0(), b), p.precision())) return report;

    const long n = std::lcm(*a, b);
    if (rpow(p, n) != RiordanPair::identity(p.field(), p.precision()))
        throw std::logic_error("finite-order cross-check failed"); // unreachable
    report.order = n;
    report.lcm_witness = {*a, b};
    return report;
}

Series complete_to_order(const Scalar& omega, const std::map<int, Scalar>& prescribed,
                         int precision) {
    auto n_opt = scalar_order(omega);
    if (!n_opt || *n_opt < 2)
        throw Error(errc::not_a_root_of_unity,
                    "linear coefficient must be a root of unity of order at least 2");
    const long n = *n_opt;
    const FieldRef& field = omega.field();
    for (const auto& [index, value] : prescribed) {
        if (index < 2)
            throw Error(errc::bad_residue, "prescribed indices start at 2");
        if (index > precision)
            throw Error(errc::rows_exceed_precision,
                        "prescribed index exceeds working precision");
        if (index % n == 1)
            throw Error(errc::bad_residue,
                        "index " + std::to_string(index) +
                            " is congruent to 1 mod " + std::to_string(n) +
                            " and is determined by the order condition");
        if (!same_field(*value.field(), *field))
            throw Error(errc::context_mismatch, "prescribed coefficient from another context");
    }

    Series F(field, precision);
    F.set_coeff(1, omega);
    // At degree k = nj+1 the unknown a_k enters [x^k] F^(n) linearly with
    // multiplier n*omega^(n-1); everything below degree k is already fixed.
    const Scalar multiplier = Scalar::of(field, n) * pow(omega, n - 1);
    for (int k = 2; k <= precision; ++k) {
        if (k % n == 1) {
            Series head = F.truncated(k);
            Scalar error = compose_pow(head, n).coeff(k);
            F.set_coeff(k, -(error / multiplier));
        } else if (auto it = prescribed.find(k); it != prescribed.end()) {
            F.set_coeff(k, it->second);
        }
    }
    if (compose_pow(F, n) != Series::identity(field, precision))
        throw std::logic_error("order completion failed to verify"); // unreachable
    return F;
}

namespace {

long require_finite_pair(const RiordanPair& p) {
    OrderReport report = pair_order(p);
    if (!report.finite())
        throw Error(errc::not_finite_order, "pair does not have finite order");
    return report.lcm_witness->second; // b = ord(F)
}

} // namespace

Series unit_cofactor(const RiordanPair& p) {
    const long b = require_finite_pair(p);
    if (b == 1) return Series::one(p.field(), p.precision());
    Series ghat = p.g0().inverse() * p.g();
    Series root = nth_root_unit(ghat, b);

    // h = root^(b-1) * root(F)^(b-2) * ... * root(F^(b-2))
    Series h = Series::one(p.field(), p.precision());
    Series iterate = Series::identity(p.field(), p.precision());
    for (long i = 0; i <= b - 2; ++i) {
        h = mul(h, pow_int(compose(root, iterate), b - 1 - i));
        if (i < b - 2) iterate = compose(p.F(), iterate);
    }
    return h;
}

Series averaging_conjugator(const Series& F) {
    OrderReport report = series_order(F);
    if (!report.finite())
        throw Error(errc::not_finite_order, "series does not have finite compositional order");
    const long b = *report.order;
    const Scalar& omega = F.coeff(1);

    Series acc(F.field(), F.precision());
    Series iterate = Series::identity(F.field(), F.precision()); // F^(0)
    for (long i = 0; i < b; ++i) {
        acc = acc + pow(omega, b - i) * iterate; // term j = b - i
        if (i + 1 < b) iterate = compose(F, iterate);
    }
    return Scalar::of(F.field(), rat(1, b)) * acc;
}

NormalForm normal_form(const RiordanPair& p) {
    RiordanPair conjugator(unit_cofactor(p), averaging_conjugator(p.F()));
    RiordanPair normal(Series::constant(p.g0(), p.precision()),
                       p.f1() * Series::identity(p.field(), p.precision()));
    if (rmul(rmul(rinv(conjugator), p), conjugator) != normal)
        throw std::logic_error("normal form verification failed"); // unreachable
    return {conjugator, normal};
}

bool is_conjugate(const RiordanPair& p, const RiordanPair& q) {
    require_finite_pair(p);
    require_finite_pair(q);
    return p.g0() == q.g0() && p.f1() == q.f1();
}

} // namespace riordan
