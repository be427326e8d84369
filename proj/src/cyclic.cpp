#include "riordan/cyclic.hpp"

#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

void require_substitutable(const Series& arg) {
    if (!arg.coeff(0).is_zero())
        throw Error(errc::substitution_not_positive_order,
                    "substituted arguments must have zero constant term");
}

} // namespace

Series antisymmetric_eval(const Series& g, const Series& A, const Series& B) {
    if (g.coeff(0).is_zero())
        throw Error(errc::not_a_unit, "g must have a nonzero constant term");
    require_substitutable(A);
    require_substitutable(B);
    Series ghat = g.coeff(0).inverse() * g;
    Series diff = log_unit(compose(ghat, A)) - log_unit(compose(ghat, B));
    return Scalar::of(g.field(), rat(1, 2)) * diff;
}

CyclicEvaluator::CyclicEvaluator(Series g, int arity) : g_(std::move(g)), arity_(arity) {
    if (arity_ < 2)
        throw Error(errc::arity_mismatch, "cyclic evaluator needs arity at least 2");
    if (!g_.coeff(0).is_one())
        throw Error(errc::not_unit_normalized,
                    "cyclic evaluator is defined for g with constant term 1");
}

Series CyclicEvaluator::eval(std::span<const Series> args) const {
    if (static_cast<int>(args.size()) != arity_)
        throw Error(errc::arity_mismatch,
                    "expected " + std::to_string(arity_) + " arguments, got " +
                        std::to_string(args.size()));
    for (const Series& arg : args) require_substitutable(arg);
    Series acc = Scalar::of(g_.field(), arity_ - 1) * log_unit(compose(g_, args[0]));
    for (int i = 1; i < arity_; ++i)
        acc = acc - log_unit(compose(g_, args[static_cast<size_t>(i)]));
    return Scalar::of(g_.field(), rat(1, arity_)) * acc;
}

Series involution_partner(const Series& g) {
    if (g.coeff(0).is_zero() || g.coeff(1).is_zero())
        throw Error(errc::not_bi_invertible,
                    "needs g0 != 0 and g1 != 0 (bi-invertible input)");
    const Scalar& g0 = g.coeff(0);
    Scalar minus_one = -Scalar::one(g.field());
    if (!g0.is_one() && g0 != minus_one)
        throw Error(errc::bad_leading_scalar, "involutions require g0 = 1 or g0 = -1");
    Series G = g - Series::constant(g0, g.precision());
    Series gbar = comp_inverse(G);
    Series argument = mul((-g0) * G, inv(g));
    return compose(gbar, argument);
}

} // namespace riordan
