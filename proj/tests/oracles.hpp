// Test-only helpers: independent oracles and random generators. Everything
// here stays off the library's implementation paths it is used to check.
#ifndef RIORDAN_TESTS_ORACLES_HPP
#define RIORDAN_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "riordan/cyclotomic.hpp"
#include "riordan/errors.hpp"
#include "riordan/series.hpp"

namespace oracles {

/// Runs fn, which must throw a riordan::Error, and returns its code.
inline riordan::errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const riordan::Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an Error");
}

using riordan::FieldRef;
using riordan::Int;
using riordan::Rational;
using riordan::Scalar;
using riordan::Series;

/// Exact binomial coefficient via GMP.
inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// C(2k, k) / 4^k as an exact rational.
inline Rational central_binomial_over_4k(unsigned long k) {
    Int four_k(1);
    mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), 2 * k);
    return riordan::rat(binom(2 * k, k), four_k);
}

/// Composition by explicit power accumulation (not Horner): sum_k outer_k * inner^k.
inline Series naive_compose(const Series& outer, const Series& inner) {
    const int n = outer.precision();
    Series acc(outer.field(), n);
    Series power = Series::one(outer.field(), n);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) power = mul(power, inner);
        if (outer.coeff(k).is_zero()) continue;
        acc = acc + outer.coeff(k) * power;
    }
    return acc;
}

inline Series naive_compose_pow(const Series& F, long n) {
    Series acc = Series::identity(F.field(), F.precision());
    for (long i = 0; i < n; ++i) acc = naive_compose(F, acc);
    return acc;
}

/// Brute-force order-n completion: solves each coefficient a_k (k = nj+1)
/// from two trial evaluations of [x^k] F^(n), checking linearity with a
/// third. Independent of the closed-form multiplier the library uses.
inline Series brute_force_complete(const Scalar& omega, const std::map<int, Scalar>& prescribed,
                                   int precision) {
    auto n_opt = scalar_order(omega);
    if (!n_opt) throw std::logic_error("omega must be a root of unity");
    const long n = *n_opt;
    const FieldRef& field = omega.field();
    Series F(field, precision);
    F.set_coeff(1, omega);
    for (int k = 2; k <= precision; ++k) {
        if (k % n != 1) {
            if (auto it = prescribed.find(k); it != prescribed.end()) F.set_coeff(k, it->second);
            continue;
        }
        Series head = F.truncated(k);
        auto residue = [&](long trial) {
            head.set_coeff(k, Scalar::of(field, trial));
            return naive_compose_pow(head, n).coeff(k);
        };
        Scalar e0 = residue(0), e1 = residue(1), e2 = residue(2);
        Scalar slope = e1 - e0;
        if (slope.is_zero()) throw std::logic_error("degenerate completion pivot");
        if (e2 - e1 != slope) throw std::logic_error("dependence is not linear");
        F.set_coeff(k, -(e0 / slope));
    }
    return F;
}

/// Unique involution partner of a bi-invertible g, solved from
/// g(F(x)) = 1/g(x) degree by degree (pivot g1). Uses naive composition.
inline Series brute_force_involution_partner(const Series& g) {
    const int n = g.precision();
    Series target = inv(g);
    Series F(g.field(), n);
    for (int d = 1; d <= n; ++d) {
        Scalar err = naive_compose(g.truncated(d), F.truncated(d)).coeff(d);
        F.set_coeff(d, (target.coeff(d) - err) / g.coeff(1));
    }
    return F;
}

/// Deterministic random exact values.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine_);
    }

    Rational rational(bool allow_zero = true) {
        long p = integer(-3, 3);
        if (!allow_zero)
            while (p == 0) p = integer(-3, 3);
        return riordan::rat(p, integer(1, 3));
    }

    Scalar scalar(const FieldRef& field, bool allow_zero = true) {
        Scalar v = Scalar::of(field, rational(allow_zero));
        if (field->degree() > 1 && integer(0, 1) == 1)
            v = v * pow(Scalar::zeta(field), integer(0, field->degree() - 1));
        return v;
    }

    /// Random series; constant term forced to the given value.
    Series series_with_constant(const FieldRef& field, int precision, const Scalar& c0,
                                int sparsity = 2) {
        Series s(field, precision);
        s.set_coeff(0, c0);
        for (int i = 1; i <= precision; ++i)
            if (integer(0, sparsity) == 0) s.set_coeff(i, scalar(field));
        return s;
    }

    Series unit_series(const FieldRef& field, int precision) {
        return series_with_constant(field, precision, scalar(field, false));
    }

    Series unit_normalized(const FieldRef& field, int precision) {
        return series_with_constant(field, precision, Scalar::one(field));
    }

    /// Zero constant term, random nonzero linear term.
    Series composable(const FieldRef& field, int precision) {
        Series s = series_with_constant(field, precision, Scalar::zero(field));
        s.set_coeff(1, scalar(field, false));
        return s;
    }

    /// Zero constant term, linear term free.
    Series positive(const FieldRef& field, int precision) {
        return series_with_constant(field, precision, Scalar::zero(field));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace oracles

#endif
