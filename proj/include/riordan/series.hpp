#ifndef RIORDAN_SERIES_HPP
#define RIORDAN_SERIES_HPP

#include <string>
#include <vector>

#include "riordan/cyclotomic.hpp"

namespace riordan {

/// Truncated formal power series: coefficients of x^0..x^N at working
/// precision N. Every identity in this library means coefficient-wise
/// agreement on 0..N. Value type; all operations are pure.
class Series {
public:
    Series(FieldRef field, int precision); // zero series
    static Series zero(const FieldRef& field, int precision) { return {field, precision}; }
    static Series one(const FieldRef& field, int precision);
    static Series identity(const FieldRef& field, int precision); // the series x
    static Series constant(const Scalar& value, int precision);
    static Series from_coeffs(FieldRef field, int precision, std::vector<Scalar> coeffs);

    int precision() const noexcept { return precision_; }
    const FieldRef& field() const noexcept { return field_; }

    const Scalar& coeff(int i) const;
    void set_coeff(int i, Scalar value);

    bool is_zero() const noexcept;
    /// Index of the lowest nonzero coefficient, or -1 for the zero series.
    int valuation() const noexcept;

    Series truncated(int precision) const;

    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    FieldRef field_;
    int precision_;
    std::vector<Scalar> coeffs_; // length precision_+1
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Scalar& c, const Series& a);

/// Cauchy product truncated at the working precision.
Series mul(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

/// Multiplicative inverse of a unit series (a0 != 0), by inductive
/// coefficient solving. Leading terms 1/a0 - (a1/a0^2) x + ...
Series inv(const Series& a);

/// Integer multiplicative power; negative exponents invert first.
Series pow_int(const Series& a, long exponent);

/// outer(inner) for inner with zero constant term.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse of F = f1 x + ... with f1 != 0, by triangular
/// solving of G(F(x)) = x. Leading terms (1/f1) x - (f2/f1^3) x^2 + ...
Series comp_inverse(const Series& F);

/// n-fold compositional power of F (n-th iterate); negative n uses the
/// compositional inverse, n = 0 gives x.
Series compose_pow(const Series& F, long n);

/// The unique b-th root of a = 1 + ... with constant term 1, via the
/// binomial series (1+K)^(1/b) = sum_j C(1/b, j) K^j.
Series nth_root_unit(const Series& a, long b);
Series sqrt_unit(const Series& a);

/// ln(1 + K) = K - K^2/2 + K^3/3 - ... for a = 1 + K.
Series log_unit(const Series& a);

/// exp(K) = sum K^n / n! for K with zero constant term.
Series exp_pos(const Series& K);

/// Ascending-power text form, e.g. "1 + x + (w + 1)*x^2". Re-parseable.
std::string to_string(const Series& s);

} // namespace riordan

#endif
