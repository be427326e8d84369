#ifndef RIORDAN_CYCLOTOMIC_HPP
#define RIORDAN_CYCLOTOMIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

class FieldContext;
using FieldRef = std::shared_ptr<const FieldContext>;

/// The coefficient field Q(zeta_m), represented as Q[w]/(Phi_m(w)) where
/// Phi_m is the m-th cyclotomic polynomial. m = 1 and m = 2 degenerate to Q.
class FieldContext {
public:
    static FieldRef make(long conductor);

    long conductor() const noexcept { return conductor_; }
    int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }

    /// Phi_m, ascending coefficients, monic, length degree()+1.
    const std::vector<Rational>& modulus() const noexcept { return modulus_; }

private:
    explicit FieldContext(long conductor);

    long conductor_;
    std::vector<Rational> modulus_;
};

bool same_field(const FieldContext& a, const FieldContext& b) noexcept;

/// Element of Q(zeta_m): reduced residue in Q[w]/(Phi_m), coefficients
/// indexed 0..degree-1. Immutable value; all operations are pure.
class Scalar {
public:
    Scalar(FieldRef field, std::vector<Rational> coeffs); // reduces if oversized
    static Scalar zero(const FieldRef& field);
    static Scalar one(const FieldRef& field);
    static Scalar of(const FieldRef& field, const Rational& value);
    static Scalar of(const FieldRef& field, long value);
    /// The residue of w, i.e. a primitive m-th root of unity (1 when m = 1).
    static Scalar zeta(const FieldRef& field);

    const FieldRef& field() const noexcept { return field_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when all coefficients above index 0 vanish.
    bool is_rational() const noexcept;

    Scalar inverse() const; // throws division_by_zero on 0

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    Scalar(FieldRef field) : field_(std::move(field)) {}

    FieldRef field_;
    std::vector<Rational> coeffs_; // length degree(), reduced mod Phi_m
};

Scalar pow(const Scalar& base, long exponent);

/// Least n >= 1 with a^n = 1, or nullopt when a has infinite order.
/// The roots of unity of Q(zeta_m) form a cyclic group of order lcm(2, m),
/// so only divisors of lcm(2, m) are candidates. Throws zero_scalar on 0.
std::optional<long> scalar_order(const Scalar& a);

/// Canonical text form, e.g. "w^2 + 1/2", "-w", "3/4". Re-parseable by the
/// expression parser.
std::string to_string(const Scalar& a);

/// True when the canonical form is a single term (one nonzero coefficient).
bool is_single_term(const Scalar& a) noexcept;

} // namespace riordan

#endif
