#include "riordan/series.hpp"

#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

void require_compatible(const Series& a, const Series& b) {
    if (!same_field(*a.field(), *b.field()) || a.precision() != b.precision())
        throw Error(errc::context_mismatch, "series with different precision or field context");
}

} // namespace

Series::Series(FieldRef field, int precision) : field_(std::move(field)), precision_(precision) {
    if (precision < 0)
        throw Error(errc::domain_error, "precision must be non-negative");
    coeffs_.assign(static_cast<size_t>(precision) + 1, Scalar::zero(field_));
}

Series Series::one(const FieldRef& field, int precision) {
    Series s(field, precision);
    s.coeffs_[0] = Scalar::one(field);
    return s;
}

Series Series::identity(const FieldRef& field, int precision) {
    Series s(field, precision);
    if (precision < 1)
        throw Error(errc::domain_error, "precision too small for the series x");
    s.coeffs_[1] = Scalar::one(field);
    return s;
}

Series Series::constant(const Scalar& value, int precision) {
    Series s(value.field(), precision);
    s.coeffs_[0] = value;
    return s;
}

Series Series::from_coeffs(FieldRef field, int precision, std::vector<Scalar> coeffs) {
    Series s(field, precision);
    if (coeffs.size() > static_cast<size_t>(precision) + 1)
        throw Error(errc::rows_exceed_precision, "more coefficients than precision allows");
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!same_field(*coeffs[i].field(), *field))
            throw Error(errc::context_mismatch, "coefficient from a different field context");
        s.coeffs_[i] = std::move(coeffs[i]);
    }
    return s;
}

const Scalar& Series::coeff(int i) const {
    if (i < 0 || i > precision_)
        throw Error(errc::rows_exceed_precision, "coefficient index outside precision");
    return coeffs_[static_cast<size_t>(i)];
}

void Series::set_coeff(int i, Scalar value) {
    if (i < 0 || i > precision_)
        throw Error(errc::rows_exceed_precision, "coefficient index outside precision");
    if (!same_field(*value.field(), *field_))
        throw Error(errc::context_mismatch, "coefficient from a different field context");
    coeffs_[static_cast<size_t>(i)] = std::move(value);
}

bool Series::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int Series::valuation() const noexcept {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Series Series::truncated(int precision) const {
    if (precision > precision_)
        throw Error(errc::rows_exceed_precision, "cannot extend a series by truncation");
    Series s(field_, precision);
    for (int i = 0; i <= precision; ++i) s.coeffs_[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i)];
    return s;
}

bool operator==(const Series& a, const Series& b) {
    require_compatible(a, b);
    return a.coeffs_ == b.coeffs_;
}

Series operator+(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (int i = 0; i <= r.precision(); ++i)
        r.set_coeff(i, r.coeff(i) + b.coeff(i));
    return r;
}

Series operator-(const Series& a, const Series& b) {
    require_compatible(a, b);
    Series r = a;
    for (int i = 0; i <= r.precision(); ++i)
        r.set_coeff(i, r.coeff(i) - b.coeff(i));
    return r;
}

Series operator-(const Series& a) {
    Series r = a;
    for (int i = 0; i <= r.precision(); ++i) r.set_coeff(i, -r.coeff(i));
    return r;
}

Series operator*(const Scalar& c, const Series& a) {
    Series r = a;
    for (int i = 0; i <= r.precision(); ++i) r.set_coeff(i, c * r.coeff(i));
    return r;
}

Series mul(const Series& a, const Series& b) {
    require_compatible(a, b);
    const int n = a.precision();
    if (a.is_zero() || b.is_zero()) return Series(a.field(), n);
    std::vector<Scalar> acc(static_cast<size_t>(n) + 1, Scalar::zero(a.field()));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            acc[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Series::from_coeffs(a.field(), n, std::move(acc));
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series inv(const Series& a) {
    if (a.coeff(0).is_zero())
        throw Error(errc::not_a_unit, "multiplicative inverse needs a nonzero constant term");
    const int n = a.precision();
    Series r(a.field(), n);
    Scalar lead = a.coeff(0).inverse();
    r.set_coeff(0, lead);
    for (int k = 1; k <= n; ++k) {
        Scalar acc = Scalar::zero(a.field());
        for (int j = 1; j <= k; ++j) {
            if (a.coeff(j).is_zero() || r.coeff(k - j).is_zero()) continue;
            acc += a.coeff(j) * r.coeff(k - j);
        }
        r.set_coeff(k, -(lead * acc));
    }
    return r;
}

Series pow_int(const Series& a, long exponent) {
    Series base = exponent < 0 ? inv(a) : a;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1ul
                                   : static_cast<unsigned long>(exponent);
    Series acc = Series::one(a.field(), a.precision());
    while (e) {
        if (e & 1ul) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Series compose(const Series& outer, const Series& inner) {
    require_compatible(outer, inner);
    if (!inner.coeff(0).is_zero())
        throw Error(errc::inner_not_positive_order,
                    "composition needs an inner series with zero constant term");
    const int n = outer.precision();
    // Horner: r <- r*inner + outer_k, from the top coefficient down.
    Series r = Series::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        if (r.is_zero()) {
            if (!outer.coeff(k).is_zero()) r.set_coeff(0, outer.coeff(k));
            continue;
        }
        r = mul(r, inner);
        r.set_coeff(0, outer.coeff(k)); // r*inner has zero constant term
    }
    return r;
}

Series comp_inverse(const Series& F) {
    if (!F.coeff(0).is_zero() || F.coeff(1).is_zero())
        throw Error(errc::not_invertible,
                    "compositional inverse needs zero constant term and nonzero linear term");
    const int n = F.precision();
    // Solve sum_j G_j F^j = x degree by degree; the pivot at degree k is f1^k.
    std::vector<Series> powers;
    powers.reserve(static_cast<size_t>(n) + 1);
    powers.push_back(Series::one(F.field(), n));
    for (int j = 1; j <= n; ++j) powers.push_back(mul(powers.back(), F));
    Series G(F.field(), n);
    for (int k = 1; k <= n; ++k) {
        Scalar acc = Scalar::zero(F.field());
        for (int j = 1; j < k; ++j) {
            if (G.coeff(j).is_zero()) continue;
            acc += G.coeff(j) * powers[static_cast<size_t>(j)].coeff(k);
        }
        Scalar target = k == 1 ? Scalar::one(F.field()) : Scalar::zero(F.field());
        G.set_coeff(k, (target - acc) / powers[static_cast<size_t>(k)].coeff(k));
    }
    return G;
}

Series compose_pow(const Series& F, long n) {
    if (!F.coeff(0).is_zero() || F.coeff(1).is_zero())
        throw Error(errc::not_invertible,
                    "compositional power needs zero constant term and nonzero linear term");
    Series base = n < 0 ? comp_inverse(F) : F;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1ul
                            : static_cast<unsigned long>(n);
    Series acc = Series::identity(F.field(), F.precision());
    while (e) {
        if (e & 1ul) acc = compose(acc, base);
        if (e >>= 1) base = compose(base, base);
    }
    return acc;
}

Series nth_root_unit(const Series& a, long b) {
    if (!a.coeff(0).is_one())
        throw Error(errc::not_unit_normalized, "root needs constant term exactly 1");
    if (b < 1)
        throw Error(errc::domain_error, "root index must be a positive integer");
    const int n = a.precision();
    Series K = a - Series::one(a.field(), n);
    // Binomial coefficients C(1/b, j), built incrementally.
    Series binom(a.field(), n);
    Rational e(1, b);
    Rational c(1);
    binom.set_coeff(0, Scalar::one(a.field()));
    for (int j = 1; j <= n; ++j) {
        c *= (e - Rational(j - 1)) / Rational(j);
        binom.set_coeff(j, Scalar::of(a.field(), c));
    }
    return compose(binom, K);
}

Series sqrt_unit(const Series& a) { return nth_root_unit(a, 2); }

Series log_unit(const Series& a) {
    if (!a.coeff(0).is_one())
        throw Error(errc::not_unit_normalized, "logarithm needs constant term exactly 1");
    const int n = a.precision();
    Series K = a - Series::one(a.field(), n);
    Series logs(a.field(), n);
    for (int j = 1; j <= n; ++j)
        logs.set_coeff(j, Scalar::of(a.field(), rat(j % 2 == 1 ? 1 : -1, j)));
    return compose(logs, K);
}

Series exp_pos(const Series& K) {
    if (!K.coeff(0).is_zero())
        throw Error(errc::not_positive_order, "exponential needs zero constant term");
    const int n = K.precision();
    Series exps(K.field(), n);
    Rational c(1);
    exps.set_coeff(0, Scalar::one(K.field()));
    for (int j = 1; j <= n; ++j) {
        c /= Rational(j);
        exps.set_coeff(j, Scalar::of(K.field(), c));
    }
    return compose(exps, K);
}

std::string to_string(const Series& s) {
    std::string out;
    for (int i = 0; i <= s.precision(); ++i) {
        const Scalar& c = s.coeff(i);
        if (c.is_zero()) continue;
        std::string cs = to_string(c);
        bool negative = false;
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            std::string power = i == 1 ? "x" : "x^" + std::to_string(i);
            if (cs == "1") {
                term = power;
            } else if (cs == "-1") {
                negative = true;
                term = power;
            } else if (is_single_term(c)) {
                if (cs[0] == '-') {
                    negative = true;
                    cs = cs.substr(1);
                }
                term = cs + "*" + power;
            } else {
                term = "(" + cs + ")*" + power;
            }
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term;
        } else if (negative) {
            out += " - " + term;
        } else if (i > 0) {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace riordan
