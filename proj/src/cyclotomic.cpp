#include "riordan/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// Dense polynomials over Q, ascending coefficients. Internal helpers only.
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void poly_trim(Poly& p) {
    p.resize(static_cast<size_t>(poly_degree(p) + 1));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// Remainder and quotient of a by b; b must have nonzero leading coefficient.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    int db = poly_degree(b);
    Poly rem = a;
    poly_trim(rem);
    int dr = poly_degree(rem);
    if (dr < db) return {Poly{}, rem};
    Poly quot(static_cast<size_t>(dr - db + 1), Rational(0));
    const Rational& lead = b[static_cast<size_t>(db)];
    while (dr >= db) {
        Rational factor = rem[static_cast<size_t>(dr)] / lead;
        quot[static_cast<size_t>(dr - db)] = factor;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= factor * b[static_cast<size_t>(i)];
        dr = poly_degree(rem);
    }
    poly_trim(rem);
    return {quot, rem};
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [quot, rem] = poly_divmod(a, b);
    if (poly_degree(rem) >= 0)
        throw Error(errc::domain_error, "inexact polynomial division");
    return quot;
}

// Phi_m via x^m - 1 = prod_{d | m} Phi_d.
Poly cyclotomic_poly(long m) {
    std::vector<Poly> phi(static_cast<size_t>(m) + 1);
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        Poly num(static_cast<size_t>(d) + 1, Rational(0));
        num[0] = Rational(-1);
        num[static_cast<size_t>(d)] = Rational(1);
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = poly_div_exact(num, phi[static_cast<size_t>(e)]);
        phi[static_cast<size_t>(d)] = std::move(num);
    }
    return phi[static_cast<size_t>(m)];
}

// s*a + t*b = g (g not normalized).
void poly_xgcd(Poly a, Poly b, Poly& g, Poly& s) {
    Poly s0{Rational(1)}, s1{};
    poly_trim(a);
    poly_trim(b);
    while (poly_degree(b) >= 0) {
        auto [q, r] = poly_divmod(a, b);
        Poly qs1 = poly_mul(q, s1);
        Poly next_s = s0;
        if (next_s.size() < qs1.size()) next_s.resize(qs1.size(), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i) next_s[i] -= qs1[i];
        poly_trim(next_s);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(next_s);
    }
    g = std::move(a);
    s = std::move(s0);
}

} // namespace

FieldContext::FieldContext(long conductor) : conductor_(conductor) {
    modulus_ = cyclotomic_poly(conductor);
}

FieldRef FieldContext::make(long conductor) {
    if (conductor < 1)
        throw Error(errc::domain_error, "conductor must be a positive integer");
    return FieldRef(new FieldContext(conductor));
}

bool same_field(const FieldContext& a, const FieldContext& b) noexcept {
    return a.conductor() == b.conductor();
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!same_field(*a.field(), *b.field()))
        throw Error(errc::context_mismatch, "scalars from different field contexts");
}

// Remainder of a coefficient vector mod the monic Phi_m.
std::vector<Rational> reduce(const FieldContext& field, std::vector<Rational> c) {
    const int deg = field.degree();
    const auto& phi = field.modulus();
    for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
        Rational top = std::move(c[static_cast<size_t>(i)]);
        c.pop_back();
        if (top == 0) continue;
        for (int j = 0; j < deg; ++j)
            c[static_cast<size_t>(i - deg + j)] -= top * phi[static_cast<size_t>(j)];
    }
    c.resize(static_cast<size_t>(deg), Rational(0));
    return c;
}

} // namespace

Scalar::Scalar(FieldRef field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    coeffs_ = reduce(*field_, std::move(coeffs));
}

Scalar Scalar::zero(const FieldRef& field) {
    Scalar s(field);
    s.coeffs_.assign(static_cast<size_t>(field->degree()), Rational(0));
    return s;
}

Scalar Scalar::one(const FieldRef& field) {
    Scalar s = zero(field);
    s.coeffs_[0] = Rational(1);
    return s;
}

Scalar Scalar::of(const FieldRef& field, const Rational& value) {
    Scalar s = zero(field);
    s.coeffs_[0] = value;
    return s;
}

Scalar Scalar::of(const FieldRef& field, long value) {
    return of(field, Rational(value));
}

Scalar Scalar::zeta(const FieldRef& field) {
    std::vector<Rational> c(2, Rational(0));
    c[1] = Rational(1);
    return Scalar(field, std::move(c));
}

bool Scalar::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

bool Scalar::is_one() const noexcept {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& r) { return r == 0; });
}

bool Scalar::is_rational() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& r) { return r == 0; });
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar r = a;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    require_same_field(*this, b);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
    require_same_field(*this, b);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    const size_t deg = a.coeffs_.size();
    std::vector<Rational> c(2 * deg - 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Scalar(a.field_, std::move(c));
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(errc::division_by_zero, "inverse of zero scalar");
    Poly g, s;
    Poly a = coeffs_;
    poly_xgcd(a, field_->modulus(), g, s);
    // Phi_m is irreducible, so the gcd is a nonzero constant.
    if (poly_degree(g) != 0)
        throw Error(errc::domain_error, "modulus is not irreducible");
    const Rational& scale = g[0];
    for (auto& c : s) c /= scale;
    return Scalar(field_, std::move(s));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (b.is_zero())
        throw Error(errc::division_by_zero, "scalar division by zero");
    return a * b.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

Scalar pow(const Scalar& base, long exponent) {
    Scalar acc = Scalar::one(base.field());
    Scalar b = exponent < 0 ? base.inverse() : base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1ul
                                   : static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1ul) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

std::optional<long> scalar_order(const Scalar& a) {
    if (a.is_zero())
        throw Error(errc::zero_scalar, "order of zero scalar");
    const long m = a.field()->conductor();
    const long limit = std::lcm(2l, m);
    for (long d = 1; d <= limit; ++d) {
        if (limit % d != 0) continue;
        if (pow(a, d).is_one()) return d;
    }
    return std::nullopt;
}

bool is_single_term(const Scalar& a) noexcept {
    int nonzero = 0;
    for (const auto& c : a.coeffs())
        if (c != 0) ++nonzero;
    return nonzero == 1;
}

std::string to_string(const Scalar& a) {
    const auto& c = a.coeffs();
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        const Rational& v = c[static_cast<size_t>(i)];
        if (v == 0) continue;
        Rational mag = abs(v);
        std::string term;
        if (i == 0) {
            term = to_string(mag);
        } else {
            std::string power = i == 1 ? "w" : "w^" + std::to_string(i);
            term = mag == 1 ? power : to_string(mag) + "*" + power;
        }
        if (out.empty())
            out = (v < 0 ? "-" : "") + term;
        else
            out += (v < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace riordan
