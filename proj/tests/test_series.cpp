#include <doctest.h>

#include "oracles.hpp"
#include "riordan/errors.hpp"
#include "riordan/series.hpp"

using namespace riordan;
using oracles::code_of;

namespace {

constexpr int N = 16;

Series geometric(const FieldRef& field, int precision) {
    Series s(field, precision);
    for (int i = 0; i <= precision; ++i) s.set_coeff(i, Scalar::one(field));
    return s; // 1/(1-x)
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("multiplication basics") {
    auto field = FieldContext::make(1);
    Series one = Series::one(field, N);
    Series x = Series::identity(field, N);
    Series a = one + x;          // 1+x
    Series b = one - x;          // 1-x
    Series product = mul(a, b);  // 1 - x^2
    CHECK(product.coeff(0).is_one());
    CHECK(product.coeff(1).is_zero());
    CHECK(product.coeff(2) == -Scalar::one(field));
    for (int i = 3; i <= N; ++i) CHECK(product.coeff(i).is_zero());

    CHECK(mul(geometric(field, N), b) == one);

    // direct convolution by hand: (1+2x)(3+x) = 3 + 7x + 2x^2
    Series u = one + Scalar::of(field, 2) * x;
    Series v = Scalar::of(field, 3) * one + x;
    Series w = mul(u, v);
    CHECK(w.coeff(0) == Scalar::of(field, 3));
    CHECK(w.coeff(1) == Scalar::of(field, 7));
    CHECK(w.coeff(2) == Scalar::of(field, 2));
}

TEST_CASE("inverse leading terms and geometric series") {
    auto field = FieldContext::make(1);
    Series one = Series::one(field, N);
    Series x = Series::identity(field, N);
    CHECK(inv(one - x) == geometric(field, N));

    // 1/(g0 + g1 x) starts 1/g0 - (g1/g0^2) x
    oracles::Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        Scalar g0 = rng.scalar(field, false), g1 = rng.scalar(field, false);
        Series s = Series::constant(g0, N) + g1 * x;
        Series r = inv(s);
        CHECK(r.coeff(0) == g0.inverse());
        CHECK(r.coeff(1) == -(g1 / (g0 * g0)));
        CHECK(mul(s, r) == one);
    }
    CHECK(code_of([&] { (void)inv(x); }) == errc::not_a_unit);
}

TEST_CASE("round trips for inv on random unit series") {
    for (long m : {1l, 4l}) {
        auto field = FieldContext::make(m);
        oracles::Rng rng(23 + static_cast<uint64_t>(m));
        for (int t = 0; t < 20; ++t) {
            Series u = rng.unit_series(field, N);
            CHECK(mul(u, inv(u)) == Series::one(field, N));
        }
    }
}

TEST_CASE("composition examples") {
    auto field = FieldContext::make(1);
    Series x = Series::identity(field, N);
    Series outer = mul(x, x);       // x^2
    Series inner = x + mul(x, x);   // x + x^2
    Series c = compose(outer, inner); // x^2 + 2x^3 + x^4
    CHECK(c.coeff(2) == Scalar::of(field, 1));
    CHECK(c.coeff(3) == Scalar::of(field, 2));
    CHECK(c.coeff(4) == Scalar::of(field, 1));
    CHECK(c.coeff(5).is_zero());

    CHECK(code_of([&] { (void)compose(outer, Series::one(field, N)); }) ==
          errc::inner_not_positive_order);
}

TEST_CASE("quadratic coefficient of a generic composition") {
    auto field = FieldContext::make(3);
    oracles::Rng rng(31);
    for (int t = 0; t < 8; ++t) {
        Series f = rng.positive(field, N);
        Series g = rng.positive(field, N);
        Series c = compose(f, g);
        // [x^1] = f1 g1, [x^2] = f1 g2 + f2 g1^2
        CHECK(c.coeff(1) == f.coeff(1) * g.coeff(1));
        CHECK(c.coeff(2) == f.coeff(1) * g.coeff(2) + f.coeff(2) * g.coeff(1) * g.coeff(1));
        CHECK(c == oracles::naive_compose(f, g));
    }
}

TEST_CASE("compositional inverse") {
    auto field = FieldContext::make(1);
    Series x = Series::identity(field, N);
    Series F = mul(x, geometric(field, N)); // x/(1-x)
    Series G = comp_inverse(F);
    // x/(1+x) = x - x^2 + x^3 - ...
    for (int i = 1; i <= N; ++i)
        CHECK(G.coeff(i) == Scalar::of(field, i % 2 == 1 ? 1 : -1));
    CHECK(compose(F, G) == x);
    CHECK(compose(G, F) == x);

    CHECK(code_of([&] { (void)comp_inverse(mul(x, x)); }) == errc::not_invertible);
}

TEST_CASE("second coefficient of a generic compositional inverse") {
    auto field = FieldContext::make(4);
    oracles::Rng rng(41);
    for (int t = 0; t < 8; ++t) {
        Series F = rng.composable(field, N);
        Series G = comp_inverse(F);
        Scalar f1 = F.coeff(1), f2 = F.coeff(2);
        CHECK(G.coeff(1) == f1.inverse());
        CHECK(G.coeff(2) == -(f2 / (f1 * f1 * f1)));
        CHECK(compose(F, G) == Series::identity(field, N));
        CHECK(compose(G, F) == Series::identity(field, N));
    }
}

TEST_CASE("compositional powers") {
    auto field = FieldContext::make(6);
    Series x = Series::identity(field, N);
    Series F = -mul(x, inv(Series::one(field, N) + x)); // -x/(1+x)
    CHECK(compose_pow(F, 2) == x);
    CHECK(compose_pow(F, 0) == x);

    Scalar w = Scalar::zeta(field);
    Series wx = w * x;
    CHECK(compose_pow(wx, 3) == pow(w, 3) * x);
    CHECK(compose_pow(wx, -1) == w.inverse() * x);

    oracles::Rng rng(5);
    Series G = rng.composable(field, 10);
    for (long a : {-2l, 0l, 1l, 3l})
        for (long b : {-1l, 2l})
            CHECK(compose_pow(G, a + b) == compose(compose_pow(G, a), compose_pow(G, b)));
    // linear coefficient of the n-th iterate is f1^n
    CHECK(compose_pow(G, 5).coeff(1) == pow(G.coeff(1), 5));
}

TEST_CASE("unit roots") {
    auto field = FieldContext::make(1);
    Series one = Series::one(field, N);
    Series x = Series::identity(field, N);
    CHECK(nth_root_unit(mul(one + x, one + x), 2) == one + x);

    // (1-x)^(-1/2) has coefficients C(2k,k)/4^k
    Series r = nth_root_unit(inv(one - x), 2);
    for (int k = 0; k <= N; ++k)
        CHECK(r.coeff(k) ==
              Scalar::of(field, oracles::central_binomial_over_4k(static_cast<unsigned long>(k))));

    CHECK(code_of([&] { (void)nth_root_unit(Scalar::of(field, 2) * one, 2); }) ==
          errc::not_unit_normalized);
}

TEST_CASE("random unit roots and perturbation uniqueness") {
    for (long m : {1l, 3l}) {
        auto field = FieldContext::make(m);
        oracles::Rng rng(59 + static_cast<uint64_t>(m));
        for (long b : {2l, 3l, 5l}) {
            Series a = rng.unit_normalized(field, N);
            Series r = nth_root_unit(a, b);
            CHECK(r.coeff(0).is_one());
            CHECK(pow_int(r, b) == a);
            // perturbing any coefficient of the root breaks the power identity
            for (int j : {1, 3, 7}) {
                Series bad = r;
                bad.set_coeff(j, r.coeff(j) + Scalar::one(field));
                CHECK(pow_int(bad, b) != a);
            }
        }
    }
}

TEST_CASE("log and exp") {
    auto field = FieldContext::make(1);
    Series one = Series::one(field, N);
    Series x = Series::identity(field, N);

    CHECK(log_unit(one) == Series::zero(field, N));
    Series l = log_unit(one + x); // x - x^2/2 + x^3/3 - ...
    for (int k = 1; k <= N; ++k)
        CHECK(l.coeff(k) == Scalar::of(field, rat(k % 2 == 1 ? 1 : -1, k)));

    CHECK(code_of([&] { (void)log_unit(x); }) == errc::not_unit_normalized);
    CHECK(code_of([&] { (void)exp_pos(one); }) == errc::not_positive_order);

    oracles::Rng rng(71);
    for (int t = 0; t < 20; ++t) {
        Series K = rng.positive(field, N);
        CHECK(log_unit(exp_pos(K)) == K);
        Series a = rng.unit_normalized(field, N);
        CHECK(exp_pos(log_unit(a)) == a);
        Series b = rng.unit_normalized(field, N);
        CHECK(log_unit(mul(a, b)) == log_unit(a) + log_unit(b));
    }
}

TEST_CASE("group axioms to the working precision") {
    auto field = FieldContext::make(3);
    oracles::Rng rng(83);
    Series one = Series::one(field, N);
    Series x = Series::identity(field, N);
    for (int t = 0; t < 10; ++t) {
        Series a = rng.unit_series(field, N), b = rng.unit_series(field, N),
               c = rng.unit_series(field, N);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, one) == a);
        Series F = rng.composable(field, N), G = rng.composable(field, N),
               H = rng.composable(field, N);
        CHECK(compose(compose(F, G), H) == compose(F, compose(G, H)));
        CHECK(compose(F, x) == F);
        CHECK(compose(x, F) == F);
    }
}

TEST_CASE("zero series compare equal regardless of provenance") {
    auto field = FieldContext::make(4);
    oracles::Rng rng(97);
    Series a = rng.unit_series(field, N);
    CHECK(a - a == Series::zero(field, N));
    CHECK((a - a).is_zero());
    CHECK(mul(a - a, a) == Series::zero(field, N));
}

TEST_CASE("precision and context guards") {
    auto f1 = FieldContext::make(1);
    auto f3 = FieldContext::make(3);
    Series a(f1, 8), b(f1, 9), c(f3, 8);
    CHECK(code_of([&] { (void)(a + b); }) == errc::context_mismatch);
    CHECK(code_of([&] { (void)mul(a, c); }) == errc::context_mismatch);
    CHECK(a.truncated(4).precision() == 4);
    CHECK(code_of([&] { (void)a.truncated(9); }) == errc::rows_exceed_precision);
}

TEST_CASE("series text form") {
    auto field = FieldContext::make(6);
    Series x = Series::identity(field, 4);
    Series one = Series::one(field, 4);
    Scalar w = Scalar::zeta(field);
    CHECK(to_string(Series::zero(field, 4)) == "0");
    CHECK(to_string(one - x) == "1 - x");
    CHECK(to_string((w + Scalar::one(field)) * mul(x, x)) == "(w + 1)*x^2");
    CHECK(to_string(w * x) == "w*x");
    Series s = -one + Scalar::of(field, rat(1, 2)) * mul(x, x);
    CHECK(to_string(s) == "-1 + 1/2*x^2");
}

}
