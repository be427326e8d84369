#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "riordan/cyclotomic.hpp"
#include "riordan/errors.hpp"

using namespace riordan;
using oracles::code_of;

TEST_SUITE("scalar") {

TEST_CASE("cyclotomic moduli match known polynomials") {
    auto poly = [](long m) { return FieldContext::make(m)->modulus(); };
    CHECK(poly(1) == std::vector<Rational>{-1, 1});
    CHECK(poly(2) == std::vector<Rational>{1, 1});
    CHECK(poly(3) == std::vector<Rational>{1, 1, 1});
    CHECK(poly(4) == std::vector<Rational>{1, 0, 1});
    CHECK(poly(6) == std::vector<Rational>{1, -1, 1});
    CHECK(poly(12) == std::vector<Rational>{1, 0, -1, 0, 1});
    CHECK(poly(24) == std::vector<Rational>{1, 0, 0, 0, -1, 0, 0, 0, 1});
    CHECK(FieldContext::make(1)->degree() == 1);
    CHECK(FieldContext::make(24)->degree() == 8);
}

TEST_CASE("defining relation: zeta_4 squared is -1") {
    auto field = FieldContext::make(4);
    Scalar z = Scalar::zeta(field);
    CHECK(z * z == -Scalar::one(field));
}

TEST_CASE("plain rational arithmetic at conductor 1") {
    auto field = FieldContext::make(1);
    Scalar a = Scalar::of(field, rat(3, 4));
    Scalar b = Scalar::of(field, rat(1, 4));
    CHECK(a + b == Scalar::one(field));
    CHECK(to_string(a / b) == "3");
}

TEST_CASE("inverse of 1 + zeta_3 verified by multiplication") {
    auto field = FieldContext::make(3);
    Scalar a = Scalar::one(field) + Scalar::zeta(field);
    CHECK(a * a.inverse() == Scalar::one(field));
    // closed form: -zeta_3
    CHECK(a.inverse() == -Scalar::zeta(field));
}

TEST_CASE("division guards") {
    auto field = FieldContext::make(3);
    Scalar one = Scalar::one(field);
    CHECK(code_of([&] { (void)(one / Scalar::zero(field)); }) == errc::division_by_zero);
    auto other = FieldContext::make(4);
    CHECK(code_of([&] { (void)(one + Scalar::one(other)); }) == errc::context_mismatch);
}

TEST_CASE("orders of simple scalars") {
    auto field = FieldContext::make(6);
    CHECK(scalar_order(Scalar::one(field)) == 1);
    CHECK(scalar_order(-Scalar::one(field)) == 2);
    CHECK(scalar_order(Scalar::zeta(field)) == 6);
    CHECK_FALSE(scalar_order(Scalar::of(field, 2)).has_value());
    CHECK(code_of([&] { (void)scalar_order(Scalar::zero(field)); }) == errc::zero_scalar);
}

TEST_CASE("zeta_m has order exactly m for every conductor up to 24") {
    for (long m = 1; m <= 24; ++m) {
        auto field = FieldContext::make(m);
        CHECK(scalar_order(Scalar::zeta(field)) == m);
    }
}

TEST_CASE("field degree is the totient of the conductor") {
    auto totient = [](long m) {
        int count = 0;
        for (long k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) ++count;
        return count;
    };
    for (long m = 1; m <= 24; ++m)
        CHECK(FieldContext::make(m)->degree() == (m == 1 ? 1 : totient(m)));
}

TEST_CASE("order n implies a^n = 1 and no proper divisor works") {
    auto field = FieldContext::make(12);
    oracles::Rng rng(7);
    Scalar z = Scalar::zeta(field);
    for (long e = 0; e < 12; ++e) {
        Scalar a = pow(z, e) * (rng.integer(0, 1) ? Scalar::one(field) : -Scalar::one(field));
        auto n = scalar_order(a);
        REQUIRE(n.has_value());
        CHECK(pow(a, *n).is_one());
        for (long d = 1; d < *n; ++d)
            if (*n % d == 0) CHECK_FALSE(pow(a, d).is_one());
    }
}

TEST_CASE("field axioms on random scalars") {
    for (long m : {1l, 3l, 8l, 12l}) {
        auto field = FieldContext::make(m);
        oracles::Rng rng(100 + static_cast<uint64_t>(m));
        for (int t = 0; t < 25; ++t) {
            Scalar a = rng.scalar(field), b = rng.scalar(field), c = rng.scalar(field);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(field));
        }
    }
}

TEST_CASE("canonical text form") {
    auto field = FieldContext::make(8); // degree 4
    Scalar z = Scalar::zeta(field);
    CHECK(to_string(Scalar::zero(field)) == "0");
    CHECK(to_string(Scalar::one(field)) == "1");
    CHECK(to_string(-Scalar::one(field)) == "-1");
    CHECK(to_string(z) == "w");
    CHECK(to_string(z * z + Scalar::of(field, rat(1, 2))) == "w^2 + 1/2");
    CHECK(to_string(Scalar::of(field, rat(-2, 3)) * z) == "-2/3*w");
    CHECK(to_string(pow(z, 3) - z) == "w^3 - w");
    CHECK(is_single_term(z));
    CHECK_FALSE(is_single_term(z + Scalar::one(field)));
}

TEST_CASE("rational parsing and printing") {
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-6/8") == rat(-3, 4));
    CHECK(rat_from_string("5") == rat(5));
    CHECK(to_string(rat(-6, 8)) == "-3/4");
    CHECK_THROWS_AS((void)rat_from_string("1/0"), Error);
    CHECK_THROWS_AS((void)rat_from_string("2/3/4"), Error);
    CHECK_THROWS_AS((void)rat_from_string(""), Error);
}

}
