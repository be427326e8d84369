#ifndef RIORDAN_FINITE_ORDER_HPP
#define RIORDAN_FINITE_ORDER_HPP

#include <map>
#include <optional>
#include <utility>

#include "riordan/riordan_pair.hpp"

namespace riordan {

/// Order of a series or pair, certified coefficient-wise up to verified_to.
/// For finite pairs, lcm_witness holds (ord(g0), ord(F)) with
/// order = lcm of the two parts.
struct OrderReport {
    std::optional<long> order; // nullopt = infinite
    int verified_to = 0;
    std::optional<std::pair<long, long>> lcm_witness;

    bool finite() const noexcept { return order.has_value(); }
};

/// Compositional order of F = f1 x + ... (f1 != 0). The only candidate is
/// ord(f1): F has finite order b iff b = ord(f1) is finite and the b-th
/// iterate of F is x.
OrderReport series_order(const Series& F);

/// Order of a pair (g, F): finite iff ord(g0) and ord(F) are finite and
/// g * g(F) * ... * g(F^(b-1)) is the constant g0^b; then the order is
/// lcm(ord(g0), ord(F)). Cross-checked by powering the pair.
OrderReport pair_order(const RiordanPair& p);

/// The unique series F = omega*x + sum a_k x^k of compositional order
/// n = ord(omega), with the coefficients at indices not congruent to
/// 1 mod n prescribed (absent means 0) and the congruent ones solved
/// degree by degree. Prescribing an index that is congruent to 1 mod n
/// is rejected.
Series complete_to_order(const Scalar& omega, const std::map<int, Scalar>& prescribed,
                         int precision);

/// For a finite-order pair, the unit-normalized h with
/// g = g0 * h / h(F); built as the product of powers of the b-th root of
/// g/g0 composed with the iterates of F.
Series unit_cofactor(const RiordanPair& p);

/// The averaging conjugator of a finite-order F: the series
/// (1/b) * sum_{j=1..b} omega^j F^(b-j), which satisfies S(F(x)) = omega*S(x).
Series averaging_conjugator(const Series& F);

struct NormalForm {
    RiordanPair conjugator; // (h, S)
    RiordanPair normal;     // (g0, omega*x)
};

/// Conjugates a finite-order pair to its diagonal normal form (g0, f1*x);
/// the result is verified by full Riordan arithmetic.
NormalForm normal_form(const RiordanPair& p);

/// Two finite-order pairs are conjugate iff their g0 and f1 agree.
bool is_conjugate(const RiordanPair& p, const RiordanPair& q);

} // namespace riordan

#endif
