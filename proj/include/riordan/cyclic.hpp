#ifndef RIORDAN_CYCLIC_HPP
#define RIORDAN_CYCLIC_HPP

#include <span>

#include "riordan/series.hpp"

namespace riordan {

/// Evaluation of the anti-symmetric two-variable series
/// (1/2) ln(ghat(x)/ghat(z)), ghat = g/g0, at substituted univariate
/// arguments A, B with zero constant term.
Series antisymmetric_eval(const Series& g, const Series& A, const Series& B);

/// Evaluator for the k-cyclic symmetric series
/// (1/k) ln( g(x_1)^(k-1) / (g(x_2) ... g(x_k)) ), restricted to g with
/// g0 = 1 so each logarithm is defined after substitution.
class CyclicEvaluator {
public:
    CyclicEvaluator(Series g, int arity);

    int arity() const noexcept { return arity_; }
    const Series& g() const noexcept { return g_; }

    /// Evaluates at `arity` univariate arguments with zero constant term.
    Series eval(std::span<const Series> args) const;

private:
    Series g_;
    int arity_;
};

/// The unique F making (g, F) an involution, for bi-invertible g
/// (g0 != 0, g1 != 0) with g0 = +-1: F = Gbar(-g0 * G / g) where
/// G = g - g0 and Gbar is its compositional inverse.
Series involution_partner(const Series& g);

} // namespace riordan

#endif
