#pragma once

// Formal-series substrate: polynomials in the inverse temperature beta, and
// truncated power series in y0 = exp(-beta*wbar) whose coefficients are such
// polynomials. Everything is plain double arithmetic; truncation order is
// fixed per series and all operations stay within it.

#include <cstddef>
#include <vector>

#include "anho/errors.hpp"

namespace anho {

/// Dense polynomial in beta. Index k of the coefficient vector holds the
/// beta^k coefficient. The zero polynomial stores an empty vector; otherwise
/// the highest stored coefficient is nonzero.
class BetaPolynomial {
public:
    BetaPolynomial() = default;
    explicit BetaPolynomial(double constant);
    static BetaPolynomial from_coefficients(std::vector<double> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    double coefficient(int k) const;
    double operator()(double beta) const;

    BetaPolynomial& operator+=(const BetaPolynomial& other);
    BetaPolynomial& operator*=(double s);

    friend BetaPolynomial operator+(BetaPolynomial a, const BetaPolynomial& b) { a += b; return a; }
    friend BetaPolynomial operator*(BetaPolynomial a, double s) { a *= s; return a; }
    friend BetaPolynomial operator*(double s, BetaPolynomial a) { a *= s; return a; }
    friend BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b);

    /// Multiply by beta^j (shifts all coefficients up by j).
    BetaPolynomial shifted(int j) const;

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Truncated series  c0 + sum_{n=1}^{N} term_n(beta) * y0^n.
/// The y0^0 coefficient is a plain number; in every quantity handled here it
/// is 0 or a constant, never a polynomial in beta.
class CoefficientSeries {
public:
    CoefficientSeries(int truncation_order, double constant_term);
    static CoefficientSeries zero(int order) { return CoefficientSeries(order, 0.0); }
    static CoefficientSeries one(int order) { return CoefficientSeries(order, 1.0); }

    int order() const { return static_cast<int>(terms_.size()); }
    double constant_term() const { return constant_; }
    void set_constant_term(double c) { constant_ = c; }
    const BetaPolynomial& term(int n) const;
    void set_term(int n, BetaPolynomial p);

    /// Value at a concrete (beta, y0); used by the consistency tests.
    double evaluate(double beta, double y0) const;

private:
    double constant_ = 0.0;
    std::vector<BetaPolynomial> terms_;
};

CoefficientSeries series_add(const CoefficientSeries& a, const CoefficientSeries& b);
CoefficientSeries series_sub(const CoefficientSeries& a, const CoefficientSeries& b);
CoefficientSeries series_scale(const CoefficientSeries& a, double s);
CoefficientSeries series_mul(const CoefficientSeries& a, const CoefficientSeries& b);

/// exp(a) for a series with zero constant term.
CoefficientSeries series_exp(const CoefficientSeries& a);
/// log(1 + a) for a series with zero constant term.
CoefficientSeries series_log1p(const CoefficientSeries& a);
/// 1/a for a series with nonzero constant term.
CoefficientSeries series_recip(const CoefficientSeries& a);
/// (1 + a)^r for a series with zero constant term.
CoefficientSeries series_pow(const CoefficientSeries& a, double r);

/// Multiply by beta (every term polynomial shifts one degree up).
/// Requires zero constant term, which would otherwise leave the y0^0 slot.
CoefficientSeries series_mul_beta(const CoefficientSeries& a);

/// Multiply by y0^j: term n moves to n + j, orders beyond N fall off.
CoefficientSeries series_shift(const CoefficientSeries& a, int j);

/// beta^k coefficient of the y0^n term; (n,k) = (0,0) reads the constant.
double extract_coefficient(const CoefficientSeries& s, int n, int k);

} // namespace anho
