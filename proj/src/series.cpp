#include "anho/series.hpp"

#include <cmath>

namespace anho {

BetaPolynomial::BetaPolynomial(double constant) {
    if (constant != 0.0) coeffs_.push_back(constant);
}

BetaPolynomial BetaPolynomial::from_coefficients(std::vector<double> coeffs) {
    BetaPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void BetaPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double BetaPolynomial::coefficient(int k) const {
    ANHO_REQUIRE(k >= 0, "polynomial coefficient index must be nonnegative");
    if (static_cast<std::size_t>(k) >= coeffs_.size()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double BetaPolynomial::operator()(double beta) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * beta + coeffs_[i];
    return acc;
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

BetaPolynomial& BetaPolynomial::operator*=(double s) {
    if (s == 0.0) {
        coeffs_.clear();
        return *this;
    }
    for (double& c : coeffs_) c *= s;
    return *this;
}

BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return BetaPolynomial();
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return BetaPolynomial::from_coefficients(std::move(out));
}

BetaPolynomial BetaPolynomial::shifted(int j) const {
    ANHO_REQUIRE(j >= 0, "beta shift must be nonnegative");
    if (is_zero() || j == 0) return *this;
    std::vector<double> out(coeffs_.size() + static_cast<std::size_t>(j), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(j)] = coeffs_[i];
    return from_coefficients(std::move(out));
}

CoefficientSeries::CoefficientSeries(int truncation_order, double constant_term)
    : constant_(constant_term) {
    ANHO_REQUIRE(truncation_order >= 1, "truncation order must be >= 1");
    terms_.resize(static_cast<std::size_t>(truncation_order));
}

const BetaPolynomial& CoefficientSeries::term(int n) const {
    ANHO_REQUIRE(n >= 1 && n <= order(), "series term index out of range");
    return terms_[static_cast<std::size_t>(n - 1)];
}

void CoefficientSeries::set_term(int n, BetaPolynomial p) {
    ANHO_REQUIRE(n >= 1 && n <= order(), "series term index out of range");
    terms_[static_cast<std::size_t>(n - 1)] = std::move(p);
}

double CoefficientSeries::evaluate(double beta, double y0) const {
    // Horner in y0 over the polynomial values.
    double acc = 0.0;
    for (int n = order(); n >= 1; --n) acc = acc * y0 + term(n)(beta);
    return constant_ + y0 * acc;
}

namespace {
void require_same_order(const CoefficientSeries& a, const CoefficientSeries& b) {
    ANHO_REQUIRE(a.order() == b.order(), "series truncation orders must match");
}
} // namespace

CoefficientSeries series_add(const CoefficientSeries& a, const CoefficientSeries& b) {
    require_same_order(a, b);
    CoefficientSeries out(a.order(), a.constant_term() + b.constant_term());
    for (int n = 1; n <= a.order(); ++n) out.set_term(n, a.term(n) + b.term(n));
    return out;
}

CoefficientSeries series_sub(const CoefficientSeries& a, const CoefficientSeries& b) {
    return series_add(a, series_scale(b, -1.0));
}

CoefficientSeries series_scale(const CoefficientSeries& a, double s) {
    CoefficientSeries out(a.order(), a.constant_term() * s);
    for (int n = 1; n <= a.order(); ++n) out.set_term(n, a.term(n) * s);
    return out;
}

CoefficientSeries series_mul(const CoefficientSeries& a, const CoefficientSeries& b) {
    require_same_order(a, b);
    const int N = a.order();
    CoefficientSeries out(N, a.constant_term() * b.constant_term());
    for (int n = 1; n <= N; ++n) {
        BetaPolynomial t = a.term(n) * b.constant_term();
        t += b.term(n) * a.constant_term();
        for (int k = 1; k < n; ++k) t += a.term(k) * b.term(n - k);
        out.set_term(n, std::move(t));
    }
    return out;
}

CoefficientSeries series_exp(const CoefficientSeries& a) {
    ANHO_REQUIRE(a.constant_term() == 0.0, "series_exp requires zero constant term");
    const int N = a.order();
    // n*E_n = sum_{k=1}^{n} k * A_k * E_{n-k}, E_0 = 1.
    std::vector<BetaPolynomial> e(static_cast<std::size_t>(N) + 1);
    e[0] = BetaPolynomial(1.0);
    for (int n = 1; n <= N; ++n) {
        BetaPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += (a.term(k) * e[static_cast<std::size_t>(n - k)]) * static_cast<double>(k);
        e[static_cast<std::size_t>(n)] = acc * (1.0 / n);
    }
    CoefficientSeries out(N, 1.0);
    for (int n = 1; n <= N; ++n) out.set_term(n, std::move(e[static_cast<std::size_t>(n)]));
    return out;
}

CoefficientSeries series_log1p(const CoefficientSeries& a) {
    ANHO_REQUIRE(a.constant_term() == 0.0, "series_log1p requires zero constant term");
    const int N = a.order();
    // n*L_n = n*A_n - sum_{k=1}^{n-1} k * L_k * A_{n-k}.
    std::vector<BetaPolynomial> l(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        BetaPolynomial acc = a.term(n) * static_cast<double>(n);
        for (int k = 1; k < n; ++k) acc += (l[static_cast<std::size_t>(k)] * a.term(n - k)) * static_cast<double>(-k);
        l[static_cast<std::size_t>(n)] = acc * (1.0 / n);
    }
    CoefficientSeries out(N, 0.0);
    for (int n = 1; n <= N; ++n) out.set_term(n, std::move(l[static_cast<std::size_t>(n)]));
    return out;
}

CoefficientSeries series_recip(const CoefficientSeries& a) {
    ANHO_REQUIRE(a.constant_term() != 0.0, "series_recip requires nonzero constant term");
    const int N = a.order();
    const double inv0 = 1.0 / a.constant_term();
    std::vector<BetaPolynomial> r(static_cast<std::size_t>(N) + 1);
    r[0] = BetaPolynomial(inv0);
    for (int n = 1; n <= N; ++n) {
        BetaPolynomial acc;
        for (int k = 1; k <= n; ++k) acc += a.term(k) * r[static_cast<std::size_t>(n - k)];
        r[static_cast<std::size_t>(n)] = acc * (-inv0);
    }
    CoefficientSeries out(N, inv0);
    for (int n = 1; n <= N; ++n) out.set_term(n, std::move(r[static_cast<std::size_t>(n)]));
    return out;
}

CoefficientSeries series_pow(const CoefficientSeries& a, double r) {
    ANHO_REQUIRE(a.constant_term() == 0.0, "series_pow requires zero constant term");
    const int N = a.order();
    // J.C.P. Miller: n*P_n = sum_{k=1}^{n} ((r+1)k - n) * A_k * P_{n-k}, P_0 = 1.
    std::vector<BetaPolynomial> p(static_cast<std::size_t>(N) + 1);
    p[0] = BetaPolynomial(1.0);
    for (int n = 1; n <= N; ++n) {
        BetaPolynomial acc;
        for (int k = 1; k <= n; ++k)
            acc += (a.term(k) * p[static_cast<std::size_t>(n - k)]) * ((r + 1.0) * k - n);
        p[static_cast<std::size_t>(n)] = acc * (1.0 / n);
    }
    CoefficientSeries out(N, 1.0);
    for (int n = 1; n <= N; ++n) out.set_term(n, std::move(p[static_cast<std::size_t>(n)]));
    return out;
}

CoefficientSeries series_mul_beta(const CoefficientSeries& a) {
    ANHO_REQUIRE(a.constant_term() == 0.0, "series_mul_beta requires zero constant term");
    CoefficientSeries out(a.order(), 0.0);
    for (int n = 1; n <= a.order(); ++n) out.set_term(n, a.term(n).shifted(1));
    return out;
}

CoefficientSeries series_shift(const CoefficientSeries& a, int j) {
    ANHO_REQUIRE(j >= 0, "series shift must be nonnegative");
    const int N = a.order();
    if (j == 0) return a;
    CoefficientSeries out(N, 0.0);
    if (j <= N && a.constant_term() != 0.0) out.set_term(j, BetaPolynomial(a.constant_term()));
    for (int n = 1; n + j <= N; ++n) out.set_term(n + j, a.term(n));
    return out;
}

double extract_coefficient(const CoefficientSeries& s, int n, int k) {
    ANHO_REQUIRE(n >= 0 && n <= s.order(), "y0 order out of range");
    ANHO_REQUIRE(k >= 0, "beta power out of range");
    if (n == 0) {
        ANHO_REQUIRE(k == 0, "constant term has no beta dependence");
        return s.constant_term();
    }
    return s.term(n).coefficient(k);
}

} // namespace anho
