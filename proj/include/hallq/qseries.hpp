#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallq/rational.hpp"

namespace hallq {

// Raised when a specialization hits a zero that should have been rejected
// or avoided (non-invertible Pochhammer factor, collapsed denominator, ...).
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bound on how far a Laurent tail may extend below t^0 before we assume a
// runaway inverse and abort.
int &laurent_tail_bound();

// Truncated Laurent series in t, where t^2 = q.  A value is exact on the
// window (-inf, order()]: exponents below lo() are exactly zero, exponents
// above order() are unknown.  order() == kInfOrder marks an exact Laurent
// polynomial.  Values are immutable in spirit: all operations return new
// series and never extend the known window.
class QSeries {
public:
    static constexpr int kInfOrder = 1 << 28;

    QSeries() : lo_(kInfOrder + 1), order_(kInfOrder) {}  // exact zero

    static QSeries zero(int order = kInfOrder);
    static QSeries one(int order = kInfOrder);
    // c * t^tpow
    static QSeries monomial(const Rat &c, int tpow, int order = kInfOrder);
    static QSeries from_coeffs(std::vector<Rat> coeffs, int lo, int order);

    int lo() const { return lo_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    bool known_at(int e) const { return e <= order_; }

    // Coefficient of t^e; zero below lo(), logic error above order().
    const Rat &coeff(int e) const;

    bool is_monomial() const { return c_.size() == 1; }
    // exponent of the last stored coefficient; lo()-1 for the zero series
    int last_stored() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }
    // Valuation of a nonzero series; throws for the zero series.
    int valuation() const;

    QSeries truncated(int order) const;
    QSeries shifted(int tpow) const;     // * t^tpow
    QSeries stretched(int k) const;      // t -> t^k, k >= 1
    QSeries scaled(const Rat &c) const;  // * c
    QSeries negated() const { return scaled(Rat(-1)); }

    // Multiplicative inverse.  The series must be nonzero; for finite order
    // windows the result order shrinks by twice the valuation.  A
    // non-monomial with infinite order cannot be inverted exactly.
    QSeries inverse() const;

    QSeries pow_int(long e) const;

    friend QSeries operator+(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a, const QSeries &b);
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    QSeries &operator+=(const QSeries &b) { return *this = *this + b; }
    QSeries &operator-=(const QSeries &b) { return *this = *this - b; }
    QSeries &operator*=(const QSeries &b) { return *this = *this * b; }

    std::string str() const;  // "1 - t^2 + 3/2*t^5" style

private:
    void normalize();

    int lo_;
    int order_;
    std::vector<Rat> c_;  // coefficients for t^lo_ .. t^(lo_+size-1)
};

// min on the saturating order scale
int ord_min(int a, int b);
// saturating a+b
int ord_add(int a, int b);

// Equality on the common known window.
bool series_equal(const QSeries &a, const QSeries &b);
// First differing t-exponent with both coefficients, if any.
struct Mismatch {
    int t_exponent;
    Rat expected, got;
};
std::optional<Mismatch> series_mismatch(const QSeries &expected, const QSeries &got);

// ---- q-factorial machinery ----------------------------------------------
//
// step is the t-exponent of one q-shift: 2 for base q, 1 for base q^{1/2},
// 4 for base q^2.

// (a; q)_n = (1-a)(1-aq)...  n may be negative; negative n expands
// prod_{j=1..-n} 1/(1 - a q^{-j}) and requires every factor invertible.
QSeries poch(const QSeries &a, long n, int step = 2);
// (a; q)_inf truncated; requires positive valuation of a.
QSeries poch_inf(const QSeries &a, int order, int step = 2);

// (q; q)_k as an exact polynomial (k >= 0).
QSeries poch_q(long k);

// Gaussian binomial [m k]_q as an exact polynomial; zero when k < 0 or
// k > m.
QSeries qbinomial(long m, long k);
// [inf k]_q = 1/(q)_k truncated to the given order.
QSeries qbinomial_inf(long k, int order);

// (q^a, q^b, q^c; q^k)_inf truncated; exponents must be >= 1.
QSeries triple_product(long a, long b, long c, long k, int order);

}  // namespace hallq
