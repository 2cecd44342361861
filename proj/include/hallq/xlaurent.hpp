#pragma once

#include <map>
#include <string>
#include <vector>

#include "hallq/qseries.hpp"

namespace hallq {

// Laurent polynomial in x_1..x_n with QSeries coefficients.  Exponents are
// stored doubled so half-integer powers (from half-partitions and alpha_n/2
// specialisations) live on the same grid.
class XLaurent {
public:
    using Expo = std::vector<int>;  // doubled exponents

    XLaurent() = default;
    explicit XLaurent(size_t nvars) : n_(nvars) {}

    static XLaurent zero(size_t n) { return XLaurent(n); }
    static XLaurent one(size_t n, int order = QSeries::kInfOrder);
    static XLaurent constant(size_t n, QSeries c);
    static XLaurent monomial(size_t n, Expo e2, QSeries c);
    // x_i^(pow2/2)
    static XLaurent var(size_t n, size_t i, int pow2 = 2, int order = QSeries::kInfOrder);

    size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, QSeries> &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    const QSeries &coeff(const Expo &e2) const;
    void add_term(const Expo &e2, const QSeries &c);

    XLaurent operator+(const XLaurent &o) const;
    XLaurent operator-(const XLaurent &o) const;
    XLaurent operator*(const XLaurent &o) const;
    XLaurent &operator+=(const XLaurent &o) { return *this = *this + o; }
    XLaurent &operator-=(const XLaurent &o) { return *this = *this - o; }
    XLaurent &operator*=(const XLaurent &o) { return *this = *this * o; }

    XLaurent negated() const;
    XLaurent scaled(const QSeries &c) const;
    XLaurent mul_monomial(const Expo &e2, const QSeries &c) const;

    // x_i -> t^s * x_i for each i; s_i * e2_i must stay even
    XLaurent shift_vars(const std::vector<int> &tshift) const;
    // relabel variables: result variable perm[i] receives x_i
    XLaurent permuted(const std::vector<size_t> &perm) const;
    XLaurent truncated(int order) const;

    // smallest t-valuation over all coefficients; kInfOrder+1 when zero
    int min_tval() const;
    // truncation order of the value as a whole (min over every coefficient
    // that ever entered it, including cancelled ones)
    int min_order() const { return order_; }

    // substitute x_i = c_i * t^(tpow_i); integer exponents only
    struct Point {
        Rat c;
        int tpow = 0;
    };
    QSeries eval(const std::vector<Point> &pts) const;

    // exact division by (c * t^tpow * x^mu2 - 1); throws on remainder
    XLaurent div_binomial(const Rat &c, int tpow, const Expo &mu2) const;
    // exact division by a monomial
    XLaurent div_monomial(const Rat &c, int tpow, const Expo &e2) const;
    // inverse of 1 + (positive t-valuation terms), truncated to order
    XLaurent invert_unit(int order) const;

    std::string str() const;

private:
    size_t n_ = 0;
    int order_ = QSeries::kInfOrder;
    std::map<Expo, QSeries> terms_;
};

bool xl_equal(const XLaurent &a, const XLaurent &b);
struct XlMismatch {
    XLaurent::Expo e2;
    Mismatch coeff;
};
std::optional<XlMismatch> xl_mismatch(const XLaurent &expected, const XLaurent &got);

// divide f by (x_a - x_b), exactly
XLaurent div_var_diff(const XLaurent &f, size_t a, size_t b);

}  // namespace hallq
