#include "hallq/qseries.hpp"
#include <limits>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hallq {

int &laurent_tail_bound() {
    static int bound = 200;
    return bound;
}

int ord_min(int a, int b) { return a < b ? a : b; }

int ord_add(int a, int b) {
    if (a >= QSeries::kInfOrder || b >= QSeries::kInfOrder) return QSeries::kInfOrder;
    long s = static_cast<long>(a) + b;
    if (s >= QSeries::kInfOrder) return QSeries::kInfOrder;
    return static_cast<int>(s);
}

void QSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        lo_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) lo_ = ord_add(order_, 1);
    if (!c_.empty() && lo_ < -laurent_tail_bound())
        throw std::runtime_error("laurent tail bound exceeded at t^" + std::to_string(lo_));
}

QSeries QSeries::zero(int order) {
    QSeries s;
    s.order_ = order;
    s.lo_ = ord_add(order, 1);
    return s;
}

QSeries QSeries::one(int order) { return monomial(Rat(1), 0, order); }

QSeries QSeries::monomial(const Rat &c, int tpow, int order) {
    QSeries s;
    s.order_ = order;
    if (c == 0 || tpow > order) return zero(order);
    s.lo_ = tpow;
    s.c_ = {c};
    s.normalize();
    return s;
}

QSeries QSeries::from_coeffs(std::vector<Rat> coeffs, int lo, int order) {
    QSeries s;
    s.lo_ = lo;
    s.order_ = order;
    s.c_ = std::move(coeffs);
    if (static_cast<long>(s.c_.size()) > static_cast<long>(order) - lo + 1)
        s.c_.resize(static_cast<size_t>(order - lo + 1));
    s.normalize();
    return s;
}

const Rat &QSeries::coeff(int e) const {
    static const Rat kZero(0);
    if (e > order_) throw std::logic_error("QSeries::coeff beyond truncation order");
    if (e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(e - lo_)];
}

int QSeries::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of (truncated) zero series");
    return lo_;
}

QSeries QSeries::truncated(int order) const {
    if (order >= order_) return *this;
    QSeries s;
    s.order_ = order;
    s.lo_ = lo_;
    if (!c_.empty() && lo_ <= order)
        s.c_.assign(c_.begin(),
                    c_.begin() + std::min<long>(static_cast<long>(c_.size()), static_cast<long>(order) - lo_ + 1));
    s.normalize();
    return s;
}

QSeries QSeries::shifted(int tpow) const {
    QSeries s = *this;
    s.order_ = ord_add(order_, tpow);
    s.lo_ += tpow;
    s.normalize();
    return s;
}

QSeries QSeries::stretched(int k) const {
    assert(k >= 1);
    if (k == 1) return *this;
    QSeries s;
    // exact through exponent k*order + (k-1): nothing between stretched points
    s.order_ = order_ >= kInfOrder ? kInfOrder : ord_add(order_ * k, k - 1);
    if (is_zero()) return zero(s.order_);
    s.lo_ = lo_ * k;
    s.c_.assign(c_.size() * static_cast<size_t>(k) - static_cast<size_t>(k) + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<size_t>(k)] = c_[i];
    s.normalize();
    return s;
}

QSeries QSeries::scaled(const Rat &c) const {
    if (c == 0) return zero(order_);
    QSeries s = *this;
    for (auto &x : s.c_) x *= c;
    return s;
}

QSeries operator+(const QSeries &a, const QSeries &b) {
    int order = ord_min(a.order_, b.order_);
    if (a.is_zero()) return b.truncated(order);
    if (b.is_zero()) return a.truncated(order);
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::min(order, std::max(a.lo_ + static_cast<int>(a.c_.size()), b.lo_ + static_cast<int>(b.c_.size())) - 1);
    QSeries s;
    s.order_ = order;
    s.lo_ = lo;
    if (hi >= lo) {
        s.c_.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
        for (int e = lo; e <= hi; ++e) {
            if (e >= a.lo_ && e < a.lo_ + static_cast<int>(a.c_.size())) s.c_[static_cast<size_t>(e - lo)] += a.c_[static_cast<size_t>(e - a.lo_)];
            if (e >= b.lo_ && e < b.lo_ + static_cast<int>(b.c_.size())) s.c_[static_cast<size_t>(e - lo)] += b.c_[static_cast<size_t>(e - b.lo_)];
        }
    }
    s.normalize();
    return s;
}

QSeries operator-(const QSeries &a, const QSeries &b) { return a + b.negated(); }

QSeries operator*(const QSeries &a, const QSeries &b) {
    // unknown terms of one factor meet the lowest known term of the other
    int order = ord_min(ord_add(a.order_, b.is_zero() ? 0 : b.lo_),
                        ord_add(b.order_, a.is_zero() ? 0 : a.lo_));
    if (a.is_zero() || b.is_zero()) return QSeries::zero(order);
    QSeries s;
    s.order_ = order;
    s.lo_ = a.lo_ + b.lo_;
    long len = std::min<long>(static_cast<long>(a.c_.size() + b.c_.size()) - 1,
                              static_cast<long>(order) - s.lo_ + 1);
    if (len <= 0) return QSeries::zero(order);
    s.c_.assign(static_cast<size_t>(len), Rat(0));
    for (size_t i = 0; i < a.c_.size() && i < static_cast<size_t>(len); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size() && i + j < static_cast<size_t>(len); ++j) {
            if (b.c_[j] == 0) continue;
            s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    s.normalize();
    return s;
}

QSeries QSeries::inverse() const {
    if (is_zero()) throw singular_error("inverse of zero series");
    if (is_monomial()) {
        QSeries s;
        s.order_ = order_ >= kInfOrder ? kInfOrder : order_ - 2 * lo_;
        s.lo_ = -lo_;
        s.c_ = {Rat(1) / c_[0]};
        s.normalize();
        return s;
    }
    if (order_ >= kInfOrder)
        throw std::logic_error("inverse of non-monomial needs a finite truncation order");
    int v = lo_;
    int rel = order_ - v;  // relative order of the unit part
    // invert the unit part u = c_[0] + c_[1] t + ... by long division
    std::vector<Rat> inv(static_cast<size_t>(rel) + 1, Rat(0));
    Rat lead = Rat(1) / c_[0];
    inv[0] = lead;
    for (int k = 1; k <= rel; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
            acc += c_[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -acc * lead;
    }
    return from_coeffs(std::move(inv), -v, order_ - 2 * v);
}

QSeries QSeries::pow_int(long e) const {
    if (e == 0) return one(is_zero() || order_ >= kInfOrder ? kInfOrder : order_ - lo_);
    const QSeries base = e > 0 ? *this : inverse();
    long k = e > 0 ? e : -e;
    QSeries acc = base;
    for (long i = 1; i < k; ++i) acc = acc * base;
    return acc;
}

bool series_equal(const QSeries &a, const QSeries &b) { return !series_mismatch(a, b).has_value(); }

std::optional<Mismatch> series_mismatch(const QSeries &expected, const QSeries &got) {
    int order = ord_min(expected.order(), got.order());
    int lo = std::min(expected.is_zero() ? order + 1 : expected.lo(),
                      got.is_zero() ? order + 1 : got.lo());
    // beyond the last stored coefficient of both sides everything known is zero
    auto hi_stored = [](const QSeries &s) {
        return s.is_zero() ? std::numeric_limits<int>::min() : s.last_stored();
    };
    order = ord_min(order, std::max(hi_stored(expected), hi_stored(got)));
    for (int e = lo; e <= order; ++e) {
        const Rat &x = expected.coeff(e);
        const Rat &y = got.coeff(e);
        if (x != y) return Mismatch{e, x, y};
    }
    return std::nullopt;
}

std::string QSeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rat &c = c_[i];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(i);
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

// ---- q-factorial machinery ----------------------------------------------

QSeries poch(const QSeries &a, long n, int step) {
    if (n == 0) return QSeries::one(a.order());
    QSeries out = QSeries::one(a.order() >= QSeries::kInfOrder ? QSeries::kInfOrder : a.order());
    if (n > 0) {
        for (long j = 0; j < n; ++j) {
            QSeries f = QSeries::one(out.order()) - a.shifted(static_cast<int>(j) * step);
            out = out * f;
        }
        return out;
    }
    for (long j = 1; j <= -n; ++j) {
        QSeries f = QSeries::one(out.order()) - a.shifted(-static_cast<int>(j) * step);
        if (f.is_zero())
            throw singular_error("poch: non-invertible factor at negative index");
        out = out * f.inverse();
    }
    return out;
}

QSeries poch_inf(const QSeries &a, int order, int step) {
    if (a.is_zero()) return QSeries::one(order);
    if (a.valuation() <= 0)
        throw singular_error("poch_inf requires positive t-valuation");
    QSeries out = QSeries::one(order);
    int v = a.valuation();
    for (long j = 0; v + j * step <= order; ++j)
        out = out * (QSeries::one(order) - a.shifted(static_cast<int>(j) * step));
    return out;
}

QSeries poch_q(long k) {
    if (k < 0) throw std::domain_error("poch_q: negative index");
    QSeries out = QSeries::one();
    for (long j = 1; j <= k; ++j)
        out = out * (QSeries::one() - QSeries::monomial(Rat(1), static_cast<int>(2 * j)));
    return out;
}

QSeries qbinomial(long m, long k) {
    if (k < 0 || k > m) return QSeries::zero();
    if (k == 0 || k == m) return QSeries::one();
    // Pascal recurrence [m k] = [m-1 k-1] + q^k [m-1 k], exact polynomials
    std::vector<QSeries> row(static_cast<size_t>(m) + 1);
    row[0] = QSeries::one();
    for (long i = 1; i <= m; ++i) {
        std::vector<QSeries> next(static_cast<size_t>(m) + 1);
        next[0] = QSeries::one();
        long top = std::min(i, k);
        for (long j = 1; j <= top; ++j) {
            QSeries left = j <= i - 1 ? row[static_cast<size_t>(j)] : QSeries::zero();
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] +
                QSeries::monomial(Rat(1), static_cast<int>(2 * j)) * left;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

QSeries qbinomial_inf(long k, int order) {
    if (k < 0) return QSeries::zero(order);
    return poch_q(k).truncated(order).inverse();
}

QSeries triple_product(long a, long b, long c, long k, int order) {
    if (k <= 0) throw std::domain_error("triple_product: modulus must be positive");
    for (long e : {a, b, c})
        if (e <= 0) throw singular_error("triple_product: exponent <= 0 gives a vanishing factor");
    QSeries out = QSeries::one(order);
    for (long e : {a, b, c})
        out = out * poch_inf(QSeries::monomial(Rat(1), static_cast<int>(2 * e), order), order,
                             static_cast<int>(2 * k));
    return out;
}

}  // namespace hallq
