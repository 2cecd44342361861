#include "hallq/xlaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallq {

XLaurent XLaurent::one(size_t n, int order) { return constant(n, QSeries::one(order)); }

XLaurent XLaurent::constant(size_t n, QSeries c) {
    XLaurent f(n);
    f.add_term(Expo(n, 0), c);
    return f;
}

XLaurent XLaurent::monomial(size_t n, Expo e2, QSeries c) {
    if (e2.size() != n) throw std::invalid_argument("monomial exponent arity mismatch");
    XLaurent f(n);
    f.add_term(e2, c);
    return f;
}

XLaurent XLaurent::var(size_t n, size_t i, int pow2, int order) {
    Expo e2(n, 0);
    e2.at(i) = pow2;
    return monomial(n, e2, QSeries::one(order));
}

const QSeries &XLaurent::coeff(const Expo &e2) const {
    static const QSeries kZero = QSeries::zero();
    auto it = terms_.find(e2);
    return it == terms_.end() ? kZero : it->second;
}

void XLaurent::add_term(const Expo &e2, const QSeries &c) {
    if (e2.size() != n_) throw std::invalid_argument("exponent arity mismatch");
    order_ = ord_min(order_, c.order());
    auto [it, fresh] = terms_.try_emplace(e2, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

XLaurent XLaurent::operator+(const XLaurent &o) const {
    if (n_ != o.n_) throw std::invalid_argument("nvars mismatch");
    XLaurent out = *this;
    out.order_ = ord_min(out.order_, o.order_);
    for (const auto &[e, c] : o.terms_) out.add_term(e, c);
    return out;
}

XLaurent XLaurent::operator-(const XLaurent &o) const { return *this + o.negated(); }

XLaurent XLaurent::operator*(const XLaurent &o) const {
    if (n_ != o.n_) throw std::invalid_argument("nvars mismatch");
    XLaurent out(n_);
    int av = terms_.empty() ? 0 : std::min(0, min_tval());
    int bv = o.terms_.empty() ? 0 : std::min(0, o.min_tval());
    out.order_ = ord_min(ord_add(order_, bv), ord_add(o.order_, av));
    Expo e(n_);
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            for (size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

XLaurent XLaurent::negated() const {
    XLaurent out = *this;
    for (auto &[e, c] : out.terms_) c = c.negated();
    return out;
}

XLaurent XLaurent::scaled(const QSeries &c) const {
    XLaurent out(n_);
    int cv = c.is_zero() ? 0 : std::min(0, c.valuation());
    out.order_ = ord_min(ord_add(order_, cv), c.order());
    for (const auto &[e, x] : terms_) out.add_term(e, x * c);
    return out;
}

XLaurent XLaurent::mul_monomial(const Expo &e2, const QSeries &c) const {
    XLaurent out(n_);
    int cv = c.is_zero() ? 0 : std::min(0, c.valuation());
    out.order_ = ord_add(order_, cv);
    Expo e(n_);
    for (const auto &[ea, ca] : terms_) {
        for (size_t i = 0; i < n_; ++i) e[i] = ea[i] + e2[i];
        out.add_term(e, ca * c);
    }
    return out;
}

XLaurent XLaurent::shift_vars(const std::vector<int> &tshift) const {
    if (tshift.size() != n_) throw std::invalid_argument("shift arity mismatch");
    XLaurent out(n_);
    out.order_ = order_;
    for (const auto &[e, c] : terms_) {
        long s = 0;
        for (size_t i = 0; i < n_; ++i) s += static_cast<long>(tshift[i]) * e[i];
        if (s % 2 != 0) throw std::domain_error("shift_vars: non-integral t-power");
        out.add_term(e, c.shifted(static_cast<int>(s / 2)));
    }
    return out;
}

XLaurent XLaurent::permuted(const std::vector<size_t> &perm) const {
    XLaurent out(n_);
    out.order_ = order_;
    Expo e(n_);
    for (const auto &[ea, c] : terms_) {
        for (size_t i = 0; i < n_; ++i) e[perm[i]] = ea[i];
        out.add_term(e, c);
    }
    return out;
}

XLaurent XLaurent::truncated(int order) const {
    XLaurent out(n_);
    out.order_ = ord_min(order_, order);
    for (const auto &[e, c] : terms_) out.add_term(e, c.truncated(order));
    return out;
}

int XLaurent::min_tval() const {
    int v = QSeries::kInfOrder + 1;
    for (const auto &[e, c] : terms_)
        if (!c.is_zero()) v = std::min(v, c.valuation());
    return v;
}

QSeries XLaurent::eval(const std::vector<Point> &pts) const {
    if (pts.size() != n_) throw std::invalid_argument("eval arity mismatch");
    QSeries acc = QSeries::zero();
    for (const auto &[e, c] : terms_) {
        Rat scale(1);
        long tshift = 0;
        for (size_t i = 0; i < n_; ++i) {
            if (e[i] % 2 != 0) throw std::domain_error("eval: half-integer exponent at a point");
            long k = e[i] / 2;
            if (pts[i].c == 0) {
                if (k < 0) throw singular_error("eval at zero with negative exponent");
                if (k > 0) scale = 0;
                continue;
            }
            scale *= rat_pow(pts[i].c, k);
            tshift += static_cast<long>(pts[i].tpow) * k;
        }
        if (scale == 0) continue;
        acc += c.scaled(scale).shifted(static_cast<int>(tshift));
    }
    return acc.truncated(order_);
}

XLaurent XLaurent::div_binomial(const Rat &c, int tpow, const Expo &mu2) const {
    if (mu2.size() != n_) throw std::invalid_argument("divisor arity mismatch");
    size_t pivot = n_;
    for (size_t i = 0; i < n_; ++i)
        if (mu2[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == n_) throw std::invalid_argument("div_binomial: divisor is constant");
    const int step = mu2[pivot];

    XLaurent rem = *this;
    XLaurent quo(n_);
    Rat cinv = Rat(1) / c;
    // pivot-exponent floor of the input; an exact quotient never reaches
    // below it, so passing it means the division was inexact
    int floor_e = terms_.begin()->first[pivot];
    int ceil_e = floor_e;
    for (const auto &[e, x] : terms_) {
        floor_e = std::min(floor_e, e[pivot]);
        ceil_e = std::max(ceil_e, e[pivot]);
    }
    while (!rem.terms_.empty()) {
        // peel all terms at the extreme pivot exponent (top if step>0)
        int best = rem.terms_.begin()->first[pivot];
        for (const auto &[e, x] : rem.terms_) {
            int v = e[pivot];
            if (step > 0 ? v > best : v < best) best = v;
        }
        if (step > 0 ? best < floor_e : best > ceil_e)
            throw std::logic_error("div_binomial: inexact division (remainder)");
        XLaurent chunk(n_);
        for (const auto &[e, x] : rem.terms_)
            if (e[pivot] == best) chunk.add_term(e, x);
        // q = chunk / (c t^tpow x^mu2)
        Expo neg(n_);
        for (size_t i = 0; i < n_; ++i) neg[i] = -mu2[i];
        XLaurent q = chunk.mul_monomial(neg, QSeries::monomial(cinv, -tpow));
        quo += q;
        // rem -= q * (c t^tpow x^mu2 - 1)  ==  rem - chunk + q
        rem = rem - chunk + q;
    }
    return quo;
}

XLaurent XLaurent::div_monomial(const Rat &c, int tpow, const Expo &e2) const {
    Expo neg(n_);
    for (size_t i = 0; i < n_; ++i) neg[i] = -e2[i];
    return mul_monomial(neg, QSeries::monomial(Rat(1) / c, -tpow));
}

XLaurent XLaurent::invert_unit(int order) const {
    XLaurent one_x = XLaurent::one(n_, order);
    XLaurent r = one_x - truncated(order);  // 1 - f
    if (!r.is_zero() && r.min_tval() < 1)
        throw std::domain_error("invert_unit: series is not 1 + O(t)");
    XLaurent acc = one_x;
    XLaurent pw = one_x;
    while (true) {
        pw = (pw * r).truncated(order);
        if (pw.is_zero()) break;
        acc += pw;
        if (pw.min_tval() > order) break;
    }
    return acc.truncated(order);
}

std::string XLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] != 2) {
                os << "^";
                if (e[i] % 2 == 0)
                    os << e[i] / 2;
                else
                    os << "(" << e[i] << "/2)";
            }
        }
    }
    return os.str();
}

bool xl_equal(const XLaurent &a, const XLaurent &b) { return !xl_mismatch(a, b).has_value(); }

std::optional<XlMismatch> xl_mismatch(const XLaurent &expected, const XLaurent &got) {
    int order = std::min(expected.min_order(), got.min_order());
    std::map<XLaurent::Expo, char> keys;
    for (const auto &[e, c] : expected.terms()) keys[e] = 1;
    for (const auto &[e, c] : got.terms()) keys[e] = 1;
    for (const auto &[e, k] : keys) {
        auto mm = series_mismatch(expected.coeff(e).truncated(order), got.coeff(e).truncated(order));
        if (mm) return XlMismatch{e, *mm};
    }
    return std::nullopt;
}

XLaurent div_var_diff(const XLaurent &f, size_t a, size_t b) {
    // x_a - x_b = x_b * (x_a/x_b - 1)
    XLaurent::Expo mu2(f.nvars(), 0), eb2(f.nvars(), 0);
    mu2[a] = 2;
    mu2[b] = -2;
    eb2[b] = 2;
    return f.div_binomial(Rat(1), 0, mu2).div_monomial(Rat(1), 0, eb2);
}

}  // namespace hallq
