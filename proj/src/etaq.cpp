#include "hallq/etaq.hpp"

#include <map>

namespace hallq {

QSeries eta_body(int scale2, int exp, int order) {
    if (scale2 <= 0) throw std::domain_error("eta_body: scale must be positive");
    QSeries base = poch_inf(QSeries::monomial(Rat(1), scale2, order), order, scale2);
    if (exp >= 0) return base.pow_int(exp);
    return base.inverse().pow_int(-exp);
}

EtaQuotient EtaQuotient::make(std::vector<EtaTerm> terms, int order) {
    std::map<int, int> merged;
    for (const auto &t : terms) merged[t.scale2] += t.exp;
    EtaQuotient e;
    e.offset_ = Rat(0);
    e.body_ = QSeries::one(order);
    for (auto [scale2, exp] : merged) {
        if (exp == 0) continue;
        e.terms_.push_back({scale2, exp});
        Rat contrib(static_cast<long>(scale2) * exp, 48);
        contrib.canonicalize();
        e.offset_ += contrib;
        e.body_ = e.body_ * eta_body(scale2, exp, order);
    }
    return e;
}

EtaQuotient EtaQuotient::times(const EtaQuotient &o, int order) const {
    std::vector<EtaTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return make(std::move(all), order);
}

bool EtaQuotient::equals(const EtaQuotient &o) const {
    return offset_ == o.offset_ && series_equal(body_, o.body_);
}

}  // namespace hallq
