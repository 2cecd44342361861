#pragma once

#include <vector>

#include "hallq/qseries.hpp"

namespace hallq {

// eta((scale2/2) tau) ^ exp; scale2 doubled so that eta(tau/2) fits the grid.
struct EtaTerm {
    int scale2;
    int exp;
};

// Product of eta factors, split as q^offset * body.  offset is kept as an
// exact rational in q-units (a multiple of 1/48); body is an integer-t-power
// series with constant term 1.
class EtaQuotient {
public:
    static EtaQuotient make(std::vector<EtaTerm> terms, int order);

    const std::vector<EtaTerm> &terms() const { return terms_; }
    const Rat &offset() const { return offset_; }
    const QSeries &body() const { return body_; }

    EtaQuotient times(const EtaQuotient &o, int order) const;

    // equal offsets exactly, equal bodies on the common window
    bool equals(const EtaQuotient &o) const;

private:
    std::vector<EtaTerm> terms_;
    Rat offset_;
    QSeries body_;
};

// body of (t^scale2; t^scale2)_inf^exp truncated — shared by eta and plain
// Pochhammer prefactors
QSeries eta_body(int scale2, int exp, int order);

}  // namespace hallq
