#pragma once

#include <functional>
#include <vector>

#include "hallq/partitions.hpp"

namespace hallq {

// Semistandard Young tableau: rows weakly increase, columns strictly
// increase; entries are 1-based letters.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    // content counts for letters 1..nletters
    MultiIndex weight(size_t nletters) const;
    bool semistandard() const;
};

// All SSYT of the given shape and weight, each exactly once.
void visit_ssyt(const Partition &shape, const MultiIndex &weight,
                const std::function<void(const Tableau &)> &fn);

// Lascoux-Schutzenberger charge; requires the content of T to be a
// partition (weakly decreasing counts).
long charge(const Tableau &T);
long charge_word(const std::vector<int> &word);

// K_{lambda,mu}(q) = sum over SSYT(lambda,mu) of q^charge, exact polynomial.
QSeries kostka_foulkes(const Partition &lambda, const Partition &mu);

}  // namespace hallq
