#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hallq/tableaux.hpp"

using namespace hallq;

namespace {

long count_ssyt(const Partition &shape, const MultiIndex &w) {
    long c = 0;
    visit_ssyt(shape, w, [&](const Tableau &T) {
        CHECK(T.semistandard());
        ++c;
    });
    return c;
}

bool dominates(const Partition &a, const Partition &b) {
    long sa = 0, sb = 0;
    size_t len = std::max(a.length(), b.length());
    for (size_t i = 1; i <= len; ++i) {
        sa += a.part2(i);
        sb += b.part2(i);
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("ssyt enumeration") {
    CHECK(count_ssyt(Partition::of({2}), {1, 1}) == 1);
    CHECK(count_ssyt(Partition::of({1, 1}), {2, 0}) == 0);
    CHECK(count_ssyt(Partition::of({2, 1}), {1, 1, 1}) == 2);
    CHECK(count_ssyt(Partition::of({}), {}) == 1);
    // column-strictness cap: shape (1^4) with 3 letters
    CHECK(count_ssyt(Partition::of({1, 1, 1, 1}), {2, 1, 1}) == 0);
}

TEST_CASE("charge on small words") {
    Tableau row12{{{1, 2}}};
    CHECK(charge(row12) == 1);
    Tableau col12{{{1}, {2}}};
    CHECK(charge(col12) == 0);
    Tableau rowk{{{1, 1, 1, 1}}};
    CHECK(charge(rowk) == 0);
    // single letters
    CHECK(charge_word({1}) == 0);
    CHECK(charge_word({2, 1, 3}) == 2);
    CHECK(charge_word({3, 1, 2}) == 1);
}

TEST_CASE("kostka-foulkes known values") {
    QSeries k = kostka_foulkes(Partition::of({2}), Partition::of({1, 1}));
    CHECK(k.coeff(2) == 1);
    CHECK(k.coeff(0) == 0);
    CHECK(series_equal(k, QSeries::monomial(Rat(1), 2)));

    CHECK(kostka_foulkes(Partition::of({1, 1}), Partition::of({1, 1})).is_one());

    QSeries k21 = kostka_foulkes(Partition::of({2, 1}), Partition::of({1, 1, 1}));
    CHECK(k21.coeff(2) == 1);
    CHECK(k21.coeff(4) == 1);
    CHECK(k21.coeff(0) == 0);
    CHECK(k21.coeff(6) == 0);

    // K_{lambda,lambda} = 1 for everything small
    visit_partitions(6, 8, PartitionFilter::All, [](const Partition &p) {
        if (p.empty()) return;
        CHECK(kostka_foulkes(p, p).is_one());
    });
}

TEST_CASE("kostka-foulkes vanishes without dominance, |mu| <= 8") {
    for (long w = 1; w <= 8; ++w) {
        std::vector<Partition> all;
        visit_partitions_of(w, [&](const Partition &p) { all.push_back(p); });
        for (const auto &la : all)
            for (const auto &mu : all) {
                QSeries k = kostka_foulkes(la, mu);
                CAPTURE(la.str());
                CAPTURE(mu.str());
                if (!dominates(la, mu)) CHECK(k.is_zero());
                if (la == mu) CHECK(k.is_one());
            }
    }
}

TEST_CASE("kostka-foulkes degree bound, |mu| <= 6") {
    for (long w = 1; w <= 6; ++w) {
        std::vector<Partition> all;
        visit_partitions_of(w, [&](const Partition &p) { all.push_back(p); });
        for (const auto &la : all)
            for (const auto &mu : all) {
                QSeries k = kostka_foulkes(la, mu);
                if (k.is_zero()) continue;
                long bound = mu.n_stat() - la.n_stat();
                CHECK(k.last_stored() <= 2 * bound);
                if (dominates(la, mu)) {
                    // top coefficient at the bound is 1
                    CHECK(k.coeff(static_cast<int>(2 * bound)) == 1);
                }
            }
    }
}
