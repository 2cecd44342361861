#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hallq/partitions.hpp"

using namespace hallq;

namespace {

// independent transpose oracle on the Young diagram bitmap
std::vector<long> transpose_oracle(const std::vector<long> &parts) {
    std::vector<long> out;
    for (long j = 1;; ++j) {
        long c = 0;
        for (long p : parts)
            if (p >= j) ++c;
        if (c == 0) break;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("conjugate") {
    Partition a = Partition::of({4, 4, 2, 1, 1, 1});
    CHECK(a.conjugate().parts() == std::vector<long>({6, 3, 2, 2}));
    CHECK(a.conjugate().parts() == transpose_oracle(a.parts()));
    CHECK(Partition::of({}).conjugate().empty());
    CHECK(Partition::of({2, 2}).conjugate().parts() == std::vector<long>({2, 2}));
    // involution on everything small
    visit_partitions(5, 9, PartitionFilter::All, [](const Partition &p) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
    });
    CHECK_THROWS(Partition::of_doubled({3, 1}).conjugate());
}

TEST_CASE("b polynomial") {
    Partition a = Partition::of({4, 4, 2, 1, 1, 1});
    CHECK(series_equal(a.b_poly(), poch_q(2) * poch_q(1) * poch_q(3)));
    CHECK(Partition::of({}).b_poly().is_one());
    CHECK(series_equal(Partition::of({1, 1}).b_poly(), poch_q(2)));
}

TEST_CASE("odd parts and n-statistic") {
    CHECK(Partition::of({6, 4, 3, 3, 2, 1, 1, 1}).odd_parts().parts() ==
          std::vector<long>({3, 3, 1, 1, 1}));
    CHECK(Partition::of({2, 2}).odd_parts().empty());
    CHECK(Partition::of({5}).odd_parts().parts() == std::vector<long>({5}));
    CHECK(Partition::of({3, 1}).n_stat() == 1);
    CHECK(Partition::of({1, 1, 1}).n_stat() == 3);
    CHECK(Partition::of({}).n_stat() == 0);
}

TEST_CASE("multiplicities match conjugate differences") {
    visit_partitions(6, 10, PartitionFilter::All, [](const Partition &p) {
        auto cp = p.conjugate_parts();
        for (long i = 1; i <= p.max_part(); ++i) {
            long ci = cp[static_cast<size_t>(i - 1)];
            long ci1 = i < p.max_part() ? cp[static_cast<size_t>(i)] : 0;
            CHECK(p.multiplicity(i) == ci - ci1);
        }
    });
}

TEST_CASE("parity of odd-part count") {
    visit_partitions(7, 11, PartitionFilter::All, [](const Partition &p) {
        CHECK((p.weight() + static_cast<long>(p.odd_parts().length())) % 2 == 0);
    });
}

TEST_CASE("enumeration") {
    std::set<std::vector<long>> seen;
    visit_partitions(2, 4, PartitionFilter::Even, [&](const Partition &p) {
        CHECK(seen.insert(p.parts2()).second);  // exactly once
    });
    CHECK(seen == std::set<std::vector<long>>({{}, {4}, {4, 4}}));

    seen.clear();
    visit_partitions(0, 7, PartitionFilter::All,
                     [&](const Partition &p) { seen.insert(p.parts2()); });
    CHECK(seen == std::set<std::vector<long>>({{}}));

    // partitions with first odd column = 1 and parts <= 2: (1) and (2)
    std::set<std::vector<long>> prof;
    visit_partitions_odd_profile({1}, [&](const Partition &p) { prof.insert(p.parts2()); });
    CHECK(prof == std::set<std::vector<long>>({{2}, {4}}));
}

TEST_CASE("enumeration counts match the partition generating function") {
    // coefficient of q^w in prod_{j<=P} 1/(1-q^j) counts partitions with parts <= P
    const long P = 5, W = 14;
    QSeries gen = QSeries::one(2 * W);
    for (long j = 1; j <= P; ++j)
        gen = gen * poch(QSeries::monomial(Rat(1), static_cast<int>(2 * j), 2 * W), 1).inverse();
    std::map<long, long> byweight;
    visit_partitions(P, W, PartitionFilter::All,
                     [&](const Partition &p) { byweight[p.weight()]++; });
    for (long w = 0; w <= W; ++w) {
        CAPTURE(w);
        CHECK(Rat(byweight[w]) == gen.coeff(static_cast<int>(2 * w)));
    }
}

TEST_CASE("half partitions") {
    Partition h = Partition::parse("(3/2,1/2)");
    CHECK(h.half_mode());
    CHECK(h.str() == "(3/2,1/2)");
    CHECK(h.weight2() == 4);
    CHECK_THROWS(Partition::parse("(3/2,1)"));
    CHECK(Partition::parse("(4,2,1)").parts() == std::vector<long>({4, 2, 1}));
    CHECK(Partition::parse("()").empty());
}

TEST_CASE("multi-index helpers") {
    CHECK(mi_contains({2, 1}, {1, 1}));
    CHECK(!mi_contains({2, 1}, {1, 2}));
    long count = 0;
    visit_compositions(3, 4, [&](const MultiIndex &r) {
        CHECK(mi_weight(r) == 4);
        ++count;
    });
    CHECK(count == 15);  // C(6,2)
    count = 0;
    visit_box({0, -1}, {2, 1}, [&](const MultiIndex &) { ++count; });
    CHECK(count == 9);
}
