#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hallq/qseries.hpp"

namespace hallq {

// Integer or half-integer partition; parts stored doubled so that one
// representation covers both.  half_mode() <=> every part lies in Z + 1/2.
class Partition {
public:
    Partition() = default;

    static Partition of(std::vector<long> parts);           // integer parts
    static Partition of_doubled(std::vector<long> parts2);  // doubled parts

    static Partition parse(const std::string &text);  // "(4,2,1)" or "(3/2,1/2)"
    std::string str() const;

    bool half_mode() const { return half_; }
    size_t length() const { return parts2_.size(); }
    bool empty() const { return parts2_.empty(); }

    // i is 1-based; zero beyond the length
    long part2(size_t i) const { return i >= 1 && i <= parts2_.size() ? parts2_[i - 1] : 0; }
    long part(size_t i) const;  // integer partitions only

    const std::vector<long> &parts2() const { return parts2_; }
    std::vector<long> parts() const;  // integer partitions only

    long weight2() const;                 // 2*|lambda|
    long weight() const;                  // |lambda|, integer partitions only
    long max_part() const { return parts2_.empty() ? 0 : (parts2_[0] + 1) / 2; }

    bool operator==(const Partition &o) const { return parts2_ == o.parts2_; }
    bool operator<(const Partition &o) const { return parts2_ < o.parts2_; }

    bool is_even() const;  // all parts even (integer partitions)

    Partition conjugate() const;                  // integer partitions only
    std::vector<long> conjugate_parts() const;    // lambda'_1..lambda'_{lambda_1}
    long conjugate_part(long j) const;            // lambda'_j, zero beyond

    // multiplicity of parts of size i (i >= 1), integer partitions
    long multiplicity(long i) const;
    Partition odd_parts() const;  // parts of odd size, integer partitions
    long n_stat() const;          // sum (i-1)*lambda_i

    QSeries b_poly() const;  // prod_i (q;q)_{m_i(lambda)}, exact polynomial

private:
    std::vector<long> parts2_;
    bool half_ = false;
};

enum class PartitionFilter { All, Even };

// All integer partitions with lambda_1 <= max_part and |lambda| <= max_weight,
// each exactly once, in a fixed deterministic order (descending-lex).
void visit_partitions(long max_part, long max_weight, PartitionFilter filter,
                      const std::function<void(const Partition &)> &fn);

// Integer partitions of exactly w.
void visit_partitions_of(long w, const std::function<void(const Partition &)> &fn);

// Partitions with lambda_1 <= 2m and odd-column profile lambda'_{2l-1} = M_l.
void visit_partitions_odd_profile(const std::vector<long> &M,
                                  const std::function<void(const Partition &)> &fn);

// ---- multi-indices --------------------------------------------------------

using MultiIndex = std::vector<long>;

inline long mi_weight(const MultiIndex &r) {
    long s = 0;
    for (long x : r) s += x;
    return s;
}

// r contains s: r_i >= s_i for all i
inline bool mi_contains(const MultiIndex &r, const MultiIndex &s) {
    if (r.size() != s.size()) return false;
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] < s[i]) return false;
    return true;
}

// r in N^n with |r| = total, lexicographic
void visit_compositions(size_t n, long total, const std::function<void(const MultiIndex &)> &fn);

// lo <= r <= hi componentwise, lexicographic
void visit_box(const MultiIndex &lo, const MultiIndex &hi,
               const std::function<void(const MultiIndex &)> &fn);

}  // namespace hallq
