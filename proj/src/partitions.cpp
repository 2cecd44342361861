#include "hallq/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hallq {

Partition Partition::of(std::vector<long> parts) {
    std::vector<long> d;
    d.reserve(parts.size());
    for (long p : parts) d.push_back(2 * p);
    return of_doubled(std::move(d));
}

Partition Partition::of_doubled(std::vector<long> parts2) {
    Partition p;
    p.parts2_ = std::move(parts2);
    for (size_t i = 0; i < p.parts2_.size(); ++i) {
        if (p.parts2_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && p.parts2_[i] > p.parts2_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (!p.parts2_.empty()) {
        bool odd0 = p.parts2_[0] % 2 != 0;
        for (long v : p.parts2_)
            if ((v % 2 != 0) != odd0)
                throw std::invalid_argument("partition mixes integer and half-integer parts");
        p.half_ = odd0;
    }
    return p;
}

Partition Partition::parse(const std::string &text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("partition text must look like (a,b,...)");
    s = s.substr(1, s.size() - 2);
    std::vector<long> d;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto slash = tok.find('/');
            if (slash == std::string::npos) {
                d.push_back(2 * std::stol(tok));
            } else {
                long num = std::stol(tok.substr(0, slash));
                long den = std::stol(tok.substr(slash + 1));
                if (den != 2) throw std::invalid_argument("only halves allowed in partition text");
                d.push_back(num);
            }
        }
    }
    return of_doubled(std::move(d));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts2_.size(); ++i) {
        if (i) os << ",";
        if (parts2_[i] % 2 == 0)
            os << parts2_[i] / 2;
        else
            os << parts2_[i] << "/2";
    }
    os << ")";
    return os.str();
}

long Partition::part(size_t i) const {
    long v = part2(i);
    if (v % 2 != 0) throw std::domain_error("integer part requested from half-partition");
    return v / 2;
}

std::vector<long> Partition::parts() const {
    std::vector<long> out;
    out.reserve(parts2_.size());
    for (size_t i = 1; i <= parts2_.size(); ++i) out.push_back(part(i));
    return out;
}

long Partition::weight2() const {
    long s = 0;
    for (long v : parts2_) s += v;
    return s;
}

long Partition::weight() const {
    long w2 = weight2();
    if (w2 % 2 != 0) throw std::domain_error("half-partition has non-integral weight");
    return w2 / 2;
}

bool Partition::is_even() const {
    for (size_t i = 1; i <= parts2_.size(); ++i)
        if (part(i) % 2 != 0) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (half_) throw std::domain_error("conjugate of a half-partition is not defined");
    return Partition::of(conjugate_parts());
}

std::vector<long> Partition::conjugate_parts() const {
    if (half_) throw std::domain_error("conjugate of a half-partition is not defined");
    std::vector<long> out;
    long top = max_part();
    out.reserve(static_cast<size_t>(top));
    for (long j = 1; j <= top; ++j) {
        long c = 0;
        for (size_t i = 1; i <= parts2_.size(); ++i)
            if (part(i) >= j) ++c;
        out.push_back(c);
    }
    return out;
}

long Partition::conjugate_part(long j) const {
    if (j < 1) throw std::domain_error("conjugate_part: index must be >= 1");
    long c = 0;
    for (size_t i = 1; i <= parts2_.size(); ++i)
        if (part(i) >= j) ++c;
    return c;
}

long Partition::multiplicity(long i) const {
    long c = 0;
    for (size_t k = 1; k <= parts2_.size(); ++k)
        if (part(k) == i) ++c;
    return c;
}

Partition Partition::odd_parts() const {
    std::vector<long> out;
    for (size_t i = 1; i <= parts2_.size(); ++i)
        if (part(i) % 2 != 0) out.push_back(part(i));
    return Partition::of(out);
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 1; i <= parts2_.size(); ++i) s += static_cast<long>(i - 1) * part(i);
    return s;
}

QSeries Partition::b_poly() const {
    QSeries out = QSeries::one();
    long i = 1;
    long top = max_part();
    for (; i <= top; ++i) {
        long m = multiplicity(i);
        if (m > 0) out = out * poch_q(m);
    }
    return out;
}

namespace {

void gen_parts(std::vector<long> &prefix, long maxp, long remaining, PartitionFilter filter,
               const std::function<void(const Partition &)> &fn) {
    bool ok = true;
    if (filter == PartitionFilter::Even)
        for (long p : prefix)
            if (p % 2 != 0) ok = false;
    if (ok) fn(Partition::of(prefix));
    for (long p = std::min(maxp, remaining); p >= 1; --p) {
        prefix.push_back(p);
        gen_parts(prefix, p, remaining - p, filter, fn);
        prefix.pop_back();
    }
}

}  // namespace

void visit_partitions(long max_part, long max_weight, PartitionFilter filter,
                      const std::function<void(const Partition &)> &fn) {
    std::vector<long> prefix;
    gen_parts(prefix, std::max<long>(max_part, 0), std::max<long>(max_weight, 0), filter, fn);
}

void visit_partitions_of(long w, const std::function<void(const Partition &)> &fn) {
    visit_partitions(w, w, PartitionFilter::All, [&](const Partition &p) {
        if (p.weight() == w) fn(p);
    });
}

void visit_partitions_odd_profile(const std::vector<long> &M,
                                  const std::function<void(const Partition &)> &fn) {
    long m = static_cast<long>(M.size());
    long len = M.empty() ? 0 : M[0];
    visit_partitions(2 * m, 2 * m * len, PartitionFilter::All, [&](const Partition &p) {
        for (long l = 1; l <= m; ++l)
            if (p.conjugate_part(2 * l - 1) != M[static_cast<size_t>(l - 1)]) return;
        fn(p);
    });
}

void visit_compositions(size_t n, long total, const std::function<void(const MultiIndex &)> &fn) {
    MultiIndex r(n, 0);
    std::function<void(size_t, long)> rec = [&](size_t i, long left) {
        if (i + 1 == n) {
            r[i] = left;
            fn(r);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            r[i] = v;
            rec(i + 1, left - v);
        }
    };
    if (n == 0) {
        if (total == 0) fn(r);
        return;
    }
    if (total < 0) return;
    rec(0, total);
}

void visit_box(const MultiIndex &lo, const MultiIndex &hi,
               const std::function<void(const MultiIndex &)> &fn) {
    if (lo.size() != hi.size()) throw std::invalid_argument("visit_box: size mismatch");
    MultiIndex r(lo.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == r.size()) {
            fn(r);
            return;
        }
        for (long v = lo[i]; v <= hi[i]; ++v) {
            r[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace hallq
