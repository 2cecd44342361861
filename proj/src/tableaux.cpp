#include "hallq/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallq {

Partition Tableau::shape() const {
    std::vector<long> parts;
    for (const auto &r : rows) parts.push_back(static_cast<long>(r.size()));
    return Partition::of(parts);
}

MultiIndex Tableau::weight(size_t nletters) const {
    MultiIndex w(nletters, 0);
    for (const auto &r : rows)
        for (int v : r) {
            if (v < 1 || static_cast<size_t>(v) > nletters)
                throw std::out_of_range("tableau letter outside alphabet");
            ++w[static_cast<size_t>(v - 1)];
        }
    return w;
}

bool Tableau::semistandard() const {
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c + 1 < rows[r].size(); ++c)
            if (rows[r][c] > rows[r][c + 1]) return false;
        if (r > 0) {
            if (rows[r].size() > rows[r - 1].size()) return false;
            for (size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r - 1][c] >= rows[r][c]) return false;
        }
    }
    return true;
}

void visit_ssyt(const Partition &shape, const MultiIndex &weight,
                const std::function<void(const Tableau &)> &fn) {
    long total = 0;
    for (long w : weight) total += w;
    if (shape.weight() != total) return;

    std::vector<long> sh = shape.parts();
    Tableau T;
    T.rows.resize(sh.size());
    for (size_t r = 0; r < sh.size(); ++r) T.rows[r].assign(static_cast<size_t>(sh[r]), 0);
    MultiIndex left = weight;

    // fill cells row-major; constraints look left and up
    std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
        if (r == T.rows.size()) {
            fn(T);
            return;
        }
        size_t nr = r, nc = c + 1;
        if (nc >= T.rows[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int vmin = 1;
        if (c > 0) vmin = std::max(vmin, T.rows[r][c - 1]);
        if (r > 0) vmin = std::max(vmin, T.rows[r - 1][c] + 1);
        for (int v = vmin; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<size_t>(v - 1)] == 0) continue;
            --left[static_cast<size_t>(v - 1)];
            T.rows[r][c] = v;
            rec(nr, nc);
            ++left[static_cast<size_t>(v - 1)];
        }
        T.rows[r][c] = 0;
    };
    if (T.rows.empty()) {
        fn(T);
        return;
    }
    rec(0, 0);
}

long charge_word(const std::vector<int> &word) {
    std::vector<int> w = word;
    long total = 0;
    while (!w.empty()) {
        int maxletter = *std::max_element(w.begin(), w.end());
        // rightmost 1
        long cur = -1;
        for (long i = static_cast<long>(w.size()) - 1; i >= 0; --i)
            if (w[static_cast<size_t>(i)] == 1) {
                cur = i;
                break;
            }
        if (cur < 0) throw std::domain_error("charge: content is not a partition");
        std::vector<long> used = {cur};
        long index = 0, sum = 0;
        for (int l = 2; l <= maxletter; ++l) {
            long found = -1;
            bool wrapped = false;
            for (long i = cur + 1; i < static_cast<long>(w.size()); ++i)
                if (w[static_cast<size_t>(i)] == l) {
                    found = i;
                    break;
                }
            if (found < 0) {
                for (long i = 0; i < cur; ++i)
                    if (w[static_cast<size_t>(i)] == l) {
                        found = i;
                        wrapped = true;
                        break;
                    }
            }
            if (found < 0) break;  // remaining letters exhausted
            if (wrapped) ++index;
            sum += index;
            used.push_back(found);
            cur = found;
        }
        total += sum;
        std::sort(used.begin(), used.end());
        for (long i = static_cast<long>(used.size()) - 1; i >= 0; --i)
            w.erase(w.begin() + used[static_cast<size_t>(i)]);
    }
    return total;
}

long charge(const Tableau &T) {
    // reading word: rows top to bottom, each row right to left
    std::vector<int> word;
    for (const auto &r : T.rows)
        for (auto it = r.rbegin(); it != r.rend(); ++it) word.push_back(*it);
    return charge_word(word);
}

QSeries kostka_foulkes(const Partition &lambda, const Partition &mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("kostka_foulkes: |lambda| != |mu|");
    MultiIndex w;
    for (long p : mu.parts()) w.push_back(p);
    QSeries out = QSeries::zero();
    visit_ssyt(lambda, w, [&](const Tableau &T) {
        out += QSeries::monomial(Rat(1), static_cast<int>(2 * charge(T)));
    });
    return out;
}

}  // namespace hallq
