#include "boxpp/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_row(const std::vector<int>& row) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0) throw std::invalid_argument("negative entry");
        if (i > 0 && row[i - 1] < row[i])
            throw std::invalid_argument("row must be weakly decreasing");
        if (row[i] > 0) parts.push_back(row[i]);
    }
    return Partition(std::move(parts));
}

long long Partition::size() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::contains_cell(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
}

bool Partition::contains(const Partition& other) const {
    for (int i = 1; i <= other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

int Partition::durfee() const {
    int d = 0;
    while (d < length() && parts_[d] >= d + 1) ++d;
    return d;
}

long long Partition::diagonal_hook(int i) const {
    const Partition conj = conjugate();
    return (part(i) - i) + (conj.part(i) - i) + 1;
}

FrobeniusCoords to_frobenius(const Partition& p) {
    FrobeniusCoords f;
    const Partition conj = p.conjugate();
    const int d = p.durfee();
    for (int i = 1; i <= d; ++i) {
        f.arms.push_back(p.part(i) - i + 1);
        f.legs.push_back(conj.part(i) - i + 1);
    }
    return f;
}

namespace {

bool strictly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) return false;
        if (i > 0 && v[i - 1] <= v[i]) return false;
    }
    return true;
}

}  // namespace

Partition from_frobenius(const FrobeniusCoords& f) {
    if (f.arms.size() != f.legs.size())
        throw std::invalid_argument("arm and leg lists must have equal length");
    if (!strictly_decreasing_positive(f.arms) || !strictly_decreasing_positive(f.legs))
        throw std::invalid_argument("arms and legs must be strictly decreasing positive");
    const int k = static_cast<int>(f.arms.size());
    if (k == 0) return {};
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(f.arms[i - 1] + i - 1);
    // Row i > k holds the cells of columns j <= k whose length legs[j-1]+j-1
    // reaches row i.
    for (int i = k + 1;; ++i) {
        int row = 0;
        for (int j = 1; j <= k; ++j)
            if (f.legs[j - 1] + j - 1 >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

CornerCoords corners(const Partition& p) {
    CornerCoords c;
    for (int i = p.length(); i >= 1; --i)
        if (p.part(i) > p.part(i + 1)) c.cells.emplace_back(i, p.part(i));
    return c;
}

Partition from_corners(const CornerCoords& c) {
    std::vector<std::pair<int, int>> cells = c.cells;
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].first < 1 || cells[i].second < 1)
            throw std::invalid_argument("corner cells must be positive");
        if (i > 0 && (cells[i - 1].first == cells[i].first ||
                      cells[i - 1].second >= cells[i].second))
            throw std::invalid_argument(
                "corner cells must have distinct rows and strictly interleaved columns");
    }
    if (cells.empty()) return {};
    std::vector<int> parts;
    std::size_t idx = 0;  // first listed corner with row >= current row
    for (int row = cells.front().first; row >= 1; --row) {
        while (idx + 1 < cells.size() && cells[idx + 1].first >= row) ++idx;
        parts.push_back(cells[idx].second);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

int corner_count(const Partition& p) { return static_cast<int>(corners(p).cells.size()); }

long long cohook_area(const Partition& p) {
    long long total = 0;
    for (const auto& [i, j] : corners(p).cells) total += i + j - 1;
    return total;
}

Partition phi(const Partition& p) {
    const FrobeniusCoords f = to_frobenius(p);
    const int k = static_cast<int>(f.arms.size());
    CornerCoords c;
    // Corner rows are the legs (descending); columns are the arms reversed.
    for (int i = 0; i < k; ++i) c.cells.emplace_back(f.legs[i], f.arms[k - 1 - i]);
    return from_corners(c);
}

Partition phi_inverse(const Partition& p) {
    const CornerCoords c = corners(p);
    const int k = static_cast<int>(c.cells.size());
    FrobeniusCoords f;
    for (int i = 0; i < k; ++i) {
        f.legs.push_back(c.cells[i].first);
        f.arms.push_back(c.cells[k - 1 - i].second);
    }
    return from_frobenius(f);
}

namespace {

void gen_partitions(int max_rows, int max_cols, std::vector<int>& stack,
                    const std::function<void(const Partition&)>& fn) {
    fn(Partition(stack));
    if (static_cast<int>(stack.size()) >= max_rows) return;
    const int cap = stack.empty() ? max_cols : stack.back();
    for (int next = cap; next >= 1; --next) {
        stack.push_back(next);
        gen_partitions(max_rows, max_cols, stack, fn);
        stack.pop_back();
    }
}

}  // namespace

void for_each_partition_in_box(int max_rows, int max_cols,
                               const std::function<void(const Partition&)>& fn) {
    if (max_rows < 0 || max_cols < 0) throw std::invalid_argument("box sides must be >= 0");
    std::vector<int> stack;
    gen_partitions(max_rows, max_cols, stack, fn);
}

std::vector<Partition> enumerate_partitions(int max_rows, int max_cols) {
    std::vector<Partition> all;
    for_each_partition_in_box(max_rows, max_cols,
                              [&all](const Partition& p) { all.push_back(p); });
    std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() < b.parts();
    });
    return all;
}

}  // namespace boxpp
