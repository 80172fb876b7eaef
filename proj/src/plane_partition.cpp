#include "boxpp/plane_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxpp {

PlanePartition::PlanePartition(int rows, int cols, int max_height, std::vector<int> heights)
    : rows_(rows), cols_(cols), max_height_(max_height), heights_(std::move(heights)) {
    if (rows < 0 || cols < 0 || max_height < 0)
        throw std::invalid_argument("box dimensions must be >= 0");
    if (heights_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("height matrix has wrong size");
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            const int h = at(i, j);
            if (h < 0 || h > max_height_)
                throw std::invalid_argument("height outside [0, c]");
            if (at(i + 1, j) > h || at(i, j + 1) > h)
                throw std::invalid_argument("heights must decrease weakly along rows and columns");
        }
    }
}

PlanePartition PlanePartition::zero(int rows, int cols, int max_height) {
    return PlanePartition(rows, cols, max_height,
                          std::vector<int>(static_cast<std::size_t>(rows) * cols, 0));
}

PlanePartition PlanePartition::from_rows(int rows, int cols, int max_height,
                                         const std::vector<std::vector<int>>& row_data) {
    if (row_data.size() > static_cast<std::size_t>(rows))
        throw std::invalid_argument("too many rows");
    std::vector<int> heights(static_cast<std::size_t>(rows) * cols, 0);
    for (std::size_t i = 0; i < row_data.size(); ++i) {
        if (row_data[i].size() > static_cast<std::size_t>(cols))
            throw std::invalid_argument("row too long");
        for (std::size_t j = 0; j < row_data[i].size(); ++j)
            heights[i * cols + j] = row_data[i][j];
    }
    return PlanePartition(rows, cols, max_height, std::move(heights));
}

int PlanePartition::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) return 0;
    return heights_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
}

long long PlanePartition::volume() const {
    long long v = 0;
    for (int h : heights_) v += h;
    return v;
}

long long PlanePartition::trace() const {
    long long t = 0;
    for (int i = 1; i <= std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

Partition PlanePartition::trace_vector() const {
    std::vector<int> diag;
    for (int i = 1; i <= std::min(rows_, cols_); ++i)
        if (at(i, i) > 0) diag.push_back(at(i, i));
    return Partition(std::move(diag));
}

Partition PlanePartition::side_shape() const {
    std::vector<int> row;
    for (int j = 1; j <= cols_; ++j) row.push_back(at(1, j));
    return Partition::from_row(row);
}

Partition PlanePartition::layer(int level) const {
    std::vector<int> parts;
    for (int i = 1; i <= rows_; ++i) {
        int len = 0;
        while (len < cols_ && at(i, len + 1) >= level) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

std::vector<Corner3> PlanePartition::corner_set() const {
    std::vector<Corner3> out;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            const int top = at(i, j);
            const int floor = std::max(at(i + 1, j), at(i, j + 1));
            for (int level = top; level > floor; --level) out.push_back({i, j, level});
        }
    }
    return out;
}

int PlanePartition::corner_count() const { return static_cast<int>(corner_set().size()); }

long long PlanePartition::cornerhook_volume() const {
    long long total = 0;
    for (const Corner3& c : corner_set()) total += c.row + c.col - 1;
    return total;
}

PPStats pp_stats(const PlanePartition& pp) {
    PPStats s;
    s.volume = pp.volume();
    s.trace = pp.trace();
    s.trace_vector = pp.trace_vector();
    s.corners = pp.corner_set();
    s.cor = static_cast<int>(s.corners.size());
    for (const Corner3& c : s.corners) s.cornerhook += c.row + c.col - 1;
    return s;
}

namespace {

// Emits all weakly decreasing rows bounded entrywise by `bound`, in
// colexicographically descending order (rightmost entry varies slowest).
void gen_rows(const std::vector<int>& bound, std::vector<int>& row, int pos,
              const std::function<void(const std::vector<int>&)>& emit) {
    if (pos < 0) {
        emit(row);
        return;
    }
    const int lo = (pos + 1 < static_cast<int>(row.size())) ? row[pos + 1] : 0;
    for (int v = bound[pos]; v >= lo; --v) {
        row[pos] = v;
        gen_rows(bound, row, pos - 1, emit);
    }
}

struct PPGenerator {
    int a, b, c;
    std::vector<std::vector<int>> rows;
    const std::function<void(const PlanePartition&)>* fn;

    void run() {
        if (a == 0) {
            (*fn)(PlanePartition::zero(0, b, c));
            return;
        }
        next_row(std::vector<int>(b, c), 0);
    }

    void next_row(const std::vector<int>& bound, int row_idx) {
        if (row_idx == a) {
            std::vector<int> heights;
            heights.reserve(static_cast<std::size_t>(a) * b);
            for (const auto& r : rows) heights.insert(heights.end(), r.begin(), r.end());
            (*fn)(PlanePartition(a, b, c, std::move(heights)));
            return;
        }
        std::vector<int> row(b, 0);
        gen_rows(bound, row, b - 1, [this, row_idx](const std::vector<int>& r) {
            rows.push_back(r);
            next_row(r, row_idx + 1);
            rows.pop_back();
        });
    }
};

}  // namespace

void for_each_plane_partition(int a, int b, int c,
                              const std::function<void(const PlanePartition&)>& fn) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box dimensions must be >= 0");
    PPGenerator gen{a, b, c, {}, &fn};
    gen.run();
}

void for_each_plane_partition_with_first_row(
    const Partition& first_row, int max_rows,
    const std::function<void(const PlanePartition&)>& fn) {
    const int b = first_row.length();
    const int c = first_row.part(1);
    if (max_rows < 1) {
        if (first_row.empty()) fn(PlanePartition::zero(std::max(max_rows, 0), b, c));
        return;
    }
    std::vector<int> first(b);
    for (int j = 1; j <= b; ++j) first[j - 1] = first_row.part(j);
    PPGenerator gen{max_rows, b, c, {}, &fn};
    gen.rows.push_back(first);
    gen.next_row(first, 1);
}

}  // namespace boxpp
