#pragma once

#include <array>
#include <compare>
#include <functional>
#include <vector>

#include "boxpp/partition.hpp"

namespace boxpp {

/// Box cell of the 3d diagram with no box behind (row+1) or to the right
/// (col+1) of it on the same level.
struct Corner3 {
    int row = 0;
    int col = 0;
    int level = 0;

    friend constexpr auto operator<=>(const Corner3&, const Corner3&) = default;
};

/// Plane partition inside a fixed box: a rows x b cols height matrix with
/// entries in [0, c], rows and columns weakly decreasing. The box is part of
/// the value; the statistics do not depend on it.
class PlanePartition {
public:
    PlanePartition(int rows, int cols, int max_height, std::vector<int> heights);

    static PlanePartition zero(int rows, int cols, int max_height);
    static PlanePartition from_rows(int rows, int cols, int max_height,
                                    const std::vector<std::vector<int>>& row_data);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int max_height() const { return max_height_; }

    /// 1-indexed height, 0 outside the matrix.
    int at(int row, int col) const;
    const std::vector<int>& heights() const { return heights_; }

    long long volume() const;
    long long trace() const;
    /// Nonzero diagonal entries, weakly decreasing.
    Partition trace_vector() const;
    /// Partition formed by the first row.
    Partition side_shape() const;
    /// Layer at the given level: cells with height >= level.
    Partition layer(int level) const;

    /// Corners in scan order: cells row-major, levels descending per cell.
    std::vector<Corner3> corner_set() const;
    int corner_count() const;
    /// Sum of row + col - 1 over the corner set.
    long long cornerhook_volume() const;

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

private:
    int rows_ = 0, cols_ = 0, max_height_ = 0;
    std::vector<int> heights_;  // row-major
};

struct PPStats {
    long long volume = 0;
    long long trace = 0;
    Partition trace_vector;
    std::vector<Corner3> corners;
    int cor = 0;
    long long cornerhook = 0;
};

PPStats pp_stats(const PlanePartition& pp);

/// Every plane partition in the box exactly once. Rows are generated
/// top-down, each bounded entrywise by the previous row; candidate rows are
/// visited in colexicographically descending order.
void for_each_plane_partition(int a, int b, int c,
                              const std::function<void(const PlanePartition&)>& fn);

/// As above but with the first row pinned; drives the corner-weight sums.
void for_each_plane_partition_with_first_row(
    const Partition& first_row, int max_rows,
    const std::function<void(const PlanePartition&)>& fn);

}  // namespace boxpp
