#pragma once

#include <compare>
#include <functional>
#include <utility>
#include <vector>

namespace boxpp {

/// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Accepts trailing zeros and drops them; still requires weak decrease.
    static Partition from_row(const std::vector<int>& row);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long size() const;

    /// 1-indexed part, 0 beyond the length.
    int part(int i) const;
    bool contains_cell(int row, int col) const;
    /// Diagram containment.
    bool contains(const Partition& other) const;

    Partition conjugate() const;
    int durfee() const;
    /// Hook length of the diagonal cell (i,i), 1 <= i <= durfee().
    long long diagonal_hook(int i) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Diagonal-hook coordinates; the diagonal cell is counted in both the arm
/// and the leg, so arm_i + leg_i - 1 is the i-th diagonal hook length.
struct FrobeniusCoords {
    std::vector<int> arms;  // strictly decreasing, >= 1
    std::vector<int> legs;  // strictly decreasing, >= 1
};

FrobeniusCoords to_frobenius(const Partition& p);
/// Inverse of to_frobenius; throws std::invalid_argument on malformed input.
Partition from_frobenius(const FrobeniusCoords& f);

/// Outer corners (cells with no cell below or to the right), canonically
/// ordered by row descending; columns then ascend strictly.
struct CornerCoords {
    std::vector<std::pair<int, int>> cells;
};

CornerCoords corners(const Partition& p);
/// Minimal partition having exactly the given corner cells; throws
/// std::invalid_argument when the cells cannot all be corners of one shape.
Partition from_corners(const CornerCoords& c);

int corner_count(const Partition& p);
/// Sum of i + j - 1 over the corners of p.
long long cohook_area(const Partition& p);

/// Statistic-transporting bijection: reads the Frobenius coordinates of p
/// and reinterprets them as corner coordinates. Sends (size, durfee) to
/// (cohook_area, corner_count) and preserves any bounding box.
Partition phi(const Partition& p);
Partition phi_inverse(const Partition& p);

/// All partitions with at most max_rows parts, each at most max_cols,
/// ordered by size then lexicographically by parts.
std::vector<Partition> enumerate_partitions(int max_rows, int max_cols);

/// Visitor form; deterministic recursion order, cheaper for large boxes.
void for_each_partition_in_box(int max_rows, int max_cols,
                               const std::function<void(const Partition&)>& fn);

}  // namespace boxpp
