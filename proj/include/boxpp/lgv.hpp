#pragma once

#include <array>
#include <string>
#include <vector>

#include "boxpp/partition.hpp"
#include "boxpp/plane_partition.hpp"
#include "boxpp/poly.hpp"

namespace boxpp {

/// Lattice dimensions: a wall levels (x weights), b floor levels (z
/// weights), c sources/sinks. Degenerate zero values follow the empty-object
/// conventions of the operations below.
struct BoxParams {
    int a = 0;
    int b = 0;
    int c = 0;
};

/// Path from A_i = (i, 0, b) to B_j = (j, a, 0): first crawls on the floor
/// (forward or left per z level, left carrying weight z_level), then climbs
/// the wall (up or right per y level, right carrying weight x_level).
class LatticePath {
public:
    /// floor_word is read from z = b down to z = 1 over {F, L}; wall_word
    /// from y = 1 up to y = a over {U, R}. Requires #L - #R == source - sink.
    LatticePath(int source, int sink, std::string floor_word, std::string wall_word);

    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::string& floor_word() const { return floor_word_; }
    const std::string& wall_word() const { return wall_word_; }
    int floor_levels() const { return static_cast<int>(floor_word_.size()); }
    int wall_levels() const { return static_cast<int>(wall_word_.size()); }

    int left_count() const;
    /// z levels of the left steps, in path order (descending).
    std::vector<int> left_levels() const;
    /// x levels of the right steps, in path order (ascending).
    std::vector<int> right_levels() const;

    /// Product of all edge weights: a monomial in the z's and x's.
    MPoly weight() const;

    /// Every lattice point visited, sources and sinks included.
    std::vector<std::array<int, 3>> vertices() const;

    /// "i->j:FLOOR=FFLF;WALL=URRU"
    std::string serialize() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    int source_ = 0, sink_ = 0;
    std::string floor_word_, wall_word_;
};

/// All paths from A_source to B_sink in the given box, deterministic order.
std::vector<LatticePath> enumerate_paths(int source, int sink, const BoxParams& box);

/// Brute-force weighted enumerator: sum of path weights A_source -> B_sink.
MPoly pairwise_enumerator(int source, int sink, const BoxParams& box);

/// Closed form of the same enumerator: sum over k of e_k(z_b) *
/// e_{sink-source+k}(x_a).
MPoly pairwise_enumerator_formula(int source, int sink, const BoxParams& box);

/// Determinant of the c x c matrix of pairwise enumerators (closed form).
MPoly lgv_determinant(const BoxParams& box);

/// c paths, path i from A_i to B_{twist(i)}.
class PathSystem {
public:
    PathSystem(BoxParams box, std::vector<LatticePath> paths);

    const BoxParams& box() const { return box_; }
    const std::vector<LatticePath>& paths() const { return paths_; }
    const LatticePath& path(int i) const { return paths_[i - 1]; }

    /// Sink permutation; identity for nonintersecting systems.
    std::vector<int> twist() const;
    int sign() const;
    bool nonintersecting() const;
    MPoly weight() const;

private:
    BoxParams box_;
    std::vector<LatticePath> paths_;
};

/// All vertex-disjoint identity-twist systems, each exactly once,
/// deterministic depth-first order.
std::vector<PathSystem> enumerate_systems(const BoxParams& box);

/// Sum over all twisted systems (intersecting included) of sign * weight.
/// Exponential scan; throws std::invalid_argument beyond a, b, c <= 2.
MPoly signed_enumerator_bruteforce(const BoxParams& box);

/// Splitting data of a nonintersecting system at the x axis: the partition
/// conjugate to the per-path left-step counts, plus the floor and wall
/// weight factors.
struct AxisSplit {
    Partition shape;
    MPoly floor_weight;
    MPoly wall_weight;
};

AxisSplit split_at_axis(const PathSystem& s);

/// Partition conjugate to the vector of first-left-edge levels (0 when a
/// path has no left edge); groups systems by Grothendieck index.
Partition first_left_edge_shape(const PathSystem& s);

/// Bijection with boxed plane partitions: path i encodes, through its left
/// (leg) and right (arm) levels, the Frobenius coordinates of the partition
/// conjugate to layer i of the plane partition.
PlanePartition system_to_pp(const PathSystem& s);
PathSystem pp_to_system(const PlanePartition& pp);

}  // namespace boxpp
