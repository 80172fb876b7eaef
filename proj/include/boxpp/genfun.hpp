#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boxpp/partition.hpp"
#include "boxpp/poly.hpp"

namespace boxpp {

/// Bivariate (q, t) generating function of a named statistic pair over one
/// box of plane partitions.
struct GFTable {
    std::string label;
    std::array<int, 3> box{};
    MPoly poly;
};

/// Sum of q^volume * t^trace over the box.
GFTable gf_volume_trace(int a, int b, int c);
/// Sum of q^cornerhook * t^corners over the box.
GFTable gf_cornerhook_corners(int a, int b, int c);

struct EquiCheck {
    bool equal = false;
    MPoly diff;  // volume/trace side minus cornerhook/corners side
};

EquiCheck check_equidistribution(int a, int b, int c);

/// x_i -> q^i, z_i -> t*q^(i-1): turns path and corner weights into the
/// (q, t) gradings compared above.
MPoly specialize_volume_trace(const MPoly& p);
/// x_i -> q^i, z_i -> q^(i-1): volume grading only.
MPoly specialize_volume(const MPoly& p);
/// Exchanges q and t.
MPoly swap_qt(const MPoly& p);

/// Boxed volume generating function as the exact quotient of the two
/// products of (1 - q^{i+j+k-1}) over (1 - q^{i+j+k-2}); division proceeds
/// factor by factor with an exactness assertion.
MPoly macmahon_product(int a, int b, int c);
/// The same product at q -> 1, evaluated as an exact integer ratio: the
/// number of plane partitions in the box.
Int macmahon_count(int a, int b, int c);

struct StanleyPair {
    MPoly enumeration;  // boxed volume-trace GF truncated to q-degree N
    MPoly product;      // geometric-series expansion truncated the same way
};

/// Both sides of the unbounded-height volume-trace product formula,
/// truncated at q-degree N; entries above N cannot occur at volume <= N.
StanleyPair stanley_truncated(int a, int b, long long n_cap);

/// Schur product s_shape(q..q^a) * s_shape(t..t*q^{b-1}).
MPoly fixed_trace_lhs(const Partition& shape, int a, int b);
/// Enumeration restricted to plane partitions with the given trace vector.
MPoly fixed_trace_rhs(const Partition& shape, int a, int b, int c);
bool fixed_trace_check(const Partition& shape, int a, int b, int c);

/// Specialized path-system determinant against the t = 1 volume GF.
bool volume_via_det_check(int a, int b, int c);

/// Sum of q^volume * t^cornerhook over the box.
MPoly joint_gf(int a, int b, int c);
/// True iff joint_gf is invariant under exchanging q and t.
bool symmetry_check(int a, int b, int c);

struct AsymmetryWitness {
    bool symmetric = true;
    Monomial monomial;  // first term (canonical order) whose mirror differs
    Int coeff, mirror_coeff;
};

AsymmetryWitness find_asymmetry_witness(const MPoly& joint);

/// Area/Durfee vs cohook-area/corners equidistribution over a partition box.
std::pair<MPoly, MPoly> partition_gf_pair(int m, int n);
bool partition_equidistribution(int m, int n);

/// p(n,k): partitions with size n and Durfee side k; q(n,k): partitions with
/// cohook area n and k corners. Tabulated for all n <= nmax.
struct PQTables {
    int nmax = 0;
    std::map<std::pair<int, int>, long long> p, q;
    std::vector<long long> p_totals, q_totals;  // indexed by n
};

PQTables pq_counts(int nmax);

struct TriangleCheck {
    bool schur_sum_equals_det = false;
    bool det_equals_grothendieck_sum = false;
    bool cauchy_truncation_matches = false;
    bool all() const {
        return schur_sum_equals_det && det_equals_grothendieck_sum && cauchy_truncation_matches;
    }
};

/// The Schur pairing sum, the path-system determinant, the Grothendieck sum
/// and the truncated Cauchy product, checked against each other.
TriangleCheck triangle_check(int a, int b, int c);

}  // namespace boxpp
