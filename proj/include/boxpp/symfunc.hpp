#pragma once

#include "boxpp/partition.hpp"
#include "boxpp/poly.hpp"

namespace boxpp {

/// A prefix x1..xn or z1..zn of one variable family.
struct VarSet {
    VarKind kind = VarKind::X;  // X or Z only
    int count = 0;

    VarSet(VarKind k, int n);
    static VarSet x(int n) { return {VarKind::X, n}; }
    static VarSet z(int n) { return {VarKind::Z, n}; }

    VarId var(int i) const;
};

/// k-th elementary symmetric polynomial; 1 for k = 0, 0 for k < 0 or
/// k > count (in particular e_k of the empty variable set is k == 0).
MPoly elementary(int k, const VarSet& vars);

/// Determinant route: det(e_{conj(p)_i - i + j}) over i,j in [p_1].
/// Zero when the shape has more rows than variables.
MPoly schur_via_det(const Partition& p, const VarSet& vars);

/// Combinatorial route: sum over fillings of the shape with entries in
/// 1..count, rows weakly decreasing and columns strictly decreasing.
MPoly schur_via_tableaux(const Partition& p, const VarSet& vars);

/// Refined dual stable Grothendieck polynomial, combinatorial route: sum
/// over plane partitions with at most xcount rows and first row equal to p
/// of the product of x_row * z_col over all corners.
MPoly grothendieck_via_corners(const Partition& p, int xcount, int zcount);

/// Determinant route on its stated domain p_1 <= xcount; throws
/// std::domain_error outside it (callers fall back to the corner sum).
MPoly grothendieck_via_det(const Partition& p, int xcount, int zcount);

}  // namespace boxpp
