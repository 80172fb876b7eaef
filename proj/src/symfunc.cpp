#include "boxpp/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxpp/plane_partition.hpp"

namespace boxpp {

VarSet::VarSet(VarKind k, int n) : kind(k), count(n) {
    if (k != VarKind::X && k != VarKind::Z)
        throw std::invalid_argument("variable set must be the x or the z family");
    if (n < 0) throw std::invalid_argument("variable count must be >= 0");
}

VarId VarSet::var(int i) const {
    return kind == VarKind::X ? VarId::x(i) : VarId::z(i);
}

MPoly elementary(int k, const VarSet& vars) {
    if (k < 0 || k > vars.count) return 0;
    if (k == 0) return 1;
    // Coefficients of y^j in the product of (1 + v*y) over the set.
    std::vector<MPoly> e(k + 1);
    e[0] = 1;
    for (int i = 1; i <= vars.count; ++i) {
        const MPoly v = MPoly::variable(vars.var(i));
        for (int j = std::min(i, k); j >= 1; --j) e[j] += e[j - 1] * v;
    }
    return e[k];
}

MPoly schur_via_det(const Partition& p, const VarSet& vars) {
    if (p.empty()) return 1;
    if (p.length() > vars.count) return 0;
    const Partition conj = p.conjugate();
    const int n = p.part(1);
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = elementary(conj.part(i) - i + j, vars);
    return det(m);
}

namespace {

void fill_tableaux(const Partition& shape, const VarSet& vars, int row, int col,
                   std::vector<std::vector<int>>& filling, std::vector<int>& exponents,
                   MPoly::TermMap& acc) {
    if (row > shape.length()) {
        std::vector<Monomial::Factor> factors;
        for (int v = 1; v <= vars.count; ++v)
            if (exponents[v] > 0) factors.emplace_back(vars.var(v), exponents[v]);
        Monomial mono{std::move(factors)};
        auto [it, inserted] = acc.emplace(std::move(mono), 1);
        if (!inserted) ++it->second;
        return;
    }
    const int next_row = (col == shape.part(row)) ? row + 1 : row;
    const int next_col = (col == shape.part(row)) ? 1 : col + 1;
    int hi = vars.count;
    if (col > 1) hi = std::min(hi, filling[row][col - 1]);
    if (row > 1) hi = std::min(hi, filling[row - 1][col] - 1);
    for (int v = hi; v >= 1; --v) {
        filling[row][col] = v;
        ++exponents[v];
        fill_tableaux(shape, vars, next_row, next_col, filling, exponents, acc);
        --exponents[v];
    }
}

}  // namespace

MPoly schur_via_tableaux(const Partition& p, const VarSet& vars) {
    if (p.empty()) return 1;
    MPoly::TermMap acc;
    std::vector<std::vector<int>> filling(p.length() + 1,
                                          std::vector<int>(p.part(1) + 1, 0));
    std::vector<int> exponents(vars.count + 1, 0);
    fill_tableaux(p, vars, 1, 1, filling, exponents, acc);
    return MPoly::from_term_map(std::move(acc));
}

namespace {

Monomial corner_weight(const PlanePartition& pp) {
    std::vector<Monomial::Factor> factors;
    for (const Corner3& c : pp.corner_set()) {
        factors.emplace_back(VarId::x(c.row), 1);
        factors.emplace_back(VarId::z(c.col), 1);
    }
    return Monomial{std::move(factors)};
}

}  // namespace

MPoly grothendieck_via_corners(const Partition& p, int xcount, int zcount) {
    if (p.length() > zcount)
        throw std::invalid_argument("shape has more parts than z variables");
    if (xcount < 0) throw std::invalid_argument("xcount must be >= 0");
    if (p.empty()) return 1;
    if (xcount == 0) return 0;  // no rows can carry a nonempty side shape
    MPoly::TermMap acc;
    for_each_plane_partition_with_first_row(p, xcount, [&acc](const PlanePartition& pp) {
        auto [it, inserted] = acc.emplace(corner_weight(pp), 1);
        if (!inserted) ++it->second;
    });
    return MPoly::from_term_map(std::move(acc));
}

MPoly grothendieck_via_det(const Partition& p, int xcount, int zcount) {
    if (p.part(1) > xcount)
        throw std::domain_error("determinant formula requires p_1 <= xcount");
    if (p.length() > zcount)
        throw std::invalid_argument("shape has more parts than z variables");
    if (p.empty()) return 1;
    const Partition conj = p.conjugate();
    const VarSet xs = VarSet::x(xcount);
    const int n = p.part(1);
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        const int col_len = conj.part(i);  // >= 1 for i <= p_1
        const VarSet zs = VarSet::z(col_len - 1);
        const MPoly z_head = MPoly::variable(VarId::z(col_len));
        for (int j = 1; j <= n; ++j) {
            MPoly sum;
            // Paths resuming below a first left edge at level col_len need a
            // net shift of j - i + 1 right steps; hence the index offset.
            for (int k = 0; k <= col_len - 1; ++k)
                sum += elementary(j - i + 1 + k, xs) * elementary(k, zs);
            m.at(i - 1, j - 1) = z_head * sum;
        }
    }
    return det(m);
}

}  // namespace boxpp
