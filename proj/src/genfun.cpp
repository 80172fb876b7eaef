#include "boxpp/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "boxpp/lgv.hpp"
#include "boxpp/plane_partition.hpp"
#include "boxpp/symfunc.hpp"

namespace boxpp {

namespace {

Monomial qt_monomial(long long q_exp, long long t_exp) {
    std::vector<Monomial::Factor> factors;
    if (q_exp > 0) factors.emplace_back(VarId::q(), static_cast<int>(q_exp));
    if (t_exp > 0) factors.emplace_back(VarId::t(), static_cast<int>(t_exp));
    return Monomial{std::move(factors)};
}

GFTable accumulate_pp_gf(const std::string& label, int a, int b, int c,
                         long long (*q_stat)(const PPStats&),
                         long long (*t_stat)(const PPStats&)) {
    std::map<std::pair<long long, long long>, Int> counts;
    for_each_plane_partition(a, b, c, [&](const PlanePartition& pp) {
        const PPStats s = pp_stats(pp);
        ++counts[{q_stat(s), t_stat(s)}];
    });
    MPoly::TermMap terms;
    for (const auto& [key, count] : counts) terms.emplace(qt_monomial(key.first, key.second), count);
    return GFTable{label, {a, b, c}, MPoly::from_term_map(std::move(terms))};
}

}  // namespace

GFTable gf_volume_trace(int a, int b, int c) {
    return accumulate_pp_gf(
        "volume-trace", a, b, c, [](const PPStats& s) { return s.volume; },
        [](const PPStats& s) { return s.trace; });
}

GFTable gf_cornerhook_corners(int a, int b, int c) {
    return accumulate_pp_gf(
        "cornerhook-corners", a, b, c, [](const PPStats& s) { return s.cornerhook; },
        [](const PPStats& s) { return static_cast<long long>(s.cor); });
}

EquiCheck check_equidistribution(int a, int b, int c) {
    const MPoly lhs = gf_volume_trace(a, b, c).poly;
    const MPoly rhs = gf_cornerhook_corners(a, b, c).poly;
    return EquiCheck{lhs == rhs, lhs - rhs};
}

MPoly specialize_volume_trace(const MPoly& p) {
    return substitute(p, std::function<MPoly(VarId)>([](VarId v) -> MPoly {
                          switch (v.kind) {
                              case VarKind::X: return MPoly::variable(VarId::q(), v.index);
                              case VarKind::Z:
                                  return v.index == 1
                                             ? MPoly::variable(VarId::t())
                                             : MPoly::variable(VarId::t()) *
                                                   MPoly::variable(VarId::q(), v.index - 1);
                              default: return MPoly::variable(v);
                          }
                      }));
}

MPoly specialize_volume(const MPoly& p) {
    return substitute(p, std::function<MPoly(VarId)>([](VarId v) -> MPoly {
                          switch (v.kind) {
                              case VarKind::X: return MPoly::variable(VarId::q(), v.index);
                              case VarKind::Z:
                                  return v.index == 1 ? MPoly(1)
                                                      : MPoly::variable(VarId::q(), v.index - 1);
                              default: return MPoly::variable(v);
                          }
                      }));
}

MPoly swap_qt(const MPoly& p) {
    return substitute(p, std::function<MPoly(VarId)>([](VarId v) -> MPoly {
                          if (v == VarId::q()) return MPoly::variable(VarId::t());
                          if (v == VarId::t()) return MPoly::variable(VarId::q());
                          return MPoly::variable(v);
                      }));
}

namespace {

// Dense q-coefficient vector of a univariate polynomial in q.
std::vector<Int> dense_q(const MPoly& p) {
    std::vector<Int> coeffs(static_cast<std::size_t>(std::max<long long>(p.degree_in(VarId::q()), 0)) + 1,
                            Int(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.total_degree() != m.exponent_of(VarId::q()))
            throw std::invalid_argument("polynomial is not univariate in q");
        coeffs[static_cast<std::size_t>(m.exponent_of(VarId::q()))] = c;
    }
    return coeffs;
}

MPoly from_dense_q(const std::vector<Int>& coeffs) {
    MPoly::TermMap terms;
    for (std::size_t d = 0; d < coeffs.size(); ++d)
        if (coeffs[d] != 0) terms.emplace(qt_monomial(static_cast<long long>(d), 0), coeffs[d]);
    return MPoly::from_term_map(std::move(terms));
}

// Exact series division by (1 - q^m); throws if the division is inexact.
std::vector<Int> divide_by_one_minus_qm(const std::vector<Int>& num, int m) {
    const long long deg = static_cast<long long>(num.size()) - 1;
    if (deg < m) throw std::invalid_argument("inexact division: degree below divisor");
    std::vector<Int> quot(num.size(), Int(0));
    for (long long d = 0; d <= deg; ++d) {
        quot[d] = num[d];
        if (d >= m) quot[d] += quot[d - m];
    }
    for (long long d = deg - m + 1; d <= deg; ++d)
        if (quot[d] != 0) throw std::invalid_argument("inexact division by 1 - q^m");
    quot.resize(static_cast<std::size_t>(deg - m) + 1);
    return quot;
}

}  // namespace

MPoly macmahon_product(int a, int b, int c) {
    MPoly numerator = 1;
    const MPoly one = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k)
                numerator *= one - MPoly::variable(VarId::q(), i + j + k - 1);
    std::vector<Int> coeffs = dense_q(numerator);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) coeffs = divide_by_one_minus_qm(coeffs, i + j + k - 2);
    return from_dense_q(coeffs);
}

Int macmahon_count(int a, int b, int c) {
    Int num = 1, den = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
    if (num % den != 0) throw std::logic_error("box count ratio is not an integer");
    return num / den;
}

StanleyPair stanley_truncated(int a, int b, long long n_cap) {
    if (n_cap < 0) throw std::invalid_argument("truncation degree must be >= 0");
    StanleyPair pair;
    pair.enumeration = truncate_q(gf_volume_trace(a, b, static_cast<int>(n_cap)).poly, n_cap);
    MPoly product = 1;
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            const int h = i + j - 1;
            MPoly factor;
            for (long long m = 0; m * h <= n_cap; ++m)
                factor += MPoly::term(1, qt_monomial(m * h, m));
            product = truncate_q(product * factor, n_cap);
        }
    }
    pair.product = product;
    return pair;
}

MPoly fixed_trace_lhs(const Partition& shape, int a, int b) {
    const MPoly sx = schur_via_det(shape, VarSet::x(a));
    const MPoly sz = schur_via_det(shape, VarSet::z(b));
    return specialize_volume_trace(sx * sz);
}

MPoly fixed_trace_rhs(const Partition& shape, int a, int b, int c) {
    MPoly::TermMap terms;
    std::map<std::pair<long long, long long>, Int> counts;
    for_each_plane_partition(a, b, c, [&](const PlanePartition& pp) {
        if (pp.trace_vector() == shape) ++counts[{pp.volume(), pp.trace()}];
    });
    for (const auto& [key, count] : counts) terms.emplace(qt_monomial(key.first, key.second), count);
    return MPoly::from_term_map(std::move(terms));
}

bool fixed_trace_check(const Partition& shape, int a, int b, int c) {
    return fixed_trace_lhs(shape, a, b) == fixed_trace_rhs(shape, a, b, c);
}

bool volume_via_det_check(int a, int b, int c) {
    const MPoly specialized = specialize_volume(lgv_determinant({a, b, c}));
    const MPoly volume_gf = substitute(
        gf_volume_trace(a, b, c).poly, std::function<MPoly(VarId)>([](VarId v) -> MPoly {
            return v == VarId::t() ? MPoly(1) : MPoly::variable(v);
        }));
    return specialized == volume_gf;
}

MPoly joint_gf(int a, int b, int c) {
    return accumulate_pp_gf(
               "volume-cornerhook", a, b, c, [](const PPStats& s) { return s.volume; },
               [](const PPStats& s) { return s.cornerhook; })
        .poly;
}

bool symmetry_check(int a, int b, int c) {
    const MPoly joint = joint_gf(a, b, c);
    return joint == swap_qt(joint);
}

AsymmetryWitness find_asymmetry_witness(const MPoly& joint) {
    AsymmetryWitness w;
    const MPoly mirrored = swap_qt(joint);
    for (const auto& [m, coeff] : joint.terms()) {
        const Int other = mirrored.coefficient(m);
        if (other != coeff) {
            w.symmetric = false;
            w.monomial = m;
            w.coeff = coeff;
            w.mirror_coeff = other;
            return w;
        }
    }
    // joint and mirrored have equal coefficients on joint's support; any
    // extra term of mirrored would already differ there, so they are equal.
    return w;
}

std::pair<MPoly, MPoly> partition_gf_pair(int m, int n) {
    std::map<std::pair<long long, long long>, Int> area_counts, cohook_counts;
    for_each_partition_in_box(m, n, [&](const Partition& p) {
        ++area_counts[{p.size(), p.durfee()}];
        ++cohook_counts[{cohook_area(p), corner_count(p)}];
    });
    MPoly::TermMap lhs, rhs;
    for (const auto& [key, count] : area_counts)
        lhs.emplace(qt_monomial(key.first, key.second), count);
    for (const auto& [key, count] : cohook_counts)
        rhs.emplace(qt_monomial(key.first, key.second), count);
    return {MPoly::from_term_map(std::move(lhs)), MPoly::from_term_map(std::move(rhs))};
}

bool partition_equidistribution(int m, int n) {
    const auto [lhs, rhs] = partition_gf_pair(m, n);
    return lhs == rhs;
}

PQTables pq_counts(int nmax) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    PQTables tables;
    tables.nmax = nmax;
    tables.p_totals.assign(nmax + 1, 0);
    tables.q_totals.assign(nmax + 1, 0);
    // Partitions inside [nmax] x [nmax] suffice: a corner at (i, j)
    // contributes i + j - 1 >= max(i, j) to the cohook area, and more than
    // nmax rows or columns forces size > nmax.
    for_each_partition_in_box(nmax, nmax, [&](const Partition& p) {
        const long long size = p.size();
        if (size <= nmax) {
            ++tables.p[{static_cast<int>(size), p.durfee()}];
            ++tables.p_totals[static_cast<std::size_t>(size)];
        }
        const long long cohook = cohook_area(p);
        if (cohook <= nmax) {
            ++tables.q[{static_cast<int>(cohook), corner_count(p)}];
            ++tables.q_totals[static_cast<std::size_t>(cohook)];
        }
    });
    return tables;
}

TriangleCheck triangle_check(int a, int b, int c) {
    TriangleCheck result;
    const MPoly determinant = lgv_determinant({a, b, c});

    MPoly schur_sum;
    for (const Partition& shape : enumerate_partitions(std::min(a, b), c))
        schur_sum += schur_via_det(shape, VarSet::x(a)) * schur_via_det(shape, VarSet::z(b));
    result.schur_sum_equals_det = schur_sum == determinant;

    MPoly grothendieck_sum;
    for (const Partition& shape : enumerate_partitions(b, c))
        grothendieck_sum += grothendieck_via_corners(shape, a, b);
    result.det_equals_grothendieck_sum = determinant == grothendieck_sum;

    const long long cap = 2LL * c;
    MPoly cauchy = 1;
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            MPoly factor;
            const Monomial xz = Monomial::var(VarId::x(i)) * Monomial::var(VarId::z(j));
            for (long long m = 0; 2 * m <= cap; ++m) {
                Monomial power = Monomial::one();
                for (long long r = 0; r < m; ++r) power = power * xz;
                factor += MPoly::term(1, power);
            }
            cauchy = truncate_total(cauchy * factor, cap);
        }
    }
    result.cauchy_truncation_matches = truncate_total(schur_sum, cap) == cauchy;
    return result;
}

}  // namespace boxpp
