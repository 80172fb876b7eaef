#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace boxpp {

/// Exact signed integer coefficients. No rational arithmetic anywhere.
using Int = boost::multiprecision::cpp_int;

/// Variables of the ambient ring, ordered globally as
/// q < t < x1 < x2 < ... < z1 < z2 < ...
/// Canonical forms, term ordering and the text rendering all use this order.
enum class VarKind : std::uint8_t { Q, T, X, Z };

struct VarId {
    VarKind kind = VarKind::Q;
    int index = 0;  // 0 for q and t, >= 1 for x and z

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

    static constexpr VarId q() { return {VarKind::Q, 0}; }
    static constexpr VarId t() { return {VarKind::T, 0}; }
    static VarId x(int i);
    static VarId z(int i);

    std::string name() const;
};

/// Product of variables with positive exponents, stored sparsely in global
/// variable order. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial one() { return {}; }
    static Monomial var(VarId v, int exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    long long total_degree() const;
    int exponent_of(VarId v) const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Total degree first, then lexicographic comparison of the exponent vector
/// read in the global variable order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact integer coefficients, kept in
/// canonical form: no zero coefficients, no zero exponents, terms ordered by
/// MonomialOrder. Two values are equal iff their term maps are equal.
class MPoly {
public:
    using TermMap = std::map<Monomial, Int, MonomialOrder>;

    MPoly() = default;
    MPoly(long long constant);  // NOLINT: implicit by design (p + 1, 2 * p, ...)
    explicit MPoly(Int constant);

    static MPoly variable(VarId v, int exp = 1);
    static MPoly term(Int coeff, Monomial m);
    static MPoly from_term_map(TermMap terms);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Int coefficient(const Monomial& m) const;

    /// Largest exponent of v over all terms; -1 for the zero polynomial.
    long long degree_in(VarId v) const;
    /// Largest total degree over all terms; -1 for the zero polynomial.
    long long total_degree() const;
    /// Variables that actually occur, in global order.
    std::vector<VarId> variables() const;

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly& operator*=(const MPoly& other);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Canonical text form, e.g. "1 + q*t + 2*q^2*t". This is the CLI's
    /// bit-exact output contract.
    std::string str() const;

private:
    TermMap terms_;
};

MPoly pow(const MPoly& base, int exponent);

/// Simultaneous substitution; every variable occurring in p must be mapped.
MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& images);
MPoly substitute(const MPoly& p, const std::function<MPoly(VarId)>& image);

inline constexpr long long kNoDegreeLimit = std::numeric_limits<long long>::max();

/// Drops every term whose q-exponent exceeds max_degree.
MPoly truncate_q(const MPoly& p, long long max_degree);
/// Drops every term whose total degree exceeds max_degree.
MPoly truncate_total(const MPoly& p, long long max_degree);

struct PolyMatrix {
    int n = 0;
    std::vector<MPoly> entries;  // row-major, n*n

    PolyMatrix() = default;
    explicit PolyMatrix(int size);

    MPoly& at(int row, int col);
    const MPoly& at(int row, int col) const;
};

/// Exact determinant via Laplace expansion memoized over column subsets,
/// O(2^n * n) polynomial operations. det of the 0x0 matrix is 1.
MPoly det(const PolyMatrix& m);

}  // namespace boxpp
