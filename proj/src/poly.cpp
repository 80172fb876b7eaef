#include "boxpp/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace boxpp {

VarId VarId::x(int i) {
    if (i < 1) throw std::invalid_argument("x index must be >= 1");
    return {VarKind::X, i};
}

VarId VarId::z(int i) {
    if (i < 1) throw std::invalid_argument("z index must be >= 1");
    return {VarKind::Z, i};
}

std::string VarId::name() const {
    switch (kind) {
        case VarKind::Q: return "q";
        case VarKind::T: return "t";
        case VarKind::X: return "x" + std::to_string(index);
        case VarKind::Z: return "z" + std::to_string(index);
    }
    return "?";
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    for (const auto& [v, e] : factors_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::var(VarId v, int exp) { return Monomial({{v, exp}}); }

long long Monomial::total_degree() const {
    long long d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto ia = factors_.begin(), ea = factors_.end();
    auto ib = other.factors_.begin(), eb = other.factors_.end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.factors_.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first == ib->first) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        } else if (ia->first < ib->first) {
            return false;  // a has a positive exponent where b has zero
        } else {
            return true;
        }
    }
    return ib != eb;
}

MPoly::MPoly(long long constant) {
    if (constant != 0) terms_.emplace(Monomial::one(), Int(constant));
}

MPoly::MPoly(Int constant) {
    if (constant != 0) terms_.emplace(Monomial::one(), std::move(constant));
}

MPoly MPoly::variable(VarId v, int exp) { return term(1, Monomial::var(v, exp)); }

MPoly MPoly::term(Int coeff, Monomial m) {
    MPoly p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

MPoly MPoly::from_term_map(TermMap terms) {
    MPoly p;
    p.terms_ = std::move(terms);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        if (it->second == 0)
            it = p.terms_.erase(it);
        else
            ++it;
    }
    return p;
}

Int MPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

long long MPoly::degree_in(VarId v) const {
    long long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.exponent_of(v));
    return is_zero() ? -1 : std::max<long long>(d, 0);
}

long long MPoly::total_degree() const {
    long long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::vector<VarId> MPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

MPoly& MPoly::operator+=(const MPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly::TermMap out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            auto [it, inserted] = out.emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return MPoly::from_term_map(std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly MPoly::operator-() const {
    MPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Int abs_c = negative ? Int(-c) : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (m.is_one()) {
            os << abs_c.str();
            continue;
        }
        bool needs_star = false;
        if (abs_c != 1) {
            os << abs_c.str();
            needs_star = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (needs_star) os << "*";
            os << v.name();
            if (e != 1) os << "^" << e;
            needs_star = true;
        }
    }
    return os.str();
}

MPoly pow(const MPoly& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative power");
    MPoly result = 1;
    MPoly acc = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= acc;
        e >>= 1;
        if (e > 0) acc *= acc;
    }
    return result;
}

MPoly substitute(const MPoly& p, const std::function<MPoly(VarId)>& image) {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        MPoly term{c};
        for (const auto& [v, e] : m.factors()) term *= pow(image(v), e);
        out += term;
    }
    return out;
}

MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& images) {
    return substitute(p, std::function<MPoly(VarId)>([&images](VarId v) -> MPoly {
                          auto it = images.find(v);
                          if (it == images.end())
                              throw std::invalid_argument("substitute: no image for variable " +
                                                          v.name());
                          return it->second;
                      }));
}

MPoly truncate_q(const MPoly& p, long long max_degree) {
    if (max_degree == kNoDegreeLimit) return p;
    if (max_degree < 0) throw std::invalid_argument("truncate_q: negative degree cap");
    MPoly::TermMap out;
    for (const auto& [m, c] : p.terms())
        if (m.exponent_of(VarId::q()) <= max_degree) out.emplace(m, c);
    return MPoly::from_term_map(std::move(out));
}

MPoly truncate_total(const MPoly& p, long long max_degree) {
    if (max_degree == kNoDegreeLimit) return p;
    MPoly::TermMap out;
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() <= max_degree) out.emplace(m, c);
    return MPoly::from_term_map(std::move(out));
}

PolyMatrix::PolyMatrix(int size) : n(size), entries(static_cast<std::size_t>(size) * size) {
    if (size < 0) throw std::invalid_argument("matrix dimension must be >= 0");
}

MPoly& PolyMatrix::at(int row, int col) { return entries[static_cast<std::size_t>(row) * n + col]; }

const MPoly& PolyMatrix::at(int row, int col) const {
    return entries[static_cast<std::size_t>(row) * n + col];
}

MPoly det(const PolyMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    // minor[mask] = det of the submatrix on rows 0..popcount(mask)-1 and
    // the column set encoded by mask.
    std::vector<MPoly> minor(std::size_t(1) << n);
    minor[0] = 1;
    std::vector<std::vector<std::uint32_t>> by_popcount(n + 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask)
        by_popcount[__builtin_popcount(mask)].push_back(mask);
    for (int k = 1; k <= n; ++k) {
        for (std::uint32_t mask : by_popcount[k]) {
            MPoly acc;
            int pos = 0;
            for (int col = 0; col < n; ++col) {
                if (!(mask & (std::uint32_t(1) << col))) continue;
                const MPoly& entry = m.at(k - 1, col);
                if (!entry.is_zero()) {
                    MPoly contribution = entry * minor[mask ^ (std::uint32_t(1) << col)];
                    if (((k - 1) + pos) % 2 == 0)
                        acc += contribution;
                    else
                        acc -= contribution;
                }
                ++pos;
            }
            minor[mask] = std::move(acc);
        }
    }
    return minor[(std::uint32_t(1) << n) - 1];
}

}  // namespace boxpp
