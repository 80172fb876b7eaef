#include "boxpp/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "boxpp/genfun.hpp"
#include "boxpp/lgv.hpp"
#include "boxpp/partition.hpp"
#include "boxpp/plane_partition.hpp"
#include "boxpp/poly.hpp"
#include "boxpp/symfunc.hpp"

namespace boxpp {

namespace {

std::string box_str(int a, int b, int c) {
    return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

std::string box_str(int m, int n) { return std::to_string(m) + "," + std::to_string(n); }

void check_equi(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 0; a <= o.max_a; ++a)
        for (int b = 0; b <= o.max_b; ++b)
            for (int c = 0; c <= o.max_c; ++c) {
                const EquiCheck r = check_equidistribution(a, b, c);
                out.push_back({"volume-trace-vs-cornerhook", box_str(a, b, c), r.equal,
                               r.equal ? "" : r.diff.str()});
            }
}

void check_lgv(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 0; a <= o.max_a; ++a) {
        for (int b = 0; b <= o.max_b; ++b) {
            for (int c = 0; c <= o.max_c; ++c) {
                const BoxParams box{a, b, c};

                bool pairwise = true;
                for (int i = 1; i <= c && pairwise; ++i)
                    for (int j = 1; j <= c && pairwise; ++j)
                        pairwise = pairwise_enumerator(i, j, box) ==
                                   pairwise_enumerator_formula(i, j, box);
                out.push_back({"pairwise-path-enumerator", box_str(a, b, c), pairwise, ""});

                const MPoly determinant = lgv_determinant(box);
                const std::vector<PathSystem> systems = enumerate_systems(box);
                MPoly system_sum;
                for (const PathSystem& s : systems) system_sum += s.weight();
                out.push_back({"nonintersecting-vs-determinant", box_str(a, b, c),
                               system_sum == determinant, ""});

                bool roundtrip = true;
                long long pp_count = 0;
                for_each_plane_partition(a, b, c, [&](const PlanePartition& pp) {
                    ++pp_count;
                    if (roundtrip) roundtrip = system_to_pp(pp_to_system(pp)) == pp;
                });
                roundtrip = roundtrip && pp_count == static_cast<long long>(systems.size());
                for (const PathSystem& s : systems) {
                    if (!roundtrip) break;
                    roundtrip = pp_to_system(system_to_pp(s)).paths() == s.paths();
                }
                out.push_back({"path-pp-roundtrip", box_str(a, b, c), roundtrip, ""});

                if (a <= 2 && b <= 2 && c <= 2) {
                    const MPoly signed_sum = signed_enumerator_bruteforce(box);
                    out.push_back({"signed-cancellation", box_str(a, b, c),
                                   signed_sum == determinant, ""});
                }

                out.push_back({"determinant-volume-specialization", box_str(a, b, c),
                               volume_via_det_check(a, b, c), ""});
            }
        }
    }
}

void check_schur(std::vector<CheckResult>& out) {
    const std::vector<Partition> shapes = enumerate_partitions(3, 3);
    for (int n = 0; n <= 4; ++n) {
        bool ok = true;
        for (const Partition& shape : shapes) {
            const VarSet xs = VarSet::x(n);
            if (schur_via_det(shape, xs) != schur_via_tableaux(shape, xs)) {
                ok = false;
                break;
            }
        }
        out.push_back({"schur-det-vs-tableaux", box_str(3, 3, n), ok, ""});
    }
}

void check_groth(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 1; a <= o.max_a; ++a) {
        for (int b = 1; b <= o.max_b; ++b) {
            bool ok = true;
            for (const Partition& shape : enumerate_partitions(b, 3)) {
                if (shape.part(1) > a) continue;  // outside the determinant's domain
                if (grothendieck_via_det(shape, a, b) != grothendieck_via_corners(shape, a, b)) {
                    ok = false;
                    break;
                }
            }
            out.push_back({"grothendieck-det-vs-corners", box_str(a, b, 3), ok, ""});
        }
    }
}

void check_macmahon(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 0; a <= o.max_a; ++a)
        for (int b = 0; b <= o.max_b; ++b)
            for (int c = 0; c <= o.max_c; ++c) {
                const MPoly product = macmahon_product(a, b, c);
                const MPoly volume_gf = substitute(
                    gf_volume_trace(a, b, c).poly,
                    std::function<MPoly(VarId)>([](VarId v) -> MPoly {
                        return v == VarId::t() ? MPoly(1) : MPoly::variable(v);
                    }));
                Int coeff_sum = 0;
                for (const auto& [m, coeff] : product.terms()) coeff_sum += coeff;
                const bool ok = product == volume_gf && coeff_sum == macmahon_count(a, b, c);
                out.push_back({"boxed-volume-product", box_str(a, b, c), ok,
                               ok ? "" : (product - volume_gf).str()});
            }
}

void check_stanley(const SuiteOptions& o, std::vector<CheckResult>& out) {
    const long long cap = 6;
    for (int a = 0; a <= o.max_a; ++a)
        for (int b = 0; b <= o.max_b; ++b) {
            const StanleyPair pair = stanley_truncated(a, b, cap);
            out.push_back({"volume-trace-series", box_str(a, b, static_cast<int>(cap)),
                           pair.enumeration == pair.product, ""});
        }
}

void check_fixed_trace(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 0; a <= o.max_a; ++a)
        for (int b = 0; b <= o.max_b; ++b)
            for (int c = 0; c <= o.max_c; ++c) {
                bool ok = true;
                MPoly lhs_sum;
                for (const Partition& shape : enumerate_partitions(std::min(a, b), c)) {
                    if (!fixed_trace_check(shape, a, b, c)) {
                        ok = false;
                        break;
                    }
                    lhs_sum += fixed_trace_lhs(shape, a, b);
                }
                out.push_back({"fixed-trace-gf", box_str(a, b, c), ok, ""});
                const bool unity = ok && lhs_sum == gf_volume_trace(a, b, c).poly;
                out.push_back({"fixed-trace-partition-of-unity", box_str(a, b, c), unity, ""});
            }
}

void check_partition_equi(const SuiteOptions& o, std::vector<CheckResult>& out) {
    const int max_m = o.max_given ? o.max_a : 8;
    const int max_n = o.max_given ? o.max_b : 8;
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n) {
            const auto [lhs, rhs] = partition_gf_pair(m, n);
            out.push_back({"partition-area-vs-cohook", box_str(m, n), lhs == rhs,
                           lhs == rhs ? "" : (lhs - rhs).str()});
        }

    const int nmax = o.max_given ? o.max_c : 12;
    const PQTables tables = pq_counts(nmax);
    const bool tables_equal = tables.p == tables.q;
    out.push_back({"pq-count-tables", std::to_string(nmax), tables_equal, ""});
}

void check_triangle(const SuiteOptions& o, std::vector<CheckResult>& out) {
    for (int a = 0; a <= o.max_a; ++a)
        for (int b = 0; b <= o.max_b; ++b)
            for (int c = 0; c <= o.max_c; ++c) {
                const TriangleCheck r = triangle_check(a, b, c);
                std::string detail;
                if (!r.all()) {
                    detail = std::string("schur=") + (r.schur_sum_equals_det ? "ok" : "bad") +
                             ",groth=" + (r.det_equals_grothendieck_sum ? "ok" : "bad") +
                             ",cauchy=" + (r.cauchy_truncation_matches ? "ok" : "bad");
                }
                out.push_back({"schur-grothendieck-triangle", box_str(a, b, c), r.all(), detail});
            }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"equi",    "lgv",         "schur",          "groth",    "macmahon",
            "stanley", "fixed-trace", "partition-equi", "triangle", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
    std::vector<CheckResult> out;
    bool known = false;
    auto wants = [&suite, &known](const char* name) {
        const bool match = suite == name || suite == "all";
        known = known || suite == name;
        return match;
    };
    if (wants("equi")) check_equi(opts, out);
    if (wants("lgv")) check_lgv(opts, out);
    if (wants("schur")) check_schur(out);
    if (wants("groth")) check_groth(opts, out);
    if (wants("macmahon")) check_macmahon(opts, out);
    if (wants("stanley")) check_stanley(opts, out);
    if (wants("fixed-trace")) check_fixed_trace(opts, out);
    if (wants("partition-equi")) check_partition_equi(opts, out);
    if (wants("triangle")) check_triangle(opts, out);
    if (!known && suite != "all") throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

std::string render_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const CheckResult& r : results) {
        os << "CHECK " << r.name << " box=" << r.box << " " << (r.pass ? "PASS" : "FAIL");
        if (!r.pass && !r.diff.empty()) os << " diff=" << r.diff;
        os << "\n";
    }
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace boxpp
