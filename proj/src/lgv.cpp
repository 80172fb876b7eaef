#include "boxpp/lgv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "boxpp/symfunc.hpp"

namespace boxpp {

LatticePath::LatticePath(int source, int sink, std::string floor_word, std::string wall_word)
    : source_(source), sink_(sink), floor_word_(std::move(floor_word)),
      wall_word_(std::move(wall_word)) {
    int lefts = 0, rights = 0;
    for (char ch : floor_word_) {
        if (ch != 'F' && ch != 'L') throw std::invalid_argument("floor word must be over {F, L}");
        lefts += ch == 'L';
    }
    for (char ch : wall_word_) {
        if (ch != 'U' && ch != 'R') throw std::invalid_argument("wall word must be over {U, R}");
        rights += ch == 'R';
    }
    if (lefts - rights != source_ - sink_)
        throw std::invalid_argument("left/right step counts do not connect source to sink");
}

int LatticePath::left_count() const {
    return static_cast<int>(std::count(floor_word_.begin(), floor_word_.end(), 'L'));
}

std::vector<int> LatticePath::left_levels() const {
    std::vector<int> levels;
    const int b = floor_levels();
    for (int k = 0; k < b; ++k)
        if (floor_word_[k] == 'L') levels.push_back(b - k);
    return levels;
}

std::vector<int> LatticePath::right_levels() const {
    std::vector<int> levels;
    for (int k = 0; k < wall_levels(); ++k)
        if (wall_word_[k] == 'R') levels.push_back(k + 1);
    return levels;
}

MPoly LatticePath::weight() const {
    std::vector<Monomial::Factor> factors;
    for (int level : left_levels()) factors.emplace_back(VarId::z(level), 1);
    for (int level : right_levels()) factors.emplace_back(VarId::x(level), 1);
    return MPoly::term(1, Monomial{std::move(factors)});
}

std::vector<std::array<int, 3>> LatticePath::vertices() const {
    std::vector<std::array<int, 3>> pts;
    const int b = floor_levels(), a = wall_levels();
    int x = source_;
    pts.push_back({x, 0, b});
    for (int k = 0; k < b; ++k) {
        if (floor_word_[k] == 'L') --x;
        pts.push_back({x, 0, b - k - 1});
    }
    for (int k = 0; k < a; ++k) {
        if (wall_word_[k] == 'R') ++x;
        pts.push_back({x, k + 1, 0});
    }
    return pts;
}

std::string LatticePath::serialize() const {
    return std::to_string(source_) + "->" + std::to_string(sink_) + ":FLOOR=" + floor_word_ +
           ";WALL=" + wall_word_;
}

std::vector<LatticePath> enumerate_paths(int source, int sink, const BoxParams& box) {
    std::vector<LatticePath> out;
    for (unsigned fmask = 0; fmask < (1u << box.b); ++fmask) {
        const int lefts = __builtin_popcount(fmask);
        const int rights = lefts - (source - sink);
        if (rights < 0 || rights > box.a) continue;
        std::string floor(box.b, 'F');
        for (int k = 0; k < box.b; ++k)
            if (fmask & (1u << k)) floor[k] = 'L';
        for (unsigned wmask = 0; wmask < (1u << box.a); ++wmask) {
            if (__builtin_popcount(wmask) != rights) continue;
            std::string wall(box.a, 'U');
            for (int k = 0; k < box.a; ++k)
                if (wmask & (1u << k)) wall[k] = 'R';
            out.emplace_back(source, sink, floor, wall);
        }
    }
    return out;
}

MPoly pairwise_enumerator(int source, int sink, const BoxParams& box) {
    MPoly sum;
    for (const LatticePath& p : enumerate_paths(source, sink, box)) sum += p.weight();
    return sum;
}

MPoly pairwise_enumerator_formula(int source, int sink, const BoxParams& box) {
    const VarSet zs = VarSet::z(box.b), xs = VarSet::x(box.a);
    MPoly sum;
    for (int k = 0; k <= box.b; ++k) sum += elementary(k, zs) * elementary(sink - source + k, xs);
    return sum;
}

MPoly lgv_determinant(const BoxParams& box) {
    PolyMatrix m(box.c);
    for (int i = 1; i <= box.c; ++i)
        for (int j = 1; j <= box.c; ++j)
            m.at(i - 1, j - 1) = pairwise_enumerator_formula(i, j, box);
    return det(m);
}

PathSystem::PathSystem(BoxParams box, std::vector<LatticePath> paths)
    : box_(box), paths_(std::move(paths)) {
    if (static_cast<int>(paths_.size()) != box_.c)
        throw std::invalid_argument("system must contain one path per source");
    std::vector<bool> sink_seen(box_.c + 1, false);
    for (int i = 1; i <= box_.c; ++i) {
        const LatticePath& p = paths_[i - 1];
        if (p.source() != i) throw std::invalid_argument("paths must be listed by source");
        if (p.floor_levels() != box_.b || p.wall_levels() != box_.a)
            throw std::invalid_argument("path words do not match the box");
        if (p.sink() < 1 || p.sink() > box_.c || sink_seen[p.sink()])
            throw std::invalid_argument("sinks must form a permutation");
        sink_seen[p.sink()] = true;
    }
}

std::vector<int> PathSystem::twist() const {
    std::vector<int> t;
    for (const LatticePath& p : paths_) t.push_back(p.sink());
    return t;
}

int PathSystem::sign() const {
    const std::vector<int> t = twist();
    int inversions = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) inversions += t[i] > t[j];
    return inversions % 2 == 0 ? 1 : -1;
}

bool PathSystem::nonintersecting() const {
    std::vector<std::array<int, 3>> all;
    for (const LatticePath& p : paths_) {
        auto pts = p.vertices();
        all.insert(all.end(), pts.begin(), pts.end());
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

MPoly PathSystem::weight() const {
    MPoly w = 1;
    for (const LatticePath& p : paths_) w *= p.weight();
    return w;
}

std::vector<PathSystem> enumerate_systems(const BoxParams& box) {
    // The candidate word pairs are the same for every source; only the
    // x coordinates of the vertices shift.
    const std::vector<LatticePath> templates = enumerate_paths(0, 0, box);
    std::vector<PathSystem> out;
    std::vector<LatticePath> chosen;
    std::set<std::array<int, 3>> occupied;

    auto extend = [&](auto&& self, int source) -> void {
        if (source > box.c) {
            out.emplace_back(box, chosen);
            return;
        }
        for (const LatticePath& tpl : templates) {
            LatticePath candidate(source, source, tpl.floor_word(), tpl.wall_word());
            const auto pts = candidate.vertices();
            if (std::any_of(pts.begin(), pts.end(),
                            [&occupied](const auto& v) { return occupied.count(v) > 0; }))
                continue;
            for (const auto& v : pts) occupied.insert(v);
            chosen.push_back(std::move(candidate));
            self(self, source + 1);
            chosen.pop_back();
            for (const auto& v : pts) occupied.erase(v);
        }
    };
    extend(extend, 1);
    return out;
}

MPoly signed_enumerator_bruteforce(const BoxParams& box) {
    if (box.a > 2 || box.b > 2 || box.c > 2)
        throw std::invalid_argument("signed enumerator is exponential; limited to a,b,c <= 2");
    MPoly total;
    std::vector<int> twist(box.c);
    std::iota(twist.begin(), twist.end(), 1);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < twist.size(); ++i)
            for (std::size_t j = i + 1; j < twist.size(); ++j) inversions += twist[i] > twist[j];
        const int sgn = inversions % 2 == 0 ? 1 : -1;

        std::vector<std::vector<LatticePath>> choices;
        for (int i = 1; i <= box.c; ++i) choices.push_back(enumerate_paths(i, twist[i - 1], box));

        MPoly partial = sgn;
        auto expand = [&](auto&& self, int idx, const MPoly& acc) -> void {
            if (idx == box.c) {
                total += acc;
                return;
            }
            for (const LatticePath& p : choices[idx]) self(self, idx + 1, acc * p.weight());
        };
        expand(expand, 0, partial);
    } while (std::next_permutation(twist.begin(), twist.end()));
    return total;
}

AxisSplit split_at_axis(const PathSystem& s) {
    if (!s.nonintersecting())
        throw std::invalid_argument("axis split is defined for nonintersecting systems");
    std::vector<int> left_counts;
    AxisSplit split;
    split.floor_weight = 1;
    split.wall_weight = 1;
    for (const LatticePath& p : s.paths()) {
        left_counts.push_back(p.left_count());
        std::vector<Monomial::Factor> zf, xf;
        for (int level : p.left_levels()) zf.emplace_back(VarId::z(level), 1);
        for (int level : p.right_levels()) xf.emplace_back(VarId::x(level), 1);
        split.floor_weight *= MPoly::term(1, Monomial{std::move(zf)});
        split.wall_weight *= MPoly::term(1, Monomial{std::move(xf)});
    }
    split.shape = Partition::from_row(left_counts).conjugate();
    return split;
}

Partition first_left_edge_shape(const PathSystem& s) {
    if (!s.nonintersecting())
        throw std::invalid_argument("first-left-edge shape is defined for nonintersecting systems");
    std::vector<int> first_levels;
    for (const LatticePath& p : s.paths()) {
        const auto levels = p.left_levels();
        first_levels.push_back(levels.empty() ? 0 : levels.front());
    }
    return Partition::from_row(first_levels).conjugate();
}

PlanePartition system_to_pp(const PathSystem& s) {
    const BoxParams& box = s.box();
    std::vector<int> heights(static_cast<std::size_t>(box.a) * box.b, 0);
    Partition previous_layer;
    for (int i = 1; i <= box.c; ++i) {
        const LatticePath& p = s.path(i);
        FrobeniusCoords f;
        f.legs = p.left_levels();
        f.arms = p.right_levels();
        std::reverse(f.arms.begin(), f.arms.end());
        const Partition layer = from_frobenius(f).conjugate();
        if (i > 1 && !previous_layer.contains(layer))
            throw std::invalid_argument("paths do not assemble into nested layers");
        for (int r = 1; r <= layer.length(); ++r)
            for (int col = 1; col <= layer.part(r); ++col)
                ++heights[static_cast<std::size_t>(r - 1) * box.b + (col - 1)];
        previous_layer = layer;
    }
    return PlanePartition(box.a, box.b, box.c, std::move(heights));
}

PathSystem pp_to_system(const PlanePartition& pp) {
    const BoxParams box{pp.rows(), pp.cols(), pp.max_height()};
    std::vector<LatticePath> paths;
    for (int level = 1; level <= box.c; ++level) {
        const FrobeniusCoords f = to_frobenius(pp.layer(level).conjugate());
        std::string floor(box.b, 'F');
        for (int leg : f.legs) floor[box.b - leg] = 'L';
        std::string wall(box.a, 'U');
        for (int arm : f.arms) wall[arm - 1] = 'R';
        paths.emplace_back(level, level, std::move(floor), std::move(wall));
    }
    PathSystem s(box, std::move(paths));
    if (!s.nonintersecting())
        throw std::invalid_argument("plane partition produced an intersecting system");
    return s;
}

}  // namespace boxpp
