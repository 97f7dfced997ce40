#include "skewtilt/graph.hpp"

#include "skewtilt/errors.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewtilt {

namespace {

constexpr size_t kMaxUniverse = 512;
using Bits = std::bitset<kMaxUniverse>;

struct Universe {
    std::vector<SkewCurve> arcs;
    std::vector<Bits> adj;
};

Universe make_universe(int n, int window) {
    if (window < 0) throw DomainError("window must be nonnegative");
    Universe u;
    for (const auto& g : arc_universe(n, 0, window + 1))
        if (is_skew_arc(g, n)) u.arcs.push_back(g);
    if (u.arcs.size() > kMaxUniverse) throw DomainError("window too large for enumeration");
    u.adj.assign(u.arcs.size(), Bits());
    for (size_t x = 0; x < u.arcs.size(); ++x)
        for (size_t y = x + 1; y < u.arcs.size(); ++y)
            if (compatible(u.arcs[x], u.arcs[y], n)) {
                u.adj[x].set(y);
                u.adj[y].set(x);
            }
    return u;
}

std::optional<int> min_slant(const std::vector<SkewCurve>& arcs, int n) {
    std::optional<int> lo;
    for (const auto& g : arcs)
        if (auto s = slant(g, n)) lo = lo ? std::min(*lo, *s) : *s;
    return lo;
}

bool anchored(const std::vector<SkewCurve>& arcs, int n) {
    auto lo = min_slant(arcs, n);
    return lo && (*lo == 0 || *lo == 1);
}

void bron_kerbosch(const Universe& u, std::vector<size_t>& r, Bits p, Bits x,
                   const std::function<void(const std::vector<size_t>&)>& report) {
    if (p.none() && x.none()) {
        report(r);
        return;
    }
    Bits px = p | x;
    size_t pivot = 0, best = 0;
    bool have = false;
    for (size_t v = px._Find_first(); v < kMaxUniverse; v = px._Find_next(v)) {
        size_t cnt = (p & u.adj[v]).count();
        if (!have || cnt > best) { pivot = v; best = cnt; have = true; }
    }
    Bits todo = p & ~u.adj[pivot];
    for (size_t v = todo._Find_first(); v < kMaxUniverse; v = todo._Find_next(v)) {
        r.push_back(v);
        bron_kerbosch(u, r, p & u.adj[v], x & u.adj[v], report);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

void all_cliques(const Universe& u, std::vector<size_t>& r, const Bits& cand, size_t size,
                 const std::function<void(const std::vector<size_t>&)>& report) {
    if (r.size() == size) {
        report(r);
        return;
    }
    if (r.size() + cand.count() < size) return;
    for (size_t v = cand._Find_first(); v < kMaxUniverse; v = cand._Find_next(v)) {
        Bits next = cand & u.adj[v];
        for (size_t w = 0; w <= v; ++w) next.reset(w);
        r.push_back(v);
        all_cliques(u, r, next, size, report);
        r.pop_back();
    }
}

std::vector<SkewCurve> pick(const Universe& u, const std::vector<size_t>& r) {
    std::vector<SkewCurve> out;
    for (size_t v : r) out.push_back(u.arcs[v]);
    return out;
}

struct Potential {
    int no_pair = 0;
    int tors = 0;
    int stars = 0;
    int rest = 0;
    auto operator<=>(const Potential&) const = default;
};

Potential potential(const PseudoTri& t) {
    Potential p{1, 0, 0, 0};
    for (const auto& g : t.arcs()) {
        if (is_pair(g)) p.no_pair = 0;
        if (is_torspair(g)) ++p.tors;
        if (is_star(g)) ++p.stars;
        if (is_half(g)) ++p.rest;
    }
    Zeta z = zeta(t);
    for (const auto& v : z)
        if (!(v.kind == ZetaKind::Pm && v.witness == Witness::A0)) ++p.rest;
    return p;
}

FlipStep step_of(const FlipResult& r) { return FlipStep{r.removed, r.added, r.label}; }

// Shortest flip sequence from `start` to a set of strictly smaller potential.
FlipSequence improve(const PseudoTri& start, int depth_cap) {
    Potential base = potential(start);
    struct Node {
        PseudoTri tri;
        int parent;
        FlipStep step;
        int depth;
    };
    std::vector<Node> nodes{{start, -1, {}, 0}};
    std::set<PseudoTri> seen{start};
    const size_t budget = 200000;
    for (size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= depth_cap) continue;
        PseudoTri cur = nodes[head].tri;
        int depth = nodes[head].depth;
        for (const auto& g : cur.arcs()) {
            FlipResult r = flip(cur, g);
            if (!seen.insert(r.new_tri).second) continue;
            nodes.push_back({r.new_tri, static_cast<int>(head), step_of(r), depth + 1});
            if (potential(r.new_tri) < base) {
                FlipSequence seq;
                for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent >= 0; at = nodes[at].parent)
                    seq.push_back(nodes[at].step);
                std::reverse(seq.begin(), seq.end());
                return seq;
            }
            if (nodes.size() > budget) throw std::logic_error("flip search budget exhausted");
        }
    }
    throw std::logic_error("flip search exhausted its depth cap without progress");
}

FlipSequence apply_mu(PseudoTri& cur, int i) {
    FlipSequence seq;
    for (const auto& r : mu_hat_steps(cur, i)) seq.push_back(step_of(r));
    cur = mu_hat(cur, i);
    return seq;
}

FlipSequence sweep(PseudoTri& cur, int parity) {
    FlipSequence seq;
    for (int i = parity; i <= cur.n(); i += 2) {
        auto part = apply_mu(cur, i);
        seq.insert(seq.end(), part.begin(), part.end());
    }
    return seq;
}

void append(FlipSequence& a, const FlipSequence& b) { a.insert(a.end(), b.begin(), b.end()); }

} // namespace

CanonicalForm canonical_form(const PseudoTri& t) {
    auto lo = min_slant(t.arcs(), t.n());
    if (!lo) throw DomainError("set has no Half or Pair to anchor");
    int k = *lo >= 0 ? *lo / 2 : -((-*lo + 1) / 2);
    return CanonicalForm{shift_all(t, LElement::x3(t.n()).times(-k)), k};
}

std::vector<PseudoTri> enumerate(int n, int window) {
    Universe u = make_universe(n, window);
    std::vector<PseudoTri> out;
    std::vector<size_t> r;
    Bits all;
    for (size_t v = 0; v < u.arcs.size(); ++v) all.set(v);
    bron_kerbosch(u, r, all, Bits(), [&](const std::vector<size_t>& clique) {
        auto arcs = pick(u, clique);
        if (anchored(arcs, n) && is_maximal(arcs, n)) out.emplace_back(n, arcs);
    });
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_anchored_compatible_set(int n, int window, size_t size,
                                      const std::function<void(const std::vector<SkewCurve>&)>& visit) {
    Universe u = make_universe(n, window);
    std::vector<size_t> r;
    Bits all;
    for (size_t v = 0; v < u.arcs.size(); ++v) all.set(v);
    all_cliques(u, r, all, size, [&](const std::vector<size_t>& clique) {
        auto arcs = pick(u, clique);
        if (anchored(arcs, n)) visit(arcs);
    });
}

std::vector<FlipResult> neighbors(const PseudoTri& t) {
    std::vector<FlipResult> out;
    for (const auto& g : t.arcs()) out.push_back(flip(t, g));
    return out;
}

TiltingGraph build_graph(int n, int window) {
    TiltingGraph g;
    g.n = n;
    g.window = window;
    g.nodes = enumerate(n, window);
    std::map<PseudoTri, int> index;
    for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> seen;
    for (size_t u = 0; u < g.nodes.size(); ++u) {
        for (const auto& r : neighbors(g.nodes[u])) {
            auto it = index.find(canonical_form(r.new_tri).tri);
            if (it == index.end()) throw std::logic_error("flip left the enumerated node set");
            int a = static_cast<int>(u), b = it->second;
            if (seen.insert({std::min(a, b), std::max(a, b)}).second)
                g.edges.push_back({a, b, r.label.to_string()});
        }
    }
    return g;
}

PseudoTri replay(const PseudoTri& t, FlipSequence& steps) {
    PseudoTri cur = t;
    for (auto& s : steps) {
        FlipResult r = flip(cur, s.removed);
        if (!(r.added == canonicalize(s.added, t.n())))
            throw DomainError("step " + to_string(s.removed) + " -> " + to_string(s.added) + " is not a flip");
        s.label = r.label;
        cur = r.new_tri;
    }
    return cur;
}

FlipSequence reversed(const FlipSequence& steps) {
    FlipSequence out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back({it->added, it->removed, it->label});
    return out;
}

FlipSequence to_fv(const PseudoTri& t) {
    if (!validate(t).ok) throw DomainError("to_fv needs a pseudo-triangulation");
    FlipSequence seq;
    PseudoTri cur = t;
    int cap = 4 * (t.n() + 3);
    while (!is_fv(cur)) {
        FlipSequence part = improve(cur, cap);
        cur = replay(cur, part);
        append(seq, part);
    }
    return seq;
}

FlipSequence fv_to_canonical(const PseudoTri& t) {
    if (!is_fv(t)) throw DomainError("fv_to_canonical needs an FV set");
    int n = t.n();
    PseudoTri cur = t;
    FlipSequence seq;
    for (int guard = 0;; ++guard) {
        if (guard > 4 * n * n + 16) throw std::logic_error("iota normalization did not terminate");
        auto bits = iota(cur);
        int j = 0;
        for (int i = 1; i <= n - 1; ++i)
            if (!bits[i]) { j = i; break; }
        if (j == 0) break;
        int move = j == 1 ? 0 : (j == 2 ? 1 : j - 1);
        append(seq, apply_mu(cur, move));
    }
    int a = fv_chains(cur)->a[0];
    if (cur == fv_arrow(n, a, -a)) return seq;
    if (!(cur == fv_under(n, a, -a))) throw std::logic_error("all-ones iota outside the generator families");
    append(seq, sweep(cur, 1));
    if (!(cur == fv_arrow(n, a, -a))) throw std::logic_error("odd sweep did not reach the arrow family");
    return seq;
}

FlipSequence flip_path(const PseudoTri& from, const PseudoTri& to) {
    if (from.n() != to.n()) throw DomainError("flip_path endpoints have different n");
    int n = from.n();
    auto reduce = [&](const PseudoTri& t, int& a) {
        FlipSequence s = to_fv(t);
        PseudoTri fv = replay(t, s);
        append(s, fv_to_canonical(fv));
        PseudoTri end = replay(t, s);
        a = fv_chains(end)->a[0];
        return s;
    };
    int a1 = 0, a2 = 0;
    FlipSequence path = reduce(from, a1);
    FlipSequence back = reduce(to, a2);
    PseudoTri cur = fv_arrow(n, a1, -a1);
    while (a1 < a2) {
        append(path, sweep(cur, 0));
        append(path, sweep(cur, 1));
        ++a1;
    }
    while (a1 > a2) {
        append(path, sweep(cur, 1));
        append(path, sweep(cur, 0));
        --a1;
    }
    if (!(cur == fv_arrow(n, a2, -a2))) throw std::logic_error("orbit alignment missed its target");
    append(path, reversed(back));
    if (!(replay(from, path) == to)) throw std::logic_error("flip path does not reach its target");
    return path;
}

std::string export_dot(const TiltingGraph& g) {
    std::ostringstream os;
    os << "graph tilting_n" << g.n << " {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"";
        bool first = true;
        for (const auto& s : tilting_sheaf(g.nodes[i])) {
            os << (first ? "" : "; ") << display(s);
            first = false;
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_csv(const TiltingGraph& g) {
    std::ostringstream os;
    os << "kind,u,v,label\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        os << "node," << i << ",,\"";
        bool first = true;
        for (const auto& s : tilting_sheaf(g.nodes[i])) {
            os << (first ? "" : "; ") << display(s);
            first = false;
        }
        os << "\"\n";
    }
    for (const auto& e : g.edges) os << "edge," << e.u << "," << e.v << "," << e.label << "\n";
    return os.str();
}

} // namespace skewtilt
