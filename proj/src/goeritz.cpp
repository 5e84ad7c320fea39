#include "knotcolor/goeritz.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace knotcolor {

namespace {

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return (a + n - b % n) % n;
}

}  // namespace

std::vector<int> goeritz_region_order(const RegionComplex& rc) {
    std::vector<int> shaded = rc.shaded_regions();
    if (shaded.empty()) throw NoShadedRegion("diagram has no shaded region");
    int base = shaded.front();
    int best = std::numeric_limits<int>::max();
    for (int r : shaded) {
        const auto& edges = rc.regions[r].edges;
        int m = edges.empty() ? std::numeric_limits<int>::max()
                              : *std::min_element(edges.begin(), edges.end());
        if (m < best) {
            best = m;
            base = r;
        }
    }
    std::vector<int> order{base};
    for (int r : shaded)
        if (r != base) order.push_back(r);
    return order;
}

int base_strand(const PlanarDiagram& d, const RegionComplex& rc) {
    int base_region = goeritz_region_order(rc).front();
    const auto& edges = rc.regions[base_region].edges;
    if (edges.empty()) return 0;  // 0-crossing unknot
    int best = std::numeric_limits<int>::max();
    for (int e : edges) best = std::min(best, d.strand_of_edge(e));
    return best;
}

GoeritzSystem build_goeritz(const RegionComplex& rc, int deleted_row, int deleted_col) {
    GoeritzSystem sys;
    sys.region_order = goeritz_region_order(rc);
    const std::size_t s = sys.region_order.size();
    std::vector<int> index(rc.region_count(), -1);
    for (std::size_t i = 0; i < s; ++i) index[sys.region_order[i]] = static_cast<int>(i);

    sys.pre_matrix = IntMatrix(s, s);
    for (std::size_t ci = 0; ci < rc.eta.size(); ++ci) {
        int qa = rc.eta[ci] > 0 ? 0 : 1;  // shaded quadrant pair {qa, qa+2}
        int r1 = rc.quadrant[ci][qa];
        int r2 = rc.quadrant[ci][qa + 2];
        if (r1 == r2) continue;
        int i = index[r1], j = index[r2];
        sys.pre_matrix.at(i, j) += rc.eta[ci];
        sys.pre_matrix.at(j, i) += rc.eta[ci];
    }
    for (std::size_t i = 0; i < s; ++i) {
        mpz_class sum = 0;
        for (std::size_t j = 0; j < s; ++j)
            if (j != i) sum += sys.pre_matrix.at(i, j);
        sys.pre_matrix.at(i, i) = -sum;
    }
    sys.deleted_row = deleted_row < 0 ? s - 1 : static_cast<std::size_t>(deleted_row);
    sys.deleted_col = deleted_col < 0 ? s - 1 : static_cast<std::size_t>(deleted_col);
    sys.matrix = sys.pre_matrix.without_row_col(sys.deleted_row, sys.deleted_col);
    return sys;
}

mpz_class goeritz_determinant(const RegionComplex& rc) {
    return abs(det(build_goeritz(rc).matrix));
}

std::size_t goeritz_nullity(const RegionComplex& rc, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return nullspace_mod_p(build_goeritz(rc).matrix, p).nullity;
}

namespace {

// Potential h over all regions: crossing an edge from its unshaded side to
// its shaded side raises h by the strand color. Built over a BFS spanning
// tree of the dual graph; every non-tree dual edge is a fundamental-cycle
// check.
std::vector<std::uint64_t> region_potentials(const PlanarDiagram& d, const RegionComplex& rc,
                                             const Coloring& col) {
    const std::uint64_t n = col.modulus;
    const int nreg = rc.region_count();
    std::vector<std::uint64_t> h(nreg, 0);
    std::vector<bool> known(nreg, false);

    std::vector<std::vector<std::pair<int, int>>> adj(nreg);  // (edge, neighbor)
    for (int e = 1; e <= d.edge_count(); ++e) {
        auto [u, s] = rc.edge_sides[e - 1];
        adj[u].push_back({e, s});
        adj[s].push_back({e, u});
    }

    known[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        for (auto [e, nb] : adj[r]) {
            std::uint64_t color = col.colors[d.strand_of_edge(e)] % n;
            bool toward_shaded = (rc.edge_sides[e - 1][1] == nb);
            std::uint64_t expect =
                toward_shaded ? (h[r] + color) % n : sub_mod(h[r], color, n);
            if (!known[nb]) {
                known[nb] = true;
                h[nb] = expect;
                queue.push_back(nb);
            } else if (h[nb] != expect) {
                throw InconsistentDifferences(
                    "alternating sum around a dual cycle does not vanish at edge " +
                    std::to_string(e));
            }
        }
    }
    for (int r = 0; r < nreg; ++r)
        if (!known[r] && d.crossing_count() > 0)
            throw InconsistentDifferences("region dual graph is disconnected");
    return h;
}

}  // namespace

DifferenceTable differences(const PlanarDiagram& d, const RegionComplex& rc,
                            const Coloring& col) {
    if (!verify_coloring(d, col))
        throw InvalidColoring("differences require a valid coloring");
    const std::uint64_t n = col.modulus;
    const int nreg = rc.region_count();

    DifferenceTable table;
    table.modulus = n;
    table.base_region = 0;
    table.d.assign(nreg, std::vector<std::uint64_t>(nreg, 0));

    if (d.crossing_count() == 0) {
        // A generic arc between the two regions crosses the strand once.
        std::uint64_t x = col.colors[0] % n;
        table.d[0][1] = x;
        table.d[1][0] = x;
        return table;
    }

    std::vector<std::uint64_t> h = region_potentials(d, rc, col);
    for (int i = 0; i < nreg; ++i)
        for (int j = 0; j < nreg; ++j) {
            std::uint64_t diff = sub_mod(h[j], h[i], n);
            table.d[i][j] = rc.shaded[i] ? sub_mod(0, diff, n) : diff;
        }
    return table;
}

ModVector coloring_to_goeritz(const PlanarDiagram& d, const RegionComplex& rc,
                              const Coloring& col) {
    if (!verify_coloring(d, col))
        throw InvalidColoring("coloring_to_goeritz requires a valid coloring");
    const std::uint64_t n = col.modulus;
    std::vector<int> order = goeritz_region_order(rc);

    ModVector v;
    v.modulus = n;
    v.entries.assign(order.size(), 0);
    if (d.crossing_count() == 0) return v;

    std::vector<std::uint64_t> h = region_potentials(d, rc, col);
    int base = order.front();
    // base region is shaded, so d(R_base, R_i) = h[base] - h[R_i]
    for (std::size_t i = 0; i < order.size(); ++i)
        v.entries[i] = sub_mod(h[base], h[order[i]], n);
    return v;
}

namespace {

struct AuxPropagation {
    std::vector<std::uint64_t> aux;    // per edge label, relative within its region
    std::vector<int> region_of_edge;   // shaded side region id
};

AuxPropagation propagate_regions(const PlanarDiagram& d, const RegionComplex& rc,
                                 const std::vector<int>& order,
                                 const std::vector<std::uint64_t>& v, std::uint64_t n) {
    std::vector<int> vindex(rc.region_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) vindex[order[i]] = static_cast<int>(i);

    AuxPropagation p;
    p.aux.assign(d.edge_count() + 1, 0);
    p.region_of_edge.assign(d.edge_count() + 1, -1);

    for (int r : order) {
        const Region& reg = rc.regions[r];
        const std::size_t k = reg.boundary.size();
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < k; ++t) {
            int e = reg.edges[t];
            p.aux[e] = acc;
            p.region_of_edge[e] = r;
            // corner between this boundary edge and the next
            Dart m = d.mate(reg.boundary[t]);
            int ct = m.crossing;
            int corner = (m.slot + 3) % 4;
            int other = rc.quadrant[ct][(corner + 2) % 4];
            std::uint64_t diff = sub_mod(v[vindex[other]], v[vindex[r]], n);
            acc = rc.eta[ct] > 0 ? (acc + diff) % n : sub_mod(acc, diff, n);
        }
        if (acc != 0)
            throw AuxiliaryMismatch("propagation around a shaded region does not close");
    }
    return p;
}

// Offsets gluing the per-region propagations together along a spanning tree
// of crossings joining shaded regions. pick_max flips the deterministic tie
// break, giving an independent second tree.
std::vector<std::uint64_t> glue_offsets(const PlanarDiagram& d, const RegionComplex& rc,
                                        const std::vector<int>& order,
                                        const AuxPropagation& p, std::uint64_t n,
                                        bool pick_max) {
    const int nreg = rc.region_count();
    std::vector<std::uint64_t> off(nreg, 0);
    std::vector<bool> in_tree(nreg, false);
    in_tree[order.front()] = true;
    std::size_t joined = 1;

    struct Candidate {
        int label;  // smallest edge label at the crossing, for determinism
        int crossing;
    };

    while (joined < order.size()) {
        bool found = false;
        Candidate best{0, -1};
        for (std::size_t ci = 0; ci < rc.eta.size(); ++ci) {
            int qa = rc.eta[ci] > 0 ? 0 : 1;
            int r1 = rc.quadrant[ci][qa];
            int r2 = rc.quadrant[ci][qa + 2];
            if (r1 == r2 || in_tree[r1] == in_tree[r2]) continue;
            const auto& sl = d.crossings()[ci].slots;
            int label = *std::min_element(sl.begin(), sl.end());
            bool better = !found || (pick_max ? label > best.label : label < best.label);
            if (better) {
                found = true;
                best = Candidate{label, static_cast<int>(ci)};
            }
        }
        if (!found)
            throw AuxiliaryMismatch("shaded regions are not joined by crossings");
        int ci = best.crossing;
        const auto& sl = d.crossings()[ci].slots;
        int e1 = sl[1], e3 = sl[3];
        int s1 = rc.edge_sides[e1 - 1][1], s3 = rc.edge_sides[e3 - 1][1];
        // equalize the two overstrand segments at the chosen crossing
        if (in_tree[s1]) {
            off[s3] = sub_mod((p.aux[e1] + off[s1]) % n, p.aux[e3], n);
            in_tree[s3] = true;
        } else {
            off[s1] = sub_mod((p.aux[e3] + off[s3]) % n, p.aux[e1], n);
            in_tree[s1] = true;
        }
        ++joined;
    }
    return off;
}

}  // namespace

Coloring goeritz_to_coloring(const PlanarDiagram& d, const RegionComplex& rc,
                             const ModVector& v, std::uint64_t base_color) {
    const std::uint64_t n = v.modulus;
    if (n == 0) throw KnotError("modulus must be >= 1");
    std::vector<int> order = goeritz_region_order(rc);
    if (v.entries.size() != order.size())
        throw NotInNullspace("vector length " + std::to_string(v.entries.size()) +
                             " != shaded region count " + std::to_string(order.size()));

    if (d.crossing_count() == 0) {
        Coloring col;
        col.modulus = n;
        col.colors = {base_color % n};
        return col;
    }

    GoeritzSystem sys = build_goeritz(rc);
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < order.size(); ++j) {
            std::uint64_t entry = mpz_fdiv_ui(sys.pre_matrix.at(i, j).get_mpz_t(), n);
            acc = (acc + entry * (v.entries[j] % n)) % n;
        }
        if (acc != 0)
            throw NotInNullspace("vector is not in the nullspace of the pre-Goeritz matrix");
    }

    AuxPropagation p = propagate_regions(d, rc, order, v.entries, n);
    std::vector<std::uint64_t> off = glue_offsets(d, rc, order, p, n, false);
    std::vector<std::uint64_t> off2 = glue_offsets(d, rc, order, p, n, true);

    auto edge_colors = [&](const std::vector<std::uint64_t>& offsets) {
        std::vector<std::uint64_t> ec(d.edge_count() + 1, 0);
        for (int e = 1; e <= d.edge_count(); ++e)
            ec[e] = (p.aux[e] + offsets[p.region_of_edge[e]]) % n;
        return ec;
    };

    // Normalize both offset sets so the base strand carries base_color.
    int alpha = base_strand(d, rc);
    int base_region = order.front();
    int anchor_edge = 0;
    for (int e : rc.regions[base_region].edges)
        if (d.strand_of_edge(e) == alpha && (anchor_edge == 0 || e < anchor_edge))
            anchor_edge = e;
    if (anchor_edge == 0)
        throw AuxiliaryMismatch("base strand does not bound the base region");

    for (auto* offsets : {&off, &off2}) {
        std::uint64_t current = (p.aux[anchor_edge] + (*offsets)[base_region]) % n;
        std::uint64_t shift = sub_mod(base_color % n, current, n);
        for (auto& o : *offsets) o = (o + shift) % n;
    }

    std::vector<std::uint64_t> ec = edge_colors(off);
    if (ec != edge_colors(off2))
        throw AuxiliaryMismatch("coloring depends on the choice of spanning tree");

    // Overstrand segments must agree at every crossing.
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        const auto& sl = d.crossings()[ci].slots;
        if (ec[sl[1]] != ec[sl[3]])
            throw AuxiliaryMismatch("overstrand segments disagree at crossing " +
                                    std::to_string(ci));
    }

    Coloring col;
    col.modulus = n;
    col.colors.assign(d.strand_count(), 0);
    std::vector<bool> set(d.strand_count(), false);
    for (int e = 1; e <= d.edge_count(); ++e) {
        int s = d.strand_of_edge(e);
        if (!set[s]) {
            col.colors[s] = ec[e];
            set[s] = true;
        } else if (col.colors[s] != ec[e]) {
            throw AuxiliaryMismatch("strand receives two different colors");
        }
    }
    if (!verify_coloring(d, col))
        throw AuxiliaryMismatch("reconstructed coloring violates a crossing equation");
    return col;
}

}  // namespace knotcolor
