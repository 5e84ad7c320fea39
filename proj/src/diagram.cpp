#include "knotcolor/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotcolor {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : ch);
    }
    return out;
}

}  // namespace

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
    std::istringstream in(strip_comments(text));
    std::vector<Crossing> crossings;
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 3 || tok[0] != 'X' || tok[1] != '[' || tok.back() != ']')
            throw MalformedToken("expected X[a,b,c,d], got '" + tok + "'");
        std::string body = tok.substr(2, tok.size() - 3);
        std::vector<int> labels;
        std::string field;
        std::istringstream bs(body);
        while (std::getline(bs, field, ',')) {
            if (field.empty() || !std::all_of(field.begin(), field.end(),
                                              [](unsigned char c) { return std::isdigit(c); }))
                throw MalformedToken("bad edge label '" + field + "' in '" + tok + "'");
            labels.push_back(std::stoi(field));
        }
        if (labels.size() != 4)
            throw MalformedToken("crossing '" + tok + "' needs exactly 4 labels");
        for (int l : labels)
            if (l < 1) throw MalformedToken("edge labels are 1-based in '" + tok + "'");
        crossings.push_back(Crossing{{labels[0], labels[1], labels[2], labels[3]}});
    }

    // Normalize labels to 1..2c, keeping relative order.
    std::map<int, int> remap;
    for (const auto& x : crossings)
        for (int l : x.slots) remap.emplace(l, 0);
    int next = 1;
    for (auto& [label, norm] : remap) norm = next++;
    for (auto& x : crossings)
        for (auto& l : x.slots) l = remap[l];

    return PlanarDiagram(std::move(crossings));
}

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings)
    : crossings_(std::move(crossings)) {
    validate_and_index();
}

Dart PlanarDiagram::mate(const Dart& d) const {
    const auto& pair = edge_darts_[edge_at(d) - 1];
    return (pair[0] == d) ? pair[1] : pair[0];
}

void PlanarDiagram::validate_and_index() {
    const int c = crossing_count();
    edge_count_ = 2 * c;

    if (c == 0) {
        // 0-crossing unknot: one closed strand, no edges.
        strands_.push_back(Strand{0, {}});
        return;
    }

    // Every label in 1..2c exactly twice.
    std::vector<std::vector<Dart>> occur(edge_count_);
    for (int ci = 0; ci < c; ++ci)
        for (int s = 0; s < 4; ++s) {
            int label = crossings_[ci].slots[s];
            if (label < 1 || label > edge_count_)
                throw LabelUsedOtherThanTwice("edge label " + std::to_string(label) +
                                              " outside 1.." + std::to_string(edge_count_));
            occur[label - 1].push_back(Dart{ci, s});
        }
    edge_darts_.resize(edge_count_);
    for (int e = 0; e < edge_count_; ++e) {
        if (occur[e].size() != 2)
            throw LabelUsedOtherThanTwice("edge label " + std::to_string(e + 1) + " used " +
                                          std::to_string(occur[e].size()) + " times");
        edge_darts_[e] = {occur[e][0], occur[e][1]};
    }

    // Underlying 4-valent graph connectivity.
    UnionFind uf(c);
    for (int e = 0; e < edge_count_; ++e)
        uf.unite(edge_darts_[e][0].crossing, edge_darts_[e][1].crossing);
    for (int ci = 1; ci < c; ++ci)
        if (uf.find(ci) != uf.find(0))
            throw DisconnectedDiagram("diagram splits into separate pieces");

    // Knot traversal: passing through a crossing joins slots s and s+2.
    // One closed curve must cover all edges.
    UnionFind comp(edge_count_);
    for (int ci = 0; ci < c; ++ci) {
        const auto& sl = crossings_[ci].slots;
        comp.unite(sl[0] - 1, sl[2] - 1);
        comp.unite(sl[1] - 1, sl[3] - 1);
    }
    for (int e = 1; e < edge_count_; ++e)
        if (comp.find(e) != comp.find(0))
            throw MultiComponent("PD code traces more than one closed curve");

    // Planarity: Euler characteristic of the rotation system must be 2.
    std::vector<bool> seen(4 * c, false);
    int face_count = 0;
    for (int start = 0; start < 4 * c; ++start) {
        if (seen[start]) continue;
        ++face_count;
        Dart d{start / 4, start % 4};
        while (!seen[d.crossing * 4 + d.slot]) {
            seen[d.crossing * 4 + d.slot] = true;
            Dart m = mate(d);
            d = Dart{m.crossing, (m.slot + 3) % 4};
        }
    }
    if (face_count != c + 2)
        throw NotPlanar("rotation system has " + std::to_string(face_count) + " faces, expected " +
                        std::to_string(c + 2));

    // Strands: edges merged across over-passages (slots 1 and 3).
    UnionFind sm(edge_count_);
    for (int ci = 0; ci < c; ++ci)
        sm.unite(crossings_[ci].slots[1] - 1, crossings_[ci].slots[3] - 1);
    std::map<int, std::vector<int>> classes;  // keyed by smallest edge label
    for (int e = 0; e < edge_count_; ++e) classes[sm.find(e)].push_back(e + 1);
    std::vector<std::vector<int>> groups;
    for (auto& [root, edges] : classes) groups.push_back(edges);
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    edge_strand_.assign(edge_count_, -1);
    for (std::size_t si = 0; si < groups.size(); ++si)
        for (int e : groups[si]) edge_strand_[e - 1] = static_cast<int>(si);

    // Order each strand's edges by walking the arc from an under-slot end.
    auto is_under_slot = [](int s) { return s == 0 || s == 2; };
    for (std::size_t si = 0; si < groups.size(); ++si) {
        int start_edge = 0;
        for (int e : groups[si]) {
            for (const Dart& d : edge_darts_[e - 1])
                if (is_under_slot(d.slot)) {
                    start_edge = e;
                    break;
                }
            if (start_edge) break;
        }
        if (start_edge == 0)
            throw MultiComponent("strand without undercrossing end");  // cannot happen for knots
        Strand st;
        st.id = static_cast<int>(si);
        Dart at;  // the under-slot occurrence we start from
        for (const Dart& d : edge_darts_[start_edge - 1])
            if (is_under_slot(d.slot)) at = d;
        int e = start_edge;
        for (;;) {
            st.edges.push_back(e);
            const auto& pair = edge_darts_[e - 1];
            Dart other = (pair[0] == at) ? pair[1] : pair[0];
            if (is_under_slot(other.slot)) break;  // reached the far undercrossing
            Dart through{other.crossing, (other.slot + 2) % 4};
            at = through;
            e = edge_at(through);
        }
        strands_.push_back(std::move(st));
    }
    if (static_cast<int>(strands_.size()) != c)
        throw MultiComponent("strand count " + std::to_string(strands_.size()) +
                             " != crossing count " + std::to_string(c));
}

PlanarDiagram::CrossingStrands PlanarDiagram::crossing_strands(int c) const {
    const auto& sl = crossings_.at(c).slots;
    return CrossingStrands{strand_of_edge(sl[0]), strand_of_edge(sl[2]),
                           strand_of_edge(sl[1])};
}

std::string PlanarDiagram::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const auto& sl = crossings_[i].slots;
        if (i) out << ' ';
        out << "X[" << sl[0] << ',' << sl[1] << ',' << sl[2] << ',' << sl[3] << ']';
    }
    return out.str();
}

int RegionComplex::shaded_count() const {
    int n = 0;
    for (bool s : shaded) n += s;
    return n;
}

std::vector<int> RegionComplex::shaded_regions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < shaded.size(); ++i)
        if (shaded[i]) out.push_back(static_cast<int>(i));
    return out;
}

RegionComplex faces(const PlanarDiagram& d, bool flip_shading) {
    RegionComplex rc;
    const int c = d.crossing_count();

    if (c == 0) {
        // Two regions separated by the closed curve; no crossings.
        rc.regions.push_back(Region{0, {}, {}});
        rc.regions.push_back(Region{1, {}, {}});
        rc.shaded = {flip_shading, !flip_shading};
        return rc;
    }

    // Face orbits of the map d -> rotate(mate(d), -1); each orbit walks one
    // face keeping it on the left. Quadrant q at a crossing is the corner
    // between slots q and q+1.
    rc.quadrant.assign(c, {-1, -1, -1, -1});
    std::vector<int> dart_region(4 * c, -1);
    for (int start = 0; start < 4 * c; ++start) {
        if (dart_region[start] != -1) continue;
        int id = static_cast<int>(rc.regions.size());
        Region reg;
        reg.id = id;
        Dart dart{start / 4, start % 4};
        while (dart_region[dart.crossing * 4 + dart.slot] == -1) {
            dart_region[dart.crossing * 4 + dart.slot] = id;
            reg.boundary.push_back(dart);
            reg.edges.push_back(d.edge_at(dart));
            Dart m = d.mate(dart);
            int corner = (m.slot + 3) % 4;
            rc.quadrant[m.crossing][corner] = id;
            dart = Dart{m.crossing, corner};
        }
        rc.regions.push_back(std::move(reg));
    }

    // Checkerboard shading: 2-color the face adjacency graph, region 0 (the
    // designated unbounded region) unshaded unless flipped.
    const int nreg = rc.region_count();
    std::vector<int> color(nreg, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    std::vector<std::vector<int>> adj(nreg);
    for (int e = 1; e <= d.edge_count(); ++e) {
        const auto& pair = d.darts_of_edge(e);
        int a = dart_region[pair[0].crossing * 4 + pair[0].slot];
        int b = dart_region[pair[1].crossing * 4 + pair[1].slot];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int nb : adj[r]) {
            if (color[nb] == -1) {
                color[nb] = 1 - color[r];
                stack.push_back(nb);
            } else if (color[nb] == color[r]) {
                throw ShadingInconsistent("face adjacency graph is not 2-colorable");
            }
        }
    }
    for (int r = 0; r < nreg; ++r)
        if (color[r] == -1) throw ShadingInconsistent("face adjacency graph is disconnected");

    rc.shaded.resize(nreg);
    for (int r = 0; r < nreg; ++r) rc.shaded[r] = (color[r] == 1) != flip_shading;

    // Edge sides and the per-crossing checkerboard checks.
    rc.edge_sides.assign(d.edge_count(), {-1, -1});
    for (int e = 1; e <= d.edge_count(); ++e) {
        const auto& pair = d.darts_of_edge(e);
        int a = dart_region[pair[0].crossing * 4 + pair[0].slot];
        int b = dart_region[pair[1].crossing * 4 + pair[1].slot];
        if (rc.shaded[a] == rc.shaded[b])
            throw ShadingInconsistent("edge " + std::to_string(e) +
                                      " has equal shading on both sides");
        rc.edge_sides[e - 1] = rc.shaded[a] ? std::array<int, 2>{b, a}
                                            : std::array<int, 2>{a, b};
    }

    // eta(c): +1 when the shaded quadrants are {0,2} (the pair swept
    // counterclockwise from the incoming understrand), -1 when {1,3}.
    rc.eta.resize(c);
    for (int ci = 0; ci < c; ++ci) {
        const auto& q = rc.quadrant[ci];
        bool s0 = rc.shaded[q[0]], s1 = rc.shaded[q[1]], s2 = rc.shaded[q[2]],
             s3 = rc.shaded[q[3]];
        if (s0 != s2 || s1 != s3 || s0 == s1)
            throw ShadingInconsistent("crossing " + std::to_string(ci) +
                                      " does not have two opposite shaded quadrants");
        rc.eta[ci] = s0 ? +1 : -1;
    }
    return rc;
}

}  // namespace knotcolor
