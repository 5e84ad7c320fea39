#include "knotcolor/pretzel.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace knotcolor {

PretzelSpec PretzelSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 4 || s[0] != 'P' || s[1] != '(' || s.back() != ')')
        throw MalformedToken("expected P(q1,...,qm), got '" + text + "'");
    PretzelSpec spec;
    std::string body = s.substr(2, s.size() - 3);
    std::istringstream bs(body);
    std::string field;
    while (std::getline(bs, field, ',')) {
        if (field.empty()) throw MalformedToken("empty twist count in '" + text + "'");
        char* end = nullptr;
        long long v = std::strtoll(field.c_str(), &end, 10);
        if (end == nullptr || *end != '\0')
            throw MalformedToken("bad twist count '" + field + "'");
        if (v == 0) throw MalformedToken("twist counts must be nonzero");
        spec.q.push_back(v);
    }
    if (spec.q.empty()) throw MalformedToken("pretzel spec needs at least one twist region");
    return spec;
}

std::string PretzelSpec::to_string() const {
    std::ostringstream out;
    out << "P(";
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) out << ',';
        out << q[i];
    }
    out << ')';
    return out.str();
}

int PretzelSpec::crossing_count() const {
    long long c = 0;
    for (long long v : q) c += std::llabs(v);
    return static_cast<int>(c);
}

PretzelSystem build_A(const PretzelSpec& spec) {
    const std::size_t m = spec.q.size();
    PretzelSystem sys;
    sys.spec = spec;
    sys.a = IntMatrix(m, m);
    for (std::size_t j = 0; j < m; ++j) sys.a.at(0, j) = 1;
    for (std::size_t i = 1; i < m; ++i) {
        sys.a.at(i, 0) = static_cast<long>(-spec.q[0]);
        sys.a.at(i, i) = static_cast<long>(spec.q[i]);
    }
    return sys;
}

mpz_class pretzel_determinant(const PretzelSpec& spec) {
    const std::size_t m = spec.q.size();
    mpz_class sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class prod = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) prod *= static_cast<long>(spec.q[j]);
        sum += prod;
    }
    return abs(sum);
}

std::size_t pretzel_nullity(const PretzelSpec& spec, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    std::size_t divisible = 0;
    for (long long v : spec.q)
        if (std::llabs(v) % p == 0) ++divisible;
    if (divisible >= 1) return divisible - 1;
    mpz_class d = pretzel_determinant(spec);
    return mpz_divisible_ui_p(d.get_mpz_t(), p) ? 1 : 0;
}

namespace {

// Edge labels of the standard pretzel picture. Column i has |q_i| crossings
// stacked vertically; level k runs from 0 (top) to |q_i| (bottom).
struct PretzelLayout {
    std::vector<std::vector<int>> left;    // per column, per level
    std::vector<std::vector<int>> right;   // per column, per level
    std::vector<Crossing> crossings;       // column-major, top to bottom
    int edge_count = 0;
};

PretzelLayout build_layout(const PretzelSpec& spec) {
    const std::size_t m = spec.q.size();
    PretzelLayout lay;
    int next = 1;
    std::vector<int> top(m), bot(m);
    // top[i]/bot[i] join column i's right side to column (i+1)%m's left side
    for (std::size_t i = 0; i < m; ++i) top[i] = next++;
    for (std::size_t i = 0; i < m; ++i) bot[i] = next++;

    lay.left.resize(m);
    lay.right.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int h = static_cast<int>(std::llabs(spec.q[i]));
        lay.left[i].resize(h + 1);
        lay.right[i].resize(h + 1);
        lay.left[i][0] = top[(i + m - 1) % m];
        lay.right[i][0] = top[i];
        lay.left[i][h] = bot[(i + m - 1) % m];
        lay.right[i][h] = bot[i];
        for (int k = 1; k < h; ++k) {
            lay.left[i][k] = next++;
            lay.right[i][k] = next++;
        }
    }
    lay.edge_count = next - 1;

    for (std::size_t i = 0; i < m; ++i) {
        const int h = static_cast<int>(std::llabs(spec.q[i]));
        for (int k = 1; k <= h; ++k) {
            int nw = lay.left[i][k - 1], ne = lay.right[i][k - 1];
            int sw = lay.left[i][k], se = lay.right[i][k];
            if (spec.q[i] > 0) {
                // left strand passes over: understrand runs NE-SW
                lay.crossings.push_back(Crossing{{ne, nw, sw, se}});
            } else {
                lay.crossings.push_back(Crossing{{se, ne, nw, sw}});
            }
        }
    }
    return lay;
}

}  // namespace

bool closes_to_knot(const PretzelSpec& spec) {
    try {
        pretzel_diagram(spec);
        return true;
    } catch (const NotAKnot&) {
        return false;
    }
}

PlanarDiagram pretzel_diagram(const PretzelSpec& spec) {
    PretzelLayout lay = build_layout(spec);
    try {
        return PlanarDiagram(std::move(lay.crossings));
    } catch (const MultiComponent&) {
        throw NotAKnot(spec.to_string() + " closes to a link, not a knot");
    }
}

Coloring pretzel_coloring_correspondence(const PretzelSpec& spec, std::uint64_t n,
                                         const ModVector& dvec, std::uint64_t base) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    const std::size_t m = spec.q.size();
    if (dvec.entries.size() != m || dvec.modulus != n)
        throw NotInNullspace("difference vector must have one mod-n entry per twist region");

    PretzelSystem sys = build_A(spec);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t entry = mpz_fdiv_ui(sys.a.at(i, j).get_mpz_t(), n);
            acc = (acc + entry * (dvec.entries[j] % n)) % n;
        }
        if (acc != 0) throw NotInNullspace("vector is not in the nullspace of A");
    }

    PretzelLayout lay = build_layout(spec);
    PlanarDiagram diagram = pretzel_diagram(spec);

    std::vector<std::uint64_t> edge_color(lay.edge_count + 1, 0);
    std::vector<bool> edge_set(lay.edge_count + 1, false);
    auto put = [&](int e, std::uint64_t v) {
        v %= n;
        if (edge_set[e] && edge_color[e] != v)
            throw AuxiliaryMismatch("conflicting colors on pretzel edge " + std::to_string(e));
        edge_color[e] = v;
        edge_set[e] = true;
    };

    // Color the left/right segments level by level: in column i both sides
    // step by d_i per half twist (up for negative q_i).
    std::uint64_t topleft = base % n;
    for (std::size_t i = 0; i < m; ++i) {
        const int h = static_cast<int>(std::llabs(spec.q[i]));
        std::uint64_t delta = dvec.entries[i] % n;
        std::uint64_t l = topleft, r = (topleft + n - delta) % n;
        for (int k = 0; k <= h; ++k) {
            put(lay.left[i][k], l);
            put(lay.right[i][k], r);
            if (spec.q[i] > 0) {
                l = (l + delta) % n;
                r = (r + delta) % n;
            } else {
                l = (l + n - delta) % n;
                r = (r + n - delta) % n;
            }
        }
        topleft = (topleft + n - delta) % n;  // next column starts at this one's right top
    }

    Coloring col;
    col.modulus = n;
    col.colors.assign(diagram.strand_count(), 0);
    std::vector<bool> set(diagram.strand_count(), false);
    for (int e = 1; e <= diagram.edge_count(); ++e) {
        if (!edge_set[e]) throw AuxiliaryMismatch("uncolored pretzel edge");
        int s = diagram.strand_of_edge(e);
        if (!set[s]) {
            col.colors[s] = edge_color[e];
            set[s] = true;
        } else if (col.colors[s] != edge_color[e]) {
            throw AuxiliaryMismatch("pretzel strand receives two different colors");
        }
    }
    if (!verify_coloring(diagram, col))
        throw AuxiliaryMismatch("pretzel coloring violates a crossing equation");
    return col;
}

}  // namespace knotcolor
