#include "knotcolor/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace knotcolor {

ColoringSystem build_precoloring(const PlanarDiagram& d, int deleted_row, int deleted_col) {
    const int c = d.crossing_count();
    if (c == 0)
        throw ZeroCrossingDiagram("the 0-crossing unknot has no crossing equations");
    ColoringSystem sys;
    sys.pre_matrix = IntMatrix(c, c);
    for (int ci = 0; ci < c; ++ci) {
        auto cs = d.crossing_strands(ci);
        sys.pre_matrix.at(ci, cs.under_a) += 1;
        sys.pre_matrix.at(ci, cs.under_b) += 1;
        sys.pre_matrix.at(ci, cs.over) -= 2;
    }
    sys.strand_order.resize(c);
    std::iota(sys.strand_order.begin(), sys.strand_order.end(), 0);
    sys.deleted_row = deleted_row < 0 ? c - 1 : static_cast<std::size_t>(deleted_row);
    sys.deleted_col = deleted_col < 0 ? c - 1 : static_cast<std::size_t>(deleted_col);
    sys.matrix = sys.pre_matrix.without_row_col(sys.deleted_row, sys.deleted_col);
    return sys;
}

mpz_class determinant(const PlanarDiagram& d) {
    if (d.crossing_count() == 0) return 1;
    return abs(det(build_precoloring(d).matrix));
}

std::size_t nullity(const PlanarDiagram& d, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (d.crossing_count() == 0) return 0;
    return nullspace_mod_p(build_precoloring(d).matrix, p).nullity;
}

bool verify_coloring(const PlanarDiagram& d, const Coloring& col) {
    if (col.colors.size() != static_cast<std::size_t>(d.strand_count())) return false;
    const std::uint64_t n = col.modulus;
    for (auto v : col.colors)
        if (v >= n) return false;
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        auto cs = d.crossing_strands(ci);
        std::uint64_t lhs = (col.colors[cs.under_a] + col.colors[cs.under_b]) % n;
        std::uint64_t rhs = (2 * col.colors[cs.over]) % n;
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<Coloring> colorings(const PlanarDiagram& d, std::uint64_t n, std::uint64_t cap) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    std::vector<Coloring> out;
    const int s = d.strand_count();

    if (d.crossing_count() == 0) {
        if (n > cap) throw SolutionSetTooLarge("unknot has n colorings, cap exceeded");
        for (std::uint64_t v = 0; v < n; ++v)
            out.push_back(Coloring{n, {v}});
        return out;
    }

    ColoringSystem sys = build_precoloring(d);
    mpz_class total = coloring_count(d, n);
    if (total > cap)
        throw SolutionSetTooLarge("coloring set has " + total.get_str() + " elements, cap is " +
                                  std::to_string(cap));

    // Solutions of the reduced matrix, lifted by a zero at the deleted
    // strand, then translated by each constant vector.
    auto reduced = solve_mod_n(sys.matrix, n, cap);
    for (const auto& x : reduced) {
        Coloring base;
        base.modulus = n;
        base.colors.assign(s, 0);
        for (int i = 0, k = 0; i < s; ++i) {
            if (i == static_cast<int>(sys.deleted_col)) continue;
            base.colors[i] = x.entries[k++];
        }
        for (std::uint64_t shift = 0; shift < n; ++shift) {
            Coloring col = base;
            for (auto& v : col.colors) v = (v + shift) % n;
            if (!verify_coloring(d, col))
                throw KnotError("internal: lifted solution fails a crossing equation");
            out.push_back(std::move(col));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Coloring& a, const Coloring& b) { return a.colors < b.colors; });
    return out;
}

mpz_class coloring_count(const PlanarDiagram& d, std::uint64_t n) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    if (d.crossing_count() == 0) return mpz_class(static_cast<unsigned long>(n));
    ColoringSystem sys = build_precoloring(d);
    return count_solutions_mod_n(sys.matrix, n) * mpz_class(static_cast<unsigned long>(n));
}

std::vector<Coloring> brute_force_colorings(const PlanarDiagram& d, std::uint64_t n,
                                            std::uint64_t cap) {
    if (n == 0) throw KnotError("modulus must be >= 1");
    const int s = d.strand_count();

    if (d.crossing_count() == 0) {
        if (n > cap) throw SearchSpaceTooLarge("search space exceeds cap");
        std::vector<Coloring> out;
        for (std::uint64_t v = 0; v < n; ++v) out.push_back(Coloring{n, {v}});
        return out;
    }

    // Depth-first over strands in knot-traversal order, checking each
    // crossing equation as soon as its three strands are assigned. This
    // examines every assignment not already refuted by an equation, so the
    // result is the full solution set.
    std::vector<int> order;
    {
        std::vector<bool> seen(s, false);
        // walk the knot: follow edges through crossings, recording strands
        Dart at{0, 0};
        for (int steps = 0; steps < 2 * d.crossing_count(); ++steps) {
            int st = d.strand_of_edge(d.edge_at(at));
            if (!seen[st]) {
                seen[st] = true;
                order.push_back(st);
            }
            Dart exit{at.crossing, (at.slot + 2) % 4};
            at = d.mate(exit);
        }
        for (int i = 0; i < s; ++i)
            if (!seen[i]) order.push_back(i);  // unreachable for valid knots
    }
    std::vector<int> depth_of(s, 0);
    for (int i = 0; i < s; ++i) depth_of[order[i]] = i;

    // Schedule each crossing at the depth where its last strand appears.
    std::vector<std::vector<int>> checks(s);
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        auto cs = d.crossing_strands(ci);
        int dep = std::max({depth_of[cs.under_a], depth_of[cs.under_b], depth_of[cs.over]});
        checks[dep].push_back(ci);
    }

    std::vector<Coloring> out;
    std::vector<std::uint64_t> assign(s, 0);
    std::uint64_t explored = 0;

    auto ok_at = [&](int depth) {
        for (int ci : checks[depth]) {
            auto cs = d.crossing_strands(ci);
            std::uint64_t lhs = (assign[cs.under_a] + assign[cs.under_b]) % n;
            if (lhs != (2 * assign[cs.over]) % n) return false;
        }
        return true;
    };

    // iterative DFS
    std::vector<std::uint64_t> value(s, 0);
    int depth = 0;
    value[0] = 0;
    while (depth >= 0) {
        if (value[depth] == n) {
            --depth;
            if (depth >= 0) ++value[depth];
            continue;
        }
        if (++explored > cap)
            throw SearchSpaceTooLarge("explored more than " + std::to_string(cap) +
                                      " assignments");
        assign[order[depth]] = value[depth];
        if (!ok_at(depth)) {
            ++value[depth];
            continue;
        }
        if (depth + 1 == s) {
            Coloring col{n, assign};
            out.push_back(std::move(col));
            ++value[depth];
            continue;
        }
        ++depth;
        value[depth] = 0;
    }

    std::sort(out.begin(), out.end(),
              [](const Coloring& a, const Coloring& b) { return a.colors < b.colors; });
    return out;
}

bool is_n_colorable(const PlanarDiagram& d, std::uint64_t n) {
    if (n < 2) return false;
    if (d.crossing_count() == 0) return false;
    ColoringSystem sys = build_precoloring(d);
    SmithForm f = smith_normal_form(sys.matrix);
    mpz_class nz(static_cast<unsigned long>(n));
    for (const mpz_class& dv : f.divisors) {
        if (dv == 0) return true;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), dv.get_mpz_t(), nz.get_mpz_t());
        if (g > 1) return true;
    }
    return false;
}

std::vector<mpz_class> coloring_group(const PlanarDiagram& d) {
    std::vector<mpz_class> out;
    if (d.crossing_count() == 0) return out;
    SmithForm f = smith_normal_form(build_precoloring(d).matrix);
    for (const mpz_class& dv : f.divisors)
        if (dv != 1) out.push_back(dv);
    return out;
}

}  // namespace knotcolor
