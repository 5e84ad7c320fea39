#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knotcolor/errors.hpp"

namespace knotcolor {

// One crossing of a PD code. slots holds the four incident edge labels in
// counterclockwise order starting from the incoming understrand, so
// slots[0]/slots[2] are the understrand pair and slots[1]/slots[3] the
// overstrand pair.
struct Crossing {
    std::array<int, 4> slots;
};

// An edge end: slot `slot` of crossing `crossing`. Each edge label occurs at
// exactly two darts.
struct Dart {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Dart& o) const { return crossing == o.crossing && slot == o.slot; }
};

// A strand (maximal overpass arc): the edges from one undercrossing to the
// next, in order along the arc. Strands are numbered 0,1,... by the smallest
// edge label they contain.
struct Strand {
    int id = 0;
    std::vector<int> edges;
};

// Validated single-component planar diagram. Immutable after construction;
// all derived data (strands, dart tables) is computed up front.
class PlanarDiagram {
public:
    // Parse a PD code: whitespace-separated tokens X[a,b,c,d], '#' comments.
    // Labels are normalized to 1..2c. The empty code is the 0-crossing
    // unknot.
    static PlanarDiagram parse(const std::string& text);

    // Build from explicit crossings (labels 1..2c, each exactly twice).
    explicit PlanarDiagram(std::vector<Crossing> crossings);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Strand>& strands() const { return strands_; }
    int strand_count() const { return static_cast<int>(strands_.size()); }

    // Strand index owning an edge label.
    int strand_of_edge(int edge) const { return edge_strand_.at(edge - 1); }

    // The two darts carrying edge label e (1-based).
    const std::array<Dart, 2>& darts_of_edge(int edge) const { return edge_darts_.at(edge - 1); }

    // Edge label at a dart.
    int edge_at(const Dart& d) const { return crossings_[d.crossing].slots[d.slot]; }

    // The dart at the other end of the edge entered at d.
    Dart mate(const Dart& d) const;

    // Strand indices meeting at crossing c: under-in, under-out, over.
    struct CrossingStrands {
        int under_a, under_b, over;
    };
    CrossingStrands crossing_strands(int c) const;

    // Normalized PD text, one token per crossing.
    std::string serialize() const;

private:
    void validate_and_index();

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    std::vector<std::array<Dart, 2>> edge_darts_;   // per edge label
    std::vector<int> edge_strand_;                  // per edge label
    std::vector<Strand> strands_;
};

// A face of the diagram: its boundary as a cyclic list of darts (each dart
// is the side of an edge on this face) and the edges along it.
struct Region {
    int id = 0;
    std::vector<Dart> boundary;
    std::vector<int> edges;
};

// Faces, checkerboard shading and crossing signs of a diagram. The first
// face found is treated as the unbounded region and is unshaded by default;
// `flip` selects the opposite shading, which negates every eta.
struct RegionComplex {
    std::vector<Region> regions;
    std::vector<bool> shaded;                     // per region
    std::vector<int> eta;                         // per crossing, +1/-1
    std::vector<std::array<int, 4>> quadrant;     // per crossing: region in
                                                  // the quadrant between
                                                  // slots q and q+1
    std::vector<std::array<int, 2>> edge_sides;   // per edge label:
                                                  // {unshaded side region,
                                                  // shaded side region}

    int region_count() const { return static_cast<int>(regions.size()); }
    int shaded_count() const;
    std::vector<int> shaded_regions() const;
};

RegionComplex faces(const PlanarDiagram& d, bool flip_shading = false);

}  // namespace knotcolor
