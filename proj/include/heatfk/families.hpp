#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heatfk/graph.hpp"

namespace heatfk {

enum class FamilyKind { lattice_box, path, cycle, complete, star, binary_tree, antitree, random_weighted };

// Sphere sizes of an anti-tree: linear k+1, quadratic (k+1)^2, doubling 2^k.
enum class AntitreeGrowth { linear, quadratic, doubling };

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int dim = 1;          // lattice_box
    int length = 2;       // lattice_box side length L (L+1 points), path/cycle vertex count
    int count = 2;        // complete vertex count, star leaf count, random vertex count
    int depth = 1;        // binary_tree, antitree
    AntitreeGrowth growth = AntitreeGrowth::linear;
    double p = 0.0;       // random edge probability
    double w_lo = 1.0;    // random weight range
    double w_hi = 1.0;
    std::uint64_t seed = 0;
    bool has_seed = false;
    MeasureKind measure = MeasureKind::counting;

    // Short shape name, e.g. "P_20", "box_2_5", "random_24".
    std::string shape_name() const;
    // Shape name plus measure, e.g. "P_20/counting".
    std::string name() const;

    // Accepts "path:20", "cycle:8", "complete:10", "star:16", "box:2:5",
    // "binary_tree:3", "antitree:4[:linear|quadratic|doubling]",
    // "random:N:p:lo:hi:seed", or a catalogue shape name such as "P_20".
    static FamilySpec parse(const std::string& text, MeasureKind measure);
};

FamilySpec path_spec(int n, MeasureKind measure);
FamilySpec cycle_spec(int n, MeasureKind measure);
FamilySpec complete_spec(int n, MeasureKind measure);
FamilySpec star_spec(int leaves, MeasureKind measure);
FamilySpec box_spec(int dim, int side, MeasureKind measure);
FamilySpec binary_tree_spec(int depth, MeasureKind measure);
FamilySpec antitree_spec(AntitreeGrowth growth, int depth, MeasureKind measure);
FamilySpec random_spec(int n, double p, double lo, double hi, std::uint64_t seed, MeasureKind measure);

WeightedGraph generate(const FamilySpec& spec);

struct NamedGraphSpec {
    std::string name;
    FamilySpec spec;
};

// Fixed list used by the acceptance suite: nine shapes, each in counting and
// normalizing measure, counting first.
std::vector<NamedGraphSpec> catalogue();

WeightedGraph with_measure(const WeightedGraph& g, MeasureKind kind);
WeightedGraph with_measure(const WeightedGraph& g, std::vector<double> m);

} // namespace heatfk
