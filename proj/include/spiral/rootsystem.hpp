#pragma once

// Abstract reduced root systems given by a Cartan matrix: root enumeration,
// Dynkin classification with Bourbaki node order, Weyl group orders.

#include "spiral/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spiral {

/// cartan[i][j] = <alpha_i^vee, alpha_j>.
using CartanMatrix = std::vector<IntVec>;

/// Bourbaki-numbered Cartan matrix of a simple type; throws InvalidType.
CartanMatrix cartan_matrix(char series, int rank);

/// Integers d_i > 0 with d_i * A_ij symmetric, minimal 1 on each connected component.
IntVec symmetrizer(const CartanMatrix& cartan);

/// Positive roots in simple-root coordinates sorted by (height, lexicographic).
std::vector<IntVec> positive_roots(const CartanMatrix& cartan);

struct TypeComponent {
    char letter = 'A';
    int rank = 0;
    std::vector<int> nodes;       // indices into the Cartan matrix, Bourbaki order
    std::vector<Rational> lengths;  // squared lengths of nodes, same order
};

/// Connected components identified and sorted by (rank, letter, root lengths).
/// lengths[i] is the squared length of simple root i; pass empty to use the symmetrizer.
std::vector<TypeComponent> classify(const CartanMatrix& cartan, const std::vector<Rational>& lengths = {});

/// "A1+A1", "B2", ... ; "T" for the empty system.
std::string type_label(const std::vector<TypeComponent>& components);

std::uint64_t weyl_group_order(const std::vector<TypeComponent>& components);

struct AbstractType {
    CartanMatrix cartan;
    std::vector<TypeComponent> components;  // nodes index into cartan, in label order
    std::string label;
};

/// Parses labels such as "A1+B2"; "C2" is read as "B2"; "T" or "" is the empty system.
/// The Cartan matrix lists components in canonical order with Bourbaki node order.
AbstractType parse_type_label(const std::string& label);

}  // namespace spiral
