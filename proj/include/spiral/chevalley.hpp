#pragma once

#include "spiral/eisenstein.hpp"
#include "spiral/rational.hpp"
#include "spiral/rootsystem.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spiral {

/// Sparse element of g over Q(w); coefficients indexed by basis position.
struct AlgebraElement {
    std::map<int, Eisenstein> coeffs;

    static AlgebraElement basis(int index, Eisenstein c = 1);
    bool is_zero() const { return coeffs.empty(); }
    void add(int index, const Eisenstein& c);
    AlgebraElement& operator+=(const AlgebraElement& other);
    friend AlgebraElement operator*(const Eisenstein& c, const AlgebraElement& x);
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.coeffs == y.coeffs; }
};

struct SparseTerm {
    int index;
    int coeff;
};

/// Chevalley basis of an untwisted simple Lie algebra.
/// Basis order: root vectors e_a for every root a (positive roots by height, then their
/// negatives in the same order), followed by the Cartan generators h_1..h_r.
class ChevalleyAlgebra {
public:
    static ChevalleyAlgebra build(char series, int rank);

    char series() const { return series_; }
    int rank() const { return rank_; }
    int dim() const { return num_roots() + rank_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }

    const CartanMatrix& cartan() const { return cartan_; }
    const std::vector<IntVec>& roots() const { return roots_; }
    int root_index(const IntVec& coeffs) const;
    int negative(int a) const { return a < num_positive() ? a + num_positive() : a - num_positive(); }
    int cartan_index(int i) const { return num_roots() + i; }
    bool is_cartan(int basis_index) const { return basis_index >= num_roots(); }

    /// N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; zero when a+b is not a root.
    int structure_constant(int a, int b) const { return n_[a][b]; }
    /// Index of a+b, -1 if not a root, -2 if a+b = 0.
    int root_sum(int a, int b) const { return sum_[a][b]; }
    /// <a, alpha_i^vee>.
    int cartan_pairing(int a, int i) const;
    /// h_a = [e_a, e_{-a}] in the basis h_1..h_r.
    const IntVec& coroot(int a) const { return coroots_[a]; }

    std::vector<SparseTerm> bracket_basis(int x, int y) const;
    std::string basis_label(int index) const;

    /// Diagram automorphism of order e on the simple nodes; throws InvalidTwist.
    std::vector<int> diagram_permutation(int e) const;

    struct SignedPermutation {
        std::vector<int> target;
        std::vector<int> sign;
    };
    /// Pinned automorphism: e_{alpha_i} -> e_{alpha_pi(i)}, e_{-alpha_i} -> e_{-alpha_pi(i)}.
    SignedPermutation pinned_automorphism(int e) const;

private:
    char series_ = 'A';
    int rank_ = 0;
    CartanMatrix cartan_;
    IntVec sym_;
    std::vector<IntVec> roots_;
    std::map<IntVec, int> index_;
    std::vector<IntVec> n_;
    std::vector<IntVec> sum_;
    std::vector<IntVec> coroots_;

    int inner(const IntVec& x, const IntVec& y) const;
    void compute_structure_constants();
};

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

/// First violated antisymmetry/Jacobi triple as text, or nullopt.
std::optional<std::string> check_jacobi(const ChevalleyAlgebra& alg);
/// Checks that the pinned automorphism has order exactly e and respects brackets.
std::optional<std::string> check_automorphism(const ChevalleyAlgebra& alg, int e);

struct FoldedRoot {
    IntVec coeffs;                        // restricted simple-root coordinates
    std::vector<int> classes;             // sorted classes i with g^i(alpha) != 0
    std::vector<AlgebraElement> vectors;  // sigma-eigenvector spanning g^i(alpha), per class
};

struct FoldResult {
    int e = 1;
    std::vector<std::vector<int>> node_orbits;  // restricted simple root j <-> orbit of nodes
    std::vector<FoldedRoot> roots;              // positives by (height, lex), then negatives
    std::vector<int> cartan_graded_dims;        // size e
    std::vector<std::vector<AlgebraElement>> cartan_vectors;  // basis of t^i per class
};

FoldResult fold_by_pinned_auto(const ChevalleyAlgebra& alg, int e);

/// Jordan block sizes (descending) of ad(x) on the ad(x)-stable span generated by subspace.
std::vector<int> jordan_profile(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                                const std::vector<AlgebraElement>& subspace);

struct LeviRootSpace {
    IntVec covector;  // pairing with points of the apartment
    AlgebraElement vector;
};

struct LeviSubalgebra {
    std::vector<LeviRootSpace> roots;
    std::vector<AlgebraElement> cartan;
    int semisimple_rank = 0;
};

/// deg-0 roots + semisimple rank == deg-2 roots; throws OddGrading.
bool is_distinguished(const ChevalleyAlgebra& alg, const LeviSubalgebra& levi, const Vec& h);
/// Same count for an abstract root system given weighted Dynkin marks.
bool is_distinguished(const CartanMatrix& cartan, const IntVec& marks);

struct OrbitCertificate {
    AlgebraElement representative;
    std::size_t rank = 0;           // rank of ad(x) from degree 0 to degree 2
    std::size_t degree_two_dim = 0;
    int attempts = 0;
};

OrbitCertificate orbit_representative(const ChevalleyAlgebra& alg, const LeviSubalgebra& levi, const Vec& h,
                                      std::uint64_t seed = 0);

}  // namespace spiral
