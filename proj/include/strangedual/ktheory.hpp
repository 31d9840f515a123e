#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "strangedual/diagrams.hpp"
#include "strangedual/exactalg.hpp"
#include "strangedual/intmat.hpp"

namespace strangedual::ktheory {

// Neron-Severi context: intersection form of the curve configuration at
// infinity together with the curve-class labels.  Every generator is a
// (-2)-curve, so the diagonal is constant -2.
struct NSContext {
    IntMat gram;
    std::vector<std::string> labels;

    std::size_t rank() const { return labels.size(); }
    std::size_t curve_index(const std::string& label) const;  // out_of_range if unknown
    bool operator==(const NSContext&) const = default;
};

NSContext ns_context(const diagrams::MarkedGraph& divisor);

// Mukai vector (r, c1, s): rank, divisor coordinates over an NSContext, and
// the degree-4 component.
struct MukaiVector {
    Int r;
    std::vector<Int> c1;
    Int s;
    bool operator==(const MukaiVector&) const = default;
};

// (a2, b2) - (a0, b4) - (a4, b0).
Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const NSContext& ctx);

// Sheaf-class descriptors whose Mukai vectors are known in closed form:
// the structure sheaf, a point, a twisted line bundle O_C(k) on a named
// (-2)-curve, and homological shifts of any of these.
class SheafDescriptor {
public:
    static SheafDescriptor structure_sheaf();
    static SheafDescriptor point();
    static SheafDescriptor curve_twist(std::string curve, long twist);
    static SheafDescriptor shift(int d, SheafDescriptor inner);

    MukaiVector mukai_vector(const NSContext& ctx) const;

private:
    enum class Kind { StructureSheaf, Point, CurveTwist };
    SheafDescriptor(Kind k, std::string curve, long twist)
        : kind_(k), curve_(std::move(curve)), twist_(twist) {}

    Kind kind_;
    std::string curve_;
    long twist_ = 0;
    int shift_ = 0;
};

inline MukaiVector mukai_vector_of(const SheafDescriptor& d, const NSContext& ctx) {
    return d.mukai_vector(ctx);
}

// Even bilinear lattice: rank plus a symmetric Gram matrix with even diagonal.
struct BilinearLattice {
    std::size_t rank = 0;
    IntMat gram;
};

// Validates symmetry and even diagonal.
BilinearLattice lattice_from_gram(IntMat gram);

struct LatticeInvariants {
    std::size_t rank = 0;
    Int det;
    exactalg::Signature signature;
    std::vector<Int> invariant_factors;
};

LatticeInvariants invariants_of(const BilinearLattice& l);

// Euler form chi(S_a, S_b) of the simple modules of an lp_quiver:
// delta_{ab} - #(solid arrows b -> a) + #(relation arrows b -> a).
IntMat euler_simples(const diagrams::Quiver& q);

// chi + chi^T: the Euler form after pushing forward to the K3 compactification.
IntMat symmetrize_k3(const IntMat& e);

// Adjoins the class of the shifted structure sheaf: new diagonal entry 2 and
// a single off-diagonal -1 against the vertex at o_index.
IntMat append_pendant(const IntMat& chi_hat, std::size_t o_index);

// Mukai-pairing Gram matrix of a symmetric Euler form: -chi.
IntMat mukai_gram(const IntMat& chi_full);

// Full pipeline lp_quiver -> euler_simples -> symmetrize_k3 -> append_pendant
// -> mukai_gram for weights p.
IntMat quiver_k3_gram(const std::array<int, 3>& p);

// The permutation carrying the quiver_k3_gram basis order
// (O, U1^(1..), U2^(1..), U3^(1..), W, pendant) onto the that_diagram order:
// W to the hub, each chain U_i^(p_i-1) .. U_i^(1) down the matching arm from
// its hub-adjacent vertex, O to the second hub, pendant to the pendant.
std::vector<std::size_t> expected_quiver_witness(const std::array<int, 3>& p);

// Spherical collection on the K3 side: O_{C}(-1) for every curve of the
// divisor graph in diagram order, then O_{E_inf}, then O_Y[1].
struct EPCollection {
    std::vector<MukaiVector> vectors;
    NSContext ctx;
};

EPCollection ep_collection(const std::array<int, 3>& delta);

// Pairwise Mukai-pairing Gram matrix of a collection.
IntMat collection_gram(const std::vector<MukaiVector>& vectors, const NSContext& ctx);

// Picard-Lefschetz reflection s_v(x) = x + <x, v> v for a (-2)-vector v,
// as a matrix acting on column coordinate vectors.
IntMat reflection(const std::vector<Int>& v, const BilinearLattice& g);

// Product of the basis reflections s_{e_1} s_{e_2} ... s_{e_n} in basis
// order; requires every diagonal entry of g to be -2.
IntMat coxeter_element(const BilinearLattice& g);

// Least k <= bound with m^k = identity, or absent.
std::optional<unsigned> matrix_order(const IntMat& m, unsigned bound);

// Numerical Grothendieck lattice of the K3 compactification: Gram of
// {v(O_Y)} + {curve classes of divisor_graph(delta)} + {v(O_p)} under the
// Mukai pairing.  Rank delta1 + delta2 + delta3.
BilinearLattice n_lattice(const std::array<int, 3>& delta);

}  // namespace strangedual::ktheory
