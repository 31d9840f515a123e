#include "strangedual/ktheory.hpp"

#include <stdexcept>
#include <utility>

namespace strangedual::ktheory {

std::size_t NSContext::curve_index(const std::string& label) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == label) return k;
    throw std::out_of_range("unknown curve class: " + label);
}

NSContext ns_context(const diagrams::MarkedGraph& divisor) {
    NSContext ctx{diagrams::gram_from_marked_graph(divisor), divisor.labels()};
    for (std::size_t i = 0; i < ctx.rank(); ++i)
        if (ctx.gram(i, i) != -2)
            throw std::invalid_argument("ns_context: every generator must be a (-2)-curve");
    return ctx;
}

Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const NSContext& ctx) {
    if (v.c1.size() != ctx.rank() || w.c1.size() != ctx.rank())
        throw std::invalid_argument("mukai_pairing: vector does not match context rank");
    Int acc = 0;
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
        if (v.c1[i] == 0) continue;
        for (std::size_t j = 0; j < ctx.rank(); ++j) acc += v.c1[i] * ctx.gram(i, j) * w.c1[j];
    }
    return acc - v.r * w.s - v.s * w.r;
}

SheafDescriptor SheafDescriptor::structure_sheaf() {
    return SheafDescriptor(Kind::StructureSheaf, {}, 0);
}

SheafDescriptor SheafDescriptor::point() { return SheafDescriptor(Kind::Point, {}, 0); }

SheafDescriptor SheafDescriptor::curve_twist(std::string curve, long twist) {
    return SheafDescriptor(Kind::CurveTwist, std::move(curve), twist);
}

SheafDescriptor SheafDescriptor::shift(int d, SheafDescriptor inner) {
    inner.shift_ += d;
    return inner;
}

MukaiVector SheafDescriptor::mukai_vector(const NSContext& ctx) const {
    MukaiVector v{0, std::vector<Int>(ctx.rank()), 0};
    switch (kind_) {
        case Kind::StructureSheaf:
            v.r = 1;
            v.s = 1;
            break;
        case Kind::Point:
            v.s = 1;
            break;
        case Kind::CurveTwist:
            // v(O_C(k)) = (0, C, k + 1) for a (-2)-curve C.
            v.c1[ctx.curve_index(curve_)] = 1;
            v.s = twist_ + 1;
            break;
    }
    if (shift_ % 2 != 0) {
        v.r = -v.r;
        for (Int& c : v.c1) c = -c;
        v.s = -v.s;
    }
    return v;
}

BilinearLattice lattice_from_gram(IntMat gram) {
    if (!gram.is_symmetric())
        throw std::invalid_argument("lattice_from_gram: Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (gram(i, i) % 2 != 0)
            throw std::invalid_argument("lattice_from_gram: diagonal must be even");
    return {gram.rows(), std::move(gram)};
}

LatticeInvariants invariants_of(const BilinearLattice& l) {
    return {l.rank, exactalg::det_bareiss(l.gram), exactalg::signature_of(l.gram),
            exactalg::smith_invariant_factors(l.gram)};
}

IntMat euler_simples(const diagrams::Quiver& q) {
    IntMat chi(q.n(), q.n());
    for (std::size_t a = 0; a < q.n(); ++a) chi(a, a) = 1;
    // chi(S_a, S_b): Hom^1 counts solid arrows b -> a, Hom^2 relation arrows.
    for (const auto& [src, dst] : q.solid_arrows) chi(dst, src) -= 1;
    for (const auto& [src, dst] : q.relation_arrows) chi(dst, src) += 1;
    return chi;
}

IntMat symmetrize_k3(const IntMat& e) {
    if (!e.is_square()) throw std::invalid_argument("symmetrize_k3: matrix not square");
    return e + e.transposed();
}

IntMat append_pendant(const IntMat& chi_hat, std::size_t o_index) {
    const std::size_t n = chi_hat.rows();
    if (o_index >= n) throw std::out_of_range("append_pendant: index out of range");
    IntMat m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = chi_hat(i, j);
    m(n, n) = 2;
    m(n, o_index) = -1;
    m(o_index, n) = -1;
    return m;
}

IntMat mukai_gram(const IntMat& chi_full) {
    if (!chi_full.is_symmetric())
        throw std::invalid_argument("mukai_gram: Euler form must be symmetric");
    return -chi_full;
}

IntMat quiver_k3_gram(const std::array<int, 3>& p) {
    const diagrams::Quiver q = diagrams::lp_quiver(p[0], p[1], p[2]);
    return mukai_gram(append_pendant(symmetrize_k3(euler_simples(q)), q.o_vertex));
}

std::vector<std::size_t> expected_quiver_witness(const std::array<int, 3>& p) {
    const std::size_t mu = static_cast<std::size_t>(p[0] + p[1] + p[2]);
    std::vector<std::size_t> w(mu);
    std::size_t idx = 0;
    w[idx++] = mu - 2;  // O -> second hub
    // U_i^(j) -> j-th vertex of arm i counted from the arm end, so that
    // U_i^(p_i-1) lands next to the hub and U_i^(1) at the end of the arm.
    const std::size_t arm_last[3] = {static_cast<std::size_t>(p[0]),
                                     static_cast<std::size_t>(p[0] + p[1] - 1), mu - 2};
    for (int i = 0; i < 3; ++i)
        for (int j = 1; j <= p[i] - 1; ++j) w[idx++] = arm_last[i] - static_cast<std::size_t>(j);
    w[idx++] = 0;       // W -> hub
    w[idx++] = mu - 1;  // pendant
    return w;
}

EPCollection ep_collection(const std::array<int, 3>& delta) {
    NSContext ctx = ns_context(diagrams::divisor_graph(delta[0], delta[1], delta[2]));
    std::vector<MukaiVector> vectors;
    vectors.reserve(ctx.rank() + 2);
    // Diagram order: the curve order of the divisor graph already matches the
    // hub-first, near-hub-inwards numbering of the target diagram.
    for (const std::string& label : ctx.labels)
        vectors.push_back(SheafDescriptor::curve_twist(label, -1).mukai_vector(ctx));
    vectors.push_back(SheafDescriptor::curve_twist("E_inf", 0).mukai_vector(ctx));
    vectors.push_back(
        SheafDescriptor::shift(1, SheafDescriptor::structure_sheaf()).mukai_vector(ctx));
    return {std::move(vectors), std::move(ctx)};
}

IntMat collection_gram(const std::vector<MukaiVector>& vectors, const NSContext& ctx) {
    IntMat m(vectors.size(), vectors.size());
    for (std::size_t a = 0; a < vectors.size(); ++a)
        for (std::size_t b = 0; b < vectors.size(); ++b)
            m(a, b) = mukai_pairing(vectors[a], vectors[b], ctx);
    return m;
}

IntMat reflection(const std::vector<Int>& v, const BilinearLattice& g) {
    const std::size_t n = g.rank;
    if (v.size() != n) throw std::invalid_argument("reflection: vector does not match rank");

    std::vector<Int> gv(n);  // (G v)_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gv[i] += g.gram(i, j) * v[j];
    Int vv = 0;
    for (std::size_t i = 0; i < n; ++i) vv += v[i] * gv[i];
    if (vv != -2) throw std::domain_error("reflection: <v, v> must be -2");

    // s_v(x) = x + <x, v> v, i.e. I + v (v^T G).
    IntMat s = IntMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s(i, j) += v[i] * gv[j];
    return s;
}

IntMat coxeter_element(const BilinearLattice& g) {
    for (std::size_t i = 0; i < g.rank; ++i)
        if (g.gram(i, i) != -2)
            throw std::domain_error("coxeter_element: every basis vector must square to -2");
    IntMat c = IntMat::identity(g.rank);
    for (std::size_t k = 0; k < g.rank; ++k) {
        std::vector<Int> e(g.rank);
        e[k] = 1;
        c = c * reflection(e, g);
    }
    return c;
}

std::optional<unsigned> matrix_order(const IntMat& m, unsigned bound) {
    if (!m.is_square()) throw std::invalid_argument("matrix_order: matrix not square");
    const IntMat id = IntMat::identity(m.rows());
    IntMat pw = id;
    for (unsigned k = 1; k <= bound; ++k) {
        pw = pw * m;
        if (pw == id) return k;
    }
    return std::nullopt;
}

BilinearLattice n_lattice(const std::array<int, 3>& delta) {
    NSContext ctx = ns_context(diagrams::divisor_graph(delta[0], delta[1], delta[2]));
    std::vector<MukaiVector> basis;
    basis.reserve(ctx.rank() + 2);
    basis.push_back(SheafDescriptor::structure_sheaf().mukai_vector(ctx));
    for (std::size_t k = 0; k < ctx.rank(); ++k) {
        MukaiVector curve{0, std::vector<Int>(ctx.rank()), 0};
        curve.c1[k] = 1;
        basis.push_back(std::move(curve));
    }
    basis.push_back(SheafDescriptor::point().mukai_vector(ctx));
    return lattice_from_gram(collection_gram(basis, ctx));
}

}  // namespace strangedual::ktheory
