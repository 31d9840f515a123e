#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "strangedual/diagrams.hpp"
#include "strangedual/ktheory.hpp"
#include "strangedual/singularities.hpp"

using namespace strangedual;
using namespace strangedual::ktheory;

namespace {

NSContext ctx_for(const std::array<int, 3>& delta) {
    return ns_context(diagrams::divisor_graph(delta[0], delta[1], delta[2]));
}

IntMat that_gram(const std::array<int, 3>& t) {
    return diagrams::gram_from_marked_graph(diagrams::that_diagram(t[0], t[1], t[2]));
}

// Chern-character route: ch(O_C) from 0 -> O(-C) -> O -> O_C -> 0, a twist
// adds k points, and sqrt(td) = (1, 0, 1) adjusts the point part by the rank.
MukaiVector chern_curve_twist(const NSContext& ctx, std::size_t curve, long k) {
    MukaiVector v{0, std::vector<Int>(ctx.rank()), 0};
    v.c1[curve] = 1;   // ch2(O_C) = C
    v.s = 1 + k;       // ch4: -C^2/2 = 1, plus k from the twist; rank 0 adds nothing
    return v;
}

}  // namespace

TEST_CASE("euler form of the simple modules") {
    const auto q = diagrams::lp_quiver(2, 2, 2);
    const IntMat chi = euler_simples(q);
    REQUIRE(chi.rows() == 5);
    // vertices: O, U1_1, U2_1, U3_1, W
    CHECK(chi(4, 0) == 2);   // two relation arrows O -> W
    CHECK(chi(1, 0) == -1);  // one solid arrow O -> U1_1
    CHECK(chi(4, 1) == -1);  // one solid arrow U1_1 -> W
    CHECK(chi(0, 4) == 0);
    for (std::size_t a = 0; a < 5; ++a) CHECK(chi(a, a) == 1);
}

TEST_CASE("symmetrized euler form carries the diagram values") {
    const auto q = diagrams::lp_quiver(2, 3, 7);
    const IntMat chih = symmetrize_k3(euler_simples(q));
    CHECK(chih.is_symmetric());
    for (std::size_t a = 0; a < chih.rows(); ++a) CHECK(chih(a, a) == 2);
    CHECK(chih(q.w_vertex, q.o_vertex) == 2);   // two dotted arrows
    CHECK(chih(1, q.o_vertex) == -1);           // solid arrow pair
}

TEST_CASE("pendant row is a single -1 against the O vertex") {
    const auto q = diagrams::lp_quiver(2, 3, 7);
    const IntMat chih = symmetrize_k3(euler_simples(q));
    const IntMat full = append_pendant(chih, q.o_vertex);
    const std::size_t n = chih.rows();
    REQUIRE(full.rows() == n + 1);
    CHECK(full(n, n) == 2);
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(full(n, j) == (j == q.o_vertex ? -1 : 0));
        CHECK(full(j, n) == (j == q.o_vertex ? -1 : 0));
    }
    CHECK_THROWS_AS(append_pendant(chih, n), std::out_of_range);
}

TEST_CASE("mukai gram negates the symmetric euler form") {
    const IntMat chih{{2, -1}, {-1, 2}};
    CHECK(mukai_gram(chih) == IntMat{{-2, 1}, {1, -2}});
    CHECK_THROWS_AS(mukai_gram(IntMat{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("mukai pairing on fixed vectors") {
    const NSContext ctx = ctx_for({2, 3, 7});
    const auto O = SheafDescriptor::structure_sheaf().mukai_vector(ctx);
    const auto pt = SheafDescriptor::point().mukai_vector(ctx);
    CHECK(mukai_pairing(O, pt, ctx) == -1);
    CHECK(mukai_pairing(O, O, ctx) == -2);
    CHECK(mukai_pairing(pt, pt, ctx) == 0);

    const auto c = SheafDescriptor::curve_twist("E_inf", -1).mukai_vector(ctx);
    CHECK(mukai_pairing(c, c, ctx) == -2);

    MukaiVector bad{1, std::vector<Int>(3), 1};
    CHECK_THROWS_AS(mukai_pairing(bad, O, ctx), std::invalid_argument);
}

TEST_CASE("self-pairing is even for integral mukai vectors") {
    const NSContext ctx = ctx_for({3, 4, 5});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int t = 0; t < 50; ++t) {
        MukaiVector v{entry(rng), std::vector<Int>(ctx.rank()), entry(rng)};
        for (auto& c : v.c1) c = entry(rng);
        CHECK(mukai_pairing(v, v, ctx) % 2 == 0);
    }
}

TEST_CASE("mukai vectors of the basic descriptors") {
    const NSContext ctx = ctx_for({2, 3, 7});
    const std::size_t n = ctx.rank();

    const auto O = SheafDescriptor::structure_sheaf().mukai_vector(ctx);
    CHECK(O.r == 1);
    CHECK(O.s == 1);
    CHECK(O.c1 == std::vector<Int>(n));

    const auto shifted = SheafDescriptor::shift(1, SheafDescriptor::structure_sheaf());
    const auto Os = shifted.mukai_vector(ctx);
    CHECK(Os.r == -1);
    CHECK(Os.s == -1);
    CHECK(SheafDescriptor::shift(2, SheafDescriptor::structure_sheaf()).mukai_vector(ctx) == O);

    // against the Chern-character oracle
    for (long k : {-1L, 0L, 3L}) {
        const auto got = SheafDescriptor::curve_twist("E1_1", k).mukai_vector(ctx);
        CHECK(got == chern_curve_twist(ctx, ctx.curve_index("E1_1"), k));
    }
    CHECK_THROWS_AS(SheafDescriptor::curve_twist("E9_9", 0).mukai_vector(ctx),
                    std::out_of_range);
}

TEST_CASE("spherical collection pairings match the diagram edges") {
    const std::array<int, 3> delta{2, 3, 7};
    const auto ep = ep_collection(delta);
    const std::size_t mu = static_cast<std::size_t>(delta[0] + delta[1] + delta[2]);
    REQUIRE(ep.vectors.size() == mu);

    const auto& hub = ep.vectors[0];           // O_{E_inf}(-1)
    const auto& second = ep.vectors[mu - 2];   // O_{E_inf}
    const auto& pendant = ep.vectors[mu - 1];  // O_Y[1]
    CHECK(mukai_pairing(hub, second, ep.ctx) == -2);
    CHECK(mukai_pairing(pendant, second, ep.ctx) == 1);
    for (std::size_t k = 1; k < mu - 2; ++k)
        CHECK(mukai_pairing(pendant, ep.vectors[k], ep.ctx) == 0);

    CHECK(collection_gram(ep.vectors, ep.ctx) == that_gram(delta));
}

TEST_CASE("spherical collection equals the diagram gram on every row") {
    for (const auto& r : sing::table()) {
        const auto ep = ep_collection(r.dolgachev);
        CHECK(collection_gram(ep.vectors, ep.ctx) == that_gram(r.dolgachev));
    }
}

TEST_CASE("quiver pipeline is congruent to the diagram via the stated witness") {
    for (const auto& r : sing::table()) {
        const IntMat a = quiver_k3_gram(r.dolgachev);
        const IntMat b = that_gram(r.dolgachev);
        const auto w = expected_quiver_witness(r.dolgachev);
        REQUIRE(a.rows() == b.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                CHECK(a(i, j) == b(w[i], w[j]));
    }
}

TEST_CASE("reflections are involutive isometries") {
    const auto lat = lattice_from_gram(that_gram({2, 3, 7}));
    const IntMat id = IntMat::identity(lat.rank);
    for (std::size_t k = 0; k < lat.rank; ++k) {
        std::vector<Int> e(lat.rank);
        e[k] = 1;
        const IntMat s = reflection(e, lat);
        CHECK(s.transposed() * lat.gram * s == lat.gram);
        CHECK(s * s == id);

        // s_v(v) = -v
        IntMat v(lat.rank, 1);
        v(k, 0) = 1;
        CHECK(s * v == -v);
    }

    // fixes vectors orthogonal to v: e_3 and e_9 are far apart in the diagram
    std::vector<Int> e3(lat.rank);
    e3[3] = 1;
    const IntMat s3 = reflection(e3, lat);
    IntMat e9(lat.rank, 1);
    e9(9, 0) = 1;
    CHECK(s3 * e9 == e9);

    std::vector<Int> not_minus_two(lat.rank);
    not_minus_two[0] = 2;
    CHECK_THROWS_AS(reflection(not_minus_two, lat), std::domain_error);
}

TEST_CASE("coxeter elements and matrix orders") {
    const auto rank1 = lattice_from_gram(IntMat{{-2}});
    const IntMat c1 = coxeter_element(rank1);
    CHECK(c1 == IntMat{{-1}});
    CHECK(matrix_order(c1, 4) == 2u);

    const auto a2 = lattice_from_gram(IntMat{{-2, 1}, {1, -2}});
    const IntMat c2 = coxeter_element(a2);
    CHECK(matrix_order(c2, 10) == 3u);

    const auto t237 = lattice_from_gram(that_gram({2, 3, 7}));
    const IntMat cox = coxeter_element(t237);
    CHECK(matrix_order(cox, 84) == 42u);

    // direct powering: 42 is minimal among divisors of 42
    const IntMat id = IntMat::identity(12);
    for (unsigned d : {1u, 2u, 3u, 6u, 7u, 14u, 21u}) {
        IntMat p = id;
        for (unsigned k = 0; k < d; ++k) p = p * cox;
        CHECK(p != id);
    }
    IntMat p = id;
    for (unsigned k = 0; k < 42; ++k) p = p * cox;
    CHECK(p == id);

    CHECK_FALSE(matrix_order(cox, 41).has_value());
    CHECK_THROWS_AS(coxeter_element(lattice_from_gram(IntMat{{0, 1}, {1, 0}})),
                    std::domain_error);
}

TEST_CASE("numerical grothendieck lattice") {
    const auto lat = n_lattice({2, 3, 7});
    CHECK(lat.rank == 12);
    // basis order: O_Y, ten curve classes, point
    CHECK(lat.gram(0, 0) == -2);
    CHECK(lat.gram(0, 11) == -1);
    CHECK(lat.gram(11, 11) == 0);
    CHECK(lat.gram(1, 11) == 0);

    const auto inv = invariants_of(lat);
    const auto inv_that = invariants_of(lattice_from_gram(that_gram({2, 3, 7})));
    CHECK(inv.rank == inv_that.rank);
    CHECK(abs(inv.det) == abs(inv_that.det));
    CHECK(inv.signature == inv_that.signature);
    CHECK(inv.invariant_factors == inv_that.invariant_factors);
}

TEST_CASE("lattice invariants on fixed examples") {
    const auto hyperbolic = lattice_from_gram(IntMat{{0, 1}, {1, 0}});
    const auto inv = invariants_of(hyperbolic);
    CHECK(inv.det == -1);
    CHECK(inv.signature == exactalg::Signature{1, 0, 1});
    CHECK(inv.invariant_factors == std::vector<Int>{1, 1});

    const auto root = invariants_of(lattice_from_gram(IntMat{{-2}}));
    CHECK(root.det == -2);
    CHECK(root.invariant_factors == std::vector<Int>{2});

    CHECK(abs(invariants_of(lattice_from_gram(that_gram({2, 3, 7}))).det) == 1);

    CHECK_THROWS_AS(lattice_from_gram(IntMat{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_gram(IntMat{{0, 1}, {2, 0}}), std::invalid_argument);
}
