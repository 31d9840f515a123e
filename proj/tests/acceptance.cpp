// Acceptance suite: one pass/fail line per criterion, exit 0 only when every
// criterion holds.  All checks are exact; independent oracles (cofactor
// determinants, Sturm sequences, direct matrix powering) back the library
// routes wherever a second route is required.

#include <array>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "strangedual/diagrams.hpp"
#include "strangedual/exactalg.hpp"
#include "strangedual/ktheory.hpp"
#include "strangedual/singularities.hpp"

using namespace strangedual;
using exactalg::Signature;

namespace {

int g_failures = 0;

void criterion(const std::string& id, bool ok, const std::string& detail) {
    std::cout << id << (ok ? " PASS " : " FAIL ") << detail << '\n';
    if (!ok) ++g_failures;
}

int sum3(const std::array<int, 3>& t) { return t[0] + t[1] + t[2]; }

IntMat that_gram(const std::array<int, 3>& t) {
    return diagrams::gram_from_marked_graph(diagrams::that_diagram(t[0], t[1], t[2]));
}

ktheory::BilinearLattice that_lattice(const std::array<int, 3>& t) {
    return ktheory::lattice_from_gram(that_gram(t));
}

std::vector<Int> nontrivial(const std::vector<Int>& f) {
    std::vector<Int> out;
    for (const Int& x : f)
        if (x != 1) out.push_back(x);
    return out;
}

void c1_milnor() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const int mu = sing::milnor_number(r);
        if (mu != r.subscript()) ok = false;
        if (sing::milnor_product(r.ws) != r.subscript()) ok = false;
    }
    criterion("C1", ok, "Milnor number = name subscript = exact weight product, 14 rows");
}

void c2_involution() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const auto& d = sing::strange_dual(r.name);
        if (sing::strange_dual(d.name).name != r.name) ok = false;
        if (r.dolgachev != d.gabrielov || r.gabrielov != d.dolgachev) ok = false;
    }
    criterion("C2", ok, "strange duality is an involution swapping delta and gamma");
}

void c3_gorenstein() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        if (sing::gorenstein_parameter(r.ws.weights, r.ws.h) != -1) ok = false;
        auto ext = r.ws.weights;
        ext.push_back(1);
        if (sing::gorenstein_parameter(ext, r.ws.h) != 0) ok = false;
    }
    criterion("C3", ok, "parameters -1 (three variables) and 0 (four variables), 14 rows");
}

void c4_rank24() {
    bool ok = true;
    for (const auto& r : sing::table())
        if (sum3(r.dolgachev) + sum3(r.gabrielov) != 24) ok = false;
    criterion("C4", ok, "delta-sum + gamma-sum = 24 on every row");
}

void c5_quiver_congruence() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const IntMat a = ktheory::quiver_k3_gram(r.dolgachev);
        const IntMat b = that_gram(r.dolgachev);
        const auto w = ktheory::expected_quiver_witness(r.dolgachev);
        for (std::size_t i = 0; i < a.rows() && ok; ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) != b(w[i], w[j])) {
                    ok = false;
                    break;
                }
        if (!exactalg::perm_congruent(a, b)) ok = false;
    }
    criterion("C5", ok, "quiver Euler pipeline congruent to the diagram, stated witness verified");
}

void c6_ep_equality() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const auto ep = ktheory::ep_collection(r.dolgachev);
        if (ktheory::collection_gram(ep.vectors, ep.ctx) != that_gram(r.dolgachev)) ok = false;
    }
    criterion("C6", ok, "spherical-collection Gram equals the diagram Gram entrywise, 14 rows");
}

void c7_inertia() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const auto sd = exactalg::signature_of(that_gram(r.dolgachev));
        const auto sg = exactalg::signature_of(that_gram(r.gabrielov));
        if (!(sd == Signature{2, 0, sum3(r.dolgachev) - 2})) ok = false;
        if (!(sg == Signature{2, 0, sum3(r.gabrielov) - 2})) ok = false;

        // Curve classes at infinity span the Lorentzian Neron-Severi lattice;
        // the chains left after deleting the hub are the curves contracted by
        // the minimal resolution and form a definite sublattice.
        const IntMat div = diagrams::gram_from_marked_graph(
            diagrams::divisor_graph(r.dolgachev[0], r.dolgachev[1], r.dolgachev[2]));
        if (!(exactalg::signature_of(div) == Signature{1, 0, sum3(r.dolgachev) - 3}))
            ok = false;
        IntMat chains(div.rows() - 1, div.cols() - 1);
        for (std::size_t i = 1; i < div.rows(); ++i)
            for (std::size_t j = 1; j < div.cols(); ++j) chains(i - 1, j - 1) = div(i, j);
        if (!(exactalg::signature_of(chains) ==
              Signature{0, 0, static_cast<int>(div.rows()) - 1}))
            ok = false;
    }

    // Independent route on the rank-12 row: Sturm-sequence root counting on
    // interpolated characteristic polynomials.
    const IntMat g237 = that_gram({2, 3, 7});
    if (!(oracles::signature_by_sturm(oracles::charpoly_by_interpolation(g237)) ==
          Signature{2, 0, 10}))
        ok = false;
    const IntMat div237 = diagrams::gram_from_marked_graph(diagrams::divisor_graph(2, 3, 7));
    if (!(oracles::signature_by_sturm(oracles::charpoly_by_interpolation(div237)) ==
          Signature{1, 0, 9}))
        ok = false;

    criterion("C7", ok,
              "inertia (2,0,n-2) for both diagram lattices, zero radical; curves at infinity "
              "(1,0,n-3) with definite contracted chains; Sturm oracle agrees on E12");
}

void c8_monodromy() {
    bool ok = true;
    std::ostringstream note;
    for (const auto& r : sing::table()) {
        const unsigned h = static_cast<unsigned>(r.ws.h);
        const IntMat cox = ktheory::coxeter_element(that_lattice(r.gabrielov));
        const auto fac = exactalg::cyclotomic_factorization(exactalg::char_poly(cox), 84);
        if (!fac) {
            ok = false;
            continue;
        }
        for (unsigned d : *fac)
            if (h % d != 0) ok = false;
        const auto order = ktheory::matrix_order(cox, 2 * h);
        if (!order) ok = false;
        if (r.name == "E12") {
            if (order != 42u) ok = false;
            // oracle: direct powering over the divisors of 42
            const IntMat id = IntMat::identity(12);
            IntMat p = id;
            for (unsigned k = 0; k < 42; ++k) p = p * cox;
            if (p != id) ok = false;
            for (unsigned d : {1u, 2u, 3u, 6u, 7u, 14u, 21u}) {
                IntMat q = id;
                for (unsigned k = 0; k < d; ++k) q = q * cox;
                if (q == id) ok = false;
            }
        }
        if (order && *order != h) note << ' ' << r.name << ":order=" << *order;
    }
    std::string detail =
        "Coxeter char polys factor into cyclotomics with orders dividing h; order 42 for E12";
    detail += note.str().empty() ? ", order = h on every row" : ";" + note.str();
    criterion("C8", ok, detail);
}

void c9_duality() {
    bool ok = true;
    for (const auto& r : sing::table()) {
        const auto& d = sing::strange_dual(r.name);
        if (d.name < r.name) continue;  // each pair once

        const auto inv_delta = ktheory::invariants_of(that_lattice(r.dolgachev));
        const auto inv_gamma = ktheory::invariants_of(that_lattice(r.gabrielov));
        if (abs(inv_delta.det) != abs(inv_gamma.det)) ok = false;
        if (nontrivial(inv_delta.invariant_factors) != nontrivial(inv_gamma.invariant_factors))
            ok = false;

        // oracle route for the determinants
        if (abs(oracles::cofactor_det(that_gram(r.dolgachev))) !=
            abs(oracles::cofactor_det(that_gram(r.gabrielov))))
            ok = false;

        for (const auto* m : {&r, &d}) {
            const auto a = ktheory::invariants_of(that_lattice(m->dolgachev));
            const auto b = ktheory::invariants_of(ktheory::n_lattice(m->dolgachev));
            if (a.rank != b.rank || abs(a.det) != abs(b.det) || !(a.signature == b.signature) ||
                a.invariant_factors != b.invariant_factors)
                ok = false;
            if (&r == &d) break;
        }
    }
    criterion("C9", ok,
              "dual pairs share |det| and nontrivial invariant factors; Grothendieck lattice "
              "matches the diagram lattice on every row");
}

void p1_property_suites() {
    bool ok = true;
    std::mt19937_64 rng(20240901);
    const auto& table = sing::table();

    // reflection isometry + involution
    for (int t = 0; t < 200; ++t) {
        const auto& r = table[static_cast<std::size_t>(t) % table.size()];
        const auto lat = that_lattice(r.gabrielov);
        std::uniform_int_distribution<std::size_t> pick(0, lat.rank - 1);
        std::vector<Int> e(lat.rank);
        e[pick(rng)] = 1;
        const IntMat s = ktheory::reflection(e, lat);
        if (s.transposed() * lat.gram * s != lat.gram) ok = false;
        if (s * s != IntMat::identity(lat.rank)) ok = false;
    }

    // strange-dual involution, cycled
    for (int t = 0; t < 200; ++t) {
        const auto& r = table[static_cast<std::size_t>(t) % table.size()];
        if (sing::strange_dual(sing::strange_dual(r.name).name).name != r.name) ok = false;
    }

    // Riemann-Roch sign: forced Euler characteristics equal -(v, w)
    for (int t = 0; t < 200; ++t) {
        const auto& r = table[static_cast<std::size_t>(t) % table.size()];
        const auto ctx = ktheory::ns_context(
            diagrams::divisor_graph(r.dolgachev[0], r.dolgachev[1], r.dolgachev[2]));
        std::uniform_int_distribution<long> twist(-3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, ctx.rank() - 1);
        const long k = twist(rng);
        const auto O = ktheory::SheafDescriptor::structure_sheaf().mukai_vector(ctx);
        const auto pt = ktheory::SheafDescriptor::point().mukai_vector(ctx);
        const auto ck =
            ktheory::SheafDescriptor::curve_twist(ctx.labels[pick(rng)], k).mukai_vector(ctx);
        if (-ktheory::mukai_pairing(O, O, ctx) != 2) ok = false;        // chi(O, O)
        if (-ktheory::mukai_pairing(O, pt, ctx) != 1) ok = false;       // chi(O, O_p)
        if (-ktheory::mukai_pairing(pt, pt, ctx) != 0) ok = false;      // chi(O_p, O_p)
        if (-ktheory::mukai_pairing(O, ck, ctx) != k + 1) ok = false;   // chi(O, O_C(k))
        if (-ktheory::mukai_pairing(ck, O, ctx) != k + 1) ok = false;   // Serre duality
    }

    // determinant / Smith / signature invariance under unimodular congruence
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 5 + static_cast<std::size_t>(t % 2);
        const IntMat m = oracles::random_matrix(rng, n, -3, 3);
        const Int det = exactalg::det_bareiss(m);
        if (det != oracles::cofactor_det(m)) ok = false;

        const auto factors = exactalg::smith_invariant_factors(m);
        Int prod = 1;
        for (const Int& f : factors) prod *= f;
        if (det != 0 && prod != abs(det)) ok = false;
        if (det == 0 && prod != 0) ok = false;

        const IntMat sym = oracles::random_symmetric(rng, n, -3, 3);
        const IntMat u = oracles::random_unimodular(rng, n, 10);
        if (!(exactalg::signature_of(u * sym * u.transposed()) ==
              exactalg::signature_of(sym)))
            ok = false;
        const auto fs = exactalg::smith_invariant_factors(sym);
        const auto fu = exactalg::smith_invariant_factors(u * sym * u.transposed());
        if (fs != fu) ok = false;
    }

    criterion("P1", ok,
              "reflection isometry, duality involution, Riemann-Roch sign, and "
              "det/Smith/signature congruence invariance on 200 seeded instances");
}

}  // namespace

int main() {
    c1_milnor();
    c2_involution();
    c3_gorenstein();
    c4_rank24();
    c5_quiver_congruence();
    c6_ep_equality();
    c7_inertia();
    c8_monodromy();
    c9_duality();
    p1_property_suites();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
