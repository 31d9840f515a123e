#include "strangedual/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "strangedual/diagrams.hpp"
#include "strangedual/exactalg.hpp"
#include "strangedual/ktheory.hpp"

namespace strangedual::verify {

using nlohmann::ordered_json;
using sing::SingularityRecord;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

int sum3(const std::array<int, 3>& t) { return t[0] + t[1] + t[2]; }

std::string triple_str(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

ordered_json signature_json(const exactalg::Signature& s) {
    return ordered_json::array({s.n_plus, s.n_zero, s.n_minus});
}

ordered_json factors_json(const std::vector<Int>& f) {
    ordered_json a = ordered_json::array();
    for (const Int& x : f) a.push_back(to_long(x));
    return a;
}

ordered_json invariants_json(const ktheory::LatticeInvariants& inv) {
    ordered_json j;
    j["rank"] = inv.rank;
    j["det"] = to_long(inv.det);
    j["signature"] = signature_json(inv.signature);
    j["invariant_factors"] = factors_json(inv.invariant_factors);
    return j;
}

std::vector<Int> nontrivial_factors(const std::vector<Int>& f) {
    std::vector<Int> out;
    for (const Int& x : f)
        if (x != 1) out.push_back(x);
    return out;
}

ktheory::BilinearLattice that_lattice(const std::array<int, 3>& t) {
    return ktheory::lattice_from_gram(
        diagrams::gram_from_marked_graph(diagrams::that_diagram(t[0], t[1], t[2])));
}

CheckResult check_c1(const SingularityRecord& r) {
    CheckResult res{"C1", r.name, CheckStatus::Fail, "", {}};
    const int mu = sing::milnor_number(r);
    const Rat prod = sing::milnor_product(r.ws);
    const bool pass = mu == r.subscript() && prod == r.subscript();

    bool integral = true;
    for (int a : r.ws.weights)
        if (r.ws.h % a != 0) integral = false;

    res.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = "Milnor number " + std::to_string(mu) + ", weight product " + prod.get_str();
    res.data["subscript"] = r.subscript();
    res.data["gamma_sum"] = mu;
    res.data["weight_product"] = prod.get_str();
    res.data["integer_product_oracle"] =
        integral ? "applied" : "skipped: h/a_i not all integral";
    return res;
}

CheckResult check_c2(const SingularityRecord& r, const SingularityRecord& dual) {
    CheckResult res{"C2", r.name, CheckStatus::Fail, "", {}};
    const bool involutive = dual.dual == r.name;
    const bool numbers_swap = r.dolgachev == dual.gabrielov && r.gabrielov == dual.dolgachev;
    res.status = involutive && numbers_swap ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = "dual " + dual.name + ", delta/gamma swap " + (numbers_swap ? "ok" : "BROKEN");
    res.data["dual"] = dual.name;
    res.data["dolgachev"] = r.dolgachev;
    res.data["gabrielov"] = r.gabrielov;
    return res;
}

CheckResult check_c3(const SingularityRecord& r) {
    CheckResult res{"C3", r.name, CheckStatus::Fail, "", {}};
    const int a3 = sing::gorenstein_parameter(r.ws.weights, r.ws.h);
    std::vector<int> ext = r.ws.weights;
    ext.push_back(1);
    const int a4 = sing::gorenstein_parameter(ext, r.ws.h);
    res.status = (a3 == -1 && a4 == 0) ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = "parameter " + std::to_string(a3) + " (three variables), " +
                  std::to_string(a4) + " (with the extra weight)";
    res.data["parameter_3var"] = a3;
    res.data["parameter_4var"] = a4;
    return res;
}

CheckResult check_c4(const SingularityRecord& r) {
    CheckResult res{"C4", r.name, CheckStatus::Fail, "", {}};
    const int total = sum3(r.dolgachev) + sum3(r.gabrielov);
    res.status = total == 24 ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = "delta-sum + gamma-sum = " + std::to_string(total);
    res.data["delta_sum"] = sum3(r.dolgachev);
    res.data["gamma_sum"] = sum3(r.gabrielov);
    return res;
}

CheckResult check_c5(const SingularityRecord& r) {
    CheckResult res{"C5", r.name, CheckStatus::Fail, "", {}};
    const IntMat quiver_side = ktheory::quiver_k3_gram(r.dolgachev);
    const IntMat diagram_side = diagrams::gram_from_marked_graph(
        diagrams::that_diagram(r.dolgachev[0], r.dolgachev[1], r.dolgachev[2]));
    const std::vector<std::size_t> witness = ktheory::expected_quiver_witness(r.dolgachev);

    bool witness_ok = true;
    const std::size_t n = quiver_side.rows();
    for (std::size_t i = 0; i < n && witness_ok; ++i)
        for (std::size_t j = 0; j < n && witness_ok; ++j)
            if (quiver_side(i, j) != diagram_side(witness[i], witness[j])) witness_ok = false;

    const auto searched = exactalg::perm_congruent(quiver_side, diagram_side);

    res.status = witness_ok && searched ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = std::string("explicit witness ") + (witness_ok ? "verified" : "FAILED") +
                  ", search " + (searched ? "found a witness" : "found none");
    res.data["witness"] = witness;
    res.data["quiver_gram"] = diagrams::matrix_json(quiver_side);
    res.data["diagram_gram"] = diagrams::matrix_json(diagram_side);
    return res;
}

CheckResult check_c6(const SingularityRecord& r) {
    CheckResult res{"C6", r.name, CheckStatus::Fail, "", {}};
    const auto ep = ktheory::ep_collection(r.dolgachev);
    const IntMat ep_side = ktheory::collection_gram(ep.vectors, ep.ctx);
    const IntMat diagram_side = diagrams::gram_from_marked_graph(
        diagrams::that_diagram(r.dolgachev[0], r.dolgachev[1], r.dolgachev[2]));
    const bool equal = ep_side == diagram_side;
    res.status = equal ? CheckStatus::Pass : CheckStatus::Fail;
    res.details = std::string("spherical-collection Gram ") +
                  (equal ? "matches the diagram entrywise" : "DIFFERS from the diagram");
    res.data["ep_gram"] = diagrams::matrix_json(ep_side);
    return res;
}

CheckResult check_c7(const SingularityRecord& r) {
    CheckResult res{"C7", r.name, CheckStatus::Fail, "", {}};
    using exactalg::Signature;

    const auto sig_delta = exactalg::signature_of(that_lattice(r.dolgachev).gram);
    const auto sig_gamma = exactalg::signature_of(that_lattice(r.gabrielov).gram);
    const Signature want_delta{2, 0, sum3(r.dolgachev) - 2};
    const Signature want_gamma{2, 0, sum3(r.gabrielov) - 2};

    // The curve classes at infinity span the Neron-Severi lattice, which is
    // Lorentzian; deleting the hub leaves the chains contracted by the
    // minimal resolution, and those are negative definite.
    const IntMat div_gram = diagrams::gram_from_marked_graph(
        diagrams::divisor_graph(r.dolgachev[0], r.dolgachev[1], r.dolgachev[2]));
    const auto sig_div = exactalg::signature_of(div_gram);
    const Signature want_div{1, 0, sum3(r.dolgachev) - 3};

    const std::size_t nd = div_gram.rows();
    IntMat chains(nd - 1, nd - 1);
    for (std::size_t i = 1; i < nd; ++i)
        for (std::size_t j = 1; j < nd; ++j) chains(i - 1, j - 1) = div_gram(i, j);
    const auto sig_chains = exactalg::signature_of(chains);
    const Signature want_chains{0, 0, static_cast<int>(nd) - 1};

    const bool pass = sig_delta == want_delta && sig_gamma == want_gamma &&
                      sig_div == want_div && sig_chains == want_chains;
    res.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream d;
    d << "inertia delta (" << sig_delta.n_plus << "," << sig_delta.n_zero << ","
      << sig_delta.n_minus << "), gamma (" << sig_gamma.n_plus << "," << sig_gamma.n_zero << ","
      << sig_gamma.n_minus << "), curves at infinity (" << sig_div.n_plus << ","
      << sig_div.n_zero << "," << sig_div.n_minus << ")";
    res.details = d.str();
    res.data["signature_delta"] = signature_json(sig_delta);
    res.data["signature_gamma"] = signature_json(sig_gamma);
    res.data["signature_divisor"] = signature_json(sig_div);
    res.data["signature_contracted_chains"] = signature_json(sig_chains);
    return res;
}

CheckResult check_c8(const SingularityRecord& r, unsigned cyclotomic_bound) {
    CheckResult res{"C8", r.name, CheckStatus::Fail, "", {}};
    const unsigned h = static_cast<unsigned>(r.ws.h);

    const auto lattice = that_lattice(r.gabrielov);
    const IntMat cox = ktheory::coxeter_element(lattice);
    const IntPoly cp = exactalg::char_poly(cox);
    const auto factorization = exactalg::cyclotomic_factorization(cp, cyclotomic_bound);
    const auto order = ktheory::matrix_order(cox, 2 * h);

    bool divisors_ok = factorization.has_value();
    if (factorization)
        for (unsigned d : *factorization)
            if (h % d != 0) divisors_ok = false;

    bool order_ok = order.has_value();
    if (r.name == "E12" && order != 42u) order_ok = false;

    res.status = divisors_ok && order_ok ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream d;
    if (factorization) {
        d << "char poly =";
        for (unsigned k : *factorization) d << " Phi(" << k << ")";
    } else {
        d << "char poly has no cyclotomic factorization within the bound";
    }
    if (order)
        d << "; order " << *order << (*order == h ? " = h" : " (h = " + std::to_string(h) + ")");
    else
        d << "; no order found up to 2h";
    res.details = d.str();
    res.data["h"] = h;
    res.data["char_poly"] = cp.str();
    if (factorization) res.data["cyclotomic_orders"] = *factorization;
    if (order) res.data["coxeter_order"] = *order;
    return res;
}

CheckResult check_c9(const SingularityRecord& a, const SingularityRecord& b,
                     const std::string& subject) {
    CheckResult res{"C9", subject, CheckStatus::Fail, "", {}};

    const auto inv_delta = ktheory::invariants_of(that_lattice(a.dolgachev));
    const auto inv_gamma = ktheory::invariants_of(that_lattice(a.gabrielov));
    const bool det_match = abs(inv_delta.det) == abs(inv_gamma.det);
    const bool factor_match =
        nontrivial_factors(inv_delta.invariant_factors) ==
        nontrivial_factors(inv_gamma.invariant_factors);

    bool n_match = true;
    ordered_json members = ordered_json::array();
    for (const SingularityRecord* m : {&a, &b}) {
        const auto inv_that = ktheory::invariants_of(that_lattice(m->dolgachev));
        const auto inv_n = ktheory::invariants_of(ktheory::n_lattice(m->dolgachev));
        const bool same = inv_that.rank == inv_n.rank &&
                          abs(inv_that.det) == abs(inv_n.det) &&
                          inv_that.signature == inv_n.signature &&
                          inv_that.invariant_factors == inv_n.invariant_factors;
        if (!same) n_match = false;
        ordered_json entry;
        entry["name"] = m->name;
        entry["diagram_lattice"] = invariants_json(inv_that);
        entry["numerical_grothendieck"] = invariants_json(inv_n);
        members.push_back(std::move(entry));
        if (&a == &b) break;
    }

    res.status = det_match && factor_match && n_match ? CheckStatus::Pass : CheckStatus::Fail;
    std::ostringstream d;
    d << "|det| " << Int(abs(inv_delta.det)).get_str() << " vs "
      << Int(abs(inv_gamma.det)).get_str()
      << ", nontrivial factors " << (factor_match ? "match" : "DIFFER")
      << ", Grothendieck lattice " << (n_match ? "matches" : "DIFFERS");
    res.details = d.str();
    res.data["delta_triple"] = triple_str(a.dolgachev);
    res.data["gamma_triple"] = triple_str(a.gabrielov);
    res.data["delta_invariants"] = invariants_json(inv_delta);
    res.data["gamma_invariants"] = invariants_json(inv_gamma);
    res.data["members"] = std::move(members);
    return res;
}

// Construction preconditions can only break on corrupted tables; a check
// whose inputs cannot even be built is reported as skipped, not failed.
template <typename Fn>
CheckResult guarded(const std::string& check_id, const std::string& subject, Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        return {check_id, subject, CheckStatus::Skipped,
                std::string("precondition failed: ") + e.what(), {}};
    } catch (const std::out_of_range& e) {
        return {check_id, subject, CheckStatus::Skipped,
                std::string("precondition failed: ") + e.what(), {}};
    }
}

}  // namespace

Verifier::Verifier() : table_(sing::table()) {}

Verifier::Verifier(std::vector<SingularityRecord> table, VerifyOptions opt)
    : table_(std::move(table)), opt_(std::move(opt)) {}

const SingularityRecord& Verifier::find(const std::string& name) const {
    for (const auto& r : table_)
        if (r.name == name) return r;
    throw std::out_of_range("unknown singularity: " + name);
}

bool Verifier::enabled(const std::string& check_id) const {
    return opt_.check_filter.empty() || opt_.check_filter == check_id;
}

std::vector<CheckResult> Verifier::verify_record(const std::string& name) const {
    const SingularityRecord& r = find(name);
    std::vector<CheckResult> out;
    auto add = [&](const char* id, auto&& fn) {
        if (enabled(id)) out.push_back(guarded(id, r.name, fn));
    };
    add("C1", [&] { return check_c1(r); });
    add("C2", [&] { return check_c2(r, find(r.dual)); });
    add("C3", [&] { return check_c3(r); });
    add("C4", [&] { return check_c4(r); });
    add("C5", [&] { return check_c5(r); });
    add("C6", [&] { return check_c6(r); });
    add("C7", [&] { return check_c7(r); });
    add("C8", [&] { return check_c8(r, opt_.cyclotomic_bound); });
    return out;
}

std::vector<CheckResult> Verifier::verify_pair(const std::string& name) const {
    const SingularityRecord& r = find(name);
    const SingularityRecord& d = find(r.dual);

    // Pair subject keyed by table order, self-dual records stand alone.
    std::size_t ri = 0, di = 0;
    for (std::size_t k = 0; k < table_.size(); ++k) {
        if (table_[k].name == r.name) ri = k;
        if (table_[k].name == d.name) di = k;
    }
    const SingularityRecord& first = ri <= di ? r : d;
    const SingularityRecord& second = ri <= di ? d : r;
    const std::string subject =
        first.name == second.name ? first.name : first.name + "," + second.name;

    std::vector<CheckResult> out;
    if (enabled("C9"))
        out.push_back(guarded("C9", subject, [&] { return check_c9(first, second, subject); }));
    return out;
}

VerificationReport Verifier::run_all() const {
    VerificationReport report;
    report.version = kToolkitVersion;

    for (const auto& r : table_)
        for (auto& res : verify_record(r.name)) report.results.push_back(std::move(res));

    for (std::size_t k = 0; k < table_.size(); ++k) {
        std::size_t di = k;
        for (std::size_t j = 0; j < table_.size(); ++j)
            if (table_[j].name == table_[k].dual) di = j;
        if (di < k) continue;  // pair already emitted at its first member
        for (auto& res : verify_pair(table_[k].name)) report.results.push_back(std::move(res));
    }

    for (const auto& res : report.results) {
        switch (res.status) {
            case CheckStatus::Pass: ++report.pass; break;
            case CheckStatus::Fail: ++report.fail; break;
            case CheckStatus::Skipped: ++report.skipped; break;
        }
    }
    return report;
}

ordered_json report_json(const VerificationReport& report) {
    ordered_json j;
    j["version"] = report.version;
    ordered_json results = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json e;
        e["check_id"] = r.check_id;
        e["subject"] = r.subject;
        e["status"] = to_string(r.status);
        e["details"] = r.details;
        e["data"] = r.data;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    j["summary"] = ordered_json{
        {"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}};
    return j;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& r : report.results)
        os << r.check_id << "  " << r.subject << "  " << to_string(r.status) << "  "
           << r.details << '\n';
    os << "pass " << report.pass << ", fail " << report.fail << ", skipped " << report.skipped
       << '\n';
    return os.str();
}

}  // namespace strangedual::verify
