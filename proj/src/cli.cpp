#include "strangedual/cli.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "strangedual/diagrams.hpp"
#include "strangedual/exactalg.hpp"
#include "strangedual/ktheory.hpp"
#include "strangedual/singularities.hpp"
#include "strangedual/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace strangedual::cli {

namespace {

using nlohmann::ordered_json;

std::string triple_str(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

std::string weights_str(const sing::WeightSystem& ws) {
    std::string s = "(";
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ws.weights[i]);
    }
    return s + ";" + std::to_string(ws.h) + ")";
}

std::string factors_str(const std::vector<Int>& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += f[i].get_str();
    }
    return s + ")";
}

std::string signature_str(const exactalg::Signature& s) {
    return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_zero) + "," +
           std::to_string(s.n_minus) + ")";
}

ordered_json invariants_json(const ktheory::LatticeInvariants& inv) {
    ordered_json j;
    j["rank"] = inv.rank;
    j["det"] = to_long(inv.det);
    j["signature"] = ordered_json::array(
        {inv.signature.n_plus, inv.signature.n_zero, inv.signature.n_minus});
    ordered_json f = ordered_json::array();
    for (const Int& x : inv.invariant_factors) f.push_back(to_long(x));
    j["invariant_factors"] = std::move(f);
    return j;
}

ktheory::BilinearLattice that_lattice(const std::array<int, 3>& t) {
    return ktheory::lattice_from_gram(
        diagrams::gram_from_marked_graph(diagrams::that_diagram(t[0], t[1], t[2])));
}

int cmd_list(bool as_json, std::ostream& out) {
    if (as_json) {
        out << sing::table_json().dump(2) << '\n';
        return 0;
    }
    for (const auto& r : sing::table()) {
        out << std::left << std::setw(5) << r.name << std::setw(15) << weights_str(r.ws)
            << "delta " << std::setw(9) << triple_str(r.dolgachev) << "gamma " << std::setw(9)
            << triple_str(r.gabrielov) << "dual " << r.dual << '\n';
    }
    return 0;
}

int cmd_show(const std::string& name, bool as_json, std::ostream& out) {
    const auto& r = sing::record(name);
    const auto inv_delta = ktheory::invariants_of(that_lattice(r.dolgachev));
    const auto inv_gamma = ktheory::invariants_of(that_lattice(r.gabrielov));

    const unsigned h = static_cast<unsigned>(r.ws.h);
    const IntMat cox = ktheory::coxeter_element(that_lattice(r.gabrielov));
    const IntPoly cp = exactalg::char_poly(cox);
    const auto factorization = exactalg::cyclotomic_factorization(cp, 2 * h);
    const auto order = ktheory::matrix_order(cox, 2 * h);

    if (as_json) {
        ordered_json j;
        j["name"] = r.name;
        j["weights"] = r.ws.weights;
        j["h"] = r.ws.h;
        j["milnor_number"] = sing::milnor_number(r);
        j["dolgachev"] = r.dolgachev;
        j["gabrielov"] = r.gabrielov;
        j["dual"] = r.dual;
        j["that_delta"] = invariants_json(inv_delta);
        j["that_gamma"] = invariants_json(inv_gamma);
        ordered_json cj;
        cj["char_poly"] = cp.str();
        if (factorization) cj["cyclotomic_orders"] = *factorization;
        if (order) cj["order"] = *order;
        j["coxeter"] = std::move(cj);
        out << j.dump(2) << '\n';
        return 0;
    }

    out << r.name << "  weights " << weights_str(r.ws) << "  mu " << sing::milnor_number(r)
        << "  dual " << r.dual << '\n';
    out << "  delta " << triple_str(r.dolgachev) << "  gamma " << triple_str(r.gabrielov)
        << '\n';
    out << "  T-hat(delta): rank " << inv_delta.rank << ", det " << inv_delta.det.get_str()
        << ", signature " << signature_str(inv_delta.signature) << ", invariant factors "
        << factors_str(inv_delta.invariant_factors) << '\n';
    out << "  T-hat(gamma): rank " << inv_gamma.rank << ", det " << inv_gamma.det.get_str()
        << ", signature " << signature_str(inv_gamma.signature) << ", invariant factors "
        << factors_str(inv_gamma.invariant_factors) << '\n';
    out << "  coxeter: char poly = " << cp.str();
    if (factorization) {
        out << " =";
        for (unsigned d : *factorization) out << " Phi(" << d << ")";
    }
    if (order) out << ", order " << *order << " (h = " << h << ")";
    out << '\n';
    return 0;
}

int cmd_verify(bool as_json, const std::string& check, unsigned dmax, std::ostream& out) {
    verify::VerifyOptions opt;
    opt.cyclotomic_bound = dmax;
    opt.check_filter = check;
    const verify::Verifier verifier(sing::table(), opt);
    const auto report = verifier.run_all();
    if (as_json)
        out << verify::report_json(report).dump(2) << '\n';
    else
        out << verify::report_text(report);
    return report.fail > 0 ? 1 : 0;
}

int cmd_gram(const std::string& kind, const std::array<int, 3>& t, const std::string& format,
             std::ostream& out) {
    IntMat m;
    if (kind == "that") {
        m = diagrams::gram_from_marked_graph(diagrams::that_diagram(t[0], t[1], t[2]));
    } else if (kind == "divisor") {
        m = diagrams::gram_from_marked_graph(diagrams::divisor_graph(t[0], t[1], t[2]));
    } else if (kind == "quiver-k3") {
        m = ktheory::quiver_k3_gram(t);
    } else if (kind == "ep") {
        const auto ep = ktheory::ep_collection(t);
        m = ktheory::collection_gram(ep.vectors, ep.ctx);
    } else {
        throw std::domain_error("unknown gram kind: " + kind);
    }
    if (format == "json")
        out << diagrams::matrix_json(m).dump() << '\n';
    else
        out << matrix_csv(m);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice toolkit for the fourteen exceptional unimodal singularities"};
    app.name("strangedual");
    app.require_subcommand(1);

    bool list_json = false;
    auto* list = app.add_subcommand("list", "Print the table of singularities");
    list->add_flag("--json", list_json, "JSON output");

    std::string show_name;
    bool show_json = false;
    auto* show = app.add_subcommand("show", "Lattice data attached to one singularity");
    show->add_option("name", show_name, "record name, e.g. E12")->required();
    show->add_flag("--json", show_json, "JSON output");

    bool verify_json = false;
    std::string verify_check;
    unsigned verify_dmax = 84;
    auto* ver = app.add_subcommand("verify", "Run the verification suite");
    ver->add_flag("--json", verify_json, "JSON report");
    ver->add_option("--check", verify_check, "restrict to one check id (C1..C9)")
        ->check(CLI::IsMember({"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"}));
    ver->add_option("--dmax", verify_dmax, "cyclotomic search bound")
        ->check(CLI::PositiveNumber);

    std::string gram_kind, gram_format = "csv";
    std::array<int, 3> gram_triple{};
    auto* gram = app.add_subcommand("gram", "Print a Gram matrix");
    gram->add_option("kind", gram_kind, "that | divisor | quiver-k3 | ep")->required();
    gram->add_option("p", gram_triple[0])->required();
    gram->add_option("q", gram_triple[1])->required();
    gram->add_option("r", gram_triple[2])->required();
    gram->add_option("--format", gram_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> argv_strings;
    argv_strings.reserve(args.size() + 1);
    argv_strings.emplace_back("strangedual");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_strings.size());
    for (const auto& s : argv_strings) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (list->parsed()) return cmd_list(list_json, out);
        if (show->parsed()) return cmd_show(show_name, show_json, out);
        if (ver->parsed()) return cmd_verify(verify_json, verify_check, verify_dmax, out);
        if (gram->parsed()) return cmd_gram(gram_kind, gram_triple, gram_format, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace strangedual::cli
