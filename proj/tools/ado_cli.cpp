// Command-line front end: compute, check-fibred, regress, predict.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ado/fibred.hpp"
#include "ado/regress.hpp"
#include "ado/tables.hpp"

#ifndef ADO_DEFAULT_CATALOG
#define ADO_DEFAULT_CATALOG "data/knots.jsonl"
#endif

using namespace ado;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string unit_string(const RingCtx& ring, const CycloNum& c) {
    for (int k = 0; k < 2 * ring.p(); ++k)
        if (minus_q_pow(ring, k) == c) return "(-q)^" + std::to_string(k);
    return "not a power of -q";
}

void print_prediction(const Prediction& pr, int p) {
    const RingCtx& ring = RingCtx::get(p);
    std::cout << "predicted top coefficient: " << format_coeff(pr.top_coeff) << "  [" << unit_string(ring, pr.top_coeff)
              << "]\n"
              << "predicted breadth: " << pr.breadth << "  top term: " << format_top_term(pr.top_coeff, pr.max_exp2)
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ADO invariants of braid closures and fibredness obstructions"};
    app.require_subcommand(1);
    std::string catalog = ADO_DEFAULT_CATALOG;
    app.add_option("--catalog", catalog, "knot catalog (JSON lines)");
    int workers = 0;
    app.add_option("--workers", workers, "worker threads (default: ADO_WORKERS or all cores)")->check(CLI::NonNegativeNumber);

    // compute
    auto* compute = app.add_subcommand("compute", "compute N_p of a catalog knot or a braid closure");
    int cp = 0;
    std::string cname, cbraid;
    int cstrands = 0;
    bool cjson = false, cpretty = false;
    compute->add_option("--p", cp, "root order p >= 2")->required();
    auto* name_opt = compute->add_option("--name", cname, "catalog name");
    auto* braid_opt = compute->add_option("--braid", cbraid, "braid word, e.g. \"1,-2,1,-2\"");
    compute->add_option("--strands", cstrands, "strand count for --braid");
    name_opt->excludes(braid_opt);
    compute->add_flag("--json", cjson, "print the result as JSON");
    compute->add_flag("--pretty", cpretty, "print the nonnegative part (default)");

    // check-fibred
    auto* fib = app.add_subcommand("check-fibred", "fibredness obstructions from N_p at several p");
    std::string plist = "3,4", fname;
    fib->add_option("--p-list", plist, "comma separated root orders");
    fib->add_option("--name", fname, "catalog name")->required();

    // regress
    auto* reg = app.add_subcommand("regress", "recompute the reference tables");
    int table = 1;
    std::string subset, rps = "3,4";
    reg->add_option("--table", table, "1 or 2")->check(CLI::IsMember({1, 2}));
    reg->add_option("--subset", subset, "comma separated knot names");
    reg->add_option("--p-list", rps, "for table 2: root orders to check");

    // predict
    auto* pred = app.add_subcommand("predict", "predicted top terms");
    std::string mode, pbase = "unknot", pbraid;
    int pp = 4, pstrands = 0, g = 0, s = 1;
    PlumbingSpec spec;
    bool verify = false;
    pred->add_option("--mode", mode, "plumbing | homogeneous | sqp")->required()->check(CLI::IsMember({"plumbing", "homogeneous", "sqp"}));
    pred->add_option("--p", pp, "root order");
    pred->add_option("--base", pbase, "plumbing base: unknot or a catalog name");
    pred->add_option("--nplus", spec.n_plus);
    pred->add_option("--nminus", spec.n_minus);
    pred->add_option("--mplus", spec.m_plus);
    pred->add_option("--mminus", spec.m_minus);
    pred->add_option("--braid", pbraid);
    pred->add_option("--strands", pstrands);
    pred->add_option("--g", g);
    pred->add_option("--s", s);
    pred->add_flag("--verify", verify, "compute the invariant of --braid and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) {
            if (cp < 2) throw Error(ErrorKind::InvalidArgument, "p must be at least 2");
            AdoResult r = [&] {
                if (!cname.empty()) return compute_ado(cp, find_record(load_catalog(catalog), cname), workers);
                if (cbraid.empty() && cstrands == 0) throw Error(ErrorKind::InvalidArgument, "give --name or --braid/--strands");
                const BraidWord b = BraidWord::parse(cbraid, cstrands == 0 ? 1 : cstrands);
                return compute_ado(cp, b, workers);
            }();
            if (cjson) std::cout << to_json(r).dump() << "\n";
            else std::cout << pretty_positive(r.poly) << (r.checks.symmetric ? " (symmetric)" : " (NOT symmetric)") << "\n";
            return r.checks.all() ? kOk : kInternal;
        }

        if (*fib) {
            const auto cat = load_catalog(catalog);
            const KnotRecord& rec = find_record(cat, fname);
            if (!rec.genus) throw Error(ErrorKind::MissingGenus, rec.name + " has no genus in the catalog");
            json out{{"knot", rec.name}, {"verdicts", json::array()}};
            std::vector<std::pair<long, long>> residues;
            bool obstructed = false;
            std::string why;
            for (const std::string& ps : split_names(plist)) {
                const int p = std::stoi(ps);
                const FibredVerdict v = fibred_obstruction(compute_ado(p, rec, workers), *rec.genus, rec.components);
                out["verdicts"].push_back(verdict_to_json(rec.name, p, v));
                if (v.kind == FibredVerdict::Kind::NotFibred) {
                    obstructed = true;
                    why = "p=" + ps + ": " + v.reason;
                } else if (v.hopf_residue) {
                    residues.emplace_back(v.modulus, *v.hopf_residue);
                }
            }
            FibredVerdict combined;
            if (!obstructed && !residues.empty()) {
                try {
                    const Residue r = combine_residues(residues);
                    combined.kind = FibredVerdict::Kind::ConsistentWithFibred;
                    combined.hopf_residue = r.value;
                    combined.modulus = r.modulus;
                    combined.reason = "all checks passed";
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::InconsistentResidues) throw;
                    obstructed = true;
                    why = e.what();
                }
            }
            if (obstructed) {
                combined.kind = FibredVerdict::Kind::NotFibred;
                combined.reason = why;
            }
            out["combined"] = verdict_to_json(rec.name, 0, combined);
            out["combined"].erase("p");
            std::cout << out.dump(2) << "\n";
            return obstructed ? kMismatch : kOk;
        }

        if (*reg) {
            const auto cat = load_catalog(catalog);
            std::vector<int> ps;
            for (const auto& x : split_names(rps)) ps.push_back(std::stoi(x));
            const auto lines = table == 1 ? regress_table1(cat, split_names(subset), workers)
                                          : regress_table2(cat, split_names(subset), ps, workers);
            int bad = 0;
            for (const auto& l : lines) {
                std::cout << (l.match ? "MATCH    " : "MISMATCH ") << l.knot << " p=" << l.p << "  " << l.got;
                if (!l.match) std::cout << "  expected " << l.expected;
                std::cout << "\n";
                bad += l.match ? 0 : 1;
            }
            std::cout << (lines.size() - static_cast<size_t>(bad)) << "/" << lines.size() << " match\n";
            return bad == 0 ? kOk : kMismatch;
        }

        if (*pred) {
            if (pp < 2) throw Error(ErrorKind::InvalidArgument, "p must be at least 2");
            const RingCtx& ring = RingCtx::get(pp);
            std::optional<Prediction> pr;
            if (mode == "plumbing") {
                CycloNum base(ring, 1);
                int breadth = 0;
                if (pbase != "unknot") {
                    const TopData t = top_data(compute_ado(pp, find_record(load_catalog(catalog), pbase), workers).poly);
                    base = t.top_coeff;
                    breadth = t.breadth;
                }
                pr = plumbing_predict(base, breadth, spec, pp);
            } else if (mode == "homogeneous") {
                pr = homogeneous_predict(BraidWord::parse(pbraid, pstrands), pp);
            } else {
                pr = sqp_predict(g, s, pp);
            }
            print_prediction(*pr, pp);
            if (verify) {
                if (pbraid.empty()) throw Error(ErrorKind::InvalidArgument, "--verify needs --braid");
                const TopData t = top_data(compute_ado(pp, BraidWord::parse(pbraid, pstrands), workers).poly);
                const bool ok = t.top_coeff == pr->top_coeff && t.breadth == pr->breadth;
                std::cout << "computed top coefficient: " << format_coeff(t.top_coeff) << "  breadth: " << t.breadth << "\n"
                          << (ok ? "MATCH" : "MISMATCH") << "\n";
                return ok ? kOk : kMismatch;
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.is_internal()) return kInternal;
        return e.kind() == ErrorKind::NotHomogeneous ? kMismatch : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
