// Command-line surface for the union-closed family toolkit.
//
// Exit status: 0 = success / all audited claims hold; 1 = counterexample or
// conjecture failure found; 2 = usage, parse, or precondition error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ucs/audit.hpp"
#include "ucs/io.hpp"
#include "ucs/quasiminimal.hpp"
#include "ucs/search.hpp"

namespace {

ucs::Family load_family(const std::string& path, bool strip_empty) {
    std::ifstream in(path);
    if (!in) throw ucs::parse_error("cannot open " + path);
    ucs::ParsedFamily pf = ucs::parse_family(in, strip_empty);
    for (const auto& w : pf.warnings) std::cerr << "warning: " << w << "\n";
    return pf.family;
}

ucs::SetMask parse_set_arg(const std::string& text, int n) {
    return ucs::detail::elements_to_mask(ucs::detail::parse_elements(text), n);
}

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ucs::parse_error("cannot write " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"union-closed set family toolkit"};
    app.require_subcommand(1);
    bool strip_empty = false;
    app.add_flag("--strip-empty", strip_empty,
                 "drop empty sets from input files (with a warning) instead of rejecting");

    std::string file, set_arg, to_arg, y1_arg, y2_arg, kind_arg = "uc", strategy_arg = "greedy";
    std::string claims_arg, format_arg = "text", out_path;
    int n = 3, element = 0, gen_count = 1, jobs = 1, t4_budget = 512;
    std::uint64_t seed = 0;
    bool count_only = false, long_run = false;

    auto* c_check = app.add_subcommand("check", "conjecture verdict for a family file");
    c_check->add_option("file", file)->required();

    auto* c_basis = app.add_subcommand("basis", "basis of a family");
    c_basis->add_option("file", file)->required();

    auto* c_decomp = app.add_subcommand("decompose", "decompose a member into basis parts");
    c_decomp->add_option("file", file)->required();
    c_decomp->add_option("--set", set_arg, "member as comma-separated elements")->required();

    auto* c_closure = app.add_subcommand("closure", "union closure of a family");
    c_closure->add_option("file", file)->required();

    auto* c_compl = app.add_subcommand("complement", "D = A - F");
    c_compl->add_option("file", file)->required();

    auto* c_seq = app.add_subcommand("seq", "build a deletion sequence (writes a sequence file)");
    c_seq->add_option("file", file)->required();
    c_seq->add_option("--kind", kind_arg, "uc|ideal|optimal")->required();
    c_seq->add_option("--element", element, "the i of ideal/optimal");
    c_seq->add_option("--strategy", strategy_arg, "greedy|by-size (uc only)");
    c_seq->add_option("--out", out_path, "output path (default stdout)");

    auto* c_vseq = app.add_subcommand("validate-seq", "validate a sequence file");
    c_vseq->add_option("file", file)->required();

    auto* c_pred = app.add_subcommand("pred", "pointwise predicates");
    c_pred->require_subcommand(1);
    auto* p_vinc = c_pred->add_subcommand("vincolated", "is X in D vincolated?");
    p_vinc->add_option("file", file)->required();
    p_vinc->add_option("--set", set_arg)->required();
    auto* p_vto = c_pred->add_subcommand("vincolated-to", "is X vincolated to Y?");
    p_vto->add_option("file", file)->required();
    p_vto->add_option("--set", set_arg)->required();
    p_vto->add_option("--to", to_arg)->required();
    auto* p_min = c_pred->add_subcommand("minimal", "minimal elements of the family in the file");
    p_min->add_option("file", file)->required();
    auto* p_qm = c_pred->add_subcommand("quasiminimal", "quasiminimality of i for {Y1, Y2}");
    p_qm->add_option("file", file)->required();
    p_qm->add_option("--element", element)->required();
    p_qm->add_option("--y1", y1_arg)->required();
    p_qm->add_option("--y2", y2_arg)->required();

    auto* c_enum = app.add_subcommand("enumerate", "enumerate union-closed families");
    c_enum->add_option("-n", n, "universe size")->required();
    c_enum->add_flag("--count-only", count_only);
    c_enum->add_flag("--long-run", long_run, "allow n = 5");

    auto* c_sample = app.add_subcommand("sample", "seeded random union-closed family");
    c_sample->add_option("-n", n, "universe size")->required();
    c_sample->add_option("--sets", gen_count, "generator count")->required();
    c_sample->add_option("--seed", seed)->required();

    auto* c_audit = app.add_subcommand("audit", "audit structural claims over all instances");
    c_audit->add_option("-n", n, "universe size")->required();
    c_audit->add_option("--claims", claims_arg, "comma-separated claim ids (default all)");
    c_audit->add_option("--jobs", jobs, "worker threads");
    c_audit->add_option("--format", format_arg, "text|json");
    c_audit->add_option("--out", out_path, "output path (default stdout)");
    c_audit->add_option("--t4-budget", t4_budget, "clause-4 evaluations per instance at n >= 4");
    c_audit->add_flag("--long-run", long_run, "allow n = 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_check) {
            ucs::Family f = load_family(file, strip_empty);
            ucs::ConjectureVerdict v = ucs::check_conjecture(f);
            std::cout << "conjecture: " << (v.holds ? "holds" : "FAILS") << "\n";
            std::cout << "abundant:";
            for (int i : v.abundant_elements) std::cout << " " << i;
            std::cout << "\nidentity: " << (v.identity_checked ? "ok" : "BROKEN") << "\n";
            return v.holds && v.identity_checked ? 0 : 1;
        }
        if (*c_basis) {
            ucs::render_family(std::cout, ucs::basis(load_family(file, strip_empty)));
            return 0;
        }
        if (*c_decomp) {
            ucs::Family f = load_family(file, strip_empty);
            ucs::BasisDecomposition d = ucs::decompose(f, parse_set_arg(set_arg, f.universe_size()));
            for (ucs::SetMask p : d.parts) std::cout << ucs::detail::mask_to_line(p) << "\n";
            return 0;
        }
        if (*c_closure) {
            ucs::render_family(std::cout, ucs::union_closure(load_family(file, strip_empty)));
            return 0;
        }
        if (*c_compl) {
            ucs::render_family(std::cout, ucs::complement_family(load_family(file, strip_empty)));
            return 0;
        }
        if (*c_seq) {
            ucs::Family f = load_family(file, strip_empty);
            ucs::DeletionSequence seq;
            if (kind_arg == "uc") {
                if (strategy_arg != "greedy" && strategy_arg != "by-size")
                    throw ucs::parse_error("unknown strategy: " + strategy_arg);
                seq = ucs::build_union_closed_sequence(f, strategy_arg == "greedy"
                                                              ? ucs::SeqStrategy::greedy_basis
                                                              : ucs::SeqStrategy::by_size);
            } else if (kind_arg == "ideal" || kind_arg == "optimal") {
                if (element == 0)
                    throw ucs::parse_error("--kind " + kind_arg + " requires --element");
                if (kind_arg == "ideal") {
                    seq = ucs::build_ideal_sequence(f, element);
                } else {
                    ucs::OptimalOutcome out = ucs::build_optimal_sequence(f, element);
                    if (auto* pre = std::get_if<ucs::PreconditionNotMet>(&out))
                        throw ucs::parse_error("precondition not met: " + pre->detail);
                    if (auto* ref = std::get_if<ucs::RefutationReport>(&out)) {
                        std::cerr << "refutation: " << ref->detail << "\n";
                        return 1;
                    }
                    seq = std::get<ucs::DeletionSequence>(out);
                }
            } else {
                throw ucs::parse_error("unknown sequence kind: " + kind_arg);
            }
            std::ostringstream text;
            ucs::render_sequence(text, seq);
            write_out(out_path, text.str());
            return 0;
        }
        if (*c_vseq) {
            std::ifstream in(file);
            if (!in) throw ucs::parse_error("cannot open " + file);
            ucs::ParsedSequence ps = ucs::parse_sequence(in, strip_empty);
            ucs::ValidationReport rep = ucs::validate_sequence(ps.sequence);
            std::size_t step = 0;
            for (const auto& s : rep.steps) {
                std::cout << "step " << ++step << " delete " << ucs::mask_to_string(s.deleted)
                          << ": " << (s.union_closed ? "union-closed" : "NOT union-closed");
                if (s.violation)
                    std::cout << " (violating pair " << ucs::mask_to_string(s.violation->first)
                              << ", " << ucs::mask_to_string(s.violation->second) << ")";
                std::cout << "\n";
            }
            std::cout << "verdict: " << (rep.valid ? "valid " + ucs::kind_tag(ps.sequence)
                                                   : "INVALID: " + rep.reason)
                      << "\n";
            return rep.valid ? 0 : 1;
        }
        if (*p_vinc) {
            ucs::Family f = load_family(file, strip_empty);
            auto w = ucs::vincolated_witness(f, parse_set_arg(set_arg, f.universe_size()));
            if (w)
                std::cout << "vincolated: yes, witness Y=" << ucs::mask_to_string(w->y)
                          << " with X|Y=" << ucs::mask_to_string(w->result) << " in D\n";
            else
                std::cout << "vincolated: no\n";
            return 0;
        }
        if (*p_vto) {
            ucs::Family f = load_family(file, strip_empty);
            bool v = ucs::is_vincolated_to(f, parse_set_arg(set_arg, f.universe_size()),
                                           parse_set_arg(to_arg, f.universe_size()));
            std::cout << "vincolated-to: " << (v ? "yes" : "no") << "\n";
            return 0;
        }
        if (*p_min) {
            ucs::Family d = load_family(file, strip_empty);
            std::cout << "minimal:";
            for (int j : ucs::minimal_elements(d)) std::cout << " " << j;
            std::cout << "\n";
            return 0;
        }
        if (*p_qm) {
            ucs::Family f = load_family(file, strip_empty);
            auto cert = ucs::quasiminimal_certificate(f, element,
                                                      parse_set_arg(y1_arg, f.universe_size()),
                                                      parse_set_arg(y2_arg, f.universe_size()));
            if (cert) {
                std::cout << "quasiminimal: yes\n";
                ucs::render_sequence(std::cout, cert->sequence);
            } else {
                std::cout << "quasiminimal: no\n";
            }
            return 0;
        }
        if (*c_enum) {
            if (count_only) {
                std::cout << ucs::count_union_closed(n, long_run) << "\n";
            } else {
                bool first = true;
                ucs::for_each_union_closed(n, [&](const ucs::Family& f) {
                    if (!first) std::cout << "\n";
                    first = false;
                    ucs::render_family(std::cout, f);
                }, long_run);
            }
            return 0;
        }
        if (*c_sample) {
            ucs::render_family(std::cout, ucs::sample_union_closed(n, gen_count, seed));
            return 0;
        }
        if (*c_audit) {
            ucs::AuditOptions opts;
            opts.n = n;
            opts.jobs = jobs;
            opts.t4_budget = t4_budget;
            opts.long_run = long_run;
            if (!claims_arg.empty()) {
                std::stringstream ss(claims_arg);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    opts.claims.insert(ucs::claim_from_name(ucs::detail::trim(tok)));
            }
            if (format_arg != "text" && format_arg != "json")
                throw ucs::parse_error("unknown format: " + format_arg);
            ucs::AuditReport rep = ucs::audit_all(opts);
            write_out(out_path, ucs::render_report(rep, format_arg == "json"));
            std::uint64_t fails = 0;
            for (const auto& [c, s] : rep.per_claim) fails += s.failures.size();
            return fails == 0 ? 0 : 1;
        }
    } catch (const ucs::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
