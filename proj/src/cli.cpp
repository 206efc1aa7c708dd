#include "charp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "charp/error.hpp"
#include "charp/fsing.hpp"
#include "charp/invariants.hpp"
#include "charp/parse.hpp"
#include "charp/perfection.hpp"

namespace charp {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RingOpts {
    std::string ring_text;
    std::string order_text = "grevlex";
    std::string modulus_text;
    std::int64_t max_degree = 600;
    int max_level = 6;
    std::int64_t max_pairs = 200000;
    std::int64_t max_terms = 2000000;

    void attach(CLI::App* cmd, bool with_modulus) {
        cmd->fallthrough();
        cmd->add_option("--ring", ring_text, "ring descriptor, e.g. GF(11)[x,y,z,u,v]")
            ->required();
        cmd->add_option("--order", order_text, "monomial order")
            ->check(CLI::IsMember({"grevlex", "lex"}))
            ->capture_default_str();
        if (with_modulus)
            cmd->add_option("--modulus", modulus_text, "hypersurface equation F for S/(F)");
        cmd->add_option("--max-degree", max_degree, "total degree cap")->capture_default_str();
        cmd->add_option("--max-level", max_level, "perfection level cap")->capture_default_str();
        cmd->add_option("--max-pairs", max_pairs, "Buchberger pair budget")->capture_default_str();
        cmd->add_option("--max-terms", max_terms, "term count cap")->capture_default_str();
    }

    RingPtr build() const {
        Limits limits;
        limits.max_degree = max_degree;
        limits.max_level = max_level;
        limits.max_pairs = max_pairs;
        limits.max_terms = max_terms;
        MonomialOrder order =
            order_text == "lex" ? MonomialOrder::lex : MonomialOrder::grevlex;
        RingPtr base = parse_ring(ring_text, order, limits);
        if (modulus_text.empty()) return base;
        return RingCtx::quotient(base, parse_poly(modulus_text, base));
    }
};

ordered_json json_header() {
    ordered_json j;
    j["schema"] = 1;
    return j;
}

ordered_json poly_strings(const std::vector<Polynomial>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : polys) arr.push_back(to_string(f));
    return arr;
}

ordered_json evidence_json(const TightClosureEvidence& ev) {
    ordered_json j;
    j["witness"] = ev.witness ? ordered_json(to_string(*ev.witness)) : ordered_json(nullptr);
    switch (ev.verdict) {
        case TightClosureEvidence::Verdict::verified: j["verdict"] = "verified"; break;
        case TightClosureEvidence::Verdict::witness_not_found:
            j["verdict"] = "witness_not_found";
            break;
        case TightClosureEvidence::Verdict::not_applicable: j["verdict"] = "not_applicable"; break;
    }
    j["checked_e"] = ev.checked_e;
    ordered_json trace = ordered_json::array();
    for (const auto& [e, member] : ev.trace) {
        ordered_json row;
        row["e"] = e;
        row["member"] = member;
        trace.push_back(std::move(row));
    }
    j["trace"] = std::move(trace);
    j["failed_e"] = ev.failed_e ? ordered_json(*ev.failed_e) : ordered_json(nullptr);
    return j;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

struct ErrorJson {
    const char* kind;
    int code;
};

ErrorJson classify(const Error& e) {
    if (dynamic_cast<const ResourceLimitError*>(&e)) return {"resource", 2};
    if (dynamic_cast<const DegenerateInputError*>(&e)) return {"degenerate", 3};
    if (dynamic_cast<const ParseError*>(&e)) return {"parse", 1};
    if (dynamic_cast<const ContextMismatchError*>(&e)) return {"context", 1};
    if (dynamic_cast<const DomainError*>(&e)) return {"domain", 1};
    return {"error", 1};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime-characteristic commutative algebra toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from an INI file with [subcommand] sections (flags win)");
    int exit_code = 0;

    // ---- fedder ----------------------------------------------------------
    auto fedder_opts = std::make_shared<RingOpts>();
    auto* fedder_cmd = app.add_subcommand("fedder", "Fedder F-purity criterion for S/(F)");
    fedder_opts->attach(fedder_cmd, true);
    fedder_cmd->callback([&out, fedder_opts] {
        RingPtr ctx = fedder_opts->build();
        if (!ctx->has_modulus()) throw DomainError("fedder needs --modulus");
        FedderResult res = fedder_is_fpure(*ctx);
        ordered_json j = json_header();
        j["f_pure"] = res.f_pure;
        j["witness_monomial"] =
            res.witness ? ordered_json(to_string(*res.witness, *ctx)) : ordered_json(nullptr);
        emit(out, j);
    });

    // ---- perfection arithmetic ------------------------------------------
    auto perf_opts = std::make_shared<RingOpts>();
    auto perf_a = std::make_shared<std::string>();
    auto perf_b = std::make_shared<std::string>();
    auto add_perf_pair = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        perf_opts->attach(cmd, false);
        cmd->add_option("--a", *perf_a, "first element, root(poly,e) or a bare polynomial")
            ->required();
        cmd->add_option("--b", *perf_b, "second element")->required();
        return cmd;
    };

    add_perf_pair("perf-gcd", "gcd in the perfection of a polynomial ring")
        ->callback([&out, perf_opts, perf_a, perf_b] {
            RingPtr ring = perf_opts->build();
            PerfElement g = perf_gcd(parse_perf(*perf_a, ring), parse_perf(*perf_b, ring));
            ordered_json j = json_header();
            j["gcd"] = to_string(g);
            emit(out, j);
        });

    add_perf_pair("perf-colon", "principal colon (a : b) in the perfection")
        ->callback([&out, &exit_code, perf_opts, perf_a, perf_b] {
            RingPtr ring = perf_opts->build();
            PerfElement a = parse_perf(*perf_a, ring);
            PerfElement b = parse_perf(*perf_b, ring);
            PerfElement c = perf_colon(a, b);
            bool degenerate = a.is_zero() || b.is_zero();
            ordered_json j = json_header();
            j["generator"] = to_string(c);
            j["degenerate"] = degenerate;
            emit(out, j);
            if (degenerate) exit_code = 3;
        });

    add_perf_pair("perf-eq", "equality of perfection elements")
        ->callback([&out, perf_opts, perf_a, perf_b] {
            RingPtr ring = perf_opts->build();
            ordered_json j = json_header();
            j["equal"] = parse_perf(*perf_a, ring) == parse_perf(*perf_b, ring);
            emit(out, j);
        });

    // ---- fclosure --------------------------------------------------------
    auto fcl_opts = std::make_shared<RingOpts>();
    auto fcl_f = std::make_shared<std::string>();
    auto fcl_ideal = std::make_shared<std::string>();
    auto fcl_bound = std::make_shared<int>(4);
    auto* fcl_cmd = app.add_subcommand("fclosure", "bounded Frobenius-closure membership");
    fcl_opts->attach(fcl_cmd, true);
    fcl_cmd->add_option("--f", *fcl_f, "element to test")->required();
    fcl_cmd->add_option("--ideal", *fcl_ideal, "comma-separated generators")->required();
    fcl_cmd->add_option("--E", *fcl_bound, "search bound")->capture_default_str();
    fcl_cmd->callback([&out, fcl_opts, fcl_f, fcl_ideal, fcl_bound] {
        RingPtr ctx = fcl_opts->build();
        RingPtr base = ctx->poly_ring();
        Polynomial f = parse_poly(*fcl_f, base);
        Ideal ideal(base, parse_poly_list(*fcl_ideal, base));
        ClosureResult res = frobenius_closure_member(f, ideal, *ctx, *fcl_bound);
        ordered_json j = json_header();
        j["found"] = res.found();
        j["e"] = res.e ? ordered_json(*res.e) : ordered_json(nullptr);
        j["bound"] = res.bound;
        emit(out, j);
    });

    // ---- tight closure ---------------------------------------------------
    auto tc_opts = std::make_shared<RingOpts>();
    auto tc_c = std::make_shared<std::string>();
    auto tc_f = std::make_shared<std::string>();
    auto tc_ideal = std::make_shared<std::string>();
    auto tc_bound = std::make_shared<int>(2);
    auto tc_cap = std::make_shared<std::int64_t>(20);

    auto* tcv_cmd = app.add_subcommand("tclose-verify", "verify tight-closure evidence");
    tc_opts->attach(tcv_cmd, true);
    tcv_cmd->add_option("--c", *tc_c, "multiplier to verify")->required();
    tcv_cmd->add_option("--f", *tc_f, "element")->required();
    tcv_cmd->add_option("--ideal", *tc_ideal, "comma-separated generators")->required();
    tcv_cmd->add_option("--E", *tc_bound, "exponent bound")->capture_default_str();
    tcv_cmd->callback([&out, tc_opts, tc_c, tc_f, tc_ideal, tc_bound] {
        RingPtr ctx = tc_opts->build();
        RingPtr base = ctx->poly_ring();
        Polynomial c = parse_poly(*tc_c, base);
        Polynomial f = parse_poly(*tc_f, base);
        Ideal ideal(base, parse_poly_list(*tc_ideal, base));
        TightClosureEvidence ev = tight_closure_verify(c, f, ideal, *ctx, *tc_bound);
        ordered_json j = json_header();
        j["operation"] = "tclose-verify";
        j["ring"] = ctx->descriptor();
        j["element"] = to_string(f);
        j["ideal"] = poly_strings(ideal.gens());
        j["bounds"] = ordered_json{{"E", *tc_bound}};
        j["evidence"] = evidence_json(ev);
        emit(out, j);
    });

    auto* tcs_cmd = app.add_subcommand("tclose-search", "search for a tight-closure multiplier");
    tc_opts->attach(tcs_cmd, true);
    tcs_cmd->add_option("--f", *tc_f, "element")->required();
    tcs_cmd->add_option("--ideal", *tc_ideal, "comma-separated generators")->required();
    tcs_cmd->add_option("--E", *tc_bound, "exponent bound")->capture_default_str();
    tcs_cmd->add_option("--D", *tc_cap, "candidate degree cap")->capture_default_str();
    tcs_cmd->callback([&out, tc_opts, tc_f, tc_ideal, tc_bound, tc_cap] {
        RingPtr ctx = tc_opts->build();
        RingPtr base = ctx->poly_ring();
        Polynomial f = parse_poly(*tc_f, base);
        Ideal ideal(base, parse_poly_list(*tc_ideal, base));
        std::int64_t tried = 0;
        TightClosureEvidence ev =
            tight_witness_search(f, ideal, *ctx, *tc_bound, *tc_cap, &tried);
        ordered_json j = json_header();
        j["operation"] = "tclose-search";
        j["ring"] = ctx->descriptor();
        j["element"] = to_string(f);
        j["ideal"] = poly_strings(ideal.gens());
        j["bounds"] = ordered_json{{"E", *tc_bound}, {"D", *tc_cap}};
        j["candidates_tried"] = tried;
        j["evidence"] = evidence_json(ev);
        emit(out, j);
    });

    // ---- ideal engine ----------------------------------------------------
    auto id_opts = std::make_shared<RingOpts>();
    auto id_ideal = std::make_shared<std::string>();
    auto id_other = std::make_shared<std::string>();
    auto id_f = std::make_shared<std::string>();

    auto* colon_cmd = app.add_subcommand("colon", "colon ideal (I : f)");
    id_opts->attach(colon_cmd, false);
    colon_cmd->add_option("--ideal", *id_ideal, "comma-separated generators")->required();
    colon_cmd->add_option("--f", *id_f, "divisor polynomial")->required();
    colon_cmd->callback([&out, &exit_code, id_opts, id_ideal, id_f] {
        RingPtr ring = id_opts->build();
        Ideal ideal(ring, parse_poly_list(*id_ideal, ring));
        Polynomial f = parse_poly(*id_f, ring);
        Ideal res = colon_ideal(ideal, f);
        ordered_json j = json_header();
        j["generators"] = poly_strings(res.gens());
        j["degenerate"] = f.is_zero();
        emit(out, j);
        if (f.is_zero()) exit_code = 3;
    });

    auto* inter_cmd = app.add_subcommand("intersect", "ideal intersection");
    id_opts->attach(inter_cmd, false);
    inter_cmd->add_option("--ideal", *id_ideal, "first ideal")->required();
    inter_cmd->add_option("--other", *id_other, "second ideal")->required();
    inter_cmd->callback([&out, id_opts, id_ideal, id_other] {
        RingPtr ring = id_opts->build();
        Ideal lhs(ring, parse_poly_list(*id_ideal, ring));
        Ideal rhs(ring, parse_poly_list(*id_other, ring));
        ordered_json j = json_header();
        j["generators"] = poly_strings(ideal_intersect(lhs, rhs).gens());
        emit(out, j);
    });

    auto* member_cmd = app.add_subcommand("member", "ideal membership (modulo F if given)");
    id_opts->attach(member_cmd, true);
    member_cmd->add_option("--ideal", *id_ideal, "comma-separated generators")->required();
    member_cmd->add_option("--f", *id_f, "element to test")->required();
    member_cmd->callback([&out, id_opts, id_ideal, id_f] {
        RingPtr ctx = id_opts->build();
        RingPtr base = ctx->poly_ring();
        Ideal ideal(base, parse_poly_list(*id_ideal, base));
        Polynomial f = parse_poly(*id_f, base);
        bool member = ctx->has_modulus() ? quotient_member(f, ideal, *ctx)
                                         : ideal_member(f, ideal);
        ordered_json j = json_header();
        j["member"] = member;
        emit(out, j);
    });

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis");
    id_opts->attach(gb_cmd, false);
    gb_cmd->add_option("--ideal", *id_ideal, "comma-separated generators")->required();
    gb_cmd->callback([&out, id_opts, id_ideal] {
        RingPtr ring = id_opts->build();
        Ideal ideal(ring, parse_poly_list(*id_ideal, ring));
        ordered_json j = json_header();
        j["basis"] = poly_strings(ideal.groebner().elements());
        emit(out, j);
    });

    // ---- invariants ------------------------------------------------------
    auto inv_opts = std::make_shared<RingOpts>();
    auto inv_f = std::make_shared<std::string>();
    auto inv_gens = std::make_shared<std::string>();
    auto inv_d = std::make_shared<std::int64_t>(0);
    auto inv_cap = std::make_shared<std::int64_t>(8);

    auto* invh_cmd = app.add_subcommand("inv-hilbert",
                                        "invariant dimensions by Burnside and linear algebra");
    inv_opts->attach(invh_cmd, false);
    invh_cmd->add_option("--D", *inv_cap, "maximum degree")->capture_default_str();
    invh_cmd->callback([&out, inv_opts, inv_cap] {
        CyclicAction action(inv_opts->build());
        ordered_json rows = ordered_json::array();
        for (std::int64_t d = 0; d <= *inv_cap; ++d) {
            ordered_json row;
            row["d"] = d;
            row["burnside"] = hilbert_burnside(action, d);
            row["linear"] = hilbert_linear(action, d);
            row["orbit_basis"] = static_cast<std::int64_t>(orbit_sum_basis(action, d).size());
            rows.push_back(std::move(row));
        }
        ordered_json j = json_header();
        j["degrees"] = std::move(rows);
        emit(out, j);
    });

    auto* invo_cmd = app.add_subcommand("inv-orbits", "orbit-sum basis in one degree");
    inv_opts->attach(invo_cmd, false);
    invo_cmd->add_option("--d", *inv_d, "degree")->required();
    invo_cmd->callback([&out, inv_opts, inv_d] {
        CyclicAction action(inv_opts->build());
        ordered_json j = json_header();
        j["orbit_sums"] = poly_strings(orbit_sum_basis(action, *inv_d));
        emit(out, j);
    });

    auto* invc_cmd = app.add_subcommand("inv-check", "invariance under the cyclic shift");
    inv_opts->attach(invc_cmd, false);
    invc_cmd->add_option("--f", *inv_f, "polynomial to test")->required();
    invc_cmd->callback([&out, inv_opts, inv_f] {
        CyclicAction action(inv_opts->build());
        Polynomial f = parse_poly(*inv_f, action.ring());
        ordered_json j = json_header();
        j["invariant"] = is_invariant(f, action);
        emit(out, j);
    });

    auto* invg_cmd = app.add_subcommand("inv-generates",
                                        "degreewise span check for proposed generators");
    inv_opts->attach(invg_cmd, false);
    invg_cmd->add_option("--gens", *inv_gens, "comma-separated invariant generators");
    invg_cmd->add_option("--D", *inv_cap, "degree bound")->capture_default_str();
    invg_cmd->callback([&out, inv_opts, inv_gens, inv_cap] {
        CyclicAction action(inv_opts->build());
        std::vector<Polynomial> gens;
        if (!inv_gens->empty()) gens = parse_poly_list(*inv_gens, action.ring());
        GeneratesReport rep = generates_up_to(action, gens, *inv_cap);
        ordered_json rows = ordered_json::array();
        for (const auto& r : rep.rows) {
            ordered_json row;
            row["d"] = r.d;
            row["span"] = r.span;
            row["dim"] = r.dim;
            rows.push_back(std::move(row));
        }
        ordered_json j = json_header();
        j["success"] = rep.success;
        j["first_deficient_degree"] = rep.first_deficient_degree
                                          ? ordered_json(*rep.first_deficient_degree)
                                          : ordered_json(nullptr);
        j["degrees"] = std::move(rows);
        emit(out, j);
    });

    // ---- remark experiment ----------------------------------------------
    auto rem_opts = std::make_shared<RingOpts>();
    auto rem_trials = std::make_shared<std::int64_t>(100);
    auto rem_seed = std::make_shared<std::uint64_t>(42);
    auto rem_e = std::make_shared<int>(1);
    auto* rem_cmd = app.add_subcommand(
        "remark-experiment", "colon versus Frobenius power: equality in a UFD, violations off it");
    rem_opts->attach(rem_cmd, true);
    rem_cmd->add_option("--trials", *rem_trials, "random pairs to sample")->capture_default_str();
    rem_cmd->add_option("--seed", *rem_seed, "PRNG seed")->capture_default_str();
    rem_cmd->add_option("--e", *rem_e, "Frobenius exponent")->capture_default_str();
    rem_cmd->callback([&out, rem_opts, rem_trials, rem_seed, rem_e] {
        RingPtr ctx = rem_opts->build();
        RemarkReport rep = colon_frobenius_experiment(ctx, *rem_trials, *rem_seed, *rem_e);
        ordered_json j = json_header();
        j["operation"] = "remark-experiment";
        j["ring"] = ctx->descriptor();
        j["mode"] = rep.quotient_mode ? "quotient_exhaustive" : "ufd_random";
        j["e"] = rep.e;
        j["seed"] = rep.seed;
        j["trials"] = rep.trials;
        j["pairs_checked"] = rep.pairs_checked;
        j["violations"] = rep.violations;
        if (rep.first_violation) {
            ordered_json v;
            v["f"] = to_string(rep.first_violation->first);
            v["g"] = to_string(rep.first_violation->second);
            j["first_violation"] = std::move(v);
        } else {
            j["first_violation"] = nullptr;
        }
        emit(out, j);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("charp");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json j = json_header();
        j["error"] = ordered_json{{"kind", "usage"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        ErrorJson info = classify(e);
        ordered_json j = json_header();
        ordered_json detail;
        detail["kind"] = info.kind;
        detail["message"] = e.what();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e))
            detail["position"] = static_cast<std::int64_t>(pe->position());
        j["error"] = std::move(detail);
        err << j.dump() << "\n";
        return info.code;
    }
    return exit_code;
}

}  // namespace charp
