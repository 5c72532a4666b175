#include "qforms/cli.hpp"

#include <cstdlib>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "qforms/artin.hpp"
#include "qforms/factorize.hpp"
#include "qforms/localsolve.hpp"
#include "qforms/oracle.hpp"
#include "qforms/parse.hpp"
#include "qforms/spec_io.hpp"
#include "qforms/symbols.hpp"

namespace qforms {

namespace {

using nlohmann::json;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Solvable: return "solvable";
        case Verdict::Unsolvable: return "unsolvable";
        default: return "unknown";
    }
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Solvable: return 0;
        case Verdict::Unsolvable: return 1;
        default: return 2;
    }
}

json instance_json(const EquationInstance& inst) {
    return json{{"a", inst.a().to_string()}, {"b", inst.b().to_string()},
                {"c", inst.c().to_string()}, {"g", inst.g().to_string()},
                {"d", inst.d().to_string()}, {"n", inst.n().to_string()}};
}

void report_json(json& out, const SolveReport& rep, bool all_witnesses) {
    out["verdict"] = verdict_name(rep.verdict);
    out["complete"] = rep.complete;
    out["stage"] = rep.stage;
    out["witness_count"] = rep.witnesses.size();
    json ws = json::array();
    for (const Witness& w : rep.witnesses) {
        ws.push_back(json{{"x", w.x.to_string()},
                          {"y", w.y.to_string()},
                          {"xt", w.xt.to_string()},
                          {"yt", w.yt.to_string()}});
        if (!all_witnesses) break;
    }
    out["witnesses"] = std::move(ws);
    if (rep.failed_place) out["failed_place"] = rep.failed_place->to_string();
    if (rep.artin_parity) out["artin_parity"] = *rep.artin_parity;
    if (!rep.note.empty()) out["note"] = rep.note;
    out["elapsed_ms"] = rep.elapsed.count();
}

json local_verdict_json(const LocalVerdict& v) {
    json j{{"place", v.place.to_string()}, {"solvable", v.solvable}, {"method", v.method}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Place parse_place(const std::string& text, const Fq& F) {
    if (text == "inf" || text == "infinity" || text == "oo") return Place::infinite(F);
    return Place::finite(parse_poly(text, F));
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Solvability of a*x^2 + b*x*y + c*y^2 + g = 0 over F_q[t]", "qforms"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON output");

    std::int64_t qval = 0;
    std::string a_s, b_s, c_s, g_s, f_s, m_s, D_s, l_s, place_s, spec_ref, spec_hilbert_ref;
    int bound = 0;
    std::uint64_t seed = 0;
    bool all_witnesses = false;

    auto add_instance_opts = [&](CLI::App* sub) {
        sub->add_option("--q", qval, "odd prime field size")->required();
        sub->add_option("--a", a_s, "coefficient of x^2")->required();
        sub->add_option("--b", b_s, "coefficient of x*y")->required();
        sub->add_option("--c", c_s, "coefficient of y^2")->required();
        sub->add_option("--g", g_s, "constant term")->required();
    };

    CLI::App* solve = app.add_subcommand(
        "solve", "decide solvability (local conditions, Artin condition, witness search)");
    add_instance_opts(solve);
    CLI::Option* solve_spec =
        solve->add_option("--spec", spec_ref, "class field data: preset name, file path, or inline JSON");
    CLI::Option* solve_bound =
        solve->add_option("--bound", bound, "degree bound for yt in the witness search");
    solve->add_flag("--all-witnesses", all_witnesses, "list every witness, not just the first");

    CLI::App* local = app.add_subcommand("local", "evaluate local solvability at the critical places");
    add_instance_opts(local);
    CLI::Option* local_place =
        local->add_option("--place", place_s, "single place: monic irreducible or \"inf\"");

    CLI::App* criterion =
        app.add_subcommand("criterion", "solvability of l = x^2 + D*y^2 from class field data");
    criterion->add_option("--q", qval, "odd prime field size")->required();
    criterion->add_option("--D", D_s, "squarefree nonconstant D")->required();
    criterion->add_option("--l", l_s, "monic irreducible target")->required();
    criterion->add_option("--spec", spec_ref, "class field data for the sign-adapted field")->required();
    CLI::Option* crit_hilbert = criterion->add_option(
        "--spec-hilbert", spec_hilbert_ref, "class field data for the second field (defaults to --spec)");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive witness search only");
    add_instance_opts(oracle);
    CLI::Option* oracle_bound = oracle->add_option("--bound", bound, "degree bound override for yt");
    oracle->add_flag("--all-witnesses", all_witnesses, "list every witness, not just the first");

    CLI::App* symbol = app.add_subcommand("symbol", "quadratic residue symbol (f/m)");
    symbol->add_option("--q", qval, "odd prime field size")->required();
    symbol->add_option("--f", f_s, "numerator polynomial")->required();
    symbol->add_option("--m", m_s, "nonconstant modulus")->required();

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v at a place");
    hilbert->add_option("--q", qval, "odd prime field size")->required();
    hilbert->add_option("--a", a_s, "first argument")->required();
    hilbert->add_option("--b", b_s, "second argument")->required();
    hilbert->add_option("--place", place_s, "place: monic irreducible or \"inf\"")->required();

    CLI::App* factor = app.add_subcommand("factor", "factor a polynomial into monic irreducibles");
    factor->add_option("--q", qval, "odd prime field size")->required();
    factor->add_option("--f", f_s, "polynomial to factor")->required();
    CLI::Option* factor_seed =
        factor->add_option("--seed", seed, "seed for the randomized splitting step");

    for (CLI::App* sub : {solve, local, criterion, oracle, symbol, hilbert, factor})
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qforms");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        CLI::App* shown = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        return {0, shown->help()};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return {3, json{{"error", e.what()}}.dump()};
    }

    json out;
    int code = 0;
    try {
        Fq F(qval);
        if (app.got_subcommand(solve) || app.got_subcommand(oracle)) {
            EquationInstance inst(parse_poly(a_s, F), parse_poly(b_s, F), parse_poly(c_s, F),
                                  parse_poly(g_s, F));
            out["command"] = app.got_subcommand(solve) ? "solve" : "oracle";
            out["q"] = F.q();
            out["instance"] = instance_json(inst);
            SolveReport rep;
            if (app.got_subcommand(solve)) {
                std::optional<ClassFieldSpec> spec;
                if (solve_spec->count() > 0) spec = load_class_field_spec(spec_ref);
                std::optional<int> b;
                if (solve_bound->count() > 0) b = bound;
                rep = decide(inst, spec, b);
            } else {
                std::optional<int> b;
                if (oracle_bound->count() > 0) b = bound;
                rep = enumerate_solutions(inst, b);
            }
            report_json(out, rep, all_witnesses);
            code = verdict_exit(rep.verdict);
        } else if (app.got_subcommand(local)) {
            EquationInstance inst(parse_poly(a_s, F), parse_poly(b_s, F), parse_poly(c_s, F),
                                  parse_poly(g_s, F));
            out["command"] = "local";
            out["q"] = F.q();
            out["instance"] = instance_json(inst);
            if (inst.n().is_zero()) {
                out["solvable"] = true;
                out["verdicts"] = json::array();
                out["note"] = "n = 0: trivially solvable at every place";
            } else if (local_place->count() > 0) {
                LocalVerdict v = local_solvable(inst, parse_place(place_s, F));
                out["solvable"] = v.solvable;
                out["verdicts"] = json::array({local_verdict_json(v)});
                code = v.solvable ? 0 : 1;
            } else {
                auto [ok, verdicts] = everywhere_locally_solvable(inst);
                out["solvable"] = ok;
                json arr = json::array();
                for (const auto& v : verdicts) arr.push_back(local_verdict_json(v));
                out["verdicts"] = std::move(arr);
                code = ok ? 0 : 1;
            }
        } else if (app.got_subcommand(criterion)) {
            Poly D = parse_poly(D_s, F);
            Poly l = parse_poly(l_s, F);
            ClassFieldSpec plus = load_class_field_spec(spec_ref);
            ClassFieldSpec hil =
                crit_hilbert->count() > 0 ? load_class_field_spec(spec_hilbert_ref) : plus;
            X2Dy2Breakdown br = analyze_x2_Dy2(D, l, plus, hil);
            out["command"] = "criterion";
            out["q"] = F.q();
            out["D"] = D.to_string();
            out["l"] = l.to_string();
            out["solvable"] = br.verdict;
            json bd{{"infinite_failure", br.infinite_failure},
                    {"sign_square", br.sign_square},
                    {"split_in_E", br.split_in_E},
                    {"symbols_ok", br.symbols_ok},
                    {"splits_plus", br.splits_plus},
                    {"splits_hilbert", br.splits_hilbert}};
            if (br.relative_degree_plus) bd["relative_degree_plus"] = *br.relative_degree_plus;
            out["breakdown"] = std::move(bd);
            code = br.verdict ? 0 : 1;
        } else if (app.got_subcommand(symbol)) {
            Poly f = parse_poly(f_s, F);
            Poly m = parse_poly(m_s, F);
            out["command"] = "symbol";
            out["q"] = F.q();
            out["f"] = f.to_string();
            out["m"] = m.to_string();
            out["value"] = jacobi_symbol(f, m);
        } else if (app.got_subcommand(hilbert)) {
            Poly a = parse_poly(a_s, F);
            Poly b = parse_poly(b_s, F);
            Place v = parse_place(place_s, F);
            out["command"] = "hilbert";
            out["q"] = F.q();
            out["a"] = a.to_string();
            out["b"] = b.to_string();
            out["place"] = v.to_string();
            out["value"] = hilbert_symbol(a, b, v);
        } else if (app.got_subcommand(factor)) {
            std::uint64_t s = kDefaultFactorSeed;
            if (factor_seed->count() > 0)
                s = seed;
            else if (const char* env = std::getenv("QFORMS_SEED"))
                s = std::strtoull(env, nullptr, 0);
            Poly f = parse_poly(f_s, F);
            FactoredPoly fp = factorize(f, s);
            out["command"] = "factor";
            out["q"] = F.q();
            out["f"] = f.to_string();
            out["unit"] = fp.unit;
            json arr = json::array();
            for (const auto& [p, e] : fp.factors)
                arr.push_back(json::array({p.to_string(), e}));
            out["factors"] = std::move(arr);
        }
    } catch (const ParseError& e) {
        json err{{"error", e.what()}, {"position", e.position}};
        return {3, pretty ? err.dump(2) : err.dump()};
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        return {3, pretty ? err.dump(2) : err.dump()};
    }
    return {code, pretty ? out.dump(2) : out.dump()};
}

}  // namespace qforms
