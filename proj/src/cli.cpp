#include "pseries/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pseries/theorems.hpp"

namespace pseries {

namespace {

struct RunConfig {
    std::string ring;
    unsigned n = 1;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::vector<std::string> only, skip;
    std::uint64_t max_group = kDefaultMaxCandidates;
    std::uint64_t max_order = kDefaultMaxOrder;
    bool timing = false;
    bool formula_only = false;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string field_name(const LocalRingSpec& f) { return "F_" + std::to_string(f.order()); }

int cmd_ring_info(const RunConfig& cfg, std::ostream& out) {
    const RingSpec ring = parse_ring_spec(cfg.ring);
    nlohmann::json j;
    j["ring"] = ring.canonical();
    j["order"] = ring.order();
    j["units"] = ring.unit_count();
    j["exponent"] = ring.unit_exponent();
    j["factors"] = nlohmann::json::array();
    for (const auto& l : ring.locals()) {
        j["factors"].push_back({{"factor", l.to_string()},
                                {"order", l.order()},
                                {"units", l.unit_count()},
                                {"exponent", l.unit_exponent()},
                                {"is_field", l.is_field()},
                                {"residue_field", field_name(l.residue_field())}});
    }
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "factor,order,units,exponent,is_field,residue_field\n";
        for (const auto& f : j["factors"])
            out << csv_field(f["factor"].get<std::string>()) << "," << f["order"] << "," << f["units"] << ","
                << f["exponent"] << "," << (f["is_field"].get<bool>() ? "true" : "false") << ","
                << f["residue_field"].get<std::string>() << "\n";
    } else {
        out << "ring       " << ring.canonical() << "\n"
            << "|R|        " << ring.order() << "\n"
            << "|R^x|      " << ring.unit_count() << "\n"
            << "exponent   " << ring.unit_exponent() << "\n"
            << "factors\n";
        for (const auto& f : j["factors"])
            out << "  " << std::left << std::setw(10) << f["factor"].get<std::string>() << " |R_j| " << f["order"]
                << "  |R_j^x| " << f["units"] << "  residue field " << f["residue_field"].get<std::string>()
                << (f["is_field"].get<bool>() ? "  (field)" : "") << "\n";
    }
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.only = {cfg.only.begin(), cfg.only.end()};
    opts.skip = {cfg.skip.begin(), cfg.skip.end()};
    opts.max_candidates = cfg.max_group;
    opts.max_order = cfg.max_order;
    const VerifyReport rep = run_verification(parse_ring_spec(cfg.ring), cfg.n, opts);
    if (cfg.format == "json") {
        out << rep.to_json(cfg.timing).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "id,status,expected,actual" << (cfg.timing ? ",millis" : "") << "\n";
        for (const auto& c : rep.checks) {
            out << c.id << "," << (c.passed ? "pass" : "fail") << "," << csv_field(c.expected.dump()) << ","
                << csv_field(c.actual.dump());
            if (cfg.timing) out << "," << std::fixed << std::setprecision(3) << c.millis;
            out << "\n";
        }
    } else {
        out << "GL_" << rep.n << "(" << rep.ring << ")  seed " << rep.seed << "\n";
        for (const auto& c : rep.checks) {
            out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << c.id << std::right << std::fixed
                << std::setprecision(1) << std::setw(10) << c.millis << " ms\n";
            if (!c.passed) out << "      expected " << c.expected.dump() << "\n      actual   " << c.actual.dump() << "\n";
        }
        out << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
    }
    return rep.all_passed() ? kExitPass : kExitFailure;
}

int cmd_intertwine(const RunConfig& cfg, std::ostream& out) {
    const RingSpec ring = parse_ring_spec(cfg.ring);
    require_pipeline_size(ring, cfg.n, cfg.max_order);
    const GroupTable table = GroupTable::build(ring, cfg.n, cfg.max_group);
    PrincipalSeries ps(table, cfg.seed);
    const IntertwiningTable t = intertwining_table(ps);
    const bool agree = t.formula == t.oracle && t.formula == t.characters;
    if (cfg.format == "csv") {
        out << intertwining_csv(t);
    } else if (cfg.format == "json") {
        nlohmann::json j;
        j["ring"] = ring.canonical();
        j["n"] = cfg.n;
        j["seed"] = cfg.seed;
        std::vector<std::string> names;
        for (const auto& c : t.chars) names.push_back(c.to_string());
        j["chars"] = names;
        j["formula"] = t.formula;
        j["oracle"] = t.oracle;
        j["characters"] = t.characters;
        j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        std::size_t w = 4;
        for (const auto& c : t.chars) w = std::max(w, c.to_string().size() + 1);
        out << "dim Hom(pind chi, pind sigma), rows chi, columns sigma (formula/oracle)\n" << std::setw(w) << "";
        for (const auto& c : t.chars) out << std::setw(w) << c.to_string();
        out << "\n";
        for (std::size_t i = 0; i < t.chars.size(); ++i) {
            out << std::setw(w) << t.chars[i].to_string();
            for (std::size_t j = 0; j < t.chars.size(); ++j) {
                std::string cell = std::to_string(t.formula[i][j]);
                if (t.oracle[i][j] != t.formula[i][j] || t.characters[i][j] != t.formula[i][j])
                    cell += "/" + std::to_string(t.oracle[i][j]) + "!";
                out << std::setw(w) << cell;
            }
            out << "\n";
        }
        out << (agree ? "formula and oracles agree\n" : "MISMATCH between formula and oracles\n");
    }
    return agree ? kExitPass : kExitFailure;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const RingSpec ring = parse_ring_spec(cfg.ring);
    const BigInt formula = principal_series_formula(ring, cfg.n);
    std::optional<PrincipalSeriesCount> c;
    std::string note;
    if (cfg.formula_only) {
        note = "formula only (requested)";
    } else {
        try {
            require_pipeline_size(ring, cfg.n, cfg.max_order);
            const GroupTable table = GroupTable::build(ring, cfg.n, cfg.max_group);
            PrincipalSeries ps(table, cfg.seed);
            c = count_principal_series(ps);
        } catch (const SizeGuardExceeded& e) {
            note = std::string("formula only (") + e.what() + ")";
            err << "note: pipeline skipped, " << e.what() << "\n";
        }
    }
    const bool agree = !c || (c->pipeline == formula && c->stabilizer_classes == formula);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["ring"] = ring.canonical();
        j["n"] = cfg.n;
        j["seed"] = cfg.seed;
        j["formula"] = formula.get_str();
        j["pipeline"] = c ? nlohmann::json(c->pipeline.get_str()) : nlohmann::json(nullptr);
        j["stabilizer_classes"] = c ? nlohmann::json(c->stabilizer_classes.get_str()) : nlohmann::json(nullptr);
        j["agree"] = agree;
        if (!note.empty()) j["note"] = note;
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "ring,n,formula,pipeline,stabilizer_classes,agree\n"
            << csv_field(ring.canonical()) << "," << cfg.n << "," << formula.get_str() << ","
            << (c ? c->pipeline.get_str() : "") << "," << (c ? c->stabilizer_classes.get_str() : "") << ","
            << (agree ? "true" : "false") << "\n";
    } else {
        out << "GL_" << cfg.n << "(" << ring.canonical() << ")\n"
            << "formula             " << formula.get_str() << "\n";
        if (c) {
            out << "pipeline            " << c->pipeline.get_str() << "\n"
                << "stabilizer classes  " << c->stabilizer_classes.get_str() << "\n"
                << (agree ? "counts agree\n" : "MISMATCH between counts\n");
        } else {
            out << note << "\n";
        }
    }
    return agree ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Principal series of GL_n over finite commutative rings", "pseries"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("--ring", cfg.ring, "ring spec, e.g. Z/6, GF(3,2), Z/4 x GF(2,1)")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_group = [&](CLI::App* sub) {
        add_ring(sub);
        sub->add_option("-n", cfg.n, "matrix size")->required()->check(CLI::Range(1u, 16u));
        sub->add_option("--seed", cfg.seed, "seed for the randomized steps");
        sub->add_option("--max-group", cfg.max_group, "size guard: maximal number of enumerated candidate matrices");
        sub->add_option("--max-order", cfg.max_order, "size guard: largest |G| for the group-algebra pipeline");
    };

    auto* info = app.add_subcommand("ring-info", "local factors, units and residue fields");
    add_ring(info);
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_group(verify);
    verify->add_option("--only", cfg.only, "comma-separated check ids to run")->delimiter(',');
    verify->add_option("--skip", cfg.skip, "comma-separated check ids to skip")->delimiter(',');
    verify->add_flag("--timing", cfg.timing, "include per-check timings in json/csv");
    auto* inter = app.add_subcommand("intertwine", "table of intertwining dimensions");
    add_group(inter);
    auto* count = app.add_subcommand("count", "count principal series irreducibles");
    add_group(count);
    count->add_flag("--formula-only", cfg.formula_only, "skip the pipeline count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitPass : kExitUsage;
    }

    try {
        if (*info) return cmd_ring_info(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*inter) return cmd_intertwine(cfg, out);
        return cmd_count(cfg, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const VerificationAlarm& e) {
        err << "alarm: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace pseries
