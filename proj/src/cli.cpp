#include "subfac/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "subfac/angle.hpp"
#include "subfac/approx.hpp"
#include "subfac/classify.hpp"
#include "subfac/fusion.hpp"
#include "subfac/selfcheck.hpp"
#include "subfac/serialize.hpp"
#include "subfac/tower.hpp"

namespace subfac {

namespace {

std::string pretty(const Cyc& v, int digits) {
    std::string approx = decimal_string(v, unsigned(digits));
    if (auto rad = radical_string(v)) return *rad + " (~ " + approx + ")";
    return "~ " + approx;
}

std::string csv(const std::vector<long>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<long> parse_csv(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != item.size() || item.empty())
            throw std::invalid_argument("expected a comma-separated list of integers, got \"" +
                                        s + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty multiplicity vector");
    return out;
}

FusionParams parse_fusion_mode(const std::string& mode) {
    if (mode == "generic") return FusionParams::generic();
    auto colon = mode.find(':');
    if (colon != std::string::npos) {
        std::string head = mode.substr(0, colon);
        int arg = 0;
        try {
            arg = std::stoi(mode.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad fusion mode argument in \"" + mode + "\"");
        }
        if (head == "generic") return FusionParams::generic(arg);
        if (head == "truncated") return FusionParams::truncated(arg);
    }
    throw std::invalid_argument("fusion mode must be generic, generic:D, or truncated:N");
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void no_dot(const RunConfig& cfg) {
    if (cfg.output == OutputMode::dot)
        throw std::invalid_argument("dot output is not available for this command");
}

int cmd_graphs_list(const RunConfig& cfg, int max_ell, const std::string& name,
                    std::ostream& out) {
    std::vector<CoxeterGraph> gs;
    if (!name.empty()) {
        gs.push_back(parse_graph(name));
    } else {
        gs = catalogue(max_ell);
    }
    if (cfg.output == OutputMode::dot) {
        for (const auto& g : gs) out << graph_dot(g);
        return 0;
    }
    if (cfg.output == OutputMode::text) {
        for (const auto& g : gs) {
            out << g.name << "  ell=" << g.ell << "  rank=" << g.rank
                << "  norm^2 = " << pretty(g.delta * g.delta, cfg.precision_digits)
                << "  pointed:";
            for (const auto& p : pointed_variants(g)) out << " " << p.name;
            out << "\n";
        }
        return 0;
    }
    Json doc;
    doc["graphs"] = Json::array();
    for (const auto& g : gs) {
        Json jg = graph_json(g, cfg.precision_digits);
        Json pv = Json::array();
        for (const auto& p : pointed_variants(g)) pv.push_back(p.name);
        jg["pointed"] = pv;
        doc["graphs"].push_back(jg);
    }
    emit_json(out, doc);
    return 0;
}

int cmd_tower_build(const RunConfig& cfg, const std::string& pointed, int level,
                    std::ostream& out) {
    no_dot(cfg);
    if (level > cfg.level_cap) throw NotStabilized(level, cfg.level_cap);
    PointedCoxeterGraph p = parse_pointed(pointed);
    Tower t = Tower::from_pointed(p, level);
    if (cfg.output == OutputMode::text) {
        out << "graph: " << p.name << "\n";
        out << "delta = " << pretty(t.delta(), cfg.precision_digits) << "\n";
        out << "tau = " << pretty(t.tau(), cfg.precision_digits) << "\n";
        for (int n = 0; n <= level; ++n) {
            const TowerLevel& l = t.level(n);
            out << "level " << n << ": dim " << l.dim() << ", blocks";
            for (size_t b = 0; b < l.verts.size(); ++b)
                out << " v" << l.verts[b] << ":" << l.block_size(int(b));
            out << "\n";
        }
        return 0;
    }
    Json doc = tower_json(t, level, cfg.precision_digits);
    doc["pointed"] = p.name;
    emit_json(out, doc);
    return 0;
}

int cmd_ghj_principal(const RunConfig& cfg, const std::string& pointed, std::ostream& out) {
    PointedCoxeterGraph p = parse_pointed(pointed);
    PrincipalGraphResult r = ghj_principal_graph(p, cfg.level_cap);
    if (cfg.output == OutputMode::dot) {
        out << principal_graph_dot(r);
        return 0;
    }
    if (cfg.output == OutputMode::text) {
        out << "graph: " << p.name << "\n";
        out << "depth: " << r.depth << "\n";
        out << "stable level: " << r.stable_level << "\n";
        if (r.norm_identified)
            out << "norm^2 = " << pretty(r.norm_squared, cfg.precision_digits) << "\n";
        out << "norm^2 in [" << decimal_string(r.norm_lo, unsigned(cfg.precision_digits)) << ", "
            << decimal_string(r.norm_hi, unsigned(cfg.precision_digits)) << "]\n";
        out << "rows (chain labels):";
        for (int lab : r.stable.rows) out << " " << lab;
        out << "\ncols (graph vertices):";
        for (int v : r.stable.cols) out << " " << v;
        out << "\n";
        for (const auto& row : r.stable.mult) out << csv(row) << "\n";
        return 0;
    }
    Json doc = principal_graph_json(r, cfg.precision_digits);
    doc["pointed"] = p.name;
    emit_json(out, doc);
    return 0;
}

int cmd_ghj_index(const RunConfig& cfg, const std::string& pointed, std::ostream& out) {
    no_dot(cfg);
    PointedCoxeterGraph p = parse_pointed(pointed);
    Cyc idx = ghj_index(p, cfg.level_cap);
    if (cfg.output == OutputMode::text) {
        out << pretty(idx, cfg.precision_digits) << "\n";
        return 0;
    }
    Json doc;
    doc["pointed"] = p.name;
    doc["index"] = cyc_json(idx, cfg.precision_digits);
    emit_json(out, doc);
    return 0;
}

int cmd_angle(const RunConfig& cfg, const std::string& pointed, const std::string& method,
              int level, std::ostream& out) {
    no_dot(cfg);
    PointedCoxeterGraph p = parse_pointed(pointed);
    int digits = cfg.precision_digits;

    if (method == "both") {
        AngleResult closed = angle_closed_form(p);
        AngleResult oracle = angle_path_oracle(p);
        bool agree = closed.cos_value == oracle.cos_value;
        if (cfg.output == OutputMode::text) {
            out << "closed_form: cos = " << pretty(closed.cos_value, digits) << "\n";
            out << "path_oracle: cos = " << pretty(oracle.cos_value, digits) << "\n";
            out << "agree: " << (agree ? "yes" : "no") << "\n";
            return 0;
        }
        Json doc;
        doc["pointed"] = p.name;
        doc["methods"]["closed_form"] = angle_json(closed, digits);
        doc["methods"]["path_oracle"] = angle_json(oracle, digits);
        doc["agree"] = agree;
        doc["cos"] = cyc_json(closed.cos_value, digits);
        emit_json(out, doc);
        return 0;
    }

    if (method == "spectrum") {
        Tower t = Tower::from_pointed(p);
        if (level > cfg.level_cap) throw NotStabilized(level, cfg.level_cap);
        QuadFloors qf = quadrilateral_floors(t, p.star, level);
        std::vector<Cyc> hints;
        try {
            Cyc c = angle_closed_form(p).cos_value;
            hints.push_back(c * c);
        } catch (const std::invalid_argument&) {
            // type A has no closed form; run without hints
        }
        SpectrumResult sp = angle_spectrum_finite(qf.ambient, qf.tl2, qf.pfl, qf.qfl, hints);
        if (cfg.output == OutputMode::text) {
            out << "level " << level << " spectrum of E_P E_Q E_P:\n";
            for (const auto& e : sp.entries) {
                if (e.exact)
                    out << "  " << pretty(e.value, digits);
                else
                    out << "  in [" << decimal_string(e.lo, unsigned(digits)) << ", "
                        << decimal_string(e.hi, unsigned(digits)) << "]";
                out << "  x" << e.multiplicity << "\n";
            }
            out << "trace = " << pretty(sp.operator_trace, digits) << "\n";
            return 0;
        }
        Json doc = spectrum_json(sp, digits);
        doc["pointed"] = p.name;
        doc["level"] = level;
        emit_json(out, doc);
        return 0;
    }

    AngleResult r;
    if (method == "closed")
        r = angle_closed_form(p);
    else if (method == "oracle")
        r = angle_path_oracle(p);
    else if (method == "simpler")
        r = simpler_quadrilateral(p);
    else
        throw std::invalid_argument("unknown angle method \"" + method + "\"");
    if (cfg.output == OutputMode::text) {
        out << r.method << ": cos = " << pretty(r.cos_value, digits) << "\n";
        for (const auto& [name, value] : r.witnesses)
            out << "  " << name << " = " << pretty(value, digits) << "\n";
        return 0;
    }
    Json doc = angle_json(r, digits);
    doc["pointed"] = p.name;
    emit_json(out, doc);
    return 0;
}

int cmd_fusion_fuse(const RunConfig& cfg, const std::string& mode, int i, int j,
                    std::ostream& out) {
    no_dot(cfg);
    FusionParams params = parse_fusion_mode(mode);
    FusionVector v = fuse(i, j, params);
    if (cfg.output == OutputMode::text) {
        out << csv(v.mults) << "\n";
        return 0;
    }
    Json doc;
    doc["mode"] = mode;
    doc["i"] = i;
    doc["j"] = j;
    doc["result"] = fusion_json(v);
    emit_json(out, doc);
    return 0;
}

int cmd_fusion_pow(const RunConfig& cfg, const std::string& mode, const std::string& vec,
                   int power, std::ostream& out) {
    no_dot(cfg);
    FusionParams params = parse_fusion_mode(mode);
    FusionVector base(parse_csv(vec));
    FusionVector acc({1});  // V_0, the unit
    for (int k = 0; k < power; ++k) acc = fuse_vectors(acc, base, params);
    if (cfg.output == OutputMode::text) {
        out << csv(acc.mults) << "\n";
        return 0;
    }
    Json doc;
    doc["mode"] = mode;
    doc["vector"] = base.mults;
    doc["power"] = power;
    doc["result"] = fusion_json(acc);
    emit_json(out, doc);
    return 0;
}

int cmd_fusion_dims(const RunConfig& cfg, const std::string& mode, const std::string& vec,
                    int at, std::ostream& out) {
    no_dot(cfg);
    FusionParams params = parse_fusion_mode(mode);
    FusionVector v(parse_csv(vec));
    int n = at;
    if (n == 0) {
        if (params.mode != FusionParams::Mode::truncated)
            throw std::invalid_argument("generic mode needs --at N to pick gamma = 4cos^2(pi/N)");
        n = params.n;
    }
    Cyc c = Cyc::two_cos_pi_over(unsigned(n));
    Cyc gamma = c * c;
    int digits = cfg.precision_digits;
    if (cfg.output == OutputMode::text) {
        out << "gamma = 4cos^2(pi/" << n << ") = " << pretty(gamma, digits) << "\n";
        for (int k = 0; k <= v.top(); ++k)
            if (v.mult(k) != 0)
                out << "V" << k << " x" << v.mult(k) << ": dim "
                    << pretty(dim_irrep(k, gamma), digits) << "\n";
        out << "total = " << pretty(dim_vector(v, gamma), digits) << "\n";
        return 0;
    }
    Json doc;
    doc["vector"] = v.mults;
    doc["gamma"] = cyc_json(gamma, digits);
    Json parts = Json::array();
    for (int k = 0; k <= v.top(); ++k) {
        if (v.mult(k) == 0) continue;
        Json jp;
        jp["label"] = k;
        jp["mult"] = v.mult(k);
        jp["dim"] = cyc_json(dim_irrep(k, gamma), digits);
        jp["dim_poly"] = dim_poly(k).to_string("x");
        parts.push_back(jp);
    }
    doc["irreps"] = parts;
    doc["total"] = cyc_json(dim_vector(v, gamma), digits);
    emit_json(out, doc);
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& branch, std::ostream& out) {
    no_dot(cfg);
    int digits = cfg.precision_digits;
    std::vector<ClassificationReport> reports;
    if (branch == "noncocommuting" || branch == "all") reports.push_back(enumerate_noncocommuting());
    if (branch == "cocommuting" || branch == "all") reports.push_back(cocommuting_branch());
    if (reports.empty())
        throw std::invalid_argument("branch must be noncocommuting, cocommuting, or all");

    if (cfg.output == OutputMode::text) {
        for (const auto& rep : reports) {
            out << "branch: " << rep.branch << "\n";
            for (const auto& c : rep.cases) {
                out << "  " << c.label << ": " << to_string(c.reason);
                if (c.survives && c.data)
                    out << "  alpha = " << pretty(c.data->alpha, digits)
                        << ", beta = " << pretty(c.data->beta, digits)
                        << ", gamma = " << pretty(c.data->gamma, digits);
                out << "\n";
            }
        }
        if (branch == "all")
            out << "four equiangular projections: trace = "
                << pretty(four_equiangular_projections(), digits) << "\n";
        return 0;
    }
    Json doc;
    for (const auto& rep : reports) doc[rep.branch] = report_json(rep, digits);
    if (branch == "all")
        doc["four_projections_trace"] = cyc_json(four_equiangular_projections(), digits);
    emit_json(out, doc);
    return 0;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
    no_dot(cfg);
    std::vector<CheckResult> rs = run_acceptance_suite(cfg.level_cap);
    bool all = true;
    for (const auto& r : rs) all = all && r.pass;
    if (cfg.output == OutputMode::text) {
        for (const auto& r : rs)
            out << (r.pass ? "ok   " : "FAIL ") << r.id << " - " << r.name << ": " << r.detail
                << "\n";
        out << (all ? "all checks passed" : "some checks FAILED") << "\n";
    } else {
        Json doc;
        doc["level_cap"] = cfg.level_cap;
        Json checks = Json::array();
        for (const auto& r : rs) {
            Json jc;
            jc["id"] = r.id;
            jc["name"] = r.name;
            jc["pass"] = r.pass;
            jc["detail"] = r.detail;
            checks.push_back(jc);
        }
        doc["checks"] = checks;
        doc["all_pass"] = all;
        emit_json(out, doc);
    }
    return all ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact subfactor invariants on the A-D-E towers"};
    app.name("subfac");

    RunConfig cfg;
    std::string output_str = "json";
    app.add_option("--output", output_str, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--digits", cfg.precision_digits, "decimal digits in approximations")
        ->check(CLI::PositiveNumber);
    app.add_option("--level-cap", cfg.level_cap, "tower level cap")
        ->envname("SUBFAC_LEVEL_CAP")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    std::function<int(std::ostream&)> action;

    auto* graphs = app.add_subcommand("graphs", "catalogue of Coxeter graphs");
    graphs->fallthrough();
    graphs->require_subcommand(1);
    {
        auto* list = graphs->add_subcommand("list", "list catalogue graphs");
        list->fallthrough();
        auto max_ell = std::make_shared<int>(12);
        auto name = std::make_shared<std::string>();
        list->add_option("--max-ell", *max_ell, "largest Coxeter number")
            ->check(CLI::PositiveNumber);
        list->add_option("--name", *name, "single graph to describe");
        list->callback([&action, &cfg, max_ell, name] {
            action = [&cfg, max_ell, name](std::ostream& o) {
                return cmd_graphs_list(cfg, *max_ell, *name, o);
            };
        });
    }

    auto* tower = app.add_subcommand("tower", "path-algebra towers");
    tower->fallthrough();
    tower->require_subcommand(1);
    {
        auto* build = tower->add_subcommand("build", "build a tower and report its levels");
        build->fallthrough();
        auto pointed = std::make_shared<std::string>();
        auto level = std::make_shared<int>(4);
        build->add_option("--pointed", *pointed, "pointed graph, e.g. D5,2")->required();
        build->add_option("--level", *level, "top level")->check(CLI::PositiveNumber);
        build->callback([&action, &cfg, pointed, level] {
            action = [&cfg, pointed, level](std::ostream& o) {
                return cmd_tower_build(cfg, *pointed, *level, o);
            };
        });
    }

    auto* ghj = app.add_subcommand("ghj", "principal graphs of the tower subfactors");
    ghj->fallthrough();
    ghj->require_subcommand(1);
    {
        auto* pg = ghj->add_subcommand("principal-graph", "stabilized inclusion graph");
        pg->fallthrough();
        auto pointed = std::make_shared<std::string>();
        pg->add_option("--pointed", *pointed, "pointed graph, e.g. D5,2")->required();
        pg->callback([&action, &cfg, pointed] {
            action = [&cfg, pointed](std::ostream& o) {
                return cmd_ghj_principal(cfg, *pointed, o);
            };
        });

        auto* idx = ghj->add_subcommand("index", "exact index of the subfactor");
        idx->fallthrough();
        auto pointed2 = std::make_shared<std::string>();
        idx->add_option("--pointed", *pointed2, "pointed graph, e.g. D5,2")->required();
        idx->callback([&action, &cfg, pointed2] {
            action = [&cfg, pointed2](std::ostream& o) {
                return cmd_ghj_index(cfg, *pointed2, o);
            };
        });
    }

    {
        auto* angle = app.add_subcommand("angle", "angle between the conjugated subtowers");
        angle->fallthrough();
        auto pointed = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("both");
        auto level = std::make_shared<int>(3);
        angle->add_option("--pointed", *pointed, "pointed graph, e.g. D5,2")->required();
        angle->add_option("--method", *method, "closed | oracle | both | simpler | spectrum")
            ->check(CLI::IsMember({"closed", "oracle", "both", "simpler", "spectrum"}));
        angle->add_option("--level", *level, "floor level for --method spectrum")
            ->check(CLI::PositiveNumber);
        angle->callback([&action, &cfg, pointed, method, level] {
            action = [&cfg, pointed, method, level](std::ostream& o) {
                return cmd_angle(cfg, *pointed, *method, *level, o);
            };
        });
    }

    auto* fusion = app.add_subcommand("fusion", "supertransitive fusion ring");
    fusion->fallthrough();
    fusion->require_subcommand(1);
    {
        auto* fuse_cmd = fusion->add_subcommand("fuse", "product of two irreducibles");
        fuse_cmd->fallthrough();
        auto mode = std::make_shared<std::string>("generic");
        auto i = std::make_shared<int>(0);
        auto j = std::make_shared<int>(0);
        fuse_cmd->add_option("--mode", *mode, "generic | generic:D | truncated:N");
        fuse_cmd->add_option("--i", *i, "left label")->required()->check(CLI::NonNegativeNumber);
        fuse_cmd->add_option("--j", *j, "right label")->required()->check(CLI::NonNegativeNumber);
        fuse_cmd->callback([&action, &cfg, mode, i, j] {
            action = [&cfg, mode, i, j](std::ostream& o) {
                return cmd_fusion_fuse(cfg, *mode, *i, *j, o);
            };
        });

        auto* pow_cmd = fusion->add_subcommand("pow", "power of a multiplicity vector");
        pow_cmd->fallthrough();
        auto mode2 = std::make_shared<std::string>("generic");
        auto vec = std::make_shared<std::string>();
        auto power = std::make_shared<int>(1);
        pow_cmd->add_option("--mode", *mode2, "generic | generic:D | truncated:N");
        pow_cmd->add_option("--vector", *vec, "multiplicities, e.g. 1,2,2")->required();
        pow_cmd->add_option("--power", *power, "exponent")->check(CLI::NonNegativeNumber);
        pow_cmd->callback([&action, &cfg, mode2, vec, power] {
            action = [&cfg, mode2, vec, power](std::ostream& o) {
                return cmd_fusion_pow(cfg, *mode2, *vec, *power, o);
            };
        });

        auto* dims_cmd = fusion->add_subcommand("dims", "exact dimensions of a vector");
        dims_cmd->fallthrough();
        auto mode3 = std::make_shared<std::string>("generic");
        auto vec2 = std::make_shared<std::string>();
        auto at = std::make_shared<int>(0);
        dims_cmd->add_option("--mode", *mode3, "generic | generic:D | truncated:N");
        dims_cmd->add_option("--vector", *vec2, "multiplicities, e.g. 1,2,2")->required();
        dims_cmd->add_option("--at", *at, "evaluate at gamma = 4cos^2(pi/N)")
            ->check(CLI::PositiveNumber);
        dims_cmd->callback([&action, &cfg, mode3, vec2, at] {
            action = [&cfg, mode3, vec2, at](std::ostream& o) {
                return cmd_fusion_dims(cfg, *mode3, *vec2, *at, o);
            };
        });
    }

    {
        auto* classify = app.add_subcommand("classify", "quadrilateral classification");
        classify->fallthrough();
        auto branch = std::make_shared<std::string>("all");
        classify->add_option("--branch", *branch, "noncocommuting | cocommuting | all")
            ->check(CLI::IsMember({"noncocommuting", "cocommuting", "all"}));
        classify->callback([&action, &cfg, branch] {
            action = [&cfg, branch](std::ostream& o) { return cmd_classify(cfg, *branch, o); };
        });
    }

    {
        auto* selfcheck = app.add_subcommand("selfcheck", "run the golden acceptance suite");
        selfcheck->fallthrough();
        selfcheck->callback(
            [&action, &cfg] { action = [&cfg](std::ostream& o) { return cmd_selfcheck(cfg, o); }; });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (output_str == "dot")
        cfg.output = OutputMode::dot;
    else if (output_str == "text")
        cfg.output = OutputMode::text;
    else
        cfg.output = OutputMode::json;

    if (!action) {
        err << "error: no command selected\n";
        return 1;
    }
    try {
        return action(out);
    } catch (const NotStabilized& e) {
        Json doc;
        doc["error"] = "not stabilized";
        doc["message"] = e.what();
        doc["needed_level"] = e.needed_level;
        doc["level_cap"] = e.level_cap;
        emit_json(out, doc);
        return 2;
    } catch (const HypothesisFailure& e) {
        Json doc;
        doc["error"] = "hypothesis failure";
        doc["message"] = e.what();
        emit_json(out, doc);
        return 2;
    } catch (const BeyondSupertransitivity& e) {
        Json doc;
        doc["error"] = "beyond supertransitivity";
        doc["message"] = e.what();
        emit_json(out, doc);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace subfac
