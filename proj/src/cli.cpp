#include "quivarr/cli.hpp"

#include "quivarr/corpus.hpp"
#include "quivarr/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace quivarr {

namespace {

struct Inputs {
    std::string arr, qvr, exp, grp, output, model = "local", functor = "macpherson", vertex = "()", kappa;
    std::string type = "A1";
    std::vector<int> highest, weights;
    int level = -1, bound = 4;
    unsigned seed = 1;
    bool twist = false, inverse = false;
};

GraphPtr load_graph(const std::string& path) {
    std::istringstream in(read_file(path));
    return build_graph(parse_arrangement(in));
}

Quiver load_quiver(const GraphPtr& g, const std::string& path) {
    return quiver_from_json(Json::parse(read_file(path)), g);
}

Exponents load_exponents(const GraphPtr& g, const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_exponents(in, g->arrangement().size());
}

Quiver load_level_zero(const GraphPtr& g, const Inputs& in) {
    if (!in.qvr.empty()) {
        Quiver w = load_quiver(g, in.qvr);
        if (w.level != 0) throw ParseError("expected a level-zero quiver");
        return w;
    }
    if (!in.exp.empty()) return scalar_from_exponents(g, load_exponents(g, in.exp));
    throw ParseError("a level-zero quiver (--quiver) or exponents (--exp) is required");
}

Json graph_summary(const ArrangementGraph& g) {
    Json j;
    j["dim"] = g.ambient_dim();
    j["hyperplanes"] = g.arrangement().size();
    j["central"] = g.central();
    j["rank"] = g.rank();
    j["vertices"] = Json::array();
    for (int v = 0; v < g.size(); ++v) j["vertices"].push_back({{"label", g.label(v)}, {"codim", g.codim(v)}});
    j["edges"] = Json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
    j["vertex_count"] = g.size();
    j["edge_count"] = g.edges().size();
    auto chk = verify_graph(g);
    j["violations"] = chk.violations;
    j["warnings"] = chk.warnings;
    return j;
}

Json tuple_json(const Tuple& t) {
    Json j = Json::array();
    for (int x : t) j.push_back(x + 1);
    return j;
}

Json complex_json(const ChainComplex& c) {
    Json j;
    j["dims"] = c.dims;
    j["min_degree"] = c.min_degree;
    j["differentials"] = Json::array();
    for (const auto& d : c.d) j["differentials"].push_back(to_json(d));
    return j;
}

Json morphism_json(const ArrangementGraph& g, const QuiverMorphism& f) {
    Json j = Json::object();
    for (size_t a = 0; a < f.components.size(); ++a) j[g.label(static_cast<int>(a))] = to_json(f.components[a]);
    return j;
}

void emit(const Json& j, const Inputs& in) {
    std::string text = j.dump(2) + "\n";
    if (in.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(in.output);
    if (!out) throw ParseError("cannot write " + in.output);
    out << text;
}

Json run_command(const std::string& cmd, const Inputs& in) {
    if (cmd == "selftest") {
        std::ostringstream log;
        bool ok = run_selftest(in.seed, log);
        Json j{{"passed", ok}, {"log", log.str()}};
        if (!ok) throw InternalError(j.dump(2));
        return j;
    }
    if (cmd == "kz-check") {
        KZInstance inst{root_system(parse_root_type(in.type)), in.highest, in.weights,
                        in.kappa.empty() ? Rational(0) : parse_rational(in.kappa)};
        return to_json(kz_check(inst, in.bound));
    }
    GraphPtr g = load_graph(in.arr);
    if (cmd == "lattice") return graph_summary(*g);
    if (cmd == "os" || cmd == "flags") {
        OSData d(g);
        Json j;
        j["dims"] = Json::array();
        for (int p = 0; p <= g->rank(); ++p)
            j["dims"].push_back(cmd == "os" ? d.os[p].dim() : d.flag_degree_dim(p));
        j["basis"] = Json::object();
        for (int v = 0; v < g->size(); ++v) {
            Json b = Json::array();
            if (cmd == "os") {
                const auto& os = d.os[g->codim(v)];
                auto [lo, hi] = os.block(v);
                for (size_t k = lo; k < hi; ++k) b.push_back(tuple_json(os.basis_tuple(k)));
            } else {
                for (size_t k = 0; k < d.flags[v].dim(); ++k) {
                    Json f = Json::array();
                    for (int x : d.flags[v].basis_flag(k)) f.push_back(g->label(x));
                    b.push_back(f);
                }
            }
            j["basis"][g->label(v)] = b;
        }
        return j;
    }
    if (cmd == "aomoto") {
        OSData d(g);
        auto a = load_exponents(g, in.exp);
        Json j = complex_json(aomoto_complex(d, a));
        j["report"] = to_json(aomoto_cohomology(d, a));
        return j;
    }
    if (cmd == "check-quiver") {
        Quiver q = load_quiver(g, in.qvr);
        Json j;
        j["violations"] = Json::array();
        for (const auto& v : check_quiver(q)) j["violations"].push_back(describe(q, v));
        j["valid"] = j["violations"].empty();
        return j;
    }
    if (cmd == "dual") {
        Quiver q = load_quiver(g, in.qvr);
        require_valid(q, "dual");
        return to_json(in.inverse ? dual_inverse(q) : dual(q));
    }
    if (cmd == "restrict") {
        Quiver q = load_quiver(g, in.qvr);
        require_valid(q, "restrict");
        return to_json(restrict(q, in.level));
    }
    if (cmd == "push-star" || cmd == "push-shriek") {
        Quiver q = load_quiver(g, in.qvr);
        require_valid(q, cmd.c_str());
        int target = in.level < 0 ? g->rank() : in.level;
        if (target == q.level + 1) {
            auto w = cmd == "push-star" ? push_star_step(q) : push_shriek_step(q);
            return to_json(w.quiver, w.witness);
        }
        return to_json(cmd == "push-star" ? push_star(q, target) : push_shriek(q, target));
    }
    if (cmd == "ic-quiver") {
        OSData d(g);
        auto m = macpherson(d, load_level_zero(g, in));
        return to_json(m.quiver, m.witness);
    }
    if (cmd == "shapovalov") {
        OSData d(g);
        Quiver w = load_level_zero(g, in);
        Json j;
        j["s0"] = morphism_json(*g, s0(d, w));
        auto form = shapovalov_form(d, w);
        j["form"] = Json::object();
        for (size_t a = 0; a < form.size(); ++a) j["form"][g->label(static_cast<int>(a))] = to_json(form[a]);
        return j;
    }
    if (cmd == "specialize") {
        Quiver q = load_quiver(g, in.qvr);
        auto s = specialize(q, g->parse_label(in.vertex));
        Json j;
        j["classes"] = Json::array();
        for (size_t c = 0; c < s.graph.classes.size(); ++c) {
            Json members = Json::array();
            for (int a : s.graph.classes[c]) members.push_back(g->label(a));
            j["classes"].push_back({{"members", members}, {"codim", s.graph.codim[c]}, {"dim", s.dims[c]}});
        }
        j["maps"] = Json::array();
        for (const auto& [k, m] : s.maps)
            j["maps"].push_back({{"to", k.first}, {"from", k.second}, {"matrix", to_json(m)}});
        j["violations"] = check_spec_quiver(s);
        auto ops = spec_nonres_ops(q, g->parse_label(in.vertex));
        j["operator_char_poly"] = char_poly(ops.total).to_string();
        return j;
    }
    if (cmd == "fourier") {
        Quiver q = load_quiver(g, in.qvr);
        require_valid(q, "fourier");
        return to_json(fourier_dual(q));
    }
    if (cmd == "cohomology") {
        OSData d(g);
        if (in.model == "perverse") return to_json(perverse_cohomology(load_quiver(g, in.qvr)));
        if (in.model == "local") return to_json(local_system_cohomology(d, load_level_zero(g, in)));
        if (in.model == "ih") return to_json(intersection_cohomology(d, load_level_zero(g, in)));
        if (in.model == "aomoto") return to_json(aomoto_cohomology(d, load_exponents(g, in.exp)));
        if (in.model == "flag") return to_json(flag_cohomology(d, load_exponents(g, in.exp)));
        throw ParseError("unknown model " + in.model);
    }
    if (cmd == "equivariant") {
        OSData d(g);
        Quiver w = load_level_zero(g, in);
        std::istringstream gs(read_file(in.grp));
        auto maps = parse_group(gs, g->ambient_dim());
        auto act = build_action(g, maps);
        if (act.order() != maps.size()) throw SymmetryError("group file is not closed under composition");
        return to_json(equivariant_cohomology(d, act, trivial_rho(act, w), parse_functor(in.functor), in.twist));
    }
    throw ParseError("unknown subcommand " + cmd);
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Quivers of hyperplane arrangements"};
    app.require_subcommand(1);
    Inputs in;
    app.add_option("--output,-o", in.output, "write the report to a file");
    app.add_option("--seed", in.seed, "seed for randomized checks");

    auto needs_arr = [&](CLI::App* s) { s->add_option("arrangement", in.arr, ".arr file")->required(); };
    auto needs_qvr = [&](CLI::App* s, bool required) {
        auto o = s->add_option("quiver", in.qvr, ".qvr file");
        if (required) o->required();
    };
    auto level_zero_inputs = [&](CLI::App* s) {
        s->add_option("--quiver", in.qvr, "level-zero .qvr file");
        s->add_option("--exp", in.exp, ".exp file");
    };

    for (const char* name : {"lattice", "os", "flags"}) needs_arr(app.add_subcommand(name, "arrangement data"));
    {
        auto s = app.add_subcommand("aomoto", "Aomoto complex");
        needs_arr(s);
        s->add_option("exponents", in.exp, ".exp file")->required();
    }
    for (const char* name : {"check-quiver", "fourier"}) {
        auto s = app.add_subcommand(name, "quiver operation");
        needs_arr(s);
        needs_qvr(s, true);
    }
    {
        auto s = app.add_subcommand("dual", "dual quiver");
        needs_arr(s);
        needs_qvr(s, true);
        s->add_flag("--inverse", in.inverse, "apply the inverse duality");
    }
    for (const char* name : {"restrict", "push-star", "push-shriek"}) {
        auto s = app.add_subcommand(name, "change of level");
        needs_arr(s);
        needs_qvr(s, true);
        auto o = s->add_option("--level", in.level, "target level");
        if (std::string(name) == "restrict") o->required();
    }
    for (const char* name : {"ic-quiver", "shapovalov"}) {
        auto s = app.add_subcommand(name, "level-zero construction");
        needs_arr(s);
        level_zero_inputs(s);
    }
    {
        auto s = app.add_subcommand("specialize", "specialization at a vertex");
        needs_arr(s);
        needs_qvr(s, true);
        s->add_option("--vertex", in.vertex, "vertex label such as (1,2)");
    }
    {
        auto s = app.add_subcommand("cohomology", "cohomology reports");
        needs_arr(s);
        s->add_option("--model", in.model)->check(CLI::IsMember({"perverse", "local", "ih", "aomoto", "flag"}));
        s->add_option("--quiver", in.qvr, ".qvr file");
        s->add_option("--exp", in.exp, ".exp file");
    }
    {
        auto s = app.add_subcommand("equivariant", "invariant cohomology");
        needs_arr(s);
        level_zero_inputs(s);
        s->add_option("--group", in.grp, ".grp file")->required();
        s->add_option("--functor", in.functor)->check(CLI::IsMember({"star", "shriek", "macpherson"}));
        s->add_flag("--twist-det", in.twist);
    }
    {
        auto s = app.add_subcommand("kz-check", "discriminantal cross-check");
        s->add_option("--type", in.type)->check(CLI::IsMember({"A1", "A2", "A3", "B2"}));
        s->add_option("--highest", in.highest)->required();
        s->add_option("--weights", in.weights)->required();
        s->add_option("--kappa", in.kappa);
        s->add_option("--bound", in.bound);
    }
    app.add_subcommand("selftest", "invariant suite on the built-in corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        emit(run_command(cmd, in), in);
        return 0;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const UnsupportedError& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 3;
    } catch (const InvalidQuiver& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 3;
    } catch (const SymmetryError& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace quivarr
