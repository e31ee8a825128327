#include "ultrafun/cover.hpp"
#include "ultrafun/errors.hpp"
#include "ultrafun/hyper1d.hpp"
#include "ultrafun/inductive.hpp"
#include "ultrafun/model.hpp"
#include "ultrafun/selftest.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace uf;
using model::json;

namespace {

// 0 pass, 1 a check failed, 2 bad input
enum Exit { kPass = 0, kFail = 1, kInput = 2 };

struct Run {
    json report = json::object();
    std::vector<std::string> lines;
    bool pass = true;

    void check(const std::string& name, bool ok, const std::string& detail, json extra = json()) {
        json c = {{"name", name}, {"pass", ok}};
        if (!detail.empty()) c["detail"] = detail;
        if (!extra.is_null()) c["counterexample"] = extra;
        report["checks"].push_back(c);
        lines.push_back(std::string(ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : ": " + detail));
        pass = pass && ok;
    }
};

struct Options {
    std::string model_path;
    std::string system;
    std::string morphism;
    std::string functional;
    std::string conditions = "I,II,III,IIIprime";
    std::string subset;
    std::string vectors;
    std::string form;
    std::string suite = "all";
    std::size_t family_cap = SIZE_MAX;
    std::uint64_t seed = selftest::kDefaultSeed;
    std::string format = "text";
};

template <class Map>
const auto& lookup(const Map& m, const std::string& key, const char* what) {
    auto it = m.find(key);
    if (it == m.end()) throw model::ParseError(std::string("unresolved reference: no ") + what + " named '" + key + "'");
    return it->second;
}

std::string names(const lattice::FinitePoset& p, const std::vector<lattice::Element>& es) {
    std::string out;
    for (auto e : es) out += (out.empty() ? "" : ",") + p.name(e);
    return out;
}

json names_json(const lattice::FinitePoset& p, const std::vector<lattice::Element>& es) {
    json a = json::array();
    for (auto e : es) a.push_back(p.name(e));
    return a;
}

Run cmd_validate(const Options& o) {
    auto m = model::load_model(o.model_path);
    Run run;
    for (const auto& [name, s] : m.systems) {
        auto r = ind::validate(s.sys);
        json cx;
        if (!r.pass) cx = {{"elements", names_json(s.sys.index(), r.witness)}};
        run.check("system " + name, r.pass, r.pass ? "" : r.detail, cx);
    }
    for (const auto& [name, mo] : m.morphisms) {
        for (const auto& e : lattice::check_morphism(mo.m).entries)
            run.check("morphism " + name + " " + e.name, e.pass, e.pass ? "" : e.detail);
    }
    json info = json::object();
    for (const auto& [name, p] : m.posets) {
        try {
            lattice::validate_quasilattice(p);
            info["poset " + name] = "quasi-lattice";
        } catch (const lattice::LatticeError& e) {
            info["poset " + name] = std::string("not a quasi-lattice: ") + e.what();
        }
    }
    for (const auto& [name, c] : m.cones) info["cone " + name] = "dim " + std::to_string(cone::dim_of(c));
    for (const auto& [name, u] : m.functionals) info["functional " + name] = h1::to_string(u);
    for (const auto& [k, v] : info.items()) run.lines.push_back("info " + k + ": " + v.get<std::string>());
    run.report["info"] = info;
    return run;
}

ind::Subset parse_subset(const lattice::FinitePoset& p, const std::string& text) {
    if (text.empty()) return p.all();
    ind::Subset s;
    for (const auto& n : model::split(text, ',')) {
        auto e = p.find(n);
        if (!e) throw model::ParseError("--subset: unknown element '" + n + "'");
        s.push_back(*e);
    }
    return lattice::normalize(s);
}

Run cmd_colimit(const Options& o) {
    auto m = model::load_model(o.model_path);
    const auto& s = lookup(m.systems, o.system, "system");
    const auto& p = s.sys.index();
    auto c = ind::colimit(s.sys, parse_subset(p, o.subset));
    Run run;
    run.report["subset"] = names_json(p, c.subset);
    run.report["dim"] = c.dim;
    json proj = json::object();
    run.lines.push_back("subset " + names(p, c.subset));
    run.lines.push_back("dim " + std::to_string(c.dim));
    for (const auto& [a, mat] : c.projections) {
        proj[p.name(a)] = model::matrix_json(mat);
        run.lines.push_back("projection " + p.name(a) + " = " + mat.to_string());
    }
    run.report["projections"] = proj;
    return run;
}

Run cmd_check(const Options& o) {
    auto m = model::load_model(o.model_path);
    const auto& s = lookup(m.systems, o.system, "system");
    std::vector<ind::Condition> which;
    for (const auto& c : model::split(o.conditions, ',')) {
        auto parsed = ind::parse_condition(c);
        if (!parsed) throw model::ParseError("--conditions: unknown condition '" + c + "'");
        which.push_back(*parsed);
    }
    const auto& p = s.sys.index();
    Run run;
    for (const auto& r : ind::check_conditions(s.sys, which, o.family_cap)) {
        json cx;
        std::string detail;
        if (!r.pass) {
            cx = {{"family", names_json(p, r.family)}};
            if (r.bound) cx["bound"] = p.name(*r.bound);
            json vs = json::array();
            for (const auto& v : r.vectors) vs.push_back(model::vector_json(v));
            cx["vectors"] = vs;
            cx["replayed"] = ind::replay(s.sys, r);
            detail = ind::to_string(s.sys, r);
        }
        run.check(ind::to_string(r.condition), r.pass, detail, cx);
    }
    return run;
}

Run cmd_pushforward(const Options& o) {
    auto m = model::load_model(o.model_path);
    const auto& s = lookup(m.systems, o.system, "system");
    const auto& mo = lookup(m.morphisms, o.morphism, "morphism");
    if (mo.source != s.poset)
        throw model::ParseError("morphism '" + o.morphism + "' starts at poset '" + mo.source + "', but system '" +
                                o.system + "' lives on '" + s.poset + "'");
    Run run;
    auto hyp = lattice::check_t1_hypotheses(mo.m);
    for (const auto& e : hyp.entries) run.check("hypothesis " + e.name, e.pass, e.pass ? "" : e.detail);
    if (!run.pass) return run;
    auto z = ind::pushforward(s.sys, mo.m);
    json out = json::object();
    out["posets"][mo.target] = model::dump_poset(mo.m.target.poset());
    out["systems"][o.system + "_pushforward"] = model::dump_system(mo.target, z);
    run.report["model"] = out;
    run.lines = {out.dump(2)};  // stdout is a model file again
    return run;
}

json cone_json(const cone::ConvexCone& c) { return model::dump_cone(cone::AnyCone(c)); }

Run cmd_cover(const Options& o) {
    auto xs = model::parse_vectors(o.vectors);
    if (xs.empty() || xs.front().empty()) throw model::ParseError("--vectors: no vectors given");
    std::size_t k = xs.front().size();
    cone::BilinearForm form = cone::BilinearForm::standard(k);
    if (!o.form.empty()) {
        if (o.model_path.empty()) throw model::ParseError("--form needs --model");
        auto m = model::load_model(o.model_path);
        form = lookup(m.forms, o.form, "form");
        if (form.dim() != k) throw DimensionError("--form: dimension " + std::to_string(form.dim()) + ", vectors have " + std::to_string(k));
    }
    auto c = cone::simplicial_cover(xs, form);
    Run run;
    json d = json::object();
    json vs = json::array(), K = json::array(), E = json::array(), G = json::array(), Kij = json::object(), V = json::object();
    for (const auto& v : c.vectors) vs.push_back(model::vector_json(v));
    for (const auto& x : c.K) K.push_back(cone_json(x));
    for (const auto& x : c.E) E.push_back(model::vector_json(x));
    for (const auto& x : c.Gamma) G.push_back(cone_json(x));
    for (const auto& [ij, x] : c.Kij) Kij[std::to_string(ij.first) + "," + std::to_string(ij.second)] = cone_json(x);
    for (const auto& [ij, x] : c.V) V[std::to_string(ij.first) + "," + std::to_string(ij.second)] = cone_json(x);
    d["vectors"] = vs;
    d["K"] = K;
    d["Kij"] = Kij;
    d["E"] = E;
    d["Gamma"] = G;
    d["V"] = V;
    run.report["cover"] = d;
    run.lines.push_back(cone::to_string(c));
    for (const auto& ch : cone::check_cover(c)) run.check(ch.name, ch.pass, ch.pass ? "" : ch.detail);
    return run;
}

Run cmd_fourier(const Options& o) {
    auto m = model::load_model(o.model_path);
    const auto& u = lookup(m.functionals, o.functional, "functional");
    auto h = h1::fourier(u);
    Run run;
    run.report["functional"] = model::dump_functional(u);
    run.report["upper"] = h1::to_string(h.upper());
    run.report["lower"] = h1::to_string(h.lower());
    run.lines.push_back(h1::to_string(h));
    return run;
}

Run cmd_selftest(const Options& o) {
    std::vector<int> ids;
    if (o.suite == "all") {
        for (const auto& s : selftest::suites()) ids.push_back(s.id);
    } else {
        for (const auto& key : model::split(o.suite, ',')) {
            auto id = selftest::find_suite(key);
            if (!id) throw model::ParseError("--suite: unknown suite '" + key + "'");
            ids.push_back(*id);
        }
    }
    Run run;
    run.report["seed"] = o.seed;
    for (int id : ids) {
        auto r = selftest::run_suite(id, o.seed);
        std::string detail = std::to_string(r.instances) + " instances";
        if (r.skipped) detail += ", " + std::to_string(r.skipped) + " margin cases skipped";
        if (!r.detail.empty()) detail += " (" + r.detail + ")";
        run.check(std::to_string(r.id) + " " + r.name, r.pass, detail);
        std::fprintf(stderr, "suite %d %s: %.2fs\n", r.id, r.name.c_str(), r.seconds);
    }
    return run;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cone, lattice, inductive-system and 1-D Fourier computations"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", o.format, "text or structured (JSON)")->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_model = [&](CLI::App* sc, bool required) {
        auto* opt = sc->add_option("--model", o.model_path, "model file (JSON)");
        if (required) opt->required();
    };

    auto* validate = app.add_subcommand("validate", "parse a model file and check every system and morphism");
    add_model(validate, true);
    add_format(validate);

    auto* colimit = app.add_subcommand("colimit", "colimit of a system, optionally restricted to a subset");
    add_model(colimit, true);
    colimit->add_option("--system", o.system)->required();
    colimit->add_option("--subset", o.subset, "comma-separated element names");
    add_format(colimit);

    auto* check = app.add_subcommand("check", "conditions I, II, III, IIIprime on a system");
    add_model(check, true);
    check->add_option("--system", o.system)->required();
    check->add_option("--conditions", o.conditions, "comma-separated, default all four");
    check->add_option("--family-cap", o.family_cap, "largest family size for IIIprime");
    add_format(check);

    auto* push = app.add_subcommand("pushforward", "push a system along a quasi-lattice morphism");
    add_model(push, true);
    push->add_option("--system", o.system)->required();
    push->add_option("--morphism", o.morphism)->required();
    add_format(push);

    auto* cover = app.add_subcommand("cover", "simplicial cover from k+1 positively spanning vectors");
    cover->add_option("--vectors", o.vectors, "e.g. \"1,0;0,1;-1,-1\"")->required();
    add_model(cover, false);
    cover->add_option("--form", o.form, "bilinear form from the model (default: standard)");
    add_format(cover);

    auto* fourier = app.add_subcommand("fourier", "Fourier transform of a 1-D functional");
    add_model(fourier, true);
    fourier->add_option("--functional", o.functional)->required();
    add_format(fourier);

    auto* self = app.add_subcommand("selftest", "seeded property suites");
    self->add_option("--suite", o.suite, "suite number or name, comma-separated, or all");
    self->add_option("--seed", o.seed);
    add_format(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Run run;
    try {
        if (*validate) run = cmd_validate(o);
        else if (*colimit) run = cmd_colimit(o);
        else if (*check) run = cmd_check(o);
        else if (*push) run = cmd_pushforward(o);
        else if (*cover) run = cmd_cover(o);
        else if (*fourier) run = cmd_fourier(o);
        else run = cmd_selftest(o);
    } catch (const std::invalid_argument& e) {  // parse errors, bad references, dimension and precondition errors
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInput;
    } catch (const model::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInput;
    }

    if (o.format == "structured") {
        json out = json::object();
        out["command"] = command;
        out["pass"] = run.pass;
        for (const auto& [k, v] : run.report.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& l : run.lines) std::cout << l << "\n";
    }
    return run.pass ? kPass : kFail;
}
