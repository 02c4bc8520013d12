// bohr — intuitionistic quantum logic of finite-dimensional systems.
//
// Subcommands build the context poset of a system, compute spectral opens by
// Daseinisation, pair states with propositions into upper-set truth values,
// search Kochen-Specker configurations for points, and compute frames of
// finite sites.
//
// Exit codes: 0 success (point found for `ks`), 2 input error,
// 3 KS contradiction (no point), 4 numeric-boundary warning under --strict.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bohr/daseinisation.hpp"
#include "bohr/json_io.hpp"
#include "bohr/ks.hpp"
#include "bohr/site.hpp"
#include "bohr/states.hpp"

using namespace bohr;

namespace {

struct CommonOpts {
    std::string out;
    std::string dot;
    bool strict = false;
};

void add_tolerance_flags(CLI::App* cmd) {
    cmd->add_option("--eps-herm", tol().herm, "Hermiticity tolerance (relative)");
    cmd->add_option("--eps-eig", tol().eig, "eigendecomposition tolerance (relative)");
    cmd->add_option("--eps-order", tol().order, "positivity order tolerance (absolute)");
    cmd->add_option("--eps-strict", tol().strict, "strict inequality margin");
    cmd->add_option("--eps-prob", tol().prob, "probability-one tolerance");
}

Json meta() {
    return Json{{"tool", "bohr"},
                {"seed", intersect_seed()},
                {"tolerances",
                 Json{{"herm", tol().herm},
                      {"eig", tol().eig},
                      {"order", tol().order},
                      {"strict", tol().strict},
                      {"prob", tol().prob}}}};
}

void emit(const Json& j, const CommonOpts& opts) {
    std::string text = j.dump(2);
    if (opts.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opts.out);
        if (!f) throw InputError("cannot write '" + opts.out + "'");
        f << text << "\n";
    }
}

void emit_dot(const ContextPoset& poset, const CommonOpts& opts) {
    if (opts.dot.empty()) return;
    std::ofstream f(opts.dot);
    if (!f) throw InputError("cannot write '" + opts.dot + "'");
    f << poset_dot(poset);
}

int finish_warnings(const WarningSink& warnings, const CommonOpts& opts) {
    for (const std::string& w : warnings.messages) std::cerr << "warning: " << w << "\n";
    if (opts.strict && !warnings.empty()) return 4;
    return 0;
}

Json poset_report(const ContextPoset& poset) {
    Json contexts = Json::array();
    for (int i = 0; i < poset.size(); ++i) {
        const Context& c = poset.contexts[i];
        Json atoms = Json::array();
        for (const ProjectionMatrix& p : c.atoms) atoms.push_back(matrix_to_json(p.p.m));
        contexts.push_back(Json{{"label", c.label},
                                {"atom_count", c.atom_count()},
                                {"atom_ranks", [&] {
                                     Json r = Json::array();
                                     for (const auto& p : c.atoms) r.push_back(p.rank);
                                     return r;
                                 }()},
                                {"atoms", std::move(atoms)}});
    }
    Json edges = Json::array();
    for (auto [i, j] : poset.hasse_edges())
        edges.push_back(Json::array({poset.contexts[i].label, poset.contexts[j].label}));
    return Json{{"meta", meta()},
                {"dim", poset.dim},
                {"bottom", poset.contexts[poset.bottom].label},
                {"contexts", std::move(contexts)},
                {"hasse_edges", std::move(edges)}};
}

// Human-readable table; goes to stderr so stdout stays machine JSON.
void render_open(const ContextPoset& poset, const SpectralOpen& u) {
    std::cerr << "context          atoms\n";
    for (int c = 0; c < poset.size(); ++c) {
        std::string line = poset.contexts[c].label;
        line.resize(std::max<size_t>(line.size() + 1, 17), ' ');
        line += "{";
        bool first = true;
        for (int p = 0; p < poset.contexts[c].atom_count(); ++p)
            if ((u.values[c] >> p) & 1) {
                if (!first) line += ",";
                line += std::to_string(p);
                first = false;
            }
        line += "}";
        std::cerr << line << "\n";
    }
}

// Counts the spectral opens of small posets by DFS over monotone choices.
long long count_spectral_opens(const ContextPoset& poset, long long cap) {
    std::vector<int> order(poset.size());
    for (int i = 0; i < poset.size(); ++i) order[i] = i;  // coarse first by construction
    std::vector<uint64_t> values(poset.size(), 0);
    long long count = 0;
    std::function<bool(int)> rec = [&](int pos) {
        if (pos == poset.size()) {
            ++count;
            return count <= cap;
        }
        int c = order[pos];
        uint64_t full = full_atom_mask(poset.contexts[c]);
        for (uint64_t mask = 0; mask <= full; ++mask) {
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                int d = order[prev];
                if (poset.leq(d, c)) {
                    LatticeElement e = embed(poset, LatticeElement{d, values[d]}, c);
                    ok = (e.atoms & ~mask) == 0;
                }
            }
            if (!ok) continue;
            values[c] = mask;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    rec(0);
    return count;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intuitionistic quantum logic of finite-dimensional systems"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string system_path, config_path, site_path;
    std::string observable, interval_text = "-inf,inf", state_name, base_label;
    long long enumerate_cap = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opts.out, "write JSON output to this file");
        cmd->add_flag("--strict", opts.strict, "escalate numeric-boundary warnings to exit 4");
        add_tolerance_flags(cmd);
    };

    CLI::App* cmd_poset = app.add_subcommand("poset", "build the context poset of a system");
    cmd_poset->add_option("--system", system_path, "system JSON file")->required();
    cmd_poset->add_option("--dot", opts.dot, "write the Hasse diagram in DOT format");
    add_common(cmd_poset);

    CLI::App* cmd_spectrum =
        app.add_subcommand("spectrum", "per-context spectral lattices and the external spectrum");
    cmd_spectrum->add_option("--system", system_path, "system JSON file")->required();
    cmd_spectrum->add_option("--enumerate", enumerate_cap,
                             "count the spectral opens up to this cap");
    cmd_spectrum->add_option("--dot", opts.dot, "write the Hasse diagram in DOT format");
    add_common(cmd_spectrum);

    CLI::App* cmd_das = app.add_subcommand("daseinise", "spectral open of a in (r,s)");
    cmd_das->add_option("--system", system_path, "system JSON file")->required();
    cmd_das->add_option("--observable", observable, "observable name")->required();
    cmd_das->add_option("--interval", interval_text, "rational interval r,s (-inf/inf allowed)");
    add_common(cmd_das);

    CLI::App* cmd_pair = app.add_subcommand("pair", "pair a state with a proposition a in (r,s)");
    cmd_pair->add_option("--system", system_path, "system JSON file")->required();
    cmd_pair->add_option("--observable", observable, "observable name")->required();
    cmd_pair->add_option("--interval", interval_text, "rational interval r,s");
    cmd_pair->add_option("--state", state_name, "state name")->required();
    cmd_pair->add_option("--base", base_label, "base context label (default: bottom)");
    add_common(cmd_pair);

    CLI::App* cmd_ks = app.add_subcommand("ks", "search a KS configuration for points");
    cmd_ks->add_option("--config", config_path, "KS configuration JSON file")->required();
    cmd_ks->add_option("--dot", opts.dot, "write the Hasse diagram in DOT format");
    add_common(cmd_ks);

    CLI::App* cmd_frame = app.add_subcommand("frame", "frame of a finite site");
    cmd_frame->add_option("--site", site_path, "site JSON file")->required();
    cmd_frame->add_option("--dot", opts.dot, "write the frame Hasse diagram in DOT format");
    add_common(cmd_frame);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_poset) {
            ContextPoset poset = load_system(system_path).build();
            emit(poset_report(poset), opts);
            emit_dot(poset, opts);
            return 0;
        }

        if (*cmd_spectrum) {
            ContextPoset poset = load_system(system_path).build();
            Json report;
            report["meta"] = meta();
            Json lattices = Json::array();
            for (int c = 0; c < poset.size(); ++c)
                lattices.push_back(Json{{"context", poset.contexts[c].label},
                                        {"atoms", poset.contexts[c].atom_count()},
                                        {"lattice_size", 1 << poset.contexts[c].atom_count()}});
            report["spectral_lattices"] = std::move(lattices);
            Json pis = Json::object();
            for (int d = 0; d < poset.size(); ++d)
                pis[poset.contexts[d].label] =
                    spectral_open_to_json(pi_sigma_star(poset, d)).at("values");
            report["pi_sigma_star"] = std::move(pis);
            if (enumerate_cap > 0) {
                long long n = count_spectral_opens(poset, enumerate_cap);
                if (n > enumerate_cap)
                    report["spectral_open_count"] = "more than " + std::to_string(enumerate_cap);
                else
                    report["spectral_open_count"] = n;
            }
            emit(report, opts);
            emit_dot(poset, opts);
            return 0;
        }

        if (*cmd_das) {
            SystemDescription sys = load_system(system_path);
            ContextPoset poset = sys.build();
            RationalInterval iv = parse_interval(interval_text);
            WarningSink warnings;
            SpectralOpen u = daseinise(sys.observable(observable), iv, poset, &warnings);
            Json out = spectral_open_to_json(u);
            out["meta"] = meta();
            out["observable"] = observable;
            out["interval"] = iv.str();
            emit(out, opts);
            render_open(poset, u);
            return finish_warnings(warnings, opts);
        }

        if (*cmd_pair) {
            SystemDescription sys = load_system(system_path);
            ContextPoset poset = sys.build();
            RationalInterval iv = parse_interval(interval_text);
            int base = poset.bottom;
            if (!base_label.empty()) {
                base = poset.index_of_label(base_label);
                if (base < 0) throw InputError("unknown base context '" + base_label + "'");
            }
            WarningSink warnings;
            UpperSet truth =
                pairing(sys.observable(observable), iv, sys.state(state_name), poset, base, &warnings);
            Json out = upper_set_to_json(poset, truth);
            out["meta"] = meta();
            out["observable"] = observable;
            out["interval"] = iv.str();
            out["state"] = state_name;
            emit(out, opts);
            for (int c = 0; c < poset.size(); ++c) {
                if (!poset.leq(base, c)) continue;
                std::cerr << (truth.members.test(c) ? "[member] " : "[      ] ")
                          << poset.contexts[c].label << "\n";
            }
            return finish_warnings(warnings, opts);
        }

        if (*cmd_ks) {
            std::vector<Context> bases = load_ks_config(config_path);
            ContextPoset poset = build_poset(std::move(bases));
            KSCertificate cert = find_point(poset);
            Json out = certificate_to_json(poset, cert);
            out["meta"] = meta();
            emit(out, opts);
            emit_dot(poset, opts);
            if (!cert.point_found) {
                std::cerr << "no point: Kochen-Specker contradiction certified after "
                          << cert.stats.nodes_visited << " nodes\n";
                return 3;
            }
            return 0;
        }

        if (*cmd_frame) {
            Site site = load_site(site_path);
            SiteFrame frame = frame_of_site(site);
            Json elements = Json::array();
            for (int i = 0; i < frame.frame.n; ++i) {
                Json members = Json::array();
                frame.element_sets[i].for_each(
                    [&](int e) { members.push_back(site.base.names[e]); });
                elements.push_back(std::move(members));
            }
            Json out{{"meta", meta()},
                     {"size", frame.frame.n},
                     {"elements", std::move(elements)},
                     {"top", frame.frame.top},
                     {"bottom", frame.frame.bottom},
                     {"distributive", check_distributive(frame.frame)}};
            emit(out, opts);
            if (!opts.dot.empty()) {
                std::ofstream f(opts.dot);
                if (!f) throw InputError("cannot write '" + opts.dot + "'");
                f << lattice_dot(frame.frame);
            }
            return 0;
        }
    } catch (const BohrError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
