#include "bohr/json_io.hpp"

#include "bohr/interval_site.hpp"

#include <fstream>
#include <set>

namespace bohr {

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim; ++j)
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.dim}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw InputError("matrix JSON needs dim and entries");
    int n = j.at("dim").get<int>();
    if (n <= 0) throw InputError("matrix dim must be positive");
    const Json& rows = j.at("entries");
    if (!rows.is_array() || int(rows.size()) != n) throw InputError("entries must have dim rows");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || int(row.size()) != n)
            throw InputError("entries row has wrong length");
        for (int k = 0; k < n; ++k) {
            const Json& z = row.at(k);
            if (!z.is_array() || z.size() != 2) throw InputError("entry must be [re, im]");
            m(i, k) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
    }
    return m;
}

Json context_to_json(const Context& c) {
    Json atoms = Json::array();
    for (const ProjectionMatrix& p : c.atoms) atoms.push_back(matrix_to_json(p.p.m));
    return Json{{"label", c.label}, {"atoms", std::move(atoms)}};
}

static std::vector<Complex> complex_vector_from_json(const Json& j) {
    std::vector<Complex> v;
    for (const Json& z : j) {
        if (z.is_number()) {
            v.push_back(Complex(z.get<double>(), 0));
        } else if (z.is_array() && z.size() == 2) {
            v.push_back(Complex(z.at(0).get<double>(), z.at(1).get<double>()));
        } else {
            throw InputError("vector entry must be a number or [re, im]");
        }
    }
    return v;
}

Context context_from_json(const Json& j) {
    std::string label = j.value("label", "");
    if (label.empty()) throw InputError("context needs a label");
    if (j.contains("atoms")) {
        std::vector<ProjectionMatrix> atoms;
        for (const Json& a : j.at("atoms"))
            atoms.push_back(ProjectionMatrix(HermitianMatrix(matrix_from_json(a))));
        return make_context(std::move(atoms), label);
    }
    if (j.contains("basis")) {
        std::vector<std::vector<Complex>> basis;
        for (const Json& v : j.at("basis")) basis.push_back(complex_vector_from_json(v));
        return context_from_basis(basis, label);
    }
    throw InputError("context '" + label + "' needs atoms or basis");
}

Json spectral_open_to_json(const SpectralOpen& u) {
    const ContextPoset& poset = *u.poset;
    Json values = Json::object();
    for (int c = 0; c < poset.size(); ++c) {
        Json atoms = Json::array();
        for (int p = 0; p < poset.contexts[c].atom_count(); ++p)
            if ((u.values[c] >> p) & 1) atoms.push_back(p);
        values[poset.contexts[c].label] = std::move(atoms);
    }
    return Json{{"values", std::move(values)}};
}

SpectralOpen spectral_open_from_json(const Json& j, const ContextPoset& poset) {
    SpectralOpen u = sopen_bottom(poset);
    for (const auto& [label, atoms] : j.at("values").items()) {
        int c = poset.index_of_label(label);
        if (c < 0) throw InputError("unknown context label '" + label + "'");
        for (const Json& p : atoms) {
            int idx = p.get<int>();
            if (idx < 0 || idx >= poset.contexts[c].atom_count())
                throw InputError("atom index out of range in '" + label + "'");
            u.values[c] |= uint64_t(1) << idx;
        }
    }
    return u;
}

Json upper_set_to_json(const ContextPoset& poset, const UpperSet& s) {
    Json members = Json::array();
    s.members.for_each([&](int i) { members.push_back(poset.contexts[i].label); });
    return Json{{"base", poset.contexts[s.base].label}, {"members", std::move(members)}};
}

Json certificate_to_json(const ContextPoset& poset, const KSCertificate& cert) {
    Json out;
    out["verdict"] = cert.point_found ? "point_found" : "no_point";
    if (cert.point_found) {
        Json point = Json::object();
        for (int i = 0; i < poset.size(); ++i)
            point[poset.contexts[i].label] = cert.point.choice[i];
        out["point"] = std::move(point);
    }
    out["search_stats"] = Json{{"nodes_visited", cert.stats.nodes_visited},
                               {"contexts", cert.stats.contexts}};
    return out;
}

const HermitianMatrix& SystemDescription::observable(const std::string& name) const {
    for (const auto& [n, m] : observables)
        if (n == name) return m;
    throw InputError("unknown observable '" + name + "'");
}

const State& SystemDescription::state(const std::string& name) const {
    for (const auto& [n, s] : states)
        if (n == name) return s;
    throw InputError("unknown state '" + name + "'");
}

ContextPoset SystemDescription::build() const {
    std::vector<Context> gens;
    if (generate_contexts) {
        for (const auto& [name, obs] : observables) gens.push_back(context_of(obs, "C*(" + name + ")"));
        if (gens.empty()) gens.push_back(trivial_context(dim));
    } else {
        gens = explicit_contexts;
        if (gens.empty()) gens.push_back(trivial_context(dim));
    }
    return build_poset(std::move(gens), poset_cap);
}

SystemDescription system_from_json(const Json& j) {
    SystemDescription sys;
    if (!j.contains("dim")) throw InputError("system needs a dim");
    sys.dim = j.at("dim").get<int>();
    if (sys.dim <= 0 || sys.dim > 64) throw InputError("system dim must be in 1..64");

    std::set<std::string> names;
    auto check_name = [&](const std::string& n) {
        if (n.empty()) throw InputError("names must be nonempty");
        if (!names.insert(n).second) throw InputError("duplicate name '" + n + "'");
    };

    for (const Json& o : j.value("observables", Json::array())) {
        std::string name = o.value("name", "");
        check_name(name);
        HermitianMatrix m{matrix_from_json(o.at("matrix"))};
        if (m.dim() != sys.dim) throw InputError("observable '" + name + "' has wrong dim");
        sys.observables.push_back({name, std::move(m)});
    }
    for (const Json& s : j.value("states", Json::array())) {
        std::string name = s.value("name", "");
        check_name(name);
        if (s.contains("vector")) {
            auto v = complex_vector_from_json(s.at("vector"));
            if (int(v.size()) != sys.dim) throw InputError("state '" + name + "' has wrong dim");
            sys.states.push_back({name, state_from_vector(v)});
        } else if (s.contains("density")) {
            State st{HermitianMatrix(matrix_from_json(s.at("density")))};
            if (st.dim() != sys.dim) throw InputError("state '" + name + "' has wrong dim");
            sys.states.push_back({name, std::move(st)});
        } else {
            throw InputError("state '" + name + "' needs vector or density");
        }
    }
    if (j.contains("contexts")) {
        const Json& c = j.at("contexts");
        if (c.is_string() && c.get<std::string>() == "generate") {
            sys.generate_contexts = true;
        } else if (c.is_array()) {
            sys.generate_contexts = false;
            for (const Json& cj : c) {
                Context ctx = context_from_json(cj);
                if (ctx.dim != sys.dim) throw InputError("context '" + ctx.label + "' has wrong dim");
                check_name(ctx.label);
                sys.explicit_contexts.push_back(std::move(ctx));
            }
        } else {
            throw InputError("contexts must be \"generate\" or a list");
        }
    }
    if (j.contains("options")) {
        const Json& o = j.at("options");
        sys.poset_cap = o.value("poset_cap", 512);
    }
    return sys;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

SystemDescription load_system(const std::string& path) { return system_from_json(load_json(path)); }

std::vector<Context> ks_contexts_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("bases")) throw InputError("KS config needs dim and bases");
    int dim = j.at("dim").get<int>();
    std::vector<Context> out;
    int k = 0;
    for (const Json& basis : j.at("bases")) {
        std::vector<std::vector<Complex>> vectors;
        for (const Json& v : basis) vectors.push_back(complex_vector_from_json(v));
        std::string label = "B" + std::to_string(++k);
        if (j.contains("labels")) label = j.at("labels").at(k - 1).get<std::string>();
        Context c = context_from_basis(vectors, label);
        if (c.dim != dim) throw InputError("basis '" + label + "' has wrong dim");
        out.push_back(std::move(c));
    }
    if (out.empty()) throw InputError("KS config has no bases");
    return out;
}

std::vector<Context> load_ks_config(const std::string& path) {
    return ks_contexts_from_json(load_json(path));
}

Site site_from_json(const Json& j) {
    if (j.contains("interval_grid")) {
        std::vector<Rational> grid;
        for (const Json& g : j.at("interval_grid")) {
            if (g.is_number_integer())
                grid.push_back(Rational(g.get<long long>()));
            else
                grid.push_back(parse_rational(g.get<std::string>()));
        }
        return IntervalSite(std::move(grid)).site();
    }
    std::vector<std::string> names;
    for (const Json& e : j.at("elements")) names.push_back(e.get<std::string>());
    int n = int(names.size());
    auto index_of = [&](const std::string& s) {
        for (int i = 0; i < n; ++i)
            if (names[i] == s) return i;
        throw InputError("unknown site element '" + s + "'");
    };

    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (const Json& pair : j.at("leq")) {
        int a = index_of(pair.at(0).get<std::string>());
        int b = index_of(pair.at(1).get<std::string>());
        leq[a][b] = true;
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq[i][k])
                for (int l = 0; l < n; ++l)
                    if (leq[k][l]) leq[i][l] = true;

    FiniteLattice lat = lattice_from_leq(names, leq);
    const Json& cover = j.at("cover");
    if (cover.is_string() && cover.get<std::string>() == "join-cover") return join_cover_site(lat);

    // explicit cover pairs: x <| U for each listed (x, U); everything else
    // follows from x in U and the join rule over listed pairs is NOT implied,
    // so the explicit table is used as given.
    std::vector<std::pair<int, Bits>> table;
    for (const Json& entry : cover) {
        int x = index_of(entry.at(0).get<std::string>());
        Bits u(n);
        for (const Json& m : entry.at(1)) u.set(index_of(m.get<std::string>()));
        table.push_back({x, std::move(u)});
    }
    Site s;
    s.base = lat;
    s.covers = [table](int x, const Bits& u) {
        if (u.test(x)) return true;  // membership axiom
        for (const auto& [tx, tu] : table)
            if (tx == x && tu.subset_of(u)) return true;
        return false;
    };
    return s;
}

Site load_site(const std::string& path) { return site_from_json(load_json(path)); }

}  // namespace bohr
