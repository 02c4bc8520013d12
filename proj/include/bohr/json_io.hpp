#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "bohr/ks.hpp"
#include "bohr/poset.hpp"
#include "bohr/site.hpp"
#include "bohr/spectrum.hpp"
#include "bohr/states.hpp"

namespace bohr {

using Json = nlohmann::ordered_json;

// Matrix encoding: {"dim": n, "entries": [[[re,im],...],...]} row-major.
// Round-trips bit-exactly (shortest representation that reparses to the
// same double).
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Context: {"label", "atoms": [matrix,...]} or {"label", "basis": [[vec],...]}.
Json context_to_json(const Context& c);
Context context_from_json(const Json& j);

Json spectral_open_to_json(const SpectralOpen& u);
SpectralOpen spectral_open_from_json(const Json& j, const ContextPoset& poset);

Json upper_set_to_json(const ContextPoset& poset, const UpperSet& s);

Json certificate_to_json(const ContextPoset& poset, const KSCertificate& cert);

// A system description: named observables and states plus context policy.
struct SystemDescription {
    int dim = 0;
    std::vector<std::pair<std::string, HermitianMatrix>> observables;
    std::vector<std::pair<std::string, State>> states;
    bool generate_contexts = true;        // contexts = C*(a) per observable
    std::vector<Context> explicit_contexts;
    int poset_cap = 512;

    const HermitianMatrix& observable(const std::string& name) const;
    const State& state(const std::string& name) const;
    ContextPoset build() const;
};

SystemDescription system_from_json(const Json& j);
SystemDescription load_system(const std::string& path);

// KS configuration: {"dim": n, "bases": [[vector,...],...]}, unit vectors.
std::vector<Context> ks_contexts_from_json(const Json& j);
std::vector<Context> load_ks_config(const std::string& path);

// Site description: {"elements": [names], "leq": [[a,b],...]} with either
// "cover": "join-cover" or "cover": [[x, [members...]], ...] explicit pairs.
Site site_from_json(const Json& j);
Site load_site(const std::string& path);

Json load_json(const std::string& path);

}  // namespace bohr
