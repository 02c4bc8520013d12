#pragma once

#include <string>
#include <vector>

#include "bohr/poset.hpp"
#include "bohr/rational.hpp"
#include "bohr/spectrum.hpp"

namespace bohr {

// Collector for numeric-boundary warnings: strict-inequality decisions that
// fell within epsilon of an endpoint. The CLI prints these and escalates
// under --strict.
struct WarningSink {
    std::vector<std::string> messages;
    void warn(const std::string& msg) { messages.push_back(msg); }
    bool empty() const { return messages.empty(); }
};

// Best inner/outer classical approximations of a at a context: per atom p,
// lo = min eigenvalue and hi = max eigenvalue of the compression p a p,
// realizing sup{f <= a} and inf{a <= g} coefficients at p.
struct InnerOuterProfile {
    int context = -1;
    std::vector<double> lo;
    std::vector<double> hi;
};

InnerOuterProfile inner_outer(const HermitianMatrix& a, const Context& c);

// Strict comparisons with the epsilon margin; near-ties get a warning.
bool strictly_above(double value, const Rational& bound, WarningSink* w, const char* what);
bool strictly_below(double value, const Rational& bound, WarningSink* w, const char* what);

// delta(a)^{-1}(r,s): per context the atoms with lo > r and hi < s (an
// absent endpoint drops its clause). The result is a monotone spectral open.
SpectralOpen daseinise(const HermitianMatrix& a, const RationalInterval& iv,
                       const ContextPoset& poset, WarningSink* warnings = nullptr);

// The Gelfand transform on a basic open for a inside the context's span:
// generator(a - r) /\ generator(s - a); equals the daseinise value there.
LatticeElement gelfand_open(const ContextPoset& poset, int c, const HermitianMatrix& a,
                            const RationalInterval& iv);

// delta(a) <= delta(b) over the poset: pointwise comparison of the
// inner/outer profiles at every context.
bool daseinise_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                   const ContextPoset& poset);

}  // namespace bohr
