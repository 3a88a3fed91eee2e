#pragma once

// Automorphisms given on pc-generators, the filter they induce on an
// automorphism group, and the derivations they induce on a graded Lie ring.

#include <map>
#include <string>
#include <vector>

#include "filterlab/lie.hpp"

namespace filterlab {

/// An automorphism, given by the images of the pc-generators.
struct AutMap {
    std::vector<GroupElem> images;
    bool operator==(const AutMap&) const = default;
};

/// Empty when `images` defines an automorphism of G; otherwise the reasons.
std::vector<std::string> aut_failures(const PcGroup& G, const AutMap& a);
/// Throws Error unless the images define an automorphism.
AutMap make_aut(const PcGroup& G, std::vector<GroupElem> images);
AutMap identity_aut(const PcGroup& G);
AutMap inner_aut(const PcGroup& G, const GroupElem& g);

/// Blocks of consecutive `aut: g<i> -> <word>` lines; generators not
/// mentioned map to themselves. Throws ParseError or Error.
std::vector<AutMap> parse_automorphisms(const PcGroup& G, const std::string& text);
std::vector<AutMap> load_automorphisms(const PcGroup& G, const std::string& path);

/// x^a
GroupElem apply(const PcGroup& G, const AutMap& a, const GroupElem& x);
/// [x, a] = x^{-1} x^a
GroupElem aut_commutator(const PcGroup& G, const GroupElem& x, const AutMap& a);
/// x^{ab} = (x^a)^b
AutMap compose(const PcGroup& G, const AutMap& a, const AutMap& b);
AutMap inverse(const PcGroup& G, const AutMap& a);
/// [a, b] = a^{-1} b^{-1} a b
AutMap aut_bracket(const PcGroup& G, const AutMap& a, const AutMap& b);

bool leaves_invariant(const PcGroup& G, const AutMap& a, const Filter& f);

/// a in Delta_s: [phi_t, a] <= phi_{t+s} for every box grade t. Throws Error
/// if a does not leave the filter invariant.
bool delta_membership(const PcGroup& G, const AutMap& a, const Filter& f, const MonoidElem& s);

struct DeltaReport {
    /// Per generator, the maximal box grades s at which it lies in Delta_s.
    std::vector<std::vector<MonoidElem>> maximal_grades;
    /// Violations of [Delta_s, Delta_t] <= Delta_{s+t} on generator pairs,
    /// and of closure under products and inverses up to the word length.
    std::vector<std::string> failures;
};

DeltaReport delta_layer_dims(const PcGroup& G, const std::vector<AutMap>& gens, const Filter& f, int word_length = 3);

/// Matrices L_u -> L_{u+s}, keyed by u, of x D_a = [x, a] mod the boundary.
/// Grades u whose target lies outside the ring are omitted (zero maps).
using GradedMap = std::map<MonoidElem, gf::Matrix>;
GradedMap induced_derivation(const PcGroup& G, const AutMap& a, const MonoidElem& s, const GradedLieRing& L, const Filter& f);
/// (x o y) D = xD o y + x o yD on all basis pairs; returns failures.
std::vector<std::string> check_derivation_law(const GradedLieRing& L, const GradedMap& D, const MonoidElem& s);

/// Automorphisms x -> x chi(x) for chi in a basis of Hom(G/Phi(G), Omega_1(Z(G))),
/// keeping those that are bijective.
std::vector<AutMap> central_automorphisms(const PcGroup& G);

}  // namespace filterlab
