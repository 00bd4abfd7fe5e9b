#pragma once

#include "corder/amalgam.hpp"
#include "corder/extension.hpp"

namespace corder {

// Amalgamation data for ordered groups: a circularly-ordered core (H, d),
// and factors (G_i, c_i) with order-compatible injections phi_i : H -> G_i
// and coset-decomposition callbacks.
struct OrderedAmalgam {
    struct Factor {
        Group group;
        CircularOrder order;
        Hom embed;  // phi_i, injective
        std::function<CosetDecomposition(const Elem&)> decompose;
    };
    Group core;
    CircularOrder core_order;
    std::vector<Factor> factors;
};

// Verifies each phi_i is order-preserving onto its image (phi_i^* c_i = d)
// and the pairwise compatibility phi_i^* c_i = phi_j^* c_j over windowed
// core triples; witnesses reported, never thrown.
ValidationReport check_compatibility(const OrderedAmalgam& desc, int bound);

// The amalgam of the lifts along the lifted injections, with the common
// central element z = image of (1, id).
struct LiftedAmalgam {
    OrderedAmalgam desc;
    Group group;                         // *_i lift(G_i, c_i) over lift(H, d)
    Group base_amalgam;                  // *_i G_i over H
    Elem z;
    LeftOrder core_lift;                 // lift of (H, d)
    std::vector<LeftOrder> factor_lifts; // lift of each (G_i, c_i)
    std::vector<Hom> factor_embeddings;  // lift_i -> group
    ValidationReport construction_check; // z image / centrality on windows
};

LiftedAmalgam build_lifted_amalgam(const OrderedAmalgam& desc, int bound);

// Erasing integer coordinates in normal form: the canonical projection of
// the lifted amalgam onto the base amalgam (the quotient by <z>).
Elem amalgam_project(const LiftedAmalgam& la, const Elem& w);

// Group isomorphism Theta from the lifted amalgam onto the central
// extension of the base amalgam by a cocycle f extending the f_{c_i}:
//   (n,h)(0,g_1)...(0,g_k) -> (n + sum_j f(h g_1...g_{j-1}, g_j), h g_1...g_k).
// Construction requires delta_i^* f = f_{c_i} on windowed pairs.
struct Theta {
    Group ext;  // Z x_f (base amalgam)
    std::function<Elem(const Elem&)> forward;
    std::function<Elem(const Elem&)> backward;
    ValidationReport check;  // homomorphism, mutual inverse, factor restriction
};
Theta theta(const LiftedAmalgam& la, const Cocycle2& f, int bound);

// Theorem 3.9, (2) => (1): quotient the supplied left ordering by <z> and
// transport it along the projection; the result extends every c_i.
struct DerivedCircular {
    CircularOrder order;     // on la.base_amalgam
    ValidationReport check;  // projection multiplicativity + factor extension
};
DerivedCircular derive_circular_on_amalgam(const LiftedAmalgam& la, const LeftOrder& lo, int bound);

// Theorem 3.9, (1) => (2): pull the lift cone of (base amalgam, c) back
// through Theta; floors come from Theta's integer coordinate.
struct DerivedLeft {
    LeftOrder order;  // on la.group
    Theta transport;
    ValidationReport check;  // extension of the lifted factor orders
};
DerivedLeft derive_left_on_lifted_amalgam(const LiftedAmalgam& la, const CircularOrder& c, int bound);

// Homomorphism out of an amalgam determined by compatible maps on the core
// and the factors; the compatibility relations are verified on windows.
Hom amalgam_hom(const Group& amal, const Group& target, const Hom& core_map,
                const std::vector<Hom>& factor_maps, int check_bound);

// The lexicographic left ordering on a lifted amalgam of shape
// Z_{2m} *_{Z_m} Z_{2m} (inclusions doubling the generator), whose lifted
// amalgam is the Klein-bottle-type group <a, b | a^2 = b^2>: transported
// from the y^m x^n order through a = yx, b = x.
LeftOrder klein_lex_on_lifted_amalgam(const LiftedAmalgam& la, int check_bound);

}  // namespace corder
