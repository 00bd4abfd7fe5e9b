#pragma once

#include <functional>
#include <vector>

#include "corder/group.hpp"

namespace corder {

// Coset decomposition of a factor element: g = embed(core) * rep, with rep
// drawn from a fixed right transversal and rep = id exactly when g lies in
// the amalgamated subgroup.
struct CosetDecomposition {
    Elem core;
    Elem rep;
};

struct AmalgamFactor {
    Group group;                                               // G_i
    Hom embed;                                                 // phi_i : H -> G_i, injective
    std::function<CosetDecomposition(const Elem&)> decompose;  // g -> (h, rep)
};

struct AmalgamData {
    Group core;  // H
    std::vector<AmalgamFactor> factors;
};

// Amalgamated free product with AmalWord normal forms h * g_1 ... g_k:
// nonidentity transversal representatives, adjacent factor indices distinct.
// Every decomposition callback result is re-verified (embed(h)*rep == g);
// inconsistent callbacks raise representation_error.
Group amalgam_group(AmalgamData data);

const AmalgamData& amalgam_data(const Group& amal);

// Canonical embeddings.
Elem amalgam_embed_core(const Group& amal, const Elem& h);
Elem amalgam_embed_factor(const Group& amal, int factor, const Elem& g);
Hom amalgam_core_hom(const Group& amal);
Hom amalgam_factor_hom(const Group& amal, int factor);

// Nonidentity transversal representatives of factor i observed on its
// window(bound), deduplicated, in deterministic order.
std::vector<Elem> amalgam_transversal(const Group& amal, int factor, int bound);

// Words with at most max_reps representative syllables, core ranging over
// core.window(core_bound); deterministic order.
std::vector<Elem> amalgam_words(const Group& amal, int max_reps, int core_bound);

}  // namespace corder
