#pragma once

#include "corder/extension.hpp"

namespace corder {

// A subgroup presented by a membership predicate plus its own deterministic
// window enumerator (elements must lie in the ambient group).
struct Subgroup {
    std::function<bool(const Elem&)> contains;
    std::function<std::vector<Elem>(int)> window;
};

Subgroup trivial_subgroup(const Group& g);

// Circular convexity: whenever c(h1,g,h2) = 1 and c(h2,f,h1) = 1 with
// h1,h2 in H and g outside H, then f lies in H.  Checked over windowed
// (h1,h2,g,f); flagged Inapplicable when H covers the whole window.
ValidationReport is_convex_circular(const Subgroup& h, const CircularOrder& co, int bound);

enum class ConeSign { Positive, Negative, Identity, Indeterminate };

// Restriction cone of a proper convex subgroup:
//   P = { h in H : c(id, h, g) = 1 for some g in G \ H }.
// The witness g is searched over the deterministic window; an element with
// no witness either way is Indeterminate, never silently classified.
class ConvexCone {
  public:
    ConvexCone(Subgroup h, CircularOrder co, int witness_bound);

    ConeSign classify(const Elem& e) const;
    bool positive(const Elem& e) const;  // throws guard_error on Indeterminate
    const CircularOrder& ordering() const { return co_; }

  private:
    Subgroup h_;
    CircularOrder co_;
    std::vector<Elem> outside_;  // window elements outside H, witness search order
    mutable std::map<Elem, ConeSign> memo_;
};

ConvexCone convex_positive_cone(const Subgroup& h, const CircularOrder& co, int witness_bound);

// Coset ordering of Lemma-5.1 shape: cbar(g1 H, g2 H, g3 H) = c(g1,g2,g3)
// on distinct cosets.  Rejects index < 3 on the window; the check report
// spot-verifies well-definedness across representative choices.
struct CosetOrdering {
    CircularOrder order;  // evaluates on coset representatives
    std::function<bool(const Elem&, const Elem&)> same_coset;
    ValidationReport check;
};
CosetOrdering coset_circular(const Subgroup& h, const CircularOrder& co, int bound);

// Splitting function of the convex restriction cone: d(id) = 0, d(h) = 1
// off the cone, 0 on it; satisfies f_c(g,h) = d(g) - d(gh) + d(h) on H.
struct SplittingD {
    std::function<Int(const Elem&)> d;
    ValidationReport check;  // the displayed identity over windowed pairs
};
SplittingD convex_splitting_d(const Subgroup& h, const CircularOrder& co, int bound);

// Lemma-5.3 embedding iota(h) = (-d(h), h) of H into the lift of (G,c);
// the report verifies the homomorphism law and left-order convexity of the
// image on the window.
struct ConvexEmbedding {
    Hom embed;
    LeftOrder lift;
    ValidationReport check;
};
ConvexEmbedding convex_embed_in_lift(const Subgroup& h, const CircularOrder& co,
                                     const std::function<Int(const Elem&)>& d, int bound);

}  // namespace corder
