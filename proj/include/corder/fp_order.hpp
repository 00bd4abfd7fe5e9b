#pragma once

#include <array>
#include <optional>

#include "corder/free_product.hpp"
#include "corder/order.hpp"

namespace corder {

// Triple of free-product words in canonical normal form.
struct Triple {
    Elem w1, w2, w3;

    bool operator==(const Triple& o) const { return w1 == o.w1 && w2 == o.w2 && w3 == o.w3; }
    std::string str() const { return "(" + w1.str() + ", " + w2.str() + ", " + w3.str() + ")"; }
};

// One reduction move: kind 1 strips a letter shared by all three words,
// kind 2 left-multiplies the triple by the inverse of a letter leading
// exactly two words, kind 3 truncates a word to its leading letter.
struct ReductionStep {
    int move;      // 1, 2, 3
    Elem letter;   // the letter x driving the move, as a one-letter word
    Triple after;
};
using ReductionTrace = std::vector<ReductionStep>;

// Move priority order; the default is 1 > 2 > 3.  Minimal reductions are
// unique, so permuting priorities must not change the fixpoint (property
// tested, not assumed).
using MovePriority = std::array<int, 3>;
inline constexpr MovePriority kDefaultPriority{1, 2, 3};

std::optional<ReductionStep> reduction_step(const Group& fp, const Triple& t,
                                            const MovePriority& prio = kDefaultPriority);

// Iterates reduction_step to its fixpoint; every entry of the result lies
// in a single factor or is the identity.  A step counter of
// 4 * (total syllable count) + 8 guards the loop; exceeding it raises
// guard_error (the move system is expected to terminate well before).
std::pair<Triple, ReductionTrace> minimal_reduction(const Group& fp, const Triple& t,
                                                    const MovePriority& prio = kDefaultPriority);

// Base-case ordering on (G u H u {id})^3 given the two factor orderings:
// rule 1: c(g, h, id) = +1; rule 2: restriction to each factor; rule 3:
// c(g1,g2,h) = c_G(g1,g2,id), c(g,h1,h2) = c_H(id,h1,h2); remaining
// patterns follow from cyclic invariance.  Entries are one-letter words.
int base_circular(const Group& fp, const CircularOrder& cg, const CircularOrder& ch,
                  const Elem& x, const Elem& y, const Elem& z);

// The induced circular ordering on a two-factor free product:
// c(t) = base_circular(minimal_reduction(t)).
CircularOrder fp_circular(const Group& fp, const CircularOrder& cg, const CircularOrder& ch);

// Binary fold tree over factor indices for the n-ary ordering.
struct FoldShape {
    int leaf = -1;
    std::shared_ptr<const FoldShape> left, right;

    static FoldShape make_leaf(int index);
    static FoldShape node(FoldShape l, FoldShape r);
    bool is_leaf() const { return leaf >= 0; }
    std::vector<int> indices() const;
};

// Ordering of an n-factor free product along a fold shape; fp_fold uses the
// left-associated shape ((0,1),2),...
CircularOrder fp_fold_shape(const Group& fp, const std::vector<CircularOrder>& factor_orders,
                            const FoldShape& shape);
CircularOrder fp_fold(const Group& fp, const std::vector<CircularOrder>& factor_orders);

// --- faux order preservation -------------------------------------------------

enum class FauxResult { OrderPreserving, FauxOnly, Neither };

struct FauxReport {
    FauxResult result;
    std::optional<std::array<Elem, 3>> witness;  // gap-2 triple for Neither, gap-1 for FauxOnly
};

// Windowed verification of |c(t) - d(phi t)| <= 1 and of exact equality.
FauxReport faux_check(const Hom& phi, const CircularOrder& c, const CircularOrder& d, int bound);

// phi1 * phi2 on free-product words (syllable-wise application, renormalized).
Hom free_product_hom(const Group& fp_src, const Group& fp_tgt, const Hom& phi1, const Hom& phi2);

struct TensorCheck {
    bool order_preserving = false;                    // part (1) on the window
    std::optional<std::array<Elem, 3>> gap2_witness;  // part (2) obstruction
    ValidationReport report;
};

// Prop-6.1-style bifunctor check.  With both maps injective and
// order-preserving, verifies phi1*phi2 preserves the induced orderings
// exactly on the word window.  With a non-injective faux map among them,
// searches the window for a triple where the faux inequality fails with
// gap 2 and reports it.
TensorCheck tensor_morphism_check(const Group& fp_src, const Group& fp_tgt, const Hom& phi1,
                                  const Hom& phi2, const CircularOrder& c1, const CircularOrder& c2,
                                  const CircularOrder& d1, const CircularOrder& d2, int max_syllables,
                                  int letter_bound);

}  // namespace corder
