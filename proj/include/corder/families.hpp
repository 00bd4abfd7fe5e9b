#pragma once

#include "corder/extension.hpp"

namespace corder {

using IntFun = std::function<Int(const Elem&)>;

// Positive cone P_{alpha,phi} on the lift of (G,c):
//   (n,a) positive iff n + d_alpha(a) + varphi(a) >= 0 (and not the identity).
// d_alpha must satisfy f_c - f_{c_alpha} = delta(d_alpha) on windowed pairs
// and varphi must be a homomorphism to Z; both are verified first.
LeftOrder cone_alpha_phi(const CircularOrder& c, const CircularOrder& c_alpha, const IntFun& d_alpha,
                         const IntFun& varphi, int check_bound);

// The conjugation-transfer homomorphism of the normal-family construction:
//   a -> -1 + f_c(g,a) + f_c(ga, g^-1) + d_beta(g a g^-1) - d_alpha(a).
// Requires g != id and the pairing f_{c_alpha}(a,b) = f_{c_beta}(gag^-1, gbg^-1)
// on windowed pairs; the homomorphism law of the result is asserted on the
// same window.
IntFun phi_g_alpha_beta(const CircularOrder& c, const Elem& g, const CircularOrder& c_alpha,
                        const CircularOrder& c_beta, const IntFun& d_alpha, const IntFun& d_beta,
                        int check_bound);

// Conjugation-normality of the cones: e in P_{alpha,phi} iff
// (0,g) e (0,g)^-1 in P_{beta,psi} with psi = phi - phi_{g,alpha,beta},
// checked over the lift window.
ValidationReport conjugation_normality_check(const CircularOrder& c, const Elem& g,
                                             const CircularOrder& c_alpha, const CircularOrder& c_beta,
                                             const IntFun& d_alpha, const IntFun& d_beta,
                                             const IntFun& varphi, int bound);

// The conjugate orbit {c^w : w in window}, deduplicated by comparing values
// over windowed triples.
std::vector<CircularOrder> conjugate_family(const CircularOrder& co, int words_bound, int compare_bound);

// c_{<^g} = c_<^{g<z>}: the quotient ordering of the conjugated cone equals
// the conjugate of the quotient ordering, over windowed triples.
ValidationReport normal_descends_check(const LeftOrder& lo, const Elem& g, int bound);

// The conjugated left order <^g (cone g^-1 P g, same z).
LeftOrder conjugate_left(const LeftOrder& lo, const Elem& g);

}  // namespace corder
