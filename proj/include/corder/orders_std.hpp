#pragma once

#include "corder/order.hpp"

namespace corder {

// Orientation of a triple under a strict comparator: sign of the unique
// sorting permutation, 0 on repeats.
int orientation(const Elem& a, const Elem& b, const Elem& c,
                const std::function<bool(const Elem&, const Elem&)>& less);

// Circular ordering induced by a left (linear) ordering: +1 exactly on
// cyclic rotations of ascending triples.
CircularOrder linear_to_circular(const LeftOrder& lo);

// Standard counterclockwise ordering on rational circle points; cyclic
// groups embed via r -> r/n.
CircularOrder circle_standard(const Group& g);

CircularOrder reversed_circular(const CircularOrder& co);

// phi^* c; phi must carry the injectivity claim.
CircularOrder pullback_circular(const Hom& phi, const CircularOrder& co);

// c^h(g1,g2,g3) = c(g1 h, g2 h, g3 h); the result is revalidated on a small
// window (set revalidate_bound = 0 to skip).
CircularOrder conjugate_circular(const CircularOrder& co, const Elem& h, int revalidate_bound = 2);

// Left order on a Pair-element group, quotient coordinate on the right:
// positive iff the quotient coordinate is positive, or zero with positive
// kernel coordinate.  Rejects a z that the bounded check finds non-cofinal.
LeftOrder lexicographic_left(const Group& g, std::function<int(const Elem&)> kernel_sign,
                             std::function<int(const Elem&)> quotient_sign, const Elem& z,
                             std::function<Int(const Elem&)> z_floor, int check_bound = 4);

// Canned instances.
LeftOrder integer_order(const Int& z = 1);                 // (Z, n>0, z)
LeftOrder rational_order(const Rat& z = Rat(1));           // (Q, q>0, z)
LeftOrder zxz_lex_order(const Group& zxz);                 // right coordinate cofinal, z=(0,1)
LeftOrder zxz_lex_order_bad_z(const Group& zxz);           // z=(1,0), deliberately non-cofinal
LeftOrder klein_lex_order(const Group& k);                 // y^m x^n positive iff n>0 or n=0,m>0; z=x^2

// Standard circular ordering on Z:Z2 arising lexicographically from
// 1 -> Z -> Z:Z2 -> Z2 -> 1 with the t > id ordering of the kernel; equals
// the quotient of (K, klein_lex_order, x^2) under K/<x^2> = Z:Z2.
CircularOrder semidirect_lex_circular(const Group& g2);

// Table-backed ordering from a cyclic arrangement (arrangement[0] must be
// the identity): c = orientation of positions.
CircularOrder table_circular(const Group& g, std::vector<Elem> arrangement);

// All circular orderings of a finite group with |G| <= 9: brute force over
// cyclic arrangements starting at id, kept when invariant under every left
// translation.  |G| <= 2 yields the single zero ordering.
std::vector<CircularOrder> enumerate_circular_orderings(const Group& g);

}  // namespace corder
