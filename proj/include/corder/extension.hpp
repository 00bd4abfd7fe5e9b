#pragma once

#include <map>
#include <optional>

#include "corder/order.hpp"

namespace corder {

// Normalized integer 2-cocycle on a group: f(id,.) = f(.,id) = 0 and
// f(b,c) - f(ab,c) + f(a,bc) - f(a,b) = 0.
struct Cocycle2 {
    Group group;
    std::function<Int(const Elem&, const Elem&)> f;

    Int operator()(const Elem& a, const Elem& b) const { return f(a, b); }
};

Cocycle2 zero_cocycle(const Group& g);
Cocycle2 pullback_cocycle(const Hom& phi, const Cocycle2& f);

// Checks normalization and the cocycle identity on a window; reports
// violations rather than throwing.
ValidationReport validate_cocycle(const Cocycle2& f, int bound);

// Central extension Z x_f G with (n,a)(m,b) = (n+m+f(a,b), ab) and
// (n,a)^-1 = (-n - f(a, a^-1), a^-1).  Rejects an f that fails
// normalization on window pairs.
Group central_extension_group(const Group& base, const Cocycle2& f, int check_bound = 3);

// Base group of a central extension built by central_extension_group.
const Group& extension_base(const Group& ext);

// The defining cocycle f_c of the lift construction:
//   f_c(a,b) = 0 if a = id or b = id or c(id, a, ab) = 1
//              1 if ab = id (a != id)  or c(id, ab, a) = 1.
Cocycle2 cocycle_from_circular(const CircularOrder& co);

// Lift of a circularly-ordered group: the left-ordered central extension
// with cone {(n,a) : n >= 0} minus the identity, z = (1,id), floor (n,a)=n.
LeftOrder lift_group(const CircularOrder& co);

// Lift of an order-preserving homomorphism to the lifts: (n,a) -> (n,phi(a)).
// Verifies pullback_circular(phi, target) == source on window triples first.
Hom lift_hom(const Hom& phi, const CircularOrder& c_src, const CircularOrder& c_tgt, int bound);

// Floor of g over the cyclic subgroup <z> derived from comparisons alone,
// by exponential then binary search; throws guard_error past search_bound.
Int derive_z_floor(const LeftOrder& lo, const Elem& g, int search_bound = 64);

// Minimal representative of g<z>: the unique coset element in [id, z).
Elem minimal_representative(const LeftOrder& lo, const Elem& g);

// Quotient construction: the circular ordering c_< on G/<z>, with coset
// elements represented by their minimal representatives.
CircularOrder quotient_group(const LeftOrder& lo);

// f_< on the quotient: z^(f_<) = (min a)(min b)(min ab)^-1, i.e. the floor
// of the product of minimal representatives.
Cocycle2 cocycle_from_leftorder(const LeftOrder& lo);

// eta round trip: the quotient of the lift of (G,c), transported along
// (n,a)<z> -> a, must equal c on every checked triple.
ValidationReport roundtrip_eta(const CircularOrder& co, int bound);

// nu round trip: the lift of the quotient of (G,<,z) maps onto G via
// (n, min a) -> z^n (min a); checks that this is a group-, order- and
// z-preserving bijection on the window.
ValidationReport roundtrip_nu(const LeftOrder& lo, int bound);

// --- sectioned central extensions ------------------------------------------

// (E, G, iota, pi, s) with set-theoretic section fixing the identity.
struct Sce {
    Group E;
    Group base;
    std::function<Elem(const Int&)> iota;
    std::function<Elem(const Elem&)> pi;
    std::function<Elem(const Elem&)> s;
    // exact preimage under iota when structurally available; otherwise the
    // associated-cocycle computation falls back to a bounded search
    std::function<std::optional<Int>(const Elem&)> iota_exp;
};

Sce sce_from_cocycle(const Cocycle2& f, int check_bound = 3);
Sce sce_from_lift(const CircularOrder& co);
// The minimal-representative section of (G,<,z) over G/<z>.
Sce sce_from_leftorder(const LeftOrder& lo);

// f_s(g,h) = iota-exponent of s(g)s(h)s(gh)^-1; representation error when
// the product escapes iota's image.
Cocycle2 associated_cocycle(const Sce& sce, int iota_search_bound = 256);

// Lemma-style equivalence test: same base group (same object), associated
// cocycles equal on every checked pair.  Returns a witness pair on failure.
struct SceComparison {
    bool equivalent;
    std::optional<std::pair<Elem, Elem>> witness;
};
SceComparison sce_equivalent(const Sce& e1, const Sce& e2, int bound);

// --- coboundary solving -----------------------------------------------------

// Solves d(a) + d(b) - d(ab) = f(a,b) with d(id) = 0 over the integers on a
// finite group (guard on |G|).  For finite G the solution is unique when it
// exists (the only homomorphism to Z is zero): each value is forced by the
// relation along cyclic subgroups, and the candidate is verified by
// substitution over all pairs.
std::optional<std::map<Elem, Int>> coboundary_witness(const Cocycle2& f, size_t guard = 64);

}  // namespace corder
