#include "corder/extension.hpp"

#include <algorithm>

#include "corder/errors.hpp"
#include "corder/orders_std.hpp"

namespace corder {

Cocycle2 zero_cocycle(const Group& g) {
    return Cocycle2{g, [](const Elem&, const Elem&) { return Int(0); }};
}

Cocycle2 pullback_cocycle(const Hom& phi, const Cocycle2& f) {
    auto fn = f.f;
    auto m = phi.map;
    return Cocycle2{phi.source, [fn, m](const Elem& a, const Elem& b) { return fn(m(a), m(b)); }};
}

ValidationReport validate_cocycle(const Cocycle2& f, int bound) {
    ValidationReport rep;
    const Group& g = f.group;
    auto win = g.window(bound);
    rep.checked_region = "cocycle window bound " + std::to_string(bound);
    for (const auto& a : win) {
        if (f(g.identity(), a) != 0 || f(a, g.identity()) != 0)
            rep.add({"normalization", {a}, "f(id,a) or f(a,id) nonzero"});
    }
    for (const auto& a : win)
        for (const auto& b : win)
            for (const auto& c : win) {
                Int s = f(b, c) - f(g.mul(a, b), c) + f(a, g.mul(b, c)) - f(a, b);
                if (s != 0) rep.add({"cocycle-identity", {a, b, c}, "sum " + s.str()});
            }
    return rep;
}

namespace {
struct ExtPayload {
    Group base;
    Cocycle2 f;
};
}  // namespace

Group central_extension_group(const Group& base, const Cocycle2& f, int check_bound) {
    for (const auto& a : base.window(check_bound))
        if (f(base.identity(), a) != 0 || f(a, base.identity()) != 0)
            throw representation_error("cocycle fails normalization at " + a.str());

    auto payload = std::make_shared<const ExtPayload>(ExtPayload{base, f});
    Group::Rep rep;
    rep.name = "Zx_f(" + base.name() + ")";
    rep.identity = Elem::make_ext(0, base.identity());
    rep.payload = payload;
    rep.mul = [payload](const Elem& x, const Elem& y) {
        const auto& a = x.as_ext();
        const auto& b = y.as_ext();
        return Elem::make_ext(a.n + b.n + payload->f(a.base, b.base), payload->base.mul(a.base, b.base));
    };
    rep.inv = [payload](const Elem& x) {
        const auto& a = x.as_ext();
        Elem ai = payload->base.inv(a.base);
        return Elem::make_ext(-a.n - payload->f(a.base, ai), ai);
    };
    if (base.finite()) {
        rep.window = [payload](int bound) {
            std::vector<Elem> out;
            for (Int n = -bound; n <= bound; ++n)
                for (const auto& a : payload->base.enumerate()) out.push_back(Elem::make_ext(n, a));
            return out;
        };
    } else {
        rep.window = [payload](int bound) {
            std::vector<Elem> out;
            for (Int n = -bound; n <= bound; ++n)
                for (const auto& a : payload->base.window(bound)) out.push_back(Elem::make_ext(n, a));
            return out;
        };
    }
    return Group(rep);
}

const Group& extension_base(const Group& ext) {
    auto p = ext.payload<ExtPayload>();
    if (!p || ext.identity().kind() != Elem::Kind::Ext)
        throw representation_error("not a central extension group");
    return p->base;
}

Cocycle2 cocycle_from_circular(const CircularOrder& co) {
    Group g = co.group;
    auto c = co.c;
    return Cocycle2{g, [g, c](const Elem& a, const Elem& b) {
                        if (g.is_identity(a) || g.is_identity(b)) return Int(0);
                        Elem ab = g.mul(a, b);
                        if (g.is_identity(ab)) return Int(1);
                        int v = c(g.identity(), a, ab);
                        if (v == 1) return Int(0);
                        if (c(g.identity(), ab, a) == 1) return Int(1);
                        throw representation_error("orientation degenerate on a nondegenerate triple at " +
                                                   a.str() + ", " + b.str());
                    }};
}

LeftOrder lift_group(const CircularOrder& co) {
    Group ext = central_extension_group(co.group, cocycle_from_circular(co));
    Group base = co.group;
    return LeftOrder{ext,
                     [base](const Elem& e) {
                         const auto& x = e.as_ext();
                         return x.n > 0 || (x.n == 0 && !base.is_identity(x.base));
                     },
                     Elem::make_ext(1, base.identity()),
                     [](const Elem& e) { return e.as_ext().n; }};
}

Hom lift_hom(const Hom& phi, const CircularOrder& c_src, const CircularOrder& c_tgt, int bound) {
    if (!phi.injective) throw precondition_error("lift of a non-injective homomorphism");
    CircularOrder pulled = pullback_circular(phi, c_tgt);
    auto win = phi.source.window(bound);
    for (const auto& a : win)
        for (const auto& b : win)
            for (const auto& c : win)
                if (pulled.c(a, b, c) != c_src.c(a, b, c))
                    throw precondition_error("homomorphism is not order-preserving",
                                             a.str() + ", " + b.str() + ", " + c.str());
    LeftOrder src_lift = lift_group(c_src);
    LeftOrder tgt_lift = lift_group(c_tgt);
    auto m = phi.map;
    return Hom{src_lift.group, tgt_lift.group,
               [m](const Elem& e) {
                   const auto& x = e.as_ext();
                   return Elem::make_ext(x.n, m(x.base));
               },
               phi.injective};
}

Int derive_z_floor(const LeftOrder& lo, const Elem& g, int search_bound) {
    const Group& grp = lo.group;
    auto below = [&](const Int& k) {  // z^k <= g
        Elem shifted = grp.mul(grp.power(grp.inv(lo.z), k), g);
        return !lo.positive(grp.inv(shifted));  // id <= z^-k g
    };
    // exponential bracket, then binary search for max{k : z^k <= g}
    Int lob, hib;
    if (below(0)) {
        lob = 0;
        hib = 1;
        int steps = 0;
        while (below(hib)) {
            lob = hib;
            hib *= 2;
            if (++steps > search_bound)
                throw guard_error("floor search diverges upward: z may not be cofinal at " + g.str());
        }
    } else {
        hib = 0;
        lob = -1;
        int steps = 0;
        while (!below(lob)) {
            hib = lob;
            lob *= 2;
            if (++steps > search_bound)
                throw guard_error("floor search diverges downward: z may not be cofinal at " + g.str());
        }
    }
    while (hib - lob > 1) {
        Int mid = lob + (hib - lob) / 2;
        (below(mid) ? lob : hib) = mid;
    }
    return lob;
}

namespace {

Int floor_of(const LeftOrder& lo, const Elem& g) {
    return lo.has_floor() ? lo.z_floor(g) : derive_z_floor(lo, g);
}

}  // namespace

Elem minimal_representative(const LeftOrder& lo, const Elem& g) {
    return lo.group.mul(g, lo.group.power(lo.z, -floor_of(lo, g)));
}

CircularOrder quotient_group(const LeftOrder& lo) {
    LeftOrder cap = lo;
    Group::Rep rep;
    rep.name = lo.group.name() + "/<z>";
    rep.identity = lo.group.identity();
    rep.mul = [cap](const Elem& a, const Elem& b) {
        return minimal_representative(cap, cap.group.mul(a, b));
    };
    rep.inv = [cap](const Elem& a) { return minimal_representative(cap, cap.group.inv(a)); };
    rep.window = [cap](int bound) {
        std::vector<Elem> out;
        for (const auto& g : cap.group.window(bound)) {
            Elem m = minimal_representative(cap, g);
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    Group quot(rep);
    return CircularOrder{quot, [cap](const Elem& a, const Elem& b, const Elem& c) {
                             Elem ma = minimal_representative(cap, a);
                             Elem mb = minimal_representative(cap, b);
                             Elem mc = minimal_representative(cap, c);
                             return orientation(ma, mb, mc, [&cap](const Elem& x, const Elem& y) {
                                 return cap.less(x, y);
                             });
                         }};
}

Cocycle2 cocycle_from_leftorder(const LeftOrder& lo) {
    LeftOrder cap = lo;
    CircularOrder q = quotient_group(lo);
    return Cocycle2{q.group, [cap](const Elem& a, const Elem& b) {
                        Elem ma = minimal_representative(cap, a);
                        Elem mb = minimal_representative(cap, b);
                        return floor_of(cap, cap.group.mul(ma, mb));
                    }};
}

ValidationReport roundtrip_eta(const CircularOrder& co, int bound) {
    ValidationReport rep;
    rep.checked_region = "eta round trip, bound " + std::to_string(bound);
    LeftOrder lift = lift_group(co);
    CircularOrder q = quotient_group(lift);
    auto win = co.group.window(bound);
    for (const auto& a : win)
        for (const auto& b : win)
            for (const auto& c : win) {
                int lhs = q.c(Elem::make_ext(0, a), Elem::make_ext(0, b), Elem::make_ext(0, c));
                int rhs = co.c(a, b, c);
                if (lhs != rhs)
                    rep.add({"eta-transport", {a, b, c},
                             "quotient-of-lift " + std::to_string(lhs) + " vs c " + std::to_string(rhs)});
            }
    return rep;
}

ValidationReport roundtrip_nu(const LeftOrder& lo, int bound) {
    ValidationReport rep;
    rep.checked_region = "nu round trip, bound " + std::to_string(bound);
    const Group& g = lo.group;
    CircularOrder q = quotient_group(lo);
    LeftOrder relift = lift_group(q);

    auto nu = [&](const Elem& e) {
        const auto& x = e.as_ext();
        return g.mul(g.power(lo.z, x.n), x.base);
    };
    auto nu_inv = [&](const Elem& a) {
        return Elem::make_ext(floor_of(lo, a), minimal_representative(lo, a));
    };

    if (nu(relift.z) != lo.z) rep.add({"nu-z", {relift.z}, "nu(1,id) differs from z"});

    auto ext_win = relift.group.window(bound);
    for (const auto& x : ext_win)
        for (const auto& y : ext_win)
            if (nu(relift.group.mul(x, y)) != g.mul(nu(x), nu(y)))
                rep.add({"nu-homomorphism", {x, y}, ""});
    for (const auto& x : ext_win) {
        if (relift.positive(x) != lo.positive(nu(x)))
            rep.add({"nu-order", {x}, "cone membership differs"});
        if (nu_inv(nu(x)) != x) rep.add({"nu-injective", {x}, "nu_inv(nu(x)) != x"});
    }
    for (const auto& a : g.window(bound))
        if (nu(nu_inv(a)) != a) rep.add({"nu-surjective", {a}, "nu(nu_inv(a)) != a"});
    return rep;
}

Sce sce_from_cocycle(const Cocycle2& f, int check_bound) {
    Group E = central_extension_group(f.group, f, check_bound);
    Group base = f.group;
    return Sce{E, base, [base](const Int& n) { return Elem::make_ext(n, base.identity()); },
               [](const Elem& e) { return e.as_ext().base; },
               [](const Elem& a) { return Elem::make_ext(0, a); },
               [base](const Elem& e) -> std::optional<Int> {
                   const auto& x = e.as_ext();
                   if (!base.is_identity(x.base)) return std::nullopt;
                   return x.n;
               }};
}

Sce sce_from_lift(const CircularOrder& co) { return sce_from_cocycle(cocycle_from_circular(co)); }

Sce sce_from_leftorder(const LeftOrder& lo) {
    LeftOrder cap = lo;
    CircularOrder q = quotient_group(lo);
    Group g = lo.group;
    return Sce{g, q.group, [cap](const Int& n) { return cap.group.power(cap.z, n); },
               [cap](const Elem& e) { return minimal_representative(cap, e); },
               [cap](const Elem& a) { return minimal_representative(cap, a); },
               [cap, g](const Elem& e) -> std::optional<Int> {
                   Int f = floor_of(cap, e);
                   if (minimal_representative(cap, e) != g.identity()) return std::nullopt;
                   return f;
               }};
}

Cocycle2 associated_cocycle(const Sce& sce, int iota_search_bound) {
    Sce cap = sce;
    return Cocycle2{sce.base, [cap, iota_search_bound](const Elem& a, const Elem& b) {
                        Elem prod = cap.E.mul(cap.E.mul(cap.s(a), cap.s(b)),
                                              cap.E.inv(cap.s(cap.base.mul(a, b))));
                        if (cap.iota_exp) {
                            auto n = cap.iota_exp(prod);
                            if (!n)
                                throw representation_error("s(a)s(b)s(ab)^-1 outside iota image at " +
                                                           a.str() + ", " + b.str());
                            return *n;
                        }
                        for (Int n = 0; n <= iota_search_bound; ++n) {
                            if (cap.iota(n) == prod) return n;
                            if (n > 0 && cap.iota(-n) == prod) return Int(-n);
                        }
                        throw representation_error("iota exponent not found within bound at " + a.str() +
                                                   ", " + b.str());
                    }};
}

SceComparison sce_equivalent(const Sce& e1, const Sce& e2, int bound) {
    if (!e1.base.same_object(e2.base))
        throw precondition_error("sectioned central extensions over different base groups");
    Cocycle2 f1 = associated_cocycle(e1);
    Cocycle2 f2 = associated_cocycle(e2);
    auto win = e1.base.window(bound);
    for (const auto& a : win)
        for (const auto& b : win)
            if (f1(a, b) != f2(a, b)) return SceComparison{false, std::make_pair(a, b)};
    return SceComparison{true, std::nullopt};
}

std::optional<std::map<Elem, Int>> coboundary_witness(const Cocycle2& f, size_t guard) {
    const Group& g = f.group;
    if (!g.finite()) throw representation_error("coboundary solver needs a finite group");
    auto elems = g.enumerate();
    if (elems.size() > guard)
        throw guard_error("coboundary guard: |G| = " + std::to_string(elems.size()));

    // d(a^(k+1)) = d(a^k) + d(a) - f(a^k, a) forces, along the cyclic
    // subgroup of order m,   m d(a) = sum_k f(a^k, a); a fractional value
    // means no integral witness.  Since Hom(G,Z) = 0 for finite G, the
    // candidate is the only possible solution.
    std::map<Elem, Int> d;
    d[g.identity()] = 0;
    for (const auto& a : elems) {
        if (g.is_identity(a)) continue;
        Int total = 0;
        Int order = 1;
        Elem p = a;
        while (!g.is_identity(p)) {
            total += f(p, a);
            p = g.mul(p, a);
            ++order;
            if (order > Int(elems.size() + 1))
                throw representation_error("element order exceeds group size; bad group arithmetic");
        }
        if (total % order != 0) return std::nullopt;
        d[a] = total / order;
    }
    // substitution check over all pairs
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (d[a] + d[b] - d[g.mul(a, b)] != f(a, b)) return std::nullopt;
    return d;
}

}  // namespace corder
