#include "corder/amalgam_order.hpp"

#include "corder/errors.hpp"
#include "corder/orders_std.hpp"

namespace corder {

ValidationReport check_compatibility(const OrderedAmalgam& desc, int bound) {
    ValidationReport rep;
    rep.checked_region = "compatibility, core window bound " + std::to_string(bound);
    auto hwin = desc.core.window(bound);

    for (size_t i = 0; i < desc.factors.size(); ++i) {
        const auto& fac = desc.factors[i];
        CircularOrder pulled = pullback_circular(fac.embed, fac.order);
        for (const auto& a : hwin)
            for (const auto& b : hwin)
                for (const auto& c : hwin)
                    if (pulled.c(a, b, c) != desc.core_order.c(a, b, c))
                        rep.add({"factor-order-preserving", {a, b, c},
                                 "phi_" + std::to_string(i) + " pullback disagrees with core order"});
    }
    for (size_t i = 0; i < desc.factors.size(); ++i)
        for (size_t j = i + 1; j < desc.factors.size(); ++j) {
            CircularOrder pi = pullback_circular(desc.factors[i].embed, desc.factors[i].order);
            CircularOrder pj = pullback_circular(desc.factors[j].embed, desc.factors[j].order);
            for (const auto& a : hwin)
                for (const auto& b : hwin)
                    for (const auto& c : hwin)
                        if (pi.c(a, b, c) != pj.c(a, b, c))
                            rep.add({"pairwise-compatibility", {a, b, c},
                                     "phi_" + std::to_string(i) + " vs phi_" + std::to_string(j)});
        }
    return rep;
}

namespace {

AmalgamData base_amalgam_data(const OrderedAmalgam& desc) {
    AmalgamData data;
    data.core = desc.core;
    for (const auto& fac : desc.factors)
        data.factors.push_back(AmalgamFactor{fac.group, fac.embed, fac.decompose});
    return data;
}

AmalgamData lifted_amalgam_data(const OrderedAmalgam& desc, const LeftOrder& core_lift,
                                const std::vector<LeftOrder>& factor_lifts) {
    AmalgamData data;
    data.core = core_lift.group;
    for (size_t i = 0; i < desc.factors.size(); ++i) {
        const auto& fac = desc.factors[i];
        Hom embed_base = fac.embed;
        Hom lifted_embed{core_lift.group, factor_lifts[i].group,
                         [embed_base](const Elem& e) {
                             const auto& x = e.as_ext();
                             return Elem::make_ext(x.n, embed_base(x.base));
                         },
                         true};
        Cocycle2 fci = cocycle_from_circular(fac.order);
        auto base_decompose = fac.decompose;
        auto lifted_decompose = [base_decompose, fci, embed_base](const Elem& e) {
            const auto& x = e.as_ext();
            CosetDecomposition dec = base_decompose(x.base);
            // (n, g) = phi~( (n - f(phi(h), s), h) ) * (0, s)
            Int shift = fci(embed_base(dec.core), dec.rep);
            return CosetDecomposition{Elem::make_ext(x.n - shift, dec.core),
                                      Elem::make_ext(0, dec.rep)};
        };
        data.factors.push_back(AmalgamFactor{factor_lifts[i].group, lifted_embed, lifted_decompose});
    }
    return data;
}

}  // namespace

LiftedAmalgam build_lifted_amalgam(const OrderedAmalgam& desc, int bound) {
    ValidationReport compat = check_compatibility(desc, bound);
    if (!compat.pass())
        throw precondition_error("amalgam orderings are not compatible",
                                 compat.violations.empty() ? "" : compat.violations.front().str());

    LiftedAmalgam la;
    la.desc = desc;
    la.core_lift = lift_group(desc.core_order);
    for (const auto& fac : desc.factors) la.factor_lifts.push_back(lift_group(fac.order));
    la.group = amalgam_group(lifted_amalgam_data(desc, la.core_lift, la.factor_lifts));
    la.base_amalgam = amalgam_group(base_amalgam_data(desc));
    la.z = amalgam_embed_core(la.group, la.core_lift.z);
    for (size_t i = 0; i < desc.factors.size(); ++i)
        la.factor_embeddings.push_back(amalgam_factor_hom(la.group, static_cast<int>(i)));

    ValidationReport& rep = la.construction_check;
    rep.checked_region = "lifted amalgam construction, bound " + std::to_string(bound);
    for (size_t i = 0; i < desc.factors.size(); ++i) {
        Elem zi = la.factor_embeddings[i](la.factor_lifts[i].z);
        if (zi != la.z)
            rep.add({"z-image", {zi}, "factor " + std::to_string(i) + " sends (1,id) elsewhere"});
    }
    for (const auto& w : amalgam_words(la.group, 2, bound))
        if (la.group.mul(la.z, w) != la.group.mul(w, la.z))
            rep.add({"z-central", {w}, "z fails to commute"});
    return la;
}

Elem amalgam_project(const LiftedAmalgam& la, const Elem& w) {
    (void)la;
    const auto& a = w.as_amal();
    std::vector<Syllable> reps;
    reps.reserve(a.reps.size());
    for (const auto& s : a.reps) reps.push_back(make_syllable(s.factor, s.elem().as_ext().base));
    return Elem::make_amal(a.core.as_ext().base, std::move(reps));
}

namespace {

// Lifts a base-amalgam normal form with zero integer coordinates.
Elem zero_lift(const Elem& u) {
    const auto& a = u.as_amal();
    std::vector<Syllable> reps;
    reps.reserve(a.reps.size());
    for (const auto& s : a.reps) reps.push_back(make_syllable(s.factor, Elem::make_ext(0, s.elem())));
    return Elem::make_amal(Elem::make_ext(0, a.core), std::move(reps));
}

// Integer coordinate of Theta(w); optionally also yields h g_1 ... g_k.
Int theta_exponent(const Group& base_amalgam, const Cocycle2& f, const Elem& w, Elem* image_out) {
    const auto& a = w.as_amal();
    Int n = a.core.as_ext().n;
    Elem prefix = amalgam_embed_core(base_amalgam, a.core.as_ext().base);
    for (const auto& s : a.reps) {
        Elem g = amalgam_embed_factor(base_amalgam, s.factor, s.elem().as_ext().base);
        n += f(prefix, g);
        prefix = base_amalgam.mul(prefix, g);
    }
    if (image_out) *image_out = prefix;
    return n;
}

}  // namespace

Theta theta(const LiftedAmalgam& la, const Cocycle2& f, int bound) {
    // Membership precondition: delta_i^* f = f_{c_i} on windowed pairs.
    for (size_t i = 0; i < la.desc.factors.size(); ++i) {
        Cocycle2 fci = cocycle_from_circular(la.desc.factors[i].order);
        Cocycle2 pulled = pullback_cocycle(amalgam_factor_hom(la.base_amalgam, static_cast<int>(i)), f);
        auto win = la.desc.factors[i].group.window(bound);
        for (const auto& a : win)
            for (const auto& b : win)
                if (pulled(a, b) != fci(a, b))
                    throw precondition_error(
                        "cocycle does not extend the factor cocycle f_c" + std::to_string(i),
                        a.str() + ", " + b.str());
    }

    Theta th;
    Group base = la.base_amalgam;
    Cocycle2 fc = f;
    th.ext = central_extension_group(base, f, bound);
    th.forward = [base, fc](const Elem& w) {
        Elem image;
        Int n = theta_exponent(base, fc, w, &image);
        return Elem::make_ext(n, image);
    };
    th.backward = [base, fc](const Elem& e) {
        const auto& x = e.as_ext();
        Elem w0 = zero_lift(x.base);
        Int drift = theta_exponent(base, fc, w0, nullptr);
        const auto& a = w0.as_amal();
        return Elem::make_amal(Elem::make_ext(x.n - drift, a.core.as_ext().base), a.reps);
    };

    ValidationReport& rep = th.check;
    rep.checked_region = "theta, bound " + std::to_string(bound);
    auto words = amalgam_words(la.group, 2, bound);
    for (const auto& u : words)
        for (const auto& v : words)
            if (th.forward(la.group.mul(u, v)) != th.ext.mul(th.forward(u), th.forward(v)))
                rep.add({"theta-homomorphism", {u, v}, ""});
    for (const auto& u : words)
        if (th.backward(th.forward(u)) != u) rep.add({"theta-left-inverse", {u}, ""});
    for (const auto& e : th.ext.window(bound))
        if (th.forward(th.backward(e)) != e) rep.add({"theta-right-inverse", {e}, ""});
    // Theta^-1 composed with the lifted inclusion is the inclusion.
    for (size_t i = 0; i < la.factor_lifts.size(); ++i) {
        for (const auto& ge : la.factor_lifts[i].group.window(bound)) {
            const auto& x = ge.as_ext();
            Elem via_ext =
                Elem::make_ext(x.n, amalgam_embed_factor(base, static_cast<int>(i), x.base));
            if (th.backward(via_ext) != la.factor_embeddings[i](ge))
                rep.add({"theta-factor-restriction", {ge},
                         "factor " + std::to_string(i) + " inclusion mismatch"});
        }
    }
    return th;
}

DerivedCircular derive_circular_on_amalgam(const LiftedAmalgam& la, const LeftOrder& lo, int bound) {
    if (lo.z != la.z) throw precondition_error("supplied ordering has a different z", lo.z.str());
    for (size_t i = 0; i < la.factor_lifts.size(); ++i)
        for (const auto& ge : la.factor_lifts[i].group.window(bound))
            if (lo.positive(la.factor_embeddings[i](ge)) != la.factor_lifts[i].positive(ge))
                throw precondition_error(
                    "left ordering does not extend lifted factor " + std::to_string(i), ge.str());
    if (!lo.has_floor() && is_cofinal(la.z, lo, 64) == Cofinal::Unknown)
        throw precondition_error("cannot certify z cofinal for the supplied ordering");

    LeftOrder ord = lo;
    auto unproject_min = [ord](const Elem& u) { return minimal_representative(ord, zero_lift(u)); };
    CircularOrder derived{la.base_amalgam,
                          [ord, unproject_min](const Elem& a, const Elem& b, const Elem& c) {
                              Elem ma = unproject_min(a), mb = unproject_min(b), mc = unproject_min(c);
                              return orientation(ma, mb, mc, [&ord](const Elem& x, const Elem& y) {
                                  return ord.less(x, y);
                              });
                          }};

    ValidationReport rep;
    rep.checked_region = "derived circular ordering, bound " + std::to_string(bound);
    auto words = amalgam_words(la.group, 2, bound);
    for (const auto& u : words)
        for (const auto& v : words)
            if (amalgam_project(la, la.group.mul(u, v)) !=
                la.base_amalgam.mul(amalgam_project(la, u), amalgam_project(la, v)))
                rep.add({"projection-multiplicative", {u, v}, ""});
    for (size_t i = 0; i < la.desc.factors.size(); ++i) {
        const auto& fac = la.desc.factors[i];
        auto win = fac.group.window(bound);
        for (const auto& a : win)
            for (const auto& b : win)
                for (const auto& c : win) {
                    Elem ia = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), a);
                    Elem ib = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), b);
                    Elem ic = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), c);
                    int got = derived.c(ia, ib, ic);
                    int want = fac.order.c(a, b, c);
                    if (got != want)
                        rep.add({"factor-extension", {a, b, c},
                                 "derived " + std::to_string(got) + " vs factor " + std::to_string(want)});
                }
    }
    return DerivedCircular{derived, rep};
}

DerivedLeft derive_left_on_lifted_amalgam(const LiftedAmalgam& la, const CircularOrder& c, int bound) {
    // The circular ordering must extend every factor ordering.
    for (size_t i = 0; i < la.desc.factors.size(); ++i) {
        const auto& fac = la.desc.factors[i];
        auto win = fac.group.window(bound);
        for (const auto& a : win)
            for (const auto& b : win)
                for (const auto& e : win) {
                    Elem ia = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), a);
                    Elem ib = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), b);
                    Elem ie = amalgam_embed_factor(la.base_amalgam, static_cast<int>(i), e);
                    if (c.c(ia, ib, ie) != fac.order.c(a, b, e))
                        throw precondition_error(
                            "circular ordering does not extend factor " + std::to_string(i),
                            a.str() + ", " + b.str() + ", " + e.str());
                }
    }

    Cocycle2 f = cocycle_from_circular(c);
    DerivedLeft out{LeftOrder{}, theta(la, f, bound), {}};
    auto fwd = out.transport.forward;
    Group base = la.base_amalgam;
    out.order = LeftOrder{la.group,
                          [fwd, base](const Elem& w) {
                              const auto& x = fwd(w).as_ext();
                              return x.n > 0 || (x.n == 0 && !base.is_identity(x.base));
                          },
                          la.z, [fwd](const Elem& w) { return fwd(w).as_ext().n; }};

    ValidationReport& rep = out.check;
    rep.checked_region = "derived left ordering, bound " + std::to_string(bound);
    for (size_t i = 0; i < la.factor_lifts.size(); ++i)
        for (const auto& ge : la.factor_lifts[i].group.window(bound))
            if (out.order.positive(la.factor_embeddings[i](ge)) != la.factor_lifts[i].positive(ge))
                rep.add({"lifted-factor-extension", {ge}, "factor " + std::to_string(i)});
    return out;
}

Hom amalgam_hom(const Group& amal, const Group& target, const Hom& core_map,
                const std::vector<Hom>& factor_maps, int check_bound) {
    const auto& data = amalgam_data(amal);
    if (factor_maps.size() != data.factors.size())
        throw representation_error("one factor map per amalgam factor is required");
    for (size_t i = 0; i < data.factors.size(); ++i)
        for (const auto& h : data.core.window(check_bound))
            if (factor_maps[i](data.factors[i].embed(h)) != core_map(h))
                throw precondition_error(
                    "factor map disagrees with core map on the amalgamated subgroup", h.str());

    std::vector<Hom> fmaps = factor_maps;
    Hom cmap = core_map;
    Group tgt = target;
    Hom out{amal, target,
            [fmaps, cmap, tgt](const Elem& w) {
                const auto& a = w.as_amal();
                Elem acc = cmap(a.core);
                for (const auto& s : a.reps)
                    acc = tgt.mul(acc, fmaps[static_cast<size_t>(s.factor)](s.elem()));
                return acc;
            },
            false};
    auto words = amalgam_words(amal, 2, check_bound);
    for (const auto& u : words)
        for (const auto& v : words)
            if (out(amal.mul(u, v)) != tgt.mul(out(u), out(v)))
                throw precondition_error("amalgam homomorphism fails multiplicativity",
                                         u.str() + ", " + v.str());
    return out;
}

LeftOrder klein_lex_on_lifted_amalgam(const LiftedAmalgam& la, int check_bound) {
    if (la.factor_lifts.size() != 2)
        throw representation_error("klein lex ordering needs exactly two factors");
    const Group& h = extension_base(la.core_lift.group);
    Int m = h.modulus();
    if (m <= 0) throw representation_error("klein lex ordering needs a cyclic core");
    for (const auto& lift : la.factor_lifts) {
        const Group& gi = extension_base(lift.group);
        if (gi.modulus() != 2 * m)
            throw representation_error("klein lex ordering needs Z_{2m} factors over a Z_m core");
    }

    Group k = klein_bottle_group();
    Elem gen_a = Elem::make_pair(Elem::make_int(1), Elem::make_int(1));  // a = yx
    Elem gen_b = Elem::make_pair(Elem::make_int(0), Elem::make_int(1));  // b = x
    Int two_m = 2 * m;
    auto factor_map = [k, two_m](const Group& lift_group, const Elem& kgen) {
        return Hom{lift_group, k,
                   [k, two_m, kgen](const Elem& e) {
                       const auto& x = e.as_ext();
                       return k.power(kgen, two_m * x.n + x.base.as_cyc());
                   },
                   true};
    };
    Hom map0 = factor_map(la.factor_lifts[0].group, gen_a);
    Hom map1 = factor_map(la.factor_lifts[1].group, gen_b);
    Elem x2 = k.power(gen_b, 2);
    Hom core_map{la.core_lift.group, k,
                 [k, m, x2](const Elem& e) {
                     const auto& x = e.as_ext();
                     return k.power(x2, m * x.n + x.base.as_cyc());
                 },
                 true};
    Hom psi = amalgam_hom(la.group, k, core_map, {map0, map1}, check_bound);

    LeftOrder klex = klein_lex_order(k);
    auto psifn = psi.map;
    Int zpow = two_m;  // psi(la.z) = x^(2m)
    return LeftOrder{la.group, [klex, psifn](const Elem& w) { return klex.positive(psifn(w)); }, la.z,
                     [psifn, zpow](const Elem& w) {
                         const auto& p = psifn(w).as_pair();
                         const Int& a = p.left.as_int();
                         const Int& b = p.right.as_int();
                         if (mod_floor(b, zpow) == 0 && a < 0) return Int(floor_div(b, zpow) - 1);
                         return floor_div(b, zpow);
                     }};
}

}  // namespace corder
