#include "corder/convex.hpp"

#include <algorithm>

#include "corder/errors.hpp"

namespace corder {

Subgroup trivial_subgroup(const Group& g) {
    Elem id = g.identity();
    return Subgroup{[g](const Elem& e) { return g.is_identity(e); },
                    [id](int) { return std::vector<Elem>{id}; }};
}

ValidationReport is_convex_circular(const Subgroup& h, const CircularOrder& co, int bound) {
    ValidationReport rep;
    rep.checked_region = "convexity window bound " + std::to_string(bound);
    auto win = co.group.window(bound);
    auto hwin = h.window(bound);

    bool proper = std::any_of(win.begin(), win.end(), [&](const Elem& e) { return !h.contains(e); });
    if (!proper) {
        rep.status = ValidationReport::Status::Inapplicable;
        rep.checked_region += " (subgroup covers the whole window)";
        return rep;
    }

    for (const auto& h1 : hwin)
        for (const auto& h2 : hwin)
            for (const auto& g : win) {
                if (h.contains(g)) continue;
                if (co.c(h1, g, h2) != 1) continue;
                for (const auto& f : win)
                    if (co.c(h2, f, h1) == 1 && !h.contains(f))
                        rep.add({"convexity", {h1, g, h2, f}, "f escapes the subgroup"});
            }
    return rep;
}

ConvexCone::ConvexCone(Subgroup h, CircularOrder co, int witness_bound)
    : h_(std::move(h)), co_(std::move(co)) {
    for (const auto& g : co_.group.window(witness_bound))
        if (!h_.contains(g)) outside_.push_back(g);
}

ConeSign ConvexCone::classify(const Elem& e) const {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    if (!h_.contains(e)) throw representation_error("cone query outside the subgroup at " + e.str());
    const Group& grp = co_.group;
    ConeSign result = ConeSign::Indeterminate;
    if (grp.is_identity(e)) {
        result = ConeSign::Identity;
    } else {
        Elem inv = grp.inv(e);
        for (const auto& g : outside_) {
            if (co_.c(grp.identity(), e, g) == 1) {
                result = ConeSign::Positive;
                break;
            }
            if (co_.c(grp.identity(), inv, g) == 1) {
                result = ConeSign::Negative;
                break;
            }
        }
    }
    memo_[e] = result;
    return result;
}

bool ConvexCone::positive(const Elem& e) const {
    if (co_.group.is_identity(e)) return false;
    ConeSign s = classify(e);
    if (s == ConeSign::Indeterminate)
        throw guard_error("cone membership indeterminate within the window at " + e.str());
    return s == ConeSign::Positive;
}

ConvexCone convex_positive_cone(const Subgroup& h, const CircularOrder& co, int witness_bound) {
    return ConvexCone(h, co, witness_bound);
}

CosetOrdering coset_circular(const Subgroup& h, const CircularOrder& co, int bound) {
    Group g = co.group;
    auto contains = h.contains;
    auto same_coset = [g, contains](const Elem& a, const Elem& b) {
        return contains(g.mul(g.inv(a), b));
    };

    auto win = g.window(bound);
    std::vector<Elem> reps;
    for (const auto& e : win) {
        bool fresh = std::none_of(reps.begin(), reps.end(),
                                  [&](const Elem& r) { return same_coset(r, e); });
        if (fresh) reps.push_back(e);
        if (reps.size() >= 3) break;
    }
    if (reps.size() < 3)
        throw precondition_error("coset ordering needs index >= 3",
                                 "only " + std::to_string(reps.size()) + " cosets on the window");

    ValidationReport rep;
    rep.checked_region = "coset well-definedness, window bound " + std::to_string(bound);
    auto hwin = h.window(bound);
    // replace each entry of a triple by another representative of its coset
    for (const auto& a : win)
        for (const auto& b : win)
            for (const auto& c : win) {
                if (same_coset(a, b) || same_coset(b, c) || same_coset(a, c)) continue;
                int base = co.c(a, b, c);
                for (const auto& h1 : hwin) {
                    if (co.c(g.mul(a, h1), b, c) != base)
                        rep.add({"coset-well-defined", {a, b, c, h1}, "representative change altered c"});
                }
            }

    auto c = co.c;
    CircularOrder order{g, [c, same_coset](const Elem& a, const Elem& b, const Elem& e) {
                            if (same_coset(a, b) || same_coset(b, e) || same_coset(a, e)) return 0;
                            return c(a, b, e);
                        }};
    return CosetOrdering{order, same_coset, rep};
}

SplittingD convex_splitting_d(const Subgroup& h, const CircularOrder& co, int bound) {
    auto cone = std::make_shared<ConvexCone>(h, co, bound);
    Group g = co.group;
    auto d = [cone, g](const Elem& e) -> Int {
        if (g.is_identity(e)) return 0;
        return cone->positive(e) ? 0 : 1;
    };

    ValidationReport rep;
    rep.checked_region = "splitting identity, window bound " + std::to_string(bound);
    Cocycle2 fc = cocycle_from_circular(co);
    for (const auto& a : h.window(bound))
        for (const auto& b : h.window(bound)) {
            Int lhs = fc(a, b);
            Int rhs = d(a) - d(g.mul(a, b)) + d(b);
            if (lhs != rhs)
                rep.add({"splitting", {a, b}, "f_c " + lhs.str() + " vs coboundary " + rhs.str()});
        }
    return SplittingD{d, rep};
}

ConvexEmbedding convex_embed_in_lift(const Subgroup& h, const CircularOrder& co,
                                     const std::function<Int(const Elem&)>& d, int bound) {
    LeftOrder lift = lift_group(co);
    Group g = co.group;
    Hom embed{g, lift.group, [d](const Elem& e) { return Elem::make_ext(-d(e), e); }, true};

    ValidationReport rep;
    rep.checked_region = "convex embedding, window bound " + std::to_string(bound);
    auto hwin = h.window(bound);
    for (const auto& a : hwin)
        for (const auto& b : hwin)
            if (embed(g.mul(a, b)) != lift.group.mul(embed(a), embed(b)))
                rep.add({"embedding-homomorphism", {a, b}, "iota(ab) != iota(a)iota(b)"});

    // image convexity for the lift's left order
    auto contains = h.contains;
    auto in_image = [contains, d](const Elem& e) {
        const auto& x = e.as_ext();
        return contains(x.base) && x.n == -d(x.base);
    };
    for (const auto& a : hwin)
        for (const auto& b : hwin) {
            Elem ia = embed(a), ib = embed(b);
            for (const auto& w : lift.group.window(bound)) {
                if (in_image(w)) continue;
                if (lift.less(ia, w) && lift.less(w, ib))
                    rep.add({"image-convexity", {ia, w, ib}, "outside element trapped between image points"});
            }
        }
    return ConvexEmbedding{embed, lift, rep};
}

}  // namespace corder
