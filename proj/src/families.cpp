#include "corder/families.hpp"

#include "corder/errors.hpp"
#include "corder/orders_std.hpp"

namespace corder {

LeftOrder cone_alpha_phi(const CircularOrder& c, const CircularOrder& c_alpha, const IntFun& d_alpha,
                         const IntFun& varphi, int check_bound) {
    const Group& g = c.group;
    Cocycle2 fc = cocycle_from_circular(c);
    Cocycle2 fa = cocycle_from_circular(c_alpha);
    auto win = g.window(check_bound);
    for (const auto& a : win)
        for (const auto& b : win) {
            if (fc(a, b) - fa(a, b) != d_alpha(a) + d_alpha(b) - d_alpha(g.mul(a, b)))
                throw precondition_error("d_alpha does not split f_c - f_{c_alpha}",
                                         a.str() + ", " + b.str());
            if (varphi(g.mul(a, b)) != varphi(a) + varphi(b))
                throw precondition_error("varphi is not a homomorphism", a.str() + ", " + b.str());
        }

    Group ext = central_extension_group(g, fc, check_bound);
    Group base = g;
    IntFun d = d_alpha;
    IntFun phi = varphi;
    return LeftOrder{ext,
                     [base, d, phi](const Elem& e) {
                         const auto& x = e.as_ext();
                         if (x.n == 0 && base.is_identity(x.base)) return false;
                         return x.n + d(x.base) + phi(x.base) >= 0;
                     },
                     Elem::make_ext(1, g.identity()),
                     // the equivalence (n,a) -> (n + d(a) + phi(a), a) onto the
                     // lift of c_alpha carries floors across
                     [d, phi](const Elem& e) {
                         const auto& x = e.as_ext();
                         return x.n + d(x.base) + phi(x.base);
                     }};
}

IntFun phi_g_alpha_beta(const CircularOrder& c, const Elem& g, const CircularOrder& c_alpha,
                        const CircularOrder& c_beta, const IntFun& d_alpha, const IntFun& d_beta,
                        int check_bound) {
    const Group& grp = c.group;
    if (grp.is_identity(g)) throw precondition_error("conjugator must differ from the identity");
    Cocycle2 fa = cocycle_from_circular(c_alpha);
    Cocycle2 fb = cocycle_from_circular(c_beta);
    Elem ginv = grp.inv(g);
    auto conj = [&grp, &g, &ginv](const Elem& a) { return grp.mul(grp.mul(g, a), ginv); };

    auto win = grp.window(check_bound);
    for (const auto& a : win)
        for (const auto& b : win)
            if (fa(a, b) != fb(conj(a), conj(b)))
                throw precondition_error("pairing hypothesis f_{c_alpha} = f_{c_beta} o conj fails",
                                         a.str() + ", " + b.str());

    Cocycle2 fc = cocycle_from_circular(c);
    Group grp2 = grp;
    Elem gg = g;
    Elem gginv = ginv;
    IntFun da = d_alpha;
    IntFun db = d_beta;
    IntFun out = [grp2, gg, gginv, fc, da, db](const Elem& a) {
        Elem ga = grp2.mul(gg, a);
        Elem gag = grp2.mul(ga, gginv);
        return Int(-1) + fc(gg, a) + fc(ga, gginv) + db(gag) - da(a);
    };
    for (const auto& a : win)
        for (const auto& b : win)
            if (out(grp.mul(a, b)) != out(a) + out(b))
                throw precondition_error("transfer map is not a homomorphism on the window",
                                         a.str() + ", " + b.str());
    return out;
}

ValidationReport conjugation_normality_check(const CircularOrder& c, const Elem& g,
                                             const CircularOrder& c_alpha, const CircularOrder& c_beta,
                                             const IntFun& d_alpha, const IntFun& d_beta,
                                             const IntFun& varphi, int bound) {
    ValidationReport rep;
    rep.checked_region = "conjugation normality, bound " + std::to_string(bound);
    IntFun transfer = phi_g_alpha_beta(c, g, c_alpha, c_beta, d_alpha, d_beta, bound);
    IntFun psi = [varphi, transfer](const Elem& a) { return varphi(a) - transfer(a); };
    LeftOrder p_alpha = cone_alpha_phi(c, c_alpha, d_alpha, varphi, bound);
    LeftOrder p_beta = cone_alpha_phi(c, c_beta, d_beta, psi, bound);

    const Group& ext = p_alpha.group;
    Elem tg = Elem::make_ext(0, g);
    Elem tginv = ext.inv(tg);
    for (const auto& e : ext.window(bound)) {
        bool lhs = p_alpha.positive(e);
        bool rhs = p_beta.positive(ext.mul(ext.mul(tg, e), tginv));
        if (lhs != rhs)
            rep.add({"normality", {e}, "cone membership changes under (0,g)-conjugation"});
    }
    return rep;
}

std::vector<CircularOrder> conjugate_family(const CircularOrder& co, int words_bound, int compare_bound) {
    auto win = co.group.window(words_bound);
    auto cmp_win = co.group.window(compare_bound);
    std::vector<CircularOrder> family;
    auto same = [&](const CircularOrder& x, const CircularOrder& y) {
        for (const auto& a : cmp_win)
            for (const auto& b : cmp_win)
                for (const auto& c : cmp_win)
                    if (x.c(a, b, c) != y.c(a, b, c)) return false;
        return true;
    };
    for (const auto& w : win) {
        CircularOrder cw = conjugate_circular(co, w, 0);
        bool fresh = true;
        for (const auto& known : family)
            if (same(known, cw)) {
                fresh = false;
                break;
            }
        if (fresh) family.push_back(std::move(cw));
    }
    return family;
}

LeftOrder conjugate_left(const LeftOrder& lo, const Elem& g) {
    const Group& grp = lo.group;
    LeftOrder cap = lo;
    Elem gg = g;
    Elem gginv = grp.inv(g);
    // cone of <^g is g^-1 P g; floors transfer by conjugation as well
    std::function<Int(const Elem&)> floor;
    if (lo.has_floor()) {
        floor = [cap, gg, gginv](const Elem& e) {
            return cap.z_floor(cap.group.mul(cap.group.mul(gg, e), gginv));
        };
    }
    return LeftOrder{grp,
                     [cap, gg, gginv](const Elem& e) {
                         return cap.positive(cap.group.mul(cap.group.mul(gg, e), gginv));
                     },
                     lo.z, floor};
}

ValidationReport normal_descends_check(const LeftOrder& lo, const Elem& g, int bound) {
    ValidationReport rep;
    rep.checked_region = "quotient of conjugated cone vs conjugated quotient, bound " + std::to_string(bound);
    const Group& grp = lo.group;

    LeftOrder conj = conjugate_left(lo, g);
    if (!conj.positive(conj.z)) {
        rep.add({"conjugate-z", {lo.z}, "z left the positive cone under conjugation"});
        return rep;
    }
    CircularOrder q_conj = quotient_group(conj);    // c_{<^g}
    CircularOrder q = quotient_group(lo);           // c_<
    auto win = grp.window(bound);
    for (const auto& a : win)
        for (const auto& b : win)
            for (const auto& c : win) {
                int lhs = q_conj.c(a, b, c);
                int rhs = q.c(grp.mul(a, g), grp.mul(b, g), grp.mul(c, g));  // (c_<)^{g<z>}
                if (lhs != rhs)
                    rep.add({"normal-descends", {a, b, c},
                             std::to_string(lhs) + " vs " + std::to_string(rhs)});
            }
    return rep;
}

}  // namespace corder
