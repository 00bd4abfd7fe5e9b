#include "corder/group.hpp"

#include <algorithm>

#include "corder/errors.hpp"

namespace corder {

std::vector<Elem> Group::enumerate() const {
    if (!rep_->enumerate) throw representation_error(name() + " is not enumerable");
    return rep_->enumerate();
}

std::vector<Elem> Group::window(int bound) const {
    if (rep_->enumerate) return rep_->enumerate();
    if (!rep_->window) throw representation_error(name() + " has no window iterator");
    return rep_->window(bound);
}

Elem Group::power(const Elem& g, const Int& k) const {
    if (k == 0) return identity();
    Elem base = k < 0 ? inv(g) : g;
    Int e = k < 0 ? Int(-k) : k;
    Elem acc = identity();
    Elem sq = base;
    while (e > 0) {
        if ((e & 1) != 0) acc = mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = mul(sq, sq);
    }
    return acc;
}

Elem Group::conj(const Elem& g, const Elem& h) const { return mul(mul(inv(h), g), h); }

Hom identity_hom(const Group& g) {
    return Hom{g, g, [](const Elem& e) { return e; }, true};
}

Hom compose(const Hom& f, const Hom& g) {
    return Hom{g.source, f.target, [f, g](const Elem& e) { return f.map(g.map(e)); },
               f.injective && g.injective};
}

void check_hom(const Hom& h, int bound) {
    if (h.map(h.source.identity()) != h.target.identity())
        throw precondition_error("homomorphism does not fix the identity");
    auto win = h.source.window(bound);
    for (const auto& a : win) {
        for (const auto& b : win) {
            if (h.map(h.source.mul(a, b)) != h.target.mul(h.map(a), h.map(b)))
                throw precondition_error("homomorphism law fails", a.str() + ", " + b.str());
        }
    }
    if (h.injective) {
        for (size_t i = 0; i < win.size(); ++i)
            for (size_t j = i + 1; j < win.size(); ++j)
                if (h.map(win[i]) == h.map(win[j]))
                    throw precondition_error("claimed-injective homomorphism collides",
                                             win[i].str() + ", " + win[j].str());
    }
}

Group cyclic_group(const Int& n) {
    if (n <= 0) throw representation_error("cyclic group needs n >= 1");
    Group::Rep rep;
    rep.name = "Z/" + n.str();
    rep.identity = Elem::make_cyc(0);
    rep.mul = [n](const Elem& a, const Elem& b) { return Elem::make_cyc(mod_floor(a.as_cyc() + b.as_cyc(), n)); };
    rep.inv = [n](const Elem& a) { return Elem::make_cyc(mod_floor(-a.as_cyc(), n)); };
    rep.enumerate = [n]() {
        std::vector<Elem> out;
        for (Int r = 0; r < n; ++r) out.push_back(Elem::make_cyc(r));
        return out;
    };
    rep.modulus = n;
    return Group(rep);
}

Group integer_group() {
    Group::Rep rep;
    rep.name = "Z";
    rep.identity = Elem::make_int(0);
    rep.mul = [](const Elem& a, const Elem& b) { return Elem::make_int(a.as_int() + b.as_int()); };
    rep.inv = [](const Elem& a) { return Elem::make_int(-a.as_int()); };
    rep.window = [](int bound) {
        std::vector<Elem> out;
        for (Int k = -bound; k <= bound; ++k) out.push_back(Elem::make_int(k));
        return out;
    };
    return Group(rep);
}

Group rational_group() {
    Group::Rep rep;
    rep.name = "Q";
    rep.identity = Elem::make_ratio(Rat(0));
    rep.mul = [](const Elem& a, const Elem& b) { return Elem::make_ratio(a.as_ratio() + b.as_ratio()); };
    rep.inv = [](const Elem& a) { return Elem::make_ratio(-a.as_ratio()); };
    rep.window = [](int bound) {
        std::vector<Rat> vals;
        for (Int q = 1; q <= bound; ++q)
            for (Int p = -bound; p <= bound; ++p) vals.push_back(Rat(p, q));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<Elem> out;
        out.reserve(vals.size());
        for (auto& v : vals) out.push_back(Elem::make_ratio(v));
        return out;
    };
    return Group(rep);
}

Group circle_group() {
    Group::Rep rep;
    rep.name = "Q/Z";
    rep.identity = Elem::make_circle(Rat(0));
    rep.mul = [](const Elem& a, const Elem& b) { return Elem::make_circle(a.as_circle() + b.as_circle()); };
    rep.inv = [](const Elem& a) { return Elem::make_circle(-a.as_circle()); };
    rep.window = [](int bound) {
        std::vector<Rat> vals;
        for (Int q = 1; q <= bound; ++q)
            for (Int p = 0; p < q; ++p) vals.push_back(Rat(p, q));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<Elem> out;
        out.reserve(vals.size());
        for (auto& v : vals) out.push_back(Elem::make_circle(v));
        return out;
    };
    return Group(rep);
}

// (a, e)(b, f) = (a + (-1)^e b, e + f)
Group semidirect_z_z2() {
    Group::Rep rep;
    rep.name = "Z:Z2";
    rep.identity = Elem::make_pair(Elem::make_int(0), Elem::make_cyc(0));
    auto twist = [](const Int& e, const Int& b) { return e == 0 ? b : Int(-b); };
    rep.mul = [twist](const Elem& x, const Elem& y) {
        const auto& p = x.as_pair();
        const auto& q = y.as_pair();
        Int a = p.left.as_int(), e = p.right.as_cyc();
        Int b = q.left.as_int(), f = q.right.as_cyc();
        return Elem::make_pair(Elem::make_int(a + twist(e, b)), Elem::make_cyc(mod_floor(e + f, Int(2))));
    };
    rep.inv = [twist](const Elem& x) {
        const auto& p = x.as_pair();
        Int a = p.left.as_int(), e = p.right.as_cyc();
        return Elem::make_pair(Elem::make_int(-twist(e, a)), Elem::make_cyc(e));
    };
    rep.window = [](int bound) {
        std::vector<Elem> out;
        for (Int e = 0; e <= 1; ++e)
            for (Int a = -bound; a <= bound; ++a)
                out.push_back(Elem::make_pair(Elem::make_int(a), Elem::make_cyc(e)));
        return out;
    };
    return Group(rep);
}

// Normal form y^m x^n stored as (m, n); x y x^-1 = y^-1.
Group klein_bottle_group() {
    Group::Rep rep;
    rep.name = "K";
    rep.identity = Elem::make_pair(Elem::make_int(0), Elem::make_int(0));
    auto twist = [](const Int& n, const Int& m) { return mod_floor(n, Int(2)) == 0 ? m : Int(-m); };
    rep.mul = [twist](const Elem& x, const Elem& y) {
        const auto& p = x.as_pair();
        const auto& q = y.as_pair();
        Int m = p.left.as_int(), n = p.right.as_int();
        Int u = q.left.as_int(), v = q.right.as_int();
        // y^m x^n y^u x^v = y^(m + (-1)^n u) x^(n+v)
        return Elem::make_pair(Elem::make_int(m + twist(n, u)), Elem::make_int(n + v));
    };
    rep.inv = [twist](const Elem& x) {
        const auto& p = x.as_pair();
        Int m = p.left.as_int(), n = p.right.as_int();
        return Elem::make_pair(Elem::make_int(-twist(n, m)), Elem::make_int(-n));
    };
    rep.window = [](int bound) {
        std::vector<Elem> out;
        for (Int n = -bound; n <= bound; ++n)
            for (Int m = -bound; m <= bound; ++m)
                out.push_back(Elem::make_pair(Elem::make_int(m), Elem::make_int(n)));
        return out;
    };
    return Group(rep);
}

Group direct_product(const Group& a, const Group& b) {
    Group::Rep rep;
    rep.name = a.name() + "x" + b.name();
    rep.identity = Elem::make_pair(a.identity(), b.identity());
    rep.mul = [a, b](const Elem& x, const Elem& y) {
        return Elem::make_pair(a.mul(x.as_pair().left, y.as_pair().left),
                               b.mul(x.as_pair().right, y.as_pair().right));
    };
    rep.inv = [a, b](const Elem& x) {
        return Elem::make_pair(a.inv(x.as_pair().left), b.inv(x.as_pair().right));
    };
    if (a.finite() && b.finite()) {
        rep.enumerate = [a, b]() {
            std::vector<Elem> out;
            for (const auto& x : a.enumerate())
                for (const auto& y : b.enumerate()) out.push_back(Elem::make_pair(x, y));
            return out;
        };
    } else {
        rep.window = [a, b](int bound) {
            std::vector<Elem> out;
            for (const auto& x : a.window(bound))
                for (const auto& y : b.window(bound)) out.push_back(Elem::make_pair(x, y));
            return out;
        };
    }
    return Group(rep);
}

}  // namespace corder
