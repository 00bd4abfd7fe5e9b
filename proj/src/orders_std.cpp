#include "corder/orders_std.hpp"

#include <algorithm>
#include <map>

#include "corder/errors.hpp"

namespace corder {

int orientation(const Elem& a, const Elem& b, const Elem& c,
                const std::function<bool(const Elem&, const Elem&)>& less) {
    if (a == b || b == c || a == c) return 0;
    int sign = 1;
    // orientation is the parity of the permutation sorting (a,b,c)
    if (less(b, a)) sign = -sign;
    if (less(c, b)) sign = -sign;
    if (less(c, a)) sign = -sign;
    return sign;
}

CircularOrder linear_to_circular(const LeftOrder& lo) {
    LeftOrder cap = lo;
    return CircularOrder{lo.group, [cap](const Elem& a, const Elem& b, const Elem& c) {
                             return orientation(a, b, c, [&cap](const Elem& x, const Elem& y) {
                                 return cap.less(x, y);
                             });
                         }};
}

namespace {

Rat circle_coordinate(const Group& g, const Elem& e) {
    switch (e.kind()) {
        case Elem::Kind::CirclePt:
            return e.as_circle();
        case Elem::Kind::CycRes:
            if (g.modulus() <= 0) throw representation_error("cyclic residue without modulus");
            return Rat(e.as_cyc(), g.modulus());
        default:
            throw representation_error("circle_standard expects circle points or cyclic residues");
    }
}

}  // namespace

CircularOrder circle_standard(const Group& g) {
    return CircularOrder{g, [g](const Elem& a, const Elem& b, const Elem& c) {
                             Rat x = circle_coordinate(g, a);
                             Rat y = circle_coordinate(g, b);
                             Rat z = circle_coordinate(g, c);
                             if (x == y || y == z || x == z) return 0;
                             int sign = 1;
                             if (y < x) sign = -sign;
                             if (z < y) sign = -sign;
                             if (z < x) sign = -sign;
                             return sign;
                         }};
}

CircularOrder reversed_circular(const CircularOrder& co) {
    auto c = co.c;
    return CircularOrder{co.group,
                         [c](const Elem& a, const Elem& b, const Elem& e) { return -c(a, b, e); }};
}

CircularOrder pullback_circular(const Hom& phi, const CircularOrder& co) {
    if (!phi.injective)
        throw precondition_error("pullback of a circular ordering needs an injective homomorphism");
    auto c = co.c;
    auto f = phi.map;
    return CircularOrder{phi.source, [c, f](const Elem& a, const Elem& b, const Elem& e) {
                             return c(f(a), f(b), f(e));
                         }};
}

CircularOrder conjugate_circular(const CircularOrder& co, const Elem& h, int revalidate_bound) {
    Group g = co.group;
    auto c = co.c;
    CircularOrder out{g, [c, g, h](const Elem& a, const Elem& b, const Elem& e) {
                          return c(g.mul(a, h), g.mul(b, h), g.mul(e, h));
                      }};
    if (revalidate_bound > 0) {
        ValidationReport rep = validate_circular(out, revalidate_bound);
        if (!rep.pass())
            throw precondition_error("conjugated ordering failed revalidation",
                                     rep.violations.empty() ? "" : rep.violations.front().str());
    }
    return out;
}

LeftOrder lexicographic_left(const Group& g, std::function<int(const Elem&)> kernel_sign,
                             std::function<int(const Elem&)> quotient_sign, const Elem& z,
                             std::function<Int(const Elem&)> z_floor, int check_bound) {
    LeftOrder lo{g,
                 [kernel_sign, quotient_sign](const Elem& e) {
                     const auto& p = e.as_pair();
                     int qs = quotient_sign(p.right);
                     return qs > 0 || (qs == 0 && kernel_sign(p.left) > 0);
                 },
                 z, std::move(z_floor)};
    if (!lo.positive(lo.z)) throw precondition_error("declared z is not positive");
    for (const auto& e : g.window(check_bound)) {
        bool trapped = false;
        for (int k = 1; k <= 64 && !trapped; ++k) {
            Elem zk = g.power(lo.z, k);
            trapped = lo.less(e, zk) && lo.less(g.inv(zk), e);
        }
        if (!trapped) throw precondition_error("declared z is not cofinal", e.str());
    }
    return lo;
}

LeftOrder integer_order(const Int& z) {
    Group g = integer_group();
    Int zz = z;
    return LeftOrder{g, [](const Elem& e) { return e.as_int() > 0; }, Elem::make_int(z),
                     [zz](const Elem& e) { return floor_div(e.as_int(), zz); }};
}

LeftOrder rational_order(const Rat& z) {
    Group g = rational_group();
    Rat zz = z;
    return LeftOrder{g, [](const Elem& e) { return e.as_ratio() > 0; }, Elem::make_ratio(z),
                     [zz](const Elem& e) {
                         Rat q = e.as_ratio() / zz;
                         return floor_div(boost::multiprecision::numerator(q),
                                          boost::multiprecision::denominator(q));
                     }};
}

LeftOrder zxz_lex_order(const Group& zxz) {
    return LeftOrder{zxz,
                     [](const Elem& e) {
                         const auto& p = e.as_pair();
                         return p.right.as_int() > 0 || (p.right.as_int() == 0 && p.left.as_int() > 0);
                     },
                     Elem::make_pair(Elem::make_int(0), Elem::make_int(1)),
                     [](const Elem& e) { return e.as_pair().right.as_int(); }};
}

LeftOrder zxz_lex_order_bad_z(const Group& zxz) {
    return LeftOrder{zxz,
                     [](const Elem& e) {
                         const auto& p = e.as_pair();
                         return p.right.as_int() > 0 || (p.right.as_int() == 0 && p.left.as_int() > 0);
                     },
                     Elem::make_pair(Elem::make_int(1), Elem::make_int(0)),
                     {}};
}

LeftOrder klein_lex_order(const Group& k) {
    // z = x^2 generates the center; floor of y^m x^n:
    //   n odd  -> (n-1)/2
    //   n even -> n/2 if m >= 0, else n/2 - 1
    return LeftOrder{k,
                     [](const Elem& e) {
                         const auto& p = e.as_pair();
                         return p.right.as_int() > 0 || (p.right.as_int() == 0 && p.left.as_int() > 0);
                     },
                     Elem::make_pair(Elem::make_int(0), Elem::make_int(2)),
                     [](const Elem& e) {
                         const auto& p = e.as_pair();
                         const Int& m = p.left.as_int();
                         const Int& n = p.right.as_int();
                         if (mod_floor(n, Int(2)) == 1) return floor_div(n - 1, Int(2));
                         return m >= 0 ? floor_div(n, Int(2)) : Int(floor_div(n, Int(2)) - 1);
                     }};
}

CircularOrder semidirect_lex_circular(const Group& g2) {
    // Minimal representatives of (m,e) in (K, lex, z=x^2) sort as
    //   id < y < y^2 < ... < (y^m x, m descending) < ... < (y^m x^2, m<0 ascending) < z.
    // Encode that position as a comparable key.
    auto key = [](const Elem& e) {
        const auto& p = e.as_pair();
        const Int& m = p.left.as_int();
        Int eps = p.right.as_cyc();
        if (eps == 1) return std::pair<int, Int>(1, -m);
        return m >= 0 ? std::pair<int, Int>(0, m) : std::pair<int, Int>(2, m);
    };
    return CircularOrder{g2, [key](const Elem& a, const Elem& b, const Elem& c) {
                             return orientation(a, b, c, [key](const Elem& x, const Elem& y) {
                                 return key(x) < key(y);
                             });
                         }};
}

CircularOrder table_circular(const Group& g, std::vector<Elem> arrangement) {
    if (arrangement.empty() || !g.is_identity(arrangement.front()))
        throw representation_error("arrangement must start at the identity");
    auto pos = std::make_shared<std::map<Elem, size_t>>();
    for (size_t i = 0; i < arrangement.size(); ++i) (*pos)[arrangement[i]] = i;
    if (pos->size() != arrangement.size())
        throw representation_error("arrangement has repeated entries");
    return CircularOrder{g, [pos](const Elem& a, const Elem& b, const Elem& c) {
                             auto ia = pos->find(a), ib = pos->find(b), ic = pos->find(c);
                             if (ia == pos->end() || ib == pos->end() || ic == pos->end())
                                 throw representation_error("element outside ordering table");
                             size_t x = ia->second, y = ib->second, z = ic->second;
                             if (x == y || y == z || x == z) return 0;
                             int sign = 1;
                             if (y < x) sign = -sign;
                             if (z < y) sign = -sign;
                             if (z < x) sign = -sign;
                             return sign;
                         }};
}

std::vector<CircularOrder> enumerate_circular_orderings(const Group& g) {
    if (!g.finite()) throw representation_error("enumeration needs a finite group");
    auto elems = g.enumerate();
    const size_t n = elems.size();
    if (n > 9) throw guard_error("enumeration guard: |G| = " + std::to_string(n) + " > 9");

    if (n <= 2) {
        CircularOrder zero{g, [](const Elem&, const Elem&, const Elem&) { return 0; }};
        return {zero};
    }

    // arrangement = (id, p(1), ..., p(n-1)); keep it when every left
    // translate is a rotation of it.
    std::vector<Elem> rest(elems.begin(), elems.end());
    rest.erase(std::remove_if(rest.begin(), rest.end(),
                              [&](const Elem& e) { return g.is_identity(e); }),
               rest.end());
    std::sort(rest.begin(), rest.end());

    std::vector<CircularOrder> found;
    std::vector<Elem> arr(n);
    arr[0] = g.identity();
    do {
        for (size_t i = 0; i < rest.size(); ++i) arr[i + 1] = rest[i];
        std::map<Elem, size_t> pos;
        for (size_t i = 0; i < n; ++i) pos[arr[i]] = i;
        bool invariant = true;
        for (const auto& t : elems) {
            size_t shift = pos[g.mul(t, arr[0])];
            for (size_t i = 1; i < n && invariant; ++i)
                invariant = pos[g.mul(t, arr[i])] == (shift + i) % n;
            if (!invariant) break;
        }
        if (invariant) found.push_back(table_circular(g, arr));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return found;
}

}  // namespace corder
