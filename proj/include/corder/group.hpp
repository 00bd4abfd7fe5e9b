#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corder/element.hpp"

namespace corder {

// A group presented through computable canonical-normal-form arithmetic.
// All operations are pure; Group values are cheap shared handles.
//
// `enumerate` is present for finite groups.  `window` is a deterministic
// finite sample of an infinite group, parameterized by one integer bound;
// every "checked on a window" statement in this library consumes it.
class Group {
  public:
    struct Rep {
        std::string name;
        Elem identity;
        std::function<Elem(const Elem&, const Elem&)> mul;
        std::function<Elem(const Elem&)> inv;
        std::function<std::vector<Elem>()> enumerate;           // empty if infinite
        std::function<std::vector<Elem>(int)> window;           // empty if enumerable only
        Int modulus = 0;                                        // cyclic groups only
        std::shared_ptr<const void> payload;                    // structure-specific data
    };

    Group() = default;
    explicit Group(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

    bool valid() const { return rep_ != nullptr; }
    const std::string& name() const { return rep_->name; }
    const Elem& identity() const { return rep_->identity; }
    Elem mul(const Elem& a, const Elem& b) const { return rep_->mul(a, b); }
    Elem inv(const Elem& a) const { return rep_->inv(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_identity(const Elem& a) const { return a == rep_->identity; }

    bool finite() const { return static_cast<bool>(rep_->enumerate); }
    std::vector<Elem> enumerate() const;
    // Finite groups ignore the bound and return the full enumeration.
    std::vector<Elem> window(int bound) const;

    Elem power(const Elem& g, const Int& k) const;
    Elem conj(const Elem& g, const Elem& h) const;  // h^-1 g h

    const Int& modulus() const { return rep_->modulus; }

    // Identity of the underlying representation; used where "the same group
    // object" is the contract (e.g. comparing extension bases).
    bool same_object(const Group& o) const { return rep_ == o.rep_; }

    template <typename T>
    std::shared_ptr<const T> payload() const {
        return std::static_pointer_cast<const T>(rep_->payload);
    }

  private:
    std::shared_ptr<const Rep> rep_;
};

// Group homomorphism with an injectivity claim made by the constructor.
// `check` verifies the algebraic contract on a window.
struct Hom {
    Group source;
    Group target;
    std::function<Elem(const Elem&)> map;
    bool injective = false;

    Elem operator()(const Elem& g) const { return map(g); }
};

Hom identity_hom(const Group& g);
Hom compose(const Hom& f, const Hom& g);  // x -> f(g(x))
// Verifies map(id)=id, map(ab)=map(a)map(b) and (if claimed) injectivity on
// the window; throws precondition_error with a witness otherwise.
void check_hom(const Hom& h, int bound);

// --- group builders -------------------------------------------------------

Group cyclic_group(const Int& n);          // CycRes residues mod n
Group integer_group();                     // Int
Group rational_group();                    // Ratio
Group circle_group();                      // CirclePt, addition mod 1
Group semidirect_z_z2();                   // Pair(Int, CycRes mod 2), Z2 acting by -1
Group klein_bottle_group();                // Pair(Int m, Int n) = y^m x^n, xyx^-1 = y^-1
Group direct_product(const Group& a, const Group& b);

}  // namespace corder
