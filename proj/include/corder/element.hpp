#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corder/numeric.hpp"

namespace corder {

class Elem;

// One letter of a free-product or amalgam word: (factor index, element of
// that factor).
struct Syllable {
    int factor;
    // defined below once Elem is complete
    std::shared_ptr<const Elem> value;

    const Elem& elem() const { return *value; }
};

// Canonical-normal-form group element.  Immutable; copies share storage.
//
// Variants:
//   Int        arbitrary-precision integer
//   Ratio      reduced fraction, positive denominator
//   CycRes     residue 0 <= r < n (modulus lives in the owning group)
//   CirclePt   reduced fraction in [0,1), a rational point of the circle
//   Pair       ordered pair (products, semidirect products)
//   Ext        central-extension element (n, base)
//   Word       free-product word: nonidentity syllables, adjacent factors distinct
//   AmalWord   amalgam normal form: core element then transversal syllables
class Elem {
  public:
    enum class Kind { Int, Ratio, CycRes, CirclePt, Pair, Ext, Word, AmalWord };

    struct PairRep {
        Elem left, right;
    };
    struct ExtRep {
        Int n;
        Elem base;
    };
    struct WordRep {
        std::vector<Syllable> syllables;
    };
    struct AmalRep {
        Elem core;
        std::vector<Syllable> reps;
    };

    Elem() : Elem(make_int(0)) {}

    static Elem make_int(Int v);
    static Elem make_ratio(Rat v);
    static Elem make_cyc(Int r);
    static Elem make_circle(Rat v);  // reduced into [0,1)
    static Elem make_pair(Elem l, Elem r);
    static Elem make_ext(Int n, Elem base);
    static Elem make_word(std::vector<Syllable> syls);
    static Elem make_amal(Elem core, std::vector<Syllable> reps);

    Kind kind() const;

    const Int& as_int() const;
    const Rat& as_ratio() const;
    const Int& as_cyc() const;
    const Rat& as_circle() const;
    const PairRep& as_pair() const;
    const ExtRep& as_ext() const;
    const WordRep& as_word() const;
    const AmalRep& as_amal() const;

    // Structural comparisons; this is the equality the whole library uses.
    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }
    bool operator<(const Elem& o) const;  // arbitrary total order, for sorting and maps

    std::string str() const;

  private:
    using Rep = std::variant<Int, Rat, PairRep, ExtRep, WordRep, AmalRep>;
    // CycRes and CirclePt reuse Int/Rat storage; `tag_` keeps the kind.
    Elem(Kind k, Rep rep) : tag_(k), rep_(std::make_shared<const Rep>(std::move(rep))) {}

    Kind tag_;
    std::shared_ptr<const Rep> rep_;
};

inline Syllable make_syllable(int factor, Elem value) {
    return Syllable{factor, std::make_shared<const Elem>(std::move(value))};
}

}  // namespace corder
