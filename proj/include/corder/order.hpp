#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corder/group.hpp"

namespace corder {

// Orientation cocycle c : G^3 -> {-1,0,+1}.  Validity (vanishing exactly on
// degenerate triples, cocycle condition, left invariance) is checked by
// validate_circular, never assumed.
struct CircularOrder {
    Group group;
    std::function<int(const Elem&, const Elem&, const Elem&)> c;

    int operator()(const Elem& a, const Elem& b, const Elem& e) const { return c(a, b, e); }
};

// Left ordering given by its positive cone, together with a distinguished
// positive cofinal central element z.  z_floor(g), when present, returns the
// unique k with z^k <= g < z^(k+1).
struct LeftOrder {
    Group group;
    std::function<bool(const Elem&)> positive;
    Elem z;
    std::function<Int(const Elem&)> z_floor;  // may be empty

    bool has_floor() const { return static_cast<bool>(z_floor); }
    bool less(const Elem& a, const Elem& b) const { return positive(group.mul(group.inv(a), b)); }
};

struct Violation {
    std::string kind;
    std::vector<Elem> witness;
    std::string detail;

    std::string str() const;
};

struct ValidationReport {
    enum class Status { Pass, Fail, Inapplicable, Indeterminate };
    Status status = Status::Pass;
    std::string checked_region;
    std::vector<Violation> violations;
    long long violation_count = 0;  // total found, >= violations.size()

    bool pass() const { return status == Status::Pass; }
    void add(Violation v, size_t cap = 25);
    void merge(const ValidationReport& other);
    std::string str() const;
};

// Checks Definition-style circular order axioms on the enumeration (finite
// groups) or window(bound): vanishing exactly on degenerate triples, the
// four-term cocycle condition on quadruples, and left invariance.
ValidationReport validate_circular(const CircularOrder& co, int bound);

// Checks cone axioms (P.P in P, trichotomy) on windowed samples plus
// centrality, positivity and cofinality of z (cofinality via z_floor or a
// bounded power search), and z_floor consistency when present.
ValidationReport validate_left(const LeftOrder& lo, int bound);

enum class Cofinal { Yes, No, Unknown };

// Bounded search: Yes if some power of g (or of g^-1) reaches z; No if
// z_floor is available and every checked power stays within [z^-1, z);
// Unknown when the bound is exhausted without floor information.
Cofinal is_cofinal(const Elem& g, const LeftOrder& lo, int bound);

}  // namespace corder
