#include "corder/order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "corder/errors.hpp"

namespace corder {

std::string Violation::str() const {
    std::ostringstream os;
    os << kind << " at (";
    for (size_t i = 0; i < witness.size(); ++i) os << (i ? ", " : "") << witness[i].str();
    os << ")";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
}

void ValidationReport::add(Violation v, size_t cap) {
    status = Status::Fail;
    ++violation_count;
    if (violations.size() < cap) violations.push_back(std::move(v));
}

void ValidationReport::merge(const ValidationReport& other) {
    auto severity = [](Status s) {
        switch (s) {
            case Status::Pass: return 0;
            case Status::Inapplicable: return 1;
            case Status::Indeterminate: return 2;
            case Status::Fail: return 3;
        }
        return 3;
    };
    if (severity(other.status) > severity(status)) status = other.status;
    violation_count += other.violation_count;
    for (const auto& v : other.violations)
        if (violations.size() < 25) violations.push_back(v);
    if (!other.checked_region.empty()) {
        if (!checked_region.empty()) checked_region += "; ";
        checked_region += other.checked_region;
    }
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    switch (status) {
        case Status::Pass: os << "pass"; break;
        case Status::Fail: os << "fail"; break;
        case Status::Inapplicable: os << "inapplicable"; break;
        case Status::Indeterminate: os << "indeterminate"; break;
    }
    os << " [" << checked_region << "]";
    if (violation_count > 0) os << " " << violation_count << " violation(s)";
    for (const auto& v : violations) os << "\n  " << v.str();
    return os.str();
}

namespace {

bool degenerate(const Elem& a, const Elem& b, const Elem& c) {
    return a == b || b == c || a == c;
}

}  // namespace

ValidationReport validate_circular(const CircularOrder& co, int bound) {
    ValidationReport rep;
    const Group& g = co.group;
    auto win = g.window(bound);
    const size_t n = win.size();
    rep.checked_region = (g.finite() ? "exhaustive, |G|=" : "window bound ") +
                         (g.finite() ? std::to_string(n) : std::to_string(bound) + ", size " + std::to_string(n));

    // Value table over the window; keeps the quadruple pass at lookup cost.
    std::vector<signed char> table(n * n * n);
    auto at = [&](size_t i, size_t j, size_t k) -> signed char& { return table[(i * n + j) * n + k]; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                int v = co.c(win[i], win[j], win[k]);
                if (v < -1 || v > 1) {
                    rep.add({"range", {win[i], win[j], win[k]}, "value " + std::to_string(v)});
                    v = 0;
                }
                at(i, j, k) = static_cast<signed char>(v);
                bool deg = degenerate(win[i], win[j], win[k]);
                if (deg && v != 0)
                    rep.add({"degenerate-nonzero", {win[i], win[j], win[k]}, "value " + std::to_string(v)});
                if (!deg && v == 0)
                    rep.add({"nondegenerate-zero", {win[i], win[j], win[k]}, ""});
            }

    for (size_t i1 = 0; i1 < n; ++i1)
        for (size_t i2 = 0; i2 < n; ++i2)
            for (size_t i3 = 0; i3 < n; ++i3)
                for (size_t i4 = 0; i4 < n; ++i4) {
                    int s = at(i2, i3, i4) - at(i1, i3, i4) + at(i1, i2, i4) - at(i1, i2, i3);
                    if (s != 0)
                        rep.add({"cocycle-condition",
                                 {win[i1], win[i2], win[i3], win[i4]},
                                 "sum " + std::to_string(s)});
                }

    for (const auto& m : win)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    int lhs = co.c(g.mul(m, win[i]), g.mul(m, win[j]), g.mul(m, win[k]));
                    if (lhs != at(i, j, k))
                        rep.add({"left-invariance",
                                 {m, win[i], win[j], win[k]},
                                 "translated value " + std::to_string(lhs) + " vs " +
                                     std::to_string(static_cast<int>(at(i, j, k)))});
                }
    return rep;
}

ValidationReport validate_left(const LeftOrder& lo, int bound) {
    ValidationReport rep;
    const Group& g = lo.group;
    auto win = g.window(bound);
    rep.checked_region = "window bound " + std::to_string(bound) + ", size " + std::to_string(win.size());

    for (const auto& a : win) {
        bool p = lo.positive(a);
        bool q = lo.positive(g.inv(a));
        bool e = g.is_identity(a);
        int classes = (p ? 1 : 0) + (q ? 1 : 0) + (e ? 1 : 0);
        if (classes != 1)
            rep.add({"trichotomy", {a},
                     p && q ? "element and inverse both positive"
                            : (e && (p || q) ? "identity in a cone" : "element in no cone")});
    }
    for (const auto& a : win)
        for (const auto& b : win)
            if (lo.positive(a) && lo.positive(b) && !lo.positive(g.mul(a, b)))
                rep.add({"cone-product", {a, b}, "product left the positive cone"});

    if (!lo.positive(lo.z)) rep.add({"z-positive", {lo.z}, "z is not positive"});
    for (const auto& a : win)
        if (g.mul(a, lo.z) != g.mul(lo.z, a)) rep.add({"z-central", {a}, "z fails to commute"});

    if (lo.has_floor()) {
        // The floor law z^floor(g) <= g < z^(floor(g)+1) traps every element,
        // so it subsumes the cofinality check.
        for (const auto& a : win) {
            Int k = lo.z_floor(a);
            Elem lowered = g.mul(a, g.power(lo.z, -k));
            if (lo.positive(g.inv(lowered)) || !lo.less(lowered, lo.z))
                rep.add({"z-floor", {a}, "z^floor <= g < z^(floor+1) fails, floor " + k.str()});
        }
    } else {
        int kmax = bound + 8;
        for (const auto& a : win) {
            bool trapped = false;
            Elem zk = lo.z;
            for (int k = 1; k <= kmax; ++k) {
                if (lo.less(a, zk) && lo.less(g.inv(zk), a)) {
                    trapped = true;
                    break;
                }
                zk = g.mul(zk, lo.z);
            }
            if (!trapped)
                rep.add({"z-cofinal", {a}, "element escapes z powers up to exponent " + std::to_string(kmax)});
        }
    }
    return rep;
}

Cofinal is_cofinal(const Elem& g, const LeftOrder& lo, int bound) {
    const Group& grp = lo.group;
    for (Int k = 1; k <= bound; k = k * 2) {
        for (const Elem& h : {grp.power(g, k), grp.power(g, -k)}) {
            if (lo.has_floor()) {
                Int f = lo.z_floor(h);
                if (f >= 1 || f < -1) return Cofinal::Yes;  // some power escapes [z^-1, z)
            } else {
                if (!lo.less(h, lo.z)) return Cofinal::Yes;
            }
        }
    }
    // With a floor every checked power stayed within [z^-1, z): certify No on
    // the checked range.  Without one the bounded comparisons are inconclusive.
    return lo.has_floor() ? Cofinal::No : Cofinal::Unknown;
}

}  // namespace corder
