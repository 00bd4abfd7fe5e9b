#include "corder/amalgam.hpp"

#include <algorithm>

#include "corder/errors.hpp"

namespace corder {

namespace {

struct AmalPayload {
    AmalgamData data;
};

CosetDecomposition checked_decompose(const AmalgamData& d, int factor, const Elem& g) {
    const auto& fac = d.factors.at(static_cast<size_t>(factor));
    CosetDecomposition dec = fac.decompose(g);
    if (fac.group.mul(fac.embed(dec.core), dec.rep) != g)
        throw representation_error("coset decomposition callback is inconsistent at " + g.str());
    return dec;
}

// Computes x * (word given by `rest` starting at `pos`) in normal form,
// returning (core, syllables).  x is an arbitrary element of factor j.
std::pair<Elem, std::vector<Syllable>> push_left(const AmalgamData& d, int j, Elem x,
                                                 const std::vector<Syllable>& rest, size_t pos) {
    for (;;) {
        if (pos < rest.size() && rest[pos].factor == j) {
            x = d.factors[static_cast<size_t>(j)].group.mul(x, rest[pos].elem());
            ++pos;
            continue;
        }
        CosetDecomposition dec = checked_decompose(d, j, x);
        if (!d.factors[static_cast<size_t>(j)].group.is_identity(dec.rep)) {
            std::vector<Syllable> out;
            out.reserve(rest.size() - pos + 1);
            out.push_back(make_syllable(j, dec.rep));
            out.insert(out.end(), rest.begin() + static_cast<long>(pos), rest.end());
            return {dec.core, std::move(out)};
        }
        // x lies in the amalgamated subgroup: fold its core into the next syllable.
        if (pos >= rest.size()) return {dec.core, {}};
        j = rest[pos].factor;
        const auto& fac = d.factors[static_cast<size_t>(j)];
        x = fac.group.mul(fac.embed(dec.core), rest[pos].elem());
        ++pos;
    }
}

Elem amal_mul(const AmalgamData& d, const Group& core, const Elem& a, const Elem& b) {
    const auto& u = a.as_amal();
    const auto& v = b.as_amal();
    Elem cur_core = v.core;
    std::vector<Syllable> cur = v.reps;
    for (auto it = u.reps.rbegin(); it != u.reps.rend(); ++it) {
        int j = it->factor;
        const auto& fac = d.factors[static_cast<size_t>(j)];
        Elem t = fac.group.mul(it->elem(), fac.embed(cur_core));
        auto [h, syls] = push_left(d, j, t, cur, 0);
        cur_core = h;
        cur = std::move(syls);
    }
    return Elem::make_amal(core.mul(u.core, cur_core), std::move(cur));
}

}  // namespace

Group amalgam_group(AmalgamData data) {
    if (data.factors.empty()) throw representation_error("amalgam needs at least 1 factor");
    auto payload = std::make_shared<const AmalPayload>(AmalPayload{std::move(data)});
    const AmalgamData& d = payload->data;
    Group::Rep rep;
    rep.name = "amalgam";
    rep.identity = Elem::make_amal(d.core.identity(), {});
    rep.payload = payload;
    Group core = d.core;
    rep.mul = [payload, core](const Elem& a, const Elem& b) {
        return amal_mul(payload->data, core, a, b);
    };
    rep.inv = [payload, core](const Elem& a) {
        const auto& u = a.as_amal();
        Elem cur_core = core.inv(u.core);
        std::vector<Syllable> cur;
        for (const auto& s : u.reps) {
            int j = s.factor;
            const auto& fac = payload->data.factors[static_cast<size_t>(j)];
            Elem t = fac.group.mul(fac.group.inv(s.elem()), fac.embed(cur_core));
            auto [h, syls] = push_left(payload->data, j, t, cur, 0);
            cur_core = h;
            cur = std::move(syls);
        }
        return Elem::make_amal(cur_core, std::move(cur));
    };
    Group g(rep);
    rep.window = [g](int bound) { return amalgam_words(g, bound, bound); };
    return Group(rep);
}

const AmalgamData& amalgam_data(const Group& amal) {
    auto p = amal.payload<AmalPayload>();
    if (!p || amal.identity().kind() != Elem::Kind::AmalWord)
        throw representation_error("not an amalgam group");
    return p->data;
}

Elem amalgam_embed_core(const Group& amal, const Elem& h) {
    return Elem::make_amal(h, {});
}

Elem amalgam_embed_factor(const Group& amal, int factor, const Elem& g) {
    const auto& d = amalgam_data(amal);
    auto [h, syls] = push_left(d, factor, g, {}, 0);
    return Elem::make_amal(h, std::move(syls));
}

Hom amalgam_core_hom(const Group& amal) {
    return Hom{amalgam_data(amal).core, amal,
               [amal](const Elem& h) { return amalgam_embed_core(amal, h); }, true};
}

Hom amalgam_factor_hom(const Group& amal, int factor) {
    return Hom{amalgam_data(amal).factors.at(static_cast<size_t>(factor)).group, amal,
               [amal, factor](const Elem& g) { return amalgam_embed_factor(amal, factor, g); }, true};
}

std::vector<Elem> amalgam_transversal(const Group& amal, int factor, int bound) {
    const auto& d = amalgam_data(amal);
    const auto& fac = d.factors.at(static_cast<size_t>(factor));
    std::vector<Elem> reps;
    for (const auto& g : fac.group.window(bound)) {
        CosetDecomposition dec = checked_decompose(d, factor, g);
        if (!fac.group.is_identity(dec.rep)) reps.push_back(dec.rep);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

std::vector<Elem> amalgam_words(const Group& amal, int max_reps, int core_bound) {
    const auto& d = amalgam_data(amal);
    std::vector<std::vector<Elem>> trans(d.factors.size());
    for (size_t i = 0; i < d.factors.size(); ++i)
        trans[i] = amalgam_transversal(amal, static_cast<int>(i), core_bound);

    std::vector<std::vector<Syllable>> tails = {{}};
    std::vector<std::vector<Syllable>> layer = {{}};
    for (int len = 1; len <= max_reps; ++len) {
        std::vector<std::vector<Syllable>> next;
        for (const auto& w : layer) {
            for (size_t f = 0; f < d.factors.size(); ++f) {
                if (!w.empty() && w.back().factor == static_cast<int>(f)) continue;
                for (const auto& r : trans[f]) {
                    auto w2 = w;
                    w2.push_back(make_syllable(static_cast<int>(f), r));
                    tails.push_back(w2);
                    next.push_back(std::move(w2));
                }
            }
        }
        layer = std::move(next);
    }

    std::vector<Elem> out;
    for (const auto& h : d.core.window(core_bound))
        for (const auto& tail : tails) out.push_back(Elem::make_amal(h, tail));
    return out;
}

}  // namespace corder
