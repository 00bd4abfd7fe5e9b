#include "corder/free_product.hpp"

#include "corder/errors.hpp"

namespace corder {

namespace {

struct FpPayload {
    std::vector<Group> factors;
};

void append_syllable(std::vector<Syllable>& out, const std::vector<Group>& factors, const Syllable& s) {
    const Group& fac = factors.at(static_cast<size_t>(s.factor));
    if (fac.is_identity(s.elem())) return;
    if (!out.empty() && out.back().factor == s.factor) {
        Elem merged = fac.mul(out.back().elem(), s.elem());
        out.pop_back();
        if (!fac.is_identity(merged)) out.push_back(make_syllable(s.factor, merged));
        return;
    }
    out.push_back(s);
}

std::vector<Elem> words_over(const std::vector<Group>& factors, int max_syllables, int letter_bound) {
    std::vector<std::vector<Elem>> letters(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        for (const auto& e : factors[i].window(letter_bound))
            if (!factors[i].is_identity(e)) letters[i].push_back(e);

    std::vector<Elem> out;
    out.push_back(Elem::make_word({}));
    std::vector<std::vector<Syllable>> layer = {{}};
    for (int len = 1; len <= max_syllables; ++len) {
        std::vector<std::vector<Syllable>> next;
        for (const auto& w : layer) {
            for (size_t f = 0; f < factors.size(); ++f) {
                if (!w.empty() && w.back().factor == static_cast<int>(f)) continue;
                for (const auto& e : letters[f]) {
                    auto w2 = w;
                    w2.push_back(make_syllable(static_cast<int>(f), e));
                    out.push_back(Elem::make_word(w2));
                    next.push_back(std::move(w2));
                }
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

Group free_product_group(std::vector<Group> factors) {
    if (factors.size() < 2) throw representation_error("free product needs at least 2 factors");
    auto payload = std::make_shared<const FpPayload>(FpPayload{std::move(factors)});
    Group::Rep rep;
    rep.name = "free-product";
    rep.identity = Elem::make_word({});
    rep.payload = payload;
    rep.mul = [payload](const Elem& a, const Elem& b) {
        std::vector<Syllable> out;
        for (const auto& s : a.as_word().syllables) append_syllable(out, payload->factors, s);
        for (const auto& s : b.as_word().syllables) append_syllable(out, payload->factors, s);
        return Elem::make_word(std::move(out));
    };
    rep.inv = [payload](const Elem& a) {
        const auto& as = a.as_word().syllables;
        std::vector<Syllable> out;
        out.reserve(as.size());
        for (auto it = as.rbegin(); it != as.rend(); ++it)
            out.push_back(make_syllable(it->factor,
                                        payload->factors[static_cast<size_t>(it->factor)].inv(it->elem())));
        return Elem::make_word(std::move(out));
    };
    rep.window = [payload](int bound) { return words_over(payload->factors, bound, bound); };
    return Group(rep);
}

const std::vector<Group>& fp_factors(const Group& fp) {
    auto p = fp.payload<FpPayload>();
    if (!p || fp.identity().kind() != Elem::Kind::Word)
        throw representation_error("not a free product group");
    return p->factors;
}

Elem fp_word(const Group& fp, const std::vector<Syllable>& raw) {
    const auto& factors = fp_factors(fp);
    std::vector<Syllable> out;
    for (const auto& s : raw) {
        if (s.factor < 0 || static_cast<size_t>(s.factor) >= factors.size())
            throw representation_error("syllable factor index out of range");
        append_syllable(out, factors, s);
    }
    return Elem::make_word(std::move(out));
}

Elem fp_letter(const Group& fp, int factor, const Elem& g) {
    return fp_word(fp, {make_syllable(factor, g)});
}

std::vector<Elem> fp_words(const Group& fp, int max_syllables, int letter_bound) {
    return words_over(fp_factors(fp), max_syllables, letter_bound);
}

}  // namespace corder
