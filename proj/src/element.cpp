#include "corder/element.hpp"

#include <sstream>

#include "corder/errors.hpp"

namespace corder {

Elem Elem::make_int(Int v) { return Elem(Kind::Int, Rep(std::move(v))); }

Elem Elem::make_ratio(Rat v) { return Elem(Kind::Ratio, Rep(std::move(v))); }

Elem Elem::make_cyc(Int r) { return Elem(Kind::CycRes, Rep(std::move(r))); }

Elem Elem::make_circle(Rat v) { return Elem(Kind::CirclePt, Rep(frac_part(v))); }

Elem Elem::make_pair(Elem l, Elem r) { return Elem(Kind::Pair, Rep(PairRep{std::move(l), std::move(r)})); }

Elem Elem::make_ext(Int n, Elem base) { return Elem(Kind::Ext, Rep(ExtRep{std::move(n), std::move(base)})); }

Elem Elem::make_word(std::vector<Syllable> syls) { return Elem(Kind::Word, Rep(WordRep{std::move(syls)})); }

Elem Elem::make_amal(Elem core, std::vector<Syllable> reps) {
    return Elem(Kind::AmalWord, Rep(AmalRep{std::move(core), std::move(reps)}));
}

Elem::Kind Elem::kind() const { return tag_; }

namespace {
[[noreturn]] void bad_kind(const char* want) {
    throw representation_error(std::string("element is not a ") + want);
}
}  // namespace

const Int& Elem::as_int() const {
    if (tag_ != Kind::Int) bad_kind("plain integer");
    return std::get<Int>(*rep_);
}
const Rat& Elem::as_ratio() const {
    if (tag_ != Kind::Ratio) bad_kind("rational");
    return std::get<Rat>(*rep_);
}
const Int& Elem::as_cyc() const {
    if (tag_ != Kind::CycRes) bad_kind("cyclic residue");
    return std::get<Int>(*rep_);
}
const Rat& Elem::as_circle() const {
    if (tag_ != Kind::CirclePt) bad_kind("circle point");
    return std::get<Rat>(*rep_);
}
const Elem::PairRep& Elem::as_pair() const {
    if (tag_ != Kind::Pair) bad_kind("pair");
    return std::get<PairRep>(*rep_);
}
const Elem::ExtRep& Elem::as_ext() const {
    if (tag_ != Kind::Ext) bad_kind("extension pair");
    return std::get<ExtRep>(*rep_);
}
const Elem::WordRep& Elem::as_word() const {
    if (tag_ != Kind::Word) bad_kind("free-product word");
    return std::get<WordRep>(*rep_);
}
const Elem::AmalRep& Elem::as_amal() const {
    if (tag_ != Kind::AmalWord) bad_kind("amalgam word");
    return std::get<AmalRep>(*rep_);
}

namespace {

int cmp_syllables(const std::vector<Syllable>& a, const std::vector<Syllable>& b);

int cmp(const Elem& a, const Elem& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Elem::Kind::Int:
        case Elem::Kind::CycRes: {
            const Int& x = a.kind() == Elem::Kind::Int ? a.as_int() : a.as_cyc();
            const Int& y = b.kind() == Elem::Kind::Int ? b.as_int() : b.as_cyc();
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case Elem::Kind::Ratio:
        case Elem::Kind::CirclePt: {
            const Rat& x = a.kind() == Elem::Kind::Ratio ? a.as_ratio() : a.as_circle();
            const Rat& y = b.kind() == Elem::Kind::Ratio ? b.as_ratio() : b.as_circle();
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case Elem::Kind::Pair: {
            int c = cmp(a.as_pair().left, b.as_pair().left);
            return c != 0 ? c : cmp(a.as_pair().right, b.as_pair().right);
        }
        case Elem::Kind::Ext: {
            if (a.as_ext().n != b.as_ext().n) return a.as_ext().n < b.as_ext().n ? -1 : 1;
            return cmp(a.as_ext().base, b.as_ext().base);
        }
        case Elem::Kind::Word:
            return cmp_syllables(a.as_word().syllables, b.as_word().syllables);
        case Elem::Kind::AmalWord: {
            int c = cmp(a.as_amal().core, b.as_amal().core);
            return c != 0 ? c : cmp_syllables(a.as_amal().reps, b.as_amal().reps);
        }
    }
    return 0;
}

int cmp_syllables(const std::vector<Syllable>& a, const std::vector<Syllable>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].factor != b[i].factor) return a[i].factor < b[i].factor ? -1 : 1;
        int c = cmp(a[i].elem(), b[i].elem());
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace

bool Elem::operator==(const Elem& o) const { return cmp(*this, o) == 0; }
bool Elem::operator<(const Elem& o) const { return cmp(*this, o) < 0; }

std::string Elem::str() const {
    std::ostringstream os;
    switch (tag_) {
        case Kind::Int:
            os << as_int();
            break;
        case Kind::Ratio:
            os << as_ratio();
            break;
        case Kind::CycRes:
            os << as_cyc();
            break;
        case Kind::CirclePt:
            os << as_circle();
            break;
        case Kind::Pair:
            os << "(" << as_pair().left.str() << "," << as_pair().right.str() << ")";
            break;
        case Kind::Ext:
            os << "(" << as_ext().n << ";" << as_ext().base.str() << ")";
            break;
        case Kind::Word: {
            const auto& syls = as_word().syllables;
            if (syls.empty()) {
                os << "1";
            } else {
                for (size_t i = 0; i < syls.size(); ++i) {
                    if (i) os << ".";
                    os << "[" << syls[i].factor << ":" << syls[i].elem().str() << "]";
                }
            }
            break;
        }
        case Kind::AmalWord: {
            const auto& w = as_amal();
            os << "{" << w.core.str();
            for (const auto& s : w.reps) os << " [" << s.factor << ":" << s.elem().str() << "]";
            os << "}";
            break;
        }
    }
    return os.str();
}

}  // namespace corder
