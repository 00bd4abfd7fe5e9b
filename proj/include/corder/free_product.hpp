#pragma once

#include <vector>

#include "corder/group.hpp"

namespace corder {

// Free product of >= 2 factors.  Elements are Word normal forms: no identity
// syllables, adjacent factor indices distinct.  The group window enumerates
// words with at most `bound` syllables over each factor's window(bound);
// fp_words exposes the two bounds separately.
Group free_product_group(std::vector<Group> factors);

// Factors of a free product group, in index order.
const std::vector<Group>& fp_factors(const Group& fp);

// Normalizes an arbitrary syllable list (cancels boundaries, drops identity
// syllables) into a canonical Word element of `fp`.
Elem fp_word(const Group& fp, const std::vector<Syllable>& raw);

// Single generator-style word: the one-syllable word [factor:g], or id.
Elem fp_letter(const Group& fp, int factor, const Elem& g);

// Deterministic word window: nonempty-syllable words with at most
// max_syllables syllables whose letters range over factor.window(letter_bound)
// minus identity, adjacent factors distinct; ordered by syllable count then
// lexicographically.  Includes the empty word first.
std::vector<Elem> fp_words(const Group& fp, int max_syllables, int letter_bound);

}  // namespace corder
