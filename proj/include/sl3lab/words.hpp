#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl3lab/errors.hpp"

namespace sl3lab {

/// Letters are encoded as 2*gen + (1 if inverse). With the generator order
/// a1, b1, ..., ag, bg this realizes the enumeration order
/// a1 < a1^-1 < b1 < b1^-1 < a2 < ... used everywhere for determinism.
using Letter = uint8_t;

inline Letter make_letter(int gen, bool inverse) {
    return static_cast<Letter>(2 * gen + (inverse ? 1 : 0));
}
inline int letter_gen(Letter l) { return l >> 1; }
inline bool letter_inverse(Letter l) { return l & 1; }
inline Letter letter_inv(Letter l) { return l ^ 1; }

/// Freely reduced word in the standard generators.
struct Word {
    std::vector<Letter> letters;

    size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const Word& o) const { return letters == o.letters; }
    /// shortlex: by length, then letter order
    bool operator<(const Word& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

Word reduce(const std::vector<Letter>& raw);
Word concat(const Word& a, const Word& b); // freely reduced product
Word inverse(const Word& w);

/// "a1 b1 A1 B1" with uppercase marking inverses; empty word -> "".
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s, int genus);

/// Standard presentation of pi_1 of the closed genus-g surface.
struct Presentation {
    int genus;

    explicit Presentation(int g) : genus(g) {
        if (g < 2) throw Error(Err::InvalidArgument, "genus must be >= 2");
    }
    int generator_count() const { return 2 * genus; }
    /// Words of length <= horizon are pairwise distinct group elements;
    /// a nontrivial relation must contain more than half the relator.
    int horizon() const { return 2 * genus; }
};

/// a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1, length 4g.
Word relator(const Presentation& p);

/// All freely reduced words of length <= radius in shortlex order,
/// starting with the empty word. Refuses radius beyond the horizon.
std::vector<Word> ball(const Presentation& p, int radius);

/// Same enumeration with no horizon check, for callers that only use the
/// words as (possibly repeated) group elements, e.g. boundary sampling.
std::vector<Word> free_ball(const Presentation& p, int radius);

/// Finitely supported integer combination of words (group-ring element).
struct FoxExpression {
    std::map<Word, long long> terms;

    void add(const Word& w, long long c);
    bool operator==(const FoxExpression& o) const { return terms == o.terms; }
};

FoxExpression fox_derivative(const Word& w, int gen);

/// Group-ring helpers used by the fundamental-identity test and the
/// cohomology assembly.
FoxExpression ring_add(const FoxExpression& a, const FoxExpression& b);
FoxExpression ring_mul_word_left(const Word& w, const FoxExpression& e);
FoxExpression ring_mul_word_right(const FoxExpression& e, const Word& w);

} // namespace sl3lab
