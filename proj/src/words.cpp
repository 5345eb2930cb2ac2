#include "sl3lab/words.hpp"

#include <algorithm>
#include <sstream>

namespace sl3lab {

Word reduce(const std::vector<Letter>& raw) {
    Word w;
    w.letters.reserve(raw.size());
    for (Letter l : raw) {
        if (!w.letters.empty() && w.letters.back() == letter_inv(l))
            w.letters.pop_back();
        else
            w.letters.push_back(l);
    }
    return w;
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> raw = a.letters;
    raw.insert(raw.end(), b.letters.begin(), b.letters.end());
    return reduce(raw);
}

Word inverse(const Word& w) {
    Word r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(letter_inv(*it));
    return r;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    bool first = true;
    for (Letter l : w.letters) {
        if (!first) os << ' ';
        first = false;
        int gen = letter_gen(l);
        char base = (gen % 2 == 0) ? 'a' : 'b';
        if (letter_inverse(l)) base = static_cast<char>(base - 'a' + 'A');
        os << base << (gen / 2 + 1);
    }
    return os.str();
}

Word word_from_string(const std::string& s, int genus) {
    std::istringstream is(s);
    std::vector<Letter> raw;
    std::string tok;
    while (is >> tok) {
        char c = tok[0];
        bool inv = (c == 'A' || c == 'B');
        bool is_b = (c == 'b' || c == 'B');
        if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
            throw Error(Err::InvalidArgument, "bad word token '" + tok + "'");
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (...) {
            throw Error(Err::InvalidArgument, "bad word token '" + tok + "'");
        }
        if (idx < 1 || idx > genus)
            throw Error(Err::InvalidArgument, "generator index out of range in '" + tok + "'");
        raw.push_back(make_letter(2 * (idx - 1) + (is_b ? 1 : 0), inv));
    }
    return reduce(raw);
}

Word relator(const Presentation& p) {
    Word r;
    for (int i = 0; i < p.genus; ++i) {
        Letter a = make_letter(2 * i, false);
        Letter b = make_letter(2 * i + 1, false);
        r.letters.push_back(a);
        r.letters.push_back(b);
        r.letters.push_back(letter_inv(a));
        r.letters.push_back(letter_inv(b));
    }
    return r;
}

std::vector<Word> free_ball(const Presentation& p, int radius) {
    if (radius < 0) throw Error(Err::InvalidArgument, "negative ball radius");
    const int nletters = 2 * p.generator_count();
    std::vector<Word> out;
    out.push_back(Word{});
    size_t layer_begin = 0;
    for (int len = 1; len <= radius; ++len) {
        size_t layer_end = out.size();
        for (size_t i = layer_begin; i < layer_end; ++i)
            for (int l = 0; l < nletters; ++l) {
                const Word& w = out[i];
                if (!w.letters.empty() && w.letters.back() == letter_inv(static_cast<Letter>(l)))
                    continue;
                Word next = w;
                next.letters.push_back(static_cast<Letter>(l));
                out.push_back(std::move(next));
            }
        layer_begin = layer_end;
    }
    return out;
}

std::vector<Word> ball(const Presentation& p, int radius) {
    if (radius > p.horizon())
        throw Error(Err::BallTooLarge, "radius " + std::to_string(radius) +
                                           " beyond free-equality horizon " +
                                           std::to_string(p.horizon()));
    return free_ball(p, radius);
}

void FoxExpression::add(const Word& w, long long c) {
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FoxExpression fox_derivative(const Word& w, int gen) {
    // d(uv)/dx = du/dx + u dv/dx applied letter by letter:
    // d(x)/dx = 1, d(x^-1)/dx = -x^-1, other letters contribute 0.
    FoxExpression out;
    Word prefix;
    for (Letter l : w.letters) {
        if (letter_gen(l) == gen) {
            if (!letter_inverse(l)) {
                out.add(prefix, 1);
            } else {
                Word t = prefix;
                t.letters.push_back(l); // prefix * x^-1, already reduced
                out.add(t, -1);
            }
        }
        prefix.letters.push_back(l);
    }
    return out;
}

FoxExpression ring_add(const FoxExpression& a, const FoxExpression& b) {
    FoxExpression out = a;
    for (const auto& [w, c] : b.terms) out.add(w, c);
    return out;
}

FoxExpression ring_mul_word_left(const Word& w, const FoxExpression& e) {
    FoxExpression out;
    for (const auto& [t, c] : e.terms) out.add(concat(w, t), c);
    return out;
}

FoxExpression ring_mul_word_right(const FoxExpression& e, const Word& w) {
    FoxExpression out;
    for (const auto& [t, c] : e.terms) out.add(concat(t, w), c);
    return out;
}

} // namespace sl3lab
