#pragma once

#include <string>
#include <vector>

#include "dw/group.hpp"

namespace dw {

/// One letter of a word: generator index with exponent +1 or -1.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

/// A freely reduced word in abstract generators. All constructors and
/// operations keep the reduced form.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word gen(int g, int exp = 1);
    static Word from_powers(std::initializer_list<std::pair<int, int>> powers);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }
    int max_generator() const;

    Word inverse() const;
    Word operator*(const Word& rhs) const;
    Word conjugated_by(const Word& c) const { return c * (*this) * c.inverse(); }
    Word pow(int k) const;
    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const { return (int)generator_names.size(); }
    int index_of(const std::string& name) const;  // -1 when absent
    void check() const;                           // relator indices in range
};

/// Generator-to-word substitution map on a fixed generator set.
struct Endomorphism {
    std::vector<Word> images;

    int num_generators() const { return (int)images.size(); }
    static Endomorphism identity(int ngens);
};

/// Image of w under e, freely reduced.
Word substitute(const Word& w, const Endomorphism& e);

/// (e1 ∘ e2)(g) = e1(e2(g)).
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);

struct ParseError : Error {
    int line, column;
    ParseError(std::string msg, int l, int c)
        : Error(std::move(msg) + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l), column(c) {}
};

/// Text format: "gens: a b ...", then "rel: t1 t2 ..." lines where a token is
/// name or name^k. '#' starts a comment.
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& P);

/// Word from whitespace-separated tokens over the given generator names.
Word parse_word(const std::string& tokens, const std::vector<std::string>& names);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace dw
