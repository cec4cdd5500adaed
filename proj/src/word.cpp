#include "dw/word.hpp"

#include <algorithm>
#include <sstream>

namespace dw {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw Error("word letter exponent must be +-1");
        push_reduced(letters_, l);
    }
}

Word Word::gen(int g, int exp) {
    Word w;
    if (exp == 0) return w;
    Letter l{g, exp > 0 ? 1 : -1};
    for (int i = 0; i < std::abs(exp); ++i) w.letters_.push_back(l);
    return w;
}

Word Word::from_powers(std::initializer_list<std::pair<int, int>> powers) {
    Word w;
    for (auto [g, k] : powers) w = w * gen(g, k);
    return w;
}

int Word::max_generator() const {
    int m = -1;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::operator*(const Word& rhs) const {
    Word w;
    w.letters_ = letters_;
    for (const Letter& l : rhs.letters_) push_reduced(w.letters_, l);
    return w;
}

Word Word::pow(int k) const {
    Word base = k < 0 ? inverse() : *this;
    Word w;
    for (int i = 0; i < std::abs(k); ++i) w = w * base;
    return w;
}

Word free_reduce(const Word& w) {
    return Word(w.letters());  // constructor reduces
}

int Presentation::index_of(const std::string& name) const {
    auto it = std::find(generator_names.begin(), generator_names.end(), name);
    return it == generator_names.end() ? -1 : int(it - generator_names.begin());
}

void Presentation::check() const {
    for (const Word& r : relators)
        if (r.max_generator() >= num_generators())
            throw Error("relator uses a generator out of range");
}

Endomorphism Endomorphism::identity(int ngens) {
    Endomorphism e;
    for (int i = 0; i < ngens; ++i) e.images.push_back(Word::gen(i));
    return e;
}

Word substitute(const Word& w, const Endomorphism& e) {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.gen >= e.num_generators()) throw Error("substitute: generator out of range");
        out = out * (l.exp > 0 ? e.images[l.gen] : e.images[l.gen].inverse());
    }
    return out;
}

Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
    Endomorphism out;
    out.images.reserve(e2.images.size());
    for (const Word& w : e2.images) out.images.push_back(substitute(w, e1));
    return out;
}

namespace {

struct Token {
    std::string text;
    int line, col;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (std::isspace((unsigned char)raw[i])) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < raw.size() && !std::isspace((unsigned char)raw[j]) && raw[j] != '#') ++j;
            toks.push_back({raw.substr(i, j - i), lineno, int(i + 1)});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

std::pair<std::string, int> split_power(const Token& t) {
    auto caret = t.text.find('^');
    if (caret == std::string::npos) return {t.text, 1};
    std::string name = t.text.substr(0, caret);
    std::string expstr = t.text.substr(caret + 1);
    if (name.empty()) throw ParseError("token has empty generator name", t.line, t.col);
    try {
        size_t pos = 0;
        int k = std::stoi(expstr, &pos);
        if (pos != expstr.size() || k == 0)
            throw ParseError("bad exponent '" + expstr + "'", t.line, t.col);
        return {name, k};
    } catch (ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad exponent '" + expstr + "'", t.line, t.col);
    }
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty presentation file", 1, 1);
    Presentation P;
    bool have_gens = false;
    for (const auto& toks : lines) {
        const Token& head = toks.front();
        if (head.text == "gens:") {
            if (have_gens) throw ParseError("duplicate gens: line", head.line, head.col);
            for (size_t i = 1; i < toks.size(); ++i) {
                if (P.index_of(toks[i].text) >= 0)
                    throw ParseError("duplicate generator '" + toks[i].text + "'", toks[i].line,
                                     toks[i].col);
                P.generator_names.push_back(toks[i].text);
            }
            have_gens = true;
        } else if (head.text == "rel:") {
            if (!have_gens) throw ParseError("rel: before gens:", head.line, head.col);
            Word w;
            for (size_t i = 1; i < toks.size(); ++i) {
                auto [name, k] = split_power(toks[i]);
                int g = P.index_of(name);
                if (g < 0)
                    throw ParseError("unknown generator '" + name + "'", toks[i].line, toks[i].col);
                w = w * Word::gen(g, k);
            }
            P.relators.push_back(std::move(w));
        } else {
            throw ParseError("expected gens: or rel:, found '" + head.text + "'", head.line,
                             head.col);
        }
    }
    if (!have_gens) throw ParseError("missing gens: line", 1, 1);
    return P;
}

std::string serialize_presentation(const Presentation& P) {
    std::ostringstream out;
    out << "gens:";
    for (const auto& n : P.generator_names) out << ' ' << n;
    out << '\n';
    for (const Word& r : P.relators) out << "rel: " << word_to_string(r, P.generator_names) << '\n';
    return out.str();
}

Word parse_word(const std::string& tokens, const std::vector<std::string>& names) {
    std::istringstream in(tokens);
    std::string tok;
    Word w;
    int col = 1;
    while (in >> tok) {
        Token t{tok, 1, col++};
        auto [name, k] = split_power(t);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError("unknown generator '" + name + "'", 1, col);
        w = w * Word::gen(int(it - names.begin()), k);
    }
    return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream out;
    // run-length collapse for readability
    size_t i = 0;
    bool first = true;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j].gen == ls[i].gen && ls[j].exp == ls[i].exp) ++j;
        int k = int(j - i) * ls[i].exp;
        if (!first) out << ' ';
        first = false;
        out << names[ls[i].gen];
        if (k != 1) out << '^' << k;
        i = j;
    }
    return out.str();
}

}  // namespace dw
