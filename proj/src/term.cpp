#include "vnwb/term.hpp"

#include <cctype>
#include <map>

namespace vnwb {

void normalize_word(Word& w, const Alphabet& a) {
    size_t out = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        Letter l = w[i];
        if (a.is_jones(letter_gen(l))) {
            l = make_letter(letter_gen(l), false);
            if (out > 0 && w[out - 1] == l) continue;  // e*e = e
        }
        w[out++] = l;
    }
    w.resize(out);
}

Word word_adjoint(const Word& w, const Alphabet& a) {
    Word r(w.rbegin(), w.rend());
    for (Letter& l : r)
        if (!a.is_jones(letter_gen(l))) l ^= 1u;
    normalize_word(r, a);
    return r;
}

int compare_words(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool word_valid(const Word& w, const Alphabet& a) {
    for (size_t i = 0; i < w.size(); ++i) {
        uint32_t g = letter_gen(w[i]);
        if (g >= a.arity) return false;
        if (a.is_jones(g)) {
            if (letter_star(w[i])) return false;
            if (i > 0 && w[i - 1] == w[i]) return false;
        }
    }
    return true;
}

Term::Term(Alphabet a, std::vector<Monomial> monos) : alpha_(a) {
    std::map<Word, Scalar> acc;
    for (auto& m : monos) {
        normalize_word(m.word, alpha_);
        auto it = acc.find(m.word);
        if (it == acc.end())
            acc.emplace(std::move(m.word), m.coeff);
        else
            it->second += m.coeff;
    }
    monos_.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (!c.is_zero()) monos_.push_back({w, c});
}

Term Term::gen(Alphabet a, uint32_t g1based, bool star) {
    if (g1based == 0 || g1based > a.arity) throw ConfigError("generator index out of range");
    return Term(a, {{Word{make_letter(g1based - 1, star)}, Scalar(1)}});
}

size_t Term::degree() const {
    size_t d = 0;
    for (const auto& m : monos_) d = std::max(d, m.word.size());
    return d;
}

Term Term::adjoint() const {
    std::vector<Monomial> out;
    out.reserve(monos_.size());
    for (const auto& m : monos_) out.push_back({word_adjoint(m.word, alpha_), m.coeff.conj()});
    return Term(alpha_, std::move(out));
}

Term Term::scaled(const Scalar& c) const {
    if (c.is_zero()) return Term(alpha_);
    std::vector<Monomial> out;
    out.reserve(monos_.size());
    for (const auto& m : monos_) out.push_back({m.word, m.coeff * c});
    return Term(alpha_, std::move(out));
}

Term operator+(const Term& a, const Term& b) {
    std::vector<Monomial> out;
    out.reserve(a.monos_.size() + b.monos_.size());
    out.insert(out.end(), a.monos_.begin(), a.monos_.end());
    out.insert(out.end(), b.monos_.begin(), b.monos_.end());
    return Term(a.alpha_, std::move(out));
}

Term operator-(const Term& a, const Term& b) { return a + b.scaled(Scalar(-1)); }

Term operator*(const Term& a, const Term& b) {
    std::vector<Monomial> out;
    out.reserve(a.monos_.size() * b.monos_.size());
    for (const auto& x : a.monos_)
        for (const auto& y : b.monos_) {
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            out.push_back({std::move(w), x.coeff * y.coeff});
        }
    return Term(a.alpha_, std::move(out));
}

int Term::compare(const Term& a, const Term& b) {
    size_t n = std::min(a.monos_.size(), b.monos_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = compare_words(a.monos_[i].word, b.monos_[i].word);
        if (c != 0) return c;
        const Scalar &x = a.monos_[i].coeff, &y = b.monos_[i].coeff;
        if (x != y) return x < y ? -1 : 1;
    }
    if (a.monos_.size() != b.monos_.size()) return a.monos_.size() < b.monos_.size() ? -1 : 1;
    return 0;
}

Int Term::size_weight() const {
    Int s = 0;
    for (const auto& m : monos_) s += Int(m.word.size()) + scalar_height(m.coeff);
    return s;
}

Rat Term::l1_bound() const {
    Rat s = 0;
    for (const auto& m : monos_) s += scalar_abs_upper(m.coeff);
    return s;
}

std::string Term::str() const { return print_term(*this); }

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& s;
    const Alphabet& alpha;
    size_t i = 0;
    std::vector<uint32_t> jones_gens;  // 0-based gens flagged Jones, in order

    explicit Parser(const std::string& text, const Alphabet& a) : s(text), alpha(a) {
        for (uint32_t g = 0; g < a.arity; ++g)
            if (a.is_jones(g)) jones_gens.push_back(g);
    }

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        ws();
        return i >= s.size();
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg + " at position " + std::to_string(i), i); }

    uint64_t integer() {
        ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stoull(s.substr(start, i - start));
    }

    // signed rational a or a/b
    Rat rational() {
        ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        Int num(static_cast<unsigned long>(integer()));
        Int den = 1;
        if (accept('/')) den = Int(static_cast<unsigned long>(integer()));
        if (den == 0) fail("zero denominator");
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }

    bool starts_scalar() {
        // after '(' the first non-space char of a scalar literal is a digit or sign
        size_t save = i;
        ws();
        bool yes = i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '+' || s[i] == '-');
        i = save;
        return yes;
    }

    // inside parens: rational ['i'] [('+'|'-') rational 'i']
    Scalar scalar_body() {
        Rat first = rational();
        ws();
        if (i < s.size() && s[i] == 'i') {
            ++i;
            return {Rat(0), first};
        }
        ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            bool neg = s[i] == '-';
            ++i;
            Rat second = rational();
            ws();
            if (i >= s.size() || s[i] != 'i') fail("expected i");
            ++i;
            return {first, neg ? Rat(-second) : second};
        }
        return {first, Rat(0)};
    }

    Term atom() {
        ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            if (starts_scalar()) {
                Scalar v = scalar_body();
                if (!accept(')')) fail("expected )");
                return Term::scalar(alpha, v);
            }
            Term t = expr();
            if (!accept(')')) fail("expected )");
            return t;
        }
        if (c == '1') {
            ++i;
            return Term::one(alpha);
        }
        if (c == 'g') {
            ++i;
            uint64_t n = integer();
            if (n == 0 || n > alpha.arity) fail("generator index out of range");
            return Term::gen(alpha, static_cast<uint32_t>(n));
        }
        if (c == 'e') {
            ++i;
            uint64_t j = 1;
            ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) j = integer();
            if (jones_gens.empty()) fail("symbol e not available in this presentation");
            if (j == 0 || j > jones_gens.size()) fail("Jones symbol index out of range");
            return Term::gen(alpha, jones_gens[j - 1] + 1);
        }
        fail("unexpected character");
    }

    Term postfixed() {
        Term t = atom();
        while (true) {
            ws();
            if (i < s.size() && s[i] == '\'') {
                ++i;
                t = t.adjoint();
            } else
                break;
        }
        return t;
    }

    Term product() {
        bool neg = false;
        ws();
        while (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') neg = !neg;
            ++i;
            ws();
        }
        Term t = postfixed();
        while (accept('*')) t = t * postfixed();
        return neg ? -t : t;
    }

    Term expr() {
        Term t = product();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i;
                t = t + product();
            } else if (c == '-') {
                ++i;
                t = t - product();
            } else
                break;
        }
        return t;
    }
};

}  // namespace

Term parse_term(const std::string& text, const Alphabet& alpha) {
    Parser p(text, alpha);
    Term t = p.expr();
    if (!p.eof()) p.fail("trailing input");
    return t;
}

std::string print_term(const Term& t) {
    if (t.is_zero()) return "(0/1)";
    const Alphabet& a = t.alphabet();
    std::vector<uint32_t> jones;
    for (uint32_t g = 0; g < a.arity; ++g)
        if (a.is_jones(g)) jones.push_back(g);
    auto letter_str = [&](Letter l) -> std::string {
        uint32_t g = letter_gen(l);
        if (a.is_jones(g)) {
            if (jones.size() == 1) return "e";
            size_t j = std::find(jones.begin(), jones.end(), g) - jones.begin();
            return "e" + std::to_string(j + 1);
        }
        std::string r = "g" + std::to_string(g + 1);
        if (letter_star(l)) r += "'";
        return r;
    };
    std::string out;
    bool first = true;
    for (const auto& m : t.monomials()) {
        if (!first) out += " + ";
        first = false;
        if (m.word.empty()) {
            out += scalar_str(m.coeff) + "*1";
            continue;
        }
        bool unit_coeff = (m.coeff == Scalar(1));
        if (!unit_coeff) out += scalar_str(m.coeff) + "*";
        for (size_t i = 0; i < m.word.size(); ++i) {
            if (i) out += "*";
            out += letter_str(m.word[i]);
        }
    }
    return out;
}

}  // namespace vnwb
