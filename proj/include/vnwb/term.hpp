#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vnwb/rational.hpp"

namespace vnwb {

/// Generator alphabet of a presentation.  Letters are generator symbols
/// g1..g<arity>; a letter may be flagged as a Jones projection symbol, in
/// which case the syntactic axioms e* = e and e*e = e are applied eagerly
/// during word normalization.
struct Alphabet {
    uint32_t arity = 0;
    uint64_t jones_mask = 0;  // bit g set: generator g (0-based) is a Jones symbol

    bool is_jones(uint32_t gen) const { return gen < 64 && (jones_mask >> gen) & 1u; }
    /// Extends the alphabet by one Jones symbol (used by basic constructions).
    Alphabet with_jones() const {
        Alphabet a = *this;
        a.jones_mask |= (uint64_t{1} << a.arity);
        a.arity += 1;
        return a;
    }
    uint32_t jones_count() const {
        uint32_t c = 0;
        for (uint32_t g = 0; g < arity; ++g)
            if (is_jones(g)) ++c;
        return c;
    }
    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.arity == b.arity && a.jones_mask == b.jones_mask;
    }
};

/// A letter is a generator index with a star flag: id = 2*gen + star.
/// Jones letters are always stored unstarred.
using Letter = uint32_t;
inline Letter make_letter(uint32_t gen, bool star) { return gen * 2 + (star ? 1 : 0); }
inline uint32_t letter_gen(Letter l) { return l / 2; }
inline bool letter_star(Letter l) { return l & 1; }

using Word = std::vector<Letter>;

/// Canonical word normalization under the alphabet's syntactic axioms:
/// Jones letters drop their star and adjacent equal Jones letters collapse.
void normalize_word(Word& w, const Alphabet& a);
Word word_adjoint(const Word& w, const Alphabet& a);
/// Shortlex: by length, then by letter ids.
int compare_words(const Word& a, const Word& b);
bool word_valid(const Word& w, const Alphabet& a);

struct Monomial {
    Word word;
    Scalar coeff;
};

/// A rational *-polynomial point in canonical flattened form: a sorted list
/// of distinct canonical words with nonzero Gaussian-rational coefficients.
/// Terms are immutable values; all operations are pure.
class Term {
  public:
    Term() = default;
    explicit Term(Alphabet a) : alpha_(a) {}
    Term(Alphabet a, std::vector<Monomial> monos);

    static Term zero(Alphabet a) { return Term(a); }
    static Term one(Alphabet a) { return Term(a, {{Word{}, Scalar(1)}}); }
    static Term scalar(Alphabet a, const Scalar& c) {
        if (c.is_zero()) return Term(a);
        return Term(a, {{Word{}, c}});
    }
    /// The bare generator g (1-based index).
    static Term gen(Alphabet a, uint32_t g1based, bool star = false);

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Monomial>& monomials() const { return monos_; }
    bool is_zero() const { return monos_.empty(); }
    size_t monomial_count() const { return monos_.size(); }
    /// Largest word length.
    size_t degree() const;

    Term adjoint() const;
    Term scaled(const Scalar& c) const;

    friend Term operator+(const Term& a, const Term& b);
    friend Term operator-(const Term& a, const Term& b);
    friend Term operator*(const Term& a, const Term& b);
    Term operator-() const { return scaled(Scalar(-1)); }
    friend bool operator==(const Term& a, const Term& b) {
        return a.alpha_ == b.alpha_ && a.monos_.size() == b.monos_.size() &&
               std::equal(a.monos_.begin(), a.monos_.end(), b.monos_.begin(),
                          [](const Monomial& x, const Monomial& y) {
                              return x.word == y.word && x.coeff == y.coeff;
                          });
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

    /// Total order on canonical forms: monomial sequences compared
    /// lexicographically, each monomial by (word shortlex, coefficient).
    static int compare(const Term& a, const Term& b);

    /// Enumeration size: sum over monomials of |word| + height(coeff);
    /// the zero term has size 0.  See enumeration.hpp.
    Int size_weight() const;

    /// l1 coefficient bound: sum of rational upper bounds on |coeff|.  A
    /// sound operator-norm bound whenever every generator is a contraction.
    Rat l1_bound() const;

    std::string str() const;

  private:
    Alphabet alpha_;
    std::vector<Monomial> monos_;
};

/// Parses the term grammar.  Identifiers g<n>, the unit 1, postfix ' for
/// adjoint, + - * and parentheses, scalar literals (a/b), (a/b+c/d i),
/// (c/d i); the reserved symbol e (and e<j>) denotes Jones letters when the
/// alphabet has them.  Whitespace insensitive.  Throws ParseError with a
/// character position on malformed input or out-of-range generators.
struct ParseError : ConfigError {
    size_t pos;
    ParseError(const std::string& what, size_t p) : ConfigError(what), pos(p) {}
};
Term parse_term(const std::string& text, const Alphabet& alpha);

/// Canonical printing; parse(print(t)) has the same flattened form as t.
std::string print_term(const Term& t);

/// Flat-bound modes.  Universal mode is the l1 coefficient bound, sound in
/// every *-algebra whose generators are contractions.  Model mode is the
/// backend operator norm (see presentation.hpp / backend.hpp).
enum class FlatMode { universal, model };

struct FlatBound {
    Rat value;
    FlatMode mode;
};

inline FlatBound flat_bound_universal(const Term& t) { return {t.l1_bound(), FlatMode::universal}; }

}  // namespace vnwb
