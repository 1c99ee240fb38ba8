#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "vnwb/term.hpp"

namespace vnwb {

/// Canonical computable enumeration of all rational points of a presentation,
/// surjective onto canonical flattened forms and injective on them.
///
/// Order (fixed; every search in this library returns the FIRST witness in
/// this order):
///   * index 0 is the zero term;
///   * stage s >= 1 lists every canonical term of size s, where
///     size = sum over monomials of (word length + coefficient height) and
///     the height of a Gaussian rational is the max of |numerator| and
///     denominator of its real and imaginary parts in lowest terms;
///   * within a stage, terms are sorted by Term::compare (monomial lists
///     lexicographically; a monomial by shortlex word, then coefficient).
///
/// Stages are finite and materialized on demand.  When `include_unit` is
/// false the empty word is excluded (rational points of a presentation that
/// does not list 1 as a special point).
class TermEnumerator {
  public:
    struct Options {
        Alphabet alpha;
        bool include_unit = true;
        uint64_t max_stage_terms = 80'000'000;  // hard safety cap
    };

    explicit TermEnumerator(Options o) : opt_(o) {}

    const Options& options() const { return opt_; }

    /// Term at 0-based index.  Materializes stages as needed; throws
    /// BudgetError if a stage would exceed the safety cap.
    Term at(uint64_t index) const;

    /// Count of terms with enumeration index < first index of stage s.
    uint64_t stage_begin(size_t s) const;

    /// Least index of a canonical term, replaying the enumeration through
    /// the term's stage.  Returns nullopt for terms over a different
    /// alphabet or containing the unit when excluded.
    std::optional<uint64_t> index_of(const Term& t) const;

    /// Number of fully materialized stages so far (diagnostics).
    size_t stages_built() const;

  private:
    void ensure_stage(size_t s) const;
    std::vector<Term> build_stage(size_t s) const;

    Options opt_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Term>> stages_;
    mutable std::vector<uint64_t> begin_;  // begin_[s] = index of first term of stage s
};

/// All canonical words over the alphabet with the given length, in lex order.
std::vector<Word> canonical_words(const Alphabet& a, size_t len);

/// All Gaussian rationals of exact height h, sorted by (re, im).
const std::vector<Scalar>& scalars_of_height(uint32_t h);

}  // namespace vnwb
