#include "vnwb/enumeration.hpp"

#include <algorithm>
#include <map>

namespace vnwb {

std::vector<Word> canonical_words(const Alphabet& a, size_t len) {
    std::vector<Word> out;
    Word cur;
    // letters in id order; skip starred Jones letters and adjacent equal Jones letters
    std::vector<Letter> letters;
    for (uint32_t g = 0; g < a.arity; ++g) {
        letters.push_back(make_letter(g, false));
        if (!a.is_jones(g)) letters.push_back(make_letter(g, true));
    }
    std::sort(letters.begin(), letters.end());
    auto rec = [&](auto&& self, size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (Letter l : letters) {
            if (!cur.empty() && a.is_jones(letter_gen(l)) && cur.back() == l) continue;
            cur.push_back(l);
            self(self, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, len);
    return out;
}

namespace {

std::vector<Rat> rationals_up_to_height(uint32_t h) {
    std::vector<Rat> out;
    out.emplace_back(0);
    for (long d = 1; d <= h; ++d)
        for (long n = 1; n <= static_cast<long>(h); ++n) {
            if (mpz_class(n) % mpz_class(d) == 0 && d > 1) {
                // skip non-reduced only when gcd > 1; cheap gcd below
            }
            Rat r(n, d);
            r.canonicalize();
            if (rat_height(r) == Int(std::max(n, d))) {
                // reduced exactly when canonical form kept num=n, den=d
            }
            if (r.get_num() == n && r.get_den() == d) {
                out.push_back(r);
                out.push_back(Rat(-r));
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

const std::vector<Scalar>& scalars_of_height(uint32_t h) {
    static std::mutex mu;
    static std::map<uint32_t, std::vector<Scalar>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    std::vector<Scalar> out;
    auto all = rationals_up_to_height(h);
    for (const Rat& re : all)
        for (const Rat& im : all) {
            Scalar z{re, im};
            if (z.is_zero()) continue;
            if (scalar_height(z) == Int(static_cast<long>(h))) out.push_back(z);
        }
    std::sort(out.begin(), out.end());
    return cache.emplace(h, std::move(out)).first->second;
}

std::vector<Term> TermEnumerator::build_stage(size_t s) const {
    std::vector<Term> stage;
    if (s == 0) {
        stage.push_back(Term::zero(opt_.alpha));
        return stage;
    }
    // monomial pool by weight v = |word| + height(coeff), 1 <= v <= s
    std::vector<std::vector<Monomial>> pool(s + 1);
    for (size_t v = 1; v <= s; ++v) {
        for (size_t len = opt_.include_unit ? 0 : 1; len < v; ++len) {
            uint32_t h = static_cast<uint32_t>(v - len);
            const auto& coeffs = scalars_of_height(h);
            for (const Word& w : canonical_words(opt_.alpha, len))
                for (const Scalar& c : coeffs) pool[v].push_back({w, c});
        }
        std::sort(pool[v].begin(), pool[v].end(), [](const Monomial& a, const Monomial& b) {
            int c = compare_words(a.word, b.word);
            if (c != 0) return c < 0;
            return a.coeff < b.coeff;
        });
    }
    std::vector<Monomial> cur;
    uint64_t emitted = 0;
    auto rec = [&](auto&& self, size_t remaining, const Word* min_word) -> void {
        for (size_t v = 1; v <= remaining; ++v) {
            for (const Monomial& m : pool[v]) {
                if (min_word && compare_words(m.word, *min_word) <= 0) continue;
                cur.push_back(m);
                if (v == remaining) {
                    stage.emplace_back(opt_.alpha, cur);
                    if (++emitted > opt_.max_stage_terms)
                        throw BudgetError("enumeration",
                                          "enumeration stage " + std::to_string(s) +
                                              " exceeds the stage safety cap");
                } else {
                    self(self, remaining - v, &cur.back().word);
                }
                cur.pop_back();
            }
        }
    };
    rec(rec, s, nullptr);
    std::sort(stage.begin(), stage.end(),
              [](const Term& a, const Term& b) { return Term::compare(a, b) < 0; });
    return stage;
}

void TermEnumerator::ensure_stage(size_t s) const {
    if (stages_.size() > s) return;
    while (stages_.size() <= s) {
        size_t next = stages_.size();
        stages_.push_back(build_stage(next));
        begin_.push_back(next == 0 ? 0 : begin_[next - 1] + stages_[next - 1].size());
    }
}

Term TermEnumerator::at(uint64_t index) const {
    std::lock_guard<std::mutex> lk(mu_);
    size_t s = 0;
    while (true) {
        ensure_stage(s);
        uint64_t b = begin_[s];
        if (index < b + stages_[s].size()) return stages_[s][index - b];
        ++s;
    }
}

uint64_t TermEnumerator::stage_begin(size_t s) const {
    std::lock_guard<std::mutex> lk(mu_);
    ensure_stage(s);
    return begin_[s];
}

size_t TermEnumerator::stages_built() const {
    std::lock_guard<std::mutex> lk(mu_);
    return stages_.size();
}

std::optional<uint64_t> TermEnumerator::index_of(const Term& t) const {
    if (!(t.alphabet() == opt_.alpha)) return std::nullopt;
    if (!opt_.include_unit)
        for (const auto& m : t.monomials())
            if (m.word.empty()) return std::nullopt;
    Int wt = t.size_weight();
    if (wt > 64) return std::nullopt;  // replay guard
    size_t s = static_cast<size_t>(wt.get_ui());
    std::lock_guard<std::mutex> lk(mu_);
    ensure_stage(s);
    const auto& stage = stages_[s];
    auto it = std::lower_bound(stage.begin(), stage.end(), t, [](const Term& a, const Term& b) {
        return Term::compare(a, b) < 0;
    });
    if (it == stage.end() || !(*it == t)) return std::nullopt;
    return begin_[s] + static_cast<uint64_t>(it - stage.begin());
}

}  // namespace vnwb
