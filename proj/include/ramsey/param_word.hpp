#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/limits.hpp"
#include "ramsey/set_order.hpp"

namespace ramsey {

/// Alphabet of a parameter-word family.  Symbols serialize as their literal
/// tokens; tokens must be nonempty and must not look like variables (`x<i>`).
using Alphabet = std::vector<std::string>;

inline const Alphabet& zero_alphabet() {
    static const Alphabet a{"0"};
    return a;
}

/// One position of a parameter word: either an alphabet letter (0-based
/// index into the alphabet) or a variable x_i (1-based index).
///
/// The canonical symbol order puts every letter before every variable, each
/// class ordered by index; word comparisons and hom enumeration both use it.
struct PwSymbol {
    enum class Kind { Letter, Variable };
    Kind kind = Kind::Letter;
    int index = 0;

    static PwSymbol letter(int alphabet_index) { return {Kind::Letter, alphabet_index}; }
    static PwSymbol variable(int var_index) { return {Kind::Variable, var_index}; }

    bool is_variable() const { return kind == Kind::Variable; }

    friend bool operator==(const PwSymbol&, const PwSymbol&) = default;
    friend bool operator<(const PwSymbol& a, const PwSymbol& b) {
        if (a.kind != b.kind) return a.kind == Kind::Letter;
        return a.index < b.index;
    }
};

/// An m-parameter word of length n over a finite alphabet: a word over
/// alphabet ∪ {x_1..x_m} in which every variable occurs and first
/// occurrences appear in index order.  Morphism m -> n of the
/// Graham-Rothschild category under simultaneous substitution.
class ParamWord {
public:
    /// Detected validity violation; empty optional means the word is valid.
    struct Violation {
        Errc code;
        long a = 0;
        long b = 0;
    };

    static std::optional<Violation> find_violation(const Alphabet& alphabet, int n, int m,
                                                   const std::vector<PwSymbol>& symbols) {
        if (n < 1 || m < 0 || m > n || static_cast<int>(symbols.size()) != n)
            return Violation{Errc::InvalidArgument};
        std::vector<int> first(m + 1, 0);  // first occurrence, 1-based; 0 = absent
        for (int pos = 1; pos <= n; ++pos) {
            const PwSymbol& s = symbols[pos - 1];
            if (s.is_variable()) {
                if (s.index < 1 || s.index > m) return Violation{Errc::ForeignSymbol, s.index};
                if (first[s.index] == 0) first[s.index] = pos;
            } else if (s.index < 0 || s.index >= static_cast<int>(alphabet.size())) {
                return Violation{Errc::ForeignSymbol, s.index};
            }
        }
        for (int i = 1; i <= m; ++i)
            if (first[i] == 0) return Violation{Errc::MissingVariable, i};
        for (int i = 1; i < m; ++i)
            if (!(first[i] < first[i + 1])) return Violation{Errc::FirstOccurrenceOrder, i, i + 1};
        return std::nullopt;
    }

    /// Validates and constructs; throws the violated clause otherwise.
    static ParamWord validate(Alphabet alphabet, int n, int m, std::vector<PwSymbol> symbols) {
        if (auto v = find_violation(alphabet, n, m, symbols))
            throw Error(v->code, "invalid parameter word", v->a, v->b);
        return ParamWord(std::move(alphabet), n, m, std::move(symbols));
    }

    /// The identity morphism of GR at object n: the word x_1 x_2 ... x_n.
    static ParamWord identity(Alphabet alphabet, int n) {
        std::vector<PwSymbol> symbols;
        symbols.reserve(n);
        for (int i = 1; i <= n; ++i) symbols.push_back(PwSymbol::variable(i));
        return ParamWord(std::move(alphabet), n, n, std::move(symbols));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int length() const { return n_; }       /// n: the word length (codomain object)
    int arity() const { return m_; }        /// m: the parameter count (domain object)
    const std::vector<PwSymbol>& symbols() const { return symbols_; }

    /// Position sets X_i = w^{-1}(x_i), 1-based, one per variable.  Pairwise
    /// disjoint and nonempty with strictly increasing minima.
    std::vector<IntSet> variable_blocks() const {
        std::vector<IntSet> blocks(m_);
        for (int pos = 1; pos <= n_; ++pos) {
            const PwSymbol& s = symbols_[pos - 1];
            if (s.is_variable()) blocks[s.index - 1].push_back(pos);
        }
        return blocks;
    }

    /// Whitespace-separated token form, e.g. "x1 0 x1 x2".
    std::string text() const {
        std::ostringstream out;
        for (int pos = 0; pos < n_; ++pos) {
            if (pos) out << ' ';
            const PwSymbol& s = symbols_[pos];
            if (s.is_variable())
                out << 'x' << s.index;
            else
                out << alphabet_[s.index];
        }
        return out.str();
    }

    static ParamWord parse(const Alphabet& alphabet, const std::string& text) {
        std::istringstream in(text);
        std::vector<PwSymbol> symbols;
        std::string token;
        int max_var = 0;
        while (in >> token) {
            auto it = std::find(alphabet.begin(), alphabet.end(), token);
            if (it != alphabet.end()) {
                symbols.push_back(PwSymbol::letter(static_cast<int>(it - alphabet.begin())));
                continue;
            }
            if (token.size() >= 2 && token[0] == 'x' &&
                token.find_first_not_of("0123456789", 1) == std::string::npos) {
                const int idx = std::stoi(token.substr(1));
                if (idx >= 1) {
                    symbols.push_back(PwSymbol::variable(idx));
                    max_var = std::max(max_var, idx);
                    continue;
                }
            }
            throw Error(Errc::ForeignSymbol, "unknown token '" + token + "'");
        }
        if (symbols.empty()) throw Error(Errc::InvalidArgument, "empty parameter word");
        const int n = static_cast<int>(symbols.size());
        return validate(alphabet, n, max_var, std::move(symbols));
    }

    /// Canonical byte serialization: one byte per position, letters before
    /// variables.  Lexicographic order on keys is the canonical hom order.
    std::string key() const {
        std::string k;
        k.reserve(n_);
        const int base = static_cast<int>(alphabet_.size());
        for (const PwSymbol& s : symbols_)
            k.push_back(static_cast<char>(s.is_variable() ? base + s.index - 1 : s.index));
        return k;
    }

    friend bool operator==(const ParamWord&, const ParamWord&) = default;

private:
    ParamWord(Alphabet alphabet, int n, int m, std::vector<PwSymbol> symbols)
        : alphabet_(std::move(alphabet)), n_(n), m_(m), symbols_(std::move(symbols)) {}

    Alphabet alphabet_;
    int n_ = 0;
    int m_ = 0;
    std::vector<PwSymbol> symbols_;
};

/// Simultaneous substitution u · v: every occurrence of x_i in u is replaced
/// by the i-th symbol of v.  Requires u.arity() == v.length() and equal
/// alphabets; the result is in W^{u.n}_{v.m} and is revalidated.
inline ParamWord substitute(const ParamWord& u, const ParamWord& v) {
    if (u.alphabet() != v.alphabet())
        throw Error(Errc::ArityMismatch, "substitution across different alphabets");
    if (u.arity() != v.length())
        throw Error(Errc::ArityMismatch, "arity/length mismatch in substitution", u.arity(), v.length());
    std::vector<PwSymbol> symbols;
    symbols.reserve(u.length());
    for (const PwSymbol& s : u.symbols())
        symbols.push_back(s.is_variable() ? v.symbols()[s.index - 1] : s);
    // First-occurrence order is inherited from v; the validating constructor
    // asserts it rather than assuming it.
    return ParamWord::validate(u.alphabet(), u.length(), v.arity(), std::move(symbols));
}

/// All of W^n_m(alphabet) in canonical (key-lexicographic) order.
///
/// Enumeration is constructive: scanning positions left to right, a prefix
/// that has introduced t variables may continue with any letter, any x_j
/// with j <= t, or x_{t+1}; both validity clauses hold by construction.
inline std::vector<ParamWord> enumerate_words(const Alphabet& alphabet, int n, int m,
                                              std::size_t cap = Limits{}.hom_cap) {
    std::vector<ParamWord> out;
    if (m > n || n < 1 || m < 0) return out;
    std::vector<PwSymbol> prefix(n);
    const int letters = static_cast<int>(alphabet.size());

    auto extend = [&](auto&& self, int pos, int introduced) -> void {
        if (pos == n) {
            if (introduced == m) {
                if (out.size() >= cap)
                    throw Error(Errc::SizeLimitExceeded, "word enumeration exceeds cap",
                                static_cast<long>(cap));
                out.push_back(ParamWord::validate(alphabet, n, m, prefix));
            }
            return;
        }
        // Remaining positions must fit the variables still missing.
        const int missing = m - introduced;
        if (missing > n - pos) return;
        for (int a = 0; a < letters; ++a) {
            prefix[pos] = PwSymbol::letter(a);
            self(self, pos + 1, introduced);
        }
        const int top = std::min(introduced + 1, m);
        for (int j = 1; j <= top; ++j) {
            prefix[pos] = PwSymbol::variable(j);
            self(self, pos + 1, std::max(introduced, j));
        }
    };
    extend(extend, 0, 0);
    return out;
}

/// The Graham-Rothschild category GR(A, X): objects are positive integers,
/// hom(k, n) = W^n_k(A) (empty when k > n), composition is substitution.
class GrCategory {
public:
    using Object = int;
    using Morphism = ParamWord;

    explicit GrCategory(Alphabet alphabet = zero_alphabet(), Limits limits = {})
        : alphabet_(std::move(alphabet)), limits_(limits) {}

    const Alphabet& alphabet() const { return alphabet_; }

    std::vector<Morphism> hom(Object k, Object n) const {
        if (k < 0 || n < 0) throw Error(Errc::InvalidArgument, "objects are positive integers");
        return enumerate_words(alphabet_, n, k, limits_.hom_cap);
    }

    Morphism compose(const Morphism& g, const Morphism& f) const {
        if (g.arity() != f.length())
            throw Error(Errc::DomainMismatch, "codomain of f is not domain of g", g.arity(),
                        f.length());
        return substitute(g, f);
    }

    Morphism identity(Object n) const { return ParamWord::identity(alphabet_, n); }

    std::string key(const Morphism& w) const { return w.key(); }

    friend bool operator==(const GrCategory& a, const GrCategory& b) {
        return a.alphabet_ == b.alphabet_;
    }

private:
    Alphabet alphabet_;
    Limits limits_;
};

}  // namespace ramsey
