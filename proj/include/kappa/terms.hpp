// Kappa-terms: words built from letters, concatenation and the
// (omega - 1)-power.

#ifndef KAPPA_TERMS_HPP_
#define KAPPA_TERMS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/finsemi.hpp"
#include "kappa/symbol.hpp"

namespace kappa {

  //! An immutable kappa-term. Construction is canonical: concatenations are
  //! flattened and never contain the empty term or a single child, and the
  //! (omega - 1)-power of the empty term is the empty term. Structurally
  //! equal terms therefore compare equal with operator==.
  //!
  //! The primitive power is x^(omega-1); x^omega, x^(omega+q) and
  //! x^(omega-q) are expressed through it (see parse_term).
  class Term {
   public:
    enum class Kind : unsigned char { empty, letter, concat, power };

    //! The empty term.
    Term();

    static Term letter(Symbol a);
    //! The word over base letters (empty string gives the empty term).
    static Term word(std::string_view base_word);
    static Term word(SymbolWord const& w);
    static Term concat(std::vector<Term> factors);
    static Term omega_minus_one(Term const& base);
    //! x^(omega-1) repeated q times, i.e. x^(omega-q); q >= 1.
    static Term omega_minus(Term const& base, std::size_t q);
    //! x repeated m times (m = 0 gives the empty term).
    static Term repeat(Term const& base, std::size_t m);

    Kind kind() const noexcept;
    bool is_empty() const noexcept {
      return kind() == Kind::empty;
    }
    //! True iff the term contains no power node, i.e. denotes a finite word.
    bool is_finite() const noexcept;
    //! Length of the denoted word when is_finite() (saturating).
    std::size_t finite_length() const noexcept;
    //! Number of letter occurrences in the tree.
    std::size_t letter_count() const noexcept;
    //! Maximum nesting depth of power nodes.
    std::size_t power_depth() const noexcept;

    //! Valid for letters.
    Symbol const& symbol() const;
    //! Valid for concatenations (>= 2 factors) and powers (1 child).
    std::span<Term const> children() const noexcept;
    //! Valid for powers.
    Term const& base() const;

    std::size_t hash() const noexcept;

    friend bool operator==(Term const& x, Term const& y) noexcept;

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    std::shared_ptr<Node const> node_;
  };

  //! Concatenation.
  Term operator*(Term const& x, Term const& y);

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept {
      return t.hash();
    }
  };

  struct ParseOptions {
    //! Upper bound on the number of letter occurrences after numeric
    //! exponents have been unfolded.
    std::size_t max_letters = 10'000;
  };

  //! Parses the grammar
  //!
  //!     term   := factor+
  //!     factor := atom ('^' exp)?
  //!     atom   := LETTER | '(' term ')' | '[' LETTER+ ']' | '<' LETTER* ',' LETTER '>'
  //!     exp    := 'w' | 'w-' NAT | 'w+' NAT | NAT
  //!
  //! with whitespace ignored. An exponent may also be wrapped in braces, as
  //! in `a^{w-1}`, and the text `1` denotes the empty term. Sugar is
  //! removed: x^w = x^(w-1) x, x^(w+q) = x^(w-1) x^(q+1),
  //! x^(w-q) = (x^(w-1))^q, and x^n is unfolded. Throws ParseError.
  Term parse_term(std::string_view text, ParseOptions const& options = {});

  //! Prints in the grammar accepted by parse_term; the empty term is `1`.
  std::string to_string(Term const& t);

  //! Evaluation in S^1: letters through \p gens, products by the table,
  //! powers by omega_minus_q(., 1), the empty term to the identity.
  //! Throws AlgebraError for symbols outside the generator map.
  MonoidElement eval(Term const& t, FiniteSemigroup const& S,
                     GeneratorMap const& gens);

  //! The word denoted by \p t if it has no power node, otherwise nullopt
  //! (the term lies in the ideal of infinite pseudowords).
  std::optional<SymbolWord> word_or_infinite(Term const& t);
  //! As word_or_infinite, for terms over base letters.
  std::optional<std::string> finite_base_word(Term const& t);

  //! The word obtained by replacing every x^(omega-1) by x^e, recursively.
  //! Throws CapacityError if the result would exceed \p max_length.
  SymbolWord expand(Term const& t, std::size_t e,
                    std::size_t max_length = 50'000'000);
  std::string expand_base(Term const& t, std::size_t e,
                          std::size_t max_length = 50'000'000);

  //! The length of expand(t, e), without building the word (saturating).
  std::size_t expanded_length(Term const& t, std::size_t e);

  //! The first / last \p n letters of expand(t, e), without building the
  //! whole word.
  std::string expand_prefix(Term const& t, std::size_t e, std::size_t n);
  std::string expand_suffix(Term const& t, std::size_t e, std::size_t n);

  //! The set of letters occurring in \p t.
  std::set<Symbol> content(Term const& t);

  //! Applies \p f to every letter; \p f returns the replacement term. The
  //! result is rebuilt canonically, so letters may map to the empty term.
  template <typename F>
  Term substitute(Term const& t, F&& f) {
    switch (t.kind()) {
      case Term::Kind::empty:
        return t;
      case Term::Kind::letter:
        return f(t.symbol());
      case Term::Kind::concat: {
        std::vector<Term> parts;
        for (auto const& c : t.children()) {
          parts.push_back(substitute(c, f));
        }
        return Term::concat(std::move(parts));
      }
      case Term::Kind::power:
        return Term::omega_minus_one(substitute(t.base(), f));
    }
    return t;
  }

}  // namespace kappa

#endif  // KAPPA_TERMS_HPP_
