#ifndef KAPPA_SYMBOL_HPP_
#define KAPPA_SYMBOL_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

  //! A letter of one of the three alphabets the library works with:
  //!
  //! * base letters `a`, `b`, ... of the alphabet A;
  //! * window letters `[a1...a(k+1)]`, i.e. elements of A^(k+1), which are
  //!   the output letters of the superposition map;
  //! * pairs `<w,a>` with |w| <= k, i.e. elements of B_k = A_k^1 x A.
  //!
  //! Composite letters keep the underlying base word so that they can be
  //! printed and re-parsed without side tables. The bound k of a pair letter
  //! is not stored; operations that need it take it as a parameter.
  class Symbol {
   public:
    enum class Kind : unsigned char { base, window, pair };

    Symbol() = default;

    static Symbol base(char letter);
    static Symbol window(std::string word);
    static Symbol pair(std::string first, char letter);

    Kind kind() const noexcept {
      return kind_;
    }
    bool is_base() const noexcept {
      return kind_ == Kind::base;
    }
    //! The base letter (base symbols) or the second component (pairs).
    char letter() const noexcept {
      return letter_;
    }
    //! The window word, or the first component of a pair.
    std::string const& word() const noexcept {
      return word_;
    }

    std::string to_string() const;

    friend bool operator==(Symbol const&, Symbol const&) = default;
    friend std::strong_ordering operator<=>(Symbol const&,
                                            Symbol const&) = default;

   private:
    Kind        kind_   = Kind::base;
    char        letter_ = 'a';
    std::string word_;
  };

  //! A word over an arbitrary alphabet of symbols.
  using SymbolWord = std::vector<Symbol>;

  //! True for the characters allowed as base letters.
  constexpr bool is_letter(char c) noexcept {
    return c >= 'a' && c <= 'z';
  }

  SymbolWord  to_symbols(std::string_view base_word);
  //! Throws AlgebraError if some symbol is not a base letter.
  std::string to_base_word(SymbolWord const& word);
  std::string to_string(SymbolWord const& word);

  struct SymbolHash {
    std::size_t operator()(Symbol const& s) const noexcept;
  };

}  // namespace kappa

#endif  // KAPPA_SYMBOL_HPP_
