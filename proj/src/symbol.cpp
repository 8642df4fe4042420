#include "kappa/symbol.hpp"

#include "kappa/error.hpp"

namespace kappa {

  Symbol Symbol::base(char letter) {
    if (!is_letter(letter)) {
      throw AlgebraError(std::string("invalid base letter '") + letter + "'");
    }
    Symbol s;
    s.kind_   = Kind::base;
    s.letter_ = letter;
    return s;
  }

  Symbol Symbol::window(std::string word) {
    if (word.size() < 2) {
      throw AlgebraError("window letters have length at least 2");
    }
    for (char c : word) {
      if (!is_letter(c)) {
        throw AlgebraError("invalid letter in window [" + word + "]");
      }
    }
    Symbol s;
    s.kind_   = Kind::window;
    s.letter_ = '\0';
    s.word_   = std::move(word);
    return s;
  }

  Symbol Symbol::pair(std::string first, char letter) {
    for (char c : first) {
      if (!is_letter(c)) {
        throw AlgebraError("invalid letter in pair <" + first + ",...>");
      }
    }
    if (!is_letter(letter)) {
      throw AlgebraError("invalid second component in pair letter");
    }
    Symbol s;
    s.kind_   = Kind::pair;
    s.letter_ = letter;
    s.word_   = std::move(first);
    return s;
  }

  std::string Symbol::to_string() const {
    switch (kind_) {
      case Kind::base:
        return std::string(1, letter_);
      case Kind::window:
        return "[" + word_ + "]";
      case Kind::pair:
        return "<" + word_ + "," + std::string(1, letter_) + ">";
    }
    return {};
  }

  SymbolWord to_symbols(std::string_view base_word) {
    SymbolWord result;
    result.reserve(base_word.size());
    for (char c : base_word) {
      result.push_back(Symbol::base(c));
    }
    return result;
  }

  std::string to_base_word(SymbolWord const& word) {
    std::string result;
    result.reserve(word.size());
    for (auto const& s : word) {
      if (!s.is_base()) {
        throw AlgebraError("expected a base letter, found " + s.to_string());
      }
      result.push_back(s.letter());
    }
    return result;
  }

  std::string to_string(SymbolWord const& word) {
    std::string result;
    for (auto const& s : word) {
      result += s.to_string();
    }
    return result;
  }

  std::size_t SymbolHash::operator()(Symbol const& s) const noexcept {
    std::size_t h = std::hash<std::string>{}(s.word());
    h ^= (static_cast<std::size_t>(s.letter()) << 8)
         ^ static_cast<std::size_t>(s.kind());
    return h * 0x9e3779b97f4a7c15ULL;
  }

}  // namespace kappa
