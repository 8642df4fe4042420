#include "kappa/terms.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "kappa/error.hpp"

namespace kappa {

  namespace {
    constexpr std::size_t saturated = std::numeric_limits<std::size_t>::max();

    std::size_t sat_add(std::size_t x, std::size_t y) {
      return x > saturated - y ? saturated : x + y;
    }
    std::size_t sat_mul(std::size_t x, std::size_t y) {
      return (y != 0 && x > saturated / y) ? saturated : x * y;
    }
    std::size_t mix(std::size_t h, std::size_t v) {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  }  // namespace

  struct Term::Node {
    Kind              kind = Kind::empty;
    Symbol            symbol;
    std::vector<Term> children;
    std::size_t       hash          = 0;
    bool              finite        = true;
    std::size_t       finite_length = 0;
    std::size_t       letter_count  = 0;
    std::size_t       power_depth   = 0;
  };

  Term::Term() : node_(nullptr) {}

  Term Term::letter(Symbol a) {
    auto node           = std::make_shared<Node>();
    node->kind          = Kind::letter;
    node->hash          = mix(1, SymbolHash{}(a));
    node->symbol        = std::move(a);
    node->finite        = true;
    node->finite_length = 1;
    node->letter_count  = 1;
    return Term(std::move(node));
  }

  Term Term::word(std::string_view base_word) {
    return word(to_symbols(base_word));
  }

  Term Term::word(SymbolWord const& w) {
    std::vector<Term> letters;
    letters.reserve(w.size());
    for (auto const& a : w) {
      letters.push_back(letter(a));
    }
    return concat(std::move(letters));
  }

  Term Term::concat(std::vector<Term> factors) {
    std::vector<Term> flat;
    flat.reserve(factors.size());
    for (auto& f : factors) {
      if (f.kind() == Kind::concat) {
        auto ch = f.children();
        flat.insert(flat.end(), ch.begin(), ch.end());
      } else if (!f.is_empty()) {
        flat.push_back(std::move(f));
      }
    }
    if (flat.empty()) {
      return Term();
    }
    if (flat.size() == 1) {
      return flat.front();
    }
    auto node  = std::make_shared<Node>();
    node->kind = Kind::concat;
    node->hash = 2;
    for (auto const& f : flat) {
      node->hash          = mix(node->hash, f.hash());
      node->finite        = node->finite && f.is_finite();
      node->finite_length = sat_add(node->finite_length, f.finite_length());
      node->letter_count  = sat_add(node->letter_count, f.letter_count());
      node->power_depth   = std::max(node->power_depth, f.power_depth());
    }
    if (!node->finite) {
      node->finite_length = 0;
    }
    node->children = std::move(flat);
    return Term(std::move(node));
  }

  Term Term::omega_minus_one(Term const& base) {
    if (base.is_empty()) {
      return Term();
    }
    auto node           = std::make_shared<Node>();
    node->kind          = Kind::power;
    node->hash          = mix(3, base.hash());
    node->finite        = false;
    node->finite_length = 0;
    node->letter_count  = base.letter_count();
    node->power_depth   = base.power_depth() + 1;
    node->children      = {base};
    return Term(std::move(node));
  }

  Term Term::omega_minus(Term const& base, std::size_t q) {
    if (q == 0) {
      throw PreconditionError("omega_minus requires q >= 1");
    }
    return repeat(omega_minus_one(base), q);
  }

  Term Term::repeat(Term const& base, std::size_t m) {
    return concat(std::vector<Term>(m, base));
  }

  Term::Kind Term::kind() const noexcept {
    return node_ ? node_->kind : Kind::empty;
  }

  bool Term::is_finite() const noexcept {
    return node_ ? node_->finite : true;
  }

  std::size_t Term::finite_length() const noexcept {
    return node_ ? node_->finite_length : 0;
  }

  std::size_t Term::letter_count() const noexcept {
    return node_ ? node_->letter_count : 0;
  }

  std::size_t Term::power_depth() const noexcept {
    return node_ ? node_->power_depth : 0;
  }

  Symbol const& Term::symbol() const {
    if (kind() != Kind::letter) {
      throw PreconditionError("symbol() of a non-letter term");
    }
    return node_->symbol;
  }

  std::span<Term const> Term::children() const noexcept {
    if (!node_) {
      return {};
    }
    return node_->children;
  }

  Term const& Term::base() const {
    if (kind() != Kind::power) {
      throw PreconditionError("base() of a non-power term");
    }
    return node_->children.front();
  }

  std::size_t Term::hash() const noexcept {
    return node_ ? node_->hash : 0;
  }

  bool operator==(Term const& x, Term const& y) noexcept {
    if (x.node_ == y.node_) {
      return true;
    }
    if (x.kind() != y.kind() || x.hash() != y.hash()) {
      return false;
    }
    if (x.kind() == Term::Kind::letter) {
      return x.node_->symbol == y.node_->symbol;
    }
    return std::equal(x.node_->children.begin(), x.node_->children.end(),
                      y.node_->children.begin(), y.node_->children.end());
  }

  Term operator*(Term const& x, Term const& y) {
    return Term::concat({x, y});
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      Parser(std::string_view text, ParseOptions const& options)
          : text_(text), options_(options) {}

      Term parse() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '1') {
          ++pos_;
          skip();
          if (pos_ != text_.size()) {
            fail("'1' (the empty term) must stand alone");
          }
          return Term();
        }
        Term t = term();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError("term parse error at offset " + std::to_string(pos_)
                         + ": " + msg + " in \"" + std::string(text_) + "\"");
      }

      void skip() {
        while (pos_ < text_.size()
               && (text_[pos_] == ' ' || text_[pos_] == '\t'
                   || text_[pos_] == '\n' || text_[pos_] == '\r')) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      char letter() {
        skip();
        if (pos_ == text_.size() || !is_letter(text_[pos_])) {
          fail("expected a letter");
        }
        return text_[pos_++];
      }

      std::size_t nat() {
        skip();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(
                                        text_[pos_]))) {
          fail("expected a number");
        }
        std::size_t value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = sat_add(sat_mul(value, 10),
                          static_cast<std::size_t>(text_[pos_] - '0'));
          ++pos_;
        }
        return value;
      }

      bool at_atom_start() {
        skip();
        if (pos_ == text_.size()) {
          return false;
        }
        char c = text_[pos_];
        return is_letter(c) || c == '(' || c == '[' || c == '<';
      }

      Term term() {
        std::vector<Term> factors;
        while (at_atom_start()) {
          factors.push_back(factor());
          check_size(factors.back());
        }
        if (factors.empty()) {
          fail("expected a term");
        }
        Term t = Term::concat(std::move(factors));
        check_size(t);
        return t;
      }

      void check_size(Term const& t) const {
        if (t.letter_count() > options_.max_letters) {
          throw ParseError("term exceeds the limit of "
                           + std::to_string(options_.max_letters)
                           + " letters after unfolding exponents");
        }
      }

      Term atom() {
        skip();
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          Term t = term();
          expect(')');
          return t;
        }
        if (c == '[') {
          ++pos_;
          std::string w;
          while (!peek(']')) {
            w.push_back(letter());
          }
          ++pos_;
          if (w.size() < 2) {
            fail("window letters have length at least 2");
          }
          return Term::letter(Symbol::window(std::move(w)));
        }
        if (c == '<') {
          ++pos_;
          std::string w;
          while (!peek(',')) {
            w.push_back(letter());
          }
          ++pos_;
          char a = letter();
          expect('>');
          return Term::letter(Symbol::pair(std::move(w), a));
        }
        return Term::letter(Symbol::base(letter()));
      }

      Term factor() {
        Term x = atom();
        if (!peek('^')) {
          return x;
        }
        ++pos_;
        bool braced = peek('{');
        if (braced) {
          ++pos_;
        }
        Term result;
        skip();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
          ++pos_;
          if (peek('-')) {
            ++pos_;
            std::size_t q = nat();
            if (sat_mul(x.letter_count(), q) > options_.max_letters) {
              throw ParseError("term exceeds the limit of "
                               + std::to_string(options_.max_letters)
                               + " letters after unfolding exponents");
            }
            result = q == 0 ? Term::omega_minus_one(x) * x
                                   : Term::omega_minus(x, q);
          } else if (peek('+')) {
            ++pos_;
            std::size_t q = nat();
            if (sat_mul(x.letter_count(), sat_add(q, 2))
                > options_.max_letters) {
              throw ParseError("term exceeds the limit of "
                               + std::to_string(options_.max_letters)
                               + " letters after unfolding exponents");
            }
            result = Term::omega_minus_one(x) * Term::repeat(x, q + 1);
          } else {
            result = Term::omega_minus_one(x) * x;
          }
        } else {
          std::size_t n = nat();
          if (n == 0) {
            fail("zero exponent");
          }
          if (sat_mul(x.letter_count(), n) > options_.max_letters) {
            throw ParseError("term exceeds the limit of "
                             + std::to_string(options_.max_letters)
                             + " letters after unfolding exponents");
          }
          result = Term::repeat(x, n);
        }
        if (braced) {
          expect('}');
        }
        return result;
      }

      std::string_view    text_;
      ParseOptions const& options_;
      std::size_t         pos_ = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text, ParseOptions const& options) {
    return Parser(text, options).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void print(Term const& t, std::string& out);

    void print_power(Term const& t, std::string& out) {
      Term const& x = t.base();
      if (x.kind() == Term::Kind::letter) {
        out += x.symbol().to_string();
      } else {
        out += '(';
        print(x, out);
        out += ')';
      }
      out += "^w-1";
    }

    void print(Term const& t, std::string& out) {
      switch (t.kind()) {
        case Term::Kind::empty:
          out += '1';
          break;
        case Term::Kind::letter:
          out += t.symbol().to_string();
          break;
        case Term::Kind::concat:
          for (auto const& c : t.children()) {
            print(c, out);
          }
          break;
        case Term::Kind::power:
          print_power(t, out);
          break;
      }
    }
  }  // namespace

  std::string to_string(Term const& t) {
    std::string out;
    print(t, out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation and expansion
  ////////////////////////////////////////////////////////////////////////

  MonoidElement eval(Term const& t, FiniteSemigroup const& S,
                     GeneratorMap const& gens) {
    switch (t.kind()) {
      case Term::Kind::empty:
        return std::nullopt;
      case Term::Kind::letter:
        return gens(t.symbol());
      case Term::Kind::concat: {
        MonoidElement acc;
        for (auto const& c : t.children()) {
          acc = S.product(acc, eval(c, S, gens));
        }
        return acc;
      }
      case Term::Kind::power: {
        MonoidElement x = eval(t.base(), S, gens);
        if (!x) {
          return std::nullopt;
        }
        return omega_minus_q(S, *x, 1);
      }
    }
    return std::nullopt;
  }

  namespace {
    void collect_letters(Term const& t, SymbolWord& out) {
      if (t.kind() == Term::Kind::letter) {
        out.push_back(t.symbol());
      } else {
        for (auto const& c : t.children()) {
          collect_letters(c, out);
        }
      }
    }
  }  // namespace

  std::optional<SymbolWord> word_or_infinite(Term const& t) {
    if (!t.is_finite()) {
      return std::nullopt;
    }
    SymbolWord w;
    w.reserve(t.finite_length());
    collect_letters(t, w);
    return w;
  }

  std::optional<std::string> finite_base_word(Term const& t) {
    auto w = word_or_infinite(t);
    if (!w) {
      return std::nullopt;
    }
    return to_base_word(*w);
  }

  std::size_t expanded_length(Term const& t, std::size_t e) {
    switch (t.kind()) {
      case Term::Kind::empty:
        return 0;
      case Term::Kind::letter:
        return 1;
      case Term::Kind::concat: {
        std::size_t n = 0;
        for (auto const& c : t.children()) {
          n = sat_add(n, expanded_length(c, e));
        }
        return n;
      }
      case Term::Kind::power:
        return sat_mul(e, expanded_length(t.base(), e));
    }
    return 0;
  }

  namespace {
    void expand_into(Term const& t, std::size_t e, SymbolWord& out) {
      switch (t.kind()) {
        case Term::Kind::empty:
          break;
        case Term::Kind::letter:
          out.push_back(t.symbol());
          break;
        case Term::Kind::concat:
          for (auto const& c : t.children()) {
            expand_into(c, e, out);
          }
          break;
        case Term::Kind::power: {
          std::size_t start = out.size();
          expand_into(t.base(), e, out);
          std::size_t end = out.size();
          for (std::size_t i = 1; i < e; ++i) {
            out.insert(out.end(), out.begin() + start, out.begin() + end);
          }
          break;
        }
      }
    }

    // Appends letters of expand(t, e) left to right (or right to left when
    // reversed) until out holds n letters.
    void emit(Term const& t, std::size_t e, std::size_t n, bool reversed,
              std::string& out) {
      if (out.size() >= n) {
        return;
      }
      switch (t.kind()) {
        case Term::Kind::empty:
          break;
        case Term::Kind::letter:
          if (!t.symbol().is_base()) {
            throw AlgebraError("expected a base letter, found "
                               + t.symbol().to_string());
          }
          out.push_back(t.symbol().letter());
          break;
        case Term::Kind::concat: {
          auto ch = t.children();
          if (reversed) {
            for (auto it = ch.rbegin(); it != ch.rend() && out.size() < n;
                 ++it) {
              emit(*it, e, n, reversed, out);
            }
          } else {
            for (auto it = ch.begin(); it != ch.end() && out.size() < n; ++it) {
              emit(*it, e, n, reversed, out);
            }
          }
          break;
        }
        case Term::Kind::power:
          for (std::size_t i = 0; i < e && out.size() < n; ++i) {
            emit(t.base(), e, n, reversed, out);
          }
          break;
      }
    }
  }  // namespace

  SymbolWord expand(Term const& t, std::size_t e, std::size_t max_length) {
    if (e == 0) {
      throw PreconditionError("expand requires e >= 1");
    }
    if (expanded_length(t, e) > max_length) {
      throw CapacityError("expansion exceeds "
                          + std::to_string(max_length) + " letters");
    }
    SymbolWord out;
    out.reserve(expanded_length(t, e));
    expand_into(t, e, out);
    return out;
  }

  std::string expand_base(Term const& t, std::size_t e,
                          std::size_t max_length) {
    return to_base_word(expand(t, e, max_length));
  }

  std::string expand_prefix(Term const& t, std::size_t e, std::size_t n) {
    if (e == 0) {
      throw PreconditionError("expand requires e >= 1");
    }
    std::string out;
    emit(t, e, n, false, out);
    out.resize(std::min(out.size(), n));
    return out;
  }

  std::string expand_suffix(Term const& t, std::size_t e, std::size_t n) {
    if (e == 0) {
      throw PreconditionError("expand requires e >= 1");
    }
    std::string out;
    emit(t, e, n, true, out);
    out.resize(std::min(out.size(), n));
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::set<Symbol> content(Term const& t) {
    std::set<Symbol> result;
    SymbolWord       letters;
    collect_letters(t, letters);
    result.insert(letters.begin(), letters.end());
    return result;
  }

}  // namespace kappa
