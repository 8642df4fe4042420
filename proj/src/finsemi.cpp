#include "kappa/finsemi.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace kappa {

  FiniteSemigroup::FiniteSemigroup(std::string              name,
                                   std::vector<std::string> element_names,
                                   std::vector<Element>     table,
                                   bool has_adjoined_identity)
      : name_(std::move(name)),
        names_(std::move(element_names)),
        table_(std::move(table)),
        adjoined_identity_(has_adjoined_identity) {
    std::size_t const n = names_.size();
    if (n == 0) {
      throw AlgebraError("a semigroup has at least one element");
    }
    if (table_.size() != n * n) {
      throw AlgebraError("Cayley table of " + name_ + " has wrong size");
    }
    std::set<std::string> seen;
    for (auto const& x : names_) {
      if (!seen.insert(x).second) {
        throw AlgebraError("duplicate element name '" + x + "'");
      }
    }
    for (Element e : table_) {
      if (e >= n) {
        throw AlgebraError("Cayley table entry out of range");
      }
    }
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        Element st = product(s, t);
        for (Element u = 0; u < n; ++u) {
          if (product(st, u) != product(s, product(t, u))) {
            throw AlgebraError("table of " + name_ + " is not associative: ("
                               + names_[s] + " " + names_[t] + ") "
                               + names_[u] + " != " + names_[s] + " ("
                               + names_[t] + " " + names_[u] + ")");
          }
        }
      }
    }
    if (adjoined_identity_) {
      for (Element s = 0; s < n; ++s) {
        if (product(0, s) != s || product(s, 0) != s) {
          throw AlgebraError("index 0 is not an identity");
        }
      }
    }
  }

  Element FiniteSemigroup::power(Element s, std::size_t m) const {
    if (m == 0) {
      throw PreconditionError("power exponent must be positive");
    }
    return detail::power(
        s, m, [this](Element x, Element y) { return product(x, y); });
  }

  std::optional<Element> FiniteSemigroup::find(std::string_view x) const {
    for (Element s = 0; s < names_.size(); ++s) {
      if (names_[s] == x) {
        return s;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup FiniteSemigroup::adjoin_identity() const {
    std::size_t const n = order() + 1;
    std::string       one = "1";
    while (find(one)) {
      one += "'";
    }
    std::vector<std::string> names{one};
    names.insert(names.end(), names_.begin(), names_.end());
    std::vector<Element> table(n * n);
    for (Element s = 0; s < n; ++s) {
      for (Element t = 0; t < n; ++t) {
        Element v;
        if (s == 0) {
          v = t;
        } else if (t == 0) {
          v = s;
        } else {
          v = product(s - 1, t - 1) + 1;
        }
        table[s * n + t] = v;
      }
    }
    return FiniteSemigroup(name_ + "^1", std::move(names), std::move(table),
                           true);
  }

  std::string FiniteSemigroup::monoid_element_name(MonoidElement s) const {
    return s ? element_name(*s) : std::string("1");
  }

  MonogenicProfile monogenic_profile(FiniteSemigroup const& S, Element s) {
    return detail::monogenic_profile(
        s, [&S](Element x, Element y) { return S.product(x, y); });
  }

  Element omega_power(FiniteSemigroup const& S, Element s) {
    auto p = monogenic_profile(S, s);
    return S.power(s, detail::omega_exponent(p, 0));
  }

  Element omega_minus_q(FiniteSemigroup const& S, Element s, std::size_t q) {
    if (q == 0) {
      throw PreconditionError("omega_minus_q requires q >= 1");
    }
    auto p = monogenic_profile(S, s);
    return S.power(s, detail::omega_exponent(p, q));
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneratorMap
  ////////////////////////////////////////////////////////////////////////

  Element GeneratorMap::operator()(Symbol const& a) const {
    auto it = images_.find(a);
    if (it == images_.end()) {
      throw AlgebraError("unknown symbol " + a.to_string());
    }
    return it->second;
  }

  std::vector<Symbol> GeneratorMap::alphabet() const {
    std::vector<Symbol> result;
    for (auto const& [a, s] : images_) {
      result.push_back(a);
    }
    return result;
  }

  std::string GeneratorMap::base_alphabet() const {
    std::string result;
    for (auto const& [a, s] : images_) {
      if (a.is_base()) {
        result.push_back(a.letter());
      }
    }
    return result;
  }

  bool GeneratorMap::is_generating(FiniteSemigroup const& S) const {
    std::vector<bool>    reached(S.order(), false);
    std::vector<Element> stack;
    for (auto const& [a, s] : images_) {
      if (s < S.order() && !reached[s]) {
        reached[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      Element s = stack.back();
      stack.pop_back();
      for (auto const& [a, g] : images_) {
        Element t = S.product(s, g);
        if (!reached[t]) {
          reached[t] = true;
          stack.push_back(t);
        }
      }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) {
      return b;
    });
  }

  Element delta_eval(FiniteSemigroup const& S,
                     GeneratorMap const&    gens,
                     SymbolWord const&      w) {
    if (w.empty()) {
      throw PreconditionError("delta_eval of the empty word");
    }
    Element result = gens(w.front());
    for (auto it = w.begin() + 1; it != w.end(); ++it) {
      result = S.product(result, gens(*it));
    }
    return result;
  }

  Element delta_eval(FiniteSemigroup const& S,
                     GeneratorMap const&    gens,
                     std::string_view       base_word) {
    return delta_eval(S, gens, to_symbols(base_word));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup files
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> tokenize(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> tokens;
      std::string              tok;
      while (in >> tok) {
        tokens.push_back(tok);
      }
      return tokens;
    }

    std::string where(std::size_t line_no) {
      return "line " + std::to_string(line_no) + ": ";
    }
  }  // namespace

  LoadedSemigroup load_semigroup(std::string_view text) {
    // Non-empty lines with comments stripped, with their line numbers.
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    {
      std::istringstream in{std::string(text)};
      std::string        line;
      std::size_t        line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) {
          line.erase(pos);
        }
        auto tokens = tokenize(line);
        if (!tokens.empty()) {
          lines.emplace_back(line_no, std::move(tokens));
        }
      }
    }
    std::size_t cursor = 0;
    auto        next   = [&]() -> auto const& {
      if (cursor == lines.size()) {
        throw ParseError("unexpected end of semigroup file");
      }
      return lines[cursor++];
    };

    auto const& [header_no, header] = next();
    if (header.size() != 3 || header[0] != "semigroup") {
      throw ParseError(where(header_no) + "expected 'semigroup <name> <n>'");
    }
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n                = std::stoul(header[2], &used);
      if (used != header[2].size() || n == 0) {
        throw std::invalid_argument("");
      }
    } catch (std::logic_error const&) {
      throw ParseError(where(header_no) + "invalid order '" + header[2] + "'");
    }

    auto const& [elements_no, elements] = next();
    if (elements.empty() || elements[0] != "elements"
        || elements.size() != n + 1) {
      throw ParseError(where(elements_no) + "expected 'elements' followed by "
                       + std::to_string(n) + " names");
    }
    std::vector<std::string> names(elements.begin() + 1, elements.end());
    auto index_of = [&](std::string const& x, std::size_t line_no) {
      auto it = std::find(names.begin(), names.end(), x);
      if (it == names.end()) {
        throw ParseError(where(line_no) + "unknown element '" + x + "'");
      }
      return static_cast<Element>(it - names.begin());
    };

    std::vector<Element> table;
    table.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      auto const& [row_no, entries] = next();
      if (entries.size() != n) {
        throw ParseError(where(row_no) + "expected " + std::to_string(n)
                         + " table entries");
      }
      for (auto const& x : entries) {
        table.push_back(index_of(x, row_no));
      }
    }

    LoadedSemigroup result{FiniteSemigroup(header[1], names, std::move(table)),
                           std::nullopt};

    while (cursor < lines.size()) {
      auto const& [gen_no, gen] = next();
      if (gen[0] != "generators" || result.generators) {
        throw ParseError(where(gen_no) + "unexpected '" + gen[0] + "'");
      }
      GeneratorMap gens;
      for (auto it = gen.begin() + 1; it != gen.end(); ++it) {
        auto eq = it->find('=');
        if (eq != 1 || !is_letter((*it)[0])) {
          throw ParseError(where(gen_no) + "expected <letter>=<element>, got '"
                           + *it + "'");
        }
        Symbol a = Symbol::base((*it)[0]);
        if (gens.contains(a)) {
          throw ParseError(where(gen_no) + "letter assigned twice");
        }
        gens.set(a, index_of(it->substr(2), gen_no));
      }
      if (!gens.is_generating(result.semigroup)) {
        throw AlgebraError("generators do not generate "
                           + result.semigroup.name());
      }
      result.generators = std::move(gens);
    }
    return result;
  }

  LoadedSemigroup load_semigroup_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_semigroup(buffer.str());
  }

  std::string to_text(FiniteSemigroup const&             S,
                      std::optional<GeneratorMap> const& gens) {
    std::ostringstream out;
    out << "semigroup " << S.name() << ' ' << S.order() << "\nelements";
    for (auto const& x : S.element_names()) {
      out << ' ' << x;
    }
    out << '\n';
    for (Element s = 0; s < S.order(); ++s) {
      for (Element t = 0; t < S.order(); ++t) {
        out << (t == 0 ? "" : " ") << S.element_name(S.product(s, t));
      }
      out << '\n';
    }
    if (gens) {
      out << "generators";
      for (auto const& [a, s] : gens->images()) {
        out << ' ' << a.to_string() << '=' << S.element_name(s);
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace kappa
