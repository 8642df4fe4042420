#include "kappa/oracles.hpp"

#include <algorithm>
#include <deque>

#include "kappa/error.hpp"
#include "kappa/truncation.hpp"

namespace kappa::oracles {

  GeneratorMap restrict_to(GeneratorMap const& gens, std::string_view alphabet) {
    GeneratorMap out;
    for (char a : alphabet) {
      out.set(Symbol::base(a), gens(Symbol::base(a)));
    }
    return out;
  }

  FiniteSemigroup
  transformation_semigroup(std::string                              name,
                           std::vector<std::vector<std::uint8_t>> const& gens) {
    using Map = std::vector<std::uint8_t>;
    auto then = [](Map const& x, Map const& y) {
      Map z(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) {
        z[p] = y[x[p]];
      }
      return z;
    };
    std::vector<Map> elements;
    std::deque<Map>  queue(gens.begin(), gens.end());
    while (!queue.empty()) {
      Map x = queue.front();
      queue.pop_front();
      if (std::find(elements.begin(), elements.end(), x) != elements.end()) {
        continue;
      }
      elements.push_back(x);
      for (auto const& g : gens) {
        queue.push_back(then(x, g));
      }
    }
    std::sort(elements.begin(), elements.end());
    std::size_t const        n = elements.size();
    std::vector<std::string> names;
    for (auto const& x : elements) {
      std::string s = "t";
      for (auto p : x) {
        s += static_cast<char>('0' + p);
      }
      names.push_back(s);
    }
    std::vector<Element> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Map  z  = then(elements[i], elements[j]);
        auto it = std::find(elements.begin(), elements.end(), z);
        table[i * n + j] = static_cast<Element>(it - elements.begin());
      }
    }
    return FiniteSemigroup(std::move(name), std::move(names), std::move(table));
  }

  FiniteSemigroup random_semigroup(Rng& rng, std::size_t max_order) {
    while (true) {
      std::size_t points = 2 + rng() % 2;
      std::size_t count  = 1 + rng() % 2;
      std::vector<std::vector<std::uint8_t>> gens(
          count, std::vector<std::uint8_t>(points));
      std::string name = "T";
      for (auto& g : gens) {
        name += "_";
        for (auto& p : g) {
          p = static_cast<std::uint8_t>(rng() % points);
          name += static_cast<char>('0' + p);
        }
      }
      auto T = transformation_semigroup(name, gens);
      if (T.order() <= max_order) {
        return T;
      }
    }
  }

  std::string random_word(Rng& rng, std::string_view alphabet,
                          std::size_t min_length, std::size_t max_length) {
    std::size_t len = min_length + rng() % (max_length - min_length + 1);
    std::string w;
    for (std::size_t i = 0; i < len; ++i) {
      w += alphabet[rng() % alphabet.size()];
    }
    return w;
  }

  Term random_term(Rng& rng, TermShape const& shape) {
    auto coin = [&](double p) {
      return std::uniform_real_distribution<double>(0, 1)(rng) < p;
    };
    if (shape.max_depth <= 1 || coin(0.25)) {
      return Term::word(random_word(rng, shape.alphabet, 1, shape.max_leaf));
    }
    TermShape inner = shape;
    --inner.max_depth;
    if (coin(shape.power)) {
      Term base = random_term(rng, inner);
      switch (rng() % 4) {
        case 0:
          return Term::omega_minus(base, 1 + rng() % 3);
        case 1:  // x^w
          return Term::omega_minus_one(base) * base;
        default:
          return Term::omega_minus_one(base);
      }
    }
    std::vector<Term> parts;
    std::size_t       count = 2 + rng() % 2;
    for (std::size_t i = 0; i < count; ++i) {
      parts.push_back(random_term(rng, inner));
    }
    return Term::concat(std::move(parts));
  }

  SymbolWord factors(std::string_view w, std::size_t k) {
    SymbolWord out;
    for (std::size_t p = 0; p + k + 1 <= w.size(); ++p) {
      out.push_back(Symbol::window(std::string(w.substr(p, k + 1))));
    }
    return out;
  }

  std::vector<std::string> all_words(std::string_view alphabet,
                                     std::size_t min_length,
                                     std::size_t max_length) {
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (std::size_t len = 0; len <= max_length; ++len) {
      if (len >= min_length) {
        out.insert(out.end(), layer.begin(), layer.end());
      }
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char a : alphabet) {
          next.push_back(w + a);
        }
      }
      layer = std::move(next);
    }
    return out;
  }

  Element slow_power(FiniteSemigroup const& S, Element s, std::size_t n) {
    Element r = s;
    for (std::size_t i = 1; i < n; ++i) {
      r = S.product(r, s);
    }
    return r;
  }

  Element slow_omega_minus(FiniteSemigroup const& S, Element s, std::size_t q) {
    if (S.order() > 5) {
      throw PreconditionError("slow_omega_minus expects order at most 5");
    }
    std::size_t m = 120;
    while (m <= q + 5) {
      m += 120;
    }
    return slow_power(S, s, m - q);
  }

  GeneratorMap random_window_map(Rng& rng, FiniteSemigroup const& T,
                                 std::string_view alphabet, std::size_t k) {
    GeneratorMap out;
    for (auto const& w : all_words(alphabet, k + 1, k + 1)) {
      out.set(Symbol::window(w), static_cast<Element>(rng() % T.order()));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transducer
  ////////////////////////////////////////////////////////////////////////

  Transducer::Transducer(FiniteSemigroup T, GeneratorMap windows,
                         std::string alphabet, std::size_t k)
      : T_(std::move(T)), windows_(std::move(windows)), k_(k) {
    contexts_ = all_words(alphabet, 0, k);
    for (std::size_t i = 0; i < contexts_.size(); ++i) {
      index_[contexts_[i]] = static_cast<std::uint32_t>(i);
    }
  }

  Transducer::Scan Transducer::identity() const {
    Scan f(contexts_.size());
    for (std::size_t c = 0; c < f.size(); ++c) {
      f[c] = {std::nullopt, static_cast<std::uint32_t>(c)};
    }
    return f;
  }

  Transducer::Scan Transducer::compose(Scan const& f, Scan const& g) const {
    Scan h(f.size());
    for (std::size_t c = 0; c < f.size(); ++c) {
      Step const& second = g[f[c].next];
      h[c] = {T_.product(f[c].value, second.value), second.next};
    }
    return h;
  }

  Transducer::Scan Transducer::letter(char a) const {
    Scan f(contexts_.size());
    for (std::size_t c = 0; c < f.size(); ++c) {
      std::string   w = contexts_[c] + a;
      MonoidElement v;
      if (w.size() == k_ + 1) {
        v = windows_(Symbol::window(w));
        w.erase(0, 1);
      }
      f[c] = {v, index_.at(w)};
    }
    return f;
  }

  Transducer::Scan Transducer::scan(Term const& t, std::size_t exponent) const {
    switch (t.kind()) {
      case Term::Kind::empty:
        return identity();
      case Term::Kind::letter:
        return letter(t.symbol().letter());
      case Term::Kind::concat: {
        Scan f = identity();
        for (auto const& c : t.children()) {
          f = compose(f, scan(c, exponent));
        }
        return f;
      }
      case Term::Kind::power: {
        Scan const f = scan(t.base(), exponent);
        if (exponent != 0) {
          Scan g = f;
          for (std::size_t i = 1; i < exponent; ++i) {
            g = compose(g, f);
          }
          return g;
        }
        // f, f^2, ... until f^m repeats an earlier f^i; then the powers
        // from i on cycle with period m - i.
        std::vector<Scan> powers{f};
        while (true) {
          Scan next = compose(powers.back(), f);
          auto it   = std::find(powers.begin(), powers.end(), next);
          if (it != powers.end()) {
            std::size_t i      = static_cast<std::size_t>(it - powers.begin()) + 1;
            std::size_t period = powers.size() + 1 - i;
            std::size_t n      = i;
            while ((n + 1) % period != 0) {
              ++n;
            }
            return powers[n - 1];
          }
          powers.push_back(std::move(next));
        }
      }
    }
    return identity();
  }

  MonoidElement Transducer::value(Term const& t, std::size_t exponent) const {
    return scan(t, exponent)[index_.at("")].value;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pointlikes
  ////////////////////////////////////////////////////////////////////////

  std::map<std::string, std::set<Element>>
  brute_suffix_classes(FiniteSemigroup const& S, GeneratorMap const& gens,
                       std::size_t k, std::size_t max_length) {
    std::string const alphabet = gens.base_alphabet();
    std::map<std::string, std::set<Element>> out;
    for (auto const& w : all_words(alphabet, 1, k)) {
      out[w];
    }
    for (auto const& u : all_words(alphabet, 1, max_length)) {
      out[truncate_suffix(u, k)].insert(delta_eval(S, gens, u));
    }
    return out;
  }

}  // namespace kappa::oracles
