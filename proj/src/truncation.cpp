#include "kappa/truncation.hpp"

#include <algorithm>
#include <numeric>

#include "kappa/error.hpp"

namespace kappa {

  std::string truncate_prefix(std::string_view w, std::size_t k) {
    return std::string(w.substr(0, std::min(k, w.size())));
  }

  std::string truncate_suffix(std::string_view w, std::size_t k) {
    return std::string(w.substr(w.size() - std::min(k, w.size())));
  }

  ////////////////////////////////////////////////////////////////////////
  // TruncSemigroup
  ////////////////////////////////////////////////////////////////////////

  TruncSemigroup::TruncSemigroup(Side side, std::string alphabet,
                                 std::size_t k, std::size_t cap)
      : side_(side), alphabet_(std::move(alphabet)), k_(k), order_(0) {
    if (k_ == 0) {
      throw PreconditionError("truncation semigroups need k >= 1");
    }
    if (alphabet_.empty()) {
      throw PreconditionError("truncation semigroups need a non-empty alphabet");
    }
    std::sort(alphabet_.begin(), alphabet_.end());
    if (std::adjacent_find(alphabet_.begin(), alphabet_.end())
        != alphabet_.end()) {
      throw PreconditionError("repeated letter in alphabet");
    }
    for (char c : alphabet_) {
      if (!is_letter(c)) {
        throw PreconditionError("invalid letter in alphabet");
      }
    }
    std::size_t level = 1;
    for (std::size_t len = 1; len <= k_; ++len) {
      if (level > cap / alphabet_.size()) {
        throw CapacityError("truncation semigroup exceeds "
                            + std::to_string(cap) + " elements");
      }
      level *= alphabet_.size();
      order_ += level;
      if (order_ > cap) {
        throw CapacityError("truncation semigroup exceeds "
                            + std::to_string(cap) + " elements");
      }
    }
  }

  std::string TruncSemigroup::product(std::string_view u,
                                      std::string_view v) const {
    std::string uv(u);
    uv += v;
    return project(uv);
  }

  std::string TruncSemigroup::project(std::string_view w) const {
    return side_ == Side::prefix ? truncate_prefix(w, k_)
                                 : truncate_suffix(w, k_);
  }

  std::vector<std::string> TruncSemigroup::elements() const {
    std::vector<std::string> result;
    result.reserve(order_);
    std::vector<std::string> level{""};
    for (std::size_t len = 1; len <= k_; ++len) {
      std::vector<std::string> next;
      next.reserve(level.size() * alphabet_.size());
      for (auto const& w : level) {
        for (char c : alphabet_) {
          next.push_back(w + c);
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return result;
  }

  std::size_t TruncSemigroup::index_of(std::string_view w) const {
    if (w.empty() || w.size() > k_) {
      throw AlgebraError("'" + std::string(w) + "' is not an element of A_"
                         + std::to_string(k_));
    }
    std::size_t const n      = alphabet_.size();
    std::size_t       offset = 0;
    std::size_t       level  = 1;
    for (std::size_t len = 1; len < w.size(); ++len) {
      level *= n;
      offset += level;
    }
    std::size_t rank = 0;
    for (char c : w) {
      auto pos = alphabet_.find(c);
      if (pos == std::string::npos) {
        throw AlgebraError(std::string("letter '") + c
                           + "' not in the alphabet");
      }
      rank = rank * n + pos;
    }
    return offset + rank;
  }

  FiniteSemigroup TruncSemigroup::to_finite_semigroup(std::size_t cap) const {
    if (order_ > cap) {
      throw CapacityError("refusing to tabulate a truncation semigroup of order "
                          + std::to_string(order_));
    }
    auto                 elts = elements();
    std::vector<Element> table;
    table.reserve(order_ * order_);
    for (auto const& u : elts) {
      for (auto const& v : elts) {
        table.push_back(static_cast<Element>(index_of(product(u, v))));
      }
    }
    std::string name = (side_ == Side::prefix ? "K" : "D")
                       + std::to_string(k_) + "_" + alphabet_;
    return FiniteSemigroup(std::move(name), std::move(elts), std::move(table));
  }

  GeneratorMap TruncSemigroup::generators() const {
    GeneratorMap gens;
    for (char c : alphabet_) {
      gens.set(Symbol::base(c),
               static_cast<Element>(index_of(std::string(1, c))));
    }
    return gens;
  }

  TruncSemigroup build_trunc(Side side, std::string alphabet, std::size_t k) {
    return TruncSemigroup(side, std::move(alphabet), k);
  }

  ////////////////////////////////////////////////////////////////////////
  // i_k and t_k on terms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string truncated_value(Term const& t, Side side, std::size_t k) {
      auto mul = [side, k](std::string const& u, std::string const& v) {
        return side == Side::prefix ? truncate_prefix(u + v, k)
                                    : truncate_suffix(u + v, k);
      };
      switch (t.kind()) {
        case Term::Kind::empty:
          return {};
        case Term::Kind::letter:
          if (!t.symbol().is_base()) {
            throw AlgebraError("prefix/suffix need base letters, found "
                               + t.symbol().to_string());
          }
          return std::string(1, t.symbol().letter());
        case Term::Kind::concat: {
          auto        ch = t.children();
          std::string acc;
          if (side == Side::prefix) {
            for (auto it = ch.begin(); it != ch.end() && acc.size() < k; ++it) {
              acc = mul(acc, truncated_value(*it, side, k));
            }
          } else {
            for (auto it = ch.rbegin(); it != ch.rend() && acc.size() < k;
                 ++it) {
              acc = mul(truncated_value(*it, side, k), acc);
            }
          }
          return acc;
        }
        case Term::Kind::power: {
          std::string x = truncated_value(t.base(), side, k);
          return detail::omega_minus_q(x, 1, mul);
        }
      }
      return {};
    }
  }  // namespace

  std::string prefix_k(Term const& t, std::size_t k) {
    if (k == 0) {
      throw PreconditionError("prefix_k requires k >= 1");
    }
    return truncated_value(t, Side::prefix, k);
  }

  std::string suffix_k(Term const& t, std::size_t k) {
    if (k == 0) {
      throw PreconditionError("suffix_k requires k >= 1");
    }
    return truncated_value(t, Side::suffix, k);
  }

  std::string natural_projection(Term const& t, Side side, std::size_t k) {
    return side == Side::prefix ? prefix_k(t, k) : suffix_k(t, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // UPWord
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string primitive_root(std::string const& v) {
      std::size_t const n = v.size();
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) {
          periodic = v[i] == v[i - d];
        }
        if (periodic) {
          return v.substr(0, d);
        }
      }
      return v;
    }
  }  // namespace

  UPWord::UPWord(std::string preperiod, std::string period,
                 Direction direction)
      : u_(std::move(preperiod)), v_(std::move(period)), dir_(direction) {
    if (v_.empty()) {
      throw PreconditionError("the period of an infinite word is non-empty");
    }
    v_ = primitive_root(v_);
    if (dir_ == Direction::rightward) {
      while (!u_.empty() && u_.back() == v_.back()) {
        v_ = v_.back() + v_.substr(0, v_.size() - 1);
        u_.pop_back();
      }
    } else {
      while (!u_.empty() && u_.front() == v_.front()) {
        v_ = v_.substr(1) + v_.front();
        u_.erase(0, 1);
      }
    }
  }

  std::string UPWord::letters(std::size_t n) const {
    if (dir_ == Direction::rightward) {
      std::string out = u_.substr(0, std::min(n, u_.size()));
      while (out.size() < n) {
        out += v_;
      }
      out.resize(n);
      return out;
    }
    if (n <= u_.size()) {
      return u_.substr(u_.size() - n);
    }
    std::size_t m = n - u_.size();
    std::string periodic;
    while (periodic.size() < m) {
      periodic += v_;
    }
    return periodic.substr(periodic.size() - m) + u_;
  }

  std::size_t comparison_bound(UPWord const& x, UPWord const& y) {
    return x.preperiod().size() + y.preperiod().size()
           + 2 * std::lcm(x.period().size(), y.period().size());
  }

  namespace {
    std::pair<std::string, std::string> upword_parts(Term const& t,
                                                     bool rightward) {
      switch (t.kind()) {
        case Term::Kind::concat: {
          auto        ch = t.children();
          std::string fixed;
          if (rightward) {
            for (auto const& c : ch) {
              if (c.is_finite()) {
                fixed += *finite_base_word(c);
              } else {
                auto [u, v] = upword_parts(c, rightward);
                return {fixed + u, v};
              }
            }
          } else {
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
              if (it->is_finite()) {
                fixed = *finite_base_word(*it) + fixed;
              } else {
                auto [u, v] = upword_parts(*it, rightward);
                return {u + fixed, v};
              }
            }
          }
          break;
        }
        case Term::Kind::power: {
          Term const& x = t.base();
          if (!x.is_finite()) {
            return upword_parts(x, rightward);
          }
          return {std::string(), *finite_base_word(x)};
        }
        default:
          break;
      }
      throw PreconditionError("infinite prefix/suffix of a finite word");
    }
  }  // namespace

  UPWord infinite_prefix(Term const& t) {
    auto [u, v] = upword_parts(t, true);
    return UPWord(std::move(u), std::move(v), UPWord::Direction::rightward);
  }

  UPWord infinite_suffix(Term const& t) {
    auto [u, v] = upword_parts(t, false);
    return UPWord(std::move(u), std::move(v), UPWord::Direction::leftward);
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity checkers
  ////////////////////////////////////////////////////////////////////////

  std::string TruncVariety::name() const {
    switch (kind) {
      case Kind::Kk:
        return "K" + std::to_string(k);
      case Kind::Dk:
        return "D" + std::to_string(k);
      case Kind::K:
        return "K";
      case Kind::D:
        return "D";
      case Kind::LI:
        return "LI";
    }
    return {};
  }

  namespace {
    // Least l such that the length-l prefixes (or suffixes) of x and y
    // differ, given as strings already aligned at the relevant end.
    std::size_t first_difference(std::string const& x, std::string const& y,
                                 bool from_left) {
      std::size_t const n = std::min(x.size(), y.size());
      for (std::size_t i = 0; i < n; ++i) {
        char cx = from_left ? x[i] : x[x.size() - 1 - i];
        char cy = from_left ? y[i] : y[y.size() - 1 - i];
        if (cx != cy) {
          return i + 1;
        }
      }
      return n + 1;
    }

    std::string side_name(bool from_left) {
      return from_left ? "prefix" : "suffix";
    }

    Verdict check_one_sided(Term const& lhs, Term const& rhs, bool from_left) {
      auto lw = finite_base_word(lhs);
      auto rw = finite_base_word(rhs);
      if (lw && rw) {
        if (*lw == *rw) {
          return Verdict::holds();
        }
        std::size_t l = first_difference(*lw, *rw, from_left);
        return Verdict::fails("distinct finite words, " + side_name(from_left)
                                  + "es of length " + std::to_string(l)
                                  + " differ",
                              l);
      }
      if (lw || rw) {
        std::size_t l = (lw ? lw->size() : rw->size()) + 1;
        return Verdict::fails("finite word against an infinite pseudoword, "
                                  + side_name(from_left) + "es of length "
                                  + std::to_string(l) + " differ",
                              l);
      }
      UPWord x = from_left ? infinite_prefix(lhs) : infinite_suffix(lhs);
      UPWord y = from_left ? infinite_prefix(rhs) : infinite_suffix(rhs);
      if (x == y) {
        return Verdict::holds();
      }
      std::size_t n = comparison_bound(x, y);
      std::size_t l = first_difference(x.letters(n), y.letters(n), from_left);
      return Verdict::fails("infinite " + side_name(from_left) + "es differ at "
                                "length "
                                + std::to_string(l),
                            l);
    }

    Verdict check_truncated(Term const& lhs, Term const& rhs, std::size_t k,
                            bool from_left) {
      std::string x = from_left ? prefix_k(lhs, k) : suffix_k(lhs, k);
      std::string y = from_left ? prefix_k(rhs, k) : suffix_k(rhs, k);
      if (x == y) {
        return Verdict::holds();
      }
      std::size_t l = first_difference(x, y, from_left);
      return Verdict::fails(side_name(from_left) + "es of length "
                                + std::to_string(l) + " differ: '" + x + "' vs '"
                                + y + "'",
                            l);
    }
  }  // namespace

  Verdict check_identity(TruncVariety const& V, Term const& lhs,
                         Term const& rhs) {
    switch (V.kind) {
      case TruncVariety::Kind::Kk:
      case TruncVariety::Kind::Dk:
        if (V.k == 0) {
          throw PreconditionError(V.name() + " requires k >= 1");
        }
        return check_truncated(lhs, rhs, V.k,
                               V.kind == TruncVariety::Kind::Kk);
      case TruncVariety::Kind::K:
        return check_one_sided(lhs, rhs, true);
      case TruncVariety::Kind::D:
        return check_one_sided(lhs, rhs, false);
      case TruncVariety::Kind::LI: {
        Verdict left = check_one_sided(lhs, rhs, true);
        if (!left.is_holds()) {
          left.witness = "K-side: " + left.witness;
          return left;
        }
        Verdict right = check_one_sided(lhs, rhs, false);
        if (!right.is_holds()) {
          right.witness = "D-side: " + right.witness;
        }
        return right;
      }
    }
    return Verdict::holds();
  }

}  // namespace kappa
