#include <algorithm>
#include <fstream>
#include <sstream>

#include "kappa/error.hpp"
#include "kappa/pointlikes.hpp"

namespace kappa {

  namespace {
    std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    // Splits "x=rest" when x is a declared variable.
    bool split_assignment(std::string const&              tok,
                          std::vector<std::string> const& vars,
                          std::string& name, std::string& rest) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) {
        return false;
      }
      name = tok.substr(0, eq);
      rest = tok.substr(eq + 1);
      return std::find(vars.begin(), vars.end(), name) != vars.end();
    }
  }  // namespace

  SystemFile parse_system(std::string_view text, FiniteSemigroup const& S) {
    std::vector<std::string>             vars;
    std::map<std::string, MonoidElement> phis;
    std::map<std::string, std::string>   etas;

    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto here = [&] { return "line " + std::to_string(lineno) + ": "; };
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto toks = tokens(line);
      if (toks.empty()) {
        continue;
      }
      std::string const keyword = toks[0];
      toks.erase(toks.begin());
      if (keyword == "vars") {
        for (auto const& x : toks) {
          if (x.find('=') != std::string::npos) {
            throw ParseError(here() + "bad variable name '" + x + "'");
          }
          vars.push_back(x);
        }
      } else if (keyword == "phi") {
        for (auto const& tok : toks) {
          std::string x, value;
          if (!split_assignment(tok, vars, x, value)) {
            throw ParseError(here() + "expected <var>=<element>, got '" + tok
                             + "'");
          }
          // An element called 1 shadows the adjoined identity.
          if (auto s = S.find(value)) {
            phis[x] = *s;
          } else if (value == "1") {
            phis[x] = std::nullopt;
          } else {
            throw ParseError(here() + "unknown element '" + value + "'");
          }
        }
      } else if (keyword == "eta") {
        std::string current;
        for (auto const& tok : toks) {
          std::string x, rest;
          if (split_assignment(tok, vars, x, rest)) {
            current = x;
            etas[x] = rest;
          } else if (current.empty()) {
            throw ParseError(here() + "expected <var>=<term>, got '" + tok
                             + "'");
          } else {
            etas[current] += tok;
          }
        }
      } else {
        throw ParseError(here() + "unknown keyword '" + keyword + "'");
      }
    }
    if (vars.empty()) {
      throw ParseError("system file has no vars line");
    }
    for (auto const& x : vars) {
      if (phis.count(x) == 0) {
        throw ParseError("no phi value for variable " + x);
      }
    }
    SystemFile result{PointlikeSystem(vars, phis), {}};
    for (auto const& [x, source] : etas) {
      try {
        result.eta.emplace(x, parse_term(source));
      } catch (ParseError const& e) {
        throw ParseError("eta(" + x + "): " + e.what());
      }
    }
    return result;
  }

  SystemFile load_system_file(std::string const& path,
                              FiniteSemigroup const& S) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str(), S);
  }

}  // namespace kappa
