//
// epigen - idempotent factorizations in finite transformation semigroups
// Copyright (C) 2026 The epigen authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// Text forms, all 1-based:
//
//   transformation  "2 2 3"            (space-separated images)
//   permutation     "2 1 3" or "(1 2)(3 4)", identity "()"
//   pattern         "([1,_2],[3])"     (underscore marks the representative)
//   word            "g0 | a | g1 | a | g2", permutations as above and each
//                   a either the base in image form or the letter "a"

#ifndef EPIGEN_TEXT_HPP_
#define EPIGEN_TEXT_HPP_

#include <cctype>       // for isdigit, isspace
#include <charconv>     // for from_chars
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "conjugacy.hpp"
#include "transf.hpp"

namespace epigen {

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Reads a 1-based point at the front of s and returns it 0-based.
    inline point_type read_point(std::string_view& s, std::size_t n) {
      unsigned long long v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr == s.data()) {
        fail("expected a point, got \"" + std::string(s) + "\"");
      }
      if (v < 1 || v > n) {
        fail("point " + std::to_string(v) + " out of range [1, "
             + std::to_string(n) + "]");
      }
      s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
      return static_cast<point_type>(v - 1);
    }

    inline void skip_space(std::string_view& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
    }

    inline void expect(std::string_view& s, char c) {
      skip_space(s);
      if (s.empty() || s.front() != c) {
        fail(std::string("expected '") + c + "'");
      }
      s.remove_prefix(1);
    }
  }  // namespace detail

  //! Parses "2 2 3"; the number of entries must equal \p n.
  inline Transformation parse_transformation(std::size_t n,
                                             std::string_view text) {
    if (n == 0) {
      detail::fail("degree must be at least 1");
    }
    std::vector<point_type> img;
    auto                    s = detail::trim(text);
    while (!s.empty()) {
      img.push_back(detail::read_point(s, n));
      if (!s.empty() && !std::isspace(static_cast<unsigned char>(s.front()))
          && s.front() != ',') {
        detail::fail("unexpected character '" + std::string(1, s.front())
                     + "' in transformation");
      }
      while (!s.empty()
             && (std::isspace(static_cast<unsigned char>(s.front()))
                 || s.front() == ',')) {
        s.remove_prefix(1);
      }
    }
    if (img.size() != n) {
      detail::fail("expected " + std::to_string(n) + " images, got "
                   + std::to_string(img.size()));
    }
    return Transformation(std::move(img));
  }

  //! Parses image form or cycle notation.
  inline Permutation parse_permutation(std::size_t n, std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty() || s.front() != '(') {
      return Permutation(parse_transformation(n, s));
    }
    if (n == 0) {
      detail::fail("degree must be at least 1");
    }
    std::vector<std::vector<point_type>> cycles;
    while (!s.empty()) {
      detail::expect(s, '(');
      std::vector<point_type> c;
      detail::skip_space(s);
      while (!s.empty() && s.front() != ')') {
        c.push_back(detail::read_point(s, n));
        while (!s.empty()
               && (std::isspace(static_cast<unsigned char>(s.front()))
                   || s.front() == ',')) {
          s.remove_prefix(1);
        }
      }
      detail::expect(s, ')');
      cycles.push_back(std::move(c));
      detail::skip_space(s);
    }
    return Permutation::from_cycles(n, cycles);
  }

  //! Parses "([1,_2],[3])". A one-point entry is its own representative; a
  //! larger entry marks its representative with a leading underscore.
  inline IdempotentPattern parse_pattern(std::size_t n, std::string_view text) {
    auto s = detail::trim(text);
    bool outer = !s.empty() && s.front() == '(';
    if (outer) {
      if (s.back() != ')') {
        detail::fail("unbalanced parentheses in pattern");
      }
      s = detail::trim(s.substr(1, s.size() - 2));
    }
    std::vector<IdempotentPattern::Entry> entries;
    while (!s.empty()) {
      detail::expect(s, '[');
      std::vector<point_type> members;
      std::vector<point_type> marked;
      detail::skip_space(s);
      while (!s.empty() && s.front() != ']') {
        bool underline = s.front() == '_';
        if (underline) {
          s.remove_prefix(1);
        }
        auto x = detail::read_point(s, n);
        (underline ? marked : members).push_back(x);
        while (!s.empty()
               && (std::isspace(static_cast<unsigned char>(s.front()))
                   || s.front() == ',')) {
          s.remove_prefix(1);
        }
      }
      detail::expect(s, ']');
      if (marked.empty() && members.size() == 1) {
        entries.push_back({members.front(), {}});
      } else if (marked.size() == 1) {
        entries.push_back({marked.front(), members});
      } else {
        detail::fail("each pattern entry needs exactly one representative");
      }
      while (!s.empty()
             && (std::isspace(static_cast<unsigned char>(s.front()))
                 || s.front() == ',')) {
        s.remove_prefix(1);
      }
    }
    return IdempotentPattern(n, std::move(entries));
  }

  inline std::string to_string(Transformation const& t) {
    std::string out;
    for (std::size_t x = 0; x < t.degree(); ++x) {
      if (x != 0) {
        out += ' ';
      }
      out += std::to_string(t[x] + 1);
    }
    return out;
  }

  //! Cycle notation with fixed points omitted; the identity is "()".
  inline std::string to_cycle_string(Permutation const& g) {
    auto cs = g.cycles();
    if (cs.empty()) {
      return "()";
    }
    std::string out;
    for (auto const& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out;
  }

  inline std::string to_string(IdempotentPattern const& p) {
    std::string out = "(";
    bool        first_entry = true;
    for (auto const& e : p.entries()) {
      if (!first_entry) {
        out += ',';
      }
      first_entry = false;
      out += '[';
      if (e.extras.empty()) {
        out += std::to_string(e.rep + 1);
      } else {
        for (auto x : e.extras) {
          out += std::to_string(x + 1) + ',';
        }
        out += '_' + std::to_string(e.rep + 1);
      }
      out += ']';
    }
    return out + ')';
  }

  //! Parses a word. Every base slot must hold the same transformation; the
  //! letter "a" stands for \p base, which is then required.
  inline Word parse_word(std::size_t                          n,
                         std::string_view                     text,
                         std::optional<Transformation> const& base
                         = std::nullopt) {
    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
      auto bar = text.find('|', start);
      parts.push_back(detail::trim(text.substr(start, bar - start)));
      if (bar == std::string_view::npos) {
        break;
      }
      start = bar + 1;
    }
    if (parts.size() < 3 || parts.size() % 2 == 0) {
      detail::fail("a word has the form \"g0 | a | g1 | ... | a | gr\"");
    }
    std::optional<Transformation> a = base;
    std::vector<Permutation>      perms;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i % 2 == 0) {
        perms.push_back(parse_permutation(n, parts[i]));
        continue;
      }
      if (parts[i] == "a") {
        if (!base) {
          detail::fail("the letter a in a word needs a base");
        }
        continue;
      }
      auto t = parse_transformation(n, parts[i]);
      if (a && *a != t) {
        detail::fail("all base slots of a word must hold the same element");
      }
      a = t;
    }
    return Word(*a, std::move(perms));
  }

  inline std::string to_string(Word const& w) {
    std::string out = to_cycle_string(w.perms().front());
    for (std::size_t i = 1; i < w.perms().size(); ++i) {
      out += " | " + to_string(w.base()) + " | " + to_cycle_string(w.perms()[i]);
    }
    return out;
  }

}  // namespace epigen

#endif  // EPIGEN_TEXT_HPP_
