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

// Factorization of singular transformations into idempotents of the same
// rank.
//
// A singular a is written as a = e * g with e idempotent and g a permutation,
// g is split into transpositions, and each transposition t is absorbed by
// rewriting p * t as p * (idempotent factors), where p is the running prefix.

#ifndef EPIGEN_FACTOR_HPP_
#define EPIGEN_FACTOR_HPP_

#include <algorithm>    // for find, binary_search
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <span>         // for span
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "transf.hpp"

namespace epigen {

  //! Which construction produced a factor.
  enum class FactorKind {
    seed_idempotent,
    lemma1_case2,
    lemma1_case3_e2,
    lemma1_case3_e3,
    lemma1_case3_e4,
    conjugate
  };

  inline std::string_view kind_name(FactorKind k) noexcept {
    switch (k) {
      case FactorKind::seed_idempotent:
        return "SEED_IDEMPOTENT";
      case FactorKind::lemma1_case2:
        return "LEMMA1_CASE2";
      case FactorKind::lemma1_case3_e2:
        return "LEMMA1_CASE3_E2";
      case FactorKind::lemma1_case3_e3:
        return "LEMMA1_CASE3_E3";
      case FactorKind::lemma1_case3_e4:
        return "LEMMA1_CASE3_E4";
      case FactorKind::conjugate:
        return "CONJUGATE";
    }
    return "UNKNOWN";
  }

  inline std::optional<FactorKind> kind_from_name(std::string_view s) {
    for (auto k : {FactorKind::seed_idempotent,
                   FactorKind::lemma1_case2,
                   FactorKind::lemma1_case3_e2,
                   FactorKind::lemma1_case3_e3,
                   FactorKind::lemma1_case3_e4,
                   FactorKind::conjugate}) {
      if (kind_name(k) == s) {
        return k;
      }
    }
    return std::nullopt;
  }

  struct FactorRecord {
    Transformation             value;
    FactorKind                 kind;
    std::optional<Permutation> conjugator = std::nullopt;
  };

  //! An ordered list of factors whose left-to-right product is \c input.
  //! \c rank is the rank shared by every factor. For factorizations into
  //! conjugates, \c base is the element every CONJUGATE factor conjugates.
  struct Factorization {
    Transformation                input;
    std::vector<FactorRecord>     factors;
    std::size_t                   rank;
    std::optional<Transformation> base = std::nullopt;
  };

  //! An unordered pair of distinct points {x, y}, as the permutation (x y).
  struct Transposition {
    point_type x;
    point_type y;

    [[nodiscard]] Permutation as_permutation(std::size_t n) const {
      return Permutation::transposition(n, x, y);
    }

    friend bool operator==(Transposition const&, Transposition const&)
        = default;
  };

  //! Left-to-right product of a nonempty list.
  inline Transformation product(std::span<Transformation const> ts) {
    if (ts.empty()) {
      detail::fail("product of an empty list");
    }
    Transformation p = ts.front();
    for (auto it = ts.begin() + 1; it != ts.end(); ++it) {
      p = p * *it;
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // a = e * g
  ////////////////////////////////////////////////////////////////////////

  //! Returns (e, g) with e * g = a. e sends each kernel class of a to its
  //! least point. g sends that least point x to a[x]; the remaining domain
  //! points and the remaining codomain points are matched in increasing
  //! order.
  inline std::pair<Idempotent, Permutation>
  eg_decompose(Transformation const& a) {
    auto const              n = a.degree();
    std::vector<point_type> e_img(n);
    std::vector<point_type> g_img(n);
    std::vector<bool>       dom_used(n, false), cod_used(n, false);
    // first preimage of each image point, in increasing order of preimage
    std::vector<std::optional<point_type>> first(n);
    for (point_type x = 0; x < n; ++x) {
      auto y = a[x];
      if (!first[y]) {
        first[y]    = x;
        g_img[x]    = y;
        dom_used[x] = true;
        cod_used[y] = true;
      }
      e_img[x] = *first[y];
    }
    point_type y = 0;
    for (point_type x = 0; x < n; ++x) {
      if (dom_used[x]) {
        continue;
      }
      while (cod_used[y]) {
        ++y;
      }
      g_img[x] = y++;
    }
    return {Idempotent(Transformation(std::move(e_img))),
            Permutation(std::move(g_img))};
  }

  //! Splits g into transpositions whose left-to-right product is g. The
  //! cycle (c1 c2 ... cl), started at its least point, yields
  //! (c1 c2)(c1 c3)...(c1 cl); cycles are taken by increasing least point.
  inline std::vector<Transposition> transpositions(Permutation const& g) {
    std::vector<Transposition> out;
    for (auto const& c : g.cycles()) {
      for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back({c[0], c[i]});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting a * (x y)
  ////////////////////////////////////////////////////////////////////////

  //! The target patterns for rewriting a * (x y) as a * (product of members),
  //! tagged by the case that produced them. Three cases by how many of x, y
  //! lie in the image of a:
  //!
  //!  * none:  no factors (a * (x y) = a);
  //!  * one:   with a1 the image point and y the other,
  //!           ([a1, _y], [a2], ..., [ak]);
  //!  * both:  with x = a1, y = a2 and u the least non-image point,
  //!           ([a1], [a2, _u], [a3], ...),
  //!           ([u], [a1, _a2], [a3], ...),
  //!           ([u, _a1], [a2], [a3], ...).
  //!
  //! Remaining image points appear as singleton entries in increasing order.
  inline std::vector<std::pair<FactorKind, IdempotentPattern>>
  rewrite_patterns(Transformation const& a, Transposition tau) {
    auto const n = a.degree();
    if (tau.x == tau.y) {
      detail::fail("a transposition needs two distinct points");
    }
    if (tau.x >= n || tau.y >= n) {
      detail::fail("transposition point out of range");
    }
    auto const img = a.image_set();
    if (img.size() == n) {
      detail::fail("input must be singular");
    }
    auto in_img = [&img](point_type p) {
      return std::binary_search(img.cbegin(), img.cend(), p);
    };
    auto rest = [&img](std::initializer_list<point_type> skip) {
      std::vector<IdempotentPattern::Entry> out;
      for (auto p : img) {
        if (std::find(skip.begin(), skip.end(), p) == skip.end()) {
          out.push_back({p, {}});
        }
      }
      return out;
    };
    using Entries = std::vector<IdempotentPattern::Entry>;
    auto make     = [n](Entries head, Entries const& tail) {
      head.insert(head.end(), tail.cbegin(), tail.cend());
      return IdempotentPattern(n, std::move(head));
    };

    bool const x_in = in_img(tau.x), y_in = in_img(tau.y);
    std::vector<std::pair<FactorKind, IdempotentPattern>> out;
    if (!x_in && !y_in) {
      return out;
    }
    if (x_in != y_in) {
      point_type a1    = x_in ? tau.x : tau.y;
      point_type other = x_in ? tau.y : tau.x;
      out.emplace_back(FactorKind::lemma1_case2,
                       make({{other, {a1}}}, rest({a1})));
      return out;
    }
    point_type a1 = tau.x, a2 = tau.y;
    point_type u  = 0;
    while (in_img(u)) {
      ++u;
    }
    auto tail = rest({a1, a2});
    out.emplace_back(FactorKind::lemma1_case3_e2,
                     make({{a1, {}}, {u, {a2}}}, tail));
    out.emplace_back(FactorKind::lemma1_case3_e3,
                     make({{u, {}}, {a2, {a1}}}, tail));
    out.emplace_back(FactorKind::lemma1_case3_e4,
                     make({{a1, {u}}, {a2, {}}}, tail));
    return out;
  }

  //! Idempotents b1, ..., bj (j = 0, 1 or 3) of rank(a) with
  //! a * (x y) = a * b1 * ... * bj, each the canonical member of its pattern.
  inline std::vector<Idempotent> lemma1_rewrite(Transformation const& a,
                                                Transposition         tau) {
    std::vector<Idempotent> out;
    for (auto const& [kind, pattern] : rewrite_patterns(a, tau)) {
      out.push_back(pattern.canonical());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotent factorization
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool kind_requires_idempotent(FactorKind k) noexcept {
      return k != FactorKind::conjugate;
    }
  }  // namespace detail

  //! Factors a singular \p a into idempotents of rank(a).
  inline Factorization factor_idempotents(Transformation const& a) {
    if (a.is_permutation()) {
      detail::fail("input must be singular");
    }
    auto [e, g] = eg_decompose(a);
    Factorization out{a, {{e.transf(), FactorKind::seed_idempotent}}, a.rank()};
    Transformation prefix = e.transf();
    for (auto tau : transpositions(g)) {
      for (auto const& [kind, pattern] : rewrite_patterns(prefix, tau)) {
        out.factors.push_back({pattern.canonical().transf(), kind});
      }
      prefix = prefix * tau.as_permutation(a.degree());
    }
    return out;
  }

  //! Checks the product and each factor's contract: idempotent kinds must be
  //! idempotent of the recorded rank; CONJUGATE factors must carry a
  //! conjugator that maps the base to the value.
  inline bool verify_factorization(Factorization const& f) {
    if (f.factors.empty()) {
      return false;
    }
    std::vector<Transformation> values;
    for (auto const& r : f.factors) {
      if (r.value.degree() != f.input.degree() || r.value.rank() != f.rank) {
        return false;
      }
      if (detail::kind_requires_idempotent(r.kind)) {
        if (!r.value.is_idempotent()) {
          return false;
        }
      } else {
        if (!f.base || !r.conjugator
            || f.base->degree() != r.value.degree()
            || r.conjugator->degree() != r.value.degree()
            || conjugate(*f.base, *r.conjugator) != r.value) {
          return false;
        }
      }
      values.push_back(r.value);
    }
    return product(values) == f.input;
  }

}  // namespace epigen

#endif  // EPIGEN_FACTOR_HPP_
