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

// Brute-force ground truth for small degrees: enumeration of T_n, S_n and
// idempotents, subsemigroup closure, word search, and exhaustive checks of
// the factorization results.
//
// Everything here is exponential in n. Each entry point refuses degrees above
// a max_n guard (8 unless overridden).

#ifndef EPIGEN_ORACLE_HPP_
#define EPIGEN_ORACLE_HPP_

#include <algorithm>      // for sort, next_permutation
#include <cstddef>        // for size_t
#include <limits>         // for numeric_limits
#include <numeric>        // for iota
#include <optional>       // for optional
#include <random>         // for mt19937_64
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "conjugacy.hpp"
#include "factor.hpp"
#include "transf.hpp"

namespace epigen {

  inline constexpr std::size_t default_max_n = 8;

  namespace detail {
    inline void check_max_n(std::size_t n, std::size_t max_n) {
      if (n > max_n) {
        fail("degree " + std::to_string(n) + " exceeds max-n "
             + std::to_string(max_n));
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  //! A deduplicated list of transformations in discovery order, with
  //! optional parent links. A parent {prev, gen} records that the member is
  //! members()[prev] * generators()[gen]; prev == root marks a generator.
  class ElementSet {
   public:
    static constexpr std::size_t root = std::numeric_limits<std::size_t>::max();

    struct Parent {
      std::size_t prev;
      std::size_t gen;
    };

    explicit ElementSet(std::size_t n) : _n(n) {}

    //! Returns false if \p t was already present (its parent is unchanged).
    bool insert(Transformation const& t,
                std::optional<Parent> parent = std::nullopt) {
      detail::check_same_degree(t.degree(), _n);
      auto [it, inserted] = _index.try_emplace(t, _members.size());
      if (inserted) {
        _members.push_back(t);
        _parents.push_back(parent);
      }
      return inserted;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _members.size();
    }

    [[nodiscard]] bool contains(Transformation const& t) const {
      return _index.contains(t);
    }

    [[nodiscard]] std::optional<std::size_t>
    index_of(Transformation const& t) const {
      auto it = _index.find(t);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::vector<Transformation> const& members() const noexcept {
      return _members;
    }

    [[nodiscard]] Transformation const& operator[](std::size_t i) const {
      return _members.at(i);
    }

    [[nodiscard]] std::optional<Parent> parent(std::size_t i) const {
      return _parents.at(i);
    }

    [[nodiscard]] std::vector<Transformation> const&
    generators() const noexcept {
      return _gens;
    }

    void set_generators(std::vector<Transformation> gens) {
      _gens = std::move(gens);
    }

    //! Generator indices whose left-to-right product is member \p i.
    [[nodiscard]] std::vector<std::size_t> witness(std::size_t i) const {
      std::vector<std::size_t> out;
      for (std::optional<std::size_t> j = i; j;) {
        auto const& p = _parents.at(*j);
        if (!p) {
          detail::fail("element has no parent link");
        }
        out.push_back(p->gen);
        j = p->prev == root ? std::nullopt : std::optional(p->prev);
      }
      std::reverse(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] Transformation evaluate_witness(std::size_t i) const {
      std::vector<Transformation> ts;
      for (auto g : witness(i)) {
        ts.push_back(_gens.at(g));
      }
      return product(ts);
    }

    //! Members sorted lexicographically, for order-free comparison.
    [[nodiscard]] std::vector<Transformation> sorted_members() const {
      auto out = _members;
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    std::size_t                                     _n;
    std::vector<Transformation>                     _members;
    std::vector<std::optional<Parent>>              _parents;
    std::unordered_map<Transformation, std::size_t> _index;
    std::vector<Transformation>                     _gens;
  };

  //! True iff \p s and \p t hold the same elements, in any order.
  inline bool same_elements(ElementSet const& s, ElementSet const& t) {
    return s.degree() == t.degree() && s.size() == t.size()
           && s.sorted_members() == t.sorted_members();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! All n^n transformations in lexicographic order.
  inline std::vector<Transformation>
  all_transformations(std::size_t n, std::size_t max_n = default_max_n) {
    detail::check_max_n(n, max_n);
    std::vector<Transformation> out;
    std::vector<point_type>     img(n, 0);
    while (true) {
      out.emplace_back(img);
      std::size_t i = n;
      while (i > 0 && img[i - 1] == n - 1) {
        img[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++img[i - 1];
    }
  }

  //! All n! permutations in lexicographic order.
  inline std::vector<Permutation>
  all_permutations(std::size_t n, std::size_t max_n = default_max_n) {
    detail::check_max_n(n, max_n);
    std::vector<Permutation> out;
    auto                     img = Transformation::identity(n).images();
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  //! All transformations of rank < n, in lexicographic order.
  inline std::vector<Transformation>
  singular_transformations(std::size_t n, std::size_t max_n = default_max_n) {
    auto all = all_transformations(n, max_n);
    std::erase_if(all, [](auto const& t) { return t.is_permutation(); });
    return all;
  }

  //! All idempotents of rank exactly \p k, each produced once: partitions
  //! of [n] into k classes (restricted growth strings in lexicographic
  //! order) times a choice of representative per class.
  inline ElementSet enumerate_idempotents(std::size_t n,
                                          std::size_t k,
                                          std::size_t max_n = default_max_n) {
    if (n == 0 || k < 1 || k > n) {
      detail::fail("rank " + std::to_string(k) + " out of range [1, "
                   + std::to_string(n) + "]");
    }
    detail::check_max_n(n, max_n);
    ElementSet out(n);

    std::vector<std::size_t> rgs(n, 0);
    // emit every choice of representatives for the partition given by rgs
    auto emit = [&]() {
      std::vector<std::vector<point_type>> classes(k);
      for (point_type x = 0; x < n; ++x) {
        classes[rgs[x]].push_back(x);
      }
      std::vector<std::size_t> choice(k, 0);
      while (true) {
        std::vector<point_type> img(n);
        for (std::size_t c = 0; c < k; ++c) {
          for (auto x : classes[c]) {
            img[x] = classes[c][choice[c]];
          }
        }
        out.insert(Transformation(std::move(img)));
        std::size_t c = k;
        while (c > 0 && choice[c - 1] + 1 == classes[c - 1].size()) {
          choice[--c] = 0;
        }
        if (c == 0) {
          return;
        }
        ++choice[c - 1];
      }
    };

    // rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]); keep those using
    // exactly k labels
    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
      if (used + (n - i) < k) {
        return;
      }
      if (i == n) {
        if (used == k) {
          emit();
        }
        return;
      }
      for (std::size_t v = 0; v <= used && v < k; ++v) {
        rgs[i] = v;
        self(self, i + 1, v == used ? used + 1 : used);
      }
    };
    recurse(recurse, 0, 0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  //! The subsemigroup generated by \p gens, by breadth-first right
  //! multiplication by generators. Generators are sorted and deduplicated
  //! first, so the member order and the parent links are deterministic.
  inline ElementSet closure(std::vector<Transformation> gens,
                            std::size_t max_n = default_max_n) {
    if (gens.empty()) {
      detail::fail("closure needs at least one generator");
    }
    auto const n = gens.front().degree();
    for (auto const& g : gens) {
      detail::check_same_degree(g.degree(), n);
    }
    detail::check_max_n(n, max_n);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    ElementSet out(n);
    out.set_generators(gens);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      out.insert(gens[j], ElementSet::Parent{ElementSet::root, j});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        out.insert(out[i] * gens[j], ElementSet::Parent{i, j});
      }
    }
    return out;
  }

  inline ElementSet closure(ElementSet const& gens,
                            std::size_t       max_n = default_max_n) {
    return closure(gens.members(), max_n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and conjugacy classes
  ////////////////////////////////////////////////////////////////////////

  //! {t : rank(t) <= k} for 1 <= k <= n - 1, in lexicographic order. The
  //! two-sided ideal property s * t, t * s in the set for every singular s is
  //! asserted: exhaustively when that takes at most 10^7 products, otherwise
  //! on 10^6 seeded random pairs.
  inline ElementSet ideal_elements(std::size_t n,
                                   std::size_t k,
                                   std::size_t max_n = default_max_n) {
    if (n < 2 || k < 1 || k >= n) {
      detail::fail("rank " + std::to_string(k) + " out of range [1, "
                   + std::to_string(n == 0 ? 0 : n - 1) + "]");
    }
    auto const singular = singular_transformations(n, max_n);
    ElementSet out(n);
    for (auto const& t : singular) {
      if (t.rank() <= k) {
        out.insert(t);
      }
    }
    auto check = [&](Transformation const& s, Transformation const& t) {
      if (!out.contains(s * t) || !out.contains(t * s)) {
        throw SelfCheckFailure("rank-" + std::to_string(k)
                               + " set is not a two-sided ideal");
      }
    };
    constexpr std::size_t exhaustive_limit = 10'000'000;
    if (out.size() * singular.size() <= exhaustive_limit) {
      for (auto const& t : out.members()) {
        for (auto const& s : singular) {
          check(s, t);
        }
      }
    } else {
      std::mt19937_64                            rng(0);
      std::uniform_int_distribution<std::size_t> pick_t(0, out.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_s(0, singular.size() - 1);
      for (std::size_t i = 0; i < 1'000'000; ++i) {
        check(singular[pick_s(rng)], out[pick_t(rng)]);
      }
    }
    return out;
  }

  //! {t^g : g in S_n} in the order of first appearance over
  //! lexicographically ordered g.
  inline ElementSet conjugacy_class(Transformation const& t,
                                    std::size_t max_n = default_max_n) {
    ElementSet out(t.degree());
    for (auto const& g : all_permutations(t.degree(), max_n)) {
      out.insert(conjugate(t, g));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word search
  ////////////////////////////////////////////////////////////////////////

  //! A word over \p a evaluating to \p target, found by breadth-first search
  //! over the elements g0 * a * g1 * ... * a * gr. Starting from a, the moves
  //! are right multiplication by a, and left or right multiplication by the
  //! generators (1 2) and (1 2 ... n) of S_n. Throws NotAMember only once
  //! the search is exhausted.
  inline Word find_word(Transformation const& target,
                        Transformation const& a,
                        std::size_t           max_n = default_max_n) {
    auto const n = a.degree();
    detail::check_same_degree(target.degree(), n);
    if (a.is_permutation()) {
      detail::fail("the base must be singular");
    }
    if (target.is_permutation()) {
      detail::fail("the target must be singular");
    }
    detail::check_max_n(n, max_n);

    std::vector<point_type> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::vector<Permutation> sgens{Permutation::transposition(n, 0, 1),
                                   Permutation::from_cycles(n, {cycle})};

    // move 0: * a; moves 1, 2: * s; moves 3, 4: s *
    constexpr std::size_t n_moves = 5;
    auto apply = [&](Transformation const& x, std::size_t move) {
      if (move == 0) {
        return x * a;
      }
      if (move <= 2) {
        return x * sgens[move - 1].transf();
      }
      return sgens[move - 3].transf() * x;
    };

    ElementSet seen(n);
    seen.insert(a, ElementSet::Parent{ElementSet::root, 0});
    std::optional<std::size_t> hit = seen.index_of(target);
    for (std::size_t i = 0; !hit && i < seen.size(); ++i) {
      for (std::size_t mv = 0; mv < n_moves && !hit; ++mv) {
        auto next = apply(seen[i], mv);
        if (seen.insert(next, ElementSet::Parent{i, mv}) && next == target) {
          hit = seen.size() - 1;
        }
      }
    }
    if (!hit) {
      throw NotAMember("target is not in the semigroup generated by the base "
                       "and the symmetric group");
    }

    std::vector<std::size_t> moves;
    for (std::size_t j = *hit; seen.parent(j)->prev != ElementSet::root;
         j = seen.parent(j)->prev) {
      moves.push_back(seen.parent(j)->gen);
    }
    std::reverse(moves.begin(), moves.end());

    std::vector<Permutation> perms(2, Permutation::identity(n));
    for (auto mv : moves) {
      if (mv == 0) {
        perms.push_back(Permutation::identity(n));
      } else if (mv <= 2) {
        perms.back() = perms.back() * sgens[mv - 1];
      } else {
        perms.front() = sgens[mv - 3] * perms.front();
      }
    }
    return Word(a, std::move(perms));
  }

  ////////////////////////////////////////////////////////////////////////
  // Whole-result checks
  ////////////////////////////////////////////////////////////////////////

  //! For every 1 <= k < n: the idempotents of rank <= k generate exactly the
  //! elements of rank <= k, and the idempotents of rank exactly k generate
  //! every element of rank k.
  inline bool verify_theorem2(std::size_t n, std::size_t max_n = default_max_n) {
    if (n < 2) {
      detail::fail("degree must be at least 2");
    }
    detail::check_max_n(n, max_n);
    std::vector<Transformation> cumulative;
    for (std::size_t k = 1; k < n; ++k) {
      auto const rank_k = enumerate_idempotents(n, k, max_n);
      cumulative.insert(cumulative.end(),
                        rank_k.members().cbegin(),
                        rank_k.members().cend());
      if (!same_elements(closure(cumulative, max_n),
                         ideal_elements(n, k, max_n))) {
        return false;
      }
      auto const per_rank = closure(rank_k, max_n);
      for (auto const& t : singular_transformations(n, max_n)) {
        if (t.rank() == k && !per_rank.contains(t)) {
          return false;
        }
      }
    }
    return true;
  }

  //! <C_a> = <C_e> = <{a} and S_n> minus S_n, with e from eg_decompose(a).
  inline bool verify_theorem5(Transformation const& a,
                              std::size_t           max_n = default_max_n) {
    if (a.is_permutation()) {
      detail::fail("input must be singular");
    }
    auto const n = a.degree();
    detail::check_max_n(n, max_n);
    auto const e        = eg_decompose(a).first;
    auto const from_a   = closure(conjugacy_class(a, max_n), max_n);
    auto const from_e   = closure(conjugacy_class(e, max_n), max_n);
    std::vector<Transformation> gens{a};
    for (auto const& g : all_permutations(n, max_n)) {
      gens.push_back(g.transf());
    }
    ElementSet with_sym(n);
    auto const generated = closure(gens, max_n);
    for (auto const& t : generated.members()) {
      if (!t.is_permutation()) {
        with_sym.insert(t);
      }
    }
    return same_elements(from_a, from_e) && same_elements(from_e, with_sym);
  }

}  // namespace epigen

#endif  // EPIGEN_ORACLE_HPP_
