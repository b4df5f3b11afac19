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

// JSON forms of factorizations, conjugate factors and element sets. Keys are
// emitted in a fixed order so that output is byte-stable.

#ifndef EPIGEN_SERIALIZE_HPP_
#define EPIGEN_SERIALIZE_HPP_

#include <vector>  // for vector

#include "json.hpp"  // for nlohmann::ordered_json

#include "conjugacy.hpp"
#include "factor.hpp"
#include "oracle.hpp"
#include "text.hpp"

namespace epigen {

  using json = nlohmann::ordered_json;

  inline json to_json(ConjugateFactor const& cf) {
    return json{{"base", to_string(cf.base)},
                {"conjugator", to_cycle_string(cf.conjugator)},
                {"value", to_string(cf.value)}};
  }

  inline json to_json(std::vector<ConjugateFactor> const& fs) {
    auto out = json::array();
    for (auto const& cf : fs) {
      out.push_back(to_json(cf));
    }
    return out;
  }

  inline json to_json(Factorization const& f, bool verified) {
    json out;
    out["n"]     = f.input.degree();
    out["input"] = to_string(f.input);
    out["rank"]  = f.rank;
    if (f.base) {
      out["base"] = to_string(*f.base);
    }
    auto factors = json::array();
    for (auto const& r : f.factors) {
      json rec;
      rec["images"] = to_string(r.value);
      rec["kind"]   = kind_name(r.kind);
      if (r.conjugator) {
        rec["conjugator"] = to_cycle_string(*r.conjugator);
      }
      factors.push_back(std::move(rec));
    }
    out["factors"]  = std::move(factors);
    out["verified"] = verified;
    return out;
  }

  inline json to_json(ElementSet const& s) {
    auto members = json::array();
    for (auto const& t : s.members()) {
      members.push_back(to_string(t));
    }
    return json{
        {"n", s.degree()}, {"size", s.size()}, {"members", std::move(members)}};
  }

}  // namespace epigen

#endif  // EPIGEN_SERIALIZE_HPP_
