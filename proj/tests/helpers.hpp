#pragma once

// Small conversions between the fixture row lists and library patterns.

#include "fixtures.hpp"
#include "patterns.hpp"

#include <doctest.h>

namespace helpers {

using nullcone::GTPattern;
using nullcone::GTPoset;

inline GTPattern make_pattern(const GTPoset& poset, const fixtures::PatternRows& rows) {
  GTPattern p = nullcone::zero_pattern(poset);
  const auto prows = poset.rows();
  REQUIRE(prows.size() == rows.size());
  for (std::size_t r = 0; r < prows.size(); ++r) {
    const auto& cells = prows[r].second;
    REQUIRE(cells.size() == rows[r].size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      p.values[static_cast<std::size_t>(poset.index_of(cells[c]))] = rows[r][c];
  }
  return p;
}

inline fixtures::PatternRows rows_of(const GTPattern& p) {
  fixtures::PatternRows out;
  for (const auto& [a, cells] : p.poset.rows()) {
    std::vector<std::int64_t> row;
    for (const auto& c : cells) row.push_back(p.at(c));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace helpers
