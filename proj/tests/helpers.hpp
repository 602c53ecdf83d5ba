#pragma once

#include <vector>

#include "eqbif/eulerring.hpp"
#include "eqbif/intlat.hpp"

namespace testing {

inline eqbif::TorusSubgroup H(std::size_t r, std::vector<std::vector<std::int64_t>> chars) {
  return eqbif::subgroup_canonical(r, chars);
}

inline eqbif::EulerElement chi(const eqbif::TorusSubgroup& h, long c = 1) {
  return eqbif::EulerElement::generator(h, c);
}

inline eqbif::IntMatrix M(std::vector<std::vector<long>> rows) {
  std::vector<eqbif::IntVector> big;
  for (const auto& r : rows) {
    eqbif::IntVector v;
    for (long x : r) v.emplace_back(x);
    big.push_back(v);
  }
  return eqbif::IntMatrix::from_rows(big, rows.empty() ? 0 : rows[0].size());
}

inline std::vector<eqbif::Rational> Q(std::vector<std::pair<long, long>> v) {
  std::vector<eqbif::Rational> out;
  for (auto [n, d] : v) {
    eqbif::Rational q(n, d);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace testing
