// Shared generators for the randomized tests. Fixed seeds keep failures
// reproducible.
#pragma once

#include "uqsl2/catalog.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace uqsl2;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline QPoly random_qpoly(int max_degree, long coeff_bound) {
  std::vector<mpq_class> c;
  const int d = static_cast<int>(uniform(0, max_degree));
  for (int i = 0; i <= d; ++i) c.emplace_back(uniform(-coeff_bound, coeff_bound), uniform(1, 3));
  for (auto& x : c) x.canonicalize();
  return QPoly(c);
}

inline Scalar random_scalar(int max_degree = 3) {
  QPoly den;
  do den = random_qpoly(max_degree, 4);
  while (den.is_zero());
  return Scalar(random_qpoly(max_degree, 5), den) * Scalar::q_pow(uniform(-2, 2));
}

inline Scalar random_nonzero_scalar(int max_degree = 3) {
  Scalar s;
  do s = random_scalar(max_degree);
  while (s.is_zero());
  return s;
}

inline PlanePoly random_plane(std::uint32_t max_degree, int terms) {
  PlanePoly p;
  for (int i = 0; i < terms; ++i) {
    const auto d = static_cast<std::uint32_t>(uniform(0, max_degree));
    const auto a = static_cast<std::uint32_t>(uniform(0, d));
    p.add_term({a, d - a}, random_scalar(2));
  }
  return p;
}

/// Parameter samples: 1, q, q^2, 2, and a less tidy nonzero value.
inline std::vector<Scalar> parameter_samples() {
  return {Scalar(1), Scalar::q(), Scalar::q_pow(2), Scalar(2),
          Scalar(QPoly(std::vector<mpq_class>{1, 0, 3}), QPoly(std::vector<mpq_class>{-2, 1}))};
}

/// One or more members of every family, covering every s/t zero pattern.
inline std::vector<SeriesFamily> family_samples() {
  std::vector<SeriesFamily> out;
  for (int sx : {1, -1})
    for (int sy : {1, -1}) out.push_back(family::Trivial{sx, sy});
  for (const auto& p : parameter_samples()) {
    out.push_back(family::Standard{p});
    out.push_back(family::EB0{p});
    out.push_back(family::FC0{p});
  }
  const Scalar q = Scalar::q();
  for (const auto& s : {Scalar(0), q})
    for (const auto& t : {Scalar(0), Scalar(2)}) {
      out.push_back(family::EA0{Scalar::q_pow(2), s, t});
      out.push_back(family::FD0{Scalar(3), s, t});
    }
  return out;
}

}  // namespace testing_support
