#ifndef BITENSOR_TESTS_SUPPORT_HPP
#define BITENSOR_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "bitensor/basis.hpp"
#include "bitensor/element.hpp"

namespace bitensor::test {

/// Seed shared by every randomized test.
inline constexpr unsigned kSeed = 20240611;

inline Phrase ph(std::vector<Word> words) { return Phrase::from_words(words); }

inline Element el(int d, std::initializer_list<std::pair<Rational, Phrase>> terms) {
  Element e(d);
  for (const auto& [c, p] : terms) e.add_term(p, c);
  return e;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  int n = 0;
  while (n == 0) n = num(rng);
  return ratio(n, den(rng));
}

/// A random combination of up to max_terms basis phrases of degree <= max_degree.
inline Element random_element(std::mt19937& rng, int d, int max_degree, int max_terms) {
  std::vector<Phrase> pool;
  for (int n = 0; n <= max_degree; ++n) {
    auto b = basis_phrases(n, d);
    pool.insert(pool.end(), b.begin(), b.end());
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  Element e(d);
  for (int i = count(rng); i > 0; --i) e.add_term(pool[pick(rng)], random_rational(rng));
  return e;
}

}  // namespace bitensor::test

#endif  // BITENSOR_TESTS_SUPPORT_HPP
