#pragma once

// Random generators and reference algorithms for tests. Nothing here calls
// into the distance or matching code paths it is used to check.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "expstr/cost_model.hpp"
#include "expstr/exp_string.hpp"
#include "expstr/matching.hpp"

namespace expstr::testing {

using Rng = std::mt19937_64;

inline Symbol sym(char32_t c) { return Symbol(c); }

inline std::vector<Symbol> alphabet_of(std::u32string_view letters) {
  std::vector<Symbol> out;
  for (char32_t c : letters) out.emplace_back(c);
  return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Positive rational num/den with num in [1, max_num], den in [1, max_den].
inline Rational random_exponent(Rng& rng, std::size_t max_num, std::size_t max_den) {
  Rational r(static_cast<unsigned long>(uniform(rng, 1, max_num)), static_cast<unsigned long>(uniform(rng, 1, max_den)));
  r.canonicalize();
  return r;
}

/// k/den for k uniform in [0, max_k], in lowest terms.
inline Rational random_fraction(Rng& rng, std::size_t max_k, std::size_t den) {
  Rational r(static_cast<unsigned long>(uniform(rng, 0, max_k)), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

/// Raw factors, possibly with equal adjacent symbols, before canonicalization.
inline std::vector<std::pair<Symbol, Rational>> random_raw_factors(Rng& rng, std::size_t max_factors,
                                                                   std::u32string_view letters, std::size_t max_num,
                                                                   std::size_t max_den) {
  std::vector<std::pair<Symbol, Rational>> out;
  std::size_t n = uniform(rng, 0, max_factors);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(Symbol(letters[uniform(rng, 0, letters.size() - 1)]), random_exponent(rng, max_num, max_den));
  return out;
}

/// Canonical string with at most max_flen factors (adjacent symbols distinct).
inline ExpString random_exp_string(Rng& rng, std::size_t max_flen, std::u32string_view letters, std::size_t max_num,
                                   std::size_t max_den, std::size_t min_flen = 0) {
  std::vector<std::pair<Symbol, Rational>> raw;
  std::size_t n = uniform(rng, min_flen, max_flen);
  for (std::size_t i = 0; i < n; ++i) {
    char32_t c;
    do {
      c = letters[uniform(rng, 0, letters.size() - 1)];
    } while (!raw.empty() && raw.back().first.code() == c && letters.size() > 1);
    raw.emplace_back(Symbol(c), random_exponent(rng, max_num, max_den));
  }
  return parse_factors(raw);
}

/// Random plain string of length at most max_len.
inline std::u32string random_plain(Rng& rng, std::size_t max_len, std::u32string_view letters) {
  std::u32string out;
  std::size_t n = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letters[uniform(rng, 0, letters.size() - 1)]);
  return out;
}

/// A random cost model satisfying positivity, zero diagonal and the triangle
/// inequality: random weights followed by shortest-path closure over the
/// alphabet plus the empty string.
inline CostModel random_valid_cost_model(Rng& rng, const std::vector<Symbol>& alphabet) {
  std::size_t n = alphabet.size() + 1;  // index 0 is the empty string
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = i == j ? Rational(0) : random_exponent(rng, 8, 4);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (w[i][k] + w[k][j] < w[i][j]) w[i][j] = w[i][k] + w[k][j];
  CostModel m;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    m.set_insertion(alphabet[a], w[0][a + 1]);
    m.set_deletion(alphabet[a], w[a + 1][0]);
    for (std::size_t b = 0; b < alphabet.size(); ++b) m.set_substitution(alphabet[a], alphabet[b], w[a + 1][b + 1]);
  }
  return m;
}

/// Textbook Levenshtein distance on plain sequences.
inline std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0), prev[j] + 1, cur[j - 1] + 1});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Symbol of p at x by linear scan over prefix sums.
inline char32_t scan_symbol(const ExpString& p, const Rational& x) {
  Rational start = 0;
  for (const auto& f : p.factors()) {
    if (start <= x && x < start + f.exponent.value()) return f.symbol.code();
    start += f.exponent.value();
  }
  return 0;
}

/// Random valid matching for strings of the given lengths: 2t sorted cut
/// points on each axis, segment k spanning the k-th pair.
inline ExpMatching random_matching(Rng& rng, const Rational& width, const Rational& height, std::size_t max_segments) {
  std::size_t t = uniform(rng, 0, max_segments);
  auto cuts = [&](const Rational& total) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < 2 * t; ++i) {
      out.push_back(total * random_fraction(rng, 24, 24));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto xs = cuts(width);
  auto ys = cuts(height);
  ExpMatching e{{}, width, height};
  for (std::size_t k = 0; k < t; ++k) {
    Rational h = std::min(Rational(xs[2 * k + 1] - xs[2 * k]), Rational(ys[2 * k + 1] - ys[2 * k]));
    if (sgn(h) > 0) e.segments.push_back({xs[2 * k], ys[2 * k], h});
  }
  return e;
}

}  // namespace expstr::testing
