#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "brd/laurent.hpp"

namespace brd {

// A decorated n-connector: a perfect matching on the 2n endpoints
// {1..n} (top) and {-1..-n} (bottom) with a decoration bit per pair and an
// even total number of decorated pairs.  Pairs are kept in canonical order:
// endpoints ordered top 1 < ... < top n < bottom 1 < ... < bottom n, each
// pair stored (smaller, larger), pairs sorted by first endpoint.
class Connector {
public:
  struct Pair {
    int a = 0;
    int b = 0;
    bool decorated = false;
    auto operator<=>(const Pair&) const = default;
  };

  // Validates endpoints, the matching property and decoration parity.
  static Connector make(int n, std::vector<Pair> pairs);
  static Connector identity(int n);

  int size() const { return n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  // Canonical position of an endpoint in the ordering above, in [0, 2n).
  int endpoint_key(int endpoint) const;
  // The other endpoint of the pair containing `endpoint`.
  int partner(int endpoint) const;
  bool pair_decorated(int endpoint) const;
  int pair_index(int endpoint) const;

  int decoration_count() const;
  bool has_horizontal_pair() const;
  bool is_undecorated() const { return decoration_count() == 0; }
  // Number of top horizontal pairs (equal to the bottom count).
  int horizontal_top_count() const;

  Connector opposition() const;  // swap top and bottom, keep decorations
  Connector strip() const;       // remove all decorations
  // Toggle decoration of the pair containing top 1 and of the pair
  // containing bottom 1 (a single vertical pair through both: unchanged).
  Connector pole_flip() const;

  auto operator<=>(const Connector&) const = default;

private:
  Connector() = default;
  int n_ = 0;
  std::vector<Pair> pairs_;
  std::vector<int> partner_;  // indexed by endpoint_key
  std::vector<int> pair_of_;  // endpoint_key -> pair index
  void build_index();
};

enum class EnumFilter {
  All,
  Undecorated,
  Horizontal,
  HorizontalUndecorated,
};

// Deterministic enumeration: matchings by smallest-unmatched-first pairing,
// then decoration bitmasks in binary order restricted to even parity.
std::vector<Connector> enumerate_connectors(int n, EnumFilter filter);

struct Counts {
  Int T;      // all decorated connectors
  Int T0;     // undecorated
  Int Teq;    // with at least one horizontal pair
  Int T0eq;   // undecorated with a horizontal pair
  Int d;      // T + Teq + T0eq (basis dimension)
  Int ext;    // (2^n + 1) * odd double factorial (extended dimension)
};

// Closed-form counts (exact big integers).
Counts count_connectors(int n);

}  // namespace brd
