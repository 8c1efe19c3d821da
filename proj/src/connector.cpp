#include "brd/connector.hpp"

#include <algorithm>
#include <string>

#include "brd/error.hpp"

namespace brd {

namespace {

int key_of(int n, int endpoint) {
  if (endpoint >= 1 && endpoint <= n) return endpoint - 1;
  if (endpoint <= -1 && endpoint >= -n) return n - endpoint - 1;
  fail("OutOfRange", "endpoint " + std::to_string(endpoint) +
                         " not in range for n=" + std::to_string(n));
}

}  // namespace

Connector Connector::make(int n, std::vector<Pair> pairs) {
  if (n < 1) fail("OutOfRange", "connector size must be >= 1");
  if (static_cast<int>(pairs.size()) != n)
    fail("NotAMatching", "expected " + std::to_string(n) + " pairs, got " +
                             std::to_string(pairs.size()));
  std::vector<char> seen(2 * n, 0);
  int decorations = 0;
  for (Pair& p : pairs) {
    int ka = key_of(n, p.a);
    int kb = key_of(n, p.b);
    if (ka == kb) fail("NotAMatching", "endpoint paired with itself");
    if (ka > kb) {
      std::swap(p.a, p.b);
      std::swap(ka, kb);
    }
    if (seen[ka] || seen[kb]) fail("NotAMatching", "endpoint matched twice");
    seen[ka] = seen[kb] = 1;
    if (p.decorated) ++decorations;
  }
  if (decorations % 2 != 0)
    fail("OddDecoration", "decorated pair count must be even");
  std::sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
    return key_of(n, x.a) < key_of(n, y.a);
  });
  Connector c;
  c.n_ = n;
  c.pairs_ = std::move(pairs);
  c.build_index();
  return c;
}

Connector Connector::identity(int n) {
  std::vector<Pair> ps;
  ps.reserve(n);
  for (int i = 1; i <= n; ++i) ps.push_back({i, -i, false});
  return make(n, std::move(ps));
}

void Connector::build_index() {
  partner_.assign(2 * n_, 0);
  pair_of_.assign(2 * n_, -1);
  for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
    const Pair& p = pairs_[i];
    partner_[key_of(n_, p.a)] = p.b;
    partner_[key_of(n_, p.b)] = p.a;
    pair_of_[key_of(n_, p.a)] = i;
    pair_of_[key_of(n_, p.b)] = i;
  }
}

int Connector::endpoint_key(int endpoint) const { return key_of(n_, endpoint); }

int Connector::partner(int endpoint) const {
  return partner_[key_of(n_, endpoint)];
}

bool Connector::pair_decorated(int endpoint) const {
  return pairs_[pair_of_[key_of(n_, endpoint)]].decorated;
}

int Connector::pair_index(int endpoint) const {
  return pair_of_[key_of(n_, endpoint)];
}

int Connector::decoration_count() const {
  int c = 0;
  for (const Pair& p : pairs_)
    if (p.decorated) ++c;
  return c;
}

bool Connector::has_horizontal_pair() const {
  return horizontal_top_count() > 0;
}

int Connector::horizontal_top_count() const {
  int c = 0;
  for (const Pair& p : pairs_)
    if (p.a > 0 && p.b > 0) ++c;
  return c;
}

Connector Connector::opposition() const {
  std::vector<Pair> ps;
  ps.reserve(pairs_.size());
  for (const Pair& p : pairs_) ps.push_back({-p.a, -p.b, p.decorated});
  return make(n_, std::move(ps));
}

Connector Connector::strip() const {
  std::vector<Pair> ps = pairs_;
  for (Pair& p : ps) p.decorated = false;
  return make(n_, std::move(ps));
}

Connector Connector::pole_flip() const {
  std::vector<Pair> ps = pairs_;
  int top_pair = pair_of_[key_of(n_, 1)];
  int bottom_pair = pair_of_[key_of(n_, -1)];
  ps[top_pair].decorated = !ps[top_pair].decorated;
  ps[bottom_pair].decorated = !ps[bottom_pair].decorated;
  return make(n_, std::move(ps));
}

namespace {

void gen_matchings(int n, std::vector<int>& partner_key,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  int first = -1;
  for (int k = 0; k < 2 * n; ++k)
    if (partner_key[k] < 0) {
      first = k;
      break;
    }
  if (first < 0) {
    out.push_back(acc);
    return;
  }
  for (int k = first + 1; k < 2 * n; ++k) {
    if (partner_key[k] >= 0) continue;
    partner_key[first] = k;
    partner_key[k] = first;
    acc.push_back({first, k});
    gen_matchings(n, partner_key, acc, out);
    acc.pop_back();
    partner_key[first] = -1;
    partner_key[k] = -1;
  }
}

int endpoint_from_key(int n, int k) { return k < n ? k + 1 : -(k - n + 1); }

bool filter_accepts(const Connector& c, EnumFilter f) {
  switch (f) {
    case EnumFilter::All: return true;
    case EnumFilter::Undecorated: return c.is_undecorated();
    case EnumFilter::Horizontal: return c.has_horizontal_pair();
    case EnumFilter::HorizontalUndecorated:
      return c.has_horizontal_pair() && c.is_undecorated();
  }
  return false;
}

}  // namespace

std::vector<Connector> enumerate_connectors(int n, EnumFilter filter) {
  if (n < 1) fail("OutOfRange", "connector size must be >= 1");
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<int> partner_key(2 * n, -1);
  std::vector<std::pair<int, int>> acc;
  gen_matchings(n, partner_key, acc, matchings);

  std::vector<Connector> result;
  for (const auto& m : matchings) {
    bool want_undecorated = filter == EnumFilter::Undecorated ||
                            filter == EnumFilter::HorizontalUndecorated;
    std::uint64_t mask_limit = want_undecorated ? 1u : (1ull << n);
    for (std::uint64_t mask = 0; mask < mask_limit; ++mask) {
      if (__builtin_popcountll(mask) % 2 != 0) continue;
      std::vector<Connector::Pair> ps;
      ps.reserve(n);
      for (int i = 0; i < n; ++i)
        ps.push_back({endpoint_from_key(n, m[i].first),
                      endpoint_from_key(n, m[i].second),
                      (mask >> i & 1) != 0});
      Connector c = Connector::make(n, std::move(ps));
      if (filter_accepts(c, filter)) result.push_back(std::move(c));
    }
  }
  return result;
}

Counts count_connectors(int n) {
  if (n < 1) fail("OutOfRange", "connector size must be >= 1");
  Int odd_df = 1;  // (2n-1)(2n-3)...3.1
  for (int i = 1; i <= n; ++i) odd_df *= 2 * i - 1;
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  Int two_nm1 = Int(1) << (n - 1);
  Counts c;
  c.T = two_nm1 * odd_df;
  c.T0 = odd_df;
  c.Teq = two_nm1 * (odd_df - fact);
  c.T0eq = odd_df - fact;
  c.d = c.T + c.Teq + c.T0eq;
  c.ext = (2 * two_nm1 + 1) * odd_df;
  return c;
}

}  // namespace brd
