#include "brd/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "brd/error.hpp"
#include "brd/normal_form.hpp"
#include "brd/text.hpp"
#include "brd/weyl.hpp"

namespace brd {

std::pair<std::int64_t, Connector> typeA_oracle_product(const Connector& c1,
                                                        const Connector& c2) {
  const int n = c1.size();
  if (c2.size() != n || !c1.is_undecorated() || !c2.is_undecorated())
    fail("SizeMismatch", "oracle needs two undecorated connectors of size n");

  auto table = [n](const Connector& c) {
    std::vector<int> p(2 * n + 1, 0);
    for (const auto& pr : c.pairs()) {
      p[pr.a + n] = pr.b;
      p[pr.b + n] = pr.a;
    }
    return p;
  };
  std::vector<int> p1 = table(c1), p2 = table(c2);

  std::vector<char> used(n + 1, 0);  // interface points crossed
  std::vector<char> done_top(n + 1, 0), done_bot(n + 1, 0);
  std::vector<Connector::Pair> pairs;

  // Walks from a boundary point to the far end of its composite strand.
  auto walk = [&](int layer, int pt) {
    while (true) {
      if (layer == 1) {
        int q = p1[pt + n];
        if (q > 0) return std::pair<int, int>{1, q};
        used[-q] = 1;
        layer = 2;
        pt = -q;
      } else {
        int q = p2[pt + n];
        if (q < 0) return std::pair<int, int>{2, q};
        used[q] = 1;
        layer = 1;
        pt = -q;
      }
    }
  };

  for (int s = 1; s <= n; ++s) {
    if (done_top[s]) continue;
    done_top[s] = 1;
    auto [ly, q] = walk(1, s);
    if (ly == 1)
      done_top[q] = 1;
    else
      done_bot[-q] = 1;
    pairs.push_back({s, q, false});
  }
  for (int s = 1; s <= n; ++s) {
    if (done_bot[s]) continue;
    done_bot[s] = 1;
    auto [ly, q] = walk(2, -s);
    (void)ly;
    done_bot[-q] = 1;
    pairs.push_back({-s, q, false});
  }

  std::int64_t loops = 0;
  for (int s = 1; s <= n; ++s) {
    if (used[s]) continue;
    int cur = s;
    while (!used[cur]) {
      used[cur] = 1;
      int a = p2[cur + n];  // c2 arc to another interface point
      used[a] = 1;
      int b = p1[-a + n];  // c1 arc back down
      cur = -b;
    }
    ++loops;
  }

  return {loops, Connector::make(n, std::move(pairs))};
}

namespace {

constexpr std::int64_t kDefaultSamples = 10000;
constexpr std::int64_t kExhaustiveLimit = 20000;

using G = GeneratorSymbol;
using BasisPtr = std::shared_ptr<const std::vector<BasisDiagram>>;

struct Case {
  std::int64_t id = 0;
  std::function<std::optional<SuiteFailure>()> fn;
};

std::string shquote(const std::string& s) { return "\"" + s + "\""; }

std::string eval_replay(int n, const Word& w, Mode mode = Mode::Strict) {
  std::string cmd = "brd eval -n " + std::to_string(n);
  if (mode == Mode::Extended) cmd += " --mode extended";
  return cmd + " " + shquote(word_to_string(w));
}

std::string product_replay(int n, const AlgebraElement& a,
                           const AlgebraElement& b) {
  return "brd product -n " + std::to_string(n) + " " + shquote(to_string(a)) +
         " " + shquote(to_string(b));
}

std::optional<SuiteFailure> compare(std::int64_t id,
                                    const AlgebraElement& actual,
                                    const AlgebraElement& expected,
                                    std::string replay) {
  if (actual == expected) return std::nullopt;
  return SuiteFailure{id, std::move(replay), to_string(expected),
                      to_string(actual)};
}

Case word_case(std::int64_t id, int n, Word lhs, Word rhs, Mode mode) {
  return {id, [id, n, lhs = std::move(lhs), rhs = std::move(rhs), mode]() {
            return compare(id, eval_word(n, lhs, mode),
                           eval_word(n, rhs, mode), eval_replay(n, lhs, mode));
          }};
}

Case count_case(std::int64_t id, std::string replay, std::function<Int()> get,
                Int expected) {
  return {id, [id, replay = std::move(replay), get = std::move(get),
               expected]() -> std::optional<SuiteFailure> {
            Int got = get();
            if (got == expected) return std::nullopt;
            return SuiteFailure{id, replay, expected.str(), got.str()};
          }};
}

AlgebraElement unit_term(const BasisDiagram& d, Mode mode) {
  return AlgebraElement::term(d, LaurentPoly::constant(1), mode);
}

// Multiplies by xi*delta^-1 termwise.
AlgebraElement xi_delta_inv(const AlgebraElement& a) {
  AlgebraElement out = AlgebraElement::zero(a.size(), a.mode());
  for (const auto& [d, c] : a.terms()) {
    ClassProduct cp = class_mul(LambdaClass::Xi, d.cls);
    out.add_term(make_basis_diagram(cp.cls, d.conn, a.mode()),
                 c * LaurentPoly::delta_power(cp.delta_shift - 1));
  }
  return out;
}

bool adjacent_nodes(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1) return j == 3;
  return j == i + 1;
}

std::vector<Case> relations_cases(int n) {
  std::vector<Case> cs;
  if (n < 2) return cs;
  std::int64_t id = 0;
  for (int i = 1; i <= n; ++i) {
    cs.push_back(word_case(id++, n, {G::r(i), G::r(i)}, {}, Mode::Strict));
    cs.push_back(
        word_case(id++, n, {G::r(i), G::e(i)}, {G::e(i)}, Mode::Strict));
    cs.push_back(
        word_case(id++, n, {G::e(i), G::r(i)}, {G::e(i)}, Mode::Strict));
    cs.push_back(word_case(id++, n, {G::e(i), G::e(i)},
                           {G::delta(1), G::e(i)}, Mode::Strict));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (adjacent_nodes(i, j)) {
        cs.push_back(word_case(id++, n, {G::r(i), G::r(j), G::r(i)},
                               {G::r(j), G::r(i), G::r(j)}, Mode::Strict));
        cs.push_back(word_case(id++, n, {G::e(i), G::r(j), G::e(i)},
                               {G::e(i)}, Mode::Strict));
        cs.push_back(word_case(id++, n, {G::r(j), G::r(i), G::e(j)},
                               {G::e(i), G::e(j)}, Mode::Strict));
        cs.push_back(word_case(id++, n, {G::e(i), G::r(j), G::r(i)},
                               {G::e(i), G::e(j)}, Mode::Strict));
      } else {
        cs.push_back(word_case(id++, n, {G::r(i), G::r(j)},
                               {G::r(j), G::r(i)}, Mode::Strict));
        cs.push_back(word_case(id++, n, {G::e(i), G::r(j)},
                               {G::r(j), G::e(i)}, Mode::Strict));
        cs.push_back(word_case(id++, n, {G::e(i), G::e(j)},
                               {G::e(j), G::e(i)}, Mode::Strict));
      }
    }
  return cs;
}

Root minus_root(int a, int b) {
  return a < b ? make_root(a, b, false) : make_root(b, a, false);
}

std::vector<Case> lemma_cases(int n) {
  std::vector<Case> cs;
  std::int64_t id = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        auto target = [&](bool top_dec) {
          std::vector<Connector::Pair> ps{
              {i, j, top_dec}, {-i, -j, !top_dec}, {k, -k, true}};
          for (int m = 1; m <= n; ++m)
            if (m != i && m != j && m != k) ps.push_back({m, -m, false});
          return Connector::make(n, std::move(ps));
        };
        Connector f = target(true), g = target(false);
        for (int c = 0; c < 4; ++c) {
          bool via_j = c & 1;
          bool plus_beta = c & 2;
          Root alpha = minus_root(k, via_j ? j : i);
          Root beta = make_root(i, j, plus_beta);
          Word lhs{G::r_beta(alpha), G::r_beta(mate(alpha)), G::e_beta(beta)};
          AlgebraElement rhs = AlgebraElement::term(
              {via_j ? LambdaClass::Xi : LambdaClass::One,
               plus_beta ? g : f},
              LaurentPoly::delta_power(via_j ? -1 : 0), Mode::Strict);
          std::int64_t cid = id++;
          cs.push_back({cid, [cid, n, lhs, rhs]() {
                          return compare(cid, eval_word(n, lhs, Mode::Strict),
                                         rhs, eval_replay(n, lhs));
                        }});
        }
      }
  return cs;
}

// Two fixed stackings where a bottom arc of the left factor chains with a
// top arc of the right factor, over every decoration pattern.  Shared point
// on the left: the xi factor appears exactly when one arc is decorated.
// Shared point on the right: it never does.
std::vector<Case> remark_v_cases(int n) {
  std::vector<Case> cs;
  if (n < 3) return cs;
  auto pad = [n](std::vector<Connector::Pair> ps) {
    for (int k = 4; k <= n; ++k) ps.push_back({k, -k, false});
    return Connector::make(n, std::move(ps));
  };
  for (std::int64_t id = 0; id < 8; ++id) {
    bool right = id & 4, da = id & 1, db = id & 2;
    Connector c1 =
        right ? pad({{1, 2, da}, {3, -2, false}, {-1, -3, da}})
              : pad({{2, 3, da}, {1, -3, false}, {-1, -2, da}});
    Connector c2 =
        right ? pad({{2, 3, db}, {1, -1, false}, {-2, -3, db}})
              : pad({{1, 3, db}, {2, -1, false}, {-2, -3, db}});
    bool tolled = !right && da != db;
    Connector out =
        right ? pad({{1, 2, da}, {3, -1, da != db}, {-2, -3, db}})
              : pad({{2, 3, da}, {1, -1, da != db}, {-2, -3, db}});
    AlgebraElement a = unit_term({LambdaClass::One, c1}, Mode::Strict);
    AlgebraElement b = unit_term({LambdaClass::One, c2}, Mode::Strict);
    AlgebraElement rhs = AlgebraElement::term(
        {tolled ? LambdaClass::Xi : LambdaClass::One, out},
        LaurentPoly::delta_power(tolled ? -1 : 0), Mode::Strict);
    cs.push_back({id, [id, n, a, b, rhs]() {
                    return compare(id, multiply(a, b), rhs,
                                   product_replay(n, a, b));
                  }});
  }
  return cs;
}

std::vector<Case> remark_vi_cases(int n) {
  std::vector<Case> cs;
  std::int64_t id = 0;
  std::vector<Root> roots = positive_roots(n);
  for (const Root& a : roots) {
    Word lhs{G::r_beta(mate(a)), G::e_beta(a)};
    Word base{G::e_beta(a)};
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, lhs, base]() {
                    return compare(
                        cid, eval_word(n, lhs, Mode::Strict),
                        xi_delta_inv(eval_word(n, base, Mode::Strict)),
                        eval_replay(n, lhs));
                  }});
  }
  for (const Root& a : roots)
    for (const Root& b : roots) {
      if (std::abs(root_inner(a, b)) != 1) continue;
      Word lhs{G::r_beta(a), G::r_beta(mate(a)), G::e_beta(b)};
      Word base{G::e_beta(mate(b)), G::e_beta(a), G::e_beta(b)};
      std::int64_t cid = id++;
      cs.push_back({cid, [cid, n, lhs, base]() {
                      return compare(
                          cid, eval_word(n, lhs, Mode::Strict),
                          xi_delta_inv(eval_word(n, base, Mode::Strict)),
                          eval_replay(n, lhs));
                    }});
    }
  return cs;
}

std::vector<Case> counts_cases(int n) {
  std::vector<Case> cs;
  Counts want = count_connectors(n);
  std::string count_cmd = "brd count -n " + std::to_string(n);
  auto filter_size = [n](EnumFilter f) {
    return [n, f]() {
      return Int(static_cast<std::uint64_t>(enumerate_connectors(n, f).size()));
    };
  };
  auto filter_cmd = [n](const char* f) {
    return "brd enum -n " + std::to_string(n) + " --filter " + f;
  };
  cs.push_back(count_case(0, filter_cmd("all"), filter_size(EnumFilter::All),
                          want.T));
  cs.push_back(count_case(1, filter_cmd("undecorated"),
                          filter_size(EnumFilter::Undecorated), want.T0));
  cs.push_back(count_case(2, filter_cmd("horizontal"),
                          filter_size(EnumFilter::Horizontal), want.Teq));
  cs.push_back(count_case(3, filter_cmd("horizontal-undecorated"),
                          filter_size(EnumFilter::HorizontalUndecorated),
                          want.T0eq));
  cs.push_back(count_case(
      4, count_cmd,
      [n]() {
        return Int(static_cast<std::uint64_t>(
            enumerate_basis(n, Mode::Strict).size()));
      },
      want.d));
  cs.push_back(count_case(
      5, count_cmd,
      [n]() {
        return Int(static_cast<std::uint64_t>(
            enumerate_basis(n, Mode::Extended).size()));
      },
      want.ext));
  return cs;
}

// Index tuples for a suite over basis products: full odometer enumeration
// when small enough, otherwise seeded samples.
std::vector<std::array<std::int64_t, 3>> index_tuples(std::int64_t B,
                                                      int arity,
                                                      std::int64_t samples,
                                                      std::uint64_t seed,
                                                      bool* sampled) {
  std::int64_t total = B;
  bool exhaustive = B <= kExhaustiveLimit;
  for (int a = 1; exhaustive && a < arity; ++a) {
    total *= B;
    exhaustive = total <= kExhaustiveLimit;
  }
  *sampled = !exhaustive;
  std::vector<std::array<std::int64_t, 3>> out;
  if (exhaustive) {
    out.reserve(total);
    std::array<std::int64_t, 3> t{0, 0, 0};
    while (true) {
      out.push_back(t);
      int a = arity - 1;
      while (a >= 0 && ++t[a] == B) t[a--] = 0;
      if (a < 0) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    out.reserve(samples);
    for (std::int64_t i = 0; i < samples; ++i) {
      std::array<std::int64_t, 3> t{0, 0, 0};
      for (int a = 0; a < arity; ++a)
        t[a] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(B));
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Case> assoc_cases(int n, std::int64_t samples,
                              std::uint64_t seed, bool* sampled) {
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 3, samples, seed, sampled);
  std::vector<Case> cs;
  cs.reserve(tuples.size());
  std::int64_t id = 0;
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    AlgebraElement a = unit_term((*basis)[t[0]], Mode::Strict);
                    AlgebraElement b = unit_term((*basis)[t[1]], Mode::Strict);
                    AlgebraElement c = unit_term((*basis)[t[2]], Mode::Strict);
                    AlgebraElement ab = multiply(a, b);
                    AlgebraElement lhs = multiply(ab, c);
                    AlgebraElement rhs = multiply(a, multiply(b, c));
                    if (lhs == rhs) return std::nullopt;
                    return SuiteFailure{cid, product_replay(n, ab, c),
                                        to_string(rhs), to_string(lhs)};
                  }});
  }
  return cs;
}

std::vector<Case> closure_cases(int n, std::int64_t samples,
                                std::uint64_t seed, bool* sampled) {
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 2, samples, seed, sampled);
  std::vector<Case> cs;
  cs.reserve(tuples.size());
  std::int64_t id = 0;
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    const BasisDiagram& a = (*basis)[t[0]];
                    const BasisDiagram& b = (*basis)[t[1]];
                    std::string replay = product_replay(
                        n, unit_term(a, Mode::Strict),
                        unit_term(b, Mode::Strict));
                    try {
                      ProductTerm p = multiply_basis(a, b);
                      if (basis_valid(p.diag, Mode::Strict))
                        return std::nullopt;
                      return SuiteFailure{
                          cid, replay, "a strict-mode basis term",
                          scalar_to_string(p.diag.cls,
                                           LaurentPoly::delta_power(
                                               p.delta_exp)) +
                              " ; " + to_string(p.diag.conn)};
                    } catch (const Error& e) {
                      return SuiteFailure{cid, replay,
                                          "a strict-mode basis term",
                                          e.what()};
                    }
                  }});
  }
  return cs;
}

std::vector<Case> roundtrip_cases(int n, std::int64_t samples,
                                  std::uint64_t seed, bool* sampled) {
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 1, samples, seed, sampled);
  std::vector<Case> cs;
  cs.reserve(tuples.size());
  std::int64_t id = 0;
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    const BasisDiagram& d = (*basis)[t[0]];
                    std::string replay =
                        "brd nf -n " + std::to_string(n) + " " +
                        shquote(scalar_to_string(d.cls,
                                                 LaurentPoly::constant(1)) +
                                " ; " + to_string(d.conn));
                    try {
                      Monomial m = nu_inverse(d);
                      return compare(cid, nu(m), unit_term(d, Mode::Strict),
                                     replay);
                    } catch (const Error& e) {
                      return SuiteFailure{cid, replay, "a round-trip identity",
                                          e.what()};
                    }
                  }});
  }
  return cs;
}

std::vector<Case> pi_oracle_cases(int n, std::int64_t samples,
                                  std::uint64_t seed, bool* sampled) {
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 2, samples, seed, sampled);
  std::vector<Case> cs;
  cs.reserve(tuples.size());
  std::int64_t id = 0;
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    const BasisDiagram& a = (*basis)[t[0]];
                    const BasisDiagram& b = (*basis)[t[1]];
                    ProductTerm p = multiply_basis(a, b);
                    std::int64_t lhs_exp =
                        p.delta_exp + class_pi_exponent(p.diag.cls);
                    Connector lhs_conn = p.diag.conn.strip();
                    auto [r, oc] =
                        typeA_oracle_product(a.conn.strip(), b.conn.strip());
                    std::int64_t rhs_exp = r + class_pi_exponent(a.cls) +
                                           class_pi_exponent(b.cls);
                    if (lhs_exp == rhs_exp && lhs_conn == oc)
                      return std::nullopt;
                    auto img = [](std::int64_t e, const Connector& c) {
                      return scalar_to_string(LambdaClass::One,
                                              LaurentPoly::delta_power(e)) +
                             " ; " + to_string(c);
                    };
                    return SuiteFailure{
                        cid,
                        product_replay(n, unit_term(a, Mode::Strict),
                                       unit_term(b, Mode::Strict)),
                        img(rhs_exp, oc), img(lhs_exp, lhs_conn)};
                  }});
  }
  return cs;
}

std::vector<Case> opposition_cases(int n, std::int64_t samples,
                                   std::uint64_t seed, bool* sampled) {
  std::vector<Case> cs;
  std::int64_t id = 0;
  if (n >= 3) {
    auto pad = [n](std::vector<Connector::Pair> ps) {
      for (int k = 4; k <= n; ++k) ps.push_back({k, -k, false});
      return Connector::make(n, std::move(ps));
    };
    Connector c = pad({{1, 2, true}, {-1, -3, true}, {3, -2, false}});
    Connector want = pad({{-1, -2, true}, {1, 3, true}, {2, -3, false}});
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, c, want]() -> std::optional<SuiteFailure> {
                    Connector got = c.opposition();
                    if (got == want) return std::nullopt;
                    return SuiteFailure{
                        cid,
                        "brd op -n " + std::to_string(n) + " " +
                            shquote("1*(1) ; " + to_string(c)),
                        to_string(want), to_string(got)};
                  }});
  }
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 2, samples, seed, sampled);
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    AlgebraElement a = unit_term((*basis)[t[0]], Mode::Strict);
                    AlgebraElement b = unit_term((*basis)[t[1]], Mode::Strict);
                    AlgebraElement ab = multiply(a, b);
                    return compare(cid, opposition_el(ab),
                                   multiply(opposition_el(b),
                                            opposition_el(a)),
                                   "brd op -n " + std::to_string(n) + " " +
                                       shquote(to_string(ab)));
                  }});
  }
  return cs;
}

std::vector<Case> pole_flip_cases(int n, std::int64_t samples,
                                  std::uint64_t seed, bool* sampled) {
  std::vector<Case> cs;
  std::int64_t id = 0;
  if (n >= 2) {
    auto flip_index = [](int i) { return i == 1 ? 2 : i == 2 ? 1 : i; };
    for (int i = 1; i <= n; ++i) {
      int fi = flip_index(i);
      std::int64_t cid = id++;
      cs.push_back({cid, [cid, n, i, fi]() {
                      AlgebraElement src = gen_r(i, n, Mode::Strict);
                      return compare(cid, pole_flip_el(src),
                                     gen_r(fi, n, Mode::Strict),
                                     "brd flip -n " + std::to_string(n) + " " +
                                         shquote(to_string(src)));
                    }});
      cid = id++;
      cs.push_back({cid, [cid, n, i, fi]() {
                      AlgebraElement src = gen_e(i, n, Mode::Strict);
                      return compare(cid, pole_flip_el(src),
                                     gen_e(fi, n, Mode::Strict),
                                     "brd flip -n " + std::to_string(n) + " " +
                                         shquote(to_string(src)));
                    }});
    }
  }
  BasisPtr basis = std::make_shared<const std::vector<BasisDiagram>>(
      enumerate_basis(n, Mode::Strict));
  auto tuples = index_tuples(basis->size(), 2, samples, seed, sampled);
  for (const auto& t : tuples) {
    std::int64_t cid = id++;
    cs.push_back({cid, [cid, n, basis, t]() -> std::optional<SuiteFailure> {
                    AlgebraElement a = unit_term((*basis)[t[0]], Mode::Strict);
                    AlgebraElement b = unit_term((*basis)[t[1]], Mode::Strict);
                    AlgebraElement ab = multiply(a, b);
                    return compare(cid, pole_flip_el(ab),
                                   multiply(pole_flip_el(a), pole_flip_el(b)),
                                   "brd flip -n " + std::to_string(n) + " " +
                                       shquote(to_string(ab)));
                  }});
  }
  return cs;
}

std::vector<Case> extended_cases(int n) {
  std::vector<Case> cs;
  std::int64_t id = 0;
  if (n >= 2) {
    cs.push_back(word_case(id++, n, {G::xi(), G::e(1)},
                           {G::delta(1), G::r(2), G::e(1)}, Mode::Extended));
    cs.push_back(word_case(id++, n, {G::theta(), G::e(1)},
                           {G::delta(1), G::e(1), G::e(2)}, Mode::Extended));
  }
  cs.push_back(count_case(
      id++, "brd count -n " + std::to_string(n),
      [n]() {
        return Int(static_cast<std::uint64_t>(
            enumerate_basis(n, Mode::Extended).size()));
      },
      count_connectors(n).ext));
  return cs;
}

void execute(std::vector<Case>& cases, int jobs, SuiteReport& rep) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (auto& c : cases)
      if (auto f = c.fn()) rep.failures.push_back(std::move(*f));
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr err;
    auto work = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= cases.size()) break;
        try {
          if (auto f = cases[i].fn()) {
            std::lock_guard<std::mutex> lk(mu);
            rep.failures.push_back(std::move(*f));
          }
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!err) err = std::current_exception();
          break;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) {
                return a.case_id < b.case_id;
              });
  }
  rep.cases = static_cast<std::int64_t>(cases.size());
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "relations", "lemma-f",  "remark-v",  "remark-vi",
      "associativity", "closure", "counts", "roundtrip",
      "pi-oracle", "opposition", "pole-flip", "extended"};
  return names;
}

SuiteReport run_suite(const std::string& name, int n, std::int64_t budget,
                      std::uint64_t seed, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.n = n;
  rep.seed = seed;
  std::int64_t samples = budget > 0 ? budget : kDefaultSamples;
  bool sampled = false;

  std::vector<Case> cases;
  if (name == "relations")
    cases = relations_cases(n);
  else if (name == "lemma-f")
    cases = lemma_cases(n);
  else if (name == "remark-v")
    cases = remark_v_cases(n);
  else if (name == "remark-vi")
    cases = remark_vi_cases(n);
  else if (name == "associativity")
    cases = assoc_cases(n, samples, seed, &sampled);
  else if (name == "closure")
    cases = closure_cases(n, samples, seed, &sampled);
  else if (name == "counts")
    cases = counts_cases(n);
  else if (name == "roundtrip")
    cases = roundtrip_cases(n, samples, seed, &sampled);
  else if (name == "pi-oracle")
    cases = pi_oracle_cases(n, samples, seed, &sampled);
  else if (name == "opposition")
    cases = opposition_cases(n, samples, seed, &sampled);
  else if (name == "pole-flip")
    cases = pole_flip_cases(n, samples, seed, &sampled);
  else if (name == "extended")
    cases = extended_cases(n);
  else
    fail("UnknownSuite", name);

  if (!sampled && budget > 0 &&
      static_cast<std::int64_t>(cases.size()) > budget)
    fail("BudgetExceeded", name + " runs " + std::to_string(cases.size()) +
                               " cases, budget " + std::to_string(budget));

  execute(cases, jobs, rep);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::string dump_failures(const SuiteReport& report) {
  std::ostringstream os;
  if (report.failures.empty()) {
    os << "OK " << report.suite << " n=" << report.n
       << " cases=" << report.cases << "\n";
    return os.str();
  }
  os << "FAIL " << report.suite << " n=" << report.n
     << " cases=" << report.cases << " failures=" << report.failures.size()
     << " seed=" << report.seed << "\n";
  for (const auto& f : report.failures) {
    os << report.suite << ' ' << report.n << ' ' << f.case_id << " FAIL\n"
       << "  replay: " << f.replay << "\n"
       << "  expected: " << f.expected << "\n"
       << "  actual: " << f.actual << "\n";
  }
  return os.str();
}

}  // namespace brd
