#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "brd/error.hpp"
#include "brd/weyl.hpp"

using namespace brd;

namespace {

// Breadth-first closure of the group generated by the simple reflections;
// the depth of an element is its Coxeter length.
std::map<SignedPermutation, int> group_by_depth(int n) {
  std::map<SignedPermutation, int> depth;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
  depth.emplace(frontier.front(), 0);
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const SignedPermutation& w : frontier) {
      int d = depth.at(w);
      for (int k = 1; k <= n; ++k) {
        SignedPermutation v = compose(w, simple_reflection(k, n));
        if (depth.emplace(v, d + 1).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return depth;
}

void orth_subsets(const std::vector<Root>& roots, std::size_t start,
                  std::vector<Root>& acc, int max_size,
                  std::vector<std::vector<Root>>& out) {
  if (!acc.empty()) out.push_back(acc);
  if (static_cast<int>(acc.size()) == max_size) return;
  for (std::size_t k = start; k < roots.size(); ++k) {
    bool ok = true;
    for (const Root& r : acc)
      if (root_inner(roots[k], r) != 0) ok = false;
    if (!ok) continue;
    acc.push_back(roots[k]);
    orth_subsets(roots, k + 1, acc, max_size, out);
    acc.pop_back();
  }
}

}  // namespace

TEST_CASE("root construction and mates") {
  Root a = make_root(1, 3, true);
  CHECK(a.i == 1);
  CHECK(a.j == 3);
  CHECK(a.plus);
  CHECK(mate(a) == make_root(1, 3, false));
  CHECK(mate(mate(a)) == a);
  CHECK(root_inner(a, mate(a)) == 0);
  CHECK(root_inner(a, a) == 2);
  CHECK(root_inner(make_root(1, 2, false), make_root(2, 3, false)) == -1);
  CHECK(root_inner(make_root(1, 2, true), make_root(2, 3, false)) == -1);
  CHECK(root_inner(make_root(1, 2, false), make_root(3, 4, true)) == 0);
  CHECK_THROWS_AS(make_root(3, 2, false), Error);
  CHECK_THROWS_AS(make_root(0, 2, false), Error);
}

TEST_CASE("simple roots") {
  CHECK(simple_root(1, 4) == make_root(1, 2, true));
  CHECK(simple_root(2, 4) == make_root(1, 2, false));
  CHECK(simple_root(3, 4) == make_root(2, 3, false));
  CHECK(simple_root(4, 4) == make_root(3, 4, false));
  CHECK_THROWS_AS(simple_root(5, 4), Error);
  CHECK_THROWS_AS(simple_root(0, 4), Error);
}

TEST_CASE("positive root inventory") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Root> roots = positive_roots(n);
    CHECK(static_cast<int>(roots.size()) == n * (n - 1));
    std::set<Root> uniq(roots.begin(), roots.end());
    CHECK(uniq.size() == roots.size());
  }
}

TEST_CASE("signed permutation validation") {
  CHECK_THROWS_AS(SignedPermutation::make({}), Error);
  CHECK_THROWS_AS(SignedPermutation::make({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation::make({1, 3}), Error);
  try {
    SignedPermutation::make({-1, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "OddNegatives");
  }
  SignedPermutation w = SignedPermutation::make({-2, -1, 3});
  CHECK(w.image(1) == -2);
  CHECK(w.apply(-1) == 2);
  CHECK(w.negative_count() == 2);
  CHECK_FALSE(w.is_identity());
  CHECK(compose(w, w.inverse()).is_identity());
  CHECK(compose(w.inverse(), w).is_identity());
}

TEST_CASE("composition order is f after g") {
  SignedPermutation f = SignedPermutation::make({2, 1, 3});
  SignedPermutation g = SignedPermutation::make({1, 3, 2});
  // (f . g)(2) = f(3) = 3
  CHECK(compose(f, g).image(2) == 3);
  CHECK(compose(g, f).image(2) == 1);
}

TEST_CASE("simple reflections and words") {
  SignedPermutation r2 = simple_reflection(2, 2);
  CHECK(r2.image(1) == 2);
  CHECK(r2.image(2) == 1);
  SignedPermutation r1 = simple_reflection(1, 2);
  CHECK(r1.image(1) == -2);
  CHECK(r1.image(2) == -1);
  CHECK(word_to_perm(2, {2}) == r2);
  CHECK(word_to_perm(2, {1}) == r1);
  CHECK(word_to_perm(2, {1, 1}).is_identity());
  CHECK(word_to_perm(3, {2, 3, 2}) == word_to_perm(3, {3, 2, 3}));
  for (int k = 1; k <= 4; ++k)
    CHECK(simple_reflection(k, 4) == reflection(simple_root(k, 4), 4));
}

TEST_CASE("reflections") {
  for (int n = 2; n <= 4; ++n)
    for (const Root& r : positive_roots(n)) {
      SignedPermutation s = reflection(r, n);
      CHECK(compose(s, s).is_identity());
      CHECK(act(s, r) == r);  // image -r renormalizes to r
      for (const Root& x : positive_roots(n))
        if (root_inner(r, x) == 0) CHECK(act(s, x) == x);
    }
}

TEST_CASE("action preserves orthogonality structure") {
  int n = 4;
  SignedPermutation w = SignedPermutation::make({3, -1, -4, 2});
  CHECK(act(reflection(make_root(2, 3, false), 3), make_root(1, 2, false)) ==
        make_root(1, 3, false));
  for (const Root& a : positive_roots(n))
    for (const Root& b : positive_roots(n))
      CHECK(std::abs(root_inner(act(w, a), act(w, b))) ==
            std::abs(root_inner(a, b)));
}

TEST_CASE("group order, length, reduced words") {
  for (int n : {2, 3, 4}) {
    auto depth = group_by_depth(n);
    std::size_t order = 1;  // 2^{n-1} n!
    for (int k = 2; k <= n; ++k) order *= k;
    order <<= (n - 1);
    CHECK(depth.size() == order);
    for (const auto& [w, d] : depth) {
      CHECK(length(w) == d);
      std::vector<int> rw = reduced_word(w);
      CHECK(static_cast<int>(rw.size()) == d);
      CHECK(word_to_perm(n, rw) == w);
    }
  }
}

TEST_CASE("reference admissible sets") {
  CHECK(admissible_Y(4, {0, Variant::Y}).empty());
  CHECK(admissible_Y(4, {1, Variant::Y}) ==
        std::vector<Root>{make_root(3, 4, false)});
  CHECK(admissible_Y(4, {2, Variant::Y}) ==
        std::vector<Root>{make_root(1, 2, false), make_root(3, 4, false)});
  CHECK(admissible_Y(4, {2, Variant::Yprime}) ==
        std::vector<Root>{make_root(1, 2, true), make_root(3, 4, false)});
  CHECK(admissible_Y(4, {1, Variant::YstarPaired}) ==
        std::vector<Root>{make_root(3, 4, false), make_root(3, 4, true)});
  CHECK(admissible_Y(5, {2, Variant::Y}) ==
        std::vector<Root>{make_root(2, 3, false), make_root(4, 5, false)});
  CHECK_THROWS_AS(admissible_Y(4, {1, Variant::Yprime}), Error);
  CHECK_THROWS_AS(admissible_Y(3, {2, Variant::Y}), Error);
  CHECK_THROWS_AS(admissible_Y(4, {0, Variant::YstarPaired}), Error);
  try {
    admissible_Y(6, {2, Variant::Yprime});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "BadVariant");
  }
}

TEST_CASE("classification of frozen examples") {
  ClassifyResult r =
      orbit_classify(4, {make_root(1, 2, true), make_root(3, 4, true)});
  CHECK(r.cls == AdmissibleClass{2, Variant::Y});

  r = orbit_classify(4, {make_root(3, 4, false), make_root(1, 2, true)});
  CHECK(r.cls == AdmissibleClass{2, Variant::Yprime});

  r = orbit_classify(3, {make_root(1, 2, true)});
  CHECK(r.cls == AdmissibleClass{1, Variant::Y});

  r = orbit_classify(3, {});
  CHECK(r.cls == AdmissibleClass{0, Variant::Y});
  CHECK(r.witness.is_identity());

  r = orbit_classify(2, {make_root(1, 2, false), make_root(1, 2, true)});
  CHECK(r.cls == AdmissibleClass{1, Variant::YstarPaired});
}

TEST_CASE("classification errors") {
  try {
    orbit_classify(3, {make_root(1, 2, false), make_root(1, 3, false)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "NotOrthogonal");
  }
  try {
    orbit_classify(4, {make_root(1, 2, false), make_root(1, 2, true),
                       make_root(3, 4, false)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.case_name() == "NotAdmissible");
  }
  CHECK_THROWS_AS(
      orbit_classify(3, {make_root(1, 2, false), make_root(1, 2, false)}),
      Error);
}

TEST_CASE("every orthogonal set gets a verified witness") {
  for (int n : {2, 3, 4}) {
    std::vector<Root> roots = positive_roots(n);
    std::vector<std::vector<Root>> sets;
    std::vector<Root> acc;
    orth_subsets(roots, 0, acc, n, sets);
    sets.push_back({});
    for (const std::vector<Root>& set : sets) {
      int mate_pairs = 0, unmated = 0;
      std::set<Root> as_set(set.begin(), set.end());
      for (const Root& r : set) {
        if (as_set.count(mate(r))) ++mate_pairs;
        else ++unmated;
      }
      if (mate_pairs > 0 && unmated > 0) {
        CHECK_THROWS_AS(orbit_classify(n, set), Error);
        continue;
      }
      ClassifyResult r = orbit_classify(n, set);
      if (unmated > 0) {
        CHECK(r.cls.t == static_cast<int>(set.size()));
        int plus = 0;
        for (const Root& x : set) plus += x.plus;
        if (2 * r.cls.t == n)
          CHECK((r.cls.variant == Variant::Yprime) == (plus % 2 == 1));
        else
          CHECK(r.cls.variant == Variant::Y);
      } else if (mate_pairs > 0) {
        CHECK(r.cls.variant == Variant::YstarPaired);
        CHECK(r.cls.t == static_cast<int>(set.size()) / 2);
      }
      CHECK(r.witness.negative_count() % 2 == 0);
      std::set<Root> image;
      for (const Root& y : admissible_Y(n, r.cls))
        image.insert(act(r.witness, y));
      CHECK(image == as_set);
    }
  }
}
