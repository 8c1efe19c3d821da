#include "brd/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "brd/error.hpp"

namespace brd {

Root make_root(int i, int j, bool plus) {
  if (i < 1 || j <= i) fail("OutOfRange", "root needs 1 <= i < j");
  return {i, j, plus};
}

Root simple_root(int k, int n) {
  if (k < 1 || k > n) fail("OutOfRange", "simple root index out of range");
  if (k == 1) {
    if (n < 2) fail("OutOfRange", "alpha_1 needs n >= 2");
    return {1, 2, true};
  }
  return {k - 1, k, false};
}

Root mate(const Root& r) { return {r.i, r.j, !r.plus}; }

int root_inner(const Root& a, const Root& b) {
  // coefficient of e_k in a root
  auto coeff = [](const Root& r, int k) -> int {
    if (k == r.j) return 1;
    if (k == r.i) return r.plus ? 1 : -1;
    return 0;
  };
  int s = 0;
  for (int k : {b.i, b.j}) s += coeff(a, k) * coeff(b, k);
  return s;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({i, j, false});
      out.push_back({i, j, true});
    }
  return out;
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = k;
  SignedPermutation w;
  w.img_ = std::move(img);
  return w;
}

SignedPermutation SignedPermutation::make(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  if (n < 1) fail("OutOfRange", "empty permutation");
  std::vector<char> seen(n + 1, 0);
  int negatives = 0;
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n) fail("OutOfRange", "image out of range");
    if (seen[a]) fail("OutOfRange", "image repeated");
    seen[a] = 1;
    if (v < 0) ++negatives;
  }
  if (negatives % 2 != 0)
    fail("OddNegatives", "sign changes must be even in type D");
  SignedPermutation w;
  w.img_ = std::move(images);
  return w;
}

int SignedPermutation::image(int k) const {
  if (k < 1 || k > size()) fail("OutOfRange", "index out of range");
  return img_[k - 1];
}

int SignedPermutation::apply(int signed_idx) const {
  return signed_idx > 0 ? image(signed_idx) : -image(-signed_idx);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int k = 1; k <= size(); ++k) {
    int v = img_[k - 1];
    inv[std::abs(v) - 1] = v > 0 ? k : -k;
  }
  SignedPermutation w;
  w.img_ = std::move(inv);
  return w;
}

bool SignedPermutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if (img_[k - 1] != k) return false;
  return true;
}

int SignedPermutation::negative_count() const {
  int c = 0;
  for (int v : img_)
    if (v < 0) ++c;
  return c;
}

SignedPermutation compose(const SignedPermutation& f,
                          const SignedPermutation& g) {
  if (f.size() != g.size()) fail("SizeMismatch", "permutation sizes differ");
  std::vector<int> img(f.size());
  for (int k = 1; k <= f.size(); ++k) img[k - 1] = f.apply(g.image(k));
  SignedPermutation w;
  w.img_ = std::move(img);
  return w;
}

Root act(const SignedPermutation& w, const Root& r) {
  // w . (e_j + s*e_i) = sgn(vj)*e_|vj| + s*sgn(vi)*e_|vi|
  int vj = w.apply(r.j);
  int vi = w.apply(r.i);
  int s = r.plus ? 1 : -1;
  int idx_a = std::abs(vj), coeff_a = vj > 0 ? 1 : -1;
  int idx_b = std::abs(vi), coeff_b = s * (vi > 0 ? 1 : -1);
  if (idx_a < idx_b) {
    std::swap(idx_a, idx_b);
    std::swap(coeff_a, coeff_b);
  }
  if (coeff_a < 0) {
    coeff_a = -coeff_a;
    coeff_b = -coeff_b;
  }
  return {idx_b, idx_a, coeff_b > 0};
}

SignedPermutation reflection(const Root& r, int n) {
  if (r.j > n) fail("OutOfRange", "root index exceeds rank");
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = k;
  if (!r.plus) {
    img[r.i - 1] = r.j;
    img[r.j - 1] = r.i;
  } else {
    img[r.i - 1] = -r.j;
    img[r.j - 1] = -r.i;
  }
  return SignedPermutation::make(std::move(img));
}

SignedPermutation simple_reflection(int k, int n) {
  return reflection(simple_root(k, n), n);
}

SignedPermutation word_to_perm(int n, const std::vector<int>& word) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (int g : word) w = compose(w, simple_reflection(g, n));
  return w;
}

int length(const SignedPermutation& w) {
  int n = w.size();
  int len = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int vj = w.apply(j);
      int vi = w.apply(i);
      // e_j - e_i: negative iff coefficient on the larger image index < 0
      if (std::abs(vj) > std::abs(vi) ? vj < 0 : vi > 0) ++len;
      // e_j + e_i
      if (std::abs(vj) > std::abs(vi) ? vj < 0 : vi < 0) ++len;
    }
  return len;
}

std::vector<int> reduced_word(const SignedPermutation& w) {
  std::vector<int> word;
  SignedPermutation cur = w;
  int len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int k = 1; k <= cur.size(); ++k) {
      if (k == 1 && cur.size() < 2) continue;
      SignedPermutation nxt = compose(simple_reflection(k, cur.size()), cur);
      int nl = length(nxt);
      if (nl < len) {
        word.push_back(k);
        cur = std::move(nxt);
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) fail("Malformed", "no descent found");
  }
  return word;
}

std::vector<Root> admissible_Y(int n, const AdmissibleClass& cls) {
  int t = cls.t;
  if (t < 0 || 2 * t > n) fail("BadVariant", "t out of range");
  std::vector<Root> out;
  switch (cls.variant) {
    case Variant::Y:
      for (int a = n - 2 * t + 2; a <= n; a += 2)
        out.push_back(simple_root(a, n));
      break;
    case Variant::Yprime:
      if (n % 2 != 0 || 2 * t != n)
        fail("BadVariant", "Y' requires even n and t = n/2");
      out.push_back(simple_root(1, n));
      for (int a = 4; a <= n; a += 2) out.push_back(simple_root(a, n));
      break;
    case Variant::YstarPaired:
      if (t < 1) fail("BadVariant", "mate-closed class requires t >= 1");
      for (int a = n - 2 * t + 2; a <= n; a += 2) {
        out.push_back(simple_root(a, n));
        out.push_back(mate(simple_root(a, n)));
      }
      break;
  }
  return out;
}

ClassifyResult orbit_classify(int n, const std::vector<Root>& roots) {
  for (const Root& r : roots)
    if (r.j > n) fail("OutOfRange", "root index exceeds rank");
  std::set<Root> rs(roots.begin(), roots.end());
  if (rs.size() != roots.size()) fail("NotOrthogonal", "duplicate root");
  for (auto a = rs.begin(); a != rs.end(); ++a)
    for (auto b = std::next(a); b != rs.end(); ++b)
      if (root_inner(*a, *b) != 0)
        fail("NotOrthogonal", "roots are not mutually orthogonal");

  bool any_mate = false, all_mates = true;
  for (const Root& r : rs)
    if (rs.count(mate(r)))
      any_mate = true;
    else
      all_mates = false;
  if (any_mate && !all_mates)
    fail("NotAdmissible", "set contains some but not all mates");

  // Targets: index pairs with root type, sorted by smaller index.
  struct Target {
    int i, j;
    bool plus;  // meaningful only for the non-mate-closed case
  };
  std::vector<Target> targets;
  AdmissibleClass cls;
  if (any_mate) {
    for (const Root& r : rs)
      if (!r.plus) targets.push_back({r.i, r.j, false});
    cls = {static_cast<int>(targets.size()), Variant::YstarPaired};
  } else {
    for (const Root& r : rs) targets.push_back({r.i, r.j, r.plus});
    int plus_count = 0;
    for (const auto& tg : targets)
      if (tg.plus) ++plus_count;
    int t = static_cast<int>(targets.size());
    bool yprime = 2 * t == n && plus_count % 2 != 0;
    cls = {t, yprime ? Variant::Yprime : Variant::Y};
  }
  std::sort(targets.begin(), targets.end(),
            [](const Target& a, const Target& b) { return a.i < b.i; });

  int t = cls.t;
  int base = n - 2 * t;
  std::vector<int> img(n, 0);
  std::vector<char> used(n + 1, 0);
  for (int s = 0; s < t; ++s) {
    int a = base + 2 * s + 1, b = base + 2 * s + 2;
    const Target& tg = targets[s];
    bool source_plus =
        cls.variant == Variant::Yprime && s == 0;  // alpha_1 source pair
    bool want_minus_sign;
    if (cls.variant == Variant::YstarPaired)
      want_minus_sign = false;  // theta absorbs signs; all positive
    else
      want_minus_sign = tg.plus != source_plus;
    img[a - 1] = want_minus_sign ? -tg.i : tg.i;
    img[b - 1] = tg.j;
    used[tg.i] = used[tg.j] = 1;
  }
  int next_free = 1;
  for (int k = 1; k <= base; ++k) {
    while (used[next_free]) ++next_free;
    img[k - 1] = next_free;
    used[next_free] = 1;
  }
  int negatives = 0;
  for (int v : img)
    if (v < 0) ++negatives;
  if (negatives % 2 != 0) {
    if (base < 1)
      fail("NotAdmissible", "sign parity cannot be repaired");
    img[base - 1] = -img[base - 1];
  }
  return {cls, SignedPermutation::make(std::move(img))};
}

}  // namespace brd
