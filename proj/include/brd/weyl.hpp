#pragma once

#include <compare>
#include <vector>

namespace brd {

// Positive roots of type D_n: e_j - e_i and e_j + e_i for 1 <= i < j <= n.
// Simple roots: alpha_1 = e_2 + e_1 and alpha_k = e_k - e_{k-1} for k >= 2.
struct Root {
  int i = 1;  // smaller index
  int j = 2;  // larger index
  bool plus = false;  // true: e_j + e_i, false: e_j - e_i
  auto operator<=>(const Root&) const = default;
};

Root make_root(int i, int j, bool plus);   // validates i < j >= 1
Root simple_root(int k, int n);            // alpha_k in D_n
Root mate(const Root& r);                  // (e_j - e_i)* = e_j + e_i and back

// Inner product of the two root vectors (values in {-2,-1,0,1,2}).
int root_inner(const Root& a, const Root& b);

std::vector<Root> positive_roots(int n);

// Element of W(D_n): signed permutation with an even number of sign changes.
// image(k) in {-n..-1, 1..n} is the signed image of index k.
class SignedPermutation {
public:
  static SignedPermutation identity(int n);
  // Validates a full signed image list (1-based values); requires even
  // negative count.
  static SignedPermutation make(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int image(int k) const;           // k in 1..n
  int apply(int signed_idx) const;  // odd extension to negative indices

  SignedPermutation inverse() const;
  bool is_identity() const;
  int negative_count() const;

  friend SignedPermutation compose(const SignedPermutation& f,
                                   const SignedPermutation& g);  // f after g

  auto operator<=>(const SignedPermutation&) const = default;

private:
  std::vector<int> img_;
};

// Action of w on a root (result renormalized to a positive root).
Root act(const SignedPermutation& w, const Root& r);

// The reflection in a positive root as a signed permutation.
SignedPermutation reflection(const Root& r, int n);

// The simple generator r_k of W(D_n) as a signed permutation.
SignedPermutation simple_reflection(int k, int n);

// Product of simple generators, left to right.
SignedPermutation word_to_perm(int n, const std::vector<int>& word);

// Coxeter length: number of positive roots sent negative.
int length(const SignedPermutation& w);

// Deterministic reduced word: repeatedly take the smallest left descent.
std::vector<int> reduced_word(const SignedPermutation& w);

enum class Variant { Y, Yprime, YstarPaired };

// Orbit label for a set of mutually orthogonal positive roots: t and which
// of the reference sets Y(t), Y'(n/2), or the mate-closed Y(t) u Y(t)* it
// is W(D_n)-conjugate to.
struct AdmissibleClass {
  int t = 0;
  Variant variant = Variant::Y;
  auto operator<=>(const AdmissibleClass&) const = default;
};

// The reference root sets themselves.
std::vector<Root> admissible_Y(int n, const AdmissibleClass& cls);

struct ClassifyResult {
  AdmissibleClass cls;
  SignedPermutation witness;  // witness . admissible_Y(n, cls) == input set
};

// Classifies a set of mutually orthogonal positive roots (or a mate-closed
// union) and produces a deterministic witness in W(D_n).
ClassifyResult orbit_classify(int n, const std::vector<Root>& roots);

}  // namespace brd
