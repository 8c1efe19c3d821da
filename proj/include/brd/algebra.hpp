#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "brd/connector.hpp"
#include "brd/laurent.hpp"

namespace brd {

enum class Mode { Strict, Extended };

// Basis element: a scalar class together with a connector.  Theta-classed
// diagrams are stored stripped (theta absorbs decorations).
// Strict basis:   One on any connector, Xi needs a horizontal pair,
//                 Theta needs a horizontal pair and no decorations.
// Extended basis: One and Xi on any connector, Theta undecorated.
struct BasisDiagram {
  LambdaClass cls = LambdaClass::One;
  Connector conn = Connector::identity(1);
  auto operator<=>(const BasisDiagram&) const = default;
};

// Normalizes (theta strips) and checks the mode constraint.
BasisDiagram make_basis_diagram(LambdaClass cls, Connector conn, Mode mode);
bool basis_valid(const BasisDiagram& d, Mode mode);

// One product of basis diagrams: delta^delta_exp times a basis diagram.
struct ProductTerm {
  std::int64_t delta_exp = 0;
  BasisDiagram diag;
};

// The diagram product d1 * d2 (d1 stacked over d2).  Mode-independent; the
// caller validates the result against its mode.
ProductTerm multiply_basis(const BasisDiagram& d1, const BasisDiagram& d2);

// Finite linear combination of basis diagrams with exact Laurent
// coefficients.  Zero coefficients are never stored.
class AlgebraElement {
public:
  AlgebraElement(int n, Mode mode) : n_(n), mode_(mode) {}

  static AlgebraElement zero(int n, Mode mode) { return {n, mode}; }
  static AlgebraElement identity(int n, Mode mode);
  static AlgebraElement term(BasisDiagram d, LaurentPoly coeff, Mode mode);

  int size() const { return n_; }
  Mode mode() const { return mode_; }
  const std::map<BasisDiagram, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisDiagram& d, const LaurentPoly& coeff);

  // True when the element is coeff * diagram for a single diagram.
  bool single_term(BasisDiagram& d, LaurentPoly& coeff) const;

  bool operator==(const AlgebraElement& o) const;

private:
  int n_;
  Mode mode_;
  std::map<BasisDiagram, LaurentPoly> terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const LaurentPoly& c, const AlgebraElement& a);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Anti-automorphism: reverses products, swaps top and bottom termwise.
AlgebraElement opposition_el(const AlgebraElement& a);
// Decoration-forgetting homomorphism onto the undecorated subalgebra:
// strips connectors; class One -> 1, Xi -> delta, Theta -> delta^2.
AlgebraElement pi_el(const AlgebraElement& a);
// Termwise pole flip (toggles the pairs at top 1 and bottom 1).
AlgebraElement pole_flip_el(const AlgebraElement& a);

// Deterministic basis enumeration for the given mode.
std::vector<BasisDiagram> enumerate_basis(int n, Mode mode);

struct StructureRow {
  std::int64_t i = 0;  // left factor index
  std::int64_t j = 0;  // right factor index
  std::int64_t k = 0;  // result basis index
  std::int64_t delta_exp = 0;
  LambdaClass cls = LambdaClass::One;  // class of the result diagram
};

// Full multiplication table over the enumerated basis; rows ordered by
// (i, j).  jobs > 1 splits the work; output is identical for any jobs.
std::vector<StructureRow> structure_constants(int n, Mode mode, int jobs = 1);

}  // namespace brd
