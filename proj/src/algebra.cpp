#include "brd/algebra.hpp"

#include <cassert>
#include <exception>
#include <mutex>
#include <thread>

#include "brd/error.hpp"

namespace brd {

BasisDiagram make_basis_diagram(LambdaClass cls, Connector conn, Mode mode) {
  if (cls == LambdaClass::Theta) conn = conn.strip();
  BasisDiagram d{cls, std::move(conn)};
  if (!basis_valid(d, mode))
    fail("BasisViolation", "diagram violates the basis constraint");
  return d;
}

bool basis_valid(const BasisDiagram& d, Mode mode) {
  if (d.cls == LambdaClass::Theta && !d.conn.is_undecorated()) return false;
  if (mode == Mode::Strict && d.cls != LambdaClass::One &&
      !d.conn.has_horizontal_pair())
    return false;
  return true;
}

namespace {

// Traversal events along a composite strand: tokens (decorations) and
// interior extrema.  A d1 bottom horizontal arc carries one maximum, a d2
// top horizontal arc one minimum; a decorated arc carries one token placed
// between the arc's left endpoint and its extremum.
constexpr std::uint8_t kToken = 1;
constexpr std::uint8_t kExtremum = 0;

struct StrandStats {
  bool bit = false;  // resulting decoration
  int toll = 0;      // parity of extremum crossings to normalize tokens
  int tokens = 0;
};

StrandStats strand_stats(const std::vector<std::uint8_t>& ev) {
  StrandStats s;
  int extrema = 0;
  for (std::uint8_t e : ev) {
    if (e == kExtremum) {
      ++extrema;
    } else {
      ++s.tokens;
      s.toll ^= extrema & 1;
    }
  }
  s.bit = (s.tokens & 1) != 0;
  return s;
}

}  // namespace

ProductTerm multiply_basis(const BasisDiagram& d1, const BasisDiagram& d2) {
  const Connector& c1 = d1.conn;
  const Connector& c2 = d2.conn;
  if (c1.size() != c2.size()) fail("SizeMismatch", "connector sizes differ");
  const int n = c1.size();

  LambdaClass cls;
  std::int64_t dexp;
  {
    ClassProduct cp = class_mul(d1.cls, d2.cls);
    cls = cp.cls;
    dexp = cp.delta_shift;
  }
  auto mul_xi_toll = [&] {  // multiply by xi * delta^-1
    ClassProduct cp = class_mul(cls, LambdaClass::Xi);
    cls = cp.cls;
    dexp += cp.delta_shift - 1;
  };
  auto mul_theta = [&](std::int64_t extra_delta) {
    ClassProduct cp = class_mul(cls, LambdaClass::Theta);
    cls = cp.cls;
    dexp += cp.delta_shift + extra_delta;
  };

  std::vector<char> vis1(n, 0), vis2(n, 0);
  std::vector<Connector::Pair> result;
  result.reserve(n);

  // Pairs that never touch the interface survive unchanged.
  for (int pi = 0; pi < n; ++pi) {
    const auto& p = c1.pairs()[pi];
    if (p.a > 0 && p.b > 0) {
      result.push_back(p);
      vis1[pi] = 1;
    }
  }
  for (int pi = 0; pi < n; ++pi) {
    const auto& p = c2.pairs()[pi];
    if (p.a < 0 && p.b < 0) {
      result.push_back(p);
      vis2[pi] = 1;
    }
  }

  // Emits the events of one arc, entered at `at`; returns the other end.
  auto emit_arc = [&](int diag, int at, std::vector<std::uint8_t>& ev) {
    const Connector& c = diag == 1 ? c1 : c2;
    int pi = c.pair_index(at);
    (diag == 1 ? vis1 : vis2)[pi] = 1;
    const auto& p = c.pairs()[pi];
    bool horizontal = (diag == 1) ? (p.a < 0) : (p.b > 0);
    if (!horizontal) {
      if (p.decorated) ev.push_back(kToken);
    } else if (at == p.a) {  // entering at the left endpoint
      if (p.decorated) ev.push_back(kToken);
      ev.push_back(kExtremum);
    } else {
      ev.push_back(kExtremum);
      if (p.decorated) ev.push_back(kToken);
    }
    return p.a == at ? p.b : p.a;
  };

  // Walks an open strand; returns (diagram, boundary point) where it ends.
  auto walk_open = [&](int diag, int p, std::vector<std::uint8_t>& ev) {
    while (true) {
      int other = emit_arc(diag, p, ev);
      if (diag == 1 && other > 0) return std::pair{1, other};
      if (diag == 2 && other < 0) return std::pair{2, other};
      p = -other;
      diag = 3 - diag;
    }
  };

  // Open strands reaching the top of d1, in ascending order; starting at
  // the smaller endpoint makes the traversal begin at the reference end.
  for (int i = 1; i <= n; ++i) {
    if (vis1[c1.pair_index(i)]) continue;
    std::vector<std::uint8_t> ev;
    auto [ediag, epoint] = walk_open(1, i, ev);
    (void)ediag;  // top-top strand: epoint > 0, vertical strand: epoint < 0
    StrandStats s = strand_stats(ev);
    if (s.toll) mul_xi_toll();
    result.push_back({i, epoint, s.bit});
  }
  // Remaining open strands connect two bottom points of d2.
  for (int j = 1; j <= n; ++j) {
    if (vis2[c2.pair_index(-j)]) continue;
    std::vector<std::uint8_t> ev;
    auto [ediag, epoint] = walk_open(2, -j, ev);
    assert(ediag == 2);
    StrandStats s = strand_stats(ev);
    if (s.toll) mul_xi_toll();
    result.push_back({-j, epoint, s.bit});
  }

  // Closed loops: whatever is left alternates d1 bottom and d2 top arcs.
  int odd_loops = 0;
  for (int x = 1; x <= n; ++x) {
    int pi = c1.pair_index(-x);
    if (vis1[pi]) continue;
    std::vector<std::uint8_t> ev;
    int diag = 1, p = -x;
    while (true) {
      const Connector& c = diag == 1 ? c1 : c2;
      if ((diag == 1 ? vis1 : vis2)[c.pair_index(p)]) break;
      int other = emit_arc(diag, p, ev);
      p = -other;
      diag = 3 - diag;
    }
    StrandStats s = strand_stats(ev);
    if (s.tokens % 2 == 0) {
      dexp += 1;  // delta * (xi delta^-1)^toll
      if (s.toll) mul_xi_toll();
    } else {
      ++odd_loops;  // a decorated loop; tolls are absorbed by theta
    }
  }
  for (int q = 0; q < odd_loops / 2; ++q) mul_theta(0);
  if (odd_loops % 2 != 0) mul_theta(-1);

  if (cls == LambdaClass::Theta)
    for (auto& p : result) p.decorated = false;

  BasisDiagram out{cls, Connector::make(n, std::move(result))};
  return {dexp, out};
}

AlgebraElement AlgebraElement::identity(int n, Mode mode) {
  return term({LambdaClass::One, Connector::identity(n)},
              LaurentPoly::constant(1), mode);
}

AlgebraElement AlgebraElement::term(BasisDiagram d, LaurentPoly coeff,
                                    Mode mode) {
  if (!basis_valid(d, mode))
    fail("BasisViolation", "diagram violates the basis constraint");
  AlgebraElement e(d.conn.size(), mode);
  e.add_term(d, coeff);
  return e;
}

void AlgebraElement::add_term(const BasisDiagram& d, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  if (d.conn.size() != n_) fail("SizeMismatch", "term size differs");
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool AlgebraElement::single_term(BasisDiagram& d, LaurentPoly& coeff) const {
  if (terms_.size() != 1) return false;
  d = terms_.begin()->first;
  coeff = terms_.begin()->second;
  return true;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return n_ == o.n_ && mode_ == o.mode_ && terms_ == o.terms_;
}

namespace {

void check_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.size() != b.size()) fail("SizeMismatch", "element sizes differ");
  if (a.mode() != b.mode()) fail("ModeMismatch", "element modes differ");
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement r = a;
  for (const auto& [d, c] : b.terms()) r.add_term(d, c);
  return r;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement r = a;
  for (const auto& [d, c] : b.terms()) r.add_term(d, -c);
  return r;
}

AlgebraElement scale(const LaurentPoly& c, const AlgebraElement& a) {
  AlgebraElement r(a.size(), a.mode());
  for (const auto& [d, coeff] : a.terms()) r.add_term(d, c * coeff);
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement r(a.size(), a.mode());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      ProductTerm pt = multiply_basis(da, db);
      if (!basis_valid(pt.diag, a.mode()))
        fail("BasisViolation", "product left the basis (engine defect)");
      r.add_term(pt.diag, ca * cb * LaurentPoly::delta_power(pt.delta_exp));
    }
  return r;
}

AlgebraElement opposition_el(const AlgebraElement& a) {
  AlgebraElement r(a.size(), a.mode());
  for (const auto& [d, c] : a.terms())
    r.add_term({d.cls, d.conn.opposition()}, c);
  return r;
}

AlgebraElement pi_el(const AlgebraElement& a) {
  AlgebraElement r(a.size(), a.mode());
  for (const auto& [d, c] : a.terms())
    r.add_term({LambdaClass::One, d.conn.strip()},
               c * LaurentPoly::delta_power(class_pi_exponent(d.cls)));
  return r;
}

AlgebraElement pole_flip_el(const AlgebraElement& a) {
  AlgebraElement r(a.size(), a.mode());
  for (const auto& [d, c] : a.terms())
    r.add_term(make_basis_diagram(d.cls, d.conn.pole_flip(), a.mode()), c);
  return r;
}

std::vector<BasisDiagram> enumerate_basis(int n, Mode mode) {
  std::vector<BasisDiagram> out;
  auto append = [&](LambdaClass cls, EnumFilter f) {
    for (Connector& c : enumerate_connectors(n, f))
      out.push_back({cls, std::move(c)});
  };
  append(LambdaClass::One, EnumFilter::All);
  if (mode == Mode::Strict) {
    append(LambdaClass::Xi, EnumFilter::Horizontal);
    append(LambdaClass::Theta, EnumFilter::HorizontalUndecorated);
  } else {
    append(LambdaClass::Xi, EnumFilter::All);
    append(LambdaClass::Theta, EnumFilter::Undecorated);
  }
  return out;
}

std::vector<StructureRow> structure_constants(int n, Mode mode, int jobs) {
  if (jobs < 1) jobs = 1;
  std::vector<BasisDiagram> basis = enumerate_basis(n, mode);
  const std::int64_t m = static_cast<std::int64_t>(basis.size());
  std::map<BasisDiagram, std::int64_t> index;
  for (std::int64_t i = 0; i < m; ++i) index.emplace(basis[i], i);

  std::vector<StructureRow> rows(static_cast<std::size_t>(m) * m);
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&](std::int64_t lo, std::int64_t hi) {
    try {
      for (std::int64_t i = lo; i < hi; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
          ProductTerm pt = multiply_basis(basis[i], basis[j]);
          auto it = index.find(pt.diag);
          if (it == index.end())
            fail("BasisViolation", "product left the basis (engine defect)");
          rows[i * m + j] = {i, j, it->second, pt.delta_exp, pt.diag.cls};
        }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
    }
  };
  if (jobs == 1 || m < 2) {
    work(0, m);
  } else {
    std::vector<std::thread> pool;
    std::int64_t chunk = (m + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      std::int64_t lo = t * chunk, hi = std::min<std::int64_t>(m, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  return rows;
}

}  // namespace brd
