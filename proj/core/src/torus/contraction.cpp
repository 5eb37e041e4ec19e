#include "hpl/torus/contraction.hpp"

#include <bit>

#include "hpl/error.hpp"

namespace hpl::torus {

namespace {

struct ContractionEntry {
  int source = 0;
  int target = 0;
  double sign = 0.0;
};

// Entries grouped by the component of φ.
std::vector<std::vector<ContractionEntry>> contraction_table(
    VectorForm const& phi, FormSpace const& from, FormSpace const& to) {
  int const k = phi.degree();
  int const p = from.bidegree.p;
  std::vector<std::vector<ContractionEntry>> table(phi.component_count());
  for (int a = 0; a < phi.component_count(); ++a) {
    int const i = phi.vector_index_of(a);
    Mask const anti_phi = phi.anti_of(a);
    Mask const bit = Mask{1} << i;
    for (int c = 0; c < from.size(); ++c) {
      Mask const holo = from.holo_of(c);
      Mask const anti = from.anti_of(c);
      if (!(holo & bit)) {
        continue;
      }
      int const merge = merge_sign(anti_phi, anti);
      if (merge == 0) {
        continue;
      }
      int const position = std::popcount(holo & (bit - 1));
      // dz̄_K passes over the p-1 remaining holomorphic factors.
      int const parity = position + k * (p - 1);
      double const sign = (parity % 2 == 0 ? 1.0 : -1.0) * merge;
      table[a].push_back({c, to.index(holo & ~bit, anti | anti_phi), sign});
    }
  }
  return table;
}

}  // namespace

FourierForm contract_full(VectorForm const& phi, FourierForm const& f) {
  if (phi.geometry_ptr() != f.geometry_ptr()) {
    throw Error(ErrorKind::shape, "contraction across different tori");
  }
  Bidegree const b = f.bidegree();
  int const d = f.geometry().dimension();
  int const k = phi.degree();
  if (b.p == 0 || b.q + k > d) {
    return FourierForm(f.geometry_ptr(), b, phi.band() + f.band());
  }
  FourierForm result(f.geometry_ptr(), {b.p - 1, b.q + k},
                     phi.band() + f.band());
  auto const table = contraction_table(phi, f.space(), result.space());
  ModeLattice const& out = result.lattice();
  std::vector<long> linear_f(f.mode_count());
  for (int m = 0; m < f.mode_count(); ++m) {
    linear_f[m] = out.linear(f.lattice().mode(m)) + out.offset();
  }
  for (int ma = 0; ma < phi.mode_count(); ++ma) {
    auto const coefficients = phi.mode_coefficients(ma);
    bool any = false;
    for (Complex const v : coefficients) {
      any = any || v != Complex(0.0);
    }
    if (!any) {
      continue;
    }
    long const shift = out.linear(phi.lattice().mode(ma));
    for (int mb = 0; mb < f.mode_count(); ++mb) {
      auto const in = f.mode_coefficients(mb);
      auto target = result.mode_coefficients(
          static_cast<int>(shift + linear_f[mb]));
      for (int a = 0; a < phi.component_count(); ++a) {
        Complex const va = coefficients[a];
        if (va == Complex(0.0)) {
          continue;
        }
        for (auto const& entry : table[a]) {
          target[entry.target] += entry.sign * va * in[entry.source];
        }
      }
    }
  }
  return result;
}

BandLimitedForm contract(VectorForm const& phi, FourierForm const& f) {
  FourierForm full = contract_full(phi, f);
  double const discarded = full.mass_outside(f.band());
  return {full.with_band(f.band()), discarded};
}

GradedForm contract_full(VectorForm const& phi, GradedForm const& f) {
  GradedForm result;
  int const d = phi.geometry().dimension();
  for (auto const& [b, piece] : f.pieces()) {
    if (b.p > 0 && b.q + phi.degree() <= d) {
      result += contract_full(phi, piece);
    }
  }
  return result;
}

GradedForm exp_contraction(VectorForm const& phi, GradedForm const& f) {
  GradedForm result = f;
  GradedForm term = f;
  for (int k = 1; !term.empty(); ++k) {
    term = contract_full(phi, term);
    term *= Complex(1.0 / k);
    result += term;
  }
  return result;
}

GradedForm exp_contraction(VectorForm const& phi, FourierForm const& f) {
  return exp_contraction(phi, GradedForm(f));
}

GradedForm lie_derivative(VectorForm const& phi, GradedForm const& f) {
  GradedForm result = exterior_derivative(contract_full(phi, f));
  if (phi.degree() % 2 == 1) {
    result *= Complex(-1.0);
  }
  result += contract_full(phi, exterior_derivative(f));
  return result;
}

double conjugation_residual(VectorForm const& phi, FourierForm const& f) {
  GradedForm const g(f);
  GradedForm const lhs = exp_contraction(
      Complex(-1.0) * phi, exterior_derivative(exp_contraction(phi, g)));
  GradedForm rhs = exterior_derivative(g) - lie_derivative(phi, g);
  if (phi.degree() == 1 && 2 <= phi.geometry().dimension()) {
    VectorForm half_bracket = lie_bracket(phi, phi);
    half_bracket *= Complex(0.5);
    rhs -= contract_full(half_bracket, g);
  }
  return norm(lhs - rhs);
}

double generalized_cartan_residual(VectorForm const& phi,
                                   FourierForm const& sigma) {
  GradedForm const s(sigma);
  GradedForm const once = contract_full(phi, s);
  GradedForm const twice = contract_full(phi, once);
  GradedForm result = contract_full(lie_bracket(phi, phi), s);
  GradedForm const a = contract_full(phi, partial(once));
  result -= Complex(2.0) * a;
  result += partial(twice);
  result += contract_full(phi, contract_full(phi, partial(s)));
  return norm(result);
}

}  // namespace hpl::torus
