#include "cusplab/classify.hpp"

#include <random>

#include "cusplab/errors.hpp"

namespace cusplab {

std::string to_string(CuspTag tag) {
  switch (tag) {
    case CuspTag::C23: return "C23";
    case CuspTag::C25: return "C25";
    case CuspTag::C27: return "C27";
    case CuspTag::C34: return "C34";
    case CuspTag::C345: return "C345";
    case CuspTag::C35: return "C35";
    case CuspTag::C357: return "C357";
    case CuspTag::C378: return "C378";
    case CuspTag::C37: return "C37";
    case CuspTag::C37_11: return "C37_11";
    case CuspTag::C4567: return "C4567";
    case CuspTag::C456: return "C456";
    case CuspTag::C457: return "C457";
    case CuspTag::C45: return "C45";
    case CuspTag::C45_11: return "C45_11";
    case CuspTag::OutsideCatalog: return "OutsideCatalog";
    case CuspTag::UndeterminedMultiplicity: return "UndeterminedMultiplicity";
  }
  return "?";
}

namespace {

struct Classifier {
  const Jet& g;
  CuspClass out;

  // Span test with trace; returns the coefficients when target is in the
  // span, nullopt otherwise. Bases passed here are independent by the
  // branch structure (each vector was certified nonzero / outside the
  // previous span before being used as a basis element).
  std::optional<RatVec> in_span(const RatVec& target,
                                const std::vector<RatVec>& basis,
                                const std::string& label) {
    auto coeff = solve_in_span(target, basis);
    out.trace.emplace_back(label, coeff.has_value());
    return coeff;
  }

  CuspClass finish(CuspTag tag, std::optional<int> sigma = std::nullopt) {
    out.tag = tag;
    out.sigma = sigma;
    return std::move(out);
  }

  CuspClass outside() { return finish(CuspTag::OutsideCatalog); }

  CuspClass multiplicity2() {
    const RatVec& g2 = g.at(2);
    auto lam = in_span(g.at(3), {g2}, "gamma[3] in span<gamma[2]>");
    if (!lam) return finish(CuspTag::C23);
    const Rational lambda = (*lam)[0];
    out.scalars["lambda"] = lambda;
    const RatVec w5 = g.at(5) - Rational(2) * lambda * g.at(4);
    auto mu = in_span(w5, {g2}, "gamma[5] - 2*lambda*gamma[4] in span<gamma[2]>");
    if (!mu) return finish(CuspTag::C25);
    out.scalars["mu"] = (*mu)[0];
    const Rational m = (*mu)[0];
    const RatVec w7 = g.at(7) - Rational(3) * lambda * g.at(6) +
                      (Rational(3) * rat_pow(lambda, 3) - Rational(2) * m) * g.at(4);
    auto top = in_span(
        w7, {g2},
        "gamma[7] - 3*lambda*gamma[6] + (3*lambda^3 - 2*mu)*gamma[4] in span<gamma[2]>");
    if (!top) return finish(CuspTag::C27);
    return outside();
  }

  CuspClass multiplicity3() {
    const RatVec& g3 = g.at(3);
    auto lam = in_span(g.at(4), {g3}, "gamma[4] in span<gamma[3]>");
    if (!lam) {
      auto s5 = in_span(g.at(5), {g3, g.at(4)},
                        "gamma[5] in span<gamma[3], gamma[4]>");
      return finish(s5 ? CuspTag::C34 : CuspTag::C345);
    }
    const Rational lambda = (*lam)[0];
    out.scalars["lambda"] = lambda;
    auto mu = in_span(g.at(5), {g3}, "gamma[5] in span<gamma[3]>");
    if (!mu) {
      const RatVec w = g.at(7) - Rational(2) * lambda * g.at(6);
      auto s7 = in_span(w, {g3, g.at(5)},
                        "gamma[7] - 2*lambda*gamma[6] in span<gamma[3], gamma[5]>");
      return finish(s7 ? CuspTag::C35 : CuspTag::C357);
    }
    const Rational m = (*mu)[0];
    out.scalars["mu"] = m;

    const RatVec v7 = g.at(7) - Rational(2) * lambda * g.at(6);
    out.derived["V7"] = v7;
    auto v7span = in_span(v7, {g3}, "V7 in span<gamma[3]>");
    if (v7span) return outside();

    const RatVec v8 = g.at(8) - (lambda * lambda + Rational(2) * m) * g.at(6);
    out.derived["V8"] = v8;
    auto ab = in_span(v8, {g3, v7}, "V8 in span<gamma[3], V7>");
    if (!ab) return finish(CuspTag::C378);
    const Rational a8 = (*ab)[0];
    const Rational b8 = (*ab)[1];
    out.scalars["A8"] = a8;
    out.scalars["B8"] = b8;
    const int sigma = (b8 - Rational(7, 3) * lambda == 0) ? 0 : 1;

    RatVec v11 = g.at(11) - (b8 + lambda) * g.at(10) +
                 Rational(3) * (lambda * b8 - m) * g.at(9);
    v11 = v11 - Rational(4, 27) *
                    (Rational(3) * (Rational(13) * lambda * lambda - Rational(6) * m) * b8 -
                     Rational(35) * rat_pow(lambda, 3)) *
                    v8;
    v11 = v11 -
          (Rational(2) * a8 + m * (Rational(6) * lambda * lambda - m) * b8 -
           Rational(7) * lambda * m * m) *
              g.at(6);
    out.derived["V11"] = v11;
    auto v11span = in_span(v11, {g3, v7}, "V11 in span<gamma[3], V7>");
    return finish(v11span ? CuspTag::C37 : CuspTag::C37_11, sigma);
  }

  CuspClass multiplicity4() {
    const RatVec& g4 = g.at(4);
    const RatVec& g5 = g.at(5);
    auto s5 = in_span(g5, {g4}, "gamma[5] in span<gamma[4]>");
    if (s5) return outside();
    auto s6 = in_span(g.at(6), {g4, g5}, "gamma[6] in span<gamma[4], gamma[5]>");
    if (!s6) {
      auto s7 = in_span(g.at(7), {g4, g5, g.at(6)},
                        "gamma[7] in span<gamma[4], gamma[5], gamma[6]>");
      return finish(s7 ? CuspTag::C456 : CuspTag::C4567);
    }
    auto s7 = in_span(g.at(7), {g4, g5}, "gamma[7] in span<gamma[4], gamma[5]>");
    if (!s7) return finish(CuspTag::C457);

    const Rational lambda2 = (*s6)[0], mu1 = (*s6)[1];
    const Rational lambda3 = (*s7)[0], mu2 = (*s7)[1];
    out.scalars["lambda2"] = lambda2;
    out.scalars["lambda3"] = lambda3;
    out.scalars["mu1"] = mu1;
    out.scalars["mu2"] = mu2;
    const Rational discr = mu2 - Rational(5, 4) * lambda2 - Rational(11, 10) * mu1 * mu1;
    const int sigma = sign(discr);

    RatVec v = g.at(11) - Rational(2) * mu1 * g.at(10);
    v = v + (Rational(2) * mu1 * mu1 - lambda2 - mu2) * g.at(9);
    v = v + Rational(2) * (Rational(2) * lambda2 * mu1 - lambda3) * g.at(8);
    out.derived["V4511"] = v;
    auto vspan = in_span(v, {g4, g5}, "V4511 in span<gamma[4], gamma[5]>");
    return finish(vspan ? CuspTag::C45 : CuspTag::C45_11, sigma);
  }
};

}  // namespace

CuspClass classify(const Jet& gamma) {
  Classifier cl{gamma, {}};
  const auto m = multiplicity(gamma);
  if (!m) {
    cl.out.trace.emplace_back("jet vanishes up to its order", true);
    return cl.finish(CuspTag::UndeterminedMultiplicity);
  }
  cl.out.multiplicity = *m;
  switch (*m) {
    case 2: return cl.multiplicity2();
    case 3: return cl.multiplicity3();
    case 4: return cl.multiplicity4();
    default:
      cl.out.trace.emplace_back(
          "multiplicity " + std::to_string(*m) + " has no criterion in the catalog",
          true);
      return cl.outside();
  }
}

namespace {

// Small deterministic helpers on top of mt19937_64; distributions from
// <random> are implementation-defined, so draws are reduced by hand.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng) {
  static const long dens[] = {1, 1, 2, 3};
  return make_rational(draw(rng, -3, 3), dens[draw(rng, 0, 3)]);
}

Rational draw_nonzero_unit(std::mt19937_64& rng) {
  // phi^[1]: small nonzero rationals of both signs
  static const std::pair<long, long> pool[] = {
      {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {3, 1}, {1, 3}};
  const auto [num, den] = pool[draw(rng, 0, 7)];
  return make_rational(num, den);
}

}  // namespace

Jet random_a_equivalence(const Jet& gamma, std::uint64_t seed) {
  if (seed == 0) {
    return compose_coord(MapJet::identity(gamma.dim),
                         compose_param(gamma, ParamJet::identity(gamma.order)));
  }
  std::mt19937_64 rng(seed);
  ParamJet phi;
  phi.order = gamma.order;
  phi.coeffs.assign(gamma.order, Rational(0));
  phi.coeffs[0] = draw_nonzero_unit(rng);
  for (int i = 2; i <= gamma.order; ++i) {
    if (draw(rng, 0, 1) == 1) phi.coeffs[i - 1] = draw_rational(rng);
  }

  const int n = gamma.dim;
  MapJet map;
  map.dim = n;
  std::vector<RatVec> matrix;
  do {
    matrix.assign(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      matrix[i][i] = draw_nonzero_unit(rng);
      for (int j = 0; j < n; ++j) {
        if (i != j && draw(rng, 0, 1) == 1) matrix[i][j] = draw_rational(rng);
      }
    }
  } while (rat_det(matrix) == 0);
  map = MapJet::linear(matrix);
  const int extra_terms = static_cast<int>(draw(rng, 1, 2 * n));
  for (int k = 0; k < extra_terms; ++k) {
    std::vector<int> alpha(n, 0);
    const int degree = static_cast<int>(draw(rng, 2, 3));
    for (int d = 0; d < degree; ++d) alpha[draw(rng, 0, n - 1)] += 1;
    RatVec value(n);
    for (int i = 0; i < n; ++i) value[i] = draw_rational(rng);
    map.add_term(alpha, std::move(value));
  }

  return compose_coord(map, compose_param(gamma, phi));
}

}  // namespace cusplab
