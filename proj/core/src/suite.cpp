#include "homcurv/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "homcurv/certify.hpp"
#include "homcurv/error.hpp"
#include "homcurv/obstruction.hpp"

namespace homcurv {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      detail << (passed ? " | failed: " : "; ") << what;
      passed = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vec random_unit(std::mt19937_64& rng, Eigen::Index n) { return linalg::random_unit_vector(rng, n); }

// 1. Jacobi identity and ad-invariance of Q on random triples.
void algebraic_core(Check& c, std::uint64_t seed) {
  const std::vector<LieAlgebra> algebras = {
      build_algebra(Family::so, 7), build_algebra(Family::su, 5), build_algebra(Family::sp, 3),
      direct_sum(build_algebra(Family::su, 3), build_algebra(Family::so, 3))};
  double jac = 0.0, inv = 0.0;
  std::uint64_t stream = 0;
  for (const LieAlgebra& alg : algebras) {
    auto rng = linalg::make_stream(seed, stream++);
    for (int t = 0; t < 1000; ++t) {
      const Vec x = random_unit(rng, alg.dim());
      const Vec y = random_unit(rng, alg.dim());
      const Vec z = random_unit(rng, alg.dim());
      const Vec j = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) +
                    alg.bracket(z, alg.bracket(x, y));
      jac = std::max(jac, j.norm());
      inv = std::max(inv, std::abs(alg.bracket(x, y).dot(z) + y.dot(alg.bracket(x, z))));
    }
  }
  c.detail << "max Jacobi residual " << jac << ", max Q-invariance residual " << inv;
  c.require(jac < 1e-12, "Jacobi residual " + std::to_string(jac) + " >= 1e-12");
  c.require(inv < 1e-10, "Q-invariance residual " + std::to_string(inv) + " >= 1e-10");
}

// 2. Round sphere SO(5)/SO(4) has constant sectional curvature 1/2.
void constant_curvature(Check& c, std::uint64_t seed) {
  const HomogeneousSpace s = catalog_build("sphere-so", {4});
  const MetricEndo g = normal_metric(s);
  auto rng = linalg::make_stream(seed, 100);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Plane plane{linalg::gaussian_vector(rng, s.dim_p()), linalg::gaussian_vector(rng, s.dim_p())};
    worst = std::max(worst, std::abs(curvature(s, g, plane).sectional - 0.5));
  }
  c.detail << "max |sec - 0.5| = " << worst << " over 1000 planes";
  c.require(worst < 1e-8, "deviation " + std::to_string(worst));
}

// 3. At G = Id the formula is 1/4 |[x,y]_p|^2 + |[x,y]_h|^2.
void formula_reduction(Check& c, std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t stream = 200;
  for (const char* label : {"wallach6", "aloffwallach-su3", "berger7"}) {
    const HomogeneousSpace s = catalog_build(label);
    const MetricEndo g = normal_metric(s);
    auto rng = linalg::make_stream(seed, stream++);
    for (int t = 0; t < 334; ++t) {
      const Vec x = random_unit(rng, s.dim_p());
      const Vec y = random_unit(rng, s.dim_p());
      const Vec br = s.ambient().bracket(s.to_ambient(x), s.to_ambient(y));
      const double expected = 0.25 * s.p_part(br).squaredNorm() + s.h_part(br).squaredNorm();
      worst = std::max(worst, std::abs(curvature(s, g, {x, y}).unnormalized - expected));
    }
  }
  c.detail << "max deviation " << worst << " over 1002 planes on 3 spaces";
  c.require(worst < 1e-10, "deviation " + std::to_string(worst));
}

// 4. B+(x, y) lies in p.
void b_plus_in_p(Check& c, std::uint64_t seed) {
  double worst = 0.0;
  std::uint64_t stream = 300;
  const std::vector<std::pair<const char*, std::vector<int>>> spaces = {
      {"wallach6", {}}, {"stiefel", {}}, {"sp2circle", {3, 1}}, {"aloffwallach-su3", {1, 1}},
      {"s3s3circle", {2, 1}}};
  for (const auto& [label, params] : spaces) {
    const HomogeneousSpace s = catalog_build(label, params);
    const CommutantBasis cb = commutant_basis(s);
    auto rng = linalg::make_stream(seed, stream++);
    for (int t = 0; t < 200; ++t) {
      const MetricEndo g = sample_metric(s, cb, seed + 1000 * stream + t);
      const AlgebraElement x{s.to_ambient(random_unit(rng, s.dim_p()))};
      const AlgebraElement y{s.to_ambient(random_unit(rng, s.dim_p()))};
      worst = std::max(worst, s.h_part(b_plus(s, g, x, y).coords).norm());
    }
  }
  c.detail << "max h-component of B+ " << worst << " over 1000 draws on 5 spaces";
  c.require(worst < 1e-9, "h-component " + std::to_string(worst));
}

// 5. Rank parity over the whole catalog.
void berger_parity(Check& c) {
  int ok = 0, total = 0;
  std::string bad;
  for (const CatalogEntry& e : catalog_entries()) {
    const RankReport r = berger_rank_check(catalog_build(e.label));
    ++total;
    if (r.parity_consistent) ++ok;
    else bad += " " + e.label;
  }
  c.detail << ok << "/" << total << " entries parity-consistent";
  c.require(ok == total, "inconsistent:" + bad);
}

// 6. Centralizers of involutions.
void centralizers(Check& c) {
  const LieAlgebra su5 = build_algebra(Family::su, 5);
  CMat iota = CMat::Identity(5, 5);
  for (int k = 0; k < 4; ++k) iota(k, k) = -1.0;
  const int d1 =
      static_cast<int>(centralizer_subalgebra(su5, GroupElement::from_matrix(su5, iota)).cols());
  const LieAlgebra sp2 = build_algebra(Family::sp, 2);
  CMat a = CMat::Identity(2, 2);
  a(0, 0) = -1.0;
  const CMat iota2 = quaternionic(a, CMat::Zero(2, 2));
  const int d2 =
      static_cast<int>(centralizer_subalgebra(sp2, GroupElement::from_matrix(sp2, iota2)).cols());
  c.detail << "dim C(iota) in SU(5) = " << d1 << ", in Sp(2) = " << d2;
  c.require(d1 == 16, "SU(5) centralizer dimension " + std::to_string(d1) + " != 16");
  c.require(d2 == 6, "Sp(2) centralizer dimension " + std::to_string(d2) + " != 6");
}

std::string dims_string(const std::vector<int>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

// 7. Isotypic decompositions.
void isotypic_fixtures(Check& c, std::uint64_t seed) {
  const auto d31 = decompose_isotypic(catalog_build("sp2circle", {3, 1}), seed).dims();
  const auto d53 = decompose_isotypic(catalog_build("sp2circle", {5, 3}), seed).dims();
  const auto st = decompose_isotypic(catalog_build("stiefel"), seed);
  c.detail << "sp2circle(3,1) " << dims_string(d31) << ", sp2circle(5,3) " << dims_string(d53)
           << ", stiefel " << dims_string(st.dims());
  c.require(d31 == std::vector<int>{1, 4, 2, 2}, "sp2circle(3,1) dims " + dims_string(d31));
  c.require(d53 == std::vector<int>{1, 2, 2, 2, 2}, "sp2circle(5,3) dims " + dims_string(d53));
  const bool stiefel_ok = st.dims() == std::vector<int>{3, 6} &&
                          st.components[1].multiplicity == 3 &&
                          st.components[1].irreducible_dim() == 2;
  c.require(stiefel_ok, "stiefel decomposition " + dims_string(st.dims()));
}

struct PairRecord {
  std::string label;
  std::vector<int> params;
  MetricEndo g;
};

// 8. Commuting eigenvectors on (S^3 x S^3)/S^1(2,1).
void zero_curvature_witnesses(Check& c, std::uint64_t seed, std::vector<PairRecord>* pairs) {
  const HomogeneousSpace s = catalog_build("s3s3circle", {2, 1});
  const CommutantBasis cb = commutant_basis(s);
  int found = 0;
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const MetricEndo g = sample_metric(s, cb, seed + static_cast<std::uint64_t>(k));
    const SearchOutcome o = find_commuting_eigenvectors(s, g, seed + static_cast<std::uint64_t>(k));
    if (!o.witness) continue;
    const double v = std::abs(curvature(s, g, o.witness->plane).unnormalized);
    worst = std::max(worst, v);
    if (v < 1e-9) ++found;
    if (pairs) pairs->push_back({s.label(), s.params(), g});
  }
  c.detail << found << "/50 witnesses re-evaluating below 1e-9 (max |value| " << worst << ")";
  c.require(found == 50, std::to_string(found) + "/50 witnesses");
}

// 9. Nonpositive planes from the smallest eigenspace on Sp(2)/dS^1.
void lemma_b_reproduction(Check& c, std::uint64_t seed, std::vector<PairRecord>* pairs) {
  const HomogeneousSpace s = catalog_build("stiefel");
  const CommutantBasis cb = commutant_basis(s);
  int by_lemma = 0, by_search = 0;
  for (int k = 0; k < 50; ++k) {
    const MetricEndo g = sample_metric(s, cb, seed + static_cast<std::uint64_t>(k));
    const SearchOutcome o = lemma_b_witness(s, g, seed + static_cast<std::uint64_t>(k));
    if (o.witness && curvature(s, g, o.witness->plane).sectional <= kZeroCurvatureTol) {
      ++by_lemma;
      if (pairs) pairs->push_back({s.label(), s.params(), g});
      continue;
    }
    CertifyConfig cfg;
    cfg.seed = seed + static_cast<std::uint64_t>(k);
    if (min_sectional(s, g, cfg).min_sectional <= kZeroCurvatureTol) ++by_search;
  }
  c.detail << by_lemma << "/50 by lemma b witness, " << by_search << " more by search";
  c.require(by_lemma + by_search == 50,
            std::to_string(by_lemma + by_search) + "/50 nonpositive planes");
}

// 10. Symmetrization on Sp(2)/S^1(3,1).
void symmetrization(Check& c, std::uint64_t seed) {
  const HomogeneousSpace s = catalog_build("sp2circle", {3, 1});
  const CommutantBasis cb = commutant_basis(s);
  const double det = sp2_ad_a(s).determinant();
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const MetricEndo g = sample_metric(s, cb, seed + static_cast<std::uint64_t>(k));
    worst = std::max(worst, symmetrize_sp2_31(s, g).residual);
  }
  c.detail << "det(Ad_a|p) = " << det << ", max ||[G_b, Ad_a]|| = " << worst << " over 20 metrics";
  c.require(std::abs(det + 1.0) < 1e-10, "determinant " + std::to_string(det));
  c.require(worst < 1e-8, "residual " + std::to_string(worst));
}

// 11. Positivity searches.
void positivity_searches(Check& c, std::uint64_t seed) {
  CertifyConfig cfg;
  cfg.seed = seed;

  const HomogeneousSpace b7 = catalog_build("berger7");
  const CertifyReport rb = min_sectional(b7, normal_metric(b7), cfg);
  c.detail << "berger7 min " << rb.min_sectional << " (" << to_string(rb.verdict) << ")";
  c.require(rb.verdict == Verdict::PositiveFoundMin && rb.min_sectional > 0.0,
            "berger7 verdict " + std::string(to_string(rb.verdict)));

  const HomogeneousSpace aw = catalog_build("aloffwallach-su3", {1, 1});
  const IsotypicDecomposition daw = decompose_isotypic(aw, seed);
  std::vector<std::vector<double>> grid;
  for (int k = 1; k <= 9; ++k) {
    std::vector<double> scales(daw.components.size(), 1.0);
    scales[0] = 0.1 * k;  // the trivial component is the u(2)-aligned su(2) part
    grid.push_back(std::move(scales));
  }
  int aw_pos = 0;
  for (const GridResult& r : metric_grid_search(aw, daw, grid, cfg))
    if (r.report.verdict == Verdict::PositiveFoundMin) ++aw_pos;
  c.detail << "; aloffwallach(1,1) positive at " << aw_pos << "/9 values of t";
  c.require(aw_pos >= 1, "no positive aloffwallach metric on the t grid");

  const HomogeneousSpace w6 = catalog_build("wallach6");
  const CertifyReport rn = min_sectional(w6, normal_metric(w6), cfg);
  c.require(rn.verdict == Verdict::NonpositiveWitness,
            "wallach6 normal metric verdict " + std::string(to_string(rn.verdict)));
  const IsotypicDecomposition d6 = decompose_isotypic(w6, seed);
  std::vector<std::vector<double>> g6;
  for (double a : {0.5, 0.75, 1.0, 1.25, 1.5})
    for (double b : {0.5, 0.75, 1.0, 1.25, 1.5})
      if (a != 1.0 || b != 1.0) g6.push_back({1.0, a, b});
  int w6_pos = 0;
  std::string first;
  for (const GridResult& r : metric_grid_search(w6, d6, g6, cfg)) {
    if (r.report.verdict != Verdict::PositiveFoundMin) continue;
    if (!w6_pos++) {
      std::ostringstream s;
      s << "(" << r.scales[0] << "," << r.scales[1] << "," << r.scales[2] << ")";
      first = s.str();
    }
  }
  c.detail << "; wallach6 normal " << to_string(rn.verdict) << ", positive at " << w6_pos << "/"
           << g6.size() << " unequal scales, first " << first;
  c.require(w6_pos >= 1, "no positive unequal-scale wallach6 metric");
}

// 12. Certifier agrees with every obstruction witness.
void cross_consistency(Check& c, std::uint64_t seed) {
  std::vector<PairRecord> pairs;
  Check scratch;
  zero_curvature_witnesses(scratch, seed, &pairs);
  lemma_b_reproduction(scratch, seed, &pairs);

  const auto add_if_witness = [&](const HomogeneousSpace& s, const MetricEndo& g) {
    if (find_commuting_eigenvectors(s, g, seed).witness || lemma_b_witness(s, g, seed).witness)
      pairs.push_back({s.label(), s.params(), g});
  };
  for (const char* label : {"wallach6", "aloffwallach-su3", "su3circle", "stiefel", "sp3mix"}) {
    const HomogeneousSpace s = catalog_build(label);
    add_if_witness(s, normal_metric(s));
  }
  {
    const HomogeneousSpace s = catalog_build("sp2circle", {5, 3});
    const IsotypicDecomposition d = decompose_isotypic(s, seed);
    const std::vector<double> scales = {1.0, 1.3, 0.7, 1.9, 1.1};
    add_if_witness(s, diagonal_metric(s, d, scales));
  }

  int agree = 0;
  std::string bad;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const HomogeneousSpace s = catalog_build(pairs[i].label, pairs[i].params);
    CertifyConfig cfg;
    cfg.seed = seed + i;
    const CertifyReport r = min_sectional(s, pairs[i].g, cfg);
    if (r.verdict == Verdict::NonpositiveWitness) {
      ++agree;
    } else {
      bad += " " + pairs[i].label + "#" + std::to_string(i);
    }
  }
  c.detail << agree << "/" << pairs.size() << " witnessed pairs certified nonpositive";
  c.require(!pairs.empty() && agree == static_cast<int>(pairs.size()), "disagreement on" + bad);
}

struct Definition {
  const char* name;
  double time_limit;  // seconds; 0 = none
};

const Definition kDefinitions[kCriterionCount] = {
    {"algebraic core", 10.0},
    {"constant curvature fixture", 5.0},
    {"formula reduction at G = Id", 0.0},
    {"B+ lies in p", 0.0},
    {"rank parity over the catalog", 5.0},
    {"centralizer dimensions", 0.0},
    {"isotypic fixtures", 0.0},
    {"zero curvature by commuting eigenvectors", 30.0},
    {"nonpositive planes by lemma b", 120.0},
    {"symmetrization on Sp(2)/S^1(3,1)", 10.0},
    {"positivity searches", 600.0},
    {"certifier agrees with obstruction witnesses", 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount)
    throw InvalidArgument("criterion id must be in 1.." + std::to_string(kCriterionCount));
  const Definition& def = kDefinitions[id - 1];
  CriterionResult out;
  out.id = id;
  out.name = def.name;
  Check c;
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: algebraic_core(c, seed); break;
      case 2: constant_curvature(c, seed); break;
      case 3: formula_reduction(c, seed); break;
      case 4: b_plus_in_p(c, seed); break;
      case 5: berger_parity(c); break;
      case 6: centralizers(c); break;
      case 7: isotypic_fixtures(c, seed); break;
      case 8: zero_curvature_witnesses(c, seed, nullptr); break;
      case 9: lemma_b_reproduction(c, seed, nullptr); break;
      case 10: symmetrization(c, seed); break;
      case 11: positivity_searches(c, seed); break;
      case 12: cross_consistency(c, seed); break;
    }
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  out.seconds = seconds_since(t0);
  if (def.time_limit > 0.0 && out.seconds > def.time_limit) {
    std::ostringstream msg;
    msg << "runtime " << out.seconds << " s exceeds " << def.time_limit << " s";
    c.require(false, msg.str());
  }
  out.passed = c.passed;
  out.detail = c.detail.str();
  return out;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, options.seed));
    if (options.on_result) options.on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name +
         " (" + time + " s): " + r.detail;
}

}  // namespace homcurv
