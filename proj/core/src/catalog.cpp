#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>

#include "homcurv/error.hpp"
#include "homcurv/homogeneous_space.hpp"

namespace homcurv {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

CMat i_diag(const std::vector<double>& entries) {
  const auto m = static_cast<Eigen::Index>(entries.size());
  CMat out = CMat::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a) out(a, a) = kI * entries[a];
  return out;
}

CMat block_diag(const CMat& a, const CMat& b) {
  CMat out = CMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMat pad(const CMat& a, Eigen::Index m) {
  CMat out = CMat::Zero(m, m);
  out.topLeftCorner(a.rows(), a.cols()) = a;
  return out;
}

/// Places a quaternionic k x k block (given in its 2k x 2k complex form) at
/// quaternionic offset `offset` inside sp(n_big).
CMat sp_embed(const CMat& x, int n_big, int offset) {
  const auto k = x.rows() / 2;
  CMat a = CMat::Zero(n_big, n_big);
  CMat b = CMat::Zero(n_big, n_big);
  a.block(offset, offset, k, k) = x.topLeftCorner(k, k);
  b.block(offset, offset, k, k) = x.topRightCorner(k, k);
  return quaternionic(a, b);
}

/// Imaginary unit quaternion ('i', 'j' or 'k') on the diagonal slot `pos` of sp(n).
CMat sp_unit(int n, int pos, char unit) {
  CMat a = CMat::Zero(n, n);
  CMat b = CMat::Zero(n, n);
  switch (unit) {
    case 'i': a(pos, pos) = kI; break;
    case 'j': b(pos, pos) = 1.0; break;
    default: b(pos, pos) = kI; break;
  }
  return quaternionic(a, b);
}

/// i * diag(w_0, ..., w_{n-1}) as a quaternionic diagonal in sp(n).
CMat sp_i_diag(const std::vector<double>& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  return quaternionic(i_diag(w), CMat::Zero(n, n));
}

Mat to_coords(const LieAlgebra& alg, const std::vector<CMat>& mats) {
  Mat out(alg.dim(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (alg.span_residual(mats[i]) > 1e-9)
      throw VerificationError("catalog generator is not in " + alg.name());
    out.col(static_cast<Eigen::Index>(i)) = alg.coordinates(mats[i]);
  }
  return out;
}

std::vector<CMat> padded_basis(const LieAlgebra& small, Eigen::Index m) {
  std::vector<CMat> out;
  for (const CMat& x : small.realization().basis) out.push_back(pad(x, m));
  return out;
}

std::vector<CMat> sp_block_basis(int n_small, int n_big, int offset) {
  std::vector<CMat> out;
  if (n_small == 0) return out;
  const LieAlgebra small = build_algebra(Family::sp, n_small);
  for (const CMat& x : small.realization().basis) out.push_back(sp_embed(x, n_big, offset));
  return out;
}

/// su(2) -> so(3) covering map: the adjoint representation in the su(2) basis.
CMat su2_to_so3(const LieAlgebra& su2, const CMat& x) {
  const Vec c = su2.coordinates(x);
  const Mat ad = su2.ad(c);
  return ad.cast<cd>();
}

/// Spin 3/2 representation of su(2) on C^4 in a unitary basis where it is
/// symplectic for [[0, I], [-I, 0]]; the torus 2i J_z maps to i diag(3, 1, -3, -1).
std::array<CMat, 3> spin_three_halves() {
  CMat jz = CMat::Zero(4, 4);
  jz.diagonal() << 1.5, 0.5, -0.5, -1.5;
  CMat jplus = CMat::Zero(4, 4);
  jplus(0, 1) = std::sqrt(3.0);
  jplus(1, 2) = 2.0;
  jplus(2, 3) = std::sqrt(3.0);
  const CMat jminus = jplus.adjoint();
  const CMat jx = (jplus + jminus) / 2.0;
  const CMat jy = (jplus - jminus) / (2.0 * kI);
  const std::array<CMat, 3> gens{2.0 * kI * jz, 2.0 * kI * jx, 2.0 * kI * jy};

  // Basis order (m = 3/2, 1/2, -3/2, -1/2) with phases on the last two vectors.
  const std::array<cd, 4> phases{cd{1, 0}, cd{-1, 0}, kI, -kI};
  const CMat j = symplectic_form(2);
  for (cd s2 : phases) {
    for (cd s3 : phases) {
      CMat u = CMat::Zero(4, 4);
      u(0, 0) = 1.0;
      u(1, 1) = 1.0;
      u(2, 3) = s2;
      u(3, 2) = s3;
      std::array<CMat, 3> out;
      bool ok = true;
      for (int g = 0; g < 3; ++g) {
        out[g] = u * gens[g] * u.adjoint();
        if ((out[g].transpose() * j + j * out[g]).norm() > 1e-12) ok = false;
      }
      if (ok) return out;
    }
  }
  throw VerificationError("no symplectic basis found for the spin 3/2 representation");
}

void require(bool condition, const std::string& label, const std::string& message) {
  if (!condition) throw InvalidArgument(label + ": " + message);
}

void require_coprime(const std::string& label, int p, int q, int q_min) {
  require(q >= q_min, label, "requires q >= " + std::to_string(q_min));
  require(p >= q, label, "requires p >= q");
  require(std::gcd(p, q) == 1, label, "requires gcd(p, q) = 1");
}

using Builder = std::function<HomogeneousSpace(const std::vector<int>&, const CatalogEntry&)>;

HomogeneousSpace make(const LieAlgebra& k, const std::vector<CMat>& h, const CatalogEntry& entry,
                      const std::vector<int>& params,
                      std::optional<CMat> torus = std::nullopt) {
  std::optional<Vec> t;
  if (torus) t = to_coords(k, {*torus}).col(0);
  Mat hc = h.empty() ? Mat(k.dim(), 0) : to_coords(k, h);
  return HomogeneousSpace(k, hc, entry.label, params, entry.metadata, std::move(t));
}

const std::map<std::string, Builder, std::less<>>& builders() {
  static const std::map<std::string, Builder, std::less<>> table = [] {
    std::map<std::string, Builder, std::less<>> b;

    b["sphere-so"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 2, e.label, "requires n >= 2");
      const LieAlgebra k = build_algebra(Family::so, n + 1);
      return make(k, padded_basis(build_algebra(Family::so, n), n + 1), e, pr);
    };
    b["sphere-su"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::su, n + 1);
      std::vector<CMat> h;
      if (n >= 2) h = padded_basis(build_algebra(Family::su, n), n + 1);
      return make(k, h, e, pr);
    };
    b["sphere-u"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::u, n + 1);
      return make(k, padded_basis(build_algebra(Family::u, n), n + 1), e, pr);
    };
    b["sphere-sp"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::sp, n + 1);
      return make(k, sp_block_basis(n, n + 1, 0), e, pr);
    };
    b["sphere-spsp1"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra big = build_algebra(Family::sp, n + 1);
      const LieAlgebra k = direct_sum(big, build_algebra(Family::sp, 1));
      std::vector<CMat> h;
      for (const CMat& x : sp_block_basis(n, n + 1, 0)) h.push_back(block_diag(x, CMat::Zero(2, 2)));
      for (char u : {'i', 'j', 'k'}) h.push_back(block_diag(sp_unit(n + 1, n, u), sp_unit(1, 0, u)));
      return make(k, h, e, pr);
    };
    b["sphere-spu1"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = direct_sum(build_algebra(Family::sp, n + 1), build_algebra(Family::u, 1));
      std::vector<CMat> h;
      for (const CMat& x : sp_block_basis(n, n + 1, 0)) h.push_back(block_diag(x, CMat::Zero(1, 1)));
      h.push_back(block_diag(sp_unit(n + 1, n, 'i'), i_diag({1.0})));
      return make(k, h, e, pr);
    };
    b["cpn"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::su, n + 1);
      std::vector<CMat> h;
      if (n >= 2) h = padded_basis(build_algebra(Family::su, n), n + 1);
      std::vector<double> w(n + 1, 1.0);
      w[n] = -n;
      h.push_back(i_diag(w));
      return make(k, h, e, pr);
    };
    b["hpn"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::sp, n + 1);
      std::vector<CMat> h = sp_block_basis(n, n + 1, 0);
      for (char u : {'i', 'j', 'k'}) h.push_back(sp_unit(n + 1, n, u));
      return make(k, h, e, pr);
    };
    b["cp2n1"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int n = pr[0];
      require(n >= 1, e.label, "requires n >= 1");
      const LieAlgebra k = build_algebra(Family::sp, n + 1);
      std::vector<CMat> h = sp_block_basis(n, n + 1, 0);
      h.push_back(sp_unit(n + 1, n, 'i'));
      return make(k, h, e, pr);
    };
    b["berger13"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      // Sp(2) in SU(4) via its defining 4-dimensional representation, plus the normalizing circle.
      const LieAlgebra k = build_algebra(Family::su, 5);
      std::vector<CMat> h = padded_basis(build_algebra(Family::sp, 2), 5);
      h.push_back(i_diag({1, 1, 1, 1, -4}));
      return make(k, h, e, pr);
    };
    b["berger7"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const LieAlgebra k = build_algebra(Family::sp, 2);
      const auto gens = spin_three_halves();
      std::vector<CMat> h(gens.begin(), gens.end());
      return make(k, h, e, pr, sp_i_diag({3, 1}));
    };
    b["w11"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const LieAlgebra su2 = build_algebra(Family::su, 2);
      const LieAlgebra k = direct_sum(build_algebra(Family::su, 3), build_algebra(Family::so, 3));
      std::vector<CMat> h;
      for (const CMat& x : su2.realization().basis) h.push_back(block_diag(pad(x, 3), su2_to_so3(su2, x)));
      h.push_back(block_diag(i_diag({1, 1, -2}), CMat::Zero(3, 3)));
      return make(k, h, e, pr);
    };
    b["wallach6"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const LieAlgebra k = build_algebra(Family::su, 3);
      return make(k, {i_diag({1, -1, 0}), i_diag({0, 1, -1})}, e, pr);
    };
    b["wallach12"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const LieAlgebra k = build_algebra(Family::sp, 3);
      std::vector<CMat> h;
      for (int pos = 0; pos < 3; ++pos)
        for (char u : {'i', 'j', 'k'}) h.push_back(sp_unit(3, pos, u));
      return make(k, h, e, pr);
    };
    b["aloffwallach-su3"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int p = pr[0], q = pr[1];
      require_coprime(e.label, p, q, 1);
      const LieAlgebra k = build_algebra(Family::su, 3);
      const CMat t = i_diag({double(p), double(q), double(-p - q)});
      return make(k, {t}, e, pr, t);
    };
    b["aloffwallach-u3"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int p = pr[0], q = pr[1];
      require_coprime(e.label, p, q, 1);
      const LieAlgebra k = build_algebra(Family::u, 3);
      const CMat t = i_diag({double(p), double(q), double(-p - q)});
      return make(k, {t, i_diag({1, 0, 0})}, e, pr, t);
    };
    b["stiefel"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const LieAlgebra k = build_algebra(Family::sp, 2);
      const CMat t = sp_i_diag({1, 1});
      return make(k, {t}, e, pr, t);
    };
    b["sp2circle"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int p = pr[0], q = pr[1];
      require_coprime(e.label, p, q, 0);
      const LieAlgebra k = build_algebra(Family::sp, 2);
      const CMat t = sp_i_diag({double(p), double(q)});
      return make(k, {t}, e, pr, t);
    };
    b["su3circle"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int p = pr[0], q = pr[1];
      require_coprime(e.label, p, q, 0);
      const LieAlgebra k = build_algebra(Family::su, 3);
      const CMat t = i_diag({double(p), double(q), double(-p - q)});
      return make(k, {t}, e, pr, t);
    };
    b["s3s3circle"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      const int p = pr[0], q = pr[1];
      require_coprime(e.label, p, q, 1);
      const LieAlgebra k = direct_sum(build_algebra(Family::sp, 1), build_algebra(Family::sp, 1));
      const CMat t = block_diag(double(p) * sp_unit(1, 0, 'i'), double(q) * sp_unit(1, 0, 'i'));
      return make(k, {t}, e, pr, t);
    };
    b["sp3mix"] = [](const std::vector<int>& pr, const CatalogEntry& e) {
      // diag(q, r, r) in Sp(3)
      const LieAlgebra k = build_algebra(Family::sp, 3);
      std::vector<CMat> h;
      for (char u : {'i', 'j', 'k'}) h.push_back(sp_unit(3, 0, u));
      for (char u : {'i', 'j', 'k'}) h.push_back(sp_unit(3, 1, u) + sp_unit(3, 2, u));
      return make(k, h, e, pr);
    };
    return b;
  }();
  return table;
}

CatalogMetadata meta(std::string family, std::string manifold, std::string kernel,
                     std::string normalizer, bool positive) {
  return {std::move(family), std::move(manifold), std::move(kernel), std::move(normalizer),
          positive};
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"sphere-so", "SO(n+1)/SO(n)", {"n"}, {4}, meta("rank-one", "S^n", "{e}", "Z_2", true)},
      {"sphere-su", "SU(n+1)/SU(n)", {"n"}, {2}, meta("rank-one", "S^{2n+1}", "{e}", "S^1", true)},
      {"sphere-u", "U(n+1)/U(n)", {"n"}, {2}, meta("rank-one", "S^{2n+1}", "{e}", "S^1", true)},
      {"sphere-sp", "Sp(n+1)/Sp(n)", {"n"}, {1}, meta("rank-one", "S^{4n+3}", "{e}", "S^3", true)},
      {"sphere-spsp1", "Sp(n+1)Sp(1)/Sp(n)dSp(1)", {"n"}, {1},
       meta("rank-one", "S^{4n+3}", "dZ_2", "Z_2", true)},
      {"sphere-spu1", "Sp(n+1)U(1)/Sp(n)dU(1)", {"n"}, {1},
       meta("rank-one", "S^{4n+3}", "dZ_2", "S^1", true)},
      {"cpn", "SU(n+1)/U(n)", {"n"}, {2}, meta("rank-one", "CP^n", "Z_{n+1}", "{e}", true)},
      {"hpn", "Sp(n+1)/Sp(n)Sp(1)", {"n"}, {1}, meta("rank-one", "HP^n", "Z_2", "{e}", true)},
      {"cp2n1", "Sp(n+1)/Sp(n)U(1)", {"n"}, {1}, meta("rank-one", "CP^{2n+1}", "Z_2", "Z_2", true)},
      {"berger13", "SU(5)/Sp(2)S^1", {}, {}, meta("exceptional", "B^13", "Z_5", "{e}", true)},
      {"berger7", "Sp(2)/Sp(1)_max", {}, {}, meta("exceptional", "B^7", "Z_2", "{e}", true)},
      {"w11", "SU(3)xSO(3)/U(2)", {}, {}, meta("exceptional", "W^7_{1,1}", "Z_3", "{e}", true)},
      {"wallach6", "SU(3)/T^2", {}, {}, meta("exceptional", "W^6", "Z_3", "S_3", true)},
      {"wallach12", "Sp(3)/Sp(1)^3", {}, {}, meta("exceptional", "W^12", "Z_2", "S_3", true)},
      {"aloffwallach-su3", "SU(3)/S^1_{p,q}", {"p", "q"}, {1, 1},
       meta("exceptional", "W^7_{p,q}", "Z_3 if p=q mod 3, else {e}", "S^1 if p!=q, SO(3) if p=q",
            true)},
      {"aloffwallach-u3", "U(3)/T^2(p,q)", {"p", "q"}, {1, 1},
       meta("exceptional", "W^7_{p,q}", "Z_{p+2q}", "S^1", true)},
      {"stiefel", "Sp(2)/dS^1 = SO(5)/SO(2)", {}, {}, meta("non-example", "V_2(R^5)", "", "", false)},
      {"sp2circle", "Sp(2)/S^1_{p,q}", {"p", "q"}, {3, 1}, meta("non-example", "", "", "", false)},
      {"su3circle", "SU(3)/S^1_{p,q}", {"p", "q"}, {1, 0}, meta("non-example", "", "", "", false)},
      {"s3s3circle", "(S^3xS^3)/S^1_{p,q}", {"p", "q"}, {2, 1},
       meta("non-example", "", "", "", false)},
      {"sp3mix", "Sp(3)/Sp(1)dSp(1)", {}, {}, meta("non-example", "", "", "", false)},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view label) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.label == label) return e;
  throw InvalidArgument("unknown catalog label '" + std::string(label) + "'");
}

HomogeneousSpace catalog_build(std::string_view label, std::vector<int> params) {
  const CatalogEntry& entry = catalog_entry(label);
  if (params.empty()) params = entry.default_params;
  if (params.size() != entry.param_names.size())
    throw InvalidArgument(entry.label + ": expected " + std::to_string(entry.param_names.size()) +
                          " parameter(s), got " + std::to_string(params.size()));
  return builders().find(label)->second(params, entry);
}

}  // namespace homcurv
