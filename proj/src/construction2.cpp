#include "calg/construction2.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace calg {

Mat rep_of_vec(const Representation& rep, const Vec& x) {
  Mat m(rep.dimV, rep.dimV);
  for (std::size_t i = 0; i < rep.rho.size(); ++i)
    if (!is_zero(x[i])) m += rep.rho[i].scaled(x[i]);
  return m;
}

void validate_rep(const LieAlgebra& L, const Representation& rep) {
  if (int(rep.rho.size()) != L.dim)
    throw std::invalid_argument("representation: expected " + std::to_string(L.dim) +
                                " matrices, got " + std::to_string(rep.rho.size()));
  for (int i = 0; i < L.dim; ++i)
    if (rep.rho[i].rows() != rep.dimV || rep.rho[i].cols() != rep.dimV)
      throw std::invalid_argument("representation: matrix " + std::to_string(i) +
                                  " has wrong shape");
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) {
      Mat comm = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
      Mat expect(rep.dimV, rep.dimV);
      for (const auto& [k, v] : L.bracket[i][j]) expect += rep.rho[k].scaled(v);
      if (!(comm == expect))
        throw std::invalid_argument("representation: commutator mismatch at basis pair (" +
                                    L.basisLabels[i] + ", " + L.basisLabels[j] + ")");
    }
  for (int i = 0; i < L.dim; ++i)
    for (int j = i; j < L.dim; ++j) {
      Rat tr = (rep.rho[i] * rep.rho[j]).trace();
      if (tr != rep.traceRatio * L.killingGram.at(i, j))
        throw std::invalid_argument("representation: trace normalization fails at pair (" +
                                    L.basisLabels[i] + ", " + L.basisLabels[j] + ")");
    }
}

namespace {

/// Fills root-vector matrices from simple-root matrices by climbing the
/// bracket table, then derives the trace ratio; validates everything.
Representation finish_rep(const LieAlgebra& L, Representation rep) {
  const RootDatum& d = L.datum;
  int l = d.rank;
  int npos = int(d.positiveRoots.size());
  auto ready = [&](int basisIdx) { return rep.rho[basisIdx].rows() > 0; };
  for (int sign = 0; sign < 2; ++sign) {
    for (int ri = 0; ri < npos; ++ri) {
      int bi = L.rootVectorIndex(sign == 0 ? ri : npos + ri);
      if (ready(bi)) continue;
      // gamma = alpha_s + beta with both pieces already built
      const RootVec& gamma = d.roots[sign == 0 ? ri : npos + ri];
      bool done = false;
      for (int s = 0; s < l && !done; ++s) {
        RootVec alpha(l, 0);
        alpha[s] = sign == 0 ? 1 : -1;
        RootVec beta(gamma);
        beta[s] -= alpha[s];
        int betaIdx = d.root_index(beta);
        if (betaIdx < 0) continue;
        int ba = L.rootVectorIndex(d.root_index(alpha));
        int bb = L.rootVectorIndex(betaIdx);
        if (!ready(ba) || !ready(bb)) continue;
        const auto& br = L.bracket[ba][bb];
        if (br.size() != 1 || br[0].first != bi) throw std::logic_error("rep: bracket climb failed");
        Rat c = 1 / br[0].second;
        rep.rho[bi] = (rep.rho[ba] * rep.rho[bb] - rep.rho[bb] * rep.rho[ba]).scaled(c);
        done = true;
      }
      if (!done) throw std::logic_error("rep: no decomposition for root vector");
    }
  }
  Rat tr = (rep.rho[0] * rep.rho[0]).trace();
  rep.traceRatio = tr / L.killingGram.at(0, 0);
  validate_rep(L, rep);
  return rep;
}

}  // namespace

Representation natural_rep_sl3(const LieAlgebra& L) {
  if (L.datum.spec.family != 'A' || L.datum.rank != 2)
    throw std::invalid_argument("natural_rep_sl3 requires type A2");
  Representation rep;
  rep.type = "A2";
  rep.dimV = 3;
  rep.rho.assign(L.dim, Mat());
  auto e = [](int i, int j) {
    Mat m(3, 3);
    m.at(i, j) = 1;
    return m;
  };
  rep.rho[0] = e(0, 0) - e(1, 1);  // H1
  rep.rho[1] = e(1, 1) - e(2, 2);  // H2
  RootVec a1{1, 0}, a2{0, 1};
  rep.rho[L.rootVectorIndex(L.datum.root_index(a1))] = e(0, 1);
  rep.rho[L.rootVectorIndex(L.datum.root_index(a2))] = e(1, 2);
  RootVec m1{-1, 0}, m2{0, -1};
  rep.rho[L.rootVectorIndex(L.datum.root_index(m1))] = e(1, 0);
  rep.rho[L.rootVectorIndex(L.datum.root_index(m2))] = e(2, 1);
  Vec omega1{rat_of(1), rat_of(0)};
  rep.mu = casimir_eigenvalue(L.datum, omega1);
  return finish_rep(L, std::move(rep));
}

Representation load_rep(const std::string& path, const LieAlgebra& L) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open representation file " + path);
  nlohmann::json j;
  in >> j;
  Representation rep;
  rep.type = j.at("type").get<std::string>();
  rep.dimV = j.at("dimV").get<int>();
  if (rep.type != L.datum.spec.name())
    throw std::invalid_argument("representation type " + rep.type + " does not match " +
                                L.datum.spec.name());
  const auto& mats = j.at("matrices");
  for (const auto& flat : mats) {
    if (int(flat.size()) != rep.dimV * rep.dimV)
      throw std::invalid_argument("representation: matrix entry count mismatch");
    Mat m(rep.dimV, rep.dimV);
    int k = 0;
    for (const auto& s : flat) {
      m.at(k / rep.dimV, k % rep.dimV) = rat_parse(s.get<std::string>());
      ++k;
    }
    rep.rho.push_back(std::move(m));
  }
  Rat tr = (rep.rho[0] * rep.rho[0]).trace();
  rep.traceRatio = tr / L.killingGram.at(0, 0);
  rep.mu = rep.traceRatio * rat_of(L.dim) / rat_of(rep.dimV);
  validate_rep(L, rep);
  return rep;
}

void save_rep(const Representation& rep, const std::string& path) {
  nlohmann::ordered_json j;
  j["type"] = rep.type;
  j["dimV"] = rep.dimV;
  auto mats = nlohmann::ordered_json::array();
  for (const Mat& m : rep.rho) {
    auto flat = nlohmann::ordered_json::array();
    for (const Rat& x : m.data()) flat.push_back(rat_str(x));
    mats.push_back(std::move(flat));
  }
  j["matrices"] = std::move(mats);
  std::ofstream out(path);
  out << j.dump(1) << "\n";
}

Mat sigma(const LieAlgebra& L, const Representation& rep, const Mat& pre) {
  int n = L.dim;
  Mat acc(rep.dimV, rep.dimV);
  for (int i = 0; i < n; ++i) {
    Vec row(n);
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      row[j] = pre.at(i, j);
      if (!is_zero(row[j])) nz = true;
    }
    if (!nz) continue;
    acc += rep.rho[i] * rep_of_vec(rep, row);
  }
  acc = acc.scaled(rat_of(6 * L.hCheck()));
  Rat pairing;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(pre.at(i, j))) pairing += pre.at(i, j) * L.killingGram.at(i, j);
  acc -= Mat::identity(rep.dimV).scaled(pairing / 2);
  return acc;
}

bool check_pi_proj(const LieAlgebra& L, const Representation& rep, int samples,
                   std::uint64_t seed) {
  int n = L.dim;
  // Gram of {rho_i} under the trace form is traceRatio * K, so the projection
  // coefficients use killingInv / traceRatio.
  Rng rng(seed);
  Rat half = rat_of(1, 2);
  for (int s = 0; s < samples; ++s) {
    Vec x = rng.vector(std::size_t(n));
    Vec y = rng.vector(std::size_t(n));
    Mat px = rep_of_vec(rep, x);
    Mat py = rep_of_vec(rep, y);
    // sigma(S(X^2)) via the preimage x x^T
    Mat pre(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_zero(x[i]) && !is_zero(x[j])) pre.at(i, j) = x[i] * x[j];
    Mat sx = sigma(L, rep, pre);
    Mat jp = (sx * py + py * sx).scaled(half);
    // Project onto pi(g) with the trace pairing.
    Vec traces(n);
    for (int i = 0; i < n; ++i) traces[i] = (rep.rho[i] * jp).trace();
    Vec coef = L.killingInv.apply(traces);
    Mat proj(rep.dimV, rep.dimV);
    for (int i = 0; i < n; ++i)
      if (!is_zero(coef[i])) proj += rep.rho[i].scaled(coef[i] / rep.traceRatio);
    Vec sy = s_of_pre(L, pre).apply(y);
    if (!(proj == rep_of_vec(rep, sy))) return false;
  }
  return true;
}

Mat sl3_model_product(const Mat& P, const Mat& Q) {
  Rat third = rat_of(1, 3);
  Rat epsP = P.trace() * third;
  Rat epsQ = Q.trace() * third;
  Rat epsPQ = (P * Q).trace() * third;  // eps(P o Q): symmetric part has same trace
  Mat out = Mat::identity(3).scaled(epsPQ / 2 - rat_of(3, 2) * epsP * epsQ);
  out += P.scaled(epsQ);
  out += Q.scaled(epsP);
  return out;
}

}  // namespace calg
