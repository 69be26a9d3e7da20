#include "calg/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace calg {

RootSystemSpec RootSystemSpec::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("type string too short: '" + s + "'");
  char fam = char(std::toupper(static_cast<unsigned char>(s[0])));
  if (fam < 'A' || fam > 'G')
    throw std::invalid_argument("unknown family in type string '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed rank in type string '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  RootSystemSpec spec{fam, rank};
  validate_spec(spec);
  return spec;
}

void validate_spec(const RootSystemSpec& spec) {
  auto fail = [&](const std::string& constraint) {
    throw std::invalid_argument("inadmissible type " + spec.name() + ": requires " + constraint);
  };
  switch (spec.family) {
    case 'A':
      if (spec.rank < 1) fail("rank >= 1");
      break;
    case 'B':
      if (spec.rank < 2) fail("rank >= 2");
      break;
    case 'C':
      if (spec.rank < 2) fail("rank >= 2");
      break;
    case 'D':
      if (spec.rank < 3) fail("rank >= 3");
      break;
    case 'E':
      if (spec.rank < 6 || spec.rank > 8) fail("rank in {6,7,8}");
      break;
    case 'F':
      if (spec.rank != 4) fail("rank = 4");
      break;
    case 'G':
      if (spec.rank != 2) fail("rank = 2");
      break;
    default:
      fail("family in A..G");
  }
}

namespace {

// Raw Gram matrix of the simple roots: long roots have squared length 2
// (4 for the C long root, 6 for the G2 long root), edges carry
// -max(len_i, len_j)/2.
Mat raw_gram(const RootSystemSpec& spec) {
  int n = spec.rank;
  std::vector<Rat> len(n, rat_of(2));
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (spec.family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n);
      len[n - 1] = 1;
      break;
    case 'C':
      chain(n);
      len[n - 1] = 4;
      break;
    case 'D':
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7-8), node 2 attached to 4.
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      for (int i = 6; i < n; ++i) edges.emplace_back(i - 1, i);
      break;
    case 'F':
      chain(4);
      len[2] = len[3] = 1;
      break;
    case 'G':
      chain(2);
      len[1] = 6;
      break;
  }
  Mat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = len[i];
  Rat half = rat_of(1, 2);
  for (auto [i, j] : edges) {
    Rat v = -std::max(len[i], len[j]) * half;
    g.at(i, j) = v;
    g.at(j, i) = v;
  }
  return g;
}

int height(const RootVec& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

}  // namespace

int RootDatum::nu(const RootVec& alpha) const {
  Rat n = form_roots(alpha, alpha);
  Rat longest = form_roots(theta, theta);
  return n == longest ? 1 : nuG;
}

bool RootDatum::is_root(const RootVec& v) const { return root_index(v) >= 0; }

int RootDatum::root_index(const RootVec& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return int(i);
  return -1;
}

Rat RootDatum::form_roots(const Vec& u, const Vec& v) const {
  if (int(u.size()) != rank || int(v.size()) != rank)
    throw std::invalid_argument("form_roots: dimension mismatch");
  Rat s;
  for (int i = 0; i < rank; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < rank; ++j)
      if (!is_zero(v[j])) s += u[i] * canonicalGram.at(i, j) * v[j];
  }
  return s;
}

Rat RootDatum::form_roots(const RootVec& u, const RootVec& v) const {
  Vec a(u.begin(), u.end()), b(v.begin(), v.end());
  return form_roots(a, b);
}

Vec RootDatum::to_weight_coords(const RootVec& r) const {
  // i-th coordinate is alpha_i^vee(r) = sum_j r_j cartan[j][i]
  Vec w(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) w[i] += rat_of(r[j] * cartan[j][i]);
  return w;
}

Vec RootDatum::to_root_coords(const Vec& weight) const {
  if (int(weight.size()) != rank) throw std::invalid_argument("weight dimension mismatch");
  Vec r(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) r[j] += weight[i] * fundWeights.at(i, j);
  return r;
}

RootDatum build_root_system(const RootSystemSpec& spec) {
  validate_spec(spec);
  RootDatum d;
  d.spec = spec;
  d.rank = spec.rank;
  int n = spec.rank;

  Mat g0 = raw_gram(spec);
  d.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat c = 2 * g0.at(i, j) / g0.at(j, j);
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      d.cartan[i][j] = int(c.get_num().get_si());
    }

  // Enumerate positive roots by closing root strings upward in height.
  std::map<RootVec, bool> seen;
  std::vector<std::vector<RootVec>> byHeight(1);
  std::vector<RootVec> layer;
  for (int i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    layer.push_back(a);
    seen[a] = true;
  }
  std::sort(layer.begin(), layer.end());
  byHeight[0] = layer;
  while (!byHeight.back().empty()) {
    std::vector<RootVec> next;
    for (const RootVec& beta : byHeight.back()) {
      for (int i = 0; i < n; ++i) {
        // p = how far the alpha_i-string through beta extends downward
        int p = 0;
        RootVec down(beta);
        for (;;) {
          down[i] -= 1;
          bool nonneg = true, zero = true;
          for (int x : down) {
            if (x < 0) nonneg = false;
            if (x != 0) zero = false;
          }
          if (zero || !nonneg || !seen.count(down)) break;
          ++p;
        }
        int pairing = 0;  // alpha_i^vee(beta)
        for (int j = 0; j < n; ++j) pairing += beta[j] * d.cartan[j][i];
        if (p - pairing > 0) {
          RootVec up(beta);
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    byHeight.push_back(next);
  }

  for (const auto& level : byHeight)
    for (const auto& r : level) d.positiveRoots.push_back(r);
  d.roots = d.positiveRoots;
  for (const auto& r : d.positiveRoots) {
    RootVec m(r);
    for (int& x : m) x = -x;
    d.roots.push_back(m);
  }

  d.theta = d.positiveRoots.back();

  // Coxeter numbers from the marks of theta.
  long h = 1, hv = 1;
  Rat thetaLen2;
  {
    Vec t(d.theta.begin(), d.theta.end());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) thetaLen2 += t[i] * g0.at(i, j) * t[j];
  }
  for (int i = 0; i < n; ++i) {
    h += d.theta[i];
    Rat mv = rat_of(d.theta[i]) * g0.at(i, i) / thetaLen2;
    if (mv.get_den() != 1) throw std::logic_error("non-integral dual mark");
    hv += mv.get_num().get_si();
  }
  d.h = h;
  d.hCheck = hv;

  // Normalize so that <theta, theta> = 1/hCheck.
  d.canonicalGram = g0.scaled(1 / (thetaLen2 * rat_of(hv)));

  // Length ratio and highest short root.
  Rat minLen2 = thetaLen2;
  for (int i = 0; i < n; ++i) minLen2 = std::min(minLen2, Rat(g0.at(i, i)));
  Rat ratio = thetaLen2 / minLen2;
  if (ratio.get_den() != 1) throw std::logic_error("non-integral length ratio");
  d.nuG = int(ratio.get_num().get_si());
  d.thetaShort = d.theta;
  if (d.nuG > 1) {
    for (auto it = d.positiveRoots.rbegin(); it != d.positiveRoots.rend(); ++it) {
      Vec t(it->begin(), it->end());
      Rat len2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) len2 += t[i] * g0.at(i, j) * t[j];
      if (len2 == minLen2) {
        d.thetaShort = *it;
        break;
      }
    }
  }

  d.delta.assign(n, 0);
  for (const auto& r : d.positiveRoots)
    for (int i = 0; i < n; ++i) d.delta[i] += r[i];

  // fundWeights solves B * cartan = I (row i = omega_i in simple-root coords).
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = rat_of(d.cartan[i][j]);
  d.fundWeights = inverse(c);
  // check: alpha_i^vee(omega_j) = delta_ij, i.e. fundWeights * cartan = I.
  {
    Mat prod = d.fundWeights * c;
    if (!(prod == Mat::identity(n))) throw std::logic_error("fundamental weight solve failed");
  }

  return d;
}

Rat canonical_form(const RootDatum& d, const Vec& lambda, const Vec& mu) {
  return d.form_roots(d.to_root_coords(lambda), d.to_root_coords(mu));
}

static void check_dominant(const RootDatum& d, const Vec& lambda) {
  if (int(lambda.size()) != d.rank)
    throw std::invalid_argument("weight dimension mismatch");
  for (const auto& x : lambda)
    if (sgn(x) < 0) throw std::invalid_argument("weight is not dominant");
}

Rat casimir_eigenvalue(const RootDatum& d, const Vec& lambda) {
  check_dominant(d, lambda);
  Vec shifted(lambda);
  for (int i = 0; i < d.rank; ++i) shifted[i] += rat_of(2);  // delta = 2 rho
  return canonical_form(d, lambda, shifted);
}

mpz_class weyl_dim(const RootDatum& d, const Vec& lambda) {
  check_dominant(d, lambda);
  Vec lr = d.to_root_coords(lambda);
  Vec rho(d.rank);
  for (int i = 0; i < d.rank; ++i) rho[i] = rat_of(d.delta[i], 2);
  Rat dim = 1;
  for (const auto& alpha : d.positiveRoots) {
    Vec a(alpha.begin(), alpha.end());
    Vec lpr(lr);
    for (int i = 0; i < d.rank; ++i) lpr[i] += rho[i];
    dim *= d.form_roots(lpr, a) / d.form_roots(rho, a);
  }
  if (dim.get_den() != 1)
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  return dim.get_num();
}

}  // namespace calg
