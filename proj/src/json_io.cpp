#include "calg/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace calg {

namespace {

nlohmann::ordered_json rat_array(const Vec& v) {
  auto a = nlohmann::ordered_json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

nlohmann::ordered_json mat_array(const Mat& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vec vec_from(const nlohmann::json& a) {
  Vec v;
  for (const auto& s : a) v.push_back(rat_parse(s.get<std::string>()));
  return v;
}

Mat mat_from(const nlohmann::json& rows) {
  int n = int(rows.size());
  int m2 = n == 0 ? 0 : int(rows[0].size());
  Mat m(n, m2);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != m2) throw std::invalid_argument("ragged matrix in JSON");
    for (int j = 0; j < m2; ++j) m.at(i, j) = rat_parse(rows[i][j].get<std::string>());
  }
  return m;
}

}  // namespace

nlohmann::ordered_json algebra_json(const AlgebraTable& t, std::uint64_t seed) {
  if (t.prodConst.empty() || t.tauGram.rows() != t.dimA)
    throw std::logic_error("algebra_json requires the structure table and tau Gram");
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  const RootDatum& d = t.lie.datum;
  j["metadata"] = {{"type", d.spec.name()},
                   {"h", d.h},
                   {"hCheck", d.hCheck},
                   {"dimG", t.lie.dim},
                   {"dimA", t.dimA},
                   {"seed", seed}};
  auto basis = nlohmann::ordered_json::array();
  for (auto [i, k] : t.basisPairs)
    basis.push_back(t.lie.basisLabels[i] + "*" + t.lie.basisLabels[k]);
  j["basis"] = std::move(basis);
  j["dimA"] = t.dimA;
  j["epsilon"] = rat_array(t.epsilon);
  j["unit"] = rat_array(t.unitCoords);
  auto pc = nlohmann::ordered_json::array();
  for (int a = 0; a < t.dimA; ++a)
    for (int b = a; b < t.dimA; ++b)
      for (int k = 0; k < t.dimA; ++k)
        if (!is_zero(t.prodConst[a][b][k]))
          pc.push_back(nlohmann::ordered_json::array({a, b, k, rat_str(t.prodConst[a][b][k])}));
  j["prodConst"] = std::move(pc);
  j["tauGram"] = mat_array(t.tauGram);
  return j;
}

LoadedAlgebra algebra_from_json(const nlohmann::json& j) {
  LoadedAlgebra a;
  const auto& md = j.at("metadata");
  a.type = md.at("type").get<std::string>();
  a.version = j.at("version").get<std::string>();
  a.h = md.at("h").get<long>();
  a.hCheck = md.at("hCheck").get<long>();
  a.dimG = md.at("dimG").get<int>();
  a.dimA = j.at("dimA").get<int>();
  a.seed = md.at("seed").get<std::uint64_t>();
  for (const auto& s : j.at("basis")) a.basis.push_back(s.get<std::string>());
  a.epsilon = vec_from(j.at("epsilon"));
  a.unit = vec_from(j.at("unit"));
  int n = a.dimA;
  if (int(a.epsilon.size()) != n || int(a.unit.size()) != n || int(a.basis.size()) != n)
    throw std::invalid_argument("algebra JSON: inconsistent dimensions");
  a.table.dim = n;
  a.table.c.assign(n, std::vector<Vec>(n, Vec(std::size_t(n))));
  for (const auto& q : j.at("prodConst")) {
    if (q.size() != 4) throw std::invalid_argument("algebra JSON: malformed product quadruple");
    int x = q[0].get<int>(), y = q[1].get<int>(), k = q[2].get<int>();
    if (x < 0 || x >= n || y < x || y >= n || k < 0 || k >= n)
      throw std::invalid_argument("algebra JSON: product index out of range");
    Rat v = rat_parse(q[3].get<std::string>());
    a.table.c[x][y][k] = v;
    a.table.c[y][x][k] = v;
  }
  a.tauGram = mat_from(j.at("tauGram"));
  if (a.tauGram.rows() != n || a.tauGram.cols() != n)
    throw std::invalid_argument("algebra JSON: tauGram shape mismatch");
  return a;
}

LoadedAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("algebra JSON parse error: " + std::string(e.what()));
  }
  try {
    return algebra_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("algebra JSON field error: " + std::string(e.what()));
  }
}

UnitizedAlgebra split_loaded(const LoadedAlgebra& a, Mat* basisOut) {
  int n = a.dimA;
  // eps(unit) must be 1 for the splitting to make sense.
  Rat epsUnit;
  for (int i = 0; i < n; ++i) epsUnit += a.epsilon[i] * a.unit[i];
  if (epsUnit != 1) throw std::invalid_argument("algebra JSON: counit(unit) != 1");
  std::vector<Vec> cands;
  for (int i = 0; i < n; ++i) {
    Vec v{};
    v.resize(std::size_t(n));
    v[i] = 1;
    for (int k = 0; k < n; ++k) v[k] -= a.epsilon[i] * a.unit[k];
    cands.push_back(std::move(v));
  }
  std::vector<int> keep = independent_subset(cands);
  if (int(keep.size()) != n - 1)
    throw std::invalid_argument("algebra JSON: kernel of counit has wrong dimension");
  Mat basis(n, n);
  for (int r = 0; r < n; ++r) basis.at(r, 0) = a.unit[r];
  for (int c = 0; c < n - 1; ++c)
    for (int r = 0; r < n; ++r) basis.at(r, c + 1) = cands[keep[c]][r];
  Mat inv = inverse(basis);

  UnitizedAlgebra u;
  u.dimV = n - 1;
  u.f = Mat(n - 1, n - 1);
  u.dot.assign(n - 1, std::vector<Vec>(n - 1));
  for (int i = 0; i < n - 1; ++i)
    for (int k = 0; k < n - 1; ++k) {
      Vec p = a.table.mul(cands[keep[i]], cands[keep[k]]);
      Vec coords = inv.apply(p);
      u.f.at(i, k) = coords[0];
      u.dot[i][k] = Vec(coords.begin() + 1, coords.end());
    }
  if (basisOut) *basisOut = std::move(basis);
  return u;
}

nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["type"] = rep.type;
  j["seed"] = rep.seed;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", rep.count(Status::pass)},
                  {"fail", rep.count(Status::fail)},
                  {"inconclusive", rep.count(Status::inconclusive)},
                  {"skipped", rep.count(Status::skipped)}};
  return j;
}

std::string report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "verification report: type " << rep.type << ", seed " << rep.seed << "\n";
  for (const auto& c : rep.checks) {
    os << "  [" << status_str(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "summary: " << rep.count(Status::pass) << " pass, " << rep.count(Status::fail)
     << " fail, " << rep.count(Status::inconclusive) << " inconclusive, "
     << rep.count(Status::skipped) << " skipped\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << contents;
}

}  // namespace calg
