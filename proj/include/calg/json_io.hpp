#ifndef CALG_JSON_IO_HPP
#define CALG_JSON_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "calg/algcore.hpp"
#include "calg/unitize.hpp"
#include "calg/verify.hpp"

namespace calg {

inline constexpr const char* kToolName = "calg";
inline constexpr const char* kToolVersion = "1.0.0";

/// Structure-constant export of A(g) read back from disk. Field-for-field
/// mirror of the JSON written by algebra_json; all rationals "p/q" strings.
struct LoadedAlgebra {
  std::string type;
  std::string version;
  long h = 0;
  long hCheck = 0;
  int dimG = 0;
  int dimA = 0;
  std::uint64_t seed = 0;

  std::vector<std::string> basis;  // pair labels
  Vec epsilon;
  Vec unit;
  MulTable table;
  Mat tauGram;
};

/// Full export: metadata, basis pair labels, counit, unit, sparse product
/// constants (a <= b, k ascending), tau Gram matrix. Requires the structure
/// table and tau Gram to be filled. Deterministic bytes for fixed inputs.
nlohmann::ordered_json algebra_json(const AlgebraTable& t, std::uint64_t seed);

LoadedAlgebra algebra_from_json(const nlohmann::json& j);
LoadedAlgebra load_algebra(const std::string& path);

/// Splits a loaded algebra along its counit into Unit(V, f) data, mirroring
/// split_counit but working from the serialized table alone. basisOut
/// (optional) receives the change of basis: column 0 = unit, column 1+i =
/// i-th V basis vector in the loaded coordinates.
UnitizedAlgebra split_loaded(const LoadedAlgebra& a, Mat* basisOut = nullptr);

nlohmann::ordered_json report_json(const VerificationReport& rep);
std::string report_text(const VerificationReport& rep);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace calg

#endif
