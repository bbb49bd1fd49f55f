// Catalog records for sweeps over the family, with JSON and CSV encodings.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fchd/core.hpp"
#include "fchd/invariants.hpp"

namespace fchd {

/// One (k, structure) row. Exact fields are integers only.
struct CatalogEntry {
  int n = 0;
  int k = 0;
  SpinStructure structure = SpinStructure::Plus;
  std::vector<std::int64_t> multiplicities;
  ExactRational eta;
  std::int64_t harmonic_dim = 0;
  /// Named verdicts: corollary1, corollary2, prop1a, and oracle_agreement when run.
  std::map<std::string, std::string> checks;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Oracle agreement is evaluated only when requested and k <= 12.
CatalogEntry make_catalog_entry(const FchdManifold& m, SpinStructure s, bool with_oracle = false);

/// Entries ordered by k, then Plus before Minus.
std::vector<CatalogEntry> sweep_catalog(int k_min, int k_max, const std::vector<SpinStructure>& structures,
                                        bool with_oracle = false);

/// {"numerator": int, "denominator": int}; throws std::overflow_error beyond int64.
nlohmann::json rational_to_json(const ExactRational& q);

void to_json(nlohmann::json& j, const CatalogEntry& e);
void from_json(const nlohmann::json& j, CatalogEntry& e);

/// Header n,k,structure,eta,harmonic_dim,A0..A{max n - 1},<check names>; short rows padded with empty cells.
std::string catalog_to_csv(const std::vector<CatalogEntry>& entries);

/// "pass" / "fail": kernel count equals harmonic_dim and, for odd k, the folded
/// windowed spectrum (window 3n) equals the multiplicity table.
std::string oracle_agreement(const FchdManifold& m, SpinStructure s);

}  // namespace fchd
