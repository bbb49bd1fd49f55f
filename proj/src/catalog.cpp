#include "fchd/catalog.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fchd/oracle.hpp"

namespace fchd {

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational component exceeds int64 for serialization");
  return v.convert_to<std::int64_t>();
}

std::string prop1a_verdict(const FchdManifold& m, SpinStructure s, std::int64_t h) {
  if (s == SpinStructure::Minus) return "not_applicable";
  return (h > 0) == (m.n >= 5) ? "consistent" : "discrepancy";
}

}  // namespace

std::string oracle_agreement(const FchdManifold& m, SpinStructure s) {
  const auto rep = build_rep(m.k);
  bool ok = kernel_dim_oracle(rep, m, s) == harmonic_dim(m, s);
  if (ok && m.k % 2 == 1) {
    const auto folded = fold_spectrum(windowed_spectrum(rep, m, s, 3 * m.n));
    ok = folded.consistent && folded.per_class == multiplicity_table(m, s).counts;
  }
  return ok ? "pass" : "fail";
}

CatalogEntry make_catalog_entry(const FchdManifold& m, SpinStructure s, bool with_oracle) {
  const EtaResult result = eta(m, s);
  CatalogEntry entry;
  entry.n = m.n;
  entry.k = m.k;
  entry.structure = s;
  entry.multiplicities = result.table.counts;
  entry.eta = result.value;
  entry.harmonic_dim = s == SpinStructure::Plus ? result.table.counts[0] : 0;
  entry.checks["corollary1"] = std::string(to_string(check_corollary1(m, s)));
  entry.checks["corollary2"] = std::string(to_string(check_corollary2(m).verdict));
  entry.checks["prop1a"] = prop1a_verdict(m, s, entry.harmonic_dim);
  if (with_oracle) entry.checks["oracle_agreement"] = m.k <= SpinorRep<>::kMaxK ? oracle_agreement(m, s) : "skipped";
  return entry;
}

std::vector<CatalogEntry> sweep_catalog(int k_min, int k_max, const std::vector<SpinStructure>& structures,
                                        bool with_oracle) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("sweep range must satisfy 1 <= kmin <= kmax");
  std::vector<CatalogEntry> out;
  for (int k = k_min; k <= k_max; ++k) {
    const auto m = make_manifold(k);
    for (SpinStructure s : structures) out.push_back(make_catalog_entry(m, s, with_oracle));
  }
  return out;
}

nlohmann::json rational_to_json(const ExactRational& q) {
  return {{"numerator", to_int64(boost::multiprecision::numerator(q))},
          {"denominator", to_int64(boost::multiprecision::denominator(q))}};
}

void to_json(nlohmann::json& j, const CatalogEntry& e) {
  j = nlohmann::json{{"n", e.n},
                     {"k", e.k},
                     {"structure", std::string(to_string(e.structure))},
                     {"multiplicities", e.multiplicities},
                     {"eta", rational_to_json(e.eta)},
                     {"harmonic_dim", e.harmonic_dim},
                     {"checks", e.checks}};
}

void from_json(const nlohmann::json& j, CatalogEntry& e) {
  j.at("n").get_to(e.n);
  j.at("k").get_to(e.k);
  e.structure = parse_spin_structure(j.at("structure").get<std::string>());
  j.at("multiplicities").get_to(e.multiplicities);
  const auto num = j.at("eta").at("numerator").get<std::int64_t>();
  const auto den = j.at("eta").at("denominator").get<std::int64_t>();
  if (den <= 0) throw std::invalid_argument("eta denominator must be positive");
  e.eta = ExactRational(BigInt(num), BigInt(den));
  j.at("harmonic_dim").get_to(e.harmonic_dim);
  j.at("checks").get_to(e.checks);
}

std::string catalog_to_csv(const std::vector<CatalogEntry>& entries) {
  int max_n = 0;
  std::set<std::string> check_names;
  for (const auto& e : entries) {
    max_n = std::max(max_n, e.n);
    for (const auto& [name, verdict] : e.checks) check_names.insert(name);
  }

  std::ostringstream out;
  out << "n,k,structure,eta,harmonic_dim";
  for (int r = 0; r < max_n; ++r) out << ",A" << r;
  for (const auto& name : check_names) out << ',' << name;
  out << '\n';

  for (const auto& e : entries) {
    out << e.n << ',' << e.k << ',' << to_string(e.structure) << ',' << format_rational(e.eta) << ','
        << e.harmonic_dim;
    for (int r = 0; r < max_n; ++r) {
      out << ',';
      if (r < static_cast<int>(e.multiplicities.size())) out << e.multiplicities[r];
    }
    for (const auto& name : check_names) {
      out << ',';
      if (auto it = e.checks.find(name); it != e.checks.end()) out << it->second;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace fchd
