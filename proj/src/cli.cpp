#include "fchd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "fchd/catalog.hpp"
#include "fchd/combinatorics.hpp"
#include "fchd/oracle.hpp"
#include "fchd/zeta.hpp"

namespace fchd::cli {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxSweepK = 25;

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return Format::Text;
}

std::string header_line(const FchdManifold& m, SpinStructure s) {
  std::ostringstream out;
  out << "n = " << m.n << ", k = " << m.k << ", structure = " << to_string(s);
  return out.str();
}

std::string format_decimal(const ExactRational& q) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(12) << to_double(q);
  return out.str();
}

std::vector<SignVector> table_rows(int k) {
  auto rows = enumerate_dplus(k);
  std::ranges::sort(rows, [](const SignVector& a, const SignVector& b) { return a.signs() > b.signs(); });
  return rows;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

// ---------------------------------------------------------------------------
// verify

enum class Status { Pass, Fail, Skip };

struct CheckLine {
  std::string name;
  Status status;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream out;
  out << std::setprecision(3) << std::scientific << v;
  return out.str();
}

CheckLine residual_line(std::string name, double residual, double tol, std::string note = {}) {
  std::string detail = "max residual " + sci(residual) + " (tol " + sci(tol) + ")";
  if (!note.empty()) detail += ", " + note;
  return {std::move(name), residual <= tol ? Status::Pass : Status::Fail, std::move(detail)};
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ']';
  return out.str();
}

std::vector<CheckLine> run_verification(const FchdManifold& m, int window, double tol) {
  std::vector<CheckLine> lines;
  const auto rep = build_rep(m.k);

  lines.push_back(residual_line("clifford_anticommutation", clifford_residual(rep), 1e-12));
  lines.push_back(residual_line("r_commute", commutation_residual(rep), 1e-12));
  const auto power = alpha_power_residual(rep);
  const std::string how = power.exact_power ? "full power" : "random probes";
  lines.push_back(residual_line("alpha_power", power.alpha, 1e-9, how));
  lines.push_back(residual_line("alpha_plus_power", power.alpha_plus, 1e-9, how));
  lines.push_back(residual_line("alpha_minus_power", power.alpha_minus, 1e-9, how));
  lines.push_back(residual_line("conjugation_rotation", conjugation_residual(rep), 1e-9));

  const auto basis = eigenbasis_check(rep, 1e-10);
  {
    std::string detail = "alpha " + sci(basis.alpha_eigen_residual) + ", e_n " + sci(basis.en_eigen_residual) +
                         ", rho_1 " + sci(basis.rho_residual) + ", [alpha,e_n] " + sci(basis.alpha_en_commutator);
    detail += basis.normalized_gram_det ? ", gram det " + sci(*basis.normalized_gram_det) : ", gram skipped";
    if (basis.first_failure) detail += "; first failure: " + *basis.first_failure;
    lines.push_back({"eigenbasis_relations", basis.ok() ? Status::Pass : Status::Fail, detail});
  }

  for (SpinStructure s : kSpinStructures) {
    const std::string tag = std::string(to_string(s));
    const auto table = multiplicity_table(m, s);
    if (m.k % 2 == 0) {
      lines.push_back({"windowed_spectrum_" + tag, Status::Skip, "k even"});
    } else {
      const auto spectrum = windowed_spectrum(rep, m, s, window, tol);
      const auto folded = fold_spectrum(spectrum);
      const bool ok = folded.consistent && folded.per_class == table.counts;
      lines.push_back({"windowed_spectrum_" + tag, ok ? Status::Pass : Status::Fail,
                       "folded " + join(folded.per_class) + " vs table " + join(table.counts) +
                           (folded.consistent ? "" : " (inconsistent within a class)")});
      if (s == SpinStructure::Plus)
        lines.push_back({"residue_zero_symmetry", residue_zero_symmetric(spectrum) ? Status::Pass : Status::Fail,
                         "eigenvalues 2 pi m, m = 0 mod n"});
    }

    const auto oracle = kernel_dim_oracle(rep, m, s, tol);
    const auto formula = harmonic_dim(m, s);
    lines.push_back({"kernel_" + tag, oracle == formula ? Status::Pass : Status::Fail,
                     "oracle " + std::to_string(oracle) + ", formula " + std::to_string(formula)});

    if (m.k % 2 == 0) {
      lines.push_back({"eta_numeric_" + tag, Status::Skip, "k even"});
    } else {
      const double exact = to_double(eta(m, s).value);
      const double numeric = eta_numeric(m, 0.0, s);
      lines.push_back(residual_line("eta_numeric_" + tag, std::abs(numeric - exact), 1e-8,
                                    "exact " + format_rational(eta(m, s).value)));
    }
  }
  return lines;
}

}  // namespace

std::string render_eta(const EtaResult& result, Format format) {
  const auto& m = result.manifold;
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      out << header_line(m, result.structure) << '\n';
      out << "branch: "
          << (result.branch == EtaBranch::OddK ? "k odd, residue-weighted sum of A_r" : "k even, eta vanishes")
          << '\n';
      out << "eta = " << format_rational(result.value) << '\n';
      out << "eta ~ " << format_decimal(result.value) << '\n';
      out << "A_r (r = 0.." << m.n - 1 << ") = " << join(result.table.counts) << '\n';
      break;
    case Format::Json: {
      nlohmann::json j{{"n", m.n},
                       {"k", m.k},
                       {"structure", std::string(to_string(result.structure))},
                       {"branch", std::string(to_string(result.branch))},
                       {"eta", rational_to_json(result.value)},
                       {"eta_decimal", to_double(result.value)},
                       {"multiplicities", result.table.counts}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,k,structure,branch,eta";
      for (int r = 0; r < m.n; ++r) out << ",A" << r;
      out << '\n'
          << m.n << ',' << m.k << ',' << to_string(result.structure) << ',' << to_string(result.branch) << ','
          << format_rational(result.value);
      for (auto a : result.table.counts) out << ',' << a;
      out << '\n';
      break;
  }
  return out.str();
}

std::string render_table(const FchdManifold& m, SpinStructure s, Format format) {
  const auto rows = table_rows(m.k);
  const std::string mid = s == SpinStructure::Plus ? "mu/2+c(k)n" : "mu/2+c(k)n+k";
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      std::size_t eps_width = std::string("epsilon").size();
      for (const auto& eps : rows) eps_width = std::max(eps_width, eps.to_string().size());
      eps_width += 2;
      const int mid_width = static_cast<int>(mid.size());
      const int r_width = std::max(3, static_cast<int>(std::to_string(m.n - 1).size()) + 2);
      out << header_line(m, s) << ", c(k) = " << (m.delta == 0 ? "0" : "1/2") << '\n';
      out << std::left << std::setw(static_cast<int>(eps_width)) << "epsilon" << std::right << std::setw(mid_width)
          << mid << std::setw(r_width) << "r" << '\n';
      for (const auto& eps : rows)
        out << std::left << std::setw(static_cast<int>(eps_width)) << eps.to_string() << std::right
            << std::setw(mid_width) << shifted_half_mu(eps, m, s) << std::setw(r_width) << residue(eps, m, s) << '\n';
      break;
    }
    case Format::Json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& eps : rows)
        j.push_back({{"epsilon", eps.signs()},
                     {"shifted_half_mu", shifted_half_mu(eps, m, s)},
                     {"residue", residue(eps, m, s)}});
      out << nlohmann::json{{"n", m.n}, {"k", m.k}, {"structure", std::string(to_string(s))}, {"rows", j}}.dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      out << "epsilon," << mid << ",r\n";
      for (const auto& eps : rows)
        out << quoted(eps.to_string()) << ',' << shifted_half_mu(eps, m, s) << ',' << residue(eps, m, s) << '\n';
      break;
  }
  return out.str();
}

std::string render_harmonic(const FchdManifold& m, SpinStructure s, Format format) {
  const auto h = harmonic_dim(m, s);
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      out << header_line(m, s) << '\n' << "harmonic_dim = " << h << '\n';
      break;
    case Format::Json:
      out << nlohmann::json{{"n", m.n}, {"k", m.k}, {"structure", std::string(to_string(s))}, {"harmonic_dim", h}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      out << "n,k,structure,harmonic_dim\n" << m.n << ',' << m.k << ',' << to_string(s) << ',' << h << '\n';
      break;
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eta invariants and harmonic spinors of odd-dimensional flat manifolds with cyclic holonomy", "fchd"};
  app.require_subcommand(1);

  int dim = 0;
  std::string structure = "plus";
  std::string format = "text";
  int window = 0;
  double tol = 1e-9;
  int k_min = 1;
  int k_max = 1;
  std::string out_path;
  bool with_oracle = false;

  const auto structure_check = CLI::IsMember({"plus", "minus"});
  const auto format_check = CLI::IsMember({"text", "json", "csv"});

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--dim", dim, "Manifold dimension n = 2k + 1 (odd, >= 3)")->required();
    cmd->add_option("--structure", structure, "Spin structure")->check(structure_check);
    cmd->add_option("--format", format, "Output format")->check(format_check);
  };

  auto* eta_cmd = app.add_subcommand("eta", "Exact eta invariant and multiplicity table");
  add_common(eta_cmd);
  auto* table_cmd = app.add_subcommand("table", "Residue table over D_+");
  add_common(table_cmd);
  auto* harmonic_cmd = app.add_subcommand("harmonic", "Dimension of harmonic spinors");
  add_common(harmonic_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the spinor-representation oracle");
  verify_cmd->add_option("--dim", dim, "Manifold dimension (odd, 3..25)")->required();
  verify_cmd->add_option("--window", window, "Fourier window |l| <= window (default 3n)");
  verify_cmd->add_option("--tol", tol, "Phase tolerance")->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Write a catalog for a range of k");
  sweep_cmd->add_option("--kmin", k_min, "Smallest k")->required();
  sweep_cmd->add_option("--kmax", k_max, "Largest k (<= 25)")->required();
  sweep_cmd->add_option("--out", out_path, "Output file")->required();
  sweep_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  std::string sweep_structure = "both";
  sweep_cmd->add_option("--structure", sweep_structure, "plus, minus or both")
      ->check(CLI::IsMember({"plus", "minus", "both"}));
  sweep_cmd->add_flag("--with-oracle", with_oracle, "Add oracle_agreement for k <= 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eta_cmd || *table_cmd || *harmonic_cmd) {
      const auto m = manifold_from_dim(dim);
      const auto s = parse_spin_structure(structure);
      const auto fmt = parse_format(format);
      if (*eta_cmd)
        out << render_eta(eta(m, s), fmt);
      else if (*table_cmd)
        out << render_table(m, s, fmt);
      else
        out << render_harmonic(m, s, fmt);
      return 0;
    }

    if (*verify_cmd) {
      const auto m = manifold_from_dim(dim);
      if (m.k > SpinorRep<>::kMaxK) {
        err << "verify: dimension capped at " << 2 * SpinorRep<>::kMaxK + 1 << '\n';
        return kExitUsage;
      }
      if (window == 0) window = 3 * m.n;
      if (window < m.n) {
        err << "verify: --window must be >= dim\n";
        return kExitUsage;
      }
      out << "verify n = " << m.n << ", k = " << m.k << ", window = " << window << ", tol = " << sci(tol) << '\n';
      bool all = true;
      for (const auto& line : run_verification(m, window, tol)) {
        const char* tag = line.status == Status::Pass ? "PASS" : line.status == Status::Fail ? "FAIL" : "SKIP";
        out << tag << "  " << line.name << ": " << line.detail << '\n';
        all = all && line.status != Status::Fail;
      }
      out << (all ? "all checks passed" : "verification FAILED") << '\n';
      return all ? 0 : kExitMismatch;
    }

    if (*sweep_cmd) {
      if (k_min < 1 || k_max < k_min || k_max > kMaxSweepK) {
        err << "sweep: need 1 <= kmin <= kmax <= " << kMaxSweepK << '\n';
        return kExitUsage;
      }
      std::vector<SpinStructure> structures;
      if (sweep_structure != "minus") structures.push_back(SpinStructure::Plus);
      if (sweep_structure != "plus") structures.push_back(SpinStructure::Minus);

      std::ofstream file(out_path);
      if (!file) {
        err << "sweep: cannot open '" << out_path << "' for writing\n";
        return kExitUsage;
      }
      const auto entries = sweep_catalog(k_min, k_max, structures, with_oracle);
      if (format == "csv")
        file << catalog_to_csv(entries);
      else
        file << nlohmann::json(entries).dump(2) << '\n';
      file.close();
      if (!file) {
        err << "sweep: write to '" << out_path << "' failed\n";
        return kExitUsage;
      }
      out << "wrote " << entries.size() << " entries to " << out_path << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fchd::cli
