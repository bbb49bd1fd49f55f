// Command-line front end: eta, table, harmonic, verify, sweep.
#pragma once

#include <iosfwd>
#include <string>

#include "fchd/core.hpp"
#include "fchd/invariants.hpp"

namespace fchd::cli {

enum class Format { Text, Json, Csv };

/// Exit codes: 0 success, 1 verification failure, 2 invalid arguments or I/O.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string render_eta(const EtaResult& result, Format format);
/// One row per eps in D_+, ordered lexicographically with +1 before -1.
std::string render_table(const FchdManifold& m, SpinStructure s, Format format);
std::string render_harmonic(const FchdManifold& m, SpinStructure s, Format format);

}  // namespace fchd::cli
