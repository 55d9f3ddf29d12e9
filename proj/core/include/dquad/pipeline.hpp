#pragma once

// End-to-end replay: one certificate per (k, nu), routed through the
// module that closes that case.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dquad/bigint.hpp"
#include "dquad/interval.hpp"

namespace dquad {

enum class Route { gap_hypergeometric, linform_reduction, congruence, curve, modular, excluded_mod4 };

std::string route_name(Route route);

struct BoundEntry {
  std::string stage;
  BigInt bound;
};

struct CaseSolution {
  std::uint64_t m;
  std::optional<std::uint64_t> n;
  BigInt x;
  BigInt d;
};

struct NamedReal {
  std::string name;
  Interval value;
};

struct CaseCertificate {
  std::int64_t k;
  std::uint64_t nu;
  Route route;
  BigInt c;
  bool c_minus_k_square = false;
  std::vector<BoundEntry> bound_chain;  // non-increasing
  std::vector<CaseSolution> solutions;
  std::string conclusion;
  std::vector<std::string> caveats;
  std::vector<std::string> notes;
  std::vector<NamedReal> reals;
  bool conclusive = false;
};

inline constexpr const char* kNoExtension = "no extension with c>1, d>1";

struct PipelineConfig {
  std::int64_t k_from = 3;
  std::int64_t k_to = 20;
  std::uint64_t nu_min = 1;
  std::uint64_t nu_max = 9;
  long precision_digits = 0;  // 0: chosen per case
  unsigned jobs = 1;
};

/// The route for (k, nu). Throws std::invalid_argument for k < 2 or nu < 1.
Route route_for(std::int64_t k, std::uint64_t nu);

CaseCertificate run_case(std::int64_t k, std::uint64_t nu, const PipelineConfig& config = {});

/// Certificates ordered by (k, nu) regardless of jobs.
std::vector<CaseCertificate> run_pipeline(const PipelineConfig& config);

inline constexpr int kCertificateSchemaVersion = 1;

std::string certificates_to_json(const std::vector<CaseCertificate>& certificates);
std::string certificates_to_text(const std::vector<CaseCertificate>& certificates);

enum class ReportFormat { json, text };

/// Re-renders a certificate array produced by certificates_to_json. Throws
/// std::invalid_argument on malformed input or an unknown schema version.
std::string render_report(std::string_view json_text, ReportFormat format);

/// Exit status for a run: 0 when every case is conclusive without caveats, 1 otherwise.
int exit_status(const std::vector<CaseCertificate>& certificates);

}  // namespace dquad
