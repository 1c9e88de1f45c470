#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boxspec/lattice.hpp"
#include "boxspec/optimizer.hpp"
#include "boxspec/spectrum.hpp"
#include "boxspec/verify.hpp"

namespace boxspec {

/// Heads every emitted file: first CSV column, top-level JSON key.
inline constexpr int kSchemaVersion = 1;

/// Splits one CSV line; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

// Sweep table: schema_version,k,a1,a2,a3,lambda_star,delta,evaluations,
// restarts_agreeing,unique_within_tol,status
std::string optimize_csv_header();
std::string to_csv_row(const OptimalRecord& r);
OptimalRecord parse_optimize_row(std::string_view line);
void write_optimize_csv(std::ostream& os, std::span<const OptimalRecord> records);
std::vector<OptimalRecord> read_optimize_csv(std::istream& is);

// Verification table: schema_version,suite,input_repr,lhs,rhs,slack,pass
// with input_repr = name(inputs).
std::string verify_csv_header();
std::string to_csv_row(const VerifyRow& r);
VerifyRow parse_verify_row(std::string_view line);
void write_verify_csv(std::ostream& os, std::span<const VerifyRow> rows);
std::vector<VerifyRow> read_verify_csv(std::istream& is);

// Spectrum listing, one row per eigenvalue index j:
// schema_version,j,value,value_over_pi2,multiplicity,indices
// value_over_pi2 is only filled for the unit cube; indices are "i1 i2 i3|...".
void write_spectrum_csv(std::ostream& os, const Cuboid& box, std::span<const SpectralPoint> points,
                        std::int64_t k);
nlohmann::json spectrum_json(const Cuboid& box, std::span<const SpectralPoint> points, std::int64_t k);

void write_bundle_csv(std::ostream& os, const Cuboid& box, const CountBundle& b);
nlohmann::json bundle_json(const Cuboid& box, const CountBundle& b);

nlohmann::json to_json(const OptimalRecord& r);
OptimalRecord optimal_record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerifyRow& r);
VerifyRow verify_row_from_json(const nlohmann::json& j);

}  // namespace boxspec
