#ifndef CYCERT_TOOLS_DOCUMENT_HPP
#define CYCERT_TOOLS_DOCUMENT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cycert/family.hpp"
#include "cycert/realquad.hpp"

namespace cycert::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolName = "cycert";
inline constexpr const char* kToolVersion = "1.0.0";

ordered_json tool_header();

// Unbounded integers are serialized as decimal strings; word-size values
// (p, q, residues, moduli) stay JSON numbers.
ordered_json unit_document(const FundamentalUnit& u);
ordered_json certificate_document(const CertifyResult& res,
                                  const FieldTower& tower);
ordered_json search_document(const FundamentalUnit& u,
                             const std::vector<SearchHit>& hits);

// Plain-text residue-class and witness tables for one q, aligned columns.
std::string render_tables(const FundamentalUnit& u, std::uint64_t q,
                          const std::vector<SearchHit>& hits);

}  // namespace cycert::cli

#endif
