#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ssg/analysis.hpp"
#include "ssg/katsura.hpp"
#include "ssg/triple.hpp"

namespace ssg {

using Json = nlohmann::json;

// Builds the triple described by a document; validation is separate.
Triple triple_from_json(const Json& doc);
Json triple_to_json(const Triple& t);
// parse and validate
Triple load_triple(const std::filesystem::path& file);
Triple parse_triple(std::string_view text);

// whitespace separated integer rows; '#' starts a comment
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix(const std::filesystem::path& file);

std::string verdict_text(Truth v, std::size_t bound);

Json report_to_json(const Triple& t, const Report& r);
std::string report_to_text(const Triple& t, const Report& r);

struct KatsuraSummary {
  bool pseudo_free;
  bool minimal;
  bool condition_l;
  Truth hausdorff;
  Truth essentially_principal;
  Truth sufficient_ep;
  Truth simple;
  Truth purely_infinite_simple;
  std::optional<KGroups> k_theory;
};
KatsuraSummary summarize_katsura(const KatsuraData& k, bool with_k_theory);
Json katsura_to_json(const KatsuraSummary& s);
std::string katsura_to_text(const KatsuraSummary& s);

}  // namespace ssg
