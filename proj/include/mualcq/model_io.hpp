// model_io.hpp - text format for interpretations.
//
//   # comment
//   domain: [s1, s2, s3]
//   concept node: [s1, s2]
//   role succ: [(s1,s2), (s2,s3)]
//
// The domain line comes first; the remaining lines in any order. Printing
// emits the domain, then concepts, then roles, each sorted by name. Kripke
// structures use the same layout with `label` in place of `role`.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mualcq/interpretation.hpp"

namespace mualcq {

/// Name-level contents of a model file, before index resolution.
struct ModelText {
  std::vector<std::string> domain;
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> relations;
};

/// `relation_keyword` is "role" for interpretations, "label" for Kripke
/// structures. Throws ModelFormatError.
ModelText parse_model_text(std::string_view text, std::string_view relation_keyword);
std::string format_model_text(const ModelText& m, std::string_view relation_keyword);

Interpretation parse_model(std::string_view text);
std::string print_model(const Interpretation& i);

Interpretation interpretation_from_text(const ModelText& m);
ModelText text_of(const Interpretation& i);

}  // namespace mualcq
