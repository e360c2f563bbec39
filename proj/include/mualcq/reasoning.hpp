// reasoning.hpp - bounded satisfiability and implication checking.
//
// Searches only finite interpretations up to a size bound, so the verdicts
// are one-sided: a witness or counter-model is conclusive, exhausting the
// bound is not.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"
#include "mualcq/search.hpp"
#include "mualcq/tbox.hpp"

namespace mualcq {

struct Satisfiable {
  Interpretation witness;
  std::size_t element;
};

struct UnknownUpTo {
  std::size_t bound;
};

using SatVerdict = std::variant<Satisfiable, UnknownUpTo>;

struct Refuted {
  Interpretation counter_model;
  std::size_t element;
};

struct HoldsUpTo {
  std::size_t bound;
};

using ImplicationVerdict = std::variant<Refuted, HoldsUpTo>;

enum class Strategy { Direct, Internalized, Both };

/// Pruned: three-valued backtracking (search.hpp). Exhaustive: plain
/// enumeration in counter order, for cross-checking on small inputs.
enum class SearchMode { Pruned, Exhaustive };

struct SearchOptions {
  SearchMode mode = SearchMode::Pruned;
  /// Extra symbols to range over besides those of the inputs.
  Signature signature;
  SearchStats* stats = nullptr;
};

/// nu X.(forall R1.X and ... and forall Rm.X and C_K) and C and not D, where
/// R1..Rm are the roles of k, c and d and C_K is the conjunction of
/// (not Ci or Di) over k (top when k is empty). X is fresh. Throws
/// ClosednessError.
Concept internalize(const TBox& k, const Concept& c, const Concept& d);

/// Searches sizes 1..max_size in turn for an interpretation where c is
/// non-empty.
SatVerdict sat_bounded(const Concept& c, std::size_t max_size, const SearchOptions& opts = {});

/// Searches for a model of k in which c is non-empty.
SatVerdict sat_in_tbox(const TBox& k, const Concept& c, std::size_t max_size, const SearchOptions& opts = {});

/// Both refuses to answer when the strategies disagree (InternalError).
ImplicationVerdict implies_bounded(const TBox& k, const Concept& c, const Concept& d, std::size_t max_size,
                                   Strategy strategy = Strategy::Direct, const SearchOptions& opts = {});

/// Calls f on every model of k over d1..dn, in search order.
void for_each_model(const TBox& k, std::size_t n, const std::function<bool(const Interpretation&)>& f,
                    const SearchOptions& opts = {});

/// 2^(number of distinct subterms of c, variables included), saturating at
/// UINT64_MAX. An advisory size beyond which bounded search is expected to
/// be complete; never used to claim unsatisfiability.
std::uint64_t closure_bound(const Concept& c);

std::string to_text(const SatVerdict& v);
std::string to_text(const ImplicationVerdict& v);
/// One JSON object per verdict, on a single line.
std::string to_json(const SatVerdict& v);
std::string to_json(const ImplicationVerdict& v);
std::string model_json(const Interpretation& i);

const char* to_string(Strategy s) noexcept;

}  // namespace mualcq
