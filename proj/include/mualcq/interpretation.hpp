// interpretation.hpp - finite interpretations, valuations and signatures.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mualcq/element_set.hpp"

namespace mualcq {

/// Binary relation over {0..n-1}, stored as successor rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t universe) : rows_(universe, ElementSet(universe)) {}

  std::size_t universe() const noexcept { return rows_.size(); }
  const ElementSet& successors(std::size_t a) const { return rows_[a]; }
  bool contains(std::size_t a, std::size_t b) const { return rows_[a].contains(b); }
  void insert(std::size_t a, std::size_t b) { rows_[a].insert(b); }
  void erase(std::size_t a, std::size_t b) { rows_[a].erase(b); }
  bool empty() const noexcept;
  std::size_t pair_count() const noexcept;

  /// Pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<ElementSet> rows_;
};

/// Subsets of the domain assigned to concept variables.
using Valuation = std::map<std::string, ElementSet>;

/// Atomic symbols to range over when enumerating interpretations.
struct Signature {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;

  /// Throws std::invalid_argument on duplicates or a name used as both.
  void validate() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

class Interpretation {
 public:
  /// Domain names must be distinct and non-empty in number.
  explicit Interpretation(std::vector<std::string> domain);

  /// Domain d1..dn.
  static Interpretation canonical(std::size_t n);

  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::string& name_of(std::size_t i) const { return domain_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownIndividual.
  std::size_t require_index(std::string_view name) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }

  void declare_concept(const std::string& name);
  void declare_role(const std::string& name);
  void set_concept(const std::string& name, ElementSet ext);
  void add_to_concept(const std::string& name, std::size_t element);
  void set_role(const std::string& name, Relation rel);
  void add_edge(const std::string& role, std::size_t from, std::size_t to);

  /// nullptr for undeclared symbols.
  const ElementSet* concept_extension(const std::string& name) const;
  const Relation* role_extension(const std::string& name) const;

  const std::map<std::string, ElementSet>& concepts() const noexcept { return concepts_; }
  const std::map<std::string, Relation>& roles() const noexcept { return roles_; }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::vector<std::string> domain_;
  std::map<std::string, ElementSet> concepts_;
  std::map<std::string, Relation> roles_;
};

/// Names of the given elements, for messages and output.
std::vector<std::string> element_names(const Interpretation& i, const ElementSet& s);

}  // namespace mualcq
