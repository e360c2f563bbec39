#include "mualcq/interpretation.hpp"

#include <set>
#include <stdexcept>

#include "mualcq/errors.hpp"

namespace mualcq {

bool Relation::empty() const noexcept {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

std::size_t Relation::pair_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (auto b : rows_[a].elements()) out.emplace_back(a, b);
  return out;
}

void Signature::validate() const {
  std::set<std::string> seen;
  for (const auto* names : {&concepts, &roles})
    for (const auto& n : *names)
      if (!seen.insert(n).second) throw std::invalid_argument("signature symbol '" + n + "' listed twice");
}

Interpretation::Interpretation(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.empty()) throw ModelFormatError("an interpretation needs a non-empty domain");
  std::set<std::string> seen;
  for (const auto& d : domain_)
    if (!seen.insert(d).second) throw ModelFormatError("duplicate individual '" + d + "'");
}

Interpretation Interpretation::canonical(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("d" + std::to_string(i));
  return Interpretation(std::move(names));
}

std::optional<std::size_t> Interpretation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] == name) return i;
  return std::nullopt;
}

std::size_t Interpretation::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnknownIndividual("unknown individual '" + std::string(name) + "'");
  return *i;
}

void Interpretation::declare_concept(const std::string& name) { concepts_.try_emplace(name, ElementSet(size())); }

void Interpretation::declare_role(const std::string& name) { roles_.try_emplace(name, Relation(size())); }

void Interpretation::set_concept(const std::string& name, ElementSet ext) {
  if (ext.universe() != size()) throw std::invalid_argument("extension of '" + name + "' has the wrong universe");
  concepts_.insert_or_assign(name, std::move(ext));
}

void Interpretation::add_to_concept(const std::string& name, std::size_t element) {
  declare_concept(name);
  concepts_.at(name).insert(element);
}

void Interpretation::set_role(const std::string& name, Relation rel) {
  if (rel.universe() != size()) throw std::invalid_argument("relation '" + name + "' has the wrong universe");
  roles_.insert_or_assign(name, std::move(rel));
}

void Interpretation::add_edge(const std::string& role, std::size_t from, std::size_t to) {
  declare_role(role);
  roles_.at(role).insert(from, to);
}

const ElementSet* Interpretation::concept_extension(const std::string& name) const {
  auto it = concepts_.find(name);
  return it == concepts_.end() ? nullptr : &it->second;
}

const Relation* Interpretation::role_extension(const std::string& name) const {
  auto it = roles_.find(name);
  return it == roles_.end() ? nullptr : &it->second;
}

std::vector<std::string> element_names(const Interpretation& i, const ElementSet& s) {
  std::vector<std::string> out;
  for (auto e : s.elements()) out.push_back(i.name_of(e));
  return out;
}

}  // namespace mualcq
