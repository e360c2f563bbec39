// syntax.hpp - scoping, substitution and polarity analysis on concepts.

#pragma once

#include <set>
#include <string>

#include "mualcq/concept.hpp"

namespace mualcq {

enum class Polarity { Positive, Negative, Both, Absent };

const char* to_string(Polarity p) noexcept;

/// Variables with at least one free occurrence.
std::set<std::string> free_variables(const Concept& c);

bool is_closed(const Concept& c);

/// Atomic concept names occurring in c.
std::set<std::string> atomic_concepts(const Concept& c);

/// Role names occurring in c.
std::set<std::string> roles_of(const Concept& c);

/// Every identifier in c: atomic concepts, roles, and all variables, bound or
/// free. Used to pick names that collide with nothing.
std::set<std::string> all_names(const Concept& c);

/// `base` if it is not in `avoid`, otherwise `base_1`, `base_2`, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Capture-avoiding substitution of d for the free occurrences of x in c.
/// Binders of c whose variable is free in d are renamed first.
Concept substitute(const Concept& c, const std::string& x, const Concept& d);

/// Parity of negations above each free occurrence of x. Not counts one,
/// the filler of an at-most restriction counts one, everything else zero.
Polarity polarity_of(const Concept& c, const std::string& x);

/// Throws WellFormednessError unless every Mu/Nu binder's variable occurs
/// positively (or not at all) in its body.
void check_well_formed(const Concept& c);
bool is_well_formed(const Concept& c);

/// nu X.B => not mu X. not B[X/not X], and symmetrically for mu.
/// Throws NotAFixpoint unless the root is a binder.
Concept dual_fixpoint(const Concept& c);

/// Structural equality up to renaming of bound variables.
bool alpha_equivalent(const Concept& a, const Concept& b);

}  // namespace mualcq
