// enumerate.hpp - exhaustive enumeration of interpretations over a
// signature and a canonical domain d1..dn.
//
// Order: every interpretation corresponds to a counter value v in
// [0, 2^bits). Bit layout is little-endian with concept bits first:
//
//   bit (j * n + e)                       e in concept j
//   bit (C * n + k * n * n + a * n + b)   (a, b) in role k
//
// where C is the number of concepts and symbols are numbered in signature
// order. Interpretations are produced for v = 0, 1, 2, ...

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "mualcq/interpretation.hpp"

namespace mualcq {

/// Counter bits are held in a 64-bit word; larger spaces throw CapExceeded.
inline constexpr std::size_t kMaxEnumerationBits = 62;

std::size_t enumeration_bits(const Signature& sig, std::size_t size);

/// 2^(size*|concepts|) * 2^(size^2*|roles|). Throws CapExceeded.
std::uint64_t interpretation_count(const Signature& sig, std::size_t size);

/// Builds the interpretation for one counter value.
Interpretation interpretation_at(const Signature& sig, std::size_t size, std::uint64_t index);

/// Lazy stream over all interpretations of one size.
class InterpretationStream {
 public:
  /// Throws CapExceeded if size is 0 or the space exceeds kMaxEnumerationBits.
  InterpretationStream(Signature sig, std::size_t size);

  std::optional<Interpretation> next();
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t position() const noexcept { return next_; }

 private:
  Signature sig_;
  std::size_t size_;
  std::uint64_t total_;
  std::uint64_t next_ = 0;
};

/// Calls f on every interpretation in order until it returns false.
void for_each_interpretation(const Signature& sig, std::size_t size,
                             const std::function<bool(const Interpretation&)>& f);

}  // namespace mualcq
