#include "mualcq/enumerate.hpp"

#include "mualcq/errors.hpp"

namespace mualcq {

std::size_t enumeration_bits(const Signature& sig, std::size_t size) {
  return size * sig.concepts.size() + size * size * sig.roles.size();
}

std::uint64_t interpretation_count(const Signature& sig, std::size_t size) {
  if (size == 0) throw CapExceeded("domain size must be at least 1");
  std::size_t bits = enumeration_bits(sig, size);
  if (bits > kMaxEnumerationBits)
    throw CapExceeded("enumeration needs " + std::to_string(bits) + " bits; the cap is " +
                      std::to_string(kMaxEnumerationBits));
  return std::uint64_t{1} << bits;
}

Interpretation interpretation_at(const Signature& sig, std::size_t size, std::uint64_t index) {
  Interpretation out = Interpretation::canonical(size);
  std::size_t bit = 0;
  for (const auto& c : sig.concepts) {
    ElementSet ext(size);
    for (std::size_t e = 0; e < size; ++e, ++bit)
      if ((index >> bit) & 1U) ext.insert(e);
    out.set_concept(c, std::move(ext));
  }
  for (const auto& r : sig.roles) {
    Relation rel(size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b, ++bit)
        if ((index >> bit) & 1U) rel.insert(a, b);
    out.set_role(r, std::move(rel));
  }
  return out;
}

InterpretationStream::InterpretationStream(Signature sig, std::size_t size)
    : sig_(std::move(sig)), size_(size), total_(interpretation_count(sig_, size)) {
  sig_.validate();
}

std::optional<Interpretation> InterpretationStream::next() {
  if (next_ >= total_) return std::nullopt;
  return interpretation_at(sig_, size_, next_++);
}

void for_each_interpretation(const Signature& sig, std::size_t size,
                             const std::function<bool(const Interpretation&)>& f) {
  InterpretationStream stream(sig, size);
  while (auto i = stream.next())
    if (!f(*i)) return;
}

}  // namespace mualcq
