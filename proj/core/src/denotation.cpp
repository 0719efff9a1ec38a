// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/denotation.hpp"

namespace omv {

Denotation Denotation::boolean(bool v) { return Denotation(Type::boolean(), v); }
Denotation Denotation::world(uint32_t idx) { return Denotation(Type::world(), idx); }
Denotation Denotation::individual(uint32_t idx) { return Denotation(Type::indiv(), idx); }

Denotation Denotation::table(TypeRef fun_type, std::vector<Denotation> entries) {
  return Denotation(fun_type, std::move(entries));
}

uint64_t canonical_index(const Denotation& d, const SizeContext& sizes) {
  TypeRef t = d.type();
  switch (t->kind()) {
    case TypeKind::Bool: return d.as_bool() ? 1 : 0;
    case TypeKind::World:
    case TypeKind::Indiv: return d.as_index();
    case TypeKind::Fun: {
      uint64_t cod = sizes.size_checked(t->codomain(), (uint64_t{1} << 63) - 1);
      uint64_t idx = 0;
      for (const Denotation& e : d.entries()) idx = idx * cod + canonical_index(e, sizes);
      return idx;
    }
  }
  return 0;
}

Denotation denotation_at(TypeRef t, uint64_t index, const SizeContext& sizes) {
  switch (t->kind()) {
    case TypeKind::Bool: return Denotation::boolean(index != 0);
    case TypeKind::World: return Denotation::world(uint32_t(index));
    case TypeKind::Indiv: return Denotation::individual(uint32_t(index));
    case TypeKind::Fun: {
      constexpr uint64_t kNoCeil = (uint64_t{1} << 63) - 1;
      uint64_t n = sizes.size_checked(t->domain(), kNoCeil);
      uint64_t cod = sizes.size_checked(t->codomain(), kNoCeil);
      std::vector<Denotation> entries;
      entries.reserve(size_t(n));
      // Decode base-|codomain| digits, most significant first.
      uint64_t pow = 1;
      for (uint64_t k = 1; k < n; ++k) pow *= cod;
      for (uint64_t k = 0; k < n; ++k) {
        entries.push_back(denotation_at(t->codomain(), (index / pow) % cod, sizes));
        if (pow > 1) pow /= cod;
      }
      return Denotation::table(t, std::move(entries));
    }
  }
  return Denotation::boolean(false);
}

DenotationStream::DenotationStream(TypeRef t, const SizeContext& sizes, uint64_t ceiling)
    : type_(t), sizes_(sizes), count_(sizes.size_checked(t, ceiling)) {}

Denotation DenotationStream::next() { return denotation_at(type_, next_++, sizes_); }

std::vector<Denotation> enumerate_denotations(TypeRef t, const SizeContext& sizes,
                                              uint64_t ceiling) {
  DenotationStream s(t, sizes, ceiling);
  std::vector<Denotation> out;
  out.reserve(size_t(s.count()));
  while (!s.done()) out.push_back(s.next());
  return out;
}

}  // namespace omv
