// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#include "omv/types.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace omv {

// Interner. Fun types are canonicalized on (domain, codomain); the three
// base types are singletons. Entries live for the whole process.
class TypeStore {
 public:
  static const Type* base(TypeKind k) {
    static Type bool_(TypeKind::Bool, nullptr, nullptr);
    static Type world_(TypeKind::World, nullptr, nullptr);
    static Type indiv_(TypeKind::Indiv, nullptr, nullptr);
    switch (k) {
      case TypeKind::Bool: return &bool_;
      case TypeKind::World: return &world_;
      case TypeKind::Indiv: return &indiv_;
      default: return nullptr;
    }
  }

  static const Type* fun(const Type* d, const Type* c) {
    static std::mutex mu;
    static std::map<std::pair<const Type*, const Type*>, std::unique_ptr<Type>> funs;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, c);
    auto it = funs.find(key);
    if (it != funs.end()) return it->second.get();
    auto inserted =
        funs.emplace(key, std::unique_ptr<Type>(new Type(TypeKind::Fun, d, c)));
    return inserted.first->second.get();
  }
};

const Type* Type::boolean() { return TypeStore::base(TypeKind::Bool); }
const Type* Type::world() { return TypeStore::base(TypeKind::World); }
const Type* Type::indiv() { return TypeStore::base(TypeKind::Indiv); }
const Type* Type::fun(const Type* d, const Type* c) { return TypeStore::fun(d, c); }

const Type* Type::lifted() { return fun(world(), boolean()); }
const Type* Type::property() { return fun(indiv(), lifted()); }
const Type* Type::property_collection() { return fun(property(), lifted()); }
const Type* Type::accessibility() { return fun(world(), fun(world(), boolean())); }

std::string Type::str() const {
  switch (kind_) {
    case TypeKind::Bool: return "bool";
    case TypeKind::World: return "world";
    case TypeKind::Indiv: return "indiv";
    case TypeKind::Fun: {
      std::string d = dom_->str();
      if (dom_->is_fun()) d = "(" + d + ")";
      return d + ">" + cod_->str();
    }
  }
  return "?";
}

SizeContext::SizeContext(int worlds, int indiv) : worlds_(worlds), indiv_(indiv) {
  if (worlds < 1 || indiv < 1)
    throw BoundOverflow("frame sizes must be at least 1 world and 1 individual");
}

namespace {

constexpr uint64_t kMaxSize = (uint64_t{1} << 63) - 1;

// b^e with saturation above 2^63-1.
std::optional<uint64_t> checked_pow(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > kMaxSize / b) return std::nullopt;
    r *= b;
  }
  return r;
}

}  // namespace

std::optional<uint64_t> SizeContext::size(TypeRef t) const {
  switch (t->kind()) {
    case TypeKind::Bool: return uint64_t{2};
    case TypeKind::World: return uint64_t(worlds_);
    case TypeKind::Indiv: return uint64_t(indiv_);
    case TypeKind::Fun: {
      auto d = size(t->domain());
      auto c = size(t->codomain());
      if (!d || !c) return std::nullopt;
      return checked_pow(*c, *d);
    }
  }
  return std::nullopt;
}

uint64_t SizeContext::size_checked(TypeRef t, uint64_t ceiling) const {
  auto s = size(t);
  if (!s || *s > ceiling)
    throw BoundOverflow("denotation space of " + t->str() + " at w=" +
                        std::to_string(worlds_) + ", d=" + std::to_string(indiv_) +
                        (s ? " has " + std::to_string(*s) + " entries, above the ceiling of " +
                                 std::to_string(ceiling)
                           : " does not fit in 63 bits"));
  return *s;
}

}  // namespace omv
