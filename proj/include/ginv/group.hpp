#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ginv/perm.hpp"

namespace ginv {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup of a fixed parent group, stored as sorted element indices.
// Holds a non-owning pointer; the parent must outlive the reference.
class SubgroupRef {
 public:
  SubgroupRef() = default;
  SubgroupRef(const FiniteGroup* parent, std::vector<std::uint32_t> elems,
              std::vector<std::uint32_t> gens);

  const FiniteGroup& parent() const { return *parent_; }
  std::uint64_t order() const { return elems_.size(); }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  bool contains(std::uint32_t idx) const {
    return idx < in_set_.size() && in_set_[idx];
  }
  bool is_normal_in_parent() const;
  bool is_whole_group() const;
  bool same_elements(const SubgroupRef& o) const { return elems_ == o.elems_; }

 private:
  const FiniteGroup* parent_ = nullptr;
  std::vector<std::uint32_t> elems_;  // sorted
  std::vector<std::uint32_t> gens_;
  std::vector<bool> in_set_;
  mutable std::optional<bool> normal_;
};

struct ConjClass {
  std::uint32_t rep;                    // lex-smallest member index
  std::uint64_t element_order;
  std::vector<std::uint32_t> members;   // sorted
};

// (g)^{+-1} = (g) u (g^-1); one or two ordinary classes.
struct RealClass {
  std::uint32_t rep;                    // lex-smallest member index
  std::uint64_t element_order;
  std::uint64_t size;
  bool is_npp;                          // order has >= 2 distinct prime divisors
  std::vector<std::uint32_t> ordinary;  // 1 or 2 class ids
};

// Invariant fingerprint used instead of general isomorphism testing:
// order, element-order histogram, class-size multiset, center order,
// derived length.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;
  std::vector<std::uint64_t> class_sizes;
  std::uint64_t center_order = 0;
  unsigned derived_length = 0;
  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

struct QuotientGroup {
  const FiniteGroup* base = nullptr;
  std::vector<std::uint32_t> kernel_elems;
  GroupPtr quot;
  // coset_of[i]: coset index of base element i; coset 0 contains the identity.
  std::vector<std::uint32_t> coset_of;
  std::vector<std::uint32_t> coset_rep;  // smallest element index per coset
  std::vector<std::uint32_t> coset_to_qelem;
  std::vector<std::uint32_t> qelem_to_coset;

  std::uint32_t project(std::uint32_t base_elem) const { return coset_of[base_elem]; }
};
using QuotientPtr = std::shared_ptr<const QuotientGroup>;

enum class ResidualKind { Solvable, Nilpotent };

inline constexpr std::uint64_t kDefaultElementCap = 1000000;

// Finite permutation group: generators plus eagerly enumerated elements and
// class data. Immutable after construction; lazy caches are mutex-guarded.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  // Enumerates the closure of `gens`. Throws CapExceeded if it grows past
  // `cap` elements.
  static GroupPtr generate(std::string name, std::vector<Permutation> gens,
                           std::uint64_t cap = kDefaultElementCap);
  // A named placeholder for groups beyond the enumeration cap.
  static GroupPtr metadata_only(std::string name, std::uint64_t order);

  const std::string& name() const { return name_; }
  bool enumerated() const { return enumerated_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }

  // --- element access (enumerated groups only) ---
  std::uint32_t size32() const { return static_cast<std::uint32_t>(elements_.size()); }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint32_t index_of(const Permutation& p) const;           // throws if absent
  std::optional<std::uint32_t> try_index_of(const Permutation& p) const;
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }
  std::vector<Permutation> generators() const;

  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const;   // element i then j
  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const;   // g^-1 x g
  std::uint64_t element_order(std::uint32_t i) const;

  // --- conjugacy classes (deterministic order: element order, size, lex rep) ---
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::uint32_t class_of(std::uint32_t i) const { return class_of_[i]; }
  std::uint32_t inverse_class(std::uint32_t c) const;
  std::uint32_t power_class(std::uint32_t c, std::uint64_t e) const;
  const std::vector<RealClass>& real_classes() const { return real_classes_; }
  std::uint32_t real_class_of(std::uint32_t i) const { return real_class_of_[i]; }

  const std::vector<unsigned>& prime_divisors() const { return primes_; }
  std::uint64_t exponent() const;

  const SubgroupRef& whole() const;
  const SubgroupRef& trivial_subgroup() const;
  const Fingerprint& fingerprint() const;

  // Opaque memo slots for other modules (character table, pair sets).
  std::shared_ptr<void> ext_cache(int slot) const;
  void set_ext_cache(int slot, std::shared_ptr<void> value) const;

  void require_enumerated(const char* op) const;

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

 private:
  FiniteGroup() = default;
  void build_classes();

  std::string name_;
  bool enumerated_ = false;
  unsigned degree_ = 0;
  std::uint64_t order_ = 0;
  std::vector<Permutation> raw_gens_;
  std::vector<Permutation> elements_;  // sorted lex; identity at index 0
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> real_class_of_;
  std::vector<RealClass> real_classes_;
  std::vector<unsigned> primes_;

  struct Cache;
  std::unique_ptr<Cache> cache_;
  friend const std::vector<SubgroupRef>& normal_subgroups(const FiniteGroup&);
  friend SubgroupRef op_residual(const FiniteGroup&, unsigned);
  friend SubgroupRef residual(const FiniteGroup&, ResidualKind);
  friend SubgroupRef fitting(const FiniteGroup&);
  friend SubgroupRef sylow(const FiniteGroup&, unsigned);
  friend QuotientPtr quotient(const FiniteGroup&, const SubgroupRef&);
};

// ---- subgroup machinery ----

// Closure of `seed` element indices inside G.
SubgroupRef subgroup(const FiniteGroup& G, const std::vector<std::uint32_t>& seed);
SubgroupRef subgroup(const FiniteGroup& G, const std::vector<Permutation>& gen_perms);
// Wraps an already-closed element set; finds a small generating set greedily.
SubgroupRef subgroup_from_elements(const FiniteGroup& G, std::vector<std::uint32_t> elems);
SubgroupRef subgroup_intersection(const SubgroupRef& a, const SubgroupRef& b);
// AN for N normal in G; checks |AN| = |A||N|/|A cap N|. Throws NotNormal.
SubgroupRef normal_product(const SubgroupRef& a, const SubgroupRef& n);
// Smallest subgroup containing `seed` and closed under G-conjugation.
SubgroupRef normal_closure(const FiniteGroup& G, std::vector<std::uint32_t> seed);

// All normal subgroups, via joins of class closures; sorted by (order, elements).
const std::vector<SubgroupRef>& normal_subgroups(const FiniteGroup& G);

SubgroupRef derived_subgroup(const FiniteGroup& G, const SubgroupRef& H);
// O^p(G): generated by all p'-elements; cached.
SubgroupRef op_residual(const FiniteGroup& G, unsigned p);
SubgroupRef residual(const FiniteGroup& G, ResidualKind kind);
SubgroupRef fitting(const FiniteGroup& G);
SubgroupRef fitting2(const FiniteGroup& G);
SubgroupRef sylow(const FiniteGroup& G, unsigned p);
SubgroupRef normalizer(const FiniteGroup& G, const SubgroupRef& H);
std::uint64_t centralizer_order(const FiniteGroup& G);

// Quotient by a normal subgroup, realized on right cosets (shared + cached).
QuotientPtr quotient(const FiniteGroup& G, const SubgroupRef& N);
// Standalone group generated by H's generators (the whole group is shared).
GroupPtr regenerate(const SubgroupRef& H, const std::string& name);
// Image of a subgroup N <= H under the quotient map.
SubgroupRef quotient_image(const QuotientGroup& Q, const SubgroupRef& H);

// ---- structure predicates ----
bool is_cyclic(const SubgroupRef& H);
bool is_abelian(const SubgroupRef& H);
bool is_nilpotent(const SubgroupRef& H);
bool is_solvable(const SubgroupRef& H);
bool is_perfect(const SubgroupRef& H);
bool is_p_group(const SubgroupRef& H, unsigned p);
bool is_prime_power_order(std::uint64_t n);  // includes 1
bool is_elementary_abelian(const SubgroupRef& H, unsigned p);
unsigned derived_length(const FiniteGroup& G);

std::vector<unsigned> prime_divisors_of(std::uint64_t n);

}  // namespace ginv
