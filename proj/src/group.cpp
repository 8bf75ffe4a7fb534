#include "ginv/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ginv/errors.hpp"

namespace ginv {

std::vector<unsigned> prime_divisors_of(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

bool is_prime_power_order(std::uint64_t n) {
  return prime_divisors_of(n).size() <= 1;
}

// ---------------- SubgroupRef ----------------

SubgroupRef::SubgroupRef(const FiniteGroup* parent, std::vector<std::uint32_t> elems,
                         std::vector<std::uint32_t> gens)
    : parent_(parent), elems_(std::move(elems)), gens_(std::move(gens)) {
  in_set_.assign(parent_->size32(), false);
  for (auto i : elems_) in_set_[i] = true;
}

bool SubgroupRef::is_normal_in_parent() const {
  if (!normal_) {
    bool ok = true;
    for (auto g : parent_->generator_indices()) {
      for (auto h : gens_) {
        if (!contains(parent_->conj(h, g))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    normal_ = ok;
  }
  return *normal_;
}

bool SubgroupRef::is_whole_group() const { return order() == parent_->order(); }

// ---------------- FiniteGroup: caches ----------------

struct FiniteGroup::Cache {
  std::mutex mu;
  std::optional<std::vector<SubgroupRef>> normals;
  std::map<unsigned, SubgroupRef> op_res;
  std::optional<SubgroupRef> sol, nil, fit;
  std::map<unsigned, SubgroupRef> sylows;
  std::optional<SubgroupRef> whole, trivial;
  std::optional<Fingerprint> fp;
  std::map<std::pair<std::uint64_t, std::uint64_t>, QuotientPtr> quotients;
  std::map<int, std::shared_ptr<void>> ext;
};

std::shared_ptr<void> FiniteGroup::ext_cache(int slot) const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto it = cache_->ext.find(slot);
  return it == cache_->ext.end() ? nullptr : it->second;
}

void FiniteGroup::set_ext_cache(int slot, std::shared_ptr<void> value) const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->ext[slot] = std::move(value);
}

// ---------------- enumeration ----------------

GroupPtr FiniteGroup::generate(std::string name, std::vector<Permutation> gens,
                               std::uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("a group needs at least one generator");
  unsigned deg = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != deg)
      throw std::invalid_argument("generator degree mismatch in " + name);

  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->name_ = std::move(name);
  G->degree_ = deg;
  G->raw_gens_ = gens;
  G->cache_ = std::make_unique<Cache>();

  std::unordered_map<Permutation, std::uint32_t, PermHash> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(deg);
  seen.emplace(id, 0);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation p = cur * g;
      if (seen.emplace(p, 0).second) {
        if (seen.size() > cap)
          throw CapExceeded("element cap " + std::to_string(cap) + " exceeded for " + G->name_);
        todo.push_back(std::move(p));
      }
    }
  }
  G->elements_.reserve(seen.size());
  for (const auto& kv : seen) G->elements_.push_back(kv.first);
  std::sort(G->elements_.begin(), G->elements_.end());
  G->order_ = G->elements_.size();
  G->index_.reserve(G->elements_.size() * 2);
  for (std::uint32_t i = 0; i < G->elements_.size(); ++i) G->index_.emplace(G->elements_[i], i);
  G->inv_.resize(G->elements_.size());
  for (std::uint32_t i = 0; i < G->elements_.size(); ++i)
    G->inv_[i] = G->index_.at(G->elements_[i].inverse());
  for (const auto& g : gens) G->gen_idx_.push_back(G->index_.at(g));
  G->primes_ = prime_divisors_of(G->order_);
  G->enumerated_ = true;
  G->build_classes();
  return G;
}

GroupPtr FiniteGroup::metadata_only(std::string name, std::uint64_t order) {
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->name_ = std::move(name);
  G->order_ = order;
  G->primes_ = prime_divisors_of(order);
  G->cache_ = std::make_unique<Cache>();
  return G;
}

void FiniteGroup::require_enumerated(const char* op) const {
  if (!enumerated_)
    throw NotEnumerated(std::string(op) + " requires an enumerated group (" + name_ + ")");
}

std::uint32_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation is not an element of " + name_);
  return it->second;
}

std::optional<std::uint32_t> FiniteGroup::try_index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Permutation> FiniteGroup::generators() const { return raw_gens_; }

std::uint32_t FiniteGroup::mult(std::uint32_t i, std::uint32_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

std::uint32_t FiniteGroup::conj(std::uint32_t x, std::uint32_t g) const {
  return index_.at(elements_[g].inverse() * elements_[x] * elements_[g]);
}

std::uint64_t FiniteGroup::element_order(std::uint32_t i) const {
  return classes_[class_of_[i]].element_order;
}

void FiniteGroup::build_classes() {
  const std::uint32_t n = size32();
  class_of_.assign(n, UINT32_MAX);
  std::vector<Permutation> gen_inv;
  for (const auto& g : raw_gens_) gen_inv.push_back(g.inverse());

  std::vector<ConjClass> classes;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (class_of_[i] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(classes.size());
    ConjClass cc;
    cc.rep = i;
    cc.element_order = elements_[i].order();
    std::deque<std::uint32_t> q{i};
    class_of_[i] = cid;
    cc.members.push_back(i);
    while (!q.empty()) {
      std::uint32_t cur = q.front();
      q.pop_front();
      for (std::size_t gi = 0; gi < raw_gens_.size(); ++gi) {
        std::uint32_t y = index_.at(gen_inv[gi] * elements_[cur] * raw_gens_[gi]);
        if (class_of_[y] == UINT32_MAX) {
          class_of_[y] = cid;
          cc.members.push_back(y);
          q.push_back(y);
        }
      }
    }
    std::sort(cc.members.begin(), cc.members.end());
    cc.rep = cc.members.front();
    classes.push_back(std::move(cc));
  }

  // deterministic order: element order, class size, lex-smallest representative
  std::vector<std::uint32_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& A = classes[a];
    const auto& B = classes[b];
    if (A.element_order != B.element_order) return A.element_order < B.element_order;
    if (A.members.size() != B.members.size()) return A.members.size() < B.members.size();
    return elements_[A.rep] < elements_[B.rep];
  });
  std::vector<std::uint32_t> newid(classes.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) newid[perm[k]] = k;
  classes_.resize(classes.size());
  for (std::uint32_t k = 0; k < perm.size(); ++k) classes_[k] = std::move(classes[perm[k]]);
  for (auto& c : class_of_) c = newid[c];

  // real classes: merge each class with the class of inverses
  auto npp = [](std::uint64_t o) { return prime_divisors_of(o).size() >= 2; };
  std::vector<bool> placed(classes_.size(), false);
  real_class_of_.assign(n, 0);
  for (std::uint32_t c = 0; c < classes_.size(); ++c) {
    if (placed[c]) continue;
    std::uint32_t ci = class_of_[inv_[classes_[c].rep]];
    RealClass rc;
    rc.element_order = classes_[c].element_order;
    rc.is_npp = npp(rc.element_order);
    rc.ordinary.push_back(c);
    placed[c] = true;
    if (ci != c) {
      rc.ordinary.push_back(ci);
      placed[ci] = true;
    }
    rc.size = 0;
    rc.rep = UINT32_MAX;
    for (auto oc : rc.ordinary) {
      rc.size += classes_[oc].members.size();
      rc.rep = std::min(rc.rep, classes_[oc].rep);
    }
    real_classes_.push_back(std::move(rc));
  }
  std::sort(real_classes_.begin(), real_classes_.end(), [&](const RealClass& a, const RealClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return elements_[a.rep] < elements_[b.rep];
  });
  for (std::uint32_t r = 0; r < real_classes_.size(); ++r)
    for (auto oc : real_classes_[r].ordinary)
      for (auto m : classes_[oc].members) real_class_of_[m] = r;
}

std::uint32_t FiniteGroup::inverse_class(std::uint32_t c) const {
  return class_of_[inv_[classes_[c].rep]];
}

std::uint32_t FiniteGroup::power_class(std::uint32_t c, std::uint64_t e) const {
  return class_of_[index_.at(elements_[classes_[c].rep].power(static_cast<long long>(e % (classes_[c].element_order)))) ];
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes_) e = std::lcm(e, c.element_order);
  return e;
}

const SubgroupRef& FiniteGroup::whole() const {
  require_enumerated("whole()");
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->whole) {
    std::vector<std::uint32_t> all(size32());
    std::iota(all.begin(), all.end(), 0u);
    cache_->whole = SubgroupRef(this, std::move(all), gen_idx_);
  }
  return *cache_->whole;
}

const SubgroupRef& FiniteGroup::trivial_subgroup() const {
  require_enumerated("trivial_subgroup()");
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->trivial)
    cache_->trivial = SubgroupRef(this, {0u}, {});
  return *cache_->trivial;
}

// ---------------- subgroup machinery ----------------

namespace {

std::vector<std::uint32_t> closure_indices(const FiniteGroup& G,
                                           const std::vector<std::uint32_t>& seed) {
  std::vector<bool> in(G.size32(), false);
  std::vector<std::uint32_t> elems{0};
  in[0] = true;
  std::deque<std::uint32_t> q{0};
  std::vector<std::uint32_t> gens;
  for (auto s : seed)
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
      q.push_back(s);
      gens.push_back(s);
    }
  while (!q.empty()) {
    std::uint32_t cur = q.front();
    q.pop_front();
    for (auto g : gens) {
      std::uint32_t p = G.mult(cur, g);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
        q.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::uint32_t> greedy_generators(const FiniteGroup& G,
                                             const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> cur{0};
  for (auto e : elems) {
    if (std::binary_search(cur.begin(), cur.end(), e)) continue;
    gens.push_back(e);
    cur = closure_indices(G, gens);
    if (cur.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

SubgroupRef subgroup(const FiniteGroup& G, const std::vector<std::uint32_t>& seed) {
  G.require_enumerated("subgroup");
  auto elems = closure_indices(G, seed);
  std::vector<std::uint32_t> gens;
  for (auto s : seed)
    if (s != 0) gens.push_back(s);
  if (gens.empty() && elems.size() > 1) gens = greedy_generators(G, elems);
  return SubgroupRef(&G, std::move(elems), std::move(gens));
}

SubgroupRef subgroup(const FiniteGroup& G, const std::vector<Permutation>& gen_perms) {
  std::vector<std::uint32_t> seed;
  for (const auto& p : gen_perms) seed.push_back(G.index_of(p));
  return subgroup(G, seed);
}

SubgroupRef subgroup_from_elements(const FiniteGroup& G, std::vector<std::uint32_t> elems) {
  G.require_enumerated("subgroup_from_elements");
  std::sort(elems.begin(), elems.end());
  auto gens = greedy_generators(G, elems);
  auto check = closure_indices(G, gens);
  if (check != elems)
    throw std::invalid_argument("element set is not closed under multiplication");
  return SubgroupRef(&G, std::move(elems), std::move(gens));
}

SubgroupRef subgroup_intersection(const SubgroupRef& a, const SubgroupRef& b) {
  const FiniteGroup& G = a.parent();
  std::vector<std::uint32_t> elems;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(elems));
  auto gens = greedy_generators(G, elems);
  return SubgroupRef(&G, std::move(elems), std::move(gens));
}

SubgroupRef normal_product(const SubgroupRef& a, const SubgroupRef& n) {
  const FiniteGroup& G = a.parent();
  if (!n.is_normal_in_parent())
    throw NotNormal("normal_product: second factor is not normal in " + G.name());
  std::vector<std::uint32_t> seed = a.generators();
  seed.insert(seed.end(), n.generators().begin(), n.generators().end());
  auto an = subgroup(G, seed);
  auto meet = subgroup_intersection(a, n);
  if (an.order() * meet.order() != a.order() * n.order())
    throw NumericalFailure("normal_product: |AN| |A^N| != |A||N|");
  return an;
}

SubgroupRef normal_closure(const FiniteGroup& G, std::vector<std::uint32_t> seed) {
  G.require_enumerated("normal_closure");
  std::vector<std::uint32_t> gens;
  for (auto s : seed)
    if (s != 0) gens.push_back(s);
  const std::uint64_t half = G.order() / 2;
  while (true) {
    // conjugation-close the generating set, then take the closure
    bool grew = true;
    std::vector<std::uint32_t> cur = closure_indices(G, gens);
    if (cur.size() > half) return G.whole();
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> add;
      for (auto h : gens)
        for (auto g : G.generator_indices()) {
          std::uint32_t c = G.conj(h, g);
          if (!std::binary_search(cur.begin(), cur.end(), c)) add.push_back(c);
        }
      if (!add.empty()) {
        for (auto x : add) gens.push_back(x);
        cur = closure_indices(G, gens);
        if (cur.size() > half) return G.whole();
        grew = true;
      }
    }
    auto small = greedy_generators(G, cur);
    // verify closure under conjugation by all generators of G
    bool normal = true;
    for (auto h : small)
      for (auto g : G.generator_indices())
        if (!std::binary_search(cur.begin(), cur.end(), G.conj(h, g))) {
          normal = false;
          break;
        }
    if (normal) return SubgroupRef(&G, std::move(cur), std::move(small));
    gens = cur;  // rare: fall back to full set and re-close
  }
}

const std::vector<SubgroupRef>& normal_subgroups(const FiniteGroup& G) {
  G.require_enumerated("normal_subgroups");
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    if (G.cache_->normals) return *G.cache_->normals;
  }
  // every normal subgroup is a join of normal closures of single classes
  std::vector<SubgroupRef> found;
  found.push_back(G.trivial_subgroup());
  std::vector<SubgroupRef> atoms;
  for (const auto& c : G.classes()) {
    if (c.rep == 0) continue;
    auto a = normal_closure(G, {c.rep});
    bool dup = false;
    for (const auto& b : atoms)
      if (b.order() == a.order() && b.same_elements(a)) {
        dup = true;
        break;
      }
    if (!dup) atoms.push_back(std::move(a));
  }
  auto have = [&](const SubgroupRef& s) {
    for (const auto& f : found)
      if (f.order() == s.order() && f.same_elements(s)) return true;
    return false;
  };
  for (const auto& a : atoms)
    if (!have(a)) found.push_back(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t cnt = found.size();
    for (std::size_t i = 0; i < cnt; ++i)
      for (const auto& a : atoms) {
        if (found[i].order() % a.order() == 0 &&
            std::includes(found[i].elements().begin(), found[i].elements().end(),
                          a.elements().begin(), a.elements().end()))
          continue;
        std::vector<std::uint32_t> seed = found[i].generators();
        seed.insert(seed.end(), a.generators().begin(), a.generators().end());
        auto join = normal_closure(G, seed);
        if (!have(join)) {
          found.push_back(join);
          grew = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const SubgroupRef& a, const SubgroupRef& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  if (!G.cache_->normals) G.cache_->normals = std::move(found);
  return *G.cache_->normals;
}

SubgroupRef derived_subgroup(const FiniteGroup& G, const SubgroupRef& H) {
  std::vector<std::uint32_t> comms;
  for (auto a : H.generators())
    for (auto b : H.generators()) {
      std::uint32_t c = G.mult(G.mult(G.inv(a), G.inv(b)), G.mult(a, b));
      if (c != 0) comms.push_back(c);
    }
  // normal closure inside H
  std::vector<std::uint32_t> gens = comms;
  while (true) {
    auto cur = closure_indices(G, gens);
    bool grew = false;
    std::vector<std::uint32_t> add;
    for (auto h : gens)
      for (auto g : H.generators()) {
        std::uint32_t c = G.conj(h, g);
        if (!std::binary_search(cur.begin(), cur.end(), c)) add.push_back(c);
      }
    if (add.empty()) {
      auto small = greedy_generators(G, cur);
      return SubgroupRef(&G, std::move(cur), std::move(small));
    }
    for (auto x : add) gens.push_back(x);
    (void)grew;
  }
}

SubgroupRef op_residual(const FiniteGroup& G, unsigned p) {
  G.require_enumerated("op_residual");
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    auto it = G.cache_->op_res.find(p);
    if (it != G.cache_->op_res.end()) return it->second;
  }
  // generated by all p'-elements = normal closure of one rep per p'-class
  std::vector<std::uint32_t> seed;
  for (const auto& c : G.classes())
    if (c.element_order % p != 0 && c.rep != 0) seed.push_back(c.rep);
  SubgroupRef r = seed.empty() ? G.trivial_subgroup() : normal_closure(G, seed);
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  return G.cache_->op_res.emplace(p, std::move(r)).first->second;
}

SubgroupRef residual(const FiniteGroup& G, ResidualKind kind) {
  G.require_enumerated("residual");
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    if (kind == ResidualKind::Solvable && G.cache_->sol) return *G.cache_->sol;
    if (kind == ResidualKind::Nilpotent && G.cache_->nil) return *G.cache_->nil;
  }
  SubgroupRef r;
  if (kind == ResidualKind::Solvable) {
    SubgroupRef cur = G.whole();
    while (true) {
      SubgroupRef next = derived_subgroup(G, cur);
      if (next.order() == cur.order()) break;
      cur = std::move(next);
    }
    r = std::move(cur);
  } else {
    // G^{nil} = intersection of O^p(G) over p | |G|
    std::optional<SubgroupRef> acc;
    for (unsigned p : G.prime_divisors()) {
      SubgroupRef op = op_residual(G, p);
      acc = acc ? subgroup_intersection(*acc, op) : op;
    }
    r = acc ? *acc : G.trivial_subgroup();
  }
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  if (kind == ResidualKind::Solvable) {
    G.cache_->sol = std::move(r);
    return *G.cache_->sol;
  }
  G.cache_->nil = std::move(r);
  return *G.cache_->nil;
}

SubgroupRef normalizer(const FiniteGroup& G, const SubgroupRef& H) {
  std::vector<std::uint32_t> elems;
  for (std::uint32_t g = 0; g < G.size32(); ++g) {
    bool ok = true;
    for (auto h : H.generators())
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  auto gens = greedy_generators(G, elems);
  return SubgroupRef(&G, std::move(elems), std::move(gens));
}

std::uint64_t centralizer_order(const FiniteGroup& G) {
  std::uint64_t z = 0;
  for (std::uint32_t i = 0; i < G.size32(); ++i) {
    bool central = true;
    for (auto g : G.generator_indices())
      if (G.mult(i, g) != G.mult(g, i)) {
        central = false;
        break;
      }
    if (central) ++z;
  }
  return z;
}

SubgroupRef sylow(const FiniteGroup& G, unsigned p) {
  G.require_enumerated("sylow");
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    auto it = G.cache_->sylows.find(p);
    if (it != G.cache_->sylows.end()) return it->second;
  }
  std::uint64_t ppart = 1;
  {
    std::uint64_t n = G.order();
    while (n % p == 0) {
      ppart *= p;
      n /= p;
    }
  }
  SubgroupRef P = G.trivial_subgroup();
  while (P.order() < ppart) {
    // extend through the normalizer: some p-element y in N_G(P) \ P has y^p in P
    SubgroupRef N = normalizer(G, P);
    bool extended = false;
    for (auto y : N.elements()) {
      if (P.contains(y)) continue;
      std::uint64_t o = G.element_order(y);
      std::uint64_t q = o;
      while (q % p == 0) q /= p;
      if (q != 1) continue;  // want p-elements only
      std::vector<std::uint32_t> seed = P.generators();
      seed.push_back(y);
      auto ext = subgroup(G, seed);
      if (is_prime_power_order(ext.order()) && ext.order() % p == 0) {
        P = std::move(ext);
        extended = true;
        break;
      }
    }
    if (!extended)
      throw NumericalFailure("sylow extension stalled in " + G.name());
  }
  if (P.order() != ppart) throw NumericalFailure("sylow order check failed in " + G.name());
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  return G.cache_->sylows.emplace(p, std::move(P)).first->second;
}

SubgroupRef fitting(const FiniteGroup& G) {
  G.require_enumerated("fitting");
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    if (G.cache_->fit) return *G.cache_->fit;
  }
  const auto& ns = normal_subgroups(G);
  std::vector<const SubgroupRef*> nilp;
  for (const auto& n : ns)
    if (is_nilpotent(n)) nilp.push_back(&n);
  const SubgroupRef* best = nilp.front();
  for (auto* n : nilp)
    if (n->order() > best->order()) best = n;
  for (auto* n : nilp) {
    if (n != best && n->order() == best->order() && !n->same_elements(*best))
      throw NumericalFailure("fitting subgroup not unique in " + G.name());
    if (!std::includes(best->elements().begin(), best->elements().end(),
                       n->elements().begin(), n->elements().end()))
      throw NumericalFailure("fitting subgroup misses a nilpotent normal subgroup in " + G.name());
  }
  SubgroupRef r = *best;
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  G.cache_->fit = std::move(r);
  return *G.cache_->fit;
}

SubgroupRef fitting2(const FiniteGroup& G) {
  SubgroupRef F = fitting(G);
  if (F.is_whole_group()) return F;
  auto Q = quotient(G, F);
  SubgroupRef FQ = fitting(*Q->quot);
  // pre-image of F(G/F(G))
  std::vector<std::uint32_t> elems;
  for (std::uint32_t i = 0; i < G.size32(); ++i) {
    std::uint32_t q = Q->coset_to_qelem[Q->coset_of[i]];
    if (FQ.contains(q)) elems.push_back(i);
  }
  return subgroup_from_elements(G, std::move(elems));
}

QuotientPtr quotient(const FiniteGroup& G, const SubgroupRef& N) {
  G.require_enumerated("quotient");
  if (!N.is_normal_in_parent())
    throw NotNormal("quotient: subgroup is not normal in " + G.name());
  std::uint64_t key_hash = 1469598103934665603ull;
  for (auto e : N.elements()) {
    key_hash ^= e;
    key_hash *= 1099511628211ull;
  }
  auto key = std::make_pair(N.order(), key_hash);
  {
    std::lock_guard<std::mutex> lk(G.cache_->mu);
    auto it = G.cache_->quotients.find(key);
    if (it != G.cache_->quotients.end() && it->second->kernel_elems == N.elements())
      return it->second;
  }
  auto Q = std::make_shared<QuotientGroup>();
  Q->base = &G;
  Q->kernel_elems = N.elements();

  if (N.order() == 1) {
    Q->quot = G.shared_from_this();
    Q->coset_of.resize(G.size32());
    std::iota(Q->coset_of.begin(), Q->coset_of.end(), 0u);
    Q->coset_rep = Q->coset_of;
    Q->coset_to_qelem = Q->coset_of;
    Q->qelem_to_coset = Q->coset_of;
  } else if (N.order() == G.order()) {
    Q->quot = FiniteGroup::generate(G.name() + "/" + G.name(), {Permutation::identity(1)});
    Q->coset_of.assign(G.size32(), 0);
    Q->coset_rep = {0};
    Q->coset_to_qelem = {0};
    Q->qelem_to_coset = {0};
  } else {
    const std::uint32_t n = G.size32();
    const std::uint32_t ncosets = static_cast<std::uint32_t>(G.order() / N.order());
    Q->coset_of.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> coset_rep;
    coset_rep.reserve(ncosets);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (Q->coset_of[i] != UINT32_MAX) continue;
      std::uint32_t c = static_cast<std::uint32_t>(coset_rep.size());
      coset_rep.push_back(i);
      for (auto x : N.elements()) Q->coset_of[G.mult(x, i)] = c;
    }
    // generator images on cosets
    std::vector<Permutation> qgens;
    for (auto g : G.generator_indices()) {
      std::vector<Point> img(ncosets);
      for (std::uint32_t c = 0; c < ncosets; ++c)
        img[c] = static_cast<Point>(Q->coset_of[G.mult(coset_rep[c], g)]);
      qgens.push_back(Permutation(std::move(img)));
    }
    Q->coset_rep = coset_rep;
    Q->quot = FiniteGroup::generate(G.name() + "/N" + std::to_string(N.order()), qgens);
    if (Q->quot->order() != ncosets)
      throw NumericalFailure("quotient order mismatch for " + G.name());
    // coset <-> quotient element correspondence via induced coset permutation
    Q->coset_to_qelem.resize(ncosets);
    Q->qelem_to_coset.assign(ncosets, 0);
    for (std::uint32_t c = 0; c < ncosets; ++c) {
      std::vector<Point> img(ncosets);
      for (std::uint32_t d = 0; d < ncosets; ++d)
        img[d] = static_cast<Point>(Q->coset_of[G.mult(coset_rep[d], coset_rep[c])]);
      std::uint32_t q = Q->quot->index_of(Permutation(std::move(img)));
      Q->coset_to_qelem[c] = q;
      Q->qelem_to_coset[q] = c;
    }
    // homomorphism property on generator pairs
    for (auto g1 : G.generator_indices())
      for (auto g2 : G.generator_indices()) {
        std::uint32_t lhs = Q->coset_of[G.mult(g1, g2)];
        std::uint32_t rhs = Q->qelem_to_coset[Q->quot->mult(Q->coset_to_qelem[Q->coset_of[g1]],
                                                            Q->coset_to_qelem[Q->coset_of[g2]])];
        if (lhs != rhs) throw NumericalFailure("quotient projection is not a homomorphism");
      }
  }
  std::lock_guard<std::mutex> lk(G.cache_->mu);
  auto [it, inserted] = G.cache_->quotients.emplace(key, Q);
  return it->second;
}

GroupPtr regenerate(const SubgroupRef& H, const std::string& name) {
  const FiniteGroup& G = H.parent();
  if (H.is_whole_group()) return G.shared_from_this();
  std::vector<Permutation> gens;
  for (auto g : H.generators()) gens.push_back(G.element(g));
  if (gens.empty()) gens.push_back(Permutation::identity(G.degree()));
  auto grp = FiniteGroup::generate(name, gens);
  if (grp->order() != H.order())
    throw NumericalFailure("regenerated subgroup order mismatch");
  return grp;
}

SubgroupRef quotient_image(const QuotientGroup& Q, const SubgroupRef& H) {
  std::set<std::uint32_t> img;
  for (auto h : H.elements()) img.insert(Q.coset_to_qelem[Q.coset_of[h]]);
  return subgroup_from_elements(*Q.quot, std::vector<std::uint32_t>(img.begin(), img.end()));
}

// ---------------- structure predicates ----------------

bool is_cyclic(const SubgroupRef& H) {
  const FiniteGroup& G = H.parent();
  for (auto e : H.elements())
    if (G.element_order(e) == H.order()) return true;
  return false;
}

bool is_abelian(const SubgroupRef& H) {
  const FiniteGroup& G = H.parent();
  const auto& gens = H.generators();
  for (auto a : gens)
    for (auto b : gens)
      if (G.mult(a, b) != G.mult(b, a)) return false;
  return true;
}

bool is_p_group(const SubgroupRef& H, unsigned p) {
  std::uint64_t n = H.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_elementary_abelian(const SubgroupRef& H, unsigned p) {
  if (!is_p_group(H, p) || !is_abelian(H)) return false;
  const FiniteGroup& G = H.parent();
  for (auto e : H.elements())
    if (e != 0 && G.element_order(e) != p) return false;
  return true;
}

namespace {

// Sylow subgroup of H computed inside H (normalizer taken within H).
SubgroupRef sylow_in(const SubgroupRef& H, unsigned p) {
  const FiniteGroup& G = H.parent();
  std::uint64_t ppart = 1;
  {
    std::uint64_t n = H.order();
    while (n % p == 0) {
      ppart *= p;
      n /= p;
    }
  }
  SubgroupRef P = SubgroupRef(&G, {0u}, {});
  while (P.order() < ppart) {
    bool extended = false;
    for (auto y : H.elements()) {
      if (P.contains(y)) continue;
      std::uint64_t o = G.element_order(y);
      std::uint64_t q = o;
      while (q % p == 0) q /= p;
      if (q != 1) continue;
      bool normalizes = true;
      for (auto h : P.generators())
        if (!P.contains(G.conj(h, y))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<std::uint32_t> seed = P.generators();
      seed.push_back(y);
      auto ext = subgroup(G, seed);
      if (is_prime_power_order(ext.order())) {
        P = std::move(ext);
        extended = true;
        break;
      }
    }
    if (!extended) throw NumericalFailure("sylow_in stalled");
  }
  return P;
}

}  // namespace

bool is_nilpotent(const SubgroupRef& H) {
  if (H.order() == 1) return true;
  if (is_abelian(H)) return true;
  const FiniteGroup& G = H.parent();
  for (unsigned p : prime_divisors_of(H.order())) {
    SubgroupRef P = sylow_in(H, p);
    for (auto g : H.generators())
      for (auto h : P.generators())
        if (!P.contains(G.conj(h, g))) return false;
  }
  return true;
}

bool is_solvable(const SubgroupRef& H) {
  const FiniteGroup& G = H.parent();
  SubgroupRef cur = H;
  while (cur.order() > 1) {
    SubgroupRef next = derived_subgroup(G, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_perfect(const SubgroupRef& H) {
  return derived_subgroup(H.parent(), H).order() == H.order();
}

unsigned derived_length(const FiniteGroup& G) {
  SubgroupRef cur = G.whole();
  unsigned len = 0;
  while (cur.order() > 1) {
    SubgroupRef next = derived_subgroup(G, cur);
    if (next.order() == cur.order()) return len;  // stops at perfect core
    cur = std::move(next);
    ++len;
  }
  return len;
}

const Fingerprint& FiniteGroup::fingerprint() const {
  require_enumerated("fingerprint");
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    if (cache_->fp) return *cache_->fp;
  }
  Fingerprint fp;
  fp.order = order_;
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& c : classes_) hist[c.element_order] += c.members.size();
  fp.order_histogram.assign(hist.begin(), hist.end());
  for (const auto& c : classes_) fp.class_sizes.push_back(c.members.size());
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  fp.center_order = centralizer_order(*this);
  fp.derived_length = derived_length(*this);
  std::lock_guard<std::mutex> lk(cache_->mu);
  if (!cache_->fp) cache_->fp = std::move(fp);
  return *cache_->fp;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "|G|=" << order << " orders{";
  for (std::size_t i = 0; i < order_histogram.size(); ++i) {
    if (i) os << ",";
    os << order_histogram[i].first << ":" << order_histogram[i].second;
  }
  os << "} classes=" << class_sizes.size() << " |Z|=" << center_order
     << " dl=" << derived_length;
  return os.str();
}

}  // namespace ginv
