#include "mackey/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mackey {

namespace {

using Perm = std::vector<int>;  // 0-indexed one-line notation

Perm compose(const Perm& a, const Perm& b) {  // (a after b)(i) = a[b[i]]
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_generators(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         std::string name, int order_cap) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw std::invalid_argument("generator length differs from degree");
    Perm p(degree);
    std::vector<char> hit(degree, 0);
    for (int i = 0; i < degree; ++i) {
      if (g[i] < 1 || g[i] > degree || hit[g[i] - 1])
        throw std::invalid_argument("generator is not a permutation");
      hit[g[i] - 1] = 1;
      p[i] = g[i] - 1;
    }
    gens.push_back(std::move(p));
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Elt> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = compose(elems[head], g);
      if (index.emplace(next, static_cast<Elt>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > order_cap)
          throw std::runtime_error("group order exceeds cap");
      }
    }
  }

  FiniteGroup G;
  G.order_ = static_cast<int>(elems.size());
  G.name_ = std::move(name);
  G.cayley_.assign(G.order_, std::vector<Elt>(G.order_));
  G.inverse_.assign(G.order_, 0);
  for (int a = 0; a < G.order_; ++a)
    for (int b = 0; b < G.order_; ++b) {
      Elt c = index.at(compose(elems[a], elems[b]));
      G.cayley_[a][b] = c;
      if (c == 0) G.inverse_[a] = b;
    }
  return G;
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  auto cycle_gen = [](int n) {  // (1 2 ... n)
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = (i + 1) % n + 1;
    return g;
  };
  if (name == "V4")
    return from_generators(4, {{2, 1, 4, 3}, {3, 4, 1, 2}}, name);
  if (name == "Q8")
    return from_generators(8, {{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}}, name);
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D' || name[0] == 'S' || name[0] == 'A')) {
    int n = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(name[i]))) { n = -1; break; }
      n = n * 10 + (name[i] - '0');
      if (n > kDefaultOrderCap) throw std::invalid_argument("builtin parameter too large");
    }
    if (n >= 1) {
      switch (name[0]) {
        case 'C':
          if (n == 1) return from_generators(1, {}, name);
          return from_generators(n, {cycle_gen(n)}, name);
        case 'D': {
          if (n == 1) return from_generators(2, {{2, 1}}, name);
          if (n == 2) return from_generators(4, {{2, 1, 4, 3}, {3, 4, 1, 2}}, name);
          std::vector<int> s(n);
          s[0] = 1;
          for (int i = 1; i < n; ++i) s[i] = n + 1 - i;
          return from_generators(n, {cycle_gen(n), s}, name);
        }
        case 'S': {
          if (n == 1) return from_generators(1, {}, name);
          std::vector<int> t(n);
          std::iota(t.begin(), t.end(), 1);
          std::swap(t[0], t[1]);
          return from_generators(n, {t, cycle_gen(n)}, name);
        }
        case 'A': {
          if (n <= 2) return from_generators(std::max(n, 1), {}, name);
          std::vector<int> c3(n);
          std::iota(c3.begin(), c3.end(), 1);
          c3[0] = 2; c3[1] = 3; c3[2] = 1;
          if (n == 3) return from_generators(3, {c3}, name);
          if (n % 2 == 1) return from_generators(n, {c3, cycle_gen(n)}, name);
          std::vector<int> c(n);  // (2 3 ... n)
          c[0] = 1;
          for (int i = 1; i < n; ++i) c[i] = i + 2 <= n ? i + 2 : 2;
          return from_generators(n, {c3, c}, name);
        }
      }
    }
  }
  throw std::invalid_argument("unknown builtin group: " + name);
}

bool check_group_axioms(const FiniteGroup& G) {
  const int n = G.order();
  for (int a = 0; a < n; ++a)
    if (G.mul(0, a) != a || G.mul(a, 0) != a) return false;
  for (int a = 0; a < n; ++a)
    if (G.mul(a, G.inv(a)) != 0 || G.mul(G.inv(a), a) != 0) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
  return true;
}

bool Subgroup::contains(Elt g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<Elt>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elt> elems;
  std::deque<Elt> work;
  auto add = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
      work.push_back(x);
    }
  };
  add(0);
  for (Elt g : gens) add(g);
  while (!work.empty()) {
    Elt x = work.front();
    work.pop_front();
    for (size_t i = 0; i < elems.size(); ++i) {
      add(G.mul(x, elems[i]));
      add(G.mul(elems[i], x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), -1};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<Elt>> seen;
  std::deque<std::vector<Elt>> work;
  Subgroup triv = subgroup_closure(G, {});
  seen.insert(triv.elements);
  work.push_back(triv.elements);
  while (!work.empty()) {
    std::vector<Elt> H = work.front();
    work.pop_front();
    for (Elt g = 0; g < G.order(); ++g) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::vector<Elt> gens = H;
      gens.push_back(g);
      Subgroup K = subgroup_closure(G, gens);
      if (seen.insert(K.elements).second) work.push_back(K.elements);
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.push_back(Subgroup{e, -1});
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, Elt g, const Subgroup& S) {
  std::vector<Elt> e;
  e.reserve(S.elements.size());
  for (Elt s : S.elements) e.push_back(G.conj(g, s));
  std::sort(e.begin(), e.end());
  return Subgroup{std::move(e), -1};
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& G) {
  std::vector<Subgroup> all = all_subgroups(G);
  std::set<std::vector<Elt>> assigned;
  std::vector<SubgroupClass> classes;
  for (const Subgroup& S : all) {
    if (assigned.count(S.elements)) continue;
    std::set<std::vector<Elt>> orbit;
    for (Elt g = 0; g < G.order(); ++g)
      orbit.insert(conjugate_subgroup(G, g, S).elements);
    SubgroupClass cls;
    for (const auto& e : orbit) {
      assigned.insert(e);
      cls.members.push_back(Subgroup{e, -1});
    }
    cls.rep = cls.members.front();  // set-order = lexicographic, same size
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) { return a.rep < b.rep; });
  for (size_t c = 0; c < classes.size(); ++c) {
    classes[c].rep.class_id = static_cast<int>(c);
    for (Subgroup& m : classes[c].members) m.class_id = static_cast<int>(c);
  }
  return classes;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S) {
  std::vector<Elt> e;
  for (Elt g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elt s : S.elements)
      if (G.mul(g, s) != G.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) e.push_back(g);
  }
  return Subgroup{std::move(e), -1};
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
  std::vector<Elt> e;
  for (Elt g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(G, g, S) == S) e.push_back(g);
  return Subgroup{std::move(e), -1};
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<Elt> e;
  std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(),
                        B.elements.end(), std::back_inserter(e));
  return Subgroup{std::move(e), -1};
}

std::vector<Elt> double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& L) {
  std::vector<char> visited(G.order(), 0);
  std::vector<Elt> reps;
  for (Elt g = 0; g < G.order(); ++g) {
    if (visited[g]) continue;
    reps.push_back(g);
    for (Elt h : H.elements)
      for (Elt l : L.elements) visited[G.mul(G.mul(h, g), l)] = 1;
  }
  return reps;
}

GroupCtx::GroupCtx(FiniteGroup g) : G_(std::move(g)) {
  classes_ = subgroup_classes(G_);
  for (const auto& cls : classes_)
    for (const auto& m : cls.members) all_.push_back(m);
  std::sort(all_.begin(), all_.end());
  for (size_t c = 0; c < classes_.size(); ++c) {
    for (const Subgroup& m : classes_[c].members) {
      Elt a = -1;
      for (Elt cand = 0; cand < G_.order(); ++cand)
        if (conjugate_subgroup(G_, cand, m) == classes_[c].rep) {
          a = cand;
          break;
        }
      lookup_[m.elements] = {static_cast<int>(c), a};
    }
    centralizers_.push_back(mackey::centralizer(G_, classes_[c].rep));
    normalizers_.push_back(mackey::normalizer(G_, classes_[c].rep));
  }
}

int GroupCtx::class_of(const std::vector<Elt>& sorted_elements) const {
  auto it = lookup_.find(sorted_elements);
  if (it == lookup_.end()) throw std::invalid_argument("not a subgroup of this group");
  return it->second.first;
}

Elt GroupCtx::conjugator_to_rep(const std::vector<Elt>& sorted_elements) const {
  auto it = lookup_.find(sorted_elements);
  if (it == lookup_.end()) throw std::invalid_argument("not a subgroup of this group");
  return it->second.second;
}

}  // namespace mackey
