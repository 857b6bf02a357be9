#include "mackey/fused_cat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mackey {

bool fused_equal(const GMap& a, const GMap& b) {
  if (a.src() != b.src() || a.tgt() != b.tgt())
    throw std::invalid_argument("fused_equal: shape mismatch");
  const GSet& Z = a.src();
  for (const Orbit& o : Z.orbits()) {
    // u is equivariant iff its value at the base centralizes the stabilizer.
    Subgroup C = Z.ctx().centralizer(o.stabilizer);
    bool found = false;
    for (Elt c : C.elements)
      if (a.tgt().act(c, a(o.base)) == b(o.base)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool fused_equal_via_path_object(const GMap& a, const GMap& b) {
  if (a.src() != b.src() || a.tgt() != b.tgt())
    throw std::invalid_argument("fused_equal: shape mismatch");
  const GSet& Z = a.src();
  const GSet& Y = a.tgt();
  const GroupCtx& ctx = Z.ctx();
  const FiniteGroup& G = ctx.group();

  GSet gc = conjugation_gset(ctx);
  GSet path = product_gset(Y, gc);              // points (y, g) = y * |G| + g
  GSet yy = product_gset(Y, Y);
  std::vector<int> ev(path.size());             // (y, g) -> (y, g.y)
  for (int y = 0; y < Y.size(); ++y)
    for (Elt g = 0; g < G.order(); ++g)
      ev[y * G.order() + g] = y * Y.size() + Y.act(g, y);
  GMap evaluation(path, yy, std::move(ev));

  std::vector<int> pair_im(Z.size());
  for (int z = 0; z < Z.size(); ++z) pair_im[z] = a(z) * Y.size() + b(z);
  GMap ab(Z, yy, std::move(pair_im));

  // A lift through evaluation assigns each orbit base a stabilizer-fixed
  // point (a(z0), g) with g.a(z0) = b(z0); spread it by transporters and
  // check the factorization on the nose.
  std::vector<int> lift(Z.size(), -1);
  for (const Orbit& o : Z.orbits()) {
    int g_found = -1;
    for (Elt g = 0; g < G.order(); ++g) {
      if (Y.act(g, a(o.base)) != b(o.base)) continue;
      bool fixed = true;
      for (Elt s : o.stabilizer.elements)
        if (G.conj(s, g) != g) {
          fixed = false;
          break;
        }
      if (fixed) {
        g_found = g;
        break;
      }
    }
    if (g_found < 0) return false;
    int base_pt = a(o.base) * G.order() + g_found;
    for (int p : o.points) lift[p] = path.act(Z.transporter(p), base_pt);
  }
  GMap phi(Z, path, std::move(lift));
  return compose_maps(evaluation, phi) == ab;
}

SpanKey fuse_key(const GroupCtx& ctx, const SpanKey& k, const GSet& Y, const GSet& X) {
  const Subgroup& C = ctx.centralizer_of_rep(k.mid_class);
  SpanKey best = k;
  for (Elt c : C.elements) {
    SpanKey cand =
        canonical_key(ctx, k.mid_class, Y.act(c, k.tgt_point), k.src_point, Y, X);
    if (cand < best) best = cand;
  }
  return best;
}

SpanClass fuse_class(const SpanClass& s) {
  return SpanClass{fuse_key(s.src.ctx(), s.key, s.tgt, s.src), s.src, s.tgt};
}

BurnsideElement fuse_element(const BurnsideElement& e) {
  BurnsideElement out(e.src(), e.tgt());
  const GroupCtx& ctx = e.src().ctx();
  for (const auto& [k, c] : e.terms()) out.add(fuse_key(ctx, k, e.tgt(), e.src()), c);
  return out;
}

BurnsideElement fused_compose(const BurnsideElement& s2, const BurnsideElement& s1) {
  return fuse_element(compose(s2, s1));
}

IntMatrix twist_difference_generators(const GroupCtx& ctx, const GSet& X, const GSet& Y,
                                      const std::vector<SpanClass>& basis) {
  std::map<SpanKey, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i].key] = static_cast<int>(i);
  std::set<std::pair<int, int>> diffs;
  for (size_t i = 0; i < basis.size(); ++i) {
    const SpanKey& k = basis[i].key;
    const Subgroup& C = ctx.centralizer_of_rep(k.mid_class);
    for (Elt c : C.elements) {
      SpanKey twisted =
          canonical_key(ctx, k.mid_class, Y.act(c, k.tgt_point), k.src_point, Y, X);
      auto it = index.find(twisted);
      if (it == index.end())
        throw std::logic_error("twist left the basis; basis is not complete");
      if (it->second != static_cast<int>(i)) diffs.emplace(static_cast<int>(i), it->second);
    }
  }
  IntMatrix gens = IntMatrix::Zero(static_cast<Index>(basis.size()),
                                   static_cast<Index>(diffs.size()));
  Index col = 0;
  for (const auto& [i, j] : diffs) {
    gens(i, col) = 1;
    gens(j, col) = -1;
    ++col;
  }
  return gens;
}

IntVector coordinates(const BurnsideElement& e, const std::vector<SpanClass>& basis) {
  std::map<SpanKey, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i].key] = static_cast<int>(i);
  IntVector v = IntVector::Zero(static_cast<Index>(basis.size()));
  for (const auto& [k, c] : e.terms()) {
    auto it = index.find(k);
    if (it == index.end()) throw std::invalid_argument("coordinates: term outside basis");
    v(it->second) = static_cast<long>(c);
  }
  return v;
}

bool fused_equal_via_lattice(const GMap& a, const GMap& b) {
  if (a.src() != b.src() || a.tgt() != b.tgt())
    throw std::invalid_argument("fused_equal: shape mismatch");
  const GroupCtx& ctx = a.src().ctx();
  std::vector<SpanClass> basis = hom_basis(ctx, a.src(), a.tgt());
  IntMatrix gens = twist_difference_generators(ctx, a.src(), a.tgt(), basis);
  BurnsideElement diff = span_decompose(identity_map(a.src()), a);
  diff -= span_decompose(identity_map(b.src()), b);
  LatticeMembership lat(static_cast<Index>(basis.size()), gens);
  return lat.contains(coordinates(diff, basis));
}

FusedHom fused_hom(const GroupCtx& ctx, const GSet& X, const GSet& Y) {
  FusedHom out;
  out.unfused_basis = hom_basis(ctx, X, Y);
  std::map<SpanKey, int> unfused_index;
  for (size_t i = 0; i < out.unfused_basis.size(); ++i)
    unfused_index[out.unfused_basis[i].key] = static_cast<int>(i);

  std::set<SpanKey> fused_keys;
  std::vector<SpanKey> image(out.unfused_basis.size());
  for (size_t i = 0; i < out.unfused_basis.size(); ++i) {
    image[i] = fuse_key(ctx, out.unfused_basis[i].key, Y, X);
    fused_keys.insert(image[i]);
  }
  std::map<SpanKey, int> fused_index;
  for (const SpanKey& k : fused_keys) {
    fused_index[k] = static_cast<int>(out.basis.size());
    out.basis.push_back(SpanClass{k, X, Y});
  }
  out.fuse_map.resize(out.unfused_basis.size());
  for (size_t i = 0; i < out.unfused_basis.size(); ++i) {
    out.fuse_map[i] = fused_index.at(image[i]);
    if (image[i] != out.unfused_basis[i].key)
      out.collapsed_pairs.emplace_back(static_cast<int>(i), unfused_index.at(image[i]));
  }

  IntMatrix gens = twist_difference_generators(ctx, X, Y, out.unfused_basis);
  out.quotient =
      quotient_by_columns(static_cast<Index>(out.unfused_basis.size()), gens);
  if (!out.quotient.torsion.empty())
    throw std::logic_error("fused Hom quotient has torsion");
  if (out.quotient.free_rank != static_cast<Index>(out.basis.size()))
    throw std::logic_error("fused Hom rank disagrees with fused class count");
  return out;
}

PullbackResult weak_pullback(const GMap& a, const GMap& b) { return pullback(a, b); }

}  // namespace mackey
