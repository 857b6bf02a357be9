#include "mackey/gset.hpp"

#include <algorithm>
#include <stdexcept>

namespace mackey {

GSet GSet::from_action(const GroupCtx& ctx, std::vector<std::vector<int>> act,
                       bool validate) {
  const int n = ctx.order();
  if (static_cast<int>(act.size()) != n)
    throw std::invalid_argument("action table must have one row per group element");
  const int sz = act.empty() ? 0 : static_cast<int>(act[0].size());
  for (const auto& row : act)
    if (static_cast<int>(row.size()) != sz)
      throw std::invalid_argument("ragged action table");
  if (validate) {
    for (int x = 0; x < sz; ++x)
      if (act[0][x] != x) throw std::invalid_argument("identity must act trivially");
    for (int g = 0; g < n; ++g)
      for (int x = 0; x < sz; ++x) {
        if (act[g][x] < 0 || act[g][x] >= sz)
          throw std::invalid_argument("action image out of range");
        for (int h = 0; h < n; ++h)
          if (act[ctx.group().mul(g, h)][x] != act[g][act[h][x]])
            throw std::invalid_argument("table is not a group action");
      }
  }

  auto d = std::make_shared<Data>();
  d->ctx = &ctx;
  d->size = sz;
  d->act = std::move(act);
  d->orbit_idx.assign(sz, -1);
  d->transp.assign(sz, 0);
  for (int p = 0; p < sz; ++p) {
    if (d->orbit_idx[p] >= 0) continue;
    Orbit o;
    o.base = p;
    for (int g = 0; g < n; ++g) {
      int q = d->act[g][p];
      if (d->orbit_idx[q] < 0) {
        d->orbit_idx[q] = static_cast<int>(d->orbits.size());
        d->transp[q] = g;  // ascending g scan: least transporter
        o.points.push_back(q);
      }
    }
    std::sort(o.points.begin(), o.points.end());
    std::vector<Elt> stab;
    for (int g = 0; g < n; ++g)
      if (d->act[g][p] == p) stab.push_back(g);
    o.stabilizer = Subgroup{std::move(stab), -1};
    o.stabilizer.class_id = ctx.class_of(o.stabilizer.elements);
    o.conj_to_rep = ctx.conjugator_to_rep(o.stabilizer.elements);
    d->orbits.push_back(std::move(o));
  }

  GSet s;
  s.d_ = std::move(d);
  return s;
}

GSet transitive_gset(const GroupCtx& ctx, const Subgroup& H) {
  const FiniteGroup& G = ctx.group();
  const int n = G.order();
  if (H.elements.empty() || !H.contains(0))
    throw std::invalid_argument("transitive_gset: not a subgroup");
  std::vector<int> least(n);  // least member of the coset of each element
  std::vector<char> seen(n, 0);
  std::vector<int> coset_least;
  for (Elt g = 0; g < n; ++g) {
    if (seen[g]) continue;
    coset_least.push_back(g);  // ascending scan: g is the least member
    for (Elt h : H.elements) {
      Elt x = G.mul(g, h);
      seen[x] = 1;
      least[x] = g;
    }
  }
  std::vector<int> point_of(n);
  for (Elt g = 0; g < n; ++g)
    point_of[g] = static_cast<int>(
        std::lower_bound(coset_least.begin(), coset_least.end(), least[g]) -
        coset_least.begin());
  std::vector<std::vector<int>> act(n, std::vector<int>(coset_least.size()));
  for (Elt g = 0; g < n; ++g)
    for (size_t p = 0; p < coset_least.size(); ++p)
      act[g][p] = point_of[G.mul(g, coset_least[p])];
  return GSet::from_action(ctx, std::move(act), false);
}

GSet point_gset(const GroupCtx& ctx) {
  return GSet::from_action(ctx, std::vector<std::vector<int>>(ctx.order(), {0}), false);
}

GSet empty_gset(const GroupCtx& ctx) {
  return GSet::from_action(ctx, std::vector<std::vector<int>>(ctx.order()), false);
}

GSet conjugation_gset(const GroupCtx& ctx) {
  const FiniteGroup& G = ctx.group();
  const int n = G.order();
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (Elt g = 0; g < n; ++g)
    for (Elt x = 0; x < n; ++x) act[g][x] = G.conj(g, x);
  return GSet::from_action(ctx, std::move(act), false);
}

bool is_conjugation_gset(const GSet& X) {
  if (!X.valid()) return false;
  const FiniteGroup& G = X.ctx().group();
  if (X.size() != G.order()) return false;
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt x = 0; x < G.order(); ++x)
      if (X.act(g, x) != G.conj(g, x)) return false;
  return true;
}

GSet product_gset(const GSet& X, const GSet& Y) {
  if (&X.ctx() != &Y.ctx()) throw std::invalid_argument("product: mixed groups");
  const int n = X.ctx().order(), sx = X.size(), sy = Y.size();
  std::vector<std::vector<int>> act(n, std::vector<int>(sx * sy));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < sx; ++x)
      for (int y = 0; y < sy; ++y)
        act[g][x * sy + y] = X.act(g, x) * sy + Y.act(g, y);
  return GSet::from_action(X.ctx(), std::move(act), false);
}

GMap::GMap(GSet src, GSet tgt, std::vector<int> images)
    : src_(std::move(src)), tgt_(std::move(tgt)), images_(std::move(images)) {
  if (&src_.ctx() != &tgt_.ctx()) throw std::invalid_argument("GMap: mixed groups");
  if (static_cast<int>(images_.size()) != src_.size())
    throw std::invalid_argument("GMap: image list size mismatch");
  const int n = src_.ctx().order();
  for (int z = 0; z < src_.size(); ++z) {
    if (images_[z] < 0 || images_[z] >= tgt_.size())
      throw std::invalid_argument("GMap: image out of range");
    for (int g = 0; g < n; ++g)
      if (images_[src_.act(g, z)] != tgt_.act(g, images_[z]))
        throw std::invalid_argument("GMap: not equivariant");
  }
}

GMap identity_map(const GSet& X) {
  std::vector<int> im(X.size());
  for (int i = 0; i < X.size(); ++i) im[i] = i;
  return GMap(X, X, std::move(im));
}

GMap compose_maps(const GMap& g, const GMap& f) {
  if (f.tgt() != g.src()) throw std::invalid_argument("compose_maps: middle mismatch");
  std::vector<int> im(f.src().size());
  for (int z = 0; z < f.src().size(); ++z) im[z] = g(f(z));
  return GMap(f.src(), g.tgt(), std::move(im));
}

bool is_bijective(const GMap& f) {
  if (f.src().size() != f.tgt().size()) return false;
  std::vector<char> hit(f.tgt().size(), 0);
  for (int z = 0; z < f.src().size(); ++z) {
    if (hit[f(z)]) return false;
    hit[f(z)] = 1;
  }
  return true;
}

GMap inverse_map(const GMap& f) {
  if (!is_bijective(f)) throw std::invalid_argument("inverse_map: not bijective");
  std::vector<int> im(f.tgt().size());
  for (int z = 0; z < f.src().size(); ++z) im[f(z)] = z;
  return GMap(f.tgt(), f.src(), std::move(im));
}

std::vector<int> fixed_points(const GSet& X, const Subgroup& S) {
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x) {
    bool ok = true;
    for (Elt s : S.elements)
      if (X.act(s, x) != x) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<GMap> maps_between(const GSet& Z, const GSet& X) {
  if (&Z.ctx() != &X.ctx()) throw std::invalid_argument("maps_between: mixed groups");
  const auto& orbits = Z.orbits();
  std::vector<std::vector<int>> choices;  // stabilizer-fixed images per orbit
  for (const Orbit& o : orbits) {
    choices.push_back(fixed_points(X, o.stabilizer));
    if (choices.back().empty()) return {};
  }
  std::vector<GMap> out;
  std::vector<size_t> pick(orbits.size(), 0);
  for (;;) {
    std::vector<int> im(Z.size());
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
      int target = choices[oi][pick[oi]];
      for (int p : orbits[oi].points) im[p] = X.act(Z.transporter(p), target);
    }
    out.push_back(GMap(Z, X, std::move(im)));
    size_t d = orbits.size();
    while (d > 0 && ++pick[d - 1] == choices[d - 1].size()) pick[--d] = 0;
    if (d == 0) break;
  }
  return out;
}

UnionResult disjoint_union(const GSet& X, const GSet& Y) {
  if (&X.ctx() != &Y.ctx()) throw std::invalid_argument("disjoint_union: mixed groups");
  const int n = X.ctx().order(), sx = X.size(), sy = Y.size();
  std::vector<std::vector<int>> act(n, std::vector<int>(sx + sy));
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < sx; ++x) act[g][x] = X.act(g, x);
    for (int y = 0; y < sy; ++y) act[g][sx + y] = sx + Y.act(g, y);
  }
  GSet u = GSet::from_action(X.ctx(), std::move(act), false);
  std::vector<int> iml(sx), imr(sy);
  for (int x = 0; x < sx; ++x) iml[x] = x;
  for (int y = 0; y < sy; ++y) imr[y] = sx + y;
  return UnionResult{u, GMap(X, u, std::move(iml)), GMap(Y, u, std::move(imr))};
}

int PullbackResult::index_of(int x, int y) const {
  auto it = std::lower_bound(points.begin(), points.end(), std::make_pair(x, y));
  if (it == points.end() || *it != std::make_pair(x, y))
    throw std::invalid_argument("pullback: no such point");
  return static_cast<int>(it - points.begin());
}

PullbackResult pullback(const GMap& a, const GMap& b) {
  if (a.tgt() != b.tgt()) throw std::invalid_argument("pullback: targets differ");
  const GSet &X = a.src(), &Y = b.src();
  const int n = X.ctx().order();
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y)
      if (a(x) == b(y)) pts.emplace_back(x, y);
  auto index_of = [&pts](int x, int y) {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(),
                                             std::make_pair(x, y)) -
                            pts.begin());
  };
  std::vector<std::vector<int>> act(n, std::vector<int>(pts.size()));
  for (int g = 0; g < n; ++g)
    for (size_t i = 0; i < pts.size(); ++i)
      act[g][i] = index_of(X.act(g, pts[i].first), Y.act(g, pts[i].second));
  GSet P = GSet::from_action(X.ctx(), std::move(act), false);
  std::vector<int> imp(pts.size()), imq(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    imp[i] = pts[i].first;
    imq[i] = pts[i].second;
  }
  return PullbackResult{P, GMap(P, X, std::move(imp)), GMap(P, Y, std::move(imq)),
                        std::move(pts)};
}

GMap star(const GMap& u, const GMap& f) {
  if (u.src() != f.src()) throw std::invalid_argument("star: sources differ");
  if (!is_conjugation_gset(u.tgt()))
    throw std::invalid_argument("star: twist must land in the conjugation G-set");
  std::vector<int> im(f.src().size());
  for (int z = 0; z < f.src().size(); ++z) im[z] = f.tgt().act(u(z), f(z));
  return GMap(f.src(), f.tgt(), std::move(im));
}

GMap twist_product(const GMap& u, const GMap& v) {
  if (u.src() != v.src() || u.tgt() != v.tgt())
    throw std::invalid_argument("twist_product: shape mismatch");
  if (!is_conjugation_gset(u.tgt()))
    throw std::invalid_argument("twist_product: maps must land in the conjugation G-set");
  const FiniteGroup& G = u.src().ctx().group();
  std::vector<int> im(u.src().size());
  for (int z = 0; z < u.src().size(); ++z) im[z] = G.mul(u(z), v(z));
  return GMap(u.src(), u.tgt(), std::move(im));
}

GMap twist_inverse(const GMap& u) {
  if (!is_conjugation_gset(u.tgt()))
    throw std::invalid_argument("twist_inverse: map must land in the conjugation G-set");
  const FiniteGroup& G = u.src().ctx().group();
  std::vector<int> im(u.src().size());
  for (int z = 0; z < u.src().size(); ++z) im[z] = G.inv(u(z));
  return GMap(u.src(), u.tgt(), std::move(im));
}

OmegaCtx::OmegaCtx(const GroupCtx& ctx) {
  offsets.push_back(0);
  for (int c = 0; c < ctx.num_classes(); ++c) {
    components.push_back(transitive_gset(ctx, ctx.rep(c)));
    offsets.push_back(offsets.back() + components.back().size());
  }
  const int n = ctx.order(), total = offsets.back();
  std::vector<std::vector<int>> act(n, std::vector<int>(total));
  for (int g = 0; g < n; ++g)
    for (int c = 0; c < ctx.num_classes(); ++c)
      for (int p = 0; p < components[c].size(); ++p)
        act[g][offsets[c] + p] = offsets[c] + components[c].act(g, p);
  omega = GSet::from_action(ctx, std::move(act), false);
}

int OmegaCtx::component_of(int point) const {
  int c = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), point) -
                           offsets.begin()) -
          1;
  return c;
}

GSet omega_all_subgroups(const GroupCtx& ctx) {
  const int n = ctx.order();
  std::vector<GSet> comps;
  int total = 0;
  for (const Subgroup& H : ctx.subgroups()) {
    comps.push_back(transitive_gset(ctx, H));
    total += comps.back().size();
  }
  std::vector<std::vector<int>> act(n, std::vector<int>(total));
  int off = 0;
  for (const GSet& c : comps) {
    for (int g = 0; g < n; ++g)
      for (int p = 0; p < c.size(); ++p) act[g][off + p] = off + c.act(g, p);
    off += c.size();
  }
  return GSet::from_action(ctx, std::move(act), false);
}

}  // namespace mackey
