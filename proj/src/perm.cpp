#include "lascar/perm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace lascar {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<uint16_t>(i);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<uint16_t>(i);
  return r;
}

bool is_permutation(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (uint16_t v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

PermGroup PermGroup::trivial(int degree) {
  return from_elements(degree, {perm_identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    Perm t = perm_identity(degree);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    Perm c(degree);
    for (int i = 0; i < degree; ++i) c[i] = static_cast<uint16_t>((i + 1) % degree);
    gens.push_back(c);
  }
  return closure(degree, gens);
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems) {
  PermGroup g;
  g.degree_ = degree;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  g.elems_ = std::move(elems);
  return g;
}

PermGroup PermGroup::closure(int degree, const std::vector<Perm>& gens, size_t cap) {
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  seen.insert(perm_identity(degree));
  frontier.push_back(perm_identity(degree));
  std::vector<Perm> use = gens;
  for (const Perm& g : gens) use.push_back(perm_inverse(g));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : use) {
        Perm y = perm_compose(g, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw std::length_error("perm closure above cap");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup out;
  out.degree_ = degree;
  out.elems_.assign(seen.begin(), seen.end());
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const Perm& p : elems_)
    if (!other.contains(p)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const Perm& g : other.elems_) {
    Perm gi = perm_inverse(g);
    for (const Perm& h : elems_) {
      if (!contains(perm_compose(g, perm_compose(h, gi)))) return false;
    }
  }
  return true;
}

std::vector<Perm> PermGroup::minimal_generators() const {
  std::vector<Perm> gens;
  PermGroup current = trivial(degree_);
  for (const Perm& p : elems_) {
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = closure(degree_, gens, elems_.size());
    if (current.order() == order()) break;
  }
  return gens;
}

std::vector<PermGroup> PermGroup::all_subgroups(size_t max_order) const {
  if (order() > max_order) throw std::length_error("all_subgroups: order above bound");
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  PermGroup triv = trivial(degree_);
  seen.insert(triv.elements());
  out.push_back(triv);
  for (size_t i = 0; i < out.size(); ++i) {
    // Extend by one element and close; every subgroup is reachable this way.
    const PermGroup current = out[i];
    for (const Perm& g : elems_) {
      if (current.contains(g)) continue;
      std::vector<Perm> gens = current.minimal_generators();
      gens.push_back(g);
      PermGroup bigger = closure(degree_, gens, order());
      if (seen.insert(bigger.elements()).second) out.push_back(std::move(bigger));
    }
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

GroupTable GroupTable::from_perm_group(const PermGroup& g) {
  GroupTable t;
  t.n = static_cast<int>(g.order());
  // Identity must sit at index 0 for convention; reorder accordingly.
  std::vector<Perm> elems = g.elements();
  Perm id = perm_identity(g.degree());
  auto it = std::find(elems.begin(), elems.end(), id);
  assert(it != elems.end());
  std::iter_swap(elems.begin(), it);
  std::map<Perm, int> index;
  for (int i = 0; i < t.n; ++i) index[elems[i]] = i;
  t.mul.resize(static_cast<size_t>(t.n) * t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      t.mul[i * t.n + j] = index.at(perm_compose(elems[i], elems[j]));
  return t;
}

GroupTable quotient_table(const PermGroup& g, const PermGroup& n) {
  assert(n.is_normal_in(g));
  // Cosets keyed by their minimal element.
  std::map<Perm, int> coset_of;
  std::vector<Perm> reps;
  for (const Perm& x : g.elements()) {
    if (coset_of.count(x)) continue;
    std::vector<Perm> coset;
    for (const Perm& h : n.elements()) coset.push_back(perm_compose(x, h));
    Perm key = *std::min_element(coset.begin(), coset.end());
    int idx = static_cast<int>(reps.size());
    reps.push_back(key);
    for (const Perm& y : coset) coset_of[y] = idx;
  }
  // Identity coset first.
  int id_idx = coset_of.at(perm_identity(g.degree()));
  if (id_idx != 0) {
    std::swap(reps[0], reps[id_idx]);
    for (auto& kv : coset_of) {
      if (kv.second == 0)
        kv.second = id_idx;
      else if (kv.second == id_idx)
        kv.second = 0;
    }
  }
  GroupTable t;
  t.n = static_cast<int>(reps.size());
  t.mul.resize(static_cast<size_t>(t.n) * t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      t.mul[i * t.n + j] = coset_of.at(perm_compose(reps[i], reps[j]));
  return t;
}

namespace {

std::vector<int> element_orders(const GroupTable& t) {
  std::vector<int> ord(t.n);
  for (int i = 0; i < t.n; ++i) {
    int x = i, o = 1;
    while (x != 0) {
      x = t.at(x, i);
      ++o;
    }
    ord[i] = o;
  }
  return ord;
}

bool extend_iso(const GroupTable& a, const GroupTable& b, std::vector<int>& map,
                std::vector<bool>& used, int next) {
  if (next == a.n) return true;
  if (map[next] >= 0) return extend_iso(a, b, map, used, next + 1);
  std::vector<int> ord_a = element_orders(a);
  std::vector<int> ord_b = element_orders(b);
  for (int img = 0; img < b.n; ++img) {
    if (used[img] || ord_a[next] != ord_b[img]) continue;
    // tentatively map and propagate products with already-mapped elements
    std::vector<std::pair<int, int>> assigned;
    bool ok = true;
    std::vector<std::pair<int, int>> queue{{next, img}};
    auto set_map = [&](int x, int y) {
      if (map[x] >= 0) return map[x] == y;
      if (used[y]) return false;
      map[x] = y;
      used[y] = true;
      assigned.push_back({x, y});
      queue.push_back({x, y});
      return true;
    };
    if (!set_map(next, img)) continue;
    for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
      for (int x = 0; x < a.n && ok; ++x) {
        if (map[x] < 0) continue;
        int l = a.at(queue[qi].first, x), lb = b.at(queue[qi].second, map[x]);
        if (!set_map(l, lb)) ok = false;
        if (!ok) break;
        int r = a.at(x, queue[qi].first), rb = b.at(map[x], queue[qi].second);
        if (!set_map(r, rb)) ok = false;
      }
    }
    if (ok && extend_iso(a, b, map, used, next + 1)) return true;
    for (auto& [x, y] : assigned) {
      map[x] = -1;
      used[y] = false;
    }
  }
  return false;
}

}  // namespace

bool tables_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.n != b.n) return false;
  std::vector<int> oa = element_orders(a), ob = element_orders(b);
  std::vector<int> sa = oa, sb = ob;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  map[0] = 0;
  used[0] = true;
  return extend_iso(a, b, map, used, 0);
}

}  // namespace lascar
