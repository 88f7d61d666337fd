#include "subgroup.hpp"

#include <algorithm>

#include "errors.hpp"

namespace artinx {

namespace {

// Right-multiplication closure of `start` under `gens`.
ElementSet close_under(const GroupTable& g, ElementSet start, const std::vector<Element>& gens) {
  std::vector<Element> queue = start.members();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!start.contains(y)) {
        start.insert(y);
        queue.push_back(y);
      }
    }
  }
  return start;
}

std::vector<Element> greedy_generators(const GroupTable& g, const ElementSet& members) {
  std::vector<Element> elems = members.members();
  std::stable_sort(elems.begin(), elems.end(), [&](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Element> gens;
  ElementSet span = ElementSet::singleton(GroupTable::identity());
  const std::size_t target = members.size();
  for (Element e : elems) {
    if (span.size() == target) break;
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = close_under(g, span, gens);
  }
  return gens;
}

}  // namespace

Subgroup make_subgroup(const GroupTable& g, const ElementSet& members,
                       std::vector<Element> generators) {
  Subgroup s;
  s.members = members;
  s.order = members.size();
  s.is_cyclic = false;
  members.for_each([&](Element e) {
    if (g.element_order(e) == s.order) s.is_cyclic = true;
  });
  s.generators = generators.empty() && s.order > 1 ? greedy_generators(g, members)
                                                  : std::move(generators);
  return s;
}

Subgroup generated_subgroup(const GroupTable& g, const std::vector<Element>& seed) {
  std::vector<Element> gens;
  for (Element e : seed) {
    if (e >= g.order()) throw PreconditionError("element index out of range");
    if (e != GroupTable::identity()) gens.push_back(e);
  }
  const ElementSet members = close_under(g, ElementSet::singleton(GroupTable::identity()), gens);
  return make_subgroup(g, members);
}

Subgroup join_element(const GroupTable& g, const Subgroup& base, Element extra) {
  if (base.contains(extra)) return base;
  std::vector<Element> gens = base.generators;
  gens.push_back(extra);
  const ElementSet members = close_under(g, base.members, gens);
  Subgroup s = make_subgroup(g, members, gens);
  return s;
}

Subgroup whole_group(const GroupTable& g) {
  return make_subgroup(g, g.all(), g.generators());
}

Subgroup trivial_subgroup() {
  Subgroup s;
  s.members = ElementSet::singleton(GroupTable::identity());
  return s;
}

Subgroup checked_subgroup(const GroupTable& g, const ElementSet& members) {
  if (!members.contains(GroupTable::identity()))
    throw PreconditionError("subset does not contain the identity");
  bool closed = true;
  members.for_each([&](Element a) {
    if (a >= g.order()) closed = false;
    else
      members.for_each([&](Element b) {
        if (!members.contains(g.mul(a, b))) closed = false;
      });
  });
  if (!closed) throw PreconditionError("subset is not closed under multiplication");
  return make_subgroup(g, members);
}

Subgroup centralizer(const GroupTable& g, const Subgroup& u) {
  const std::vector<Element> test = u.generators.empty() && u.order > 1 ? u.members.members()
                                                                          : u.generators;
  ElementSet out;
  for (Element w = 0; w < g.order(); ++w) {
    bool commutes = true;
    for (Element x : test) {
      if (g.mul(w, x) != g.mul(x, w)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.insert(w);
  }
  return make_subgroup(g, out);
}

Subgroup center(const GroupTable& g) { return centralizer(g, whole_group(g)); }

Subgroup commutator_closure(const GroupTable& g, const Subgroup& s, const Subgroup& t) {
  std::vector<Element> seed;
  ElementSet seen;
  s.members.for_each([&](Element a) {
    t.members.for_each([&](Element b) {
      const Element c = g.commutator(a, b);
      if (!seen.contains(c)) {
        seen.insert(c);
        seed.push_back(c);
      }
    });
  });
  return generated_subgroup(g, seed);
}

ElementSet conjugate_set(const GroupTable& g, Element x, const ElementSet& u) {
  ElementSet out;
  const Element xi = g.inv(x);
  u.for_each([&](Element e) { out.insert(g.mul(g.mul(x, e), xi)); });
  return out;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& u) {
  ElementSet out;
  const std::vector<Element> test = u.generators;
  for (Element x = 0; x < g.order(); ++x) {
    bool keeps = true;
    for (Element s : test) {
      if (!u.contains(g.conj(x, s))) {
        keeps = false;
        break;
      }
    }
    if (keeps) out.insert(x);
  }
  return make_subgroup(g, out);
}

bool is_normal_in(const GroupTable& g, const Subgroup& u, const Subgroup& v) {
  if (!u.is_subgroup_of(v)) throw PreconditionError("U is not contained in V");
  const std::vector<Element> vgens = v.generators.empty() ? v.members.members() : v.generators;
  const std::vector<Element> ugens = u.generators.empty() ? u.members.members() : u.generators;
  // conjugation by a generating set of V preserving U suffices (finite group)
  for (Element x : vgens)
    for (Element s : ugens)
      if (!u.contains(g.conj(x, s))) return false;
  return true;
}

std::vector<Element> cosets(const GroupTable& g, const Subgroup& v, const Subgroup& u) {
  if (!u.is_subgroup_of(v)) throw PreconditionError("U is not contained in V");
  std::vector<Element> reps;
  ElementSet covered;
  const std::vector<Element> umem = u.members.members();
  v.members.for_each([&](Element x) {
    if (covered.contains(x)) return;
    reps.push_back(x);
    for (Element y : umem) covered.insert(g.mul(x, y));
  });
  return reps;
}

ElementSet join_normal(const GroupTable& g, const ElementSet& u, Element v) {
  ElementSet out = u;
  const std::vector<Element> umem = u.members();
  Element x = v;
  while (!u.contains(x)) {
    for (Element e : umem) out.insert(g.mul(x, e));
    x = g.mul(x, v);
  }
  return out;
}

ElementSet p_elements(const GroupTable& g, const ElementSet& s, std::size_t p) {
  ElementSet out;
  s.for_each([&](Element e) {
    std::size_t k = g.element_order(e);
    while (k % p == 0) k /= p;
    if (k == 1) out.insert(e);
  });
  return out;
}

GroupTable subgroup_as_group(const GroupTable& g, const Subgroup& s) {
  const std::vector<Element> elems = s.members.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const std::size_t n = elems.size();
  std::vector<std::uint8_t> mult(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = g.label(elems[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const int c = index[g.mul(elems[a], elems[b])];
      if (c < 0) throw PreconditionError("subset is not closed under multiplication");
      mult[a * n + b] = static_cast<std::uint8_t>(c);
    }
  }
  return GroupTable(n, std::move(mult), std::move(labels));
}

}  // namespace artinx
