#include "liftspace/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "liftspace/error.hpp"

namespace liftspace {

namespace {

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Identity and inverses of a table already known to be a group.
void derive_identity_and_inverses(std::size_t n, const std::vector<Element>& mult,
                                  Element& identity, std::vector<Element>& inv) {
  identity = 0;
  for (std::size_t e = 0; e < n; ++e) {
    if (mult[e * n + e] == e) {
      identity = static_cast<Element>(e);
      break;
    }
  }
  inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a * n + b] == identity) {
        inv[a] = static_cast<Element>(b);
        break;
      }
    }
  }
}

}  // namespace

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->order == b.data_->order && a.data_->mult == b.data_->mult;
}

FiniteGroup validate_group(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty multiplication table");
  std::vector<Element> mult;
  mult.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      std::ostringstream os;
      os << "row " << a << " has " << table[a].size() << " entries, expected " << n;
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        std::ostringstream os;
        os << "entry " << a << "*" << b << " = " << table[a][b] << " is outside 0.." << n - 1;
        throw Error(ErrorCode::InvalidArgument, os.str());
      }
      mult.push_back(table[a][b]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return mult[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw Error(ErrorCode::NotAssociative,
                      "(ab)c != a(bc) for (a, b, c) = " +
                          triple(static_cast<Element>(a), static_cast<Element>(b),
                                 static_cast<Element>(c)));
        }
      }
    }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorCode::NoIdentity, "no element is a two-sided identity");

  std::vector<Element> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n;
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == identity && at(b, a) == identity) {
        found = b;
        break;
      }
    }
    if (found == n) {
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }
    inv[a] = static_cast<Element>(found);
  }

  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = n;
  data->mult = std::move(mult);
  data->inv = std::move(inv);
  data->identity = static_cast<Element>(identity);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

FiniteGroup make_group_unchecked(std::size_t order, std::vector<Element> mult, std::string name) {
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = order;
  derive_identity_and_inverses(order, mult, data->identity, data->inv);
  data->mult = std::move(mult);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = static_cast<Element>((a + b) % n);
  return make_group_unchecked(n, std::move(mult), "Z/" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ga = static_cast<Element>(a / nh);
    const auto ha = static_cast<Element>(a % nh);
    for (std::size_t b = 0; b < n; ++b) {
      const auto gb = static_cast<Element>(b / nh);
      const auto hb = static_cast<Element>(b % nh);
      mult[a * n + b] = static_cast<Element>(g.mul(ga, gb) * nh + h.mul(ha, hb));
    }
  }
  return make_group_unchecked(n, std::move(mult), g.name() + " x " + h.name());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Element PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return static_cast<Element>(elements.size());
  return static_cast<Element>(it - elements.begin());
}

PermutationGroup permutation_group(std::span<const Permutation> generators, std::string name) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& gen : generators) {
    if (gen.size() != degree || !is_permutation(gen))
      throw Error(ErrorCode::InvalidArgument,
                  "permutation generators must be permutations of one common degree");
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::set<Permutation> seen{id};
  std::queue<Permutation> frontier;
  frontier.push(id);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop();
    for (const auto& gen : generators) {
      Permutation q = compose(p, gen);
      if (seen.insert(q).second) frontier.push(std::move(q));
    }
  }

  PermutationGroup result;
  result.elements.assign(seen.begin(), seen.end());
  const std::size_t n = result.elements.size();
  std::map<Permutation, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(result.elements[i], static_cast<Element>(i));
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[a * n + b] = index.at(compose(result.elements[a], result.elements[b]));
  result.group = make_group_unchecked(n, std::move(mult), std::move(name));
  return result;
}

PermutationGroup symmetric_group(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    Permutation swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % degree);
    gens = {swap, cycle};
  } else {
    gens = {Permutation(degree, 0)};
  }
  return permutation_group(gens, "S" + std::to_string(degree));
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_.order(), false) {
  for (auto a : elements_) member_[a] = true;
}

Subgroup Subgroup::make(const FiniteGroup& parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (auto a : elements) {
    if (!parent.contains(a))
      throw Error(ErrorCode::InvalidArgument,
                  "subgroup element " + std::to_string(a) + " is not in the group");
  }
  Subgroup s(parent, std::move(elements));
  if (!s.contains(parent.identity()))
    throw Error(ErrorCode::InvalidArgument, "subgroup does not contain the identity");
  for (auto a : s.elements_) {
    if (!s.contains(parent.inv(a)))
      throw Error(ErrorCode::InvalidArgument,
                  "subgroup is not closed under inverses: " + std::to_string(a));
    for (auto b : s.elements_) {
      if (!s.contains(parent.mul(a, b)))
        throw Error(ErrorCode::InvalidArgument, "subgroup is not closed: " + std::to_string(a) +
                                                    "*" + std::to_string(b) + " = " +
                                                    std::to_string(parent.mul(a, b)));
    }
  }
  return s;
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return Subgroup(parent, {parent.identity()});
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(parent, std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> found{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto s : generators) {
      const Element x = g.mul(found[i], s);
      if (!seen[x]) {
        seen[x] = true;
        found.push_back(x);
      }
    }
  }
  return Subgroup::make(g, std::move(found));
}

bool is_normal(const FiniteGroup& g, const Subgroup& k) {
  if (!(k.parent() == g)) throw Error(ErrorCode::InvalidArgument, "subgroup of a different group");
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    for (auto a : k.elements())
      if (!k.contains(g.mul(g.mul(x, a), xi))) return false;
  }
  return true;
}

Subgroup centralizer(const FiniteGroup& g, Element a) {
  if (!g.contains(a)) throw Error(ErrorCode::InvalidArgument, "element outside the group");
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  return Subgroup::make(g, std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& k) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    bool normalizes = true;
    for (auto a : k.elements()) {
      if (!k.contains(g.mul(g.mul(x, a), xi))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(x);
  }
  return Subgroup::make(g, std::move(out));
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  Subgroup current = Subgroup::trivial(g);
  for (Element x = 0; x < g.order(); ++x) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

GroupHom GroupHom::make(FiniteGroup source, FiniteGroup target, std::vector<Element> image) {
  if (image.size() != source.order())
    throw Error(ErrorCode::InvalidArgument, "homomorphism table has " +
                                                std::to_string(image.size()) + " entries, expected " +
                                                std::to_string(source.order()));
  for (auto y : image)
    if (!target.contains(y))
      throw Error(ErrorCode::InvalidArgument,
                  "homomorphism image " + std::to_string(y) + " is outside the target");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (image[source.mul(a, b)] != target.mul(image[a], image[b]))
        throw Error(ErrorCode::InvalidArgument, "not a homomorphism: h(" + std::to_string(a) +
                                                    "*" + std::to_string(b) + ") != h(" +
                                                    std::to_string(a) + ")*h(" +
                                                    std::to_string(b) + ")");
  return GroupHom(std::move(source), std::move(target), std::move(image));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!(target_ == next.source_))
    throw Error(ErrorCode::InvalidArgument, "homomorphisms do not compose");
  std::vector<Element> composed(image_.size());
  for (std::size_t a = 0; a < image_.size(); ++a) composed[a] = next(image_[a]);
  return GroupHom(source_, next.target_, std::move(composed));
}

Subgroup kernel(const GroupHom& h) {
  std::vector<Element> out;
  for (Element a = 0; a < h.source().order(); ++a)
    if (h(a) == h.target().identity()) out.push_back(a);
  return Subgroup::make(h.source(), std::move(out));
}

Subgroup image(const GroupHom& h) {
  return Subgroup::make(h.target(), h.table());
}

bool is_surjective(const GroupHom& h) { return image(h).size() == h.target().order(); }

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const std::size_t order = g.order();
  constexpr auto unset = static_cast<Element>(-1);
  std::vector<Element> coset(order, unset);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto k : n.elements()) coset[g.mul(x, k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> mult(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mult[a * m + b] = coset[g.mul(reps[a], reps[b])];
  std::string name = g.name().empty() ? std::string() : g.name() + "/N";
  FiniteGroup q = make_group_unchecked(m, std::move(mult), std::move(name));
  GroupHom proj = GroupHom::make(g, q, std::move(coset));
  return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

}  // namespace liftspace
