#include "liftspace/covers.hpp"

#include <queue>
#include <stdexcept>

#include "liftspace/error.hpp"

namespace liftspace {

namespace {

void require_surjective(const CoverSpec& spec, const char* what) {
  if (!spec.phi_surjective())
    throw Error(ErrorCode::NotSurjective,
                std::string(what) +
                    " needs phi onto G; see is_connected_cover for disconnected covers");
}

void require_regular(const CoverSpec& spec, const char* what) {
  require_surjective(spec, what);
  if (!spec.subgroup_normal())
    throw Error(ErrorCode::NotRegular, std::string(what) + " needs a regular cover (K normal in G)");
}

}  // namespace

CoverSpec::CoverSpec(Pi1Basis basis, FiniteGroup group, std::vector<Element> images, Subgroup k)
    : basis_(std::move(basis)), group_(std::move(group)), images_(std::move(images)), k_(std::move(k)) {}

CoverSpec CoverSpec::make(Pi1Basis basis, FiniteGroup group, std::vector<Element> gen_images,
                          Subgroup k) {
  if (gen_images.size() != basis.rank())
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(basis.rank()) +
                                                " generator images, got " +
                                                std::to_string(gen_images.size()));
  for (auto x : gen_images)
    if (!group.contains(x))
      throw Error(ErrorCode::InvalidArgument,
                  "generator image " + std::to_string(x) + " is outside the group");
  if (!(k.parent() == group))
    throw Error(ErrorCode::InvalidArgument, "subgroup belongs to a different group");

  CoverSpec spec(std::move(basis), std::move(group), std::move(gen_images), std::move(k));
  const FiniteGroup& g = spec.group_;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  spec.coset_of_.assign(g.order(), unset);
  for (Element x = 0; x < g.order(); ++x) {
    if (spec.coset_of_[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(spec.reps_.size());
    spec.reps_.push_back(x);
    for (auto kk : spec.k_.elements()) spec.coset_of_[g.mul(kk, x)] = id;
  }
  spec.phi_surjective_ = generated_subgroup(g, spec.images_).size() == g.order();
  spec.k_normal_ = is_normal(g, spec.k_);
  return spec;
}

CoverSpec CoverSpec::make(Pi1Basis basis, FiniteGroup group, std::vector<Element> gen_images) {
  Subgroup k = Subgroup::trivial(group);
  return make(std::move(basis), std::move(group), std::move(gen_images), std::move(k));
}

std::vector<FibrePoint> CoverSpec::fibre() const {
  std::vector<FibrePoint> out;
  for (std::uint32_t c = 0; c < coset_count(); ++c) out.push_back(FibrePoint{c});
  return out;
}

Element CoverSpec::voltage(DartId d) const {
  const auto& l = basis_.letter_of(d);
  if (!l) return group_.identity();
  const Element x = images_[l->generator];
  return l->sign > 0 ? x : group_.inv(x);
}

FibrePoint CoverSpec::right_multiply(FibrePoint x, Element g) const {
  return coset_of(group_.mul(representative(x), g));
}

CoverGraph build_cover(const CoverSpec& spec) {
  CoverGraph cover(spec.base());
  const std::size_t sheets = spec.coset_count();
  cover.sheets_ = sheets;
  cover.base_point_ = spec.base_point();
  const BaseGraph& base = spec.base();
  cover.darts_.reserve(base.dart_count() * sheets);
  for (const auto& d : base.darts()) {
    const Element vol = spec.voltage(d.id);
    for (std::uint32_t c = 0; c < sheets; ++c) {
      const FibrePoint from{c};
      const FibrePoint to = spec.right_multiply(from, vol);
      LiftedDart lifted;
      lifted.id = static_cast<CoverDartId>(d.id * sheets + c);
      lifted.source = cover.vertex_id(d.source, from);
      lifted.target = cover.vertex_id(d.target, to);
      lifted.reverse = static_cast<CoverDartId>(d.reverse * sheets + to.coset);
      lifted.base_dart = d.id;
      cover.darts_.push_back(lifted);
    }
  }
  return cover;
}

const LiftedDart& CoverGraph::lift_dart(CoverVertexId at, DartId base_dart) const {
  const CoverVertex v = vertex(at);
  if (base_.dart(base_dart).source != v.base)
    throw Error(ErrorCode::NotIncident, "base dart " + std::to_string(base_dart) +
                                            " does not start under cover vertex " +
                                            std::to_string(at));
  return darts_[base_dart * sheets_ + v.fibre.coset];
}

bool is_covering(const CoverGraph& cover) {
  const BaseGraph& base = cover.base();
  std::vector<std::vector<CoverDartId>> out(cover.vertex_count());
  for (const auto& d : cover.darts()) {
    if (d.source >= cover.vertex_count() || d.target >= cover.vertex_count()) return false;
    const Dart& bd = base.dart(d.base_dart);
    if (cover.vertex(d.source).base != bd.source || cover.vertex(d.target).base != bd.target)
      return false;
    const LiftedDart& r = cover.dart(d.reverse);
    if (r.reverse != d.id || r.source != d.target || r.target != d.source ||
        r.base_dart != bd.reverse)
      return false;
    out[d.source].push_back(d.id);
  }
  for (CoverVertexId v = 0; v < cover.vertex_count(); ++v) {
    const auto& base_out = base.out_darts(cover.vertex(v).base);
    if (out[v].size() != base_out.size()) return false;
    std::vector<bool> hit(base.dart_count(), false);
    for (auto d : out[v]) {
      const DartId bd = cover.dart(d).base_dart;
      if (hit[bd]) return false;
      hit[bd] = true;
    }
  }
  return true;
}

bool is_connected_cover(const CoverSpec& spec) {
  std::vector<bool> seen(spec.coset_count(), false);
  std::vector<FibrePoint> found{spec.base_point()};
  seen[spec.base_point().coset] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto g : spec.gen_images()) {
      const FibrePoint y = spec.right_multiply(found[i], g);
      if (!seen[y.coset]) {
        seen[y.coset] = true;
        found.push_back(y);
      }
    }
  }
  return found.size() == spec.coset_count();
}

bool is_connected_graph(const CoverGraph& cover) {
  std::vector<bool> seen(cover.vertex_count(), false);
  std::queue<CoverVertexId> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const CoverVertexId v = frontier.front();
    frontier.pop();
    for (auto bd : cover.base().out_darts(cover.vertex(v).base)) {
      const CoverVertexId t = cover.lift_dart(v, bd).target;
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        frontier.push(t);
      }
    }
  }
  return reached == cover.vertex_count();
}

FibrePoint monodromy(const CoverSpec& spec, FibrePoint x, const Word& w) {
  return spec.right_multiply(x, spec.phi(w));
}

CoverVertexId lift_path(const CoverGraph& cover, CoverVertexId start, const EdgePath& path) {
  if (cover.vertex(start).base != path.start)
    throw Error(ErrorCode::NotIncident, "start vertex does not lie over the path start");
  CoverVertexId at = start;
  for (auto d : path.darts) at = cover.lift_dart(at, d).target;
  return at;
}

FibrePoint monodromy_by_lifting(const CoverSpec& spec, const CoverGraph& cover, FibrePoint x,
                                const Word& w) {
  const EdgePath loop = word_to_path(spec.basis(), w);
  const CoverVertexId end = lift_path(cover, cover.vertex_id(spec.base().base_vertex(), x), loop);
  return cover.vertex(end).fibre;
}

std::optional<std::vector<CoverVertexId>> extend_cover_map(const CoverGraph& from,
                                                           const CoverGraph& to,
                                                           CoverVertexId from_vertex,
                                                           CoverVertexId to_vertex) {
  if (!(from.base() == to.base()) || from.vertex_count() != to.vertex_count()) return std::nullopt;
  if (from.vertex(from_vertex).base != to.vertex(to_vertex).base) return std::nullopt;
  constexpr auto unset = static_cast<CoverVertexId>(-1);
  std::vector<CoverVertexId> map(from.vertex_count(), unset);
  std::queue<CoverVertexId> frontier;
  map[from_vertex] = to_vertex;
  frontier.push(from_vertex);
  while (!frontier.empty()) {
    const CoverVertexId u = frontier.front();
    frontier.pop();
    for (auto bd : from.base().out_darts(from.vertex(u).base)) {
      const CoverVertexId t = from.lift_dart(u, bd).target;
      const CoverVertexId image = to.lift_dart(map[u], bd).target;
      if (map[t] == unset) {
        map[t] = image;
        frontier.push(t);
      } else if (map[t] != image) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(to.vertex_count(), false);
  for (auto m : map) {
    if (m == unset || hit[m]) return std::nullopt;
    hit[m] = true;
  }
  return map;
}

std::vector<FibrePoint> deck_orbit_by_search(const CoverGraph& cover) {
  std::vector<FibrePoint> orbit;
  const VertexId b = cover.base().base_vertex();
  for (std::uint32_t c = 0; c < cover.sheets(); ++c) {
    const FibrePoint y{c};
    if (extend_cover_map(cover, cover, cover.base_point(), cover.vertex_id(b, y))) orbit.push_back(y);
  }
  return orbit;
}

bool is_regular(const CoverSpec& spec) {
  require_surjective(spec, "is_regular");
  const bool normal = spec.subgroup_normal();
  const bool transitive = deck_orbit_by_search(build_cover(spec)).size() == spec.coset_count();
  if (normal != transitive)
    throw std::logic_error("regularity by normality and by deck orbit disagree");
  return normal;
}

bool DeckGroup::acts_freely() const {
  for (Element d = 0; d < action.size(); ++d) {
    if (d == carrier.identity()) continue;
    for (std::uint32_t x = 0; x < action[d].size(); ++x)
      if (action[d][x].coset == x) return false;
  }
  return true;
}

bool DeckGroup::acts_transitively() const {
  if (action.empty()) return false;
  const std::size_t n = action.front().size();
  std::vector<bool> hit(n, false);
  for (const auto& perm : action) hit[perm.front().coset] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

DeckGroup deck_group(const CoverSpec& spec) {
  require_surjective(spec, "deck_group");
  const FiniteGroup& g = spec.group();
  const Subgroup n = normalizer(g, spec.subgroup());
  constexpr auto unset = static_cast<Element>(-1);
  std::vector<Element> class_of(g.order(), unset);
  DeckGroup deck;
  for (auto x : n.elements()) {
    if (class_of[x] != unset) continue;
    const auto id = static_cast<Element>(deck.representatives.size());
    deck.representatives.push_back(x);
    for (auto k : spec.subgroup().elements()) class_of[g.mul(x, k)] = id;
  }
  const std::size_t m = deck.representatives.size();
  std::vector<Element> mult(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mult[a * m + b] = class_of[g.mul(deck.representatives[a], deck.representatives[b])];
  deck.carrier = make_group_unchecked(m, std::move(mult), "N(K)/K");
  for (auto rep : deck.representatives) {
    std::vector<FibrePoint> perm;
    for (auto x : spec.fibre()) perm.push_back(spec.coset_of(g.mul(rep, spec.representative(x))));
    deck.action.push_back(std::move(perm));
  }
  return deck;
}

FibreGroup fibre_group(const CoverSpec& spec) {
  require_regular(spec, "fibre_group");
  const FiniteGroup& g = spec.group();
  const std::size_t m = spec.coset_count();
  std::vector<Element> mult(m * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b)
      mult[a * m + b] =
          spec.coset_of(g.mul(spec.representative(FibrePoint{a}), spec.representative(FibrePoint{b})))
              .coset;
  FibreGroup out;
  out.group = make_group_unchecked(m, std::move(mult), "fibre");
  const DeckGroup deck = deck_group(spec);
  for (Element d = 0; d < deck.carrier.order(); ++d)
    out.theta.push_back(deck.apply(d, spec.base_point()));
  return out;
}

FibrePoint left_action(const CoverSpec& spec, const Word& w, FibrePoint x) {
  require_regular(spec, "left_action");
  const FiniteGroup& g = spec.group();
  return spec.coset_of(g.mul(spec.phi(w), spec.representative(x)));
}

std::vector<FibrePoint> equalizer_set(const CoverSpec& spec, const Word& w) {
  require_regular(spec, "equalizer_set");
  std::vector<FibrePoint> out;
  for (auto x : spec.fibre())
    if (left_action(spec, w, x) == monodromy(spec, x, w)) out.push_back(x);
  return out;
}

}  // namespace liftspace
