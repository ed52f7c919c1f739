#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "liftspace/borel.hpp"
#include "liftspace/error.hpp"

namespace liftspace {

namespace {

std::string lv(std::size_t i) { return std::to_string(i + 1); }

// Runs one check; any exception becomes a failure entry.
void guarded(Report& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.fail(name, e.what());
  }
}

std::string group_axiom_violation(const FiniteGroup& g, std::size_t full_limit,
                                  std::size_t samples, std::mt19937_64& rng, bool& sampled) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element a = 0; a < n; ++a) {
    if (g.mul(a, e) != a || g.mul(e, a) != a) return "identity fails at " + std::to_string(a);
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
      return "inverse fails at " + std::to_string(a);
  }
  auto assoc = [&](Element a, Element b, Element c) -> std::string {
    if (g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))) return {};
    std::ostringstream os;
    os << "(ab)c != a(bc) at (" << a << ", " << b << ", " << c << ")";
    return os.str();
  };
  sampled = n > full_limit;
  if (!sampled) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (auto w = assoc(a, b, c); !w.empty()) return w;
  } else {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t s = 0; s < samples; ++s)
      if (auto w = assoc(pick(rng), pick(rng), pick(rng)); !w.empty()) return w;
  }
  return {};
}

}  // namespace

Report theorem_suite(const TowerSpec& tower, const SuiteOptions& opt) {
  Report report;
  std::mt19937_64 rng(opt.seed);
  const auto& names = tower.basis().generator_names();
  const std::size_t rank = tower.basis().rank();
  const std::size_t depth = tower.depth();
  auto word = [&] { return random_word(rng, rank, opt.max_word_length); };
  auto fmt = [&](const Word& w) { return format_word(w, names); };

  for (std::size_t i = 0; i < depth; ++i) {
    const std::string name = "groups.axioms[" + lv(i) + "]";
    guarded(report, name, [&] {
      bool sampled = false;
      const std::string bad =
          group_axiom_violation(tower.level(i), opt.full_axiom_scan_limit, opt.samples * 50, rng, sampled);
      const std::string how = sampled ? "sampled associativity" : "all triples";
      report.check(name, bad.empty(),
                   bad.empty() ? "order " + std::to_string(tower.level(i).order()) + ", " + how
                               : "level " + lv(i) + ": " + bad);
    });
  }

  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const std::string name = "tower.bond[" + lv(i) + "]";
    guarded(report, name, [&] {
      const GroupHom& q = tower.bond(i);
      std::string bad;
      if (!is_surjective(q)) bad = "not surjective";
      for (std::size_t a = 0; a < rank && bad.empty(); ++a)
        if (q(tower.gen_images(i + 1)[a]) != tower.gen_images(i)[a])
          bad = "incompatible on generator " + names[a];
      report.check(name, bad.empty(),
                   bad.empty() ? "level " + lv(i + 1) + " onto level " + lv(i) + ", compatible"
                               : "bond " + lv(i) + ": " + bad);
    });
  }

  const TowerCover covers = build_tower_covers(tower);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::string name = "covers.covering[" + lv(i) + "]";
    guarded(report, name, [&] {
      report.check(name, is_covering(covers.levels[i]),
                   std::to_string(covers.levels[i].vertex_count()) + " vertices, star bijection at level " + lv(i));
    });
  }
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const std::string name = "tower.bonding_map[" + lv(i) + "]";
    guarded(report, name, [&] {
      const bool ok = is_covering_map(covers.levels[i + 1], covers.levels[i], covers.vertex_maps[i],
                                      covers.dart_maps[i]);
      report.check(name, ok, "r_" + lv(i) + ": E_" + lv(i + 1) + " -> E_" + lv(i) +
                                 (ok ? " is a covering map" : " is not a covering map"));
    });
  }

  const DenseLeafReport dense = dense_leaf_check(tower);
  for (const auto& d : dense.levels) {
    report.check("dense_leaf[" + std::to_string(d.level) + "]", d.surjective,
                 "level " + std::to_string(d.level) + ": image of phi has " +
                     std::to_string(d.image_size) + " of " + std::to_string(d.order) + " elements");
  }
  const std::string not_dense =
      dense.passed ? std::string()
                   : "phi is not onto G at level " + std::to_string(dense.first_failure);
  report.check("dense_leaf", dense.passed,
               dense.passed ? "every theta_i is surjective" : not_dense);

  std::vector<bool> regular(depth, false);
  for (std::size_t i = 0; i < depth; ++i) {
    const std::string name = "covers.regular[" + lv(i) + "]";
    guarded(report, name, [&] {
      try {
        regular[i] = is_regular(tower.cover_spec(i));
      } catch (const Error& e) {
        report.fail(name, "level " + lv(i) + ": " + e.what());
        return;
      }
      report.check(name, regular[i],
                   regular[i] ? "level " + lv(i) + ": deck action transitive and K normal"
                              : "level " + lv(i) + ": K is not normal");
    });
  }

  for (std::size_t i = 0; i < depth; ++i) {
    const std::string name = "fibre.group[" + lv(i) + "]";
    if (!regular[i]) {
      report.skip(name, "level " + lv(i) + " is not regular");
      continue;
    }
    guarded(report, name, [&] {
      const CoverSpec spec = tower.cover_spec(i);
      const FibreGroup fg = fibre_group(spec);
      const DeckGroup deck = deck_group(spec);
      std::string bad;
      if (!deck.acts_freely()) bad = "deck action is not free";
      else if (!deck.acts_transitively()) bad = "deck action is not transitive";
      std::vector<bool> hit(spec.coset_count(), false);
      for (auto x : fg.theta) {
        if (hit[x.coset]) bad = "Theta is not injective";
        hit[x.coset] = true;
      }
      if (bad.empty() && fg.theta.size() != spec.coset_count()) bad = "Theta is not onto the fibre";
      if (bad.empty() && fg.group.identity() != spec.base_point().coset)
        bad = "base point is not the identity";
      const std::size_t n = deck.carrier.order();
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      const bool full = n * n <= 1u << 18;
      const std::size_t pairs = full ? n * n : opt.samples * 10;
      for (std::size_t s = 0; s < pairs && bad.empty(); ++s) {
        const Element a = full ? static_cast<Element>(s / n) : pick(rng);
        const Element b = full ? static_cast<Element>(s % n) : pick(rng);
        if (fg.theta[deck.carrier.mul(a, b)].coset != fg.group.mul(fg.theta[a].coset, fg.theta[b].coset))
          bad = "Theta(" + std::to_string(a) + "*" + std::to_string(b) + ") breaks the group law";
      }
      report.check(name, bad.empty(),
                   bad.empty() ? "level " + lv(i) + ": Theta is an isomorphism A(p) -> F of order " +
                                     std::to_string(n)
                               : "level " + lv(i) + ": " + bad);
    });
  }

  guarded(report, "fibre.theta_homomorphism", [&] {
    std::string bad;
    const ProfiniteElement one = ProfiniteElement::identity(tower, depth);
    for (std::size_t s = 0; s < opt.samples && bad.empty(); ++s) {
      const Word w1 = word(), w2 = word();
      const ProfiniteElement t1 = theta(tower, w1, depth);
      if (!(theta(tower, w1 * w2, depth) == fibre_mul(t1, theta(tower, w2, depth))))
        bad = "theta(" + fmt(w1) + " . " + fmt(w2) + ") != theta(w1) theta(w2)";
      else if (!(fibre_mul(t1, fibre_inv(t1)) == one))
        bad = "theta(" + fmt(w1) + ") times its inverse is not the identity";
    }
    report.check("fibre.theta_homomorphism", bad.empty(),
                 bad.empty() ? std::to_string(opt.samples) + " sampled word pairs, depth " + std::to_string(depth)
                             : bad);
  });

  guarded(report, "fibre.truncation", [&] {
    std::string bad;
    for (std::size_t s = 0; s < opt.samples && bad.empty(); ++s) {
      const Word w = word();
      const ProfiniteElement full = theta(tower, w, depth);
      for (std::size_t d = depth; d-- > 0 && bad.empty();)
        if (!(full.truncate(d) == theta(tower, w, d)))
          bad = "truncating theta(" + fmt(w) + ") to depth " + std::to_string(d) + " disagrees";
    }
    report.check("fibre.truncation", bad.empty(),
                 bad.empty() ? "dropping components agrees with shallower theta" : bad);
  });

  for (std::size_t i = 0; i < depth; ++i) {
    const CoverSpec spec = tower.cover_spec(i);
    const CoverGraph& cover = covers.levels[i];
    const std::size_t fibre = spec.coset_count();
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(fibre - 1));
    struct Triple {
      Word w1, w2;
      FibrePoint x;
    };
    std::vector<Triple> triples;
    for (std::size_t s = 0; s < opt.samples; ++s) triples.push_back({word(), word(), FibrePoint{pick(rng)}});
    auto where = [&](const Triple& t) {
      return "level " + lv(i) + ", x=" + std::to_string(t.x.coset) + ", w1=" + fmt(t.w1) +
             ", w2=" + fmt(t.w2);
    };
    const std::string count = std::to_string(opt.samples) + " sampled triples at level " + lv(i);

    const std::string right = "actions.right_composition[" + lv(i) + "]";
    guarded(report, right, [&] {
      std::string bad;
      for (const auto& t : triples)
        if (bad.empty() && monodromy(spec, t.x, t.w1 * t.w2) != monodromy(spec, monodromy(spec, t.x, t.w1), t.w2))
          bad = where(t);
      report.check(right, bad.empty(), bad.empty() ? count : bad);
    });

    const std::string lifting = "actions.lifting_equivalence[" + lv(i) + "]";
    guarded(report, lifting, [&] {
      std::string bad;
      for (const auto& t : triples)
        if (bad.empty() && monodromy(spec, t.x, t.w1) != monodromy_by_lifting(spec, cover, t.x, t.w1))
          bad = where(t);
      report.check(lifting, bad.empty(), bad.empty() ? "coset product equals dart-by-dart lift, " + count : bad);
    });

    const std::string left = "actions.left_composition[" + lv(i) + "]";
    const std::string mixed = "actions.mixed_associativity[" + lv(i) + "]";
    const std::string agree = "actions.basepoint_agreement[" + lv(i) + "]";
    const std::string regrep = "actions.regular_representation[" + lv(i) + "]";
    if (!regular[i]) {
      for (const auto& n : {left, mixed, agree, regrep})
        report.skip(n, "left action undefined: level " + lv(i) + " is not regular");
      continue;
    }
    guarded(report, left, [&] {
      std::string bad;
      for (const auto& t : triples)
        if (bad.empty() &&
            left_action(spec, t.w1 * t.w2, t.x) != left_action(spec, t.w1, left_action(spec, t.w2, t.x)))
          bad = where(t);
      report.check(left, bad.empty(), bad.empty() ? count : bad);
    });
    guarded(report, mixed, [&] {
      std::string bad;
      for (const auto& t : triples)
        if (bad.empty() && left_action(spec, t.w1, monodromy(spec, t.x, t.w2)) !=
                               monodromy(spec, left_action(spec, t.w1, t.x), t.w2))
          bad = where(t);
      report.check(mixed, bad.empty(), bad.empty() ? count : bad);
    });
    guarded(report, agree, [&] {
      std::string bad;
      const FibrePoint x0 = spec.base_point();
      for (const auto& t : triples)
        if (bad.empty() && left_action(spec, t.w1, x0) != monodromy(spec, x0, t.w1))
          bad = "level " + lv(i) + ", w=" + fmt(t.w1);
      report.check(agree, bad.empty(), bad.empty() ? std::to_string(opt.samples) + " sampled words" : bad);
    });
    guarded(report, regrep, [&] {
      const FibreGroup fg = fibre_group(spec);
      std::string bad;
      for (const auto& t : triples) {
        const Element tw = monodromy(spec, spec.base_point(), t.w1).coset;
        if (bad.empty() && (left_action(spec, t.w1, t.x).coset != fg.group.mul(tw, t.x.coset) ||
                            monodromy(spec, t.x, t.w1).coset != fg.group.mul(t.x.coset, tw)))
          bad = where(t);
      }
      report.check(regrep, bad.empty(),
                   bad.empty() ? "left/right actions are left/right translations under Theta" : bad);
    });
  }

  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const std::string name = "tower.intertwining[" + lv(i) + "]";
    guarded(report, name, [&] {
      const CoverSpec upper = tower.cover_spec(i + 1);
      const CoverSpec lower = tower.cover_spec(i);
      const CoverGraph& eu = covers.levels[i + 1];
      const CoverGraph& el = covers.levels[i];
      const VertexId b = tower.base().base_vertex();
      auto r = [&](FibrePoint x) { return el.vertex(covers.vertex_maps[i][eu.vertex_id(b, x)]).fibre; };
      std::string bad;
      for (std::size_t s = 0; s < opt.samples && bad.empty(); ++s) {
        const Word w = word();
        for (auto x : upper.fibre())
          if (r(monodromy(upper, x, w)) != monodromy(lower, r(x), w)) {
            bad = "x=" + std::to_string(x.coset) + ", w=" + fmt(w);
            break;
          }
      }
      report.check(name, bad.empty(),
                   bad.empty() ? "r_" + lv(i) + " commutes with monodromy on the whole fibre"
                               : "bond " + lv(i) + ": " + bad);
    });
  }

  if (!dense.passed) {
    report.fail("kernel_chain", not_dense);
    report.fail("borel.quotient", not_dense);
    report.fail("borel.reconstruct", not_dense);
    return report;
  }

  guarded(report, "kernel_chain", [&] {
    for (const auto& k : kernel_chain(tower)) {
      report.check("kernel_chain[" + std::to_string(k.level) + "]", k.isomorphism,
                   "[pi1 : ker theta_" + std::to_string(k.level) + "] = " + std::to_string(k.index) +
                       (k.isomorphism ? ", pi1/ker theta is isomorphic to G (finite-depth stand-in for continuity of theta)"
                                      : ", no isomorphism onto G of order " + std::to_string(k.order)));
    }
  });

  for (std::size_t j = 0; j < depth; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const std::string pair = lv(i) + "," + lv(j);
      const std::string name = "borel.quotient[" + pair + "]";
      guarded(report, name, [&] {
        const BorelQuotient bq = borel_quotient(tower, covers, i, j);
        const std::size_t target = covers.levels[i].vertex_count();
        report.check(name, bq.bijective,
                     std::to_string(bq.class_count) + " classes, |V(E_" + lv(i) + ")| = " +
                         std::to_string(target) + (bq.well_defined ? "" : ", Phi not constant on classes"));
      });
      const std::string inv = "borel.invariance[" + pair + "]";
      guarded(report, inv, [&] {
        const FiniteGroup& gi = tower.level(i);
        const FiniteGroup& gj = tower.level(j);
        const CoverGraph& ej = covers.levels[j];
        std::uniform_int_distribution<Element> pu(0, static_cast<Element>(gi.order() - 1));
        std::uniform_int_distribution<Element> pg(0, static_cast<Element>(gj.order() - 1));
        std::uniform_int_distribution<CoverVertexId> py(0, static_cast<CoverVertexId>(ej.vertex_count() - 1));
        std::string bad;
        for (std::size_t s = 0; s < opt.samples && bad.empty(); ++s) {
          const Element u = pu(rng), gamma = pg(rng);
          const CoverVertexId y = py(rng);
          const CoverVertex v = ej.vertex(y);
          const CoverVertexId gy = ej.vertex_id(v.base, FibrePoint{gj.mul(gamma, v.fibre.coset)});
          if (phi_map(tower, covers, i, j, gi.mul(u, tower.project(gamma, j, i)), y) !=
              phi_map(tower, covers, i, j, u, gy))
            bad = "u=" + std::to_string(u) + ", gamma=" + std::to_string(gamma) + ", y=" + std::to_string(y);
        }
        report.check(inv, bad.empty(), bad.empty() ? "Phi(u gamma, y) = Phi(u, gamma y) on samples" : bad);
      });
    }
  }

  guarded(report, "borel.reconstruct", [&] {
    const Reconstruction rec = reconstruct_tower(fibre_data(tower), covers, opt.exhaustive_limit);
    for (const auto& l : rec.levels) {
      const std::string how = l.exhaustive ? std::to_string(l.isomorphisms_found) + " isomorphisms by exhaustive basepoint search"
                                           : "basepoint-preserving map";
      report.check("borel.reconstruct[" + std::to_string(l.level) + "]", l.isomorphic,
                   l.isomorphic ? "isomorphic to E_" + std::to_string(l.level) + " (" + how + ")"
                                : "no cover isomorphism at level " + std::to_string(l.level));
    }
  });

  return report;
}

}  // namespace liftspace
