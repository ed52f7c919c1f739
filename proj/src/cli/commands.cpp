#include "liftspace/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "liftspace/borel.hpp"
#include "liftspace/cli/config.hpp"
#include "liftspace/cli/grammar.hpp"
#include "liftspace/cli/output.hpp"
#include "liftspace/error.hpp"

namespace liftspace::cli {

namespace {

struct Options {
  std::string config;
  std::optional<std::size_t> depth;
  std::string format = "human";
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string word;
  std::string start = "0";
  std::vector<std::size_t> pair;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  Model model;

  bool machine() const { return opt.format == "machine"; }

  const std::vector<std::string>& names() const { return model.basis.generator_names(); }

  /// The single cover a command acts on: the [cover] section, or the deepest
  /// tower level.
  CoverSpec cover_spec() const {
    if (model.cover) return *model.cover;
    return model.tower->cover_spec(model.tower->depth() - 1);
  }
  const NamedGroup& cover_group() const {
    return model.cover ? *model.cover_group : *model.tower_groups.back();
  }

  const TowerSpec& tower() const {
    if (!model.tower) throw Error(ErrorCode::InvalidArgument, "this command needs a [tower] section");
    return *model.tower;
  }

  void value(const std::string& key, const std::string& v) const {
    if (machine()) out << key << "\t" << v << "\n";
    else out << v << "\n";
  }
  void field(const std::string& key, const std::string& v) const {
    out << key << (machine() ? "\t" : ": ") << v << "\n";
  }

  int report(const Report& r) const {
    out << (machine() ? render_machine(r) : render_human(r));
    return r.all_passed() ? kSuccess : kCheckFailed;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_point(const NamedGroup& g, const CoverSpec& spec, FibrePoint x) {
  std::string s = std::to_string(x.coset);
  if (spec.subgroup().size() > 1) s += " (K " + format_element(g, spec.representative(x)) + ")";
  return s;
}

std::string format_profinite(const Context& ctx, const std::vector<Element>& components) {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ", ";
    s += format_element(*ctx.model.tower_groups[i], components[i]);
  }
  return s + ")";
}

int cmd_validate(const Context& ctx) {
  const BaseGraph& g = ctx.model.basis.graph();
  ctx.field("vertices", std::to_string(g.vertex_count()));
  ctx.field("edges", std::to_string(g.edge_count()));
  ctx.field("rank", std::to_string(ctx.model.basis.rank()));
  if (ctx.model.tower) {
    ctx.field("tower depth", std::to_string(ctx.model.tower->depth()));
  } else {
    ctx.field("cover group", ctx.model.cover_group->def.name + " of order " +
                                 std::to_string(ctx.model.cover->group().order()));
  }
  ctx.field("status", "valid");
  return kSuccess;
}

int cmd_cover_build(const Context& ctx) {
  const CoverSpec spec = ctx.cover_spec();
  const CoverGraph cover = build_cover(spec);
  ctx.field("sheets", std::to_string(cover.sheets()));
  ctx.field("vertices", std::to_string(cover.vertex_count()));
  ctx.field("edges", std::to_string(cover.dart_count() / 2));
  ctx.field("covering", yes_no(is_covering(cover)));
  const bool connected = is_connected_cover(spec);
  ctx.field("connected", yes_no(connected));
  if (!connected) return kCheckFailed;
  ctx.field("regular", yes_no(is_regular(spec)));
  ctx.field("deck group order", std::to_string(deck_group(spec).carrier.order()));
  return kSuccess;
}

int cmd_cover_dot(const Context& ctx) {
  ctx.out << export_dot(build_cover(ctx.cover_spec()), ctx.model.basis);
  return kSuccess;
}

int cmd_lift(const Context& ctx) {
  const Word w = parse_word(ctx.opt.word, ctx.names());
  if (ctx.model.tower) {
    const TowerSpec& t = *ctx.model.tower;
    const std::size_t top = t.depth() - 1;
    const Element start = element_of(*ctx.model.tower_groups[top], parse_element(ctx.opt.start));
    std::vector<Element> comps;
    for (std::size_t i = 0; i < t.depth(); ++i) {
      const CoverSpec spec = t.cover_spec(i);
      comps.push_back(monodromy(spec, FibrePoint{t.project(start, top, i)}, w).coset);
    }
    ctx.value("fibre_point", format_profinite(ctx, comps));
    return kSuccess;
  }
  const CoverSpec& spec = *ctx.model.cover;
  const auto start = parse_element(ctx.opt.start);
  if (start.kind != ElementExpr::Kind::Integer || start.value < 0 ||
      static_cast<std::size_t>(start.value) >= spec.coset_count())
    throw Error(ErrorCode::InvalidArgument,
                "start must be a fibre point 0.." + std::to_string(spec.coset_count() - 1));
  const FibrePoint x = monodromy(spec, FibrePoint{static_cast<std::uint32_t>(start.value)}, w);
  ctx.value("fibre_point", format_point(ctx.cover_group(), spec, x));
  return kSuccess;
}

int cmd_actions_compare(const Context& ctx) {
  const Word w = parse_word(ctx.opt.word, ctx.names());
  const CoverSpec spec = ctx.cover_spec();
  const auto eq = equalizer_set(spec, w);
  std::string s = "{";
  for (std::size_t i = 0; i < eq.size(); ++i) s += (i ? ", " : "") + std::to_string(eq[i].coset);
  s += "}";
  ctx.value("equalizer", s);
  return kSuccess;
}

int cmd_tower_theta(const Context& ctx) {
  const TowerSpec& t = ctx.tower();
  const ProfiniteElement x = theta(t, parse_word(ctx.opt.word, ctx.names()), t.depth());
  ctx.value("theta", format_profinite(ctx, x.components()));
  return kSuccess;
}

int cmd_tower_verify(const Context& ctx) {
  const TowerSpec& t = ctx.tower();
  Report r;
  const TowerCover covers = build_tower_covers(t);
  for (std::size_t i = 0; i < t.depth(); ++i)
    r.check("covers.covering[" + std::to_string(i + 1) + "]", is_covering(covers.levels[i]),
            std::to_string(covers.levels[i].sheets()) + " sheets");
  for (std::size_t i = 0; i + 1 < t.depth(); ++i) {
    r.check("tower.bond[" + std::to_string(i + 1) + "]", is_surjective(t.bond(i)),
            "q: " + t.level(i + 1).name() + " -> " + t.level(i).name());
    r.check("tower.bonding_map[" + std::to_string(i + 1) + "]",
            is_covering_map(covers.levels[i + 1], covers.levels[i], covers.vertex_maps[i], covers.dart_maps[i]),
            "E_" + std::to_string(i + 2) + " -> E_" + std::to_string(i + 1));
  }
  const DenseLeafReport dense = dense_leaf_check(t);
  for (const auto& d : dense.levels)
    r.check("dense_leaf[" + std::to_string(d.level) + "]", d.surjective,
            "image of phi has " + std::to_string(d.image_size) + " of " + std::to_string(d.order) + " elements");
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const std::string name = "covers.regular[" + std::to_string(i + 1) + "]";
    try {
      r.check(name, is_regular(t.cover_spec(i)), "level " + std::to_string(i + 1));
    } catch (const Error& e) {
      r.fail(name, e.what());
    }
  }
  return ctx.report(r);
}

int cmd_borel_check(const Context& ctx) {
  const TowerSpec& t = ctx.tower();
  const TowerCover covers = build_tower_covers(t);
  Report r;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (ctx.opt.pair.empty()) {
    for (std::size_t j = 0; j < t.depth(); ++j)
      for (std::size_t i = 0; i <= j; ++i) pairs.emplace_back(i, j);
  } else {
    if (ctx.opt.pair[0] == 0 || ctx.opt.pair[1] == 0)
      throw Error(ErrorCode::InvalidArgument, "levels are numbered from 1");
    pairs.emplace_back(ctx.opt.pair[0] - 1, ctx.opt.pair[1] - 1);
  }
  for (auto [i, j] : pairs) {
    const BorelQuotient bq = borel_quotient(t, covers, i, j);
    r.check("borel.quotient[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", bq.bijective,
            std::to_string(bq.class_count) + " classes, |V(E_" + std::to_string(i + 1) +
                ")| = " + std::to_string(covers.levels[i].vertex_count()));
  }
  if (ctx.opt.pair.empty()) {
    const Reconstruction rec = reconstruct_tower(fibre_data(t), covers);
    for (const auto& l : rec.levels)
      r.check("borel.reconstruct[" + std::to_string(l.level) + "]", l.isomorphic,
              std::to_string(l.isomorphisms_found) + (l.exhaustive ? " isomorphisms (exhaustive)" : " isomorphism"));
  }
  return ctx.report(r);
}

int cmd_suite(const Context& ctx) {
  SuiteOptions so;
  so.seed = ctx.opt.seed;
  so.samples = ctx.opt.samples;
  return ctx.report(theorem_suite(ctx.tower(), so));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRegular:
    case ErrorCode::NotDense:
    case ErrorCode::NotSurjective:
      return kCheckFailed;
    default:
      return kBadInput;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite covers, towers and lifting-space checks", "liftspace"};
  app.require_subcommand(1);
  app.add_option("-c,--config", opt.config, "Configuration file")->required();
  app.add_option("-d,--depth", opt.depth, "Use only the first n tower levels")->check(CLI::PositiveNumber);
  app.add_option("-f,--format", opt.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("-s,--seed", opt.seed, "Seed for sampled checks");

  std::function<int(const Context&)> action;
  auto leaf = [&](CLI::App* sub, std::function<int(const Context&)> fn) {
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto word_option = [&](CLI::App* sub) { sub->add_option("-w,--word", opt.word, "Word, e.g. \"a b' a^2\"")->required(); };

  leaf(app.add_subcommand("validate", "Parse and validate the configuration"), cmd_validate);

  auto* cover = app.add_subcommand("cover", "Single-cover commands");
  cover->require_subcommand(1);
  leaf(cover->add_subcommand("build", "Build the cover and summarize it"), cmd_cover_build);
  leaf(cover->add_subcommand("dot", "Export the cover as Graphviz"), cmd_cover_dot);

  auto* lift = leaf(app.add_subcommand("lift", "Fibre point after monodromy along a word"), cmd_lift);
  word_option(lift);
  lift->add_option("--start", opt.start, "Starting fibre point");

  auto* actions = app.add_subcommand("actions", "Left and right fibre actions");
  actions->require_subcommand(1);
  word_option(leaf(actions->add_subcommand("compare", "Fibre points where both actions of a word agree"),
                   cmd_actions_compare));

  auto* tower = app.add_subcommand("tower", "Tower commands");
  tower->require_subcommand(1);
  word_option(leaf(tower->add_subcommand("theta", "Fibre element of a word at every level"), cmd_tower_theta));
  leaf(tower->add_subcommand("verify", "Check bonds, covering maps, density and regularity"), cmd_tower_verify);

  auto* borel = app.add_subcommand("borel", "Borel construction");
  borel->require_subcommand(1);
  leaf(borel->add_subcommand("check", "Quotient bijectivity and reconstruction"), cmd_borel_check)
      ->add_option("--pair", opt.pair, "Level pair i j (1-based)")
      ->expected(2);

  leaf(app.add_subcommand("suite", "Run every check on a tower"), cmd_suite)
      ->add_option("--samples", opt.samples, "Sampled cases per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kBadInput;
  }

  try {
    const ConfigDocument doc = parse_config(read_file(opt.config));
    const Context ctx{opt, out, resolve(doc, opt.depth)};
    return action(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace liftspace::cli
