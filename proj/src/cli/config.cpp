#include "liftspace/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "liftspace/error.hpp"

namespace liftspace::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> to_number(std::string_view s) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& message) const {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_) + ": " + message);
  }

 private:
  std::size_t line_;
};

std::size_t parse_count(std::string_view s, const LineError& fail, const std::string& what) {
  const auto v = to_number<std::size_t>(trim(s));
  if (!v) fail("expected a non-negative integer for " + what + ", got '" + std::string(s) + "'");
  return *v;
}

std::vector<ElementExpr> parse_element_list(std::string_view s, const LineError& fail) {
  std::vector<ElementExpr> out;
  try {
    for (const auto& item : split_top_level(s)) out.push_back(parse_element(item));
  } catch (const Error& e) {
    fail(e.what());
  }
  return out;
}

Permutation parse_perm_images(std::string_view s) {
  Permutation p;
  for (auto tok : split_ws(s)) {
    const auto v = to_number<std::uint32_t>(tok);
    if (!v) throw Error(ErrorCode::SyntaxError, "bad permutation image '" + std::string(tok) + "'");
    p.push_back(*v);
  }
  if (p.empty()) throw Error(ErrorCode::SyntaxError, "empty permutation");
  return p;
}

GroupDef parse_group_def(std::string name, std::string_view value, const LineError& fail) {
  GroupDef def;
  def.name = std::move(name);
  const auto words = split_ws(value);
  if (words.empty()) fail("group '" + def.name + "' has no construction");
  const std::string_view kind = words[0];
  const std::string_view rest = trim(value.substr(value.find(kind) + kind.size()));
  if (kind == "cyclic") {
    def.kind = GroupDef::Kind::Cyclic;
    def.order = parse_count(rest, fail, "cyclic order");
    if (def.order == 0) fail("cyclic order must be positive");
  } else if (kind == "product") {
    def.kind = GroupDef::Kind::Product;
    for (std::size_t i = 1; i < words.size(); ++i) def.factors.emplace_back(words[i]);
    if (def.factors.size() < 2) fail("product needs at least two factors");
  } else if (kind == "table") {
    def.kind = GroupDef::Kind::Table;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto end = std::min(rest.find(';', start), rest.size());
      std::vector<Element> row;
      for (auto tok : split_ws(rest.substr(start, end - start))) {
        const auto v = to_number<Element>(tok);
        if (!v) fail("bad table entry '" + std::string(tok) + "'");
        row.push_back(*v);
      }
      def.table.push_back(std::move(row));
      start = end + 1;
    }
  } else if (kind == "generated") {
    def.kind = GroupDef::Kind::Generated;
    const auto items = split_top_level(rest);
    if (items.empty()) fail("generated group needs at least one permutation");
    for (const auto& item : items) {
      const ElementExpr e = [&] {
        try {
          return parse_element(item);
        } catch (const Error& err) {
          fail(err.what());
        }
      }();
      if (e.kind != ElementExpr::Kind::Perm) fail("generators must be written 'perm i j k'");
      def.generators.push_back(e.perm);
    }
  } else {
    fail("unknown group construction '" + std::string(kind) + "'");
  }
  return def;
}

void expand_solenoid(ConfigDocument& doc, std::string_view args, const LineError& fail) {
  std::optional<std::size_t> p, depth;
  for (auto tok : split_ws(args)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) fail("expected key=value in solenoid, got '" + std::string(tok) + "'");
    const auto key = tok.substr(0, eq);
    const std::size_t v = parse_count(tok.substr(eq + 1), fail, std::string(key));
    if (key == "p") p = v;
    else if (key == "depth") depth = v;
    else fail("unknown solenoid parameter '" + std::string(key) + "'");
  }
  if (!p || !depth) fail("solenoid needs p=<prime> and depth=<n>");
  if (*p < 2 || *depth == 0) fail("solenoid needs p >= 2 and depth >= 1");
  std::vector<LevelDef> levels;
  std::size_t n = 1;
  for (std::size_t k = 1; k <= *depth; ++k) {
    n *= *p;
    const std::string name = "Z" + std::to_string(n);
    auto it = std::find_if(doc.groups.begin(), doc.groups.end(), [&](const GroupDef& g) { return g.name == name; });
    if (it == doc.groups.end()) {
      GroupDef def;
      def.name = name;
      def.kind = GroupDef::Kind::Cyclic;
      def.order = n;
      doc.groups.push_back(def);
    } else if (it->kind != GroupDef::Kind::Cyclic || it->order != n) {
      fail("group '" + name + "' is already defined as something other than cyclic " + std::to_string(n));
    }
    LevelDef level{name, {ElementExpr::integer(1)}, std::nullopt};
    if (k > 1) level.bond = BondDef{};
    levels.push_back(std::move(level));
  }
  doc.tower = std::move(levels);
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string format_list(const std::vector<ElementExpr>& items) {
  std::vector<std::string> parts;
  for (const auto& e : items) parts.push_back(format_element(e));
  return join(parts, ", ");
}

[[noreturn]] void not_in_group(const NamedGroup& g, const ElementExpr& e) {
  throw Error(ErrorCode::InvalidArgument,
              "'" + format_element(e) + "' is not an element of group '" + g.def.name + "'");
}

ElementExpr reduce_mod(const NamedGroup& lower, const ElementExpr& e) {
  if (lower.def.kind == GroupDef::Kind::Cyclic && e.kind == ElementExpr::Kind::Integer)
    return ElementExpr::integer(e.value % static_cast<long long>(lower.def.order));
  if (lower.def.kind == GroupDef::Kind::Product && e.kind == ElementExpr::Kind::Tuple &&
      e.parts.size() == lower.factors.size()) {
    std::vector<ElementExpr> parts;
    for (std::size_t i = 0; i < e.parts.size(); ++i) parts.push_back(reduce_mod(*lower.factors[i], e.parts[i]));
    return ElementExpr::tuple(std::move(parts));
  }
  throw Error(ErrorCode::InvalidArgument,
              "bond 'mod' needs matching cyclic levels, cannot reduce '" + format_element(e) + "' into '" +
                  lower.def.name + "'");
}

const NamedGroup& build_group(const ConfigDocument& doc, const std::string& name,
                              std::map<std::string, NamedGroup>& built, std::set<std::string>& active) {
  if (auto it = built.find(name); it != built.end()) return it->second;
  const auto def_it =
      std::find_if(doc.groups.begin(), doc.groups.end(), [&](const GroupDef& g) { return g.name == name; });
  if (def_it == doc.groups.end()) throw Error(ErrorCode::UnknownReference, "undefined group '" + name + "'");
  if (!active.insert(name).second)
    throw Error(ErrorCode::InvalidArgument, "group '" + name + "' is defined in terms of itself");
  const GroupDef& def = *def_it;
  NamedGroup g;
  g.def = def;
  switch (def.kind) {
    case GroupDef::Kind::Cyclic:
      g.group = cyclic_group(def.order).renamed(name);
      break;
    case GroupDef::Kind::Table:
      g.group = validate_group(def.table, name);
      break;
    case GroupDef::Kind::Generated: {
      PermutationGroup pg = permutation_group(def.generators, name);
      g.group = pg.group;
      g.perms = std::move(pg.elements);
      break;
    }
    case GroupDef::Kind::Product: {
      for (const auto& f : def.factors) g.factors.push_back(&build_group(doc, f, built, active));
      FiniteGroup acc = g.factors[0]->group;
      for (std::size_t i = 1; i < g.factors.size(); ++i) acc = direct_product(acc, g.factors[i]->group);
      g.group = acc.renamed(name);
      break;
    }
  }
  active.erase(name);
  return built.emplace(name, std::move(g)).first->second;
}

std::vector<Element> elements_of(const NamedGroup& g, const std::vector<ElementExpr>& items) {
  std::vector<Element> out;
  for (const auto& e : items) out.push_back(element_of(g, e));
  return out;
}

void check_rank(const std::vector<ElementExpr>& images, std::size_t rank, const std::string& where) {
  if (images.size() != rank)
    throw Error(ErrorCode::InvalidArgument, where + " lists " + std::to_string(images.size()) +
                                                " generator images but the base has rank " +
                                                std::to_string(rank));
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

ElementExpr parse_element(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty element");
  if (s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::SyntaxError, "unbalanced '(' in '" + std::string(s) + "'");
    std::vector<ElementExpr> parts;
    for (const auto& item : split_top_level(s.substr(1, s.size() - 2))) parts.push_back(parse_element(item));
    if (parts.size() < 2) throw Error(ErrorCode::SyntaxError, "tuple needs two or more entries");
    return ElementExpr::tuple(std::move(parts));
  }
  if (s.starts_with("perm") && (s.size() == 4 || s[4] == ' ' || s[4] == '\t'))
    return ElementExpr::permutation(parse_perm_images(s.substr(4)));
  const auto v = to_number<long long>(s);
  if (!v) throw Error(ErrorCode::SyntaxError, "cannot read element '" + std::string(s) + "'");
  return ElementExpr::integer(*v);
}

std::string format_element(const ElementExpr& e) {
  switch (e.kind) {
    case ElementExpr::Kind::Integer:
      return std::to_string(e.value);
    case ElementExpr::Kind::Perm: {
      std::string out = "perm";
      for (auto x : e.perm) out += " " + std::to_string(x);
      return out;
    }
    case ElementExpr::Kind::Tuple: {
      std::vector<std::string> parts;
      for (const auto& p : e.parts) parts.push_back(format_element(p));
      return "(" + join(parts, ", ") + ")";
    }
  }
  return {};
}

std::string format_element(const NamedGroup& g, Element x) { return format_element(expr_of(g, x)); }

Element element_of(const NamedGroup& g, const ElementExpr& e) {
  switch (g.def.kind) {
    case GroupDef::Kind::Cyclic:
    case GroupDef::Kind::Table:
      if (e.kind != ElementExpr::Kind::Integer || e.value < 0 ||
          static_cast<std::size_t>(e.value) >= g.group.order())
        not_in_group(g, e);
      return static_cast<Element>(e.value);
    case GroupDef::Kind::Generated: {
      if (e.kind != ElementExpr::Kind::Perm) not_in_group(g, e);
      const auto it = std::lower_bound(g.perms.begin(), g.perms.end(), e.perm);
      if (it == g.perms.end() || *it != e.perm) not_in_group(g, e);
      return static_cast<Element>(it - g.perms.begin());
    }
    case GroupDef::Kind::Product: {
      if (e.kind != ElementExpr::Kind::Tuple || e.parts.size() != g.factors.size()) not_in_group(g, e);
      Element x = 0;
      for (std::size_t i = 0; i < g.factors.size(); ++i)
        x = static_cast<Element>(x * g.factors[i]->group.order() + element_of(*g.factors[i], e.parts[i]));
      return x;
    }
  }
  not_in_group(g, e);
}

ElementExpr expr_of(const NamedGroup& g, Element x) {
  switch (g.def.kind) {
    case GroupDef::Kind::Cyclic:
    case GroupDef::Kind::Table:
      return ElementExpr::integer(x);
    case GroupDef::Kind::Generated:
      return ElementExpr::permutation(g.perms.at(x));
    case GroupDef::Kind::Product: {
      std::vector<ElementExpr> parts(g.factors.size());
      for (std::size_t i = g.factors.size(); i-- > 0;) {
        const auto n = static_cast<Element>(g.factors[i]->group.order());
        parts[i] = expr_of(*g.factors[i], x % n);
        x /= n;
      }
      return ElementExpr::tuple(std::move(parts));
    }
  }
  return {};
}

ConfigDocument parse_config(std::string_view text) {
  ConfigDocument doc;
  enum class Section { None, Graph, Groups, Tower, Cover };
  Section section = Section::None;
  std::set<std::string> seen_sections, seen_keys;
  bool solenoid = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const LineError fail(line_no);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (!seen_sections.insert(name).second)
        throw Error(ErrorCode::DuplicateSection,
                    "line " + std::to_string(line_no) + ": section [" + name + "] appears twice");
      seen_keys.clear();
      if (name == "graph") {
        section = Section::Graph;
        doc.graph = GraphSection{};
      } else if (name == "groups") {
        section = Section::Groups;
      } else if (name == "tower") {
        section = Section::Tower;
        doc.tower.emplace();
      } else if (name == "cover") {
        section = Section::Cover;
        doc.cover.emplace();
      } else {
        fail("unknown section [" + name + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (section == Section::Tower && line.starts_with("solenoid") &&
        (line.size() == 8 || line[8] == ' ' || line[8] == '\t')) {
      if (solenoid || !doc.tower->empty()) fail("solenoid must be the only entry of [tower]");
      expand_solenoid(doc, line.substr(8), fail);
      solenoid = true;
      continue;
    }
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail("missing key");

    switch (section) {
      case Section::None:
        fail("entry outside any section");
      case Section::Graph: {
        if (!seen_keys.insert(key).second) fail("duplicate key '" + key + "'");
        if (key == "vertices") {
          doc.graph->vertices = parse_count(value, fail, "vertices");
        } else if (key == "base") {
          doc.graph->base = static_cast<VertexId>(parse_count(value, fail, "base"));
        } else if (key == "edges") {
          for (const auto& item : split_top_level(value)) {
            const auto dash = item.find('-');
            if (dash == std::string::npos) fail("edge must be written u-v, got '" + item + "'");
            const auto u = parse_count(std::string_view(item).substr(0, dash), fail, "edge endpoint");
            const auto v = parse_count(std::string_view(item).substr(dash + 1), fail, "edge endpoint");
            doc.graph->edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
          }
        } else {
          fail("unknown key '" + key + "' in [graph]");
        }
        break;
      }
      case Section::Groups: {
        if (!is_identifier(key)) fail("bad group name '" + key + "'");
        if (std::any_of(doc.groups.begin(), doc.groups.end(), [&](const GroupDef& g) { return g.name == key; }))
          fail("group '" + key + "' is already defined");
        doc.groups.push_back(parse_group_def(key, value, fail));
        break;
      }
      case Section::Tower: {
        if (solenoid) fail("solenoid must be the only entry of [tower]");
        auto& levels = *doc.tower;
        if (key == "level") {
          if (!is_identifier(value)) fail("bad group name '" + std::string(value) + "'");
          levels.push_back(LevelDef{std::string(value), {}, std::nullopt});
          seen_keys.clear();
        } else if (key == "images" || key == "bond") {
          if (levels.empty()) fail("'" + key + "' before any 'level'");
          if (!seen_keys.insert(key).second) fail("duplicate key '" + key + "' for this level");
          if (key == "images") {
            levels.back().images = parse_element_list(value, fail);
          } else {
            if (levels.size() == 1) fail("the first level has no bond");
            BondDef bond;
            if (value == "mod") {
              bond.kind = BondDef::Kind::Mod;
            } else if (value.starts_with("table")) {
              bond.kind = BondDef::Kind::Table;
              bond.table = parse_element_list(value.substr(5), fail);
            } else {
              fail("bond must be 'mod' or 'table ...'");
            }
            levels.back().bond = std::move(bond);
          }
        } else {
          fail("unknown key '" + key + "' in [tower]");
        }
        break;
      }
      case Section::Cover: {
        if (!seen_keys.insert(key).second) fail("duplicate key '" + key + "'");
        if (key == "group") {
          if (!is_identifier(value)) fail("bad group name '" + std::string(value) + "'");
          doc.cover->group = std::string(value);
        } else if (key == "images") {
          doc.cover->images = parse_element_list(value, fail);
        } else if (key == "subgroup") {
          doc.cover->subgroup = parse_element_list(value, fail);
        } else {
          fail("unknown key '" + key + "' in [cover]");
        }
        break;
      }
    }
  }

  const LineError at_end(line_no);
  if (doc.tower.has_value() == doc.cover.has_value()) at_end("expected exactly one of [tower] or [cover]");
  if (doc.tower) {
    if (doc.tower->empty()) at_end("[tower] has no levels");
    for (std::size_t i = 1; i < doc.tower->size(); ++i)
      if (!(*doc.tower)[i].bond) at_end("level " + std::to_string(i + 1) + " has no bond");
  }
  if (doc.cover && doc.cover->group.empty()) at_end("[cover] needs 'group'");
  resolve(doc);
  return doc;
}

std::string render(const ConfigDocument& doc) {
  std::ostringstream os;
  if (doc.graph) {
    std::vector<std::string> edges;
    for (auto [u, v] : doc.graph->edges) edges.push_back(std::to_string(u) + "-" + std::to_string(v));
    os << "[graph]\n"
       << "vertices = " << doc.graph->vertices << "\n"
       << "edges = " << join(edges, ", ") << "\n"
       << "base = " << doc.graph->base << "\n\n";
  }
  if (!doc.groups.empty()) {
    os << "[groups]\n";
    for (const auto& g : doc.groups) {
      os << g.name << " = ";
      switch (g.kind) {
        case GroupDef::Kind::Cyclic:
          os << "cyclic " << g.order;
          break;
        case GroupDef::Kind::Product:
          os << "product " << join(g.factors, " ");
          break;
        case GroupDef::Kind::Table: {
          std::vector<std::string> rows;
          for (const auto& row : g.table) {
            std::vector<std::string> cells;
            for (auto x : row) cells.push_back(std::to_string(x));
            rows.push_back(join(cells, " "));
          }
          os << "table " << join(rows, "; ");
          break;
        }
        case GroupDef::Kind::Generated: {
          std::vector<ElementExpr> gens;
          for (const auto& p : g.generators) gens.push_back(ElementExpr::permutation(p));
          os << "generated " << format_list(gens);
          break;
        }
      }
      os << "\n";
    }
    os << "\n";
  }
  if (doc.tower) {
    os << "[tower]\n";
    for (const auto& level : *doc.tower) {
      os << "level = " << level.group << "\n";
      os << "images = " << format_list(level.images) << "\n";
      if (level.bond) {
        if (level.bond->kind == BondDef::Kind::Mod) os << "bond = mod\n";
        else os << "bond = table " << format_list(level.bond->table) << "\n";
      }
    }
  }
  if (doc.cover) {
    os << "[cover]\n"
       << "group = " << doc.cover->group << "\n"
       << "images = " << format_list(doc.cover->images) << "\n";
    if (!doc.cover->subgroup.empty()) os << "subgroup = " << format_list(doc.cover->subgroup) << "\n";
  }
  return os.str();
}

Model resolve(const ConfigDocument& doc, std::optional<std::size_t> depth) {
  BaseGraph base = circle_graph();
  if (doc.graph) base = BaseGraph::from_edges(doc.graph->vertices, doc.graph->edges, doc.graph->base);
  Model model(spanning_tree(base));
  const std::size_t rank = model.basis.rank();

  std::set<std::string> active;
  for (const auto& def : doc.groups) build_group(doc, def.name, model.groups, active);
  auto lookup = [&](const std::string& name) -> const NamedGroup& {
    const auto it = model.groups.find(name);
    if (it == model.groups.end()) throw Error(ErrorCode::UnknownReference, "undefined group '" + name + "'");
    return it->second;
  };

  if (doc.tower) {
    std::size_t levels = doc.tower->size();
    if (depth) {
      if (*depth == 0) throw Error(ErrorCode::InvalidArgument, "depth must be at least 1");
      if (*depth > levels)
        throw Error(ErrorCode::DepthExceeded,
                    "depth " + std::to_string(*depth) + " exceeds the " + std::to_string(levels) + " tower levels",
                    *depth);
      levels = *depth;
    }
    RawTower raw;
    raw.base = base;
    for (std::size_t i = 0; i < doc.tower->size(); ++i) {
      const LevelDef& def = (*doc.tower)[i];
      const NamedGroup& g = lookup(def.group);
      check_rank(def.images, rank, "level " + std::to_string(i + 1));
      if (i >= levels) continue;
      model.tower_groups.push_back(&g);
      raw.levels.push_back(g.group);
      raw.gen_images.push_back(elements_of(g, def.images));
      if (i == 0) continue;
      const NamedGroup& lower = *model.tower_groups[i - 1];
      std::vector<Element> bond;
      if (def.bond->kind == BondDef::Kind::Mod) {
        for (Element x = 0; x < g.group.order(); ++x) bond.push_back(element_of(lower, reduce_mod(lower, expr_of(g, x))));
      } else {
        if (def.bond->table.size() != g.group.order())
          throw Error(ErrorCode::InvalidArgument,
                      "bond table of level " + std::to_string(i + 1) + " has " +
                          std::to_string(def.bond->table.size()) + " entries, expected " +
                          std::to_string(g.group.order()),
                      i + 1);
        bond = elements_of(lower, def.bond->table);
      }
      raw.bonds.push_back(std::move(bond));
    }
    model.tower = validate_tower(std::move(raw));
  }

  if (doc.cover) {
    const NamedGroup& g = lookup(doc.cover->group);
    check_rank(doc.cover->images, rank, "[cover]");
    std::vector<Element> sub = elements_of(g, doc.cover->subgroup);
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    Subgroup k = sub.empty() ? Subgroup::trivial(g.group) : Subgroup::make(g.group, std::move(sub));
    model.cover_group = &g;
    model.cover = CoverSpec::make(model.basis, g.group, elements_of(g, doc.cover->images), std::move(k));
  }
  return model;
}

}  // namespace liftspace::cli
