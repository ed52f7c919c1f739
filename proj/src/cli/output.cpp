#include "liftspace/cli/output.hpp"

#include <sstream>
#include <vector>

#include "liftspace/error.hpp"

namespace liftspace::cli {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\\\";
    else if (c == '\t') out += "\\t";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    const char c = s[++i];
    out += c == 't' ? '\t' : c == 'n' ? '\n' : c;
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

constexpr std::string_view kSchemaName = "liftspace-report";

}  // namespace

std::string export_dot(const CoverGraph& cover, const Pi1Basis& basis) {
  std::ostringstream os;
  auto node = [&](CoverVertexId v) {
    const CoverVertex x = cover.vertex(v);
    return "v" + std::to_string(x.base) + "_" + std::to_string(x.fibre.coset);
  };
  os << "digraph cover {\n";
  for (CoverVertexId v = 0; v < cover.vertex_count(); ++v) os << "  " << node(v) << ";\n";
  const auto& names = basis.generator_names();
  const std::size_t sheets = cover.sheets();
  for (DartId d = 0; d < cover.base().dart_count(); d += 2) {
    const auto& letter = basis.letter_of(d);
    for (std::size_t c = 0; c < sheets; ++c) {
      const LiftedDart& lifted = cover.dart(static_cast<CoverDartId>(d * sheets + c));
      os << "  " << node(lifted.source) << " -> " << node(lifted.target);
      if (letter) os << " [label=\"" << names[letter->generator] << "\"];\n";
      else os << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_human(const Report& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << "[" << to_string(e.status) << "] " << e.name;
    if (!e.witness.empty()) os << ": " << e.witness;
    os << "\n";
  }
  os << report.count(CheckStatus::Pass) << " passed, " << report.count(CheckStatus::Fail) << " failed, "
     << report.count(CheckStatus::Skip) << " skipped\n";
  return os.str();
}

std::string render_machine(const Report& report) {
  std::ostringstream os;
  os << "schema\t" << kSchemaName << "\t" << Report::kSchemaVersion << "\n";
  for (const auto& e : report.entries)
    os << "check\t" << to_string(e.status) << "\t" << escape(e.name) << "\t" << escape(e.witness) << "\n";
  os << "summary\t" << report.count(CheckStatus::Pass) << "\t" << report.count(CheckStatus::Fail) << "\t"
     << report.count(CheckStatus::Skip) << "\n";
  return os.str();
}

Report parse_machine(std::string_view text) {
  Report report;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + why);
  };
  while (pos < text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields[0] == "schema") {
      if (fields.size() != 3 || fields[1] != kSchemaName || fields[2] != std::to_string(Report::kSchemaVersion))
        bad("unsupported schema");
      header = true;
    } else if (fields[0] == "check") {
      if (!header) bad("record before schema header");
      if (fields.size() != 4) bad("check record needs 4 fields");
      CheckStatus status;
      if (fields[1] == "pass") status = CheckStatus::Pass;
      else if (fields[1] == "fail") status = CheckStatus::Fail;
      else if (fields[1] == "skip") status = CheckStatus::Skip;
      else bad("unknown status '" + std::string(fields[1]) + "'");
      report.add(unescape(fields[2]), status, unescape(fields[3]));
    } else if (fields[0] != "summary") {
      bad("unknown record '" + std::string(fields[0]) + "'");
    }
  }
  if (!header) bad("missing schema header");
  return report;
}

}  // namespace liftspace::cli
