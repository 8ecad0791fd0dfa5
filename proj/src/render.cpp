#include <sstream>

#include "gbfam/commands.hpp"

namespace gbfam {

namespace {

using json = nlohmann::ordered_json;

std::string paren(const json& gens) {
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].get<std::string>();
  }
  return s + ")";
}

// The paper-style staircase: row j lists the entries x^i y^j with
// i + j < columns, highest row first.
std::string staircase(const std::vector<std::vector<std::string>>& grid,
                      std::uint64_t cols, std::uint64_t rows,
                      const std::string& xname, const std::string& yname) {
  std::vector<std::size_t> width(cols, 0);
  auto visible = [&](std::uint64_t i, std::uint64_t j) {
    return i + j < cols && i < cols && j < rows;
  };
  for (std::uint64_t j = 0; j < rows; ++j)
    for (std::uint64_t i = 0; i < cols; ++i)
      if (visible(i, j)) width[i] = std::max(width[i], grid[j][i].size());

  std::ostringstream out;
  std::string margin(yname.size(), ' ');
  std::size_t rule = 0;
  for (std::uint64_t jj = 0; jj < rows; ++jj) {
    std::uint64_t j = rows - 1 - jj;
    std::string line = (jj == 0 ? yname : margin) + " | ";
    bool any = false;
    for (std::uint64_t i = 0; i < cols; ++i) {
      if (!visible(i, j)) break;
      std::string cell = grid[j][i];
      cell.resize(width[i], ' ');
      line += cell;
      if (i + 1 < cols && visible(i + 1, j)) line += " ";
      any = true;
    }
    (void)any;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    rule = std::max(rule, line.size());
  }
  std::size_t bar = margin.size() + 1;
  out << margin << " +" << std::string(rule > bar ? rule - bar : 1, '-')
      << "\n";
  out << std::string(rule > xname.size() ? rule - xname.size() : 0, ' ')
      << xname << "\n";
  return out.str();
}

std::string render_table(const json& data, bool mono) {
  const auto& window = data["window"];
  const auto& vars = data["variables"];
  const auto& entries = data["entries"];
  auto cell = [&](const json& entry) {
    if (mono) return "(" + entry["generator"].get<std::string>() + ")";
    return paren(entry["ideal"]);
  };
  std::ostringstream out;
  if (window.size() == 2) {
    std::uint64_t cols = window[0], rows = window[1];
    std::vector<std::vector<std::string>> grid(
        rows, std::vector<std::string>(cols));
    std::size_t k = 0;
    for (std::uint64_t i = 0; i < cols; ++i)
      for (std::uint64_t j = 0; j < rows; ++j)
        grid[j][i] = cell(entries[k++]);
    out << staircase(grid, cols, rows, vars[0].get<std::string>(),
                     vars[1].get<std::string>());
  } else {
    for (const auto& entry : entries)
      out << entry["monomial"].get<std::string>() << ": " << cell(entry)
          << "\n";
  }
  return out.str();
}

std::string render_locus(const json& data, const char* label_key,
                         const std::string& heading) {
  std::ostringstream out;
  out << heading << "\n";
  for (const auto& part : data["parts"])
    out << "  " << part[label_key].get<std::string>() << ": "
        << paren(part["ideal"]) << "\n";
  out << "combined: " << paren(data["combined"]) << "\n";
  return out.str();
}

std::string render_text(const json& data) {
  std::string cmd = data["command"];
  std::ostringstream out;
  if (cmd == "gb") {
    out << "reduced groebner basis of " << data["ideal"].get<std::string>()
        << ":\n";
    for (const auto& g : data["basis"])
      out << "  " << g.get<std::string>() << "\n";
  } else if (cmd == "initial") {
    std::vector<std::string> gens;
    for (const auto& g : data["generators"])
      gens.push_back(g["display"].get<std::string>());
    json arr = gens;
    out << "in(" << data["ideal"].get<std::string>() << ") = " << paren(arr)
        << "\n";
  } else if (cmd == "coeffs") {
    out << "coefficient ideals of in("
        << data["ideal"].get<std::string>() << ")\n"
        << render_table(data, false);
  } else if (cmd == "contract") {
    out << "base contraction: " << paren(data["generators"]) << "\n";
  } else if (cmd == "flat-locus") {
    out << "flat-locus search\n";
    for (const auto& part : data["parts"])
      out << "  " << part["monomial"].get<std::string>() << ": "
          << paren(part["ideal"]) << "\n";
    out << "S = " << paren(data["combined"]) << " mod base; witness: "
        << (data["witness"].is_null() ? std::string("none")
                                      : data["witness"].get<std::string>())
        << "\n";
    out << data["note"].get<std::string>() << "\n";
  } else if (cmd == "good-point") {
    out << "good-point test at p = " << paren(data["prime"]) << "\n";
    if (data["trivial"].get<bool>())
      out << "  I meet A escapes p: the local ring is trivial\n";
    for (const auto& v : data["verdicts"])
      out << "  " << v["monomial"].get<std::string>() << ": "
          << v["verdict"].get<std::string>() << "\n";
    out << "good: " << (data["good"].get<bool>() ? "yes" : "no") << " ("
        << data["note"].get<std::string>() << ")\n";
  } else if (cmd == "specialize") {
    out << "specialization at " << data["point"].get<std::string>() << "\n";
    out << "predicted " << paren(data["predicted"]) << ", actual "
        << paren(data["actual"]) << ", "
        << (data["equal"].get<bool>() ? "EQUAL" : "NOT EQUAL") << "\n";
  } else if (cmd == "iso-locus") {
    out << render_locus(data, "variable", "isomorphism locus");
  } else if (cmd == "finite-locus") {
    out << render_locus(data, "variable", "finite locus");
  } else if (cmd == "saturate") {
    out << "contraction by " << data["element"].get<std::string>() << ": "
        << paren(data["generators"]) << "\n";
  } else if (cmd == "quolem-check") {
    out << "initial ideal over the base contraction: "
        << (data["equal"].get<bool>() ? "EQUAL" : "NOT EQUAL") << "\n";
    for (const auto& e : data["exponents"])
      out << "  " << e["monomial"].get<std::string>() << ": "
          << paren(e["lhs"]) << " vs " << paren(e["rhs"]) << "\n";
  } else if (cmd == "mono-coeffs" || cmd == "mono-diagram") {
    out << "coefficient ideals of " << data["ideal"].get<std::string>()
        << "\n"
        << render_table(data, true);
  } else if (cmd == "mono-fiber") {
    out << "fiber at q = " << data["q"].get<std::string>() << ": "
        << paren(data["generators"]) << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.data.dump(2) + "\n";
  return render_text(report.data);
}

}  // namespace gbfam
