#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "documents.hpp"
#include "grassqh/errors.hpp"
#include "grassqh_cli/cli.hpp"

namespace grassqh::cli {

namespace {

using Row = std::vector<std::string>;

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool numeric(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

// Columns separated by two spaces; numeric columns are right-aligned.
void table(std::ostream& os, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> w(header.size());
  std::vector<bool> right(header.size(), true);
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) {
      w[c] = std::max(w[c], r[c].size());
      if (!numeric(r[c])) right[c] = false;
    }
  auto line = [&](const Row& r) {
    std::string s;
    for (std::size_t c = 0; c < w.size(); ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      const std::string pad(w[c] - cell.size(), ' ');
      if (c) s += "  ";
      s += right[c] ? pad + cell : cell + pad;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (auto x : w) total += x;
  os << std::string(total + 2 * (w.size() - 1), '-') << '\n';
  for (const auto& r : rows) line(r);
}

std::string join(const Json& arr, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += scalar(arr[i]);
  }
  return s;
}

std::string partition_cell(const Json& p) { return "(" + join(p, ",") + ")"; }

std::string verdict_cell(const Json& v) {
  if (v["outcome"] == "NoObstruction") return "NoObstruction";
  const Json& w = v["witness"];
  return "Witness i=" + scalar(w["i"]) + " d=" + scalar(w["d"]) + " " + scalar(w["lhs"]) + " > " +
         scalar(w["rhs"]);
}

void polynomial(std::ostream& os, const std::string& name, const Json& p) {
  os << name << " = " << scalar(p["text"]) << '\n';
  std::vector<Row> rows;
  for (std::size_t i = 0; i < p["coefficients"].size(); ++i)
    rows.push_back({std::to_string(i), scalar(p["coefficients"][i])});
  table(os, {"deg", "coeff"}, rows);
}

void render_betti(std::ostream& os, const Json& r) {
  os << r["id"].get<std::string>() << ": dim " << r["dimension"] << ", index " << r["fano_index"]
     << ", euler " << r["euler_characteristic"] << '\n';
  std::vector<Row> rows;
  for (std::size_t i = 0; i < r["even_betti"].size(); ++i) rows.push_back({std::to_string(2 * i), scalar(r["even_betti"][i])});
  table(os, {"degree", "betti"}, rows);
  polynomial(os, "P(t)", r["poincare"]);
}

void render_screen(std::ostream& os, const Json& r) {
  bool first = true;
  for (const auto& p : r["profiles"]) {
    if (!first) os << '\n';
    first = false;
    os << scalar(p["label"]) << ": dim " << p["dimension"] << ", index " << p["index"] << '\n';
    os << "even betti: " << join(p["even_betti"]) << '\n';
    std::vector<Row> rows;
    for (std::size_t i = 0; i < p["tilde_b"].size(); ++i) rows.push_back({std::to_string(i), scalar(p["tilde_b"][i])});
    table(os, {"residue", "tilde_b"}, rows);
    if (!p["asymmetry"].is_null())
      os << "asymmetry: tilde_b(" << p["asymmetry"]["i"] << ") = " << p["asymmetry"]["tilde_i"] << ", tilde_b(-"
         << p["asymmetry"]["i"] << ") = " << p["asymmetry"]["tilde_minus_i"] << '\n';
    os << "verdict: " << verdict_cell(p["verdict"]) << '\n';
  }
}

void render_exceptional(std::ostream& os, const Json& r) {
  std::vector<Row> rows;
  for (const auto& x : r["rows"])
    rows.push_back({scalar(x["id"]), scalar(x["dim"]), scalar(x["r"]), scalar(x["i"]), scalar(x["tilde_i"]),
                    scalar(x["tilde_minus_i"]), verdict_cell(x["verdict"])});
  table(os, {"G/P", "dim", "r", "i", "tilde_b(i)", "tilde_b(-i)", "verdict"}, rows);
  os << '\n';
  rows.clear();
  for (const auto& x : r["unscreened"]) rows.push_back({scalar(x["id"]), verdict_cell(x["verdict"])});
  table(os, {"G/P", "verdict"}, rows);
}

void render_witnesses(std::ostream& os, const Json& r, const std::string& key) {
  std::vector<Row> rows;
  for (const auto& w : r["witnesses"]) rows.push_back({partition_cell(w["partition"]), scalar(w[key])});
  table(os, {"partition", key}, rows);
  if (rows.empty()) os << "(none)\n";
}

void render_hodge(std::ostream& os, const Json& r) {
  polynomial(os, "chi_y", r["chi_y"]);
  if (r.contains("diamond")) {
    const Json& d = r["diamond"];
    os << "diagonal h^{p,p}: " << join(d["diagonal"]) << '\n';
    std::vector<Row> rows;
    for (const auto& o : d["off_diagonal"]) rows.push_back({scalar(o["p"]), scalar(o["q"]), scalar(o["value"])});
    os << "off-diagonal entries:\n";
    table(os, {"p", "q", "h^{p,q}"}, rows);
    os << "total: " << d["total"] << '\n';
  }
  if (r.contains("hodge_tate"))
    os << "hodge-tate: " << (r["hodge_tate"]["value"].get<bool>() ? "yes" : "no") << " ("
       << scalar(r["hodge_tate"]["certificate"]) << ")\n";
}

void render_charpoly(std::ostream& os, const Json& r) {
  os << "piece: " << join(r["piece"]) << '\n';
  polynomial(os, "charpoly", r["polynomial"]);
}

void render_presentation(std::ostream& os, const Json& r) {
  for (const auto& x : r["relations"]) os << scalar(x) << '\n';
  os << "holds: " << (r["holds"].get<bool>() ? "yes" : "no") << '\n';
}

void render_lefschetz(std::ostream& os, const Json& r) {
  std::vector<Row> rows;
  for (const auto& p : r["polynomials"]) rows.push_back({scalar(p["name"]), scalar(p["expected"]), scalar(p["text"])});
  table(os, {"name", "acts as", "polynomial"}, rows);
  os << "holds: " << (r["holds"].get<bool>() ? "yes" : "no") << '\n';
}

void render_semisimple(std::ostream& os, const Json& r) {
  os << "algebra dim: " << r["algebra_dim"] << '\n';
  os << "radical dim: " << r["radical_dim"] << '\n';
  os << "semisimple: " << (r["semisimple"].get<bool>() ? "yes" : "no") << '\n';
  if (r.contains("screen")) os << "screen: " << verdict_cell(r["screen"]) << '\n';
  os << "note: " << scalar(r["note"]) << '\n';
}

}  // namespace

std::string render(const Json& doc) {
  std::ostringstream os;
  const std::string cmd = doc.at("command").get<std::string>();
  os << "# " << cmd;
  for (const auto& [key, value] : doc.at("inputs").items()) os << ' ' << key << '=' << scalar(value);
  os << '\n';
  const Json& r = doc.at("results");
  if (cmd == "betti") render_betti(os, r);
  else if (cmd == "screen") render_screen(os, r);
  else if (cmd == "exceptional-table") render_exceptional(os, r);
  else if (cmd == "core-search") render_witnesses(os, r, "i");
  else if (cmd == "snow") render_witnesses(os, r, "j");
  else if (cmd == "hodge") render_hodge(os, r);
  else if (cmd == "qh charpoly") render_charpoly(os, r);
  else if (cmd == "qh presentation") render_presentation(os, r);
  else if (cmd == "qh lefschetz") render_lefschetz(os, r);
  else if (cmd == "qh semisimple") render_semisimple(os, r);
  else throw InvalidInput("unknown command in document: " + cmd);
  return os.str();
}

std::string render_table(const std::string& json_document) {
  Json doc;
  try {
    doc = Json::parse(json_document);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
    throw InvalidInput("unsupported schema version");
  return render(doc);
}

}  // namespace grassqh::cli
