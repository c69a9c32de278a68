#include "documents.hpp"

#include "grassqh/errors.hpp"
#include "grassqh/hodge.hpp"
#include "grassqh/partitions.hpp"
#include "grassqh/qh_grassmannian.hpp"
#include "grassqh/qh_section.hpp"
#include "grassqh/root_data.hpp"
#include "grassqh/screen.hpp"
#include "grassqh_cli/cli.hpp"

namespace grassqh::cli {

namespace {

Json envelope(const std::string& command, Json inputs, Json results) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = std::move(results);
  return doc;
}

Json poly_json(const UniPoly& p, const std::string& var = "x") {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coefficients", coeffs}, {"text", p.to_string(var)}};
}

Json partition_json(const Partition& p, int width) {
  Json a = Json::array();
  for (int i = 0; i < std::max(width, p.length()); ++i) a.push_back(p[static_cast<std::size_t>(i)]);
  return a;
}

Json verdict_json(const ScreenVerdict& v) {
  Json j;
  j["outcome"] = v.has_witness() ? "Witness" : "NoObstruction";
  if (v.witness) j["witness"] = {{"i", v.witness->i}, {"d", v.witness->d}, {"lhs", v.witness->lhs}, {"rhs", v.witness->rhs}};
  else j["witness"] = nullptr;
  return j;
}

Json profile_json(const BettiProfile& p) {
  auto t = periodic_betti(p);
  Json j;
  j["label"] = p.label;
  j["dimension"] = p.dimension();
  j["index"] = p.index;
  j["even_betti"] = p.even_betti;
  j["tilde_b"] = t;
  j["verdict"] = verdict_json(screen(p));
  if (auto i = asymmetric_residue(p))
    j["asymmetry"] = {{"i", *i}, {"tilde_i", t[*i]}, {"tilde_minus_i", t[(p.index - *i) % p.index]}};
  else
    j["asymmetry"] = nullptr;
  return j;
}

Json diamond_json(const HodgeDiamond& d) {
  Json rows = Json::array();
  for (int p = 0; p <= d.dimension(); ++p) {
    Json row = Json::array();
    for (int q = 0; q <= d.dimension(); ++q) row.push_back(d.at(p, q));
    rows.push_back(row);
  }
  Json off = Json::array();
  for (int p = 0; p <= d.dimension(); ++p)
    for (int q = 0; q <= d.dimension(); ++q)
      if (p != q && d.at(p, q) != 0) off.push_back({{"p", p}, {"q", q}, {"value", d.at(p, q)}});
  return Json{{"dimension", d.dimension()}, {"diagonal", d.diagonal()}, {"off_diagonal", off}, {"total", d.total()}, {"h", rows}};
}

}  // namespace

Json betti_doc(const std::string& type, int node) {
  GrassmannianId g(DynkinType::parse(type), node);
  BettiProfile p = profile_of(g);
  Json r;
  r["id"] = g.to_string();
  r["dimension"] = p.dimension();
  r["fano_index"] = p.index;
  r["euler_characteristic"] = p.euler_characteristic();
  r["even_betti"] = p.even_betti;
  r["poincare"] = poly_json(poincare_polynomial(g), "t");
  return envelope("betti", {{"type", type}, {"node", node}}, r);
}

Json screen_type_doc(const std::string& type, int node) {
  GrassmannianId g(DynkinType::parse(type), node);
  return envelope("screen", {{"type", type}, {"node", node}}, {{"profiles", Json::array({profile_json(profile_of(g))})}});
}

Json screen_section_doc(int k, int n) {
  if (n < 2 * k) throw InvalidInput("section screen requires n >= 2k");
  return envelope("screen", {{"section", true}, {"k", k}, {"n", n}},
                  {{"profiles", Json::array({profile_json(section_profile(k, n))})}});
}

Json screen_sg_doc(int n) {
  auto [x, y] = sg_betti(n);
  return envelope("screen", {{"sg", n}}, {{"profiles", Json::array({profile_json(x), profile_json(y)})}});
}

Json exceptional_doc() {
  Json rows = Json::array();
  for (const auto& row : exceptional_table())
    rows.push_back({{"id", row.id.to_string()},
                    {"dim", row.dim},
                    {"r", row.index},
                    {"i", row.i},
                    {"tilde_i", row.tilde_i},
                    {"tilde_minus_i", row.tilde_minus_i},
                    {"verdict", verdict_json(row.verdict)}});
  Json unscreened = Json::array();
  for (const auto& g : exceptional_unscreened())
    unscreened.push_back({{"id", g.to_string()}, {"verdict", verdict_json(screen(profile_of(g)))}});
  return envelope("exceptional-table", Json::object(), {{"rows", rows}, {"unscreened", unscreened}});
}

Json core_search_doc(int k, int n) {
  BoxConstraint box(k, n);
  Json w = Json::array();
  for (const auto& c : core_search(box)) w.push_back({{"partition", partition_json(c.partition, k)}, {"i", c.i}});
  return envelope("core-search", {{"k", k}, {"n", n}}, {{"witnesses", w}});
}

Json snow_doc(int k, int n, int p, int twist) {
  BoxConstraint box(k, n);
  Json w = Json::array();
  for (const auto& s : snow_witnesses(box, p, twist)) w.push_back({{"partition", partition_json(s.partition, k)}, {"j", s.j}});
  return envelope("snow", {{"k", k}, {"n", n}, {"p", p}, {"twist", twist}}, {{"witnesses", w}});
}

Json hodge_doc(int k, int n, bool section, std::uint64_t seed) {
  Json r;
  r["chi_y"] = poly_json(chi_y(k, n, section, seed), "y");
  if (!section) {
    r["diamond"] = diamond_json(ambient_diamond(k, n));
  } else if (2 * k <= n) {
    r["diamond"] = diamond_json(diamond(k, n, seed));
    HodgeTateResult ht = is_hodge_tate(k, n, seed);
    r["hodge_tate"] = {{"value", ht.hodge_tate}, {"certificate", ht.certificate}};
  }
  return envelope("hodge", {{"k", k}, {"n", n}, {"section", section}, {"seed", std::to_string(seed)}}, r);
}

Json charpoly_doc(int k, int n, bool section, int power, bool with_e2) {
  if (power < 0) throw InvalidInput("--power must be nonnegative");
  const int index = section ? n - 1 : n;
  if ((power + (with_e2 ? 2 : 0)) % index != 0)
    throw InvalidInput("operator degree " + std::to_string(power + (with_e2 ? 2 : 0)) +
                       " must be a multiple of the index " + std::to_string(index) + " to preserve the degree-0 piece");
  Json piece = Json::array();
  UniPoly p;
  if (section) {
    SectionRing ring(k, n);
    const auto pieces = ring.graded_pieces();
    for (auto i : pieces[0]) piece.push_back(ring.basis()[i].to_string(k));
    p = section_charpoly(ring, power, with_e2);
  } else {
    if (with_e2 && k < 2) throw InvalidInput("--with-e2 requires k >= 2");
    QuantumGrassmannian ring(BoxConstraint(k, n));
    ExactMatrix op = ring.pieri_matrix(1).pow(static_cast<unsigned>(power));
    if (with_e2) op = op * ring.pieri_matrix(2);
    const auto pieces = ring.graded_pieces();
    const auto& idx = pieces[0];
    for (auto i : idx) piece.push_back("s" + ring.basis()[i].to_string(k));
    p = char_poly_on_piece(op, idx);
  }
  return envelope("qh charpoly",
                  {{"k", k}, {"n", n}, {"section", section}, {"power", power}, {"with_e2", with_e2}},
                  {{"piece", piece}, {"polynomial", poly_json(p)}});
}

Json presentation_doc(int k, int n) {
  QuantumGrassmannian ring(BoxConstraint(k, n));
  Json rel = Json::array();
  for (int m = n - k + 1; m <= n - 1; ++m) rel.push_back("s_" + std::to_string(m) + " = 0");
  rel.push_back("s_" + std::to_string(n) + (k % 2 ? " - q" : " + q") + " = 0");
  return envelope("qh presentation", {{"k", k}, {"n", n}}, {{"relations", rel}, {"holds", ring.presentation_check()}});
}

Json lefschetz_doc(int n) {
  auto [below, top] = lefschetz_polynomials(n);
  SectionRing ring(3, n);
  const std::vector<std::string> names{"e1", "e2", "e3"};
  Json polys = Json::array();
  polys.push_back({{"name", "h" + std::to_string(n - 1)}, {"expected", "0"}, {"text", below.to_string(names)}});
  polys.push_back({{"name", "h" + std::to_string(n)}, {"expected", "q*e1"}, {"text", top.to_string(names)}});
  return envelope("qh lefschetz", {{"n", n}}, {{"polynomials", polys}, {"holds", lefschetz_relation_check(ring)}});
}

Json semisimple_doc(int k, int n, bool section) {
  Json r;
  if (!section) {
    QuantumGrassmannian ring(BoxConstraint(k, n));
    r["algebra_dim"] = ring.dim();
    r["semisimple"] = semisimple_test(ring.regular_representation());
    r["radical_dim"] = radical(ring).radical.size();
    r["note"] = "trace form on QH*(Gr(k,n)) at q = 1";
  } else {
    SectionSemisimplicity s = section_semisimplicity(k, n);
    r["algebra_dim"] = s.algebra_dim;
    r["semisimple"] = s.semisimple;
    r["radical_dim"] = s.radical_dim;
    r["note"] = s.note;
    if (s.screen) r["screen"] = verdict_json(*s.screen);
  }
  return envelope("qh semisimple", {{"k", k}, {"n", n}, {"section", section}}, r);
}

}  // namespace grassqh::cli
