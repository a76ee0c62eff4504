#include "sl2q/render.hpp"

#include <sstream>

namespace sl2q {

std::string group_name(GroupKind kind) {
  return kind == GroupKind::SL2 ? "SL2" : "PSL2";
}

std::string render_field(const NumberField& f, const RenderOptions& opt) {
  switch (f.kind) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::quadratic: {
      std::string d = std::to_string(f.param);
      return opt.ascii ? "Q(sqrt(" + d + "))" : "Q(√" + d + ")";
    }
    case FieldKind::real_cyclotomic: {
      std::string d = std::to_string(f.param);
      std::string z = opt.ascii ? "zeta_" + d : "ζ_" + d;
      return "Q(" + z + "+" + z + "^-1)";
    }
  }
  return "?";
}

namespace {

std::string render_a(const DivisionAlgebra& d, const RenderOptions& opt) {
  if (d.center == NumberField::rationals())
    return std::to_string(materialized_a(d));
  if (std::holds_alternative<std::int64_t>(d.a))
    return std::to_string(std::get<std::int64_t>(d.a));
  std::string c = std::to_string(std::get<ZetaDiff>(d.a).conductor);
  std::string z = opt.ascii ? "zeta_" + c : "ζ_" + c;
  return z + "-" + z + "^-1";
}

}  // namespace

std::string render_division(const DivisionAlgebra& d, const RenderOptions& opt) {
  if (d.kind == AlgebraKind::field) return render_field(d.center, opt);
  return "(" + render_a(d, opt) + ", " + std::to_string(d.b) + " | " +
         render_field(d.center, opt) + ")";
}

std::string render_component(const SimpleComponent& c, const RenderOptions& opt) {
  std::string body;
  if (c.n == 1 && c.division.kind == AlgebraKind::field)
    body = render_field(c.division.center, opt);
  else
    body = "M_" + std::to_string(c.n) + "(" + render_division(c.division, opt) + ")";
  if (c.multiplicity > 1)
    body = std::to_string(c.multiplicity) + (opt.ascii ? " x " : " × ") + body;
  return body;
}

std::string render_decomposition(const WedderburnDecomposition& w,
                                 const RenderOptions& opt) {
  std::string sep = opt.ascii ? " (+) " : " ⊕ ";
  std::string out;
  for (const auto& c : w.components) {
    if (!out.empty()) out += sep;
    out += render_component(c, opt);
  }
  return out;
}

std::vector<std::string> decomposition_notes(const WedderburnDecomposition& w) {
  std::vector<std::string> notes;
  if (w.kind == GroupKind::SL2 && !w.q.even && w.q.square) {
    notes.push_back(
        "D'' = (a, -p | Q) with a = -1 for p = 3 (mod 4) and a = -ell for "
        "p = 1 (mod 4), ell the smallest prime = 3 (mod 4) with (ell/p) = -1; "
        "the pairing is fixed by requiring ramification exactly at {p, oo}, "
        "which the reverse pairing fails.");
  }
  return notes;
}

namespace {

nlohmann::ordered_json field_json(const NumberField& f) {
  nlohmann::ordered_json j;
  switch (f.kind) {
    case FieldKind::rationals:
      j["kind"] = "Q";
      break;
    case FieldKind::quadratic:
      j["kind"] = "quadratic";
      j["param"] = f.param;
      break;
    case FieldKind::real_cyclotomic:
      j["kind"] = "real_cyclotomic";
      j["param"] = f.param;
      break;
  }
  return j;
}

nlohmann::ordered_json division_json(const DivisionAlgebra& d) {
  nlohmann::ordered_json j;
  j["kind"] = d.kind == AlgebraKind::field ? "field" : "quaternion";
  j["center"] = field_json(d.center);
  if (d.kind == AlgebraKind::quaternion) {
    if (d.center == NumberField::rationals()) {
      j["a"] = materialized_a(d);
    } else if (std::holds_alternative<std::int64_t>(d.a)) {
      j["a"] = std::get<std::int64_t>(d.a);
    } else {
      std::string c = std::to_string(std::get<ZetaDiff>(d.a).conductor);
      j["a"] = "zeta_" + c + "-zeta_" + c + "^-1";
    }
    j["b"] = d.b;
  }
  j["index"] = d.index();
  if (!d.ramified.empty()) {
    nlohmann::ordered_json places = nlohmann::ordered_json::array();
    for (const auto& v : d.ramified) {
      if (v.finite)
        places.push_back(v.prime);
      else
        places.push_back("oo");
    }
    j["ramified_places"] = places;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json decomposition_document(const WedderburnDecomposition& w) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["group"] = group_name(w.kind);
  doc["q"] = w.q.q;
  doc["p"] = w.q.p;
  doc["m"] = w.q.m;
  doc["order"] = w.order;
  doc["components"] = nlohmann::ordered_json::array();
  for (const auto& c : w.components) {
    nlohmann::ordered_json jc;
    jc["multiplicity"] = c.multiplicity;
    jc["n"] = c.n;
    jc["division"] = division_json(c.division);
    jc["dim_over_Q"] = component_dim_q(c) / c.multiplicity;
    doc["components"].push_back(jc);
  }
  doc["notes"] = decomposition_notes(w);
  return doc;
}

nlohmann::ordered_json counts_document(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["group"] = group_name(kind);
  doc["q"] = q.q;
  doc["rational_irr_count"] = rational_irr_count(kind, q);
  doc["module_dimensions"] = nlohmann::ordered_json::array();
  for (auto [dim, count] : simple_module_dimensions(kind, q)) {
    nlohmann::ordered_json row;
    row["dim"] = dim;
    row["count"] = count;
    doc["module_dimensions"].push_back(row);
  }
  return doc;
}

std::string render_counts(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  auto dims = simple_module_dimensions(kind, q);
  std::size_t width = 3;
  for (auto [dim, count] : dims)
    width = std::max(width, std::to_string(dim).size());
  std::ostringstream out;
  out << group_name(kind) << "(" << q.q << "): " << rational_irr_count(kind, q)
      << " rational irreducible modules\n";
  out << std::string(width - 3, ' ') << "dim  count\n";
  for (auto [dim, count] : dims) {
    std::string d = std::to_string(dim);
    out << std::string(width - d.size(), ' ') << d << "  " << count << "\n";
  }
  return out.str();
}

std::string render_table(const CharacterTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"x"};
  for (const auto& c : t.classes) head.push_back(to_string(c));
  grid.push_back(head);
  std::vector<std::string> sizes{"|x^G|"};
  for (const auto& c : t.classes) sizes.push_back(std::to_string(c.size));
  grid.push_back(sizes);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> row{to_string(t.rows[r])};
    for (const auto& cell : t.display[r]) row.push_back(cell);
    grid.push_back(row);
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  out << "Character table of " << group_name(t.kind) << "(" << t.q.q
      << "), order " << t.order << "\n";
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << row[i] << std::string(width[i] - row[i].size(), ' ');
    }
    out << "\n";
  }
  for (const auto& line : t.legend) out << line << "\n";
  return out.str();
}

}  // namespace sl2q
