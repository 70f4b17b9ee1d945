#include "snakeforge/io.hpp"

#include <functional>
#include <sstream>

#include "snakeforge/error.hpp"

namespace snakeforge {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedTree, what); }

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

Json strings_of(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<Rational> rationals_of(const Json& a) {
  std::vector<Rational> out;
  for (const auto& s : a) out.push_back(parse_rational(s.get<std::string>()));
  return out;
}

Json polys_of(const std::vector<UniPoly>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

std::vector<UniPoly> unipolys_of(const Json& a) {
  std::vector<UniPoly> out;
  for (const auto& s : a) out.push_back(parse_unipoly(s.get<std::string>()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- SignedTree

Json to_json(const SignedTree& t) {
  t.check_structure();
  std::function<Json(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) -> Json {
    const auto& n = t.node(id);
    if (n.leaf) return Json{{"leaf", n.label}};
    return Json{{"sign", std::string(1, to_char(n.sign))}, {"left", rec(n.left)}, {"right", rec(n.right)}};
  };
  return rec(t.root());
}

SignedTree signed_tree_from_json(const Json& j) {
  SignedTree t;
  std::function<SignedTree::NodeId(const Json&, int)> rec = [&](const Json& node, int depth) -> SignedTree::NodeId {
    if (depth > 10000) malformed("tree too deep");
    if (!node.is_object()) malformed("tree node must be an object");
    if (node.contains("leaf")) {
      if (!node["leaf"].is_number_integer() || node.size() != 1) malformed("leaf must be {\"leaf\": <int>}");
      return t.add_leaf(node["leaf"].get<int>());
    }
    if (!node.contains("sign") || !node.contains("left") || !node.contains("right") || node.size() != 3)
      malformed("internal node needs exactly sign, left, right");
    const Json& s = node["sign"];
    if (!s.is_string() || (s != "+" && s != "-")) malformed("sign must be \"+\" or \"-\"");
    auto left = rec(node["left"], depth + 1);
    auto right = rec(node["right"], depth + 1);
    return t.add_node(s == "+" ? Sign::Plus : Sign::Minus, left, right);
  };
  t.set_root(rec(j, 0));
  return t;
}

// ---------------------------------------------------------------- ContactTree

Json to_json(const ContactTree& t) {
  std::function<Json(ContactTree::VertexId)> rec = [&](ContactTree::VertexId id) -> Json {
    const auto& v = t.vertex(id);
    if (t.is_leaf(id)) {
      Json leaf{{"leaf", v.leaf}};
      if (v.poly) leaf["poly"] = to_string(*v.poly);
      return leaf;
    }
    Json children = Json::array();
    for (auto c : v.children) children.push_back(rec(c));
    return Json{{"valuation", v.valuation}, {"children", children}};
  };
  return rec(t.root());
}

ContactTree contact_tree_from_json(const Json& j) {
  ContactTree t;
  if (!j.is_object() || !j.contains("children") || !j["children"].is_array())
    malformed("contact tree root must be {\"valuation\": v, \"children\": [...]}");
  std::function<void(const Json&, ContactTree::VertexId, int)> rec = [&](const Json& node,
                                                                        ContactTree::VertexId parent, int depth) {
    if (depth > 10000) malformed("tree too deep");
    if (!node.is_object()) malformed("vertex must be an object");
    if (node.contains("leaf")) {
      std::optional<UniPoly> poly;
      if (node.contains("poly")) poly = parse_unipoly(node["poly"].get<std::string>());
      t.add_leaf(parent, std::move(poly));
      return;
    }
    if (!node.contains("children") || !node["children"].is_array() || node["children"].empty())
      malformed("internal vertex needs a nonempty children array");
    std::size_t val = 0;
    if (node.contains("valuation")) {
      if (!node["valuation"].is_number_unsigned()) malformed("valuation must be a natural number");
      val = node["valuation"].get<std::size_t>();
    }
    auto id = t.add_internal(parent, val);
    for (const auto& c : node["children"]) rec(c, id, depth + 1);
  };
  guarded([&] {
    for (const auto& c : j["children"]) rec(c, t.root(), 1);
    return 0;
  });
  t.number_leaves();
  return t;
}

// ---------------------------------------------------------------- realization

Json to_json(const RealizationResult& r) {
  return Json{
      {"sigma", to_string(r.sigma)},
      {"tree", to_json(r.tree)},
      {"roots", polys_of(r.roots)},
      {"P", to_string(r.p)},
      {"Q", to_string(r.q)},
      {"critical_polys", polys_of(r.critical_polys)},
      {"witness_x", to_string(r.witness_x)},
      {"witness_halvings", r.witness_halvings},
      {"critical_values", strings_of(r.critical_values)},
      {"verified_snake", to_string(r.verified_snake)},
  };
}

RealizationResult realization_from_json(const Json& j) {
  return guarded([&] {
    RealizationResult r;
    r.sigma = parse_permutation(j.at("sigma").get<std::string>());
    r.tree = signed_tree_from_json(j.at("tree"));
    r.roots = unipolys_of(j.at("roots"));
    r.p = parse_bipoly(j.at("P").get<std::string>());
    r.q = parse_bipoly(j.at("Q").get<std::string>());
    r.critical_polys = unipolys_of(j.at("critical_polys"));
    r.witness_x = parse_rational(j.at("witness_x").get<std::string>());
    r.witness_halvings = j.at("witness_halvings").get<unsigned>();
    r.critical_values = rationals_of(j.at("critical_values"));
    r.verified_snake = parse_permutation(j.at("verified_snake").get<std::string>());
    return r;
  });
}

// ---------------------------------------------------------------- certificate

Json to_json(const IsolatedRoot& r) {
  return Json{{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"multiplicity", r.multiplicity}, {"exact", r.exact}};
}

Json to_json(const MorseCertificate& c) {
  Json pts = Json::array();
  for (const auto& r : c.critical_points) pts.push_back(to_json(r));
  return Json{{"degree", c.degree},
              {"leading_coefficient", to_string(c.leading_coefficient)},
              {"critical_points", pts},
              {"snake", to_string(c.critical_value_order)}};
}

MorseCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    MorseCertificate c;
    c.degree = j.at("degree").get<std::size_t>();
    c.leading_coefficient = parse_rational(j.at("leading_coefficient").get<std::string>());
    for (const auto& r : j.at("critical_points"))
      c.critical_points.push_back({parse_rational(r.at("lo").get<std::string>()),
                                   parse_rational(r.at("hi").get<std::string>()),
                                   r.at("multiplicity").get<std::size_t>(), r.at("exact").get<bool>()});
    c.critical_value_order = parse_permutation(j.at("snake").get<std::string>());
    return c;
  });
}

// ---------------------------------------------------------------- reports

Json to_json(const AreaReportRow& row) {
  const auto& p = row.profile;
  Json cmap = Json::array();
  for (const auto& t : p.terms)
    cmap.push_back(Json{{"vertex", t.vertex}, {"vertex_valuation", t.vertex_valuation}, {"leaves", t.leaf_count}});
  return Json{{"i", p.index},
              {"e", p.gap_valuation},
              {"c", cmap},
              {"formula_valuation", p.valuation},
              {"oracle_valuation", row.oracle_valuation},
              {"side", p.side == Side::Above ? "above" : "below"}};
}

Json to_json(const CensusRow& row) {
  Json j{{"n", row.n},
         {"permutations", row.permutations},
         {"snakes", row.snakes},
         {"separable_by_patterns", row.separable_by_patterns},
         {"separable_by_tree", row.separable_by_tree},
         {"descending_separable_snakes", row.descending_separable_snakes},
         {"separability_disagreements", row.separability_disagreements}};
  if (row.verified) {
    j["realizations_verified"] = row.realizations_verified;
    j["realization_failures"] = row.realization_failures;
  }
  return j;
}

CensusRow census_row_from_json(const Json& j) {
  return guarded([&] {
    CensusRow row;
    row.n = j.at("n").get<std::size_t>();
    row.permutations = j.at("permutations").get<std::uint64_t>();
    row.snakes = j.at("snakes").get<std::uint64_t>();
    row.separable_by_patterns = j.at("separable_by_patterns").get<std::uint64_t>();
    row.separable_by_tree = j.at("separable_by_tree").get<std::uint64_t>();
    row.descending_separable_snakes = j.at("descending_separable_snakes").get<std::uint64_t>();
    row.separability_disagreements = j.at("separability_disagreements").get<std::uint64_t>();
    if (j.contains("realizations_verified")) {
      row.verified = true;
      row.realizations_verified = j.at("realizations_verified").get<std::uint64_t>();
      row.realization_failures = j.at("realization_failures").get<std::uint64_t>();
    }
    return row;
  });
}

// ---------------------------------------------------------------- text and DOT

std::string to_text(const SignedTree& t) {
  t.check_structure();
  std::function<std::string(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) {
    const auto& n = t.node(id);
    if (n.leaf) return std::to_string(n.label);
    return "(" + rec(n.left) + " " + to_char(n.sign) + " " + rec(n.right) + ")";
  };
  return rec(t.root());
}

std::string to_dot(const SignedTree& t) {
  t.check_structure();
  std::ostringstream out;
  out << "digraph separating_tree {\n  ordering=out;\n  node [fontname=\"Helvetica\"];\n";
  std::function<void(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) {
    const auto& n = t.node(id);
    if (n.leaf) {
      out << "  n" << id << " [shape=box, label=\"" << n.label << "\"];\n";
      return;
    }
    out << "  n" << id << " [shape=circle, label=\"" << (n.sign == Sign::Plus ? "⊕" : "⊖") << "\"];\n";
    rec(n.left);
    rec(n.right);
    out << "  n" << id << " -> n" << n.left << ";\n";
    out << "  n" << id << " -> n" << n.right << ";\n";
  };
  rec(t.root());
  out << "}\n";
  return out.str();
}

std::string to_dot(const ContactTree& t) {
  std::ostringstream out;
  out << "digraph contact_tree {\n  rankdir=LR;\n  ordering=out;\n  node [fontname=\"Helvetica\"];\n";
  std::function<void(ContactTree::VertexId)> rec = [&](ContactTree::VertexId id) {
    const auto& v = t.vertex(id);
    if (t.is_leaf(id)) {
      out << "  v" << id << " [shape=box, label=\"a" << v.leaf;
      if (v.poly) out << " = " << to_string(*v.poly);
      out << "\"];\n";
      return;
    }
    if (id == t.root())
      out << "  v" << id << " [shape=point, label=\"\"];\n";
    else
      out << "  v" << id << " [shape=circle, label=\"" << v.valuation << "\"];\n";
    // Reverse child order so the first (lowest) leaf is drawn at the bottom.
    for (auto it = v.children.rbegin(); it != v.children.rend(); ++it) {
      rec(*it);
      out << "  v" << id << " -> v" << *it << ";\n";
    }
  };
  rec(t.root());
  out << "}\n";
  return out.str();
}

}  // namespace snakeforge
