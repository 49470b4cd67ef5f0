#include "pe/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace pe {
namespace {

using nlohmann::json;

json rows(int width, const std::vector<int>& flat) {
  json out = json::array();
  for (std::size_t i = 0; i < flat.size(); i += width) {
    json row = json::array();
    for (int k = 0; k < width; ++k) row.push_back(flat[i + k]);
    out.push_back(row);
  }
  return out;
}

json perm_rows(const std::vector<Perm>& perms) {
  json out = json::array();
  for (const Perm& p : perms) out.push_back(p);
  return out;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

// Flattens [[...], ...]; every row must be `width` integers long.
std::vector<int> table_field(const json& j, const char* key, int width,
                             const std::string& where) {
  const json& v = field(j, key, where);
  const std::string at = where + "." + key;
  if (!v.is_array()) throw ParseError(at + ": expected an array of rows");
  std::vector<int> flat;
  flat.reserve(v.size() * width);
  for (const json& row : v) {
    if (!row.is_array()) throw ParseError(at + ": expected rows of integers");
    if ((int)row.size() != width)
      throw RangeError(at + ": row of length " + std::to_string(row.size()) +
                       ", expected " + std::to_string(width));
    for (const json& cell : row) {
      if (!cell.is_number_integer())
        throw ParseError(at + ": expected integer entries");
      flat.push_back(cell.get<int>());
    }
  }
  return flat;
}

std::vector<Perm> perm_list(const std::vector<int>& flat, int width) {
  std::vector<Perm> out;
  for (std::size_t i = 0; i < flat.size(); i += width)
    out.emplace_back(flat.begin() + i, flat.begin() + i + width);
  return out;
}

}  // namespace

json group_to_json(const GroupTable& g) {
  return json{{"order", g.order}, {"table", rows(g.order, g.product)}};
}

json left_action_to_json(const LeftActionTable& a) {
  return json{{"actor", group_to_json(a.actor)},
              {"targetSize", a.target_size},
              {"perms", perm_rows(a.act)}};
}

json right_action_to_json(const RightActionTable& a) {
  return json{{"actor", group_to_json(a.actor)},
              {"targetSize", a.target_size},
              {"perms", perm_rows(a.act)}};
}

json solution_to_json(const SolutionTable& s) {
  return json{{"n", s.n}, {"mult", rows(s.n, s.mult)},
              {"theta", rows(s.n, s.theta)}};
}

json matched_pair_to_json(const MatchedPair& mp) {
  return json{{"A", group_to_json(mp.A)},
              {"G", group_to_json(mp.G)},
              {"sigma", left_action_to_json(mp.sigma)},
              {"delta", right_action_to_json(mp.delta)}};
}

json brace_to_json(const SkewBraceTable& b) {
  return json{{"order", b.order()},
              {"add", rows(b.order(), b.add.product)},
              {"circ", rows(b.order(), b.circ.product)}};
}

json extension_to_json(const ExtensionSpec& spec) {
  return json{{"mp", matched_pair_to_json(spec.mp)},
              {"xSize", spec.x_size},
              {"phi", perm_rows(spec.phi)}};
}

GroupTable group_from_json(const json& j, const std::string& where) {
  int order = int_field(j, "order", where);
  if (order <= 0) throw RangeError(where + ".order: must be positive");
  auto flat = table_field(j, "table", order, where);
  auto checked = validate_group(order, flat);
  if (!checked.ok())
    throw AxiomError(where + ".table: " + checked.violation().message);
  return *checked;
}

SolutionTable solution_from_json(const json& j, const std::string& where) {
  int n = int_field(j, "n", where);
  if (n <= 0) throw RangeError(where + ".n: must be positive");
  return make_solution(n, table_field(j, "mult", n, where),
                       table_field(j, "theta", n, where));
}

MatchedPair matched_pair_from_json(const json& j, const std::string& where) {
  GroupTable A = group_from_json(field(j, "A", where), where + ".A");
  GroupTable G = group_from_json(field(j, "G", where), where + ".G");

  auto action_perms = [&](const char* key, const GroupTable& actor,
                          int target) {
    const json& aj = field(j, key, where);
    const std::string at = where + "." + key;
    GroupTable declared = group_from_json(field(aj, "actor", at), at + ".actor");
    if (declared.product != actor.product)
      throw AxiomError(at + ".actor: differs from the pair's group");
    if (int_field(aj, "targetSize", at) != target)
      throw RangeError(at + ".targetSize: expected " + std::to_string(target));
    return perm_list(table_field(aj, "perms", target, at), target);
  };

  auto sigma = action_perms("sigma", A, G.order);
  auto delta = action_perms("delta", G, A.order);
  if ((int)sigma.size() != A.order)
    throw RangeError(where + ".sigma.perms: expected " +
                     std::to_string(A.order) + " rows");
  if ((int)delta.size() != G.order)
    throw RangeError(where + ".delta.perms: expected " +
                     std::to_string(G.order) + " rows");

  auto checked = validate_matched_pair(A, G, sigma, delta);
  if (!checked.ok())
    throw AxiomError(where + ": " + checked.violation().message);
  return *checked;
}

SkewBraceTable brace_from_json(const json& j, const std::string& where) {
  int order = int_field(j, "order", where);
  if (order <= 0) throw RangeError(where + ".order: must be positive");
  auto checked = validate_skew_brace(order, table_field(j, "add", order, where),
                                     table_field(j, "circ", order, where));
  if (!checked.ok())
    throw AxiomError(where + ": " + checked.violation().message);
  return *checked;
}

ExtensionSpec extension_from_json(const json& j, const std::string& where) {
  ExtensionSpec spec;
  spec.mp = matched_pair_from_json(field(j, "mp", where), where + ".mp");
  spec.x_size = int_field(j, "xSize", where);
  if (spec.x_size <= 0) throw RangeError(where + ".xSize: must be positive");
  spec.phi = perm_list(table_field(j, "phi", spec.x_size, where), spec.x_size);
  if ((int)spec.phi.size() != spec.mp.A.order)
    throw RangeError(where + ".phi: expected " +
                     std::to_string(spec.mp.A.order) + " rows");
  for (const Perm& p : spec.phi)
    if (!is_perm(p))
      throw AxiomError(where + ".phi: rows must be permutations");
  return spec;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(path + ": invalid JSON");
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw RangeError(tmp + ": cannot open for writing");
    out << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw RangeError(path + ": rename failed");
}

}  // namespace pe
